#pragma once

#include <optional>
#include <vector>

#include "orlab/grid_function.hpp"
#include "orlab/orlicz.hpp"
#include "orlab/verification.hpp"
#include "orlab/young.hpp"

namespace orlab {

struct AmalgamConfig {
  double cube_side = 1.0;             // must be 1 for the discrete norm
  int x_resolution = 64;              // control-function samples per unit
  std::optional<Box> truncation;      // defaults to the support of f
  NormOptions norms;
};

struct AmalgamNorms {
  ExtNonneg continuous;
  ExtNonneg discrete;
  double ratio = 0.0;                 // continuous / discrete
  std::vector<double> per_block;      // block norms behind the discrete value
};

enum class AmalgamMode { continuous, discrete, both };

/// Control function x -> |f restricted to [x, x + side)|_{Phi1}, sampled at
/// x_resolution points per unit over the truncation box enlarged by one cube
/// side on the left.
GridFunction control_function(const GridFunction& f, const YoungFunction& phi1,
                              const AmalgamConfig& cfg = {});

/// Wiener amalgam norm of Orlicz type, Luxemburg form. The continuous value
/// is the Phi2-norm of the control function; the discrete value is the
/// sequence norm of the block norms over the unit-cube partition.
AmalgamNorms amalgam_norm(const GridFunction& f, const YoungFunction& phi1,
                          const YoungFunction& phi2, AmalgamMode mode,
                          const AmalgamConfig& cfg = {});

/// Block norms |f chi_{[k,k+1)}|_{Phi1} over the integer partition covering
/// the support, in ascending block order.
std::vector<double> block_norms(const GridFunction& f, const YoungFunction& phi1,
                                const NormOptions& opts = {});

/// W(L^Phi, L^1) norm in discrete form: the plain sum of block norms.
double block_sum_norm(const GridFunction& f, const YoungFunction& phi,
                      const NormOptions& opts = {});

/// Structural audits: translation invariance (discrete and continuous),
/// the W(Phi,Phi) collapse ratio (gated on both right derivatives), the
/// inclusion constant under a stronger local component, the amalgam Hoelder
/// inequality with constant 4, and the cube-side independence ratio.
std::vector<VerificationRecord> structure_checks(const GridFunction& f,
                                                 const GridFunction& g,
                                                 const YoungFunction& phi1,
                                                 const YoungFunction& psi1,
                                                 const YoungFunction& phi2,
                                                 const YoungFunction& psi2,
                                                 const AmalgamConfig& cfg = {});

}  // namespace orlab
