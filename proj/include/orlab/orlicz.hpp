#pragma once

#include <optional>
#include <vector>

#include "orlab/grid_function.hpp"
#include "orlab/verification.hpp"
#include "orlab/young.hpp"

namespace orlab {

struct NormOptions {
  double rel_tol = 1e-9;
  int max_iters = 200;
};

/// Result of a modular-inequality solve: the norm value, the target on the
/// right-hand side (1 for the plain Luxemburg norm, lambda for the
/// parametric one), the final bisection bracket width, and the modular at
/// the returned value.
struct NormResult {
  ExtNonneg value;
  double target = 1.0;
  double bracket = 0.0;
  ExtNonneg modular_at_value;
};

/// Luxemburg norm inf{k > 0 : int Phi(|f|/k) <= target} by monotone
/// bisection with geometric bracket expansion. The zero function gives 0.
NormResult luxemburg(const GridFunction& f, const YoungFunction& phi,
                     double target = 1.0, const NormOptions& opts = {});

/// Same solve restricted to samples whose midpoint lies in [lo, hi). 1-D.
NormResult luxemburg_window(const GridFunction& f, const YoungFunction& phi,
                            double lo, double hi, double target = 1.0,
                            const NormOptions& opts = {});

/// Sequence-space Luxemburg norm with modular sum Phi(|a_k|/k0).
NormResult seq_luxemburg(const std::vector<double>& a, const YoungFunction& phi,
                         double target = 1.0, const NormOptions& opts = {});

/// Amemiya functional inf_k (1 + int Phi(k |f|))/k, the evaluator standing
/// in for the Orlicz (dual-supremum) norm. Golden-section over log k after a
/// coarse scan.
ExtNonneg amemiya(const GridFunction& f, const YoungFunction& phi,
                  const NormOptions& opts = {});

struct DilationBoundReport {
  double lower = 0.0;                 // sup_mu Phi^{-1}(mu) / Phi^{-1}(lambda mu)
  std::optional<double> upper;        // 1/Phi^{-1}(lambda), needs submultiplicativity
  bool exact = false;                 // lower == upper == C_Phi(lambda)
};

/// Bounds for the dilation operator norm C_Phi(lambda) on L^Phi. The upper
/// bound requires the submultiplicative flag; `require_upper` turns a missing
/// or unknown flag into an error instead of an absent bound.
DilationBoundReport dilation_norm_bounds(const YoungFunction& phi, double lambda,
                                         bool require_upper = false,
                                         int grid_points = 512);

/// The Orlicz-space inequality suite for one function pair: Hoelder, the
/// parametric-norm sandwiches, the Orlicz/Luxemburg equivalence chains, the
/// dilation identity, the d-dimensional dilation bound (gated on
/// submultiplicativity), and the L1-embedding ratio (gated on the right
/// derivative at zero).
std::vector<VerificationRecord> inequality_suite(const GridFunction& f,
                                                 const GridFunction& g,
                                                 const YoungFunction& phi,
                                                 const YoungFunction& psi,
                                                 const std::vector<double>& lambda_grid,
                                                 const NormOptions& opts = {});

}  // namespace orlab
