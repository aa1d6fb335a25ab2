#pragma once

#include <complex>
#include <string>
#include <vector>

#include "orlab/grid_function.hpp"
#include "orlab/verification.hpp"
#include "orlab/young.hpp"

namespace orlab {

/// Truncated Zak transform Sum_{|k| <= K} g(t+k) e^{2 pi i k w} sampled on
/// the n x n midpoint grid of the unit square.
struct ZakField {
  int resolution = 0;   // n
  int truncation = 0;   // K
  std::vector<Complex> values;  // row-major, t fastest
  GridFunction source;          // the underlying g
  bool tail_mass_warning = false;

  const Complex& at(int it, int iw) const {
    return values[static_cast<std::size_t>(iw) * resolution + it];
  }
  double node(int i) const { return (i + 0.5) / resolution; }
};

/// Series value at an arbitrary point (t, w).
Complex zak_value(const GridFunction& g, int K, double t, double w);

/// Grid fill by direct summation. Flags (but does not reject) tail mass of
/// |g| outside [-K-1, K+1] above 1e-10.
ZakField zak(const GridFunction& g, int K, int n);

struct ZakIdentityReport {
  double quasiperiod_t = 0.0;   // max |Zg(t+1,w) - e^{-2 pi i w} Zg(t,w)|
  double period_w = 0.0;        // max |Zg(t,w+1) - Zg(t,w)|
  double shift_identity = 0.0;  // max |Z(M_m T_n g) - e^{2 pi i m t} e^{2 pi i n w} Zg|
};

/// Residuals of the quasiperiodicity relations and the time-frequency-shift
/// identity, each recomputed from the series at the shifted arguments.
ZakIdentityReport identities_residual(const ZakField& field, int m, int n_shift);

enum class ZakVerdict { onb_candidate, riesz_candidate, degenerate };

struct ModulusReport {
  double min_mod = 0.0;
  double max_mod = 0.0;
  double argmin_t = 0.0;
  double argmin_w = 0.0;
  ZakVerdict verdict = ZakVerdict::degenerate;
};

/// Grid modulus statistics with the Gabor-basis reading: modulus pinned to 1
/// means orthonormal-basis candidate; bounded away from zero means Riesz
/// candidate; a small minimum is consistent with a zero in the square.
ModulusReport modulus_analysis(const ZakField& field, double onb_tol = 1e-6,
                               double zero_threshold = 0.05);

const char* to_string(ZakVerdict v);

/// |Z f| as a 2-D GridFunction on the unit square, so Orlicz norms over Q
/// reuse the scalar machinery.
GridFunction zak_modulus_grid(const ZakField& field);

/// Audits |Zf|_{L^Phi(Q)} <= |f|_{W(L^Phi, L^1)}, the right side in discrete
/// form (plain sum of block norms).
VerificationRecord norm_bound_check(const GridFunction& f, const YoungFunction& phi,
                                    int K, int n);

}  // namespace orlab
