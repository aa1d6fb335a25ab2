#pragma once

#include <map>
#include <string>
#include <vector>

#include "orlab/amalgam.hpp"
#include "orlab/grid_function.hpp"
#include "orlab/verification.hpp"
#include "orlab/young.hpp"

namespace orlab {

/// One dilation estimate: left side (discrete amalgam norm of f_lambda),
/// the displayed bound, slack = bound/lhs, and the hypothesis gates.
struct DilationRecord {
  double lambda = 1.0;
  ExtNonneg lhs;
  ExtNonneg bound;
  double slack = 0.0;
  std::map<std::string, TriState> hypotheses;
  Status status = Status::report_only;
  std::string inputs;
};

/// The exact-constant dilation estimate for W(L^Phi1, L^Phi2):
///   |f_lambda| <= |f| / (Phi1^{-1}(l^d) Phi2^{-1}(l^d))          0 < l <= 1
///   |f_lambda| <= l^d |f| / (Phi1^{-1}(l^d) Phi2^{-1}(l^d))      l >= 1
/// asserted without hypothesis gates; violations are recorded as such.
DilationRecord verify_lemma(const GridFunction& f, const YoungFunction& phi1,
                            const YoungFunction& phi2, double lambda,
                            const AmalgamConfig& cfg = {});

struct MainResult {
  std::vector<DilationRecord> records;
  double c_emp = 0.0;  // max over the grid of lhs/bound
};

/// The max/min dilation estimates (implicit constant): the harness fits the
/// empirical constant as the max ratio over the grid, and gates the records
/// on the doubling condition, the right-derivative conditions for both
/// functions and their conjugates, and pairwise/global comparability with
/// the extremal functions phi_s, phi_b. Gate failures downgrade records to
/// report_only with slack still recorded.
MainResult verify_main(const GridFunction& f, const YoungFunction& phi1,
                       const YoungFunction& phi2, const std::vector<double>& lambda_grid,
                       const AmalgamConfig& cfg = {});

struct SlopeReport {
  double p = 2.0, q = 2.0;
  std::vector<std::pair<double, double>> points;  // (lambda, norm)
  double slope_contract = 0.0;   // fitted on lambda <= 1
  double slope_expand = 0.0;     // fitted on lambda >= 1
  double intercept_contract = 0.0;
  double intercept_expand = 0.0;
  // Reference exponents alongside the fits.
  double lemma_contract = 0.0, lemma_expand = 0.0;
  double maxmin_contract = 0.0, maxmin_expand = 0.0;
  double sharper_contract = 0.0, sharper_expand = 0.0;
};

/// Discrete W(L^p, L^q) norms of f_lambda over a geometric grid, with
/// log-log least-squares slopes per regime and the three reference exponent
/// sets (product form, max/min form, and the sharper small-lambda form).
SlopeReport lebesgue_scan(double p, double q, const GridFunction& f,
                          const std::vector<double>& lambda_grid,
                          const AmalgamConfig& cfg = {});

}  // namespace orlab
