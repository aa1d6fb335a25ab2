#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orlab/ext_nonneg.hpp"
#include "orlab/verification.hpp"

namespace orlab {

/// A named, evaluable Young function: convex, Phi(0) = 0, Phi -> inf, with
/// values in [0, inf]. `closed_inverse` carries the analytic pseudo-inverse
/// when one is known; the numeric bisection path is used otherwise.
struct YoungFunction {
  std::string name;
  std::function<ExtNonneg(double)> eval;
  std::function<double(double)> closed_inverse;  // empty when not known
  TriState delta2 = TriState::unknown;
  TriState submultiplicative = TriState::unknown;
  TriState right_deriv_positive = TriState::unknown;
  TriState normalized_at_one = TriState::unknown;
};

struct CatalogEntry {
  YoungFunction young;
  std::optional<std::string> conjugate_name;
  std::string provenance;
};

/// The fixed function catalog: power functions x^p for
/// p in {1, 4/3, 3/2, 2, 3, 4}, x*ln(1+x), cosh(x)-1, e^x-1, the extremal
/// pair phi_s / phi_b, and the conjugate of x (pinf).
const std::vector<CatalogEntry>& young_catalog();
const CatalogEntry* catalog_find(const std::string& name);
const YoungFunction& catalog_young(const std::string& name);  // throws on miss

/// Declared complementary pairs (phi, psi), each appearing once.
std::vector<std::pair<YoungFunction, YoungFunction>> catalog_complementary_pairs();

/// Pseudo-inverse inf{x > 0 : Phi(x) > y}. Plateaus resolve to their right
/// endpoint, per the strict inequality. Uses the closed form when present.
double pseudo_inverse(const YoungFunction& phi, double y);

/// The bisection path, ignoring any closed form (used to cross-check the
/// closed forms and by functions that lack one).
double numeric_pseudo_inverse(const YoungFunction& phi, double y);

struct ConjugateOptions {
  double cap = 1e6;     // abscissa cap: growth past it means the sup is inf
  int golden_iters = 180;
};

/// Legendre conjugate value sup{x*y - Phi(x) : x > 0}, computed by bracket
/// expansion plus golden-section search on the concave objective. Returns
/// infinity when the objective is still growing at the abscissa cap.
ExtNonneg conjugate_value(const YoungFunction& phi, double y,
                          const ConjugateOptions& opts = {});

/// The conjugate as a YoungFunction (evaluates via conjugate_value).
YoungFunction conjugate_function(const YoungFunction& phi);

/// A density phi' for the integral construction: continuous, strictly
/// increasing, phi'(0) = 0, unbounded.
struct DensityDescriptor {
  std::string name;
  std::function<double(double)> density;
};

/// (Phi, Psi) with Phi(x) = int_0^x phi' and Psi(y) = int_0^y (phi')^{-1},
/// by adaptive composite midpoint quadrature over cached antiderivative
/// nodes. Throws if the density fails its monotonicity checks, naming the
/// offending abscissae.
std::pair<YoungFunction, YoungFunction> young_from_density(const DensityDescriptor& d);

struct RelateOptions {
  double x_min = 1e-6;
  double x_max = 1e6;
  int grid_points = 2048;
};

struct StrongerReport {
  bool found = false;
  double c = 0.0;
  double x0 = 0.0;
};

/// Searches log grids of constants c >= 1 and thresholds x0 for a witness of
/// Phi1(x) <= Phi2(c x) for all grid x >= x0 (the "stronger than" ordering).
StrongerReport relate_stronger(const YoungFunction& phi1, const YoungFunction& phi2,
                               const RelateOptions& opts = {});

/// Re-checks a specific witness on a grid (used for refinement stability).
bool check_stronger_witness(const YoungFunction& phi1, const YoungFunction& phi2,
                            double c, double x0, const RelateOptions& opts = {});

enum class Comparability { first_le_second, second_le_first, incomparable };

struct ComparabilityReport {
  Comparability outcome = Comparability::incomparable;
  double counterexample = 0.0;  // abscissa witnessing failure, when incomparable
};

/// Pointwise domination on a dense grid over [0, x_max], both directions.
ComparabilityReport relate_comparable(const YoungFunction& phi1, const YoungFunction& phi2,
                                      const RelateOptions& opts = {});

struct Delta2Report {
  ExtNonneg sup_ratio;
  double arg_sup = 0.0;
  bool bounded = false;
  double threshold = 0.0;
};

/// sup over a log grid in [max(x0, eps), x_max] of Phi(2x)/Phi(x), with the
/// conventions 0/0 -> 1, inf/inf -> 1 (the doubling condition holds trivially
/// there) and finite-or-infinite over zero-or-finite -> inf.
Delta2Report delta2_estimate(const YoungFunction& phi, double x0, double x_max,
                             double threshold = 1e6, int grid_points = 512);

/// Concave rescaling function for interpolation, with its admissibility test
/// rho(s) <= max(s/t, 1) rho(t).
struct RhoDescriptor {
  std::string name;
  std::function<double(double)> rho;
};

bool rho_admissible(const RhoDescriptor& rho, int grid_points = 256);

/// Young function with pseudo-inverse Phi0^{-1}(u) * rho(Phi1^{-1}(u)/Phi0^{-1}(u));
/// the forward map is recovered by monotone bisection on the built inverse.
YoungFunction interpolated_young_rho(const YoungFunction& phi0, const YoungFunction& phi1,
                                     const RhoDescriptor& rho);

/// rho(t) = t^theta specialization: inverse (Phi0^{-1})^{1-theta} (Phi1^{-1})^theta.
YoungFunction interpolated_young(const YoungFunction& phi0, const YoungFunction& phi1,
                                 double theta);

/// Per-point audits of a complementary pair: the Young inequality
/// x y <= Phi(x) + Psi(y) on the product grid, and the inverse-product
/// sandwich u <= Phi^{-1}(u) Psi^{-1}(u) <= 2u on the u grid. Equality at the
/// 2u boundary is flagged, not failed; violations are recorded, never thrown.
std::vector<VerificationRecord> pair_checks(const YoungFunction& phi, const YoungFunction& psi,
                                            const std::vector<double>& u_grid,
                                            const std::vector<double>& xy_grid);

}  // namespace orlab
