#include "orlab/young.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "orlab/scalar_solve.hpp"

namespace orlab {

namespace {

ExtNonneg ext(double v) { return ExtNonneg::from(v); }

YoungFunction make_power(const std::string& name, double p) {
  YoungFunction f;
  f.name = name;
  f.eval = [p](double x) { return ExtNonneg::from(std::pow(x, p)); };
  f.closed_inverse = [p](double y) { return std::pow(y, 1.0 / p); };
  f.delta2 = TriState::yes;
  f.submultiplicative = TriState::yes;
  f.right_deriv_positive = (p == 1.0) ? TriState::yes : TriState::no;
  f.normalized_at_one = TriState::yes;
  return f;
}

YoungFunction make_phi_s() {
  YoungFunction f;
  f.name = "phi_s";
  f.eval = [](double x) {
    return x <= 1.0 ? ext(x) : ExtNonneg::infinity();
  };
  f.closed_inverse = [](double y) { return std::min(y, 1.0); };
  f.delta2 = TriState::yes;
  f.submultiplicative = TriState::yes;
  f.right_deriv_positive = TriState::yes;
  f.normalized_at_one = TriState::yes;
  return f;
}

YoungFunction make_phi_b() {
  YoungFunction f;
  f.name = "phi_b";
  f.eval = [](double x) { return ext(x <= 1.0 ? 0.0 : x - 1.0); };
  f.closed_inverse = [](double y) { return y + 1.0; };
  f.delta2 = TriState::yes;
  f.submultiplicative = TriState::no;  // phi_b(4) = 3 > phi_b(2)^2 = 1
  f.right_deriv_positive = TriState::no;
  f.normalized_at_one = TriState::no;
  return f;
}

YoungFunction make_pinf() {
  YoungFunction f;
  f.name = "pinf";
  f.eval = [](double x) {
    return x <= 1.0 ? ext(0.0) : ExtNonneg::infinity();
  };
  f.closed_inverse = [](double) { return 1.0; };
  f.delta2 = TriState::yes;
  f.submultiplicative = TriState::no;  // pinf(1.2) = inf > pinf(4)*pinf(0.3) = 0
  f.right_deriv_positive = TriState::no;
  f.normalized_at_one = TriState::no;
  return f;
}

YoungFunction make_xlog() {
  YoungFunction f;
  f.name = "xlog";
  f.eval = [](double x) { return ExtNonneg::from(x * std::log1p(x)); };
  // no closed inverse
  f.delta2 = TriState::yes;  // Phi(2x) <= 4 Phi(x): ln(1+2x) <= 2 ln(1+x)
  f.submultiplicative = TriState::no;  // fails at s = t = 1
  f.right_deriv_positive = TriState::no;
  f.normalized_at_one = TriState::no;
  return f;
}

YoungFunction make_cosh() {
  YoungFunction f;
  f.name = "cosh";
  f.eval = [](double x) { return ExtNonneg::from(std::cosh(x) - 1.0); };
  f.closed_inverse = [](double y) { return std::acosh(1.0 + y); };
  f.delta2 = TriState::no;
  f.submultiplicative = TriState::no;
  f.right_deriv_positive = TriState::no;
  f.normalized_at_one = TriState::no;
  return f;
}

YoungFunction make_exp() {
  YoungFunction f;
  f.name = "exp";
  f.eval = [](double x) { return ExtNonneg::from(std::expm1(x)); };
  f.closed_inverse = [](double y) { return std::log1p(y); };
  f.delta2 = TriState::no;
  f.submultiplicative = TriState::no;  // fails at s = t = 3
  f.right_deriv_positive = TriState::yes;
  f.normalized_at_one = TriState::no;
  return f;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&cat](YoungFunction f, std::optional<std::string> conj, std::string prov) {
    cat.push_back(CatalogEntry{std::move(f), std::move(conj), std::move(prov)});
  };
  add(make_power("p1", 1.0), "pinf", "power family, p = 1");
  add(make_power("p4over3", 4.0 / 3.0), "p4", "power family, p = 4/3");
  add(make_power("p3over2", 1.5), "p3", "power family, p = 3/2");
  add(make_power("p2", 2.0), "p2", "power family, p = 2 (exponent-conjugate to itself)");
  add(make_power("p3", 3.0), "p3over2", "power family, p = 3");
  add(make_power("p4", 4.0), "p4over3", "power family, p = 4");
  add(make_pinf(), "p1", "indicator-type conjugate of x (L-infinity)");
  add(make_xlog(), std::nullopt, "Zygmund-type x ln(1+x); conjugate only equivalent to cosh-1");
  add(make_cosh(), std::nullopt, "cosh(x)-1; conjugate only equivalent to x ln(1+x)");
  add(make_exp(), std::nullopt, "exponential e^x - 1, outside Delta2");
  add(make_phi_s(), "phi_b", "smallest Orlicz space, L1 cap Linf");
  add(make_phi_b(), "phi_s", "biggest Orlicz space, L1 plus Linf");
  return cat;
}

// Objective x*y - Phi(x); -inf where Phi is infinite.
double conj_objective(const YoungFunction& phi, double y, double x) {
  const ExtNonneg v = phi.eval(x);
  if (v.is_infinite()) return -std::numeric_limits<double>::infinity();
  return x * y - v.value();
}

}  // namespace

const std::vector<CatalogEntry>& young_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : young_catalog()) {
    if (e.young.name == name) return &e;
  }
  return nullptr;
}

const YoungFunction& catalog_young(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw std::invalid_argument("unknown Young function: " + name);
  return e->young;
}

std::vector<std::pair<YoungFunction, YoungFunction>> catalog_complementary_pairs() {
  std::vector<std::pair<YoungFunction, YoungFunction>> pairs;
  std::vector<std::string> seen;
  for (const auto& e : young_catalog()) {
    if (!e.conjugate_name) continue;
    const std::string& other = *e.conjugate_name;
    bool dup = false;
    for (const auto& s : seen) {
      if (s == e.young.name || s == other) dup = true;
    }
    if (dup) continue;
    pairs.emplace_back(e.young, catalog_young(other));
    seen.push_back(e.young.name);
    seen.push_back(other);
  }
  return pairs;
}

double numeric_pseudo_inverse(const YoungFunction& phi, double y) {
  if (y < 0.0) throw std::invalid_argument("pseudo_inverse: negative argument");
  auto pred = [&phi, y](double x) { return phi.eval(x) > y; };
  return bisect_threshold(pred);
}

double pseudo_inverse(const YoungFunction& phi, double y) {
  if (y < 0.0) throw std::invalid_argument("pseudo_inverse: negative argument");
  if (phi.closed_inverse) return phi.closed_inverse(y);
  return numeric_pseudo_inverse(phi, y);
}

ExtNonneg conjugate_value(const YoungFunction& phi, double y, const ConjugateOptions& opts) {
  if (y < 0.0) throw std::invalid_argument("conjugate_value: negative argument");
  if (y == 0.0) return ext(0.0);

  auto obj = [&phi, y](double x) { return conj_objective(phi, y, x); };

  // Expand [0, x1] until the objective stops strictly growing or the cap is
  // passed. A flat plateau (y equal to the asymptotic slope) is a finite sup,
  // not growth.
  double x1 = 1.0;
  bool growing = true;
  while (growing && x1 < opts.cap) {
    const double here = obj(x1);
    const double next = obj(2.0 * x1);
    if (std::isinf(next) && next < 0) break;  // finiteness boundary inside (x1, 2x1]
    if (next <= here) {
      growing = false;
    }
    x1 *= 2.0;
  }
  if (growing && x1 >= opts.cap && obj(2.0 * x1) > obj(x1)) {
    return ExtNonneg::infinity();
  }

  const double best = golden_max(obj, 0.0, 2.0 * x1, opts.golden_iters);
  return ext(std::max(0.0, best));
}

YoungFunction conjugate_function(const YoungFunction& phi) {
  YoungFunction f;
  f.name = "conj(" + phi.name + ")";
  // capture by value so the conjugate owns its base function
  YoungFunction base = phi;
  f.eval = [base](double y) { return conjugate_value(base, y); };
  return f;
}

// ---------------------------------------------------------------------------
// Construction from a density
// ---------------------------------------------------------------------------

namespace {

// Composite midpoint over [a, b], panels doubled until two successive
// refinements agree to rel_tol.
double adaptive_midpoint(const std::function<double(double)>& g, double a, double b,
                         double rel_tol = 1e-10) {
  if (b <= a) return 0.0;
  int n = 16;
  auto sum_n = [&](int panels) {
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int i = 0; i < panels; ++i) s += g(a + (i + 0.5) * h);
    return s * h;
  };
  double prev = sum_n(n);
  for (n = 32; n <= (1 << 14); n *= 2) {
    const double cur = sum_n(n);
    if (std::fabs(cur - prev) <= rel_tol * (std::fabs(cur) + 1e-30)) return cur;
    prev = cur;
  }
  return prev;
}

// Antiderivative with cached node values on a geometric grid, so repeated
// evaluations only integrate the final partial segment.
class CachedAntiderivative {
 public:
  explicit CachedAntiderivative(std::function<double(double)> g) : g_(std::move(g)) {
    nodes_.push_back(0.0);
    cum_.push_back(0.0);
    double x = 1e-9;
    while (x <= 1e9) {
      nodes_.push_back(x);
      x *= 2.0;
    }
    cum_.resize(nodes_.size());
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      cum_[i] = cum_[i - 1] + adaptive_midpoint(g_, nodes_[i - 1], nodes_[i]);
    }
  }

  double operator()(double x) const {
    if (x <= 0.0) return 0.0;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    return cum_[i] + adaptive_midpoint(g_, nodes_[i], x);
  }

 private:
  std::function<double(double)> g_;
  std::vector<double> nodes_;
  std::vector<double> cum_;
};

}  // namespace

std::pair<YoungFunction, YoungFunction> young_from_density(const DensityDescriptor& d) {
  // Monotonicity screen on a log grid; collect offending abscissae.
  const auto grid = log_grid(1e-8, 1e8, 256);
  std::vector<double> bad;
  double prev_x = 0.0;
  double prev_v = d.density(0.0);
  if (std::fabs(prev_v) > 1e-12) bad.push_back(0.0);
  for (double x : grid) {
    const double v = d.density(x);
    if (v <= prev_v) bad.push_back(x);
    prev_v = v;
    prev_x = x;
  }
  (void)prev_x;
  if (d.density(1e8) <= 2.0 * d.density(1e2)) bad.push_back(1e8);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "young_from_density(" << d.name << "): density not admissible at x =";
    for (std::size_t i = 0; i < bad.size() && i < 8; ++i) os << " " << bad[i];
    throw std::invalid_argument(os.str());
  }

  auto phi_anti = std::make_shared<CachedAntiderivative>(d.density);
  YoungFunction phi;
  phi.name = "int(" + d.name + ")";
  phi.eval = [phi_anti](double x) { return ExtNonneg::from((*phi_anti)(x)); };
  phi.right_deriv_positive = d.density(1e-9) > 1e-12 ? TriState::yes : TriState::no;

  // Psi integrates the inverse density; the inverse itself is a monotone
  // bisection against the density.
  auto density = d.density;
  auto inv_density = [density](double y) {
    auto pred = [&density, y](double t) { return density(t) > y; };
    return bisect_threshold(pred);
  };
  auto psi_anti = std::make_shared<CachedAntiderivative>(inv_density);
  YoungFunction psi;
  psi.name = "int(inv " + d.name + ")";
  psi.eval = [psi_anti](double y) { return ExtNonneg::from((*psi_anti)(y)); };

  return {phi, psi};
}

// ---------------------------------------------------------------------------
// Ordering
// ---------------------------------------------------------------------------

namespace {

bool le_with_slack(const ExtNonneg& a, const ExtNonneg& b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return a.value() <= b.value() * (1.0 + 1e-12) + 1e-300;
}

}  // namespace

bool check_stronger_witness(const YoungFunction& phi1, const YoungFunction& phi2,
                            double c, double x0, const RelateOptions& opts) {
  for (double x : log_grid(opts.x_min, opts.x_max, opts.grid_points)) {
    if (x < x0) continue;
    if (!le_with_slack(phi1.eval(x), phi2.eval(c * x))) return false;
  }
  return true;
}

StrongerReport relate_stronger(const YoungFunction& phi1, const YoungFunction& phi2,
                               const RelateOptions& opts) {
  // c >= 1 suffices: a witness with c < 1 implies the same witness at c = 1.
  std::vector<double> thresholds{0.0};
  for (int j = -6; j <= 6; ++j) thresholds.push_back(std::pow(10.0, j));
  for (int j = 0; j <= 30; ++j) {
    const double c = std::pow(2.0, j);
    for (double x0 : thresholds) {
      if (check_stronger_witness(phi1, phi2, c, x0, opts)) {
        return StrongerReport{true, c, x0};
      }
    }
  }
  return StrongerReport{};
}

ComparabilityReport relate_comparable(const YoungFunction& phi1, const YoungFunction& phi2,
                                      const RelateOptions& opts) {
  bool le12 = true, le21 = true;
  double bad12 = 0.0, bad21 = 0.0;
  auto grid = log_grid(opts.x_min, opts.x_max, opts.grid_points);
  grid.insert(grid.begin(), 0.0);
  for (double x : grid) {
    const ExtNonneg a = phi1.eval(x);
    const ExtNonneg b = phi2.eval(x);
    if (le12 && !le_with_slack(a, b)) {
      le12 = false;
      bad12 = x;
    }
    if (le21 && !le_with_slack(b, a)) {
      le21 = false;
      bad21 = x;
    }
    if (!le12 && !le21) break;
  }
  if (le12) return ComparabilityReport{Comparability::first_le_second, 0.0};
  if (le21) return ComparabilityReport{Comparability::second_le_first, 0.0};
  return ComparabilityReport{Comparability::incomparable, std::min(bad12, bad21)};
}

Delta2Report delta2_estimate(const YoungFunction& phi, double x0, double x_max,
                             double threshold, int grid_points) {
  if (!(x0 >= 0.0) || !(x0 < x_max)) {
    throw std::invalid_argument("delta2_estimate: need 0 <= x0 < x_max");
  }
  const double lo = std::max(x0, 1e-9);
  Delta2Report rep;
  rep.sup_ratio = ext(0.0);
  rep.threshold = threshold;
  for (double x : log_grid(lo, x_max, grid_points)) {
    const ExtNonneg a = phi.eval(2.0 * x);
    const ExtNonneg b = phi.eval(x);
    ExtNonneg ratio;
    if (a.is_infinite() && b.is_infinite()) {
      ratio = ext(1.0);  // inf <= K * inf holds for any K
    } else if (b.is_infinite()) {
      ratio = ext(0.0);
    } else if (b.value() == 0.0) {
      ratio = a > 0.0 ? ExtNonneg::infinity() : ext(1.0);
    } else {
      ratio = a / b;
    }
    if (ratio > rep.sup_ratio) {
      rep.sup_ratio = ratio;
      rep.arg_sup = x;
    }
  }
  rep.bounded = rep.sup_ratio.is_finite() && rep.sup_ratio.value() <= threshold;
  return rep;
}

// ---------------------------------------------------------------------------
// Interpolation
// ---------------------------------------------------------------------------

bool rho_admissible(const RhoDescriptor& rho, int grid_points) {
  const auto grid = log_grid(1e-6, 1e6, grid_points);
  for (double s : grid) {
    const double v = rho.rho(s);
    if (!(v > 0.0) || !std::isfinite(v)) return false;
  }
  // rho(s) <= max(s/t, 1) rho(t) on grid pairs, plus midpoint concavity.
  for (std::size_t i = 0; i < grid.size(); i += 7) {
    for (std::size_t j = 0; j < grid.size(); j += 7) {
      const double s = grid[i], t = grid[j];
      if (rho.rho(s) > std::max(s / t, 1.0) * rho.rho(t) * (1.0 + 1e-9)) return false;
    }
  }
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
    const double a = grid[i], b = grid[i + 2];
    if (rho.rho(0.5 * (a + b)) < 0.5 * (rho.rho(a) + rho.rho(b)) - 1e-9) return false;
  }
  return true;
}

YoungFunction interpolated_young_rho(const YoungFunction& phi0, const YoungFunction& phi1,
                                     const RhoDescriptor& rho) {
  if (!rho_admissible(rho)) {
    throw std::invalid_argument("interpolated_young: rho fails admissibility checks");
  }
  YoungFunction f0 = phi0;
  YoungFunction f1 = phi1;
  auto r = rho.rho;
  auto inverse = [f0, f1, r](double u) {
    const double a = pseudo_inverse(f0, u);
    const double b = pseudo_inverse(f1, u);
    if (a == 0.0) return 0.0;
    return a * r(b / a);
  };
  YoungFunction out;
  out.name = "interp(" + phi0.name + "," + phi1.name + ";" + rho.name + ")";
  out.closed_inverse = inverse;
  out.eval = [inverse](double x) -> ExtNonneg {
    if (x <= 0.0) return ExtNonneg::from(0.0);
    // Forward map: inf{u : inverse(u) >= x}; empty set -> infinity.
    double hi = 1.0;
    while (inverse(hi) < x) {
      hi *= 2.0;
      if (hi > 1e150) return ExtNonneg::infinity();
    }
    if (inverse(0.0) >= x) return ExtNonneg::from(0.0);
    double lo = 0.0;
    for (int i = 0; i < 240 && (hi - lo) > 1e-13 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (inverse(mid) >= x) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return ExtNonneg::from(0.5 * (lo + hi));
  };
  return out;
}

YoungFunction interpolated_young(const YoungFunction& phi0, const YoungFunction& phi1,
                                 double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("interpolated_young: theta must lie in (0,1)");
  }
  RhoDescriptor rho;
  {
    std::ostringstream os;
    os << "t^" << theta;
    rho.name = os.str();
  }
  rho.rho = [theta](double t) { return std::pow(t, theta); };
  return interpolated_young_rho(phi0, phi1, rho);
}

// ---------------------------------------------------------------------------
// Complementary-pair audits
// ---------------------------------------------------------------------------

std::vector<VerificationRecord> pair_checks(const YoungFunction& phi, const YoungFunction& psi,
                                            const std::vector<double>& u_grid,
                                            const std::vector<double>& xy_grid) {
  std::vector<VerificationRecord> out;
  const std::string pair_tag = "(" + phi.name + "," + psi.name + ")";
  // 1e-12 absolute, widened by a few ulps of the compared magnitude: one ulp
  // of 1e6 already exceeds 1e-12, so the bare absolute form is not
  // representable at the top of the grid.
  auto tol = [](double scale) {
    return std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() * scale);
  };

  for (double u : u_grid) {
    const double prod = pseudo_inverse(phi, u) * pseudo_inverse(psi, u);

    VerificationRecord lower;
    lower.id = "inverse_product_lower";
    lower.module = "young";
    {
      std::ostringstream os;
      os << "pair=" << pair_tag << ";u=" << u;
      lower.inputs = os.str();
    }
    lower.lhs = ext(u);
    lower.bound = ext(prod);
    lower.slack = slack_ratio(lower.lhs, lower.bound);
    lower.status = (u <= prod + tol(u)) ? Status::verified : Status::violated;
    out.push_back(lower);

    VerificationRecord upper;
    upper.id = "inverse_product_upper";
    upper.module = "young";
    upper.inputs = lower.inputs;
    upper.lhs = ext(prod);
    upper.bound = ext(2.0 * u);
    upper.slack = slack_ratio(upper.lhs, upper.bound);
    upper.status = (prod <= 2.0 * u + tol(2.0 * u)) ? Status::verified : Status::violated;
    if (std::fabs(prod - 2.0 * u) <= tol(2.0 * u)) {
      upper.hypotheses["boundary_equality"] = TriState::yes;
    }
    out.push_back(upper);
  }

  for (double x : xy_grid) {
    for (double y : xy_grid) {
      VerificationRecord rec;
      rec.id = "young_inequality";
      rec.module = "young";
      {
        std::ostringstream os;
        os << "pair=" << pair_tag << ";x=" << x << ";y=" << y;
        rec.inputs = os.str();
      }
      rec.lhs = ext(x * y);
      rec.bound = phi.eval(x) + psi.eval(y);
      rec.slack = slack_ratio(rec.lhs, rec.bound);
      const bool ok = rec.bound.is_infinite() || x * y <= rec.bound.value() + tol(x * y);
      rec.status = ok ? Status::verified : Status::violated;
      out.push_back(rec);
    }
  }
  return out;
}

}  // namespace orlab
