#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "orlab/scalar_solve.hpp"
#include "orlab/young.hpp"

using namespace orlab;

namespace {

// Independent oracle for the conjugate: dense-grid supremum of x*y - Phi(x),
// kept separate from the golden-section path it checks.
double brute_conjugate(const YoungFunction& phi, double y, double x_max = 64.0,
                       int n = 400000) {
  double best = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double x = x_max * i / n;
    const ExtNonneg v = phi.eval(x);
    if (v.is_infinite()) break;  // catalog functions are finite on an initial segment
    best = std::max(best, x * y - v.value());
  }
  return best;
}

std::vector<double> test_grid(double lo = 1e-6, double hi = 1e6, int n = 256) {
  return log_grid(lo, hi, n);
}

}  // namespace

TEST_CASE("catalog members satisfy the Young-function invariants") {
  for (const auto& entry : young_catalog()) {
    const YoungFunction& phi = entry.young;
    CAPTURE(phi.name);
    CHECK(phi.eval(0.0).value() == 0.0);

    ExtNonneg prev = ExtNonneg::from(0.0);
    for (double x : test_grid()) {
      const ExtNonneg v = phi.eval(x);
      CHECK(v >= prev);
      prev = v;
    }

    // Midpoint convexity where both endpoint values are finite.
    const auto grid = test_grid(1e-4, 1e2, 64);
    for (std::size_t i = 0; i + 2 < grid.size(); i += 2) {
      const double a = grid[i], b = grid[i + 2];
      const ExtNonneg fa = phi.eval(a), fb = phi.eval(b);
      if (!fa.is_finite() || !fb.is_finite()) continue;
      const ExtNonneg fm = phi.eval(0.5 * (a + b));
      REQUIRE(fm.is_finite());
      CHECK(fm.value() <= 0.5 * (fa.value() + fb.value()) + 1e-9 * (1.0 + fa.value() + fb.value()));
    }

    // Divergence: the largest abscissa exceeds any fixed threshold or is inf.
    const ExtNonneg tail = phi.eval(1e6);
    CHECK((tail.is_infinite() || tail.value() > 1e3));
  }
}

TEST_CASE("pseudo-inverse closed forms and the plateau rule") {
  const auto& p2 = catalog_young("p2");
  const auto& phi_s = catalog_young("phi_s");
  const auto& phi_b = catalog_young("phi_b");

  CHECK(pseudo_inverse(p2, 4.0) == doctest::Approx(2.0));
  CHECK(numeric_pseudo_inverse(p2, 4.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(numeric_pseudo_inverse(phi_b, 3.0) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(numeric_pseudo_inverse(phi_s, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(numeric_pseudo_inverse(phi_s, 3.0) == doctest::Approx(1.0).epsilon(1e-9));

  // y = 0: strictly increasing functions invert to 0; a zero plateau
  // resolves to its right endpoint.
  CHECK(numeric_pseudo_inverse(p2, 0.0) <= 1e-9);
  CHECK(numeric_pseudo_inverse(phi_b, 0.0) == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(pseudo_inverse(p2, -1.0), std::invalid_argument);
}

TEST_CASE("numeric pseudo-inverse matches every catalog closed form") {
  for (const auto& entry : young_catalog()) {
    if (!entry.young.closed_inverse) continue;
    CAPTURE(entry.young.name);
    for (double y : test_grid(1e-6, 1e6, 128)) {
      const double closed = entry.young.closed_inverse(y);
      const double numeric = numeric_pseudo_inverse(entry.young, y);
      CHECK(numeric == doctest::Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("pseudo-inverse round trips") {
  for (const auto& entry : young_catalog()) {
    const YoungFunction& phi = entry.young;
    CAPTURE(phi.name);
    for (double x : test_grid(1e-3, 1e2, 32)) {
      const ExtNonneg v = phi.eval(x);
      if (!v.is_finite()) continue;
      CHECK(pseudo_inverse(phi, v.value()) >= x * (1.0 - 1e-9));
      const double back = pseudo_inverse(phi, v.value());
      const ExtNonneg again = phi.eval(back * (1.0 - 1e-12));
      if (again.is_finite()) CHECK(again.value() <= v.value() * (1.0 + 1e-9) + 1e-12);
    }
  }
  // Equality for a strictly increasing continuous member.
  const auto& p3 = catalog_young("p3");
  for (double y : test_grid(1e-3, 1e3, 32)) {
    const double x = pseudo_inverse(p3, y);
    CHECK(p3.eval(x).value() == doctest::Approx(y).epsilon(1e-9));
  }
}

TEST_CASE("conjugate values against the brute-force oracle") {
  const auto& p2 = catalog_young("p2");
  const auto& p1 = catalog_young("p1");
  const auto& phi_s = catalog_young("phi_s");

  // Oracle first: sup_x (2x - x^2) = 1 at x = 1.
  CHECK(brute_conjugate(p2, 2.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(conjugate_value(p2, 2.0).value() == doctest::Approx(1.0).epsilon(1e-8));

  // Phi(x) = x: 0 below slope 1, unbounded above it.
  CHECK(conjugate_value(p1, 0.5).value() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(conjugate_value(p1, 2.0).is_infinite());

  // sup over (0,1] of 2x - x = 1.
  CHECK(brute_conjugate(phi_s, 2.0, 1.0, 100000) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(conjugate_value(phi_s, 2.0).value() == doctest::Approx(1.0).epsilon(1e-6));

  for (const auto& entry : young_catalog()) {
    CHECK(conjugate_value(entry.young, 0.0).value() == 0.0);
  }

  // Spot-check the golden-section path against the oracle across functions,
  // probing where the conjugate is finite (for phi_b that means y <= 1, with
  // y = 1 the flat-objective boundary case).
  struct Probe {
    std::string name;
    std::vector<double> ys;
  };
  for (const auto& probe : std::vector<Probe>{{"p3", {0.25, 1.0, 3.0}},
                                              {"xlog", {0.25, 1.0, 3.0}},
                                              {"cosh", {0.25, 1.0, 3.0}},
                                              {"exp", {0.25, 1.0, 3.0}},
                                              {"phi_b", {0.25, 0.6, 1.0}}}) {
    const YoungFunction& phi = catalog_young(probe.name);
    for (double y : probe.ys) {
      const double oracle = brute_conjugate(phi, y);
      const ExtNonneg got = conjugate_value(phi, y);
      CAPTURE(probe.name);
      CAPTURE(y);
      REQUIRE(got.is_finite());
      CHECK(got.value() == doctest::Approx(oracle).epsilon(1e-5));
    }
  }
  // Past the critical slope the conjugate of phi_b is genuinely infinite.
  CHECK(conjugate_value(catalog_young("phi_b"), 3.0).is_infinite());
}

TEST_CASE("conjugation is order-reversing for globally dominated pairs") {
  struct Case {
    std::string small, big;
  };
  // Phi1 <= Phi2 everywhere implies conj(Phi2) <= conj(Phi1) everywhere.
  for (const auto& c : std::vector<Case>{{"phi_b", "p1"}, {"phi_b", "p2"}, {"p1", "phi_s"},
                                         {"phi_b", "phi_s"}}) {
    const YoungFunction& lo = catalog_young(c.small);
    const YoungFunction& hi = catalog_young(c.big);
    CAPTURE(c.small);
    CAPTURE(c.big);
    for (double x : test_grid(1e-3, 1e2, 24)) {
      CHECK(lo.eval(x) <= hi.eval(x) + ExtNonneg::from(1e-12));
    }
    for (double y : test_grid(1e-2, 1e1, 16)) {
      const ExtNonneg chi = conjugate_value(hi, y);
      const ExtNonneg clo = conjugate_value(lo, y);
      CHECK(chi <= clo * (1.0 + 1e-6) + ExtNonneg::from(1e-9));
    }
  }
  // Windowed domination p1 <= p2 beyond x0 = 1: conclusion strictly beyond
  // y0 = Phi1(x0) = 1.
  const YoungFunction& p1 = catalog_young("p1");
  const YoungFunction& p2 = catalog_young("p2");
  for (double y : {1.5, 2.0, 10.0}) {
    CHECK(conjugate_value(p2, y) <= conjugate_value(p1, y));
  }
}

TEST_CASE("biconjugation recovers the function at finite continuity points") {
  struct Probe {
    std::string name;
    std::vector<double> xs;
  };
  const std::vector<Probe> probes{
      {"p1", {0.5, 1.0, 3.0}},    {"p2", {0.5, 1.0, 3.0}},  {"p3", {0.5, 1.0, 3.0}},
      {"p4over3", {0.5, 1.0, 3.0}}, {"xlog", {0.5, 1.0, 3.0}}, {"cosh", {0.5, 1.0, 3.0}},
      {"exp", {0.5, 1.0, 3.0}},   {"phi_b", {0.5, 2.0, 5.0}}, {"phi_s", {0.2, 0.8}},
      {"pinf", {0.2, 0.8}}};
  for (const auto& probe : probes) {
    const YoungFunction& phi = catalog_young(probe.name);
    const YoungFunction psi = conjugate_function(phi);
    for (double x : probe.xs) {
      const ExtNonneg direct = phi.eval(x);
      const ExtNonneg twice = conjugate_value(psi, x);
      CAPTURE(probe.name);
      CAPTURE(x);
      REQUIRE(direct.is_finite());
      REQUIRE(twice.is_finite());
      CHECK(std::fabs(twice.value() - direct.value()) <= 1e-6 * (1.0 + direct.value()));
    }
  }
}

TEST_CASE("construction from a density") {
  // phi(t) = t: Phi = x^2/2, Psi = y^2/2.
  auto [phi, psi] = young_from_density({"t", [](double t) { return t; }});
  CHECK(phi.eval(2.0).value() == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(phi.eval(1.0).value() == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(psi.eval(2.0).value() == doctest::Approx(2.0).epsilon(1e-6));

  // phi(t) = 2t: Phi = x^2.
  auto [phi2, psi2] = young_from_density({"2t", [](double t) { return 2.0 * t; }});
  CHECK(phi2.eval(3.0).value() == doctest::Approx(9.0).epsilon(1e-8));
  (void)psi2;

  // Derivative of x ln(1+x) integrates back to it.
  auto [phi3, psi3] = young_from_density(
      {"dxlog", [](double t) { return std::log1p(t) + t / (1.0 + t); }});
  for (double x : {0.5, 1.0, 4.0}) {
    CHECK(phi3.eval(x).value() == doctest::Approx(x * std::log1p(x)).epsilon(1e-8));
  }
  (void)psi3;

  // Non-monotone density is rejected with the offending abscissae named.
  CHECK_THROWS_WITH_AS(
      young_from_density({"sin", [](double t) { return std::sin(t); }}),
      doctest::Contains("not admissible"), std::invalid_argument);
}

TEST_CASE("ordering: stronger-than witnesses and global comparability") {
  const auto& p1 = catalog_young("p1");
  const auto& p2 = catalog_young("p2");
  const auto& phi_s = catalog_young("phi_s");
  const auto& phi_b = catalog_young("phi_b");

  const StrongerReport w = relate_stronger(p1, p2);
  REQUIRE(w.found);
  CHECK(w.c == doctest::Approx(1.0));
  CHECK(w.x0 == doctest::Approx(1.0));

  const ComparabilityReport c1 = relate_comparable(p1, p2);
  CHECK(c1.outcome == Comparability::incomparable);
  // The counterexample abscissa really does separate the two functions.
  CHECK(p1.eval(c1.counterexample).as_double() != p2.eval(c1.counterexample).as_double());

  CHECK(relate_comparable(phi_b, phi_s).outcome == Comparability::first_le_second);
  CHECK(relate_comparable(phi_b, p2).outcome == Comparability::first_le_second);
  CHECK(relate_comparable(p2, p2).outcome == Comparability::first_le_second);

  // Witness stability: doubling the evaluation grid never invalidates a
  // returned witness.
  RelateOptions fine;
  fine.grid_points = 4096;
  CHECK(check_stronger_witness(p1, p2, w.c, w.x0, fine));
  struct Rel {
    const char* a;
    const char* b;
  };
  for (const auto& rel : {Rel{"phi_b", "p1"}, Rel{"p1", "p3"}, Rel{"p2", "p3"},
                          Rel{"phi_b", "phi_s"}, Rel{"xlog", "p2"}}) {
    const StrongerReport ww = relate_stronger(catalog_young(rel.a), catalog_young(rel.b));
    CAPTURE(rel.a);
    CAPTURE(rel.b);
    REQUIRE(ww.found);
    CHECK(check_stronger_witness(catalog_young(rel.a), catalog_young(rel.b), ww.c, ww.x0,
                                 fine));
  }
}

TEST_CASE("doubling-ratio estimates") {
  const Delta2Report r2 = delta2_estimate(catalog_young("p2"), 0.0, 1e6);
  REQUIRE(r2.sup_ratio.is_finite());
  CHECK(r2.sup_ratio.value() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(r2.bounded);

  const Delta2Report rexp = delta2_estimate(catalog_young("exp"), 1.0, 50.0);
  CHECK((rexp.sup_ratio.is_infinite() || rexp.sup_ratio.value() > std::exp(50.0) / 2.0));
  CHECK_FALSE(rexp.bounded);

  const Delta2Report rb = delta2_estimate(catalog_young("phi_b"), 2.0, 100.0);
  REQUIRE(rb.sup_ratio.is_finite());
  CHECK(rb.sup_ratio.value() == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(rb.bounded);

  CHECK_THROWS_AS(delta2_estimate(catalog_young("p2"), 5.0, 1.0), std::invalid_argument);
}

TEST_CASE("interpolated Young functions") {
  const auto& p1 = catalog_young("p1");
  const auto& p2 = catalog_young("p2");
  const auto& phi_s = catalog_young("phi_s");
  const auto& phi_b = catalog_young("phi_b");

  // Closed-form exponent arithmetic: inverse u^{3/4}, forward x^{4/3}.
  const YoungFunction mid = interpolated_young(p2, p1, 0.5);
  CHECK(pseudo_inverse(mid, 16.0) == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(mid.eval(8.0).value() == doctest::Approx(16.0).epsilon(1e-6));

  // Interpolating a function with itself is the identity on the family.
  const YoungFunction same = interpolated_young(p2, p2, 0.5);
  for (double x : {0.5, 1.0, 3.0}) {
    CHECK(same.eval(x).value() == doctest::Approx(x * x).epsilon(1e-9));
  }

  const YoungFunction sb = interpolated_young(phi_b, phi_s, 0.5);
  CHECK(pseudo_inverse(sb, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  CHECK_THROWS_AS(interpolated_young(p1, p2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(interpolated_young(p1, p2, 1.0), std::invalid_argument);

  // Results pass the Young-function invariants for every catalog input pair.
  for (const auto& [a, b] : catalog_complementary_pairs()) {
    for (double theta : {0.25, 0.5, 0.75}) {
      const YoungFunction f = interpolated_young(a, b, theta);
      CAPTURE(f.name);
      CHECK(f.eval(0.0).value() == 0.0);
      ExtNonneg prev = ExtNonneg::from(0.0);
      bool diverges = false;
      for (double x : test_grid(1e-4, 1e4, 48)) {
        const ExtNonneg v = f.eval(x);
        CHECK(v >= prev);
        prev = v;
        if (v.is_infinite() || v > 1e3) diverges = true;
      }
      CHECK(diverges);
    }
  }
}

TEST_CASE("complementary-pair audits") {
  const auto& p2 = catalog_young("p2");
  const auto& phi_s = catalog_young("phi_s");
  const auto& phi_b = catalog_young("phi_b");

  // (x^2, exact conjugate): product = 2u, the boundary case, flagged but not
  // failed. Oracle: conj(x^2)(y) = y^2/4, so its inverse is 2 sqrt(u).
  {
    const YoungFunction conj = conjugate_function(p2);
    CHECK(conjugate_value(p2, 3.0).value() == doctest::Approx(9.0 / 4.0).epsilon(1e-8));
    const auto recs = pair_checks(p2, conj, {1.0}, {});
    REQUIRE(recs.size() == 2);
    const auto& upper = recs[1];
    CHECK(upper.id == "inverse_product_upper");
    CHECK(upper.lhs.value() == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(upper.status == Status::verified);
    CHECK(upper.hypotheses.count("boundary_equality") == 1);
    CHECK(recs[0].status == Status::verified);
  }

  // Exponent pairing: the product equals u (tight lower bound).
  for (const auto& [a, b] : catalog_complementary_pairs()) {
    const bool power_pair = a.name == "p1" || a.name == "p4over3" ||
                            a.name == "p3over2" || a.name == "p2";
    if (!power_pair) continue;
    CAPTURE(a.name);
    for (double u : test_grid(1e-6, 1e6, 64)) {
      const double prod = pseudo_inverse(a, u) * pseudo_inverse(b, u);
      CHECK(prod == doctest::Approx(u).epsilon(1e-9));
    }
  }

  // Piecewise formulas: min(0.5,1) * (0.5+1) = 0.75 in [0.5, 1).
  {
    const auto recs = pair_checks(phi_s, phi_b, {0.5}, {});
    CHECK(recs[0].bound.value() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(recs[0].status == Status::verified);
    CHECK(recs[1].status == Status::verified);
  }

  // No violations across declared pairs on moderate grids.
  for (const auto& [a, b] : catalog_complementary_pairs()) {
    const auto recs = pair_checks(a, b, test_grid(1e-6, 1e6, 256), test_grid(1e-3, 1e3, 20));
    for (const auto& r : recs) {
      CAPTURE(r.inputs);
      CHECK(r.status == Status::verified);
    }
  }
}

TEST_CASE("rho admissibility hook") {
  RhoDescriptor good{"t^0.5", [](double t) { return std::sqrt(t); }};
  CHECK(rho_admissible(good));
  RhoDescriptor convex{"t^2", [](double t) { return t * t; }};
  CHECK_FALSE(rho_admissible(convex));
  CHECK_THROWS_AS(
      interpolated_young_rho(catalog_young("p1"), catalog_young("p2"), convex),
      std::invalid_argument);
}
