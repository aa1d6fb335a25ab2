// Acceptance gate: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failures.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orlab/amalgam.hpp"
#include "orlab/dilation.hpp"
#include "orlab/grid_function.hpp"
#include "orlab/orlicz.hpp"
#include "orlab/report.hpp"
#include "orlab/scalar_solve.hpp"
#include "orlab/young.hpp"
#include "orlab/zak.hpp"

using namespace orlab;

namespace {

struct Check {
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      detail << "    FAILED: " << what << "\n";
    }
  }
};

bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1e-300, std::fabs(a), std::fabs(b)});
}

GridFunction box_fn(double lo, double hi, const char* name = "box") {
  return sample(make_box_indicator(Box::interval(lo, hi)), Box::interval(lo, hi), 1024, name);
}

// ---------------------------------------------------------------------------

void criterion_young_calculus(Check& c) {
  const auto grid = log_grid(1e-6, 1e6, 2048);
  for (const std::string name : {"p4over3", "p2", "p3", "phi_s", "phi_b"}) {
    const YoungFunction& phi = catalog_young(name);
    int bad = 0;
    for (double y : grid) {
      if (!close_rel(numeric_pseudo_inverse(phi, y), phi.closed_inverse(y), 1e-9)) ++bad;
    }
    c.expect(bad == 0, name + " pseudo-inverse closed-form mismatches: " +
                           std::to_string(bad));
  }

  const YoungFunction& p2 = catalog_young("p2");
  int bad_conj = 0;
  for (double y : log_grid(1e-3, 1e2, 64)) {
    if (!close_rel(conjugate_value(p2, y).value(), y * y / 4.0, 1e-6)) ++bad_conj;
  }
  c.expect(bad_conj == 0, "conjugate of x^2 vs y^2/4 mismatches: " + std::to_string(bad_conj));

  struct Probe {
    const char* name;
    std::vector<double> xs;
  };
  for (const auto& probe : std::vector<Probe>{{"p1", {0.5, 1.0, 3.0}},
                                              {"p2", {0.5, 1.0, 3.0}},
                                              {"p3", {0.5, 1.0, 3.0}},
                                              {"p4", {0.5, 1.0, 3.0}},
                                              {"p4over3", {0.5, 1.0, 3.0}},
                                              {"p3over2", {0.5, 1.0, 3.0}},
                                              {"xlog", {0.5, 1.0, 3.0}},
                                              {"cosh", {0.5, 1.0, 3.0}},
                                              {"exp", {0.5, 1.0, 3.0}},
                                              {"phi_b", {0.5, 2.0, 5.0}},
                                              {"phi_s", {0.2, 0.8}},
                                              {"pinf", {0.2, 0.8}}}) {
    const YoungFunction& phi = catalog_young(probe.name);
    const YoungFunction psi = conjugate_function(phi);
    for (double x : probe.xs) {
      const double direct = phi.eval(x).value();
      const double twice = conjugate_value(psi, x).value();
      c.expect(std::fabs(twice - direct) <= 1e-6 * (1.0 + direct),
               std::string("biconjugation of ") + probe.name + " at x=" + fmt_double(x));
    }
  }
}

void criterion_young_inequality(Check& c) {
  const auto u_grid = log_grid(1e-6, 1e6, 2048);
  const auto xy_grid = log_grid(1e-3, 1e3, 50);
  for (const auto& [phi, psi] : catalog_complementary_pairs()) {
    const auto recs = pair_checks(phi, psi, u_grid, xy_grid);
    int viol = 0;
    for (const auto& r : recs) {
      if (r.status == Status::violated) ++viol;
    }
    c.expect(viol == 0, "(" + phi.name + "," + psi.name + ") violations: " +
                            std::to_string(viol));
    const bool power_pair = phi.name == "p1" || phi.name == "p4over3" ||
                            phi.name == "p3over2" || phi.name == "p2";
    if (power_pair) {
      int off = 0;
      for (double u : u_grid) {
        const double prod = pseudo_inverse(phi, u) * pseudo_inverse(psi, u);
        if (!close_rel(prod, u, 1e-9)) ++off;
      }
      c.expect(off == 0, "(" + phi.name + "," + psi.name + ") product != u at " +
                             std::to_string(off) + " points");
    }
  }
}

void criterion_luxemburg_engine(Check& c) {
  for (const std::string name : {"p4over3", "p2", "p3", "phi_b"}) {
    const YoungFunction& phi = catalog_young(name);
    for (double len : {0.5, 1.0, 2.0}) {
      const double got = luxemburg(box_fn(0.0, len), phi).value.value();
      const double want = 1.0 / pseudo_inverse(phi, 1.0 / len);
      c.expect(close_rel(got, want, 1e-6),
               "indicator norm " + name + " |A|=" + fmt_double(len));
    }
  }

  const YoungFunction& p2 = catalog_young("p2");
  for (const auto& f : corpus(1)) {
    const double base = luxemburg(f, p2).value.as_double();
    for (double s : {0.1, 3.0}) {
      c.expect(close_rel(luxemburg(scale(f, s), p2).value.as_double(), s * base, 1e-9),
               "homogeneity " + f.name() + " c=" + fmt_double(s));
    }
    c.expect(luxemburg(scale(f, 0.5), p2).value.as_double() <= base * (1.0 + 1e-9),
             "solidity " + f.name());
  }
  const auto fns = corpus(1);
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const GridFunction& f = fns[i];
    const GridFunction g_on_f = add(scale(f, 0.0), fns[(i + 1) % fns.size()]);
    const GridFunction sum = add(f, fns[(i + 1) % fns.size()]);
    c.expect(luxemburg(sum, p2).value.as_double() <=
                 luxemburg(f, p2).value.as_double() +
                     luxemburg(g_on_f, p2).value.as_double() + 1e-9,
             "triangle " + f.name());
    for (double s : {0.4, 0.9, 1.7}) {
      const GridFunction h = scale(f, s / luxemburg(f, p2).value.value());
      const double norm = luxemburg(h, p2).value.value();
      const double modular =
          integrate(h, [&](const Complex& z) { return p2.eval(std::abs(z)); }).value();
      if (norm <= 1.0 - 1e-9) {
        c.expect(modular <= 1.0 + 1e-9, "modular characterization (<=) " + f.name());
      }
      if (modular <= 1.0 - 1e-9) {
        c.expect(norm <= 1.0 + 1e-9, "modular characterization (=>) " + f.name());
      }
    }
  }
}

void criterion_norm_equivalence(Check& c) {
  for (const auto& f : corpus(1)) {
    for (const auto& e : young_catalog()) {
      const double lx = luxemburg(f, e.young).value.as_double();
      const double am = amemiya(f, e.young).as_double();
      c.expect(am >= lx * (1.0 - 1e-6) && am <= 2.0 * lx * (1.0 + 1e-6),
               "sandwich " + f.name() + " x " + e.young.name + " ratio=" +
                   fmt_double(am / lx));
    }
  }
}

void criterion_dilation_identity(Check& c) {
  const auto fns = corpus(1);
  for (const std::string name : {"p4over3", "p2", "p3"}) {
    const YoungFunction& phi = catalog_young(name);
    const double p = name == "p2" ? 2.0 : (name == "p3" ? 3.0 : 4.0 / 3.0);
    for (double lam : {0.25, 0.5, 2.0, 4.0}) {
      double sup_ratio = 0.0;
      for (const auto& f : fns) {
        const double lhs = luxemburg(dilate(f, lam), phi).value.value();
        const double rhs = luxemburg(f, phi, lam).value.value();
        c.expect(close_rel(lhs, rhs, 1e-6),
                 "identity " + f.name() + " " + name + " lambda=" + fmt_double(lam));
        sup_ratio = std::max(sup_ratio, lhs / luxemburg(f, phi).value.value());
      }
      const double exact = std::pow(lam, -1.0 / p);
      c.expect(std::fabs(sup_ratio - exact) <= 0.02 * exact,
               "operator norm " + name + " lambda=" + fmt_double(lam) + " sup=" +
                   fmt_double(sup_ratio));
      c.expect(sup_ratio <= exact + 1e-6,
               "operator norm exceeded " + name + " lambda=" + fmt_double(lam));
    }
  }
}

void criterion_lemma_estimates(Check& c) {
  const std::vector<double> lambdas{0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  struct PairNames {
    const char* a;
    const char* b;
  };
  for (const auto& pn : {PairNames{"p2", "p2"}, PairNames{"p2", "p3"},
                         PairNames{"p4over3", "p2"}, PairNames{"phi_b", "p2"}}) {
    int viol = 0;
    double worst = 1.0;
    for (const auto& f : corpus(1)) {
      for (double lam : lambdas) {
        const DilationRecord r =
            verify_lemma(f, catalog_young(pn.a), catalog_young(pn.b), lam);
        if (r.status == Status::violated) {
          ++viol;
          worst = std::min(worst, r.slack);
        }
      }
    }
    c.expect(viol == 0, std::string("(") + pn.a + "," + pn.b + ") violated " +
                            std::to_string(viol) + " of 35, worst slack " +
                            fmt_double(worst));
  }

  const auto& p2 = catalog_young("p2");
  const GridFunction box = box_fn(0.0, 1.0, "box01");
  const DilationRecord half = verify_lemma(box, p2, p2, 0.5);
  c.expect(close_rel(half.lhs.value(), std::sqrt(2.0), 1e-9) &&
               close_rel(half.bound.value(), 2.0, 1e-9),
           "worked case lambda=1/2: lhs=" + fmt_double(half.lhs.value()) + " bound=" +
               fmt_double(half.bound.value()));
  const DilationRecord twice = verify_lemma(box, p2, p2, 2.0);
  c.expect(close_rel(twice.lhs.value(), 1.0 / std::sqrt(2.0), 1e-9) &&
               close_rel(twice.bound.value(), 1.0, 1e-9),
           "worked case lambda=2: lhs=" + fmt_double(twice.lhs.value()) + " bound=" +
               fmt_double(twice.bound.value()));
}

void criterion_main_result(Check& c) {
  const auto& p2 = catalog_young("p2");
  const std::vector<double> lambdas{0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  std::vector<double> dense;
  for (int j = -6; j <= 6; ++j) dense.push_back(std::pow(2.0, 0.5 * j));

  for (const auto& f : corpus(1)) {
    const MainResult m = verify_main(f, p2, p2, lambdas);
    c.expect(std::fabs(m.c_emp - 1.0) <= 0.02,
             "c_emp for (p2,p2) " + f.name() + " = " + fmt_double(m.c_emp));
  }
  const GridFunction g = corpus_function("gaussian", 1);
  const double coarse = verify_main(g, p2, p2, lambdas).c_emp;
  const double fine = verify_main(g, p2, p2, dense).c_emp;
  c.expect(std::fabs(fine - coarse) / coarse < 0.05,
           "c_emp drift under grid doubling: " + fmt_double(std::fabs(fine - coarse) / coarse));

  const MainResult incomparable =
      verify_main(corpus_function("box01", 1), p2, catalog_young("p3"), lambdas);
  for (const auto& r : incomparable.records) {
    c.expect(r.status == Status::report_only, "incomparable pair not report_only");
  }

  const MainResult tension =
      verify_main(corpus_function("box01", 1), p2, catalog_young("p1"), lambdas);
  bool slack_recorded = true;
  for (const auto& r : tension.records) {
    if (r.status != Status::report_only) slack_recorded = false;
    if (!(r.slack > 0.0)) slack_recorded = false;
  }
  c.expect(slack_recorded, "p>q tension case must be report_only with slack recorded");
}

void criterion_lebesgue_scan(Check& c) {
  std::vector<double> grid;
  for (int j = -10; j <= 10; ++j) grid.push_back(std::pow(2.0, 0.5 * j));
  const SlopeReport s = lebesgue_scan(2.0, 2.0, corpus_function("gaussian", 1), grid);
  c.expect(std::fabs(s.slope_contract - (-0.5)) <= 0.05,
           "gaussian (2,2) contract slope = " + fmt_double(s.slope_contract));

  const SlopeReport b = lebesgue_scan(2.0, 1.0, box_fn(0.0, 1.0, "box01"), {0.25});
  c.expect(close_rel(b.points.at(0).second, 4.0, 1e-9),
           "box (2,1) norm at lambda=1/4 = " + fmt_double(b.points.at(0).second));
}

void criterion_amalgam_structure(Check& c) {
  const auto& p2 = catalog_young("p2");
  const auto& p3 = catalog_young("p3");
  const auto fns = corpus(1);

  for (const auto& f : fns) {
    const double a = amalgam_norm(f, p2, p3, AmalgamMode::discrete).discrete.value();
    const double b =
        amalgam_norm(translate(f, 3.0), p2, p3, AmalgamMode::discrete).discrete.value();
    c.expect(std::fabs(a - b) <= 1e-12 * std::max(1.0, a),
             "integer translation " + f.name());

    const double w = amalgam_norm(f, p2, p2, AmalgamMode::discrete).discrete.value();
    const double l2 = luxemburg(f, p2).value.value();
    c.expect(close_rel(w, l2, 1e-8), "W(L2,L2) vs L2 " + f.name());
  }

  struct PairNames {
    const char* local;
    const char* global;
  };
  for (const auto& pn : {PairNames{"p2", "p2"}, PairNames{"p4over3", "p2"},
                         PairNames{"p2", "p3"}, PairNames{"phi_s", "p2"}}) {
    double lo = 1e300, hi = 0.0;
    for (const auto& f : fns) {
      const AmalgamNorms n =
          amalgam_norm(f, catalog_young(pn.local), catalog_young(pn.global),
                       AmalgamMode::both);
      c.expect(n.ratio >= 0.1 && n.ratio <= 10.0,
               std::string("ratio bracket (") + pn.local + "," + pn.global + ") " +
                   f.name() + " = " + fmt_double(n.ratio));
      lo = std::min(lo, n.ratio);
      hi = std::max(hi, n.ratio);
    }
    c.expect(hi / lo <= 4.0, std::string("ratio spread (") + pn.local + "," + pn.global +
                                 ") = " + fmt_double(hi / lo));
  }

  for (std::size_t i = 0; i < fns.size(); ++i) {
    const auto recs = structure_checks(fns[i], fns[(i + 1) % fns.size()], p2, p2, p3,
                                       catalog_young("p3over2"), {});
    for (const auto& r : recs) {
      if (r.id == "amalgam_holder") {
        c.expect(r.status == Status::verified, "amalgam Hoelder " + fns[i].name());
      }
    }
  }
}

void criterion_zak(Check& c) {
  const GridFunction box = box_fn(0.0, 1.0, "box01");
  const ZakField zb = zak(box, 32, 128);
  double worst = 0.0;
  for (const auto& z : zb.values) worst = std::max(worst, std::abs(z - Complex{1.0, 0.0}));
  c.expect(worst <= 1e-12, "|Z box - 1| max = " + fmt_double(worst));

  const GridFunction g = corpus_function("gaussian", 1);
  const ZakField zg = zak(g, 32, 128);
  const ZakIdentityReport idr = identities_residual(zg, 1, 1);
  c.expect(idr.quasiperiod_t <= 1e-8, "quasiperiod residual " + fmt_double(idr.quasiperiod_t));
  c.expect(idr.period_w <= 1e-8, "w-period residual " + fmt_double(idr.period_w));
  c.expect(idr.shift_identity <= 1e-8, "shift residual " + fmt_double(idr.shift_identity));

  const ModulusReport mod = modulus_analysis(zg);
  c.expect(std::fabs(mod.argmin_t - 0.5) <= 1.0 / 128.0 &&
               std::fabs(mod.argmin_w - 0.5) <= 1.0 / 128.0,
           "gaussian argmin (" + fmt_double(mod.argmin_t) + "," + fmt_double(mod.argmin_w) + ")");
  c.expect(mod.min_mod <= 0.05, "gaussian min modulus " + fmt_double(mod.min_mod));

  for (const auto& f : corpus(1)) {
    for (const char* name : {"p4over3", "p2", "p3"}) {
      const VerificationRecord r = norm_bound_check(f, catalog_young(name), 32, 128);
      c.expect(r.status == Status::verified,
               "norm bound " + f.name() + " x " + name + " slack=" + fmt_double(r.slack));
    }
  }

  const VerificationRecord two = norm_bound_check(box_fn(0.0, 2.0, "box02"),
                                                  catalog_young("p2"), 32, 128);
  c.expect(close_rel(two.lhs.value(), std::sqrt(2.0), 1e-6) &&
               close_rel(two.bound.value(), 2.0, 1e-6),
           "worked case chi_[0,2): lhs=" + fmt_double(two.lhs.value()) + " rhs=" +
               fmt_double(two.bound.value()));
}

struct CliArgs {
  std::string cli;
  std::string workdir;
};

void criterion_cli(Check& c, const CliArgs& args) {
  namespace fs = std::filesystem;
  if (args.cli.empty()) {
    c.expect(false, "no --cli path supplied");
    return;
  }
  fs::remove_all(args.workdir);
  fs::create_directories(args.workdir);

  auto run_verify = [&](const std::string& out) {
    const std::string cmd = args.cli + " --out " + out + " verify > " + out + ".log 2>&1";
    const int rc = std::system(cmd.c_str());
    return rc == -1 ? -1 : WEXITSTATUS(rc);
  };
  const std::string run1 = args.workdir + "/run1";
  const std::string run2 = args.workdir + "/run2";
  const int rc1 = run_verify(run1);
  const int rc2 = run_verify(run2);
  c.expect(rc1 == 0, "verify (first run) exit code = " + std::to_string(rc1));
  c.expect(rc2 == 0, "verify (second run) exit code = " + std::to_string(rc2));

  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  for (const char* leaf : {"/report.json", "/report.csv"}) {
    const std::string a = slurp(run1 + leaf);
    const std::string b = slurp(run2 + leaf);
    c.expect(!a.empty() && a == b, std::string("rerun byte-identical ") + leaf);
  }

  // The emitted scan CSV carries the log-log columns; fit the contraction
  // slope straight from the file.
  {
    std::ifstream in(run1 + "/scan_p2_q2_gaussian.csv");
    std::string line;
    std::getline(in, line);  // header
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      double lam, nrm, ll, ln;
      if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &lam, &nrm, &ll, &ln) != 4) continue;
      if (lam > 1.0) continue;
      sx += ll;
      sy += ln;
      sxx += ll * ll;
      sxy += ll * ln;
      n += 1;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    c.expect(n >= 5 && std::fabs(slope - (-0.5)) <= 0.05,
             "scan CSV contract slope = " + fmt_double(slope));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CliArgs cli_args;
  for (int i = 1; i + 1 < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli") cli_args.cli = argv[i + 1];
    if (a == "--workdir") cli_args.workdir = argv[i + 1];
  }
  if (cli_args.workdir.empty()) cli_args.workdir = "acceptance_out";

  struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Young-function calculus", criterion_young_calculus},
      {2, "Young inequality and inverse-product sandwich", criterion_young_inequality},
      {3, "Luxemburg engine", criterion_luxemburg_engine},
      {4, "norm equivalence (Luxemburg vs Amemiya)", criterion_norm_equivalence},
      {5, "dilation identity and operator norm", criterion_dilation_identity},
      {6, "lemma dilation estimates (exact constants)", criterion_lemma_estimates},
      {7, "main-result harness", criterion_main_result},
      {8, "Lebesgue scan", criterion_lebesgue_scan},
      {9, "amalgam structure", criterion_amalgam_structure},
      {10, "Zak transform", criterion_zak},
      {11, "CLI verify determinism", [&cli_args](Check& c) { criterion_cli(c, cli_args); }},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures == 0;
    std::cout << "criterion " << cr.id << ": " << (ok ? "PASS" : "FAIL") << " - "
              << cr.title << "\n";
    if (!ok) {
      std::cout << c.detail.str();
      ++failed;
    }
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : "FAILED CRITERIA: ") << (failed == 0 ? "" : std::to_string(failed))
            << "\n";
  return failed;
}
