#include "orlab/report.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "orlab/amalgam.hpp"
#include "orlab/dilation.hpp"
#include "orlab/grid_function.hpp"
#include "orlab/orlicz.hpp"
#include "orlab/scalar_solve.hpp"
#include "orlab/young.hpp"
#include "orlab/zak.hpp"

namespace orlab {

namespace {

using nlohmann::json;

// Resolves a catalog name or an inline "power:<p>" form.
YoungFunction resolve_young(const std::string& name) {
  if (const CatalogEntry* e = catalog_find(name)) return e->young;
  if (name.rfind("power:", 0) == 0) {
    const double p = std::stod(name.substr(6));
    if (!(p >= 1.0)) throw std::invalid_argument("power exponent must be >= 1: " + name);
    YoungFunction y;
    y.name = name;
    y.eval = [p](double x) { return ExtNonneg::from(std::pow(x, p)); };
    y.closed_inverse = [p](double v) { return std::pow(v, 1.0 / p); };
    y.delta2 = TriState::yes;
    y.submultiplicative = TriState::yes;
    y.normalized_at_one = TriState::yes;
    y.right_deriv_positive = p == 1.0 ? TriState::yes : TriState::no;
    return y;
  }
  throw std::invalid_argument("unresolvable Young function name: " + name);
}

json record_value(const ExtNonneg& v) {
  if (v.is_infinite()) return json("inf");
  return json(v.value());
}

json record_to_json(const VerificationRecord& r) {
  json j;
  j["id"] = r.id;
  j["module"] = r.module;
  j["inputs"] = r.inputs;
  if (r.lambda) j["lambda"] = *r.lambda;
  j["lhs"] = record_value(r.lhs);
  j["bound"] = record_value(r.bound);
  j["slack"] = std::isinf(r.slack) ? json("inf") : json(r.slack);
  j["status"] = to_string(r.status);
  if (!r.hypotheses.empty()) {
    json h;
    for (const auto& [k, v] : r.hypotheses) h[k] = to_string(v);
    j["hypotheses"] = h;
  }
  return j;
}

json to_json(const RunConfig& c) {
  json j;
  j["young_functions"] = c.young_functions;
  j["corpus_seed"] = c.corpus_seed;
  j["grids"]["lambda"] = c.lambda_grid;
  j["grids"]["suite_lambda"] = c.suite_lambda_grid;
  j["grids"]["scan_lambda"] = c.scan_lambda_grid;
  j["grids"]["u"] = {{"min", c.u_grid.min}, {"max", c.u_grid.max}, {"points", c.u_grid.points}};
  j["grids"]["xy"] = {{"min", c.xy_grid.min}, {"max", c.xy_grid.max}, {"points", c.xy_grid.points}};
  j["grids"]["x_resolution"] = c.x_resolution;
  j["grids"]["zak_n"] = c.zak_n;
  j["grids"]["zak_K"] = c.zak_K;
  j["pairs"]["lemma"] = c.lemma_pairs;
  j["pairs"]["main"] = c.main_pairs;
  j["pairs"]["structure"] = c.structure_groups;
  json scans = json::array();
  for (const auto& s : c.scans) {
    scans.push_back({{"p", s.p}, {"q", s.q}, {"fn", s.fn}});
  }
  j["scans"] = scans;
  j["tolerances"] = c.tolerances;
  j["output"] = {{"dir", c.out_dir}, {"formats", c.formats}};
  j["jobs"] = c.jobs;
  return j;
}

void from_json_into(const json& j, RunConfig& c) {
  if (j.contains("young_functions")) c.young_functions = j["young_functions"].get<std::vector<std::string>>();
  if (j.contains("corpus_seed")) c.corpus_seed = j["corpus_seed"].get<std::uint64_t>();
  if (j.contains("grids")) {
    const auto& g = j["grids"];
    if (g.contains("lambda")) c.lambda_grid = g["lambda"].get<std::vector<double>>();
    if (g.contains("suite_lambda")) c.suite_lambda_grid = g["suite_lambda"].get<std::vector<double>>();
    if (g.contains("scan_lambda")) c.scan_lambda_grid = g["scan_lambda"].get<std::vector<double>>();
    auto grid_spec = [](const json& v, GridSpec& out) {
      if (v.contains("min")) out.min = v["min"].get<double>();
      if (v.contains("max")) out.max = v["max"].get<double>();
      if (v.contains("points")) out.points = v["points"].get<int>();
    };
    if (g.contains("u")) grid_spec(g["u"], c.u_grid);
    if (g.contains("xy")) grid_spec(g["xy"], c.xy_grid);
    if (g.contains("x_resolution")) c.x_resolution = g["x_resolution"].get<int>();
    if (g.contains("zak_n")) c.zak_n = g["zak_n"].get<int>();
    if (g.contains("zak_K")) c.zak_K = g["zak_K"].get<int>();
  }
  if (j.contains("pairs")) {
    const auto& p = j["pairs"];
    if (p.contains("lemma")) c.lemma_pairs = p["lemma"].get<std::vector<std::array<std::string, 2>>>();
    if (p.contains("main")) c.main_pairs = p["main"].get<std::vector<std::array<std::string, 2>>>();
    if (p.contains("structure")) c.structure_groups = p["structure"].get<std::vector<std::array<std::string, 4>>>();
  }
  if (j.contains("scans")) {
    c.scans.clear();
    for (const auto& s : j["scans"]) {
      ScanSpec spec;
      if (s.contains("p")) spec.p = s["p"].get<double>();
      if (s.contains("q")) spec.q = s["q"].get<double>();
      if (s.contains("fn")) spec.fn = s["fn"].get<std::string>();
      c.scans.push_back(spec);
    }
  }
  if (j.contains("tolerances")) c.tolerances = j["tolerances"].get<std::map<std::string, double>>();
  if (j.contains("output")) {
    const auto& o = j["output"];
    if (o.contains("dir")) c.out_dir = o["dir"].get<std::string>();
    if (o.contains("formats")) c.formats = o["formats"].get<std::vector<std::string>>();
  }
  if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
}

void validate(const RunConfig& c) {
  for (const auto& n : c.young_functions) resolve_young(n);
  auto check_pairs = [](const auto& pairs) {
    for (const auto& p : pairs) {
      for (const auto& n : p) resolve_young(n);
    }
  };
  check_pairs(c.lemma_pairs);
  check_pairs(c.main_pairs);
  check_pairs(c.structure_groups);
  if (c.lambda_grid.empty() || c.suite_lambda_grid.empty() || c.scan_lambda_grid.empty()) {
    throw std::invalid_argument("config: lambda grids must be nonempty");
  }
  if (c.u_grid.points < 2 || c.xy_grid.points < 2) {
    throw std::invalid_argument("config: grids need at least 2 points");
  }
  for (const auto& [k, v] : c.tolerances) {
    if (!(v > 0.0)) throw std::invalid_argument("config: tolerance " + k + " must be positive");
  }
  for (const auto& s : c.scans) {
    if (!(s.p >= 1.0) || !(s.q >= 1.0)) throw std::invalid_argument("config: scan exponents >= 1");
  }
}

}  // namespace

RunConfig default_config() {
  RunConfig c;
  for (const auto& e : young_catalog()) c.young_functions.push_back(e.young.name);
  c.lambda_grid = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  c.suite_lambda_grid = {0.25, 0.5, 1.0, 2.0, 4.0};
  for (int j = -10; j <= 10; ++j) c.scan_lambda_grid.push_back(std::pow(2.0, 0.5 * j));
  c.lemma_pairs = {{"p2", "p2"}, {"p2", "p3"}, {"p4over3", "p2"}, {"phi_s", "p2"}};
  c.main_pairs = {{"p2", "p2"}, {"p2", "p3"}, {"p4over3", "p2"}, {"p2", "p1"}};
  c.structure_groups = {{"p2", "p2", "p3", "p3over2"}, {"p4over3", "p4", "p2", "p2"}};
  c.scans = {{2.0, 2.0, "gaussian"}, {2.0, 1.0, "box01"}};
  c.tolerances = {{"record_rel", 1e-6}, {"norm_rel", 1e-9}, {"abs", 1e-12}};
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("config: parse error in " + path + ": " + e.what());
  }
  RunConfig c = default_config();
  from_json_into(j, c);
  validate(c);
  return c;
}

std::string config_to_json_string(const RunConfig& cfg) { return to_json(cfg).dump(2); }

std::string config_hash(const RunConfig& cfg) {
  // Hash the semantic inputs only: where results are written and how many
  // workers computed them cannot change what they are.
  RunConfig canonical = cfg;
  canonical.out_dir.clear();
  canonical.formats.clear();
  canonical.jobs = 1;
  const std::string s = to_json(canonical).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report run_verify_suite(const RunConfig& cfg) {
  validate(cfg);
  const auto fns = corpus(cfg.corpus_seed);
  const auto pairs = catalog_complementary_pairs();

  const auto u_grid = log_grid(cfg.u_grid.min, cfg.u_grid.max, cfg.u_grid.points);
  const auto xy_grid = log_grid(cfg.xy_grid.min, cfg.xy_grid.max, cfg.xy_grid.points);

  AmalgamConfig acfg;
  acfg.x_resolution = cfg.x_resolution;

  using Task = std::function<std::vector<VerificationRecord>()>;
  std::vector<Task> tasks;

  // Young-function pair audits, restricted to the configured function set.
  auto listed = [&cfg](const std::string& n) {
    for (const auto& m : cfg.young_functions) {
      if (m == n) return true;
    }
    return false;
  };
  for (const auto& [phi, psi] : pairs) {
    if (!listed(phi.name) || !listed(psi.name)) continue;
    tasks.push_back([phi = phi, psi = psi, u_grid, xy_grid]() {
      return pair_checks(phi, psi, u_grid, xy_grid);
    });
  }

  // Orlicz inequality suite over corpus x declared pairs.
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const GridFunction& f = fns[i];
    const GridFunction& g = fns[(i + 1) % fns.size()];
    for (const auto& [phi, psi] : pairs) {
      if (!listed(phi.name) || !listed(psi.name)) continue;
      tasks.push_back([f, g, phi = phi, psi = psi, grid = cfg.suite_lambda_grid]() {
        return inequality_suite(f, g, phi, psi, grid);
      });
    }
  }

  // Amalgam structure checks.
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const GridFunction& f = fns[i];
    const GridFunction& g = fns[(i + 1) % fns.size()];
    for (const auto& grp : cfg.structure_groups) {
      tasks.push_back([f, g, grp, acfg]() {
        return structure_checks(f, g, resolve_young(grp[0]), resolve_young(grp[1]),
                                resolve_young(grp[2]), resolve_young(grp[3]), acfg);
      });
    }
  }

  // Dilation lemma sweep (exact constants, asserted).
  for (const auto& pr : cfg.lemma_pairs) {
    for (const auto& f : fns) {
      tasks.push_back([f, pr, grid = cfg.lambda_grid, acfg]() {
        const YoungFunction a = resolve_young(pr[0]);
        const YoungFunction b = resolve_young(pr[1]);
        std::vector<VerificationRecord> recs;
        for (double lam : grid) {
          const DilationRecord d = verify_lemma(f, a, b, lam, acfg);
          VerificationRecord r;
          r.id = "dilation_lemma";
          r.module = "dilation";
          r.inputs = d.inputs;
          r.lambda = d.lambda;
          r.lhs = d.lhs;
          r.bound = d.bound;
          r.slack = d.slack;
          r.status = d.status;
          recs.push_back(std::move(r));
        }
        return recs;
      });
    }
  }

  // Main-result sweep (implicit constant, gated).
  for (const auto& pr : cfg.main_pairs) {
    for (const auto& f : fns) {
      tasks.push_back([f, pr, grid = cfg.lambda_grid, acfg]() {
        const YoungFunction a = resolve_young(pr[0]);
        const YoungFunction b = resolve_young(pr[1]);
        const MainResult m = verify_main(f, a, b, grid, acfg);
        std::vector<VerificationRecord> recs;
        for (const auto& d : m.records) {
          VerificationRecord r;
          r.id = "dilation_main";
          r.module = "dilation";
          r.inputs = d.inputs;
          r.lambda = d.lambda;
          r.lhs = d.lhs;
          r.bound = d.bound;
          r.slack = d.slack;
          r.status = d.status;
          r.hypotheses = d.hypotheses;
          recs.push_back(std::move(r));
        }
        VerificationRecord c;
        c.id = "dilation_main_cemp";
        c.module = "dilation";
        c.inputs = "f=" + f.name() + ";pair=(" + a.name + "," + b.name + ")";
        c.lhs = ExtNonneg::from(m.c_emp);
        c.bound = ExtNonneg::from(m.c_emp);
        c.slack = m.c_emp;
        c.status = Status::report_only;
        recs.push_back(std::move(c));
        return recs;
      });
    }
  }

  // Zak bounds and identities.
  {
    const std::vector<std::string> zak_phis{"p4over3", "p2", "p3"};
    for (const auto& f : fns) {
      tasks.push_back([f, zak_phis, K = cfg.zak_K, n = cfg.zak_n]() {
        std::vector<VerificationRecord> recs;
        for (const auto& pn : zak_phis) {
          recs.push_back(norm_bound_check(f, catalog_young(pn), K, n));
        }
        return recs;
      });
    }
    for (const std::string name : {"box01", "gaussian"}) {
      tasks.push_back([name, seed = cfg.corpus_seed, K = cfg.zak_K, n = cfg.zak_n]() {
        const GridFunction g = corpus_function(name, seed);
        const ZakField field = zak(g, K, n);
        const ZakIdentityReport idr = identities_residual(field, 1, 1);
        const ModulusReport mod = modulus_analysis(field);
        std::vector<VerificationRecord> recs;
        auto residual = [&](const std::string& id, double value) {
          VerificationRecord r;
          r.id = id;
          r.module = "zak";
          r.inputs = "g=" + name + ";K=" + std::to_string(K) + ";n=" + std::to_string(n) +
                     ";m=1;nshift=1";
          r.lhs = ExtNonneg::from(value);
          r.bound = ExtNonneg::from(1e-8);
          r.slack = slack_ratio(r.lhs, r.bound);
          r.status = value <= 1e-8 ? Status::verified : Status::violated;
          return r;
        };
        recs.push_back(residual("zak_quasiperiod_t", idr.quasiperiod_t));
        recs.push_back(residual("zak_period_w", idr.period_w));
        recs.push_back(residual("zak_shift_identity", idr.shift_identity));
        VerificationRecord r;
        r.id = "zak_modulus";
        r.module = "zak";
        r.inputs = "g=" + name + ";verdict=" + to_string(mod.verdict) +
                   ";argmin=(" + fmt_double(mod.argmin_t) + "," + fmt_double(mod.argmin_w) + ")";
        r.lhs = ExtNonneg::from(mod.min_mod);
        r.bound = ExtNonneg::from(mod.max_mod);
        r.slack = slack_ratio(r.lhs, r.bound);
        r.status = Status::report_only;
        recs.push_back(std::move(r));
        return recs;
      });
    }
  }

  // Run tasks (optionally in parallel); merge preserves task order.
  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        results[i] = tasks[i]();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report rep;
  rep.version = kVersion;
  rep.hash = config_hash(cfg);
  rep.summary = {{"verified", 0}, {"violated", 0}, {"report_only", 0}, {"not_applicable", 0}};
  for (auto& group : results) {
    for (auto& r : group) {
      rep.summary[to_string(r.status)]++;
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> emit(const Report& report, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw std::runtime_error("emit: cannot create " + cfg.out_dir + ": " + ec.message());

  auto wants = [&cfg](const std::string& f) {
    for (const auto& x : cfg.formats) {
      if (x == f) return true;
    }
    return false;
  };

  if (wants("json")) {
    const std::string path = cfg.out_dir + "/report.json";
    json j;
    j["version"] = report.version;
    j["config_hash"] = report.hash;
    j["summary"] = report.summary;
    json records = json::array();
    for (const auto& r : report.records) records.push_back(record_to_json(r));
    j["records"] = std::move(records);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot write " + path);
    out << j.dump(2) << "\n";
    written.push_back(path);
  }

  if (wants("csv")) {
    const std::string path = cfg.out_dir + "/report.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot write " + path);
    out << "id,module,lambda,lhs,bound,slack,status\n";
    for (const auto& r : report.records) {
      out << r.id << ',' << r.module << ',';
      if (r.lambda) out << fmt_double(*r.lambda);
      out << ',' << fmt_double(r.lhs.as_double()) << ',' << fmt_double(r.bound.as_double())
          << ',' << fmt_double(r.slack) << ',' << to_string(r.status) << "\n";
    }
    written.push_back(path);
  }

  // Plot data: one CSV per configured scan regardless of format list (these
  // are the only plot artifacts).
  for (const auto& s : cfg.scans) {
    const SlopeReport rep_s =
        lebesgue_scan(s.p, s.q, corpus_function(s.fn, cfg.corpus_seed), cfg.scan_lambda_grid);
    std::ostringstream name;
    name << cfg.out_dir << "/scan_p" << fmt_double(s.p) << "_q" << fmt_double(s.q) << "_"
         << s.fn << ".csv";
    std::ofstream out(name.str(), std::ios::binary);
    if (!out) throw std::runtime_error("emit: cannot write " + name.str());
    out << "lambda,norm,log_lambda,log_norm\n";
    for (const auto& [lam, nrm] : rep_s.points) {
      out << fmt_double(lam) << ',' << fmt_double(nrm) << ',' << fmt_double(std::log(lam))
          << ',' << fmt_double(std::log(nrm)) << "\n";
    }
    out << "# slope_contract=" << fmt_double(rep_s.slope_contract)
        << " slope_expand=" << fmt_double(rep_s.slope_expand)
        << " lemma=(" << fmt_double(rep_s.lemma_contract) << ',' << fmt_double(rep_s.lemma_expand)
        << ") maxmin=(" << fmt_double(rep_s.maxmin_contract) << ',' << fmt_double(rep_s.maxmin_expand)
        << ") sharper=(" << fmt_double(rep_s.sharper_contract) << ','
        << fmt_double(rep_s.sharper_expand) << ")\n";
    written.push_back(name.str());
  }

  return written;
}

int exit_code_for(const Report& report) {
  auto it = report.summary.find("violated");
  return (it != report.summary.end() && it->second > 0) ? 1 : 0;
}

}  // namespace orlab
