#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orlab/amalgam.hpp"
#include "orlab/dilation.hpp"
#include "orlab/grid_function.hpp"
#include "orlab/orlicz.hpp"
#include "orlab/report.hpp"
#include "orlab/scalar_solve.hpp"
#include "orlab/young.hpp"
#include "orlab/zak.hpp"

namespace {

using namespace orlab;

// Norm-style values print with a decimal point ("1.0", not "1").
std::string value_str(double v) {
  std::string s = fmt_double(v);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos) {
    s += ".0";
  }
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"orlab: numerical laboratory for Orlicz and Wiener amalgam norms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::string formats;
  std::uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--format", formats, "comma-separated output formats (json,csv)");
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--jobs", jobs, "worker threads for the verify suite");

  auto* cmd_catalog = app.add_subcommand("catalog", "list Young functions and flags");

  auto* cmd_norm = app.add_subcommand("norm", "Luxemburg norm of a corpus function");
  std::string young_name = "p2", fn_name = "box01";
  double target = 1.0;
  cmd_norm->add_option("--young", young_name, "catalog name or power:<p>");
  cmd_norm->add_option("--fn", fn_name, "corpus function tag");
  cmd_norm->add_option("--target", target, "modular target (1 = Luxemburg norm)");

  auto* cmd_conj = app.add_subcommand("conjugate", "complementary-function value");
  std::string conj_young = "p2";
  double conj_y = 1.0;
  cmd_conj->add_option("--young", conj_young, "catalog name or power:<p>");
  cmd_conj->add_option("--y", conj_y, "argument");

  auto* cmd_amalgam = app.add_subcommand("amalgam", "Wiener amalgam norm of Orlicz type");
  std::string am_y1 = "p2", am_y2 = "p2", am_fn = "box01", am_mode = "both";
  int am_res = 64;
  cmd_amalgam->add_option("--young1", am_y1, "local component");
  cmd_amalgam->add_option("--young2", am_y2, "global component");
  cmd_amalgam->add_option("--fn", am_fn, "corpus function tag");
  cmd_amalgam->add_option("--mode", am_mode, "continuous | discrete | both");
  cmd_amalgam->add_option("--x-resolution", am_res, "control-function samples per unit");

  auto* cmd_scan = app.add_subcommand("dilation-scan", "lambda sweep with log-log slopes");
  double scan_p = 2.0, scan_q = 2.0;
  std::string scan_fn = "gaussian";
  cmd_scan->add_option("--p", scan_p, "local exponent");
  cmd_scan->add_option("--q", scan_q, "global exponent");
  cmd_scan->add_option("--fn", scan_fn, "corpus function tag");

  auto* cmd_zak = app.add_subcommand("zak", "Zak-transform modulus grid and verdict");
  std::string zak_fn = "box01";
  int zak_K = 32, zak_n = 128;
  cmd_zak->add_option("--fn", zak_fn, "corpus function tag");
  cmd_zak->add_option("--K", zak_K, "series truncation");
  cmd_zak->add_option("--n", zak_n, "grid resolution per axis");

  auto* cmd_verify = app.add_subcommand("verify", "run the full property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  RunConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
  if (app.count("--seed") > 0) cfg.corpus_seed = seed;
  if (app.count("--jobs") > 0) cfg.jobs = jobs;
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (!formats.empty()) {
    cfg.formats.clear();
    std::string cur;
    for (char ch : formats + ",") {
      if (ch == ',') {
        if (!cur.empty()) cfg.formats.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }

  if (*cmd_catalog) {
    for (const auto& e : young_catalog()) {
      std::cout << e.young.name << "  delta2=" << to_string(e.young.delta2)
                << " submultiplicative=" << to_string(e.young.submultiplicative)
                << " right_deriv_positive=" << to_string(e.young.right_deriv_positive)
                << " normalized_at_one=" << to_string(e.young.normalized_at_one);
      if (e.conjugate_name) std::cout << " conjugate=" << *e.conjugate_name;
      std::cout << "\n";
    }
    return 0;
  }

  if (*cmd_norm) {
    const GridFunction f = corpus_function(fn_name, cfg.corpus_seed);
    const YoungFunction& phi = catalog_young(young_name);
    const NormResult r = luxemburg(f, phi, target);
    std::cout << value_str(r.value.as_double()) << "\n";
    return 0;
  }

  if (*cmd_conj) {
    const YoungFunction& phi = catalog_young(conj_young);
    std::cout << value_str(conjugate_value(phi, conj_y).as_double()) << "\n";
    return 0;
  }

  if (*cmd_amalgam) {
    const GridFunction f = corpus_function(am_fn, cfg.corpus_seed);
    AmalgamConfig acfg;
    acfg.x_resolution = am_res;
    AmalgamMode mode;
    if (am_mode == "continuous") {
      mode = AmalgamMode::continuous;
    } else if (am_mode == "discrete") {
      mode = AmalgamMode::discrete;
    } else if (am_mode == "both") {
      mode = AmalgamMode::both;
    } else {
      throw std::invalid_argument("unknown mode: " + am_mode);
    }
    const AmalgamNorms n =
        amalgam_norm(f, catalog_young(am_y1), catalog_young(am_y2), mode, acfg);
    if (mode != AmalgamMode::continuous) {
      std::cout << "discrete=" << value_str(n.discrete.as_double()) << "\n";
    }
    if (mode != AmalgamMode::discrete) {
      std::cout << "continuous=" << value_str(n.continuous.as_double()) << "\n";
    }
    if (mode == AmalgamMode::both) {
      std::cout << "ratio=" << value_str(n.ratio) << "\n";
    }
    return 0;
  }

  if (*cmd_scan) {
    RunConfig scan_cfg = cfg;
    scan_cfg.scans = {{scan_p, scan_q, scan_fn}};
    const GridFunction f = corpus_function(scan_fn, cfg.corpus_seed);
    const SlopeReport rep = lebesgue_scan(scan_p, scan_q, f, cfg.scan_lambda_grid);
    Report dummy;
    dummy.version = kVersion;
    dummy.hash = config_hash(scan_cfg);
    scan_cfg.formats.clear();  // only the scan CSV
    const auto files = emit(dummy, scan_cfg);
    std::cout << "slope_contract=" << fmt_double(rep.slope_contract)
              << " slope_expand=" << fmt_double(rep.slope_expand)
              << " lemma=(" << fmt_double(rep.lemma_contract) << ","
              << fmt_double(rep.lemma_expand) << ")"
              << " maxmin=(" << fmt_double(rep.maxmin_contract) << ","
              << fmt_double(rep.maxmin_expand) << ")"
              << " sharper=(" << fmt_double(rep.sharper_contract) << ","
              << fmt_double(rep.sharper_expand) << ")\n";
    for (const auto& p : files) std::cout << "wrote " << p << "\n";
    return 0;
  }

  if (*cmd_zak) {
    const GridFunction g = corpus_function(zak_fn, cfg.corpus_seed);
    const ZakField field = zak(g, zak_K, zak_n);
    const ModulusReport mod = modulus_analysis(field);
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + cfg.out_dir + ": " + ec.message());
    const std::string path = cfg.out_dir + "/zak_" + zak_fn + ".csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "t,w,abs\n";
    for (int iw = 0; iw < field.resolution; ++iw) {
      for (int it = 0; it < field.resolution; ++it) {
        out << fmt_double(field.node(it)) << ',' << fmt_double(field.node(iw)) << ','
            << fmt_double(std::abs(field.at(it, iw))) << "\n";
      }
    }
    std::cout << "min=" << fmt_double(mod.min_mod) << " max=" << fmt_double(mod.max_mod)
              << " argmin=(" << fmt_double(mod.argmin_t) << "," << fmt_double(mod.argmin_w)
              << ") verdict=" << to_string(mod.verdict) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
  }

  if (*cmd_verify) {
    const Report rep = run_verify_suite(cfg);
    const auto files = emit(rep, cfg);
    std::cout << "records=" << rep.records.size();
    for (const auto& [k, v] : rep.summary) std::cout << " " << k << "=" << v;
    std::cout << "\nconfig_hash=" << rep.hash << "\n";
    for (const auto& p : files) std::cout << "wrote " << p << "\n";
    return exit_code_for(rep);
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
