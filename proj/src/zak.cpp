#include "orlab/zak.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orlab/amalgam.hpp"
#include "orlab/orlicz.hpp"

namespace orlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex unit_phase(double turns) {
  const double ph = 2.0 * kPi * turns;
  return {std::cos(ph), std::sin(ph)};
}

}  // namespace

Complex zak_value(const GridFunction& g, int K, double t, double w) {
  Complex acc{0.0, 0.0};
  for (int k = -K; k <= K; ++k) {
    const Complex gv = g.eval_point(t + k);
    if (gv == Complex{0.0, 0.0}) continue;
    acc += gv * unit_phase(k * w);
  }
  return acc;
}

ZakField zak(const GridFunction& g, int K, int n) {
  if (K < 1) throw std::invalid_argument("zak: K >= 1");
  if (n < 8) throw std::invalid_argument("zak: n >= 8");
  ZakField field;
  field.resolution = n;
  field.truncation = K;
  field.source = g;
  field.values.resize(static_cast<std::size_t>(n) * n);
  for (int iw = 0; iw < n; ++iw) {
    const double w = (iw + 0.5) / n;
    for (int it = 0; it < n; ++it) {
      const double t = (it + 0.5) / n;
      field.values[static_cast<std::size_t>(iw) * n + it] = zak_value(g, K, t, w);
    }
  }
  // Tail of |g| outside [-K-1, K+1], estimated on g's own grid.
  double tail = 0.0;
  for (int i = 0; i < g.shape()[0]; ++i) {
    const double x = g.coord(0, i);
    if (x < -(K + 1.0) || x > K + 1.0) tail += std::abs(g.samples()[static_cast<std::size_t>(i)]);
  }
  field.tail_mass_warning = tail * g.cell_volume() > 1e-10;
  return field;
}

ZakIdentityReport identities_residual(const ZakField& field, int m, int n_shift) {
  const GridFunction& g = field.source;
  const int K = field.truncation;
  const int n = field.resolution;
  ZakIdentityReport rep;

  const GridFunction shifted = modulate(translate(g, static_cast<double>(n_shift)),
                                        static_cast<double>(m));

  for (int iw = 0; iw < n; ++iw) {
    const double w = field.node(iw);
    for (int it = 0; it < n; ++it) {
      const double t = field.node(it);
      const Complex z = field.at(it, iw);

      const Complex lhs_t = zak_value(g, K, t + 1.0, w);
      rep.quasiperiod_t = std::max(rep.quasiperiod_t, std::abs(lhs_t - unit_phase(-w) * z));

      const Complex lhs_w = zak_value(g, K, t, w + 1.0);
      rep.period_w = std::max(rep.period_w, std::abs(lhs_w - z));

      const Complex lhs_s = zak_value(shifted, K, t, w);
      const Complex rhs_s = unit_phase(m * t) * unit_phase(n_shift * w) * z;
      rep.shift_identity = std::max(rep.shift_identity, std::abs(lhs_s - rhs_s));
    }
  }
  return rep;
}

ModulusReport modulus_analysis(const ZakField& field, double onb_tol, double zero_threshold) {
  ModulusReport rep;
  const int n = field.resolution;
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  int am_t = 0, am_w = 0;
  for (int iw = 0; iw < n; ++iw) {
    for (int it = 0; it < n; ++it) {
      const double a = std::abs(field.at(it, iw));
      if (a < mn) {
        mn = a;
        am_t = it;
        am_w = iw;
      }
      mx = std::max(mx, a);
    }
  }
  rep.min_mod = mn;
  rep.max_mod = mx;
  rep.argmin_t = field.node(am_t);
  rep.argmin_w = field.node(am_w);
  if (std::fabs(mn - 1.0) <= onb_tol && std::fabs(mx - 1.0) <= onb_tol) {
    rep.verdict = ZakVerdict::onb_candidate;
  } else if (mn > zero_threshold) {
    rep.verdict = ZakVerdict::riesz_candidate;
  } else {
    rep.verdict = ZakVerdict::degenerate;
  }
  return rep;
}

const char* to_string(ZakVerdict v) {
  switch (v) {
    case ZakVerdict::onb_candidate: return "onb_candidate";
    case ZakVerdict::riesz_candidate: return "riesz_candidate";
    default: return "degenerate";
  }
}

GridFunction zak_modulus_grid(const ZakField& field) {
  const int n = field.resolution;
  std::vector<Complex> vals(field.values.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    vals[i] = Complex{std::abs(field.values[i]), 0.0};
  }
  return GridFunction(2, {0.0, 0.0}, 1.0 / n, {n, n}, std::move(vals), nullptr,
                      Box::square(0.0, 1.0), "|Z " + field.source.name() + "|");
}

VerificationRecord norm_bound_check(const GridFunction& f, const YoungFunction& phi,
                                    int K, int n) {
  const ZakField field = zak(f, K, n);
  const GridFunction zmod = zak_modulus_grid(field);
  const ExtNonneg lhs = luxemburg(zmod, phi, 1.0).value;
  const double rhs = block_sum_norm(f, phi);

  VerificationRecord rec;
  rec.id = "zak_norm_bound";
  rec.module = "zak";
  rec.inputs = "f=" + f.name() + ";phi=" + phi.name + ";K=" + std::to_string(K) +
               ";n=" + std::to_string(n);
  rec.lhs = lhs;
  rec.bound = ExtNonneg::from(rhs);
  rec.slack = slack_ratio(rec.lhs, rec.bound);
  rec.status = (lhs <= rec.bound * (1.0 + 1e-6) + ExtNonneg::from(1e-12)) ? Status::verified
                                                                          : Status::violated;
  if (field.tail_mass_warning) rec.hypotheses["tail_mass_ok"] = TriState::no;
  return rec;
}

}  // namespace orlab
