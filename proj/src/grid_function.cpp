#include "orlab/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct BoxIndicator final : Analytic {
  Box box;
  explicit BoxIndicator(const Box& b) : box(b) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    for (int k = 0; k < dim; ++k) {
      if (x[k] < box.lo[k] || x[k] > box.hi[k]) return {0.0, 0.0};
    }
    return {1.0, 0.0};
  }
};

struct GaussianFn final : Analytic {
  double center;
  explicit GaussianFn(double c) : center(c) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    double q = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = x[k] - center;
      q += d * d;
    }
    return {std::exp(-kPi * q), 0.0};
  }
};

struct HatFn final : Analytic {
  Complex eval(const std::array<double, 2>& x, int) const override {
    return {std::max(0.0, 1.0 - std::fabs(x[0])), 0.0};
  }
};

struct StepFn final : Analytic {
  std::vector<double> levels;
  double x0, width;
  StepFn(std::vector<double> l, double start, double w)
      : levels(std::move(l)), x0(start), width(w) {}
  Complex eval(const std::array<double, 2>& x, int) const override {
    const double t = (x[0] - x0) / width;
    if (t < 0.0) return {0.0, 0.0};
    const auto i = static_cast<std::size_t>(t);
    if (i >= levels.size()) return {0.0, 0.0};
    return {levels[i], 0.0};
  }
};

struct SumFn final : Analytic {
  AnalyticPtr a, b;
  SumFn(AnalyticPtr x, AnalyticPtr y) : a(std::move(x)), b(std::move(y)) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    return a->eval(x, dim) + b->eval(x, dim);
  }
};

struct ScaledFn final : Analytic {
  Complex c;
  AnalyticPtr inner;
  ScaledFn(Complex k, AnalyticPtr f) : c(k), inner(std::move(f)) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    return c * inner->eval(x, dim);
  }
};

struct DilatedFn final : Analytic {
  double lambda;
  AnalyticPtr inner;
  DilatedFn(double l, AnalyticPtr f) : lambda(l), inner(std::move(f)) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    std::array<double, 2> y{x[0] * lambda, x[1] * lambda};
    return inner->eval(y, dim);
  }
};

struct TranslatedFn final : Analytic {
  double shift;
  AnalyticPtr inner;
  TranslatedFn(double y, AnalyticPtr f) : shift(y), inner(std::move(f)) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    std::array<double, 2> y{x[0] - shift, x[1]};
    return inner->eval(y, dim);
  }
};

struct ModulatedFn final : Analytic {
  double xi;
  AnalyticPtr inner;
  ModulatedFn(double f, AnalyticPtr g) : xi(f), inner(std::move(g)) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    const double ph = 2.0 * kPi * xi * x[0];
    return Complex{std::cos(ph), std::sin(ph)} * inner->eval(x, dim);
  }
};

struct RestrictedFn final : Analytic {
  Box box;
  AnalyticPtr inner;
  RestrictedFn(const Box& b, AnalyticPtr f) : box(b), inner(std::move(f)) {}
  Complex eval(const std::array<double, 2>& x, int dim) const override {
    if (!box.contains(x)) return {0.0, 0.0};
    return inner->eval(x, dim);
  }
};

double max_abs_of(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

AnalyticPtr make_box_indicator(const Box& b) { return std::make_shared<BoxIndicator>(b); }
AnalyticPtr make_gaussian(double center) { return std::make_shared<GaussianFn>(center); }
AnalyticPtr make_hat() { return std::make_shared<HatFn>(); }
AnalyticPtr make_step(std::vector<double> levels, double x0, double cell_width) {
  return std::make_shared<StepFn>(std::move(levels), x0, cell_width);
}
AnalyticPtr make_sum(AnalyticPtr a, AnalyticPtr b) {
  return std::make_shared<SumFn>(std::move(a), std::move(b));
}
AnalyticPtr make_scaled(Complex c, AnalyticPtr inner) {
  return std::make_shared<ScaledFn>(c, std::move(inner));
}
AnalyticPtr make_dilated(double lambda, AnalyticPtr inner) {
  return std::make_shared<DilatedFn>(lambda, std::move(inner));
}
AnalyticPtr make_translated(double y, AnalyticPtr inner) {
  return std::make_shared<TranslatedFn>(y, std::move(inner));
}
AnalyticPtr make_modulated(double xi, AnalyticPtr inner) {
  return std::make_shared<ModulatedFn>(xi, std::move(inner));
}
AnalyticPtr make_restricted(const Box& b, AnalyticPtr inner) {
  return std::make_shared<RestrictedFn>(b, std::move(inner));
}

GridFunction::GridFunction(int dim, std::array<double, 2> origin, double spacing,
                           std::array<int, 2> npts, std::vector<Complex> samples,
                           AnalyticPtr source, Box support, std::string name)
    : dim_(dim),
      origin_(origin),
      spacing_(spacing),
      npts_(npts),
      samples_(std::move(samples)),
      source_(std::move(source)),
      support_(support),
      name_(std::move(name)) {
  max_abs_ = max_abs_of(samples_);
}

Complex GridFunction::eval_point(double x) const {
  if (source_) return source_->eval1(x);
  if (dim_ != 1) throw std::logic_error("eval_point: sourceless 2-D function");
  const double t = (x - origin_[0]) / spacing_ - 0.5;
  if (t <= -1.0 || t >= static_cast<double>(npts_[0])) return {0.0, 0.0};
  const int i = static_cast<int>(std::floor(t));
  const double w = t - i;
  auto at = [this](int k) -> Complex {
    if (k < 0 || k >= npts_[0]) return {0.0, 0.0};
    return samples_[static_cast<std::size_t>(k)];
  };
  return at(i) * (1.0 - w) + at(i + 1) * w;
}

GridFunction sample(const AnalyticPtr& desc, const Box& box, int n_per_axis,
                    const std::string& name) {
  if (!desc) throw std::invalid_argument("sample: null descriptor");
  if (n_per_axis < 2) throw std::invalid_argument("sample: need n >= 2");
  if (box.volume() <= 0.0) throw std::invalid_argument("sample: degenerate box");
  const int d = box.dim;
  const double h = (box.hi[0] - box.lo[0]) / n_per_axis;
  std::array<int, 2> shape{n_per_axis, d == 2 ? n_per_axis : 1};
  std::vector<Complex> vals;
  vals.reserve(static_cast<std::size_t>(shape[0]) * shape[1]);
  for (int j = 0; j < shape[1]; ++j) {
    for (int i = 0; i < shape[0]; ++i) {
      std::array<double, 2> x{box.lo[0] + (i + 0.5) * h,
                              d == 2 ? box.lo[1] + (j + 0.5) * h : 0.0};
      vals.push_back(desc->eval(x, d));
    }
  }
  return GridFunction(d, {box.lo[0], d == 2 ? box.lo[1] : 0.0}, h, shape,
                      std::move(vals), desc, box, name);
}

GridFunction dilate(const GridFunction& f, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
  if (lambda == 1.0) return f;
  Box b = f.support();
  for (int k = 0; k < f.dim(); ++k) {
    b.lo[k] /= lambda;
    b.hi[k] /= lambda;
  }
  if (f.source()) {
    return sample(make_dilated(lambda, f.source()), b, f.shape()[0], f.name());
  }
  if (f.dim() != 1) throw std::logic_error("dilate: sourceless 2-D function");
  // No source: resample by interpolation on the scaled grid.
  const int n = f.shape()[0];
  const double h = (b.hi[0] - b.lo[0]) / n;
  std::vector<Complex> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    vals[static_cast<std::size_t>(i)] = f.eval_point(lambda * (b.lo[0] + (i + 0.5) * h));
  }
  return GridFunction(1, {b.lo[0], 0.0}, h, {n, 1}, std::move(vals), nullptr, b, f.name());
}

GridFunction translate(const GridFunction& f, double y) {
  if (f.dim() != 1) throw std::logic_error("translate: 1-D only");
  const double cells = y / f.spacing();
  const bool aligned = std::fabs(cells - std::round(cells)) < 1e-12;
  Box b = f.support();
  b.lo[0] += y;
  b.hi[0] += y;
  AnalyticPtr src = f.source() ? make_translated(y, f.source()) : nullptr;
  if (aligned || !f.source()) {
    // Exact origin shift; samples are unchanged.
    return GridFunction(1, {f.origin()[0] + y, 0.0}, f.spacing(), f.shape(),
                        f.samples(), src, b, f.name());
  }
  return sample(src, b, f.shape()[0], f.name());
}

GridFunction modulate(const GridFunction& f, double xi) {
  if (f.dim() != 1) throw std::logic_error("modulate: 1-D only");
  std::vector<Complex> vals(f.samples());
  for (int i = 0; i < f.shape()[0]; ++i) {
    const double ph = 2.0 * kPi * xi * f.coord(0, i);
    vals[static_cast<std::size_t>(i)] *= Complex{std::cos(ph), std::sin(ph)};
  }
  AnalyticPtr src = f.source() ? make_modulated(xi, f.source()) : nullptr;
  return GridFunction(1, f.origin(), f.spacing(), f.shape(), std::move(vals), src,
                      f.support(), f.name());
}

GridFunction restrict_to(const GridFunction& f, double lo, double hi) {
  if (f.dim() != 1) throw std::logic_error("restrict_to: 1-D only");
  std::vector<Complex> vals(f.samples());
  for (int i = 0; i < f.shape()[0]; ++i) {
    const double x = f.coord(0, i);
    if (x < lo || x >= hi) vals[static_cast<std::size_t>(i)] = {0.0, 0.0};
  }
  Box b = f.support();
  b.lo[0] = std::max(b.lo[0], lo);
  b.hi[0] = std::min(b.hi[0], hi);
  if (b.hi[0] < b.lo[0]) b.hi[0] = b.lo[0];
  AnalyticPtr src =
      f.source() ? make_restricted(Box::interval(lo, hi), f.source()) : nullptr;
  return GridFunction(1, f.origin(), f.spacing(), f.shape(), std::move(vals), src, b,
                      f.name());
}

ExtNonneg integrate(const GridFunction& f,
                    const std::function<ExtNonneg(const Complex&)>& integrand) {
  const double vol = f.cell_volume();
  double acc = 0.0;
  for (const auto& z : f.samples()) {
    const ExtNonneg v = integrand(z);
    if (v.is_infinite()) return ExtNonneg::infinity();
    acc += v.value();
  }
  return ExtNonneg::from(acc * vol);
}

double integral_abs(const GridFunction& f) {
  double acc = 0.0;
  for (const auto& z : f.samples()) acc += std::abs(z);
  return acc * f.cell_volume();
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
  if (f.dim() == 2) {
    // 2-D products only for identical grids.
    if (g.dim() != 2 || g.shape() != f.shape() || g.spacing() != f.spacing() ||
        g.origin() != f.origin()) {
      throw std::logic_error("pointwise_product: 2-D factors must share a grid");
    }
    std::vector<Complex> vals(f.samples());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] *= g.samples()[i];
    return GridFunction(2, f.origin(), f.spacing(), f.shape(), std::move(vals), nullptr,
                        f.support(), f.name() + "*" + g.name());
  }
  if (g.dim() != 1) throw std::logic_error("pointwise_product: 1-D only");
  std::vector<Complex> vals(f.samples());
  for (int i = 0; i < f.shape()[0]; ++i) {
    vals[static_cast<std::size_t>(i)] *= g.eval_point(f.coord(0, i));
  }
  Box b = f.support();
  b.lo[0] = std::max(b.lo[0], g.support().lo[0]);
  b.hi[0] = std::min(b.hi[0], g.support().hi[0]);
  if (b.hi[0] < b.lo[0]) b.hi[0] = b.lo[0];
  return GridFunction(1, f.origin(), f.spacing(), f.shape(), std::move(vals), nullptr, b,
                      f.name() + "*" + g.name());
}

GridFunction scale(const GridFunction& f, double c) {
  std::vector<Complex> vals(f.samples());
  for (auto& z : vals) z *= c;
  AnalyticPtr src = f.source() ? make_scaled(Complex{c, 0.0}, f.source()) : nullptr;
  return GridFunction(f.dim(), f.origin(), f.spacing(), f.shape(), std::move(vals), src,
                      f.support(), f.name());
}

GridFunction add(const GridFunction& f, const GridFunction& g) {
  if (f.dim() != 1 || g.dim() != 1) throw std::logic_error("add: 1-D only");
  std::vector<Complex> vals(f.samples());
  for (int i = 0; i < f.shape()[0]; ++i) {
    vals[static_cast<std::size_t>(i)] += g.eval_point(f.coord(0, i));
  }
  Box b = f.support();
  b.lo[0] = std::min(b.lo[0], g.support().lo[0]);
  b.hi[0] = std::max(b.hi[0], g.support().hi[0]);
  AnalyticPtr src = (f.source() && g.source()) ? make_sum(f.source(), g.source()) : nullptr;
  return GridFunction(1, f.origin(), f.spacing(), f.shape(), std::move(vals), src, b,
                      f.name() + "+" + g.name());
}

std::vector<GridFunction> corpus(std::uint64_t seed) {
  std::vector<GridFunction> out;
  out.push_back(sample(make_box_indicator(Box::interval(0.0, 1.0)),
                       Box::interval(0.0, 1.0), 1024, "box01"));
  out.push_back(sample(make_gaussian(), Box::interval(-6.0, 6.0), 4096, "gaussian"));
  out.push_back(sample(make_hat(), Box::interval(-2.0, 2.0), 2048, "hat"));
  out.push_back(sample(make_sum(make_gaussian(-2.0), make_gaussian(2.0)),
                       Box::interval(-8.0, 8.0), 4096, "twobump"));

  // 16 uniform levels from a splitmix-style generator: bit-stable everywhere.
  std::vector<double> levels(16);
  std::uint64_t state = seed;
  for (auto& l : levels) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    l = static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  out.push_back(sample(make_step(levels, 0.0, 0.25), Box::interval(0.0, 4.0), 1024, "step"));
  return out;
}

GridFunction corpus_function(const std::string& name, std::uint64_t seed) {
  for (auto& f : corpus(seed)) {
    if (f.name() == name) return f;
  }
  throw std::invalid_argument("unknown function tag: " + name);
}

}  // namespace orlab
