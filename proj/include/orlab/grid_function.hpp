#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orlab/ext_nonneg.hpp"

namespace orlab {

using Complex = std::complex<double>;

/// Closed axis-aligned box in 1 or 2 dimensions.
struct Box {
  int dim = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{0.0, 0.0};

  static Box interval(double a, double b) { return Box{1, {a, 0.0}, {b, 0.0}}; }
  static Box square(double a, double b) { return Box{2, {a, a}, {b, b}}; }

  double volume() const {
    double v = 1.0;
    for (int k = 0; k < dim; ++k) v *= (hi[k] - lo[k]);
    return v;
  }
  bool contains(const std::array<double, 2>& x) const {
    for (int k = 0; k < dim; ++k) {
      if (x[k] < lo[k] || x[k] > hi[k]) return false;
    }
    return true;
  }
};

/// Exactly evaluable pointwise descriptor, so transforms can resample
/// without interpolation error.
class Analytic {
 public:
  virtual ~Analytic() = default;
  virtual Complex eval(const std::array<double, 2>& x, int dim) const = 0;
  Complex eval1(double x) const { return eval({x, 0.0}, 1); }
};

using AnalyticPtr = std::shared_ptr<const Analytic>;

AnalyticPtr make_box_indicator(const Box& b);
AnalyticPtr make_gaussian(double center = 0.0);  // e^{-pi (x-c)^2}, unit mass
AnalyticPtr make_hat();                          // max(0, 1 - |x|)
AnalyticPtr make_step(std::vector<double> levels, double x0, double cell_width);
AnalyticPtr make_sum(AnalyticPtr a, AnalyticPtr b);
AnalyticPtr make_scaled(Complex c, AnalyticPtr inner);
AnalyticPtr make_dilated(double lambda, AnalyticPtr inner);
AnalyticPtr make_translated(double y, AnalyticPtr inner);
AnalyticPtr make_modulated(double xi, AnalyticPtr inner);
AnalyticPtr make_restricted(const Box& b, AnalyticPtr inner);

/// Uniformly midpoint-sampled function on a box. Immutable after
/// construction; all transforms return new values.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(int dim, std::array<double, 2> origin, double spacing,
               std::array<int, 2> npts, std::vector<Complex> samples,
               AnalyticPtr source, Box support, std::string name = "");

  int dim() const { return dim_; }
  double spacing() const { return spacing_; }
  const std::array<double, 2>& origin() const { return origin_; }
  const std::array<int, 2>& shape() const { return npts_; }
  std::size_t size() const { return samples_.size(); }
  const std::vector<Complex>& samples() const { return samples_; }
  const AnalyticPtr& source() const { return source_; }
  const Box& support() const { return support_; }
  const std::string& name() const { return name_; }

  /// Midpoint coordinate of sample index along an axis.
  double coord(int axis, int index) const {
    return origin_[axis] + (index + 0.5) * spacing_;
  }
  double cell_volume() const {
    double v = 1.0;
    for (int k = 0; k < dim_; ++k) v *= spacing_;
    return v;
  }
  double max_abs() const { return max_abs_; }

  /// Pointwise value: analytic source when present, linear interpolation of
  /// the samples otherwise (zero outside the sampled box). 1-D only.
  Complex eval_point(double x) const;

 private:
  int dim_ = 1;
  std::array<double, 2> origin_{0.0, 0.0};
  double spacing_ = 1.0;
  std::array<int, 2> npts_{0, 1};
  std::vector<Complex> samples_;
  AnalyticPtr source_;
  Box support_;
  std::string name_;
  double max_abs_ = 0.0;
};

/// Midpoint sampling of a descriptor with n points per axis.
GridFunction sample(const AnalyticPtr& desc, const Box& box, int n_per_axis,
                    const std::string& name = "");

/// f(lambda x) on the scaled grid box/lambda with the same sample count, so
/// source-backed dilations resample exactly at the scaled midpoints.
GridFunction dilate(const GridFunction& f, double lambda);

/// f(x - y): origin shift when y is grid-aligned, resampling otherwise.
GridFunction translate(const GridFunction& f, double y);

/// e^{2 pi i xi x} f(x).
GridFunction modulate(const GridFunction& f, double xi);

/// Zeroes samples whose midpoint falls outside the box (half-open on the
/// right: cells are attributed by midpoint membership).
GridFunction restrict_to(const GridFunction& f, double lo, double hi);

/// Midpoint-rule integral of a pointwise map of the samples; infinity in any
/// cell makes the whole integral infinite.
ExtNonneg integrate(const GridFunction& f,
                    const std::function<ExtNonneg(const Complex&)>& integrand);

/// integral of |f| (plain double; finite for sampled data).
double integral_abs(const GridFunction& f);

/// f * g sampled on f's grid; g evaluated through its source or by
/// interpolation.
GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);

GridFunction scale(const GridFunction& f, double c);
GridFunction add(const GridFunction& f, const GridFunction& g);  // on f's grid

/// The reproducible test corpus: box01, gaussian, hat, twobump, and a seeded
/// random 16-level step function on [0,4].
std::vector<GridFunction> corpus(std::uint64_t seed);

/// Corpus member by name (resamples nothing; the corpus is deterministic).
GridFunction corpus_function(const std::string& name, std::uint64_t seed);

}  // namespace orlab
