#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orlab {

/// A value in [0, inf]. Young functions and modular integrals take values
/// here, so infinity is a first-class tagged state rather than an IEEE
/// sentinel. Arithmetic saturates; 0 * inf == 0 (integrands vanishing a.e.).
class ExtNonneg {
 public:
  ExtNonneg() = default;

  static ExtNonneg infinity() {
    ExtNonneg e;
    e.infinite_ = true;
    e.value_ = std::numeric_limits<double>::infinity();
    return e;
  }

  /// Finite nonnegative values map to themselves; +inf and values past the
  /// double range map to the infinite state. Negative or NaN input is a bug.
  static ExtNonneg from(double v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtNonneg: NaN");
    if (v < 0.0) throw std::invalid_argument("ExtNonneg: negative value " + std::to_string(v));
    if (std::isinf(v) || v >= kSaturation) return infinity();
    ExtNonneg e;
    e.value_ = v;
    return e;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  /// Finite value; throws on the infinite state.
  double value() const {
    if (infinite_) throw std::logic_error("ExtNonneg: value() on infinity");
    return value_;
  }

  /// Finite value, or IEEE +inf for the infinite state. Handy for printing
  /// and for ordering against doubles.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return from(a.value_ + b.value_);
  }

  ExtNonneg& operator+=(const ExtNonneg& o) {
    *this = *this + o;
    return *this;
  }

  friend ExtNonneg operator*(const ExtNonneg& a, const ExtNonneg& b) {
    // 0 * inf == 0 by convention.
    if (a.infinite_) return (b.infinite_ || b.value_ > 0.0) ? infinity() : from(0.0);
    if (b.infinite_) return (a.value_ > 0.0) ? infinity() : from(0.0);
    return from(a.value_ * b.value_);
  }

  friend ExtNonneg operator*(double a, const ExtNonneg& b) { return from(a) * b; }
  friend ExtNonneg operator*(const ExtNonneg& a, double b) { return a * from(b); }

  /// inf/inf is ambiguous; callers handle that case explicitly.
  friend ExtNonneg operator/(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.infinite_ && b.infinite_) throw std::logic_error("ExtNonneg: inf/inf");
    if (a.infinite_) return infinity();
    if (b.infinite_) return from(0.0);
    if (b.value_ == 0.0) {
      return a.value_ == 0.0 ? from(0.0) : infinity();
    }
    return from(a.value_ / b.value_);
  }

  friend bool operator==(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtNonneg& a, const ExtNonneg& b) { return !(a == b); }
  friend bool operator<(const ExtNonneg& a, const ExtNonneg& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtNonneg& a, const ExtNonneg& b) { return b < a; }
  friend bool operator<=(const ExtNonneg& a, const ExtNonneg& b) { return !(b < a); }
  friend bool operator>=(const ExtNonneg& a, const ExtNonneg& b) { return !(a < b); }

  friend bool operator<(const ExtNonneg& a, double b) { return a < from_cmp(b); }
  friend bool operator>(const ExtNonneg& a, double b) { return a > from_cmp(b); }
  friend bool operator<=(const ExtNonneg& a, double b) { return a <= from_cmp(b); }
  friend bool operator>=(const ExtNonneg& a, double b) { return a >= from_cmp(b); }
  friend bool operator<(double a, const ExtNonneg& b) { return from_cmp(a) < b; }
  friend bool operator>(double a, const ExtNonneg& b) { return from_cmp(a) > b; }
  friend bool operator<=(double a, const ExtNonneg& b) { return from_cmp(a) <= b; }
  friend bool operator>=(double a, const ExtNonneg& b) { return from_cmp(a) >= b; }

  friend std::ostream& operator<<(std::ostream& os, const ExtNonneg& e) {
    if (e.infinite_) return os << "inf";
    return os << e.value_;
  }

  std::string str() const;

 private:
  // Comparisons against raw doubles must tolerate +inf on the double side.
  static ExtNonneg from_cmp(double v) {
    if (std::isinf(v) && v > 0) return infinity();
    return from(v);
  }

  static constexpr double kSaturation = 1e308;

  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace orlab
