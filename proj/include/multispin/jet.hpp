#pragma once

#include <map>
#include <string>

#include "multispin/gaussian_rational.hpp"

namespace multispin {

/*
 * First-order jet: value + sum_k gradient[k] * d(label_k), with all products of
 * two differentials truncated to zero.  Used to carry infinitesimal group
 * parameters exactly.  Zero gradient entries are never stored, so equality is
 * structural.
 */
class JetScalar {
 public:
  using Gradient = std::map<std::string, GaussianRational>;

  JetScalar() = default;
  JetScalar(GaussianRational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  JetScalar(T value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// value + scale * d(label)
  static JetScalar variable(const std::string& label, GaussianRational value = {}, GaussianRational scale = 1);

  const GaussianRational& value() const { return value_; }
  const Gradient& gradient() const { return gradient_; }
  /// Coefficient of d(label); zero when absent.
  GaussianRational derivative(const std::string& label) const;
  bool is_constant() const { return gradient_.empty(); }
  bool is_zero() const { return value_.is_zero() && gradient_.empty(); }

  JetScalar conj() const;

  JetScalar operator-() const;
  JetScalar& operator+=(const JetScalar& rhs);
  JetScalar& operator-=(const JetScalar& rhs);
  JetScalar& operator*=(const JetScalar& rhs);
  JetScalar& operator*=(const GaussianRational& rhs);

  friend JetScalar operator+(JetScalar a, const JetScalar& b) { return a += b; }
  friend JetScalar operator-(JetScalar a, const JetScalar& b) { return a -= b; }
  friend JetScalar operator*(JetScalar a, const JetScalar& b) { return a *= b; }
  friend JetScalar operator*(JetScalar a, const GaussianRational& b) { return a *= b; }
  friend JetScalar operator*(const GaussianRational& b, JetScalar a) { return a *= b; }

  friend bool operator==(const JetScalar& a, const JetScalar& b) {
    return a.value_ == b.value_ && a.gradient_ == b.gradient_;
  }

  std::string to_string() const;

 private:
  void prune();

  GaussianRational value_;
  Gradient gradient_;
};

}  // namespace multispin
