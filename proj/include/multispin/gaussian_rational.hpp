#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace multispin {

using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" (den > 0), so dumps are byte-stable: 0 -> "0/1".
std::string rational_to_string(const Rational& value);

/// Exact square root when the argument is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

/// Finds (x, y) rational with x^2 + y^2 == value, searching a bounded range.
/// Returns nullopt when no decomposition exists or the search bound is hit.
std::optional<std::pair<Rational, Rational>> sum_of_two_squares(const Rational& value);

/*
 * Exact complex rational a + b i.  Both parts are kept canonical (reduced,
 * positive denominator) after every operation, so operator== is exact
 * structural equality.
 */
class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral T>
  GaussianRational(T re) : re_(static_cast<long>(re)) {}  // NOLINT(google-explicit-constructor)

  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im);

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }

  GaussianRational conj() const { return {re_, Rational(-im_)}; }
  /// |z|^2
  Rational norm() const;

  GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form, e.g. "3/4", "-2i", "1/2+3/5i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace multispin
