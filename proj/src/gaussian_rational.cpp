#include "multispin/gaussian_rational.hpp"

#include <cctype>
#include <stdexcept>

namespace multispin {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::optional<mpz_class> integer_sqrt(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class root = sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

// Search cap for the two-squares decomposition of an integer.
constexpr unsigned long kTwoSquaresSearchLimit = 2000000;

std::optional<std::pair<mpz_class, mpz_class>> integer_two_squares(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class limit = sqrt(n);
  if (limit > kTwoSquaresSearchLimit) return std::nullopt;
  // Largest x first gives the most "real" answer for perfect squares.
  for (mpz_class x = limit; x >= 0; --x) {
    mpz_class rest = n - x * x;
    if (auto y = integer_sqrt(rest)) {
      if (*y > x) break;  // pairs are symmetric; nothing new past the diagonal
      return std::make_pair(x, *y);
    }
  }
  return std::nullopt;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  Rational out;
  if (slash == std::string_view::npos) {
    out = Rational(parse_integer(text));
  } else {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    out = Rational(num, den);
  }
  out.canonicalize();
  return out;
}

std::string rational_to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& value) {
  auto num = integer_sqrt(value.get_num());
  auto den = integer_sqrt(value.get_den());
  if (!num || !den) return std::nullopt;
  Rational out(*num, *den);
  out.canonicalize();
  return out;
}

std::optional<std::pair<Rational, Rational>> sum_of_two_squares(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  // a/b = (a b) / b^2, so it suffices to split the integer a*b.
  mpz_class den = value.get_den();
  auto split = integer_two_squares(value.get_num() * den);
  if (!split) return std::nullopt;
  Rational x(split->first, den);
  Rational y(split->second, den);
  x.canonicalize();
  y.canonicalize();
  return std::make_pair(x, y);
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Rational GaussianRational::norm() const { return Rational(re_ * re_ + im_ * im_); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (rhs.is_real()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = rhs.norm();
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  auto part = [](const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
  };
  if (sgn(im_) == 0) return part(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = part(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  return part(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace multispin
