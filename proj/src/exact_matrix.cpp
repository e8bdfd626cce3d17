#include "multispin/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace multispin {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw std::invalid_argument(msg.str());
  }
}

void require_square_pair(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    std::ostringstream msg;
    msg << what << ": operands must be square of equal order, got " << a.rows() << "x" << a.cols() << " and "
        << b.rows() << "x" << b.cols();
    throw std::invalid_argument(msg.str());
  }
}

// Element of Z[i]; only what the Bareiss sweep needs.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    throw std::logic_error("Bareiss elimination: inexact division in Z[i]");
  }
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {re, im};
}

mpz_class lcm_of_row_denominators(const ExactMatrix& a, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).im().get_den_mpz_t());
  }
  return l;
}

}  // namespace

std::string EntryDifference::describe() const {
  std::ostringstream os;
  os << "(" << row << "," << col << "): " << lhs << " != " << rhs;
  return os.str();
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::column(std::span<const GaussianRational> values) {
  ExactMatrix m(values.size(), 1);
  for (std::size_t k = 0; k < values.size(); ++k) m(k, 0) = values[k];
  return m;
}

ExactMatrix ExactMatrix::row(std::span<const GaussianRational> values) {
  ExactMatrix m(1, values.size());
  for (std::size_t k = 0; k < values.size(); ++k) m(0, k) = values[k];
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) {
    if (!z.is_zero()) z *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream msg;
    msg << "matrix *: inner dimensions differ (" << a.rows_ << "x" << a.cols_ << " * " << b.rows_ << "x" << b.cols_
        << ")";
    throw std::invalid_argument(msg.str());
  }
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out(*this);
  for (auto& z : out.data_) z = -z;
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  }
  return out;
}

GaussianRational ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  GaussianRational t;
  for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
  return t;
}

std::optional<EntryDifference> ExactMatrix::first_difference(const ExactMatrix& other) const {
  require_same_shape(*this, other, "first_difference");
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!((*this)(r, c) == other(r, c))) return EntryDifference{r, c, (*this)(r, c), other(r, c)};
    }
  }
  return std::nullopt;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  require_square_pair(a, b, "commutator");
  return a * b - b * a;
}

ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) {
  require_square_pair(a, b, "anticommutator");
  return a * b + b * a;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t n = a.rows(), m = a.cols(), k = b.cols();
  ExactMatrix aug(n, m + k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < k; ++c) aug(r, m + c) = b(r, c);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m && row < n; ++c) {
    std::size_t p = row;
    while (p < n && aug(p, c).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < m + k; ++j) std::swap(aug(p, j), aug(row, j));
    const GaussianRational inv = GaussianRational(1) / aug(row, c);
    for (std::size_t j = c; j < m + k; ++j) aug(row, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || aug(r, c).is_zero()) continue;
      const GaussianRational f = aug(r, c);
      for (std::size_t j = c; j < m + k; ++j) aug(r, j) -= f * aug(row, j);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!aug(r, m + c).is_zero()) return std::nullopt;
    }
  }
  ExactMatrix x(m, k);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) x(pivot_cols[r], c) = aug(r, m + c);
  }
  return x;
}

ExactMatrix power(const ExactMatrix& a, unsigned exponent) {
  if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
  ExactMatrix out = ExactMatrix::identity(a.rows());
  for (unsigned k = 0; k < exponent; ++k) out = out * a;
  return out;
}

std::size_t rank(const ExactMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<GaussInt>> m(rows, std::vector<GaussInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = lcm_of_row_denominators(a, r);
    for (std::size_t c = 0; c < cols; ++c) {
      Rational re = a(r, c).re() * scale;
      Rational im = a(r, c).im() * scale;
      m[r][c] = {re.get_num(), im.get_num()};
    }
  }

  GaussInt prev{1, 0};
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[pivot_row]);
    const GaussInt& pivot = m[pivot_row][c];
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const GaussInt lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = exact_div(sub(mul(pivot, m[i][j]), mul(lead, m[pivot_row][j])), prev);
      }
      m[i][c] = GaussInt{0, 0};
    }
    prev = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

bool minimal_poly_check(const ExactMatrix& a, std::span<const GaussianRational> roots) {
  if (!a.is_square()) throw std::invalid_argument("minimal_poly_check: matrix must be square");
  const ExactMatrix id = ExactMatrix::identity(a.rows());
  ExactMatrix acc = id;
  for (const auto& r : roots) acc = acc * (a - id * r);
  return acc.is_zero();
}

}  // namespace multispin
