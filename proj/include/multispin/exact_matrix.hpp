#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multispin/gaussian_rational.hpp"

namespace multispin {

struct EntryDifference {
  std::size_t row;
  std::size_t col;
  GaussianRational lhs;
  GaussianRational rhs;

  std::string describe() const;
};

/*
 * Dense row-major matrix of GaussianRational.  Dimensions here never exceed
 * a few hundred, so no sparsity structure is kept; multiplication only skips
 * zero left-hand entries, which is where the entire-algebra units spend most
 * of their time.
 *
 * Shape mismatches throw std::invalid_argument.
 */
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix zero(std::size_t n) { return {n, n}; }
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix column(std::span<const GaussianRational> values);
  static ExactMatrix row(std::span<const GaussianRational> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  ExactMatrix transpose() const;
  /// Conjugate transpose.
  ExactMatrix adjoint() const;
  GaussianRational trace() const;

  /// First entry (row-major) where the two matrices disagree; nullopt when equal.
  std::optional<EntryDifference> first_difference(const ExactMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// AB - BA.  Both operands must be square of the same order.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix power(const ExactMatrix& a, unsigned exponent);

/// Rank by fraction-free (Bareiss) elimination over the Gaussian integers.
std::size_t rank(const ExactMatrix& a);

/// Some X with A X == B, by Gauss-Jordan over Q(i); nullopt when the system
/// is inconsistent.  Free variables are set to zero, so the solution is the
/// unique one whenever A has full column rank.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);
/// True iff prod_k (A - r_k I) == 0.
bool minimal_poly_check(const ExactMatrix& a, std::span<const GaussianRational> roots);

}  // namespace multispin
