#pragma once

// Exact rational linear algebra over GMP integers and rationals.
//
// Every routine here is exact: entries are arbitrary-precision and no value
// is ever rounded. Pivoting is deterministic (first nonzero entry, scanning
// columns left to right) so reduced forms and derived witnesses are
// reproducible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "radokit/errors.hpp"

namespace radokit {

using Integer = mpz_class;
// mpq_class keeps values canonical: positive denominator, reduced, 0 == 0/1.
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

template <typename T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw InvalidArgument("matrix entry count does not match dimensions");
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;

// The k x d system A. Both dimensions are at least one.
class IntegerMatrix : public DenseMatrix<Integer> {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);

  // Convenience for literals in tests and tools.
  static IntegerMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  RationalMatrix to_rational() const;
};

struct RowReduction {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row-echelon form by Gauss-Jordan elimination.
RowReduction row_reduce(const RationalMatrix& m);

// Coefficients c with sum_l c_l * vectors[l] == target, or nullopt if target
// is outside the rational span. Free variables are set to zero.
std::optional<RationalVector> solve_combination(
    std::span<const IntegerVector> vectors, const IntegerVector& target);

// Basis of the rational kernel of A, one vector per free column.
std::vector<RationalVector> kernel_basis(const IntegerMatrix& a);

// Least common multiple of all entry denominators (1 for an empty matrix).
Integer lcm_denominators(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// A * v evaluated exactly.
RationalVector multiply(const IntegerMatrix& a, std::span<const Rational> v);
IntegerVector multiply(const IntegerMatrix& a, std::span<const Integer> v);

bool is_zero(std::span<const Rational> v);
bool is_zero(std::span<const Integer> v);

}  // namespace radokit
