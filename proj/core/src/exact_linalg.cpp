#include "radokit/exact_linalg.hpp"

#include <utility>

namespace radokit {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : DenseMatrix<Integer>(rows, cols) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("integer matrix must have at least one row and column");
  }
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Integer> data)
    : DenseMatrix<Integer>(rows, cols, std::move(data)) {
  if (rows == 0 || cols == 0) {
    throw InvalidArgument("integer matrix must have at least one row and column");
  }
}

IntegerMatrix IntegerMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidArgument("integer matrix must have at least one row and column");
  }
  const std::size_t d = rows.front().size();
  std::vector<Integer> data;
  data.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw InvalidArgument("ragged matrix rows");
    for (std::int64_t v : r) data.emplace_back(static_cast<long>(v));
  }
  return IntegerMatrix(rows.size(), d, std::move(data));
}

RationalMatrix IntegerMatrix::to_rational() const {
  std::vector<Rational> data;
  data.reserve(this->data().size());
  for (const auto& v : this->data()) data.emplace_back(v);
  return RationalMatrix(rows(), cols(), std::move(data));
}

RowReduction row_reduce(const RationalMatrix& m) {
  RowReduction out{m, 0, {}};
  RationalMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::swap(a(sel, c), a(pivot_row, c));
      }
    }
    const Rational inv = 1 / a(pivot_row, col);
    for (std::size_t c = col; c < cols; ++c) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        a(r, c) -= factor * a(pivot_row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank; }

std::optional<RationalVector> solve_combination(
    std::span<const IntegerVector> vectors, const IntegerVector& target) {
  const std::size_t n = vectors.size();
  const std::size_t len = target.size();
  for (const auto& v : vectors) {
    if (v.size() != len) {
      throw InvalidArgument("solve_combination: vectors of differing length");
    }
  }
  // Augmented system [v_0 ... v_{n-1} | target].
  RationalMatrix aug(len, n + 1);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t l = 0; l < n; ++l) aug(r, l) = vectors[l][r];
    aug(r, n) = target[r];
  }
  const RowReduction red = row_reduce(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == n) {
    return std::nullopt;
  }
  RationalVector coeffs(n);
  for (std::size_t i = 0; i < red.rank; ++i) {
    coeffs[red.pivot_cols[i]] = red.reduced(i, n);
  }
  return coeffs;
}

std::vector<RationalVector> kernel_basis(const IntegerMatrix& a) {
  const RowReduction red = row_reduce(a.to_rational());
  const std::size_t d = a.cols();
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < d; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(d);
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      v[red.pivot_cols[i]] = -red.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer lcm_denominators(const RationalMatrix& m) {
  Integer acc = 1;
  for (const auto& q : m.data()) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), q.get_den_mpz_t());
  }
  return acc;
}

RationalVector multiply(const IntegerMatrix& a, std::span<const Rational> v) {
  if (v.size() != a.cols()) throw InvalidArgument("multiply: length mismatch");
  RationalVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  }
  return out;
}

IntegerVector multiply(const IntegerMatrix& a, std::span<const Integer> v) {
  if (v.size() != a.cols()) throw InvalidArgument("multiply: length mismatch");
  IntegerVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  }
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace radokit
