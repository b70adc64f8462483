#include "doctest.h"

#include <random>
#include <sstream>

#include "radokit/errors.hpp"
#include "radokit/exact_linalg.hpp"
#include "radokit/text_io.hpp"

using namespace radokit;

namespace {

// Rank by brute force over square minors, using a cofactor determinant.
Rational det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][c] * det(minor);
    sum += (c % 2 == 0) ? term : Rational(-term);
  }
  return sum;
}

std::size_t minor_rank(const RationalMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (unsigned rmask = 0; rmask < (1u << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      for (unsigned cmask = 0; cmask < (1u << cols); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
        std::vector<std::vector<Rational>> m;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!(rmask >> r & 1u)) continue;
          std::vector<Rational> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (cmask >> c & 1u) row.push_back(a(r, c));
          }
          m.push_back(row);
        }
        if (det(m) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("row_reduce of a small system") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{2, 4, 6}, {1, 3, 5}});
  const RowReduction red = row_reduce(a.to_rational());
  CHECK(red.rank == 2);
  CHECK(red.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(red.reduced(0, 0) == 1);
  CHECK(red.reduced(0, 1) == 0);
  CHECK(red.reduced(0, 2) == -1);
  CHECK(red.reduced(1, 2) == 2);
}

TEST_CASE("pivot is the first nonzero column") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{0, 0, 3}, {0, 2, 1}});
  const RowReduction red = row_reduce(a.to_rational());
  CHECK(red.pivot_cols == std::vector<std::size_t>{1, 2});
  CHECK(red.reduced(0, 1) == 1);
  CHECK(red.reduced(0, 2) == 0);
}

TEST_CASE("kernel of the Schur equation") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{1, 1, -1}});
  const auto basis = kernel_basis(a);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(is_zero(std::span<const Rational>(multiply(a, v))));
  CHECK(basis[0] == RationalVector{-1, 1, 0});
  CHECK(basis[1] == RationalVector{1, 0, 1});
}

TEST_CASE("kernel of a full-rank square matrix is trivial") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(kernel_basis(a).empty());
  CHECK(rank(a.to_rational()) == 2);
}

TEST_CASE("fractions are canonical") {
  const IntegerMatrix a = IntegerMatrix::from_rows({{3, 2}});
  const auto basis = kernel_basis(a);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == Rational(-2, 3));
  CHECK(basis[0][0].get_den() == 3);
  CHECK(basis[0][0].get_num() == -2);
  CHECK(lcm_denominators(RationalMatrix(1, 2, {Rational(1, 6), Rational(3, 4)})) == 12);
}

TEST_CASE("entries beyond 64 bits stay exact") {
  const Integer big("123456789012345678901234567890");
  IntegerMatrix a(1, 2, {big, big + 1});
  const auto basis = kernel_basis(a);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == Rational(-(big + 1), big));
  CHECK(is_zero(std::span<const Rational>(multiply(a, basis[0]))));
}

TEST_CASE("solve_combination") {
  const std::vector<IntegerVector> vs{{1, 0}, {1, 1}};
  const auto sol = solve_combination(vs, IntegerVector{3, 5});
  REQUIRE(sol);
  CHECK((*sol)[0] == -2);
  CHECK((*sol)[1] == 5);

  const std::vector<IntegerVector> parallel{{2, 4}};
  const auto half = solve_combination(parallel, IntegerVector{1, 2});
  REQUIRE(half);
  CHECK((*half)[0] == Rational(1, 2));
  CHECK_FALSE(solve_combination(parallel, IntegerVector{1, 3}));

  const std::vector<IntegerVector> none;
  CHECK(solve_combination(none, IntegerVector{0, 0}));
  CHECK_FALSE(solve_combination(none, IntegerVector{0, 1}));
}

TEST_CASE("free variables are set to zero") {
  const std::vector<IntegerVector> vs{{1}, {2}};
  const auto sol = solve_combination(vs, IntegerVector{4});
  REQUIRE(sol);
  CHECK((*sol)[0] == 4);
  CHECK((*sol)[1] == 0);
}

TEST_CASE("rank agrees with minors on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int n = 0; n < 300; ++n) {
    const std::size_t rows = 1 + rng() % 3;
    const std::size_t cols = 1 + rng() % 4;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (auto& r : m) {
      for (auto& v : r) v = entry(rng);
    }
    const IntegerMatrix a = IntegerMatrix::from_rows(m);
    const std::size_t r = rank(a.to_rational());
    CHECK(r == minor_rank(a.to_rational()));
    const auto basis = kernel_basis(a);
    CHECK(basis.size() == cols - r);
    for (const auto& v : basis) CHECK(is_zero(std::span<const Rational>(multiply(a, v))));
    RationalMatrix k(cols, basis.size() == 0 ? 1 : basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < cols; ++i) k(i, j) = basis[j][i];
    }
    if (!basis.empty()) CHECK(rank(k) == basis.size());
  }
}

TEST_CASE("matrices need at least one row and column") {
  CHECK_THROWS_AS(IntegerMatrix(0, 3), InvalidArgument);
  CHECK_THROWS_AS(IntegerMatrix(2, 0), InvalidArgument);
  CHECK_THROWS_AS(IntegerMatrix::from_rows({{1, 2}, {3}}), InvalidArgument);
}

TEST_CASE("matrix text round trip") {
  std::istringstream in("# Schur\n\n1 3\n 1 1 -1\n");
  const IntegerMatrix a = read_matrix(in);
  CHECK(a == IntegerMatrix::from_rows({{1, 1, -1}}));
  std::ostringstream out;
  write_matrix(out, a);
  std::istringstream back(out.str());
  CHECK(read_matrix(back) == a);
}

TEST_CASE("malformed matrix text reports the line") {
  std::istringstream in("2 2\n1 2\n3 x\n");
  try {
    (void)read_matrix(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream short_in("2 2\n1 2\n");
  CHECK_THROWS_AS(read_matrix(short_in), ParseError);
  std::istringstream wide("1 2\n1 2 3\n");
  CHECK_THROWS_AS(read_matrix(wide), ParseError);
}

TEST_CASE("comma lists") {
  CHECK(parse_int64_list("5,2") == std::vector<std::int64_t>{5, 2});
  CHECK(parse_int64_list(" 1, 1, -2 ") == std::vector<std::int64_t>{1, 1, -2});
  CHECK_THROWS(parse_int64_list("1,,2"));
}
