#include "doctest.h"

#include <random>

#include "radokit/colouring_engine.hpp"
#include "radokit/errors.hpp"

using namespace radokit;

namespace {

using Sets = std::vector<std::vector<std::int64_t>>;

// Three-term progressions {a, a+d, a+2d} inside [1, n].
Sets three_aps(std::int64_t n) {
  Sets out;
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t d = 1; a + 2 * d <= n; ++d) out.push_back({a, a + d, a + 2 * d});
  }
  return out;
}

ConstraintTable table_of(std::int64_t n, const Sets& sets) {
  ConstraintTable t(n);
  for (const auto& s : sets) t.add(s);
  t.finalize();
  return t;
}

bool avoids(const std::vector<int>& col, const Sets& sets, std::int64_t upto) {
  for (const auto& s : sets) {
    bool inside = true;
    for (auto v : s) inside = inside && v <= upto;
    if (!inside) continue;
    bool mono = true;
    for (auto v : s) mono = mono && col[static_cast<std::size_t>(v - 1)] == col[static_cast<std::size_t>(s[0] - 1)];
    if (mono) return false;
  }
  return true;
}

// Largest L <= n with some r-colouring of [L] avoiding every set, by trying
// all r^L colourings.
std::int64_t naive_longest(std::int64_t n, int r, const Sets& sets) {
  std::int64_t best = 0;
  for (std::int64_t len = 1; len <= n; ++len) {
    std::vector<int> col(static_cast<std::size_t>(len), 0);
    bool found = false;
    while (true) {
      if (avoids(col, sets, len)) {
        found = true;
        break;
      }
      std::size_t pos = col.size();
      while (pos > 0 && col[pos - 1] == r - 1) col[--pos] = 0;
      if (pos == 0) break;
      ++col[pos - 1];
    }
    if (!found) break;
    best = len;
  }
  return best;
}

}  // namespace

TEST_CASE("van der Waerden W(3;2) = 9") {
  const Sets sets = three_aps(12);
  const auto res = longest_avoiding_prefix(table_of(12, sets), 2);
  CHECK(res.complete);
  CHECK(res.longest == 8);
  REQUIRE(res.colouring.size() == 8);
  CHECK(res.colouring[0] == 0);
  CHECK(avoids(res.colouring, sets, 8));
}

TEST_CASE("reaching the limit") {
  const Sets sets = three_aps(6);
  const auto res = longest_avoiding_prefix(table_of(6, sets), 2);
  CHECK(res.longest == 6);
  CHECK(res.complete);
}

TEST_CASE("a singleton set makes its element uncolourable") {
  ConstraintTable t(5);
  const std::vector<std::int64_t> single{3};
  t.add(single);
  t.finalize();
  CHECK(longest_avoiding_prefix(t, 3).longest == 2);
}

TEST_CASE("supersets are dropped") {
  ConstraintTable t(6);
  const std::vector<std::int64_t> a{1, 2};
  const std::vector<std::int64_t> b{1, 2, 5};
  const std::vector<std::int64_t> dup{2, 1, 1};
  t.add(a);
  t.add(b);
  t.add(dup);
  t.finalize();
  CHECK(t.size() == 1);
}

TEST_CASE("random hypergraphs agree with exhaustive colouring") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = 9;
    const int r = 2 + static_cast<int>(rng() % 2);
    Sets sets;
    const int count = 4 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      std::vector<std::int64_t> s;
      const int size = 2 + static_cast<int>(rng() % 2);
      for (int j = 0; j < size; ++j) s.push_back(1 + static_cast<std::int64_t>(rng() % n));
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      sets.push_back(s);
    }
    const auto res = longest_avoiding_prefix(table_of(n, sets), r);
    CHECK(res.longest == naive_longest(n, r, sets));
    CHECK(avoids(res.colouring, sets, res.longest));
  }
}

TEST_CASE("parallel search returns the serial answer") {
  const Sets sets = three_aps(40);
  const ConstraintTable t = table_of(40, sets);
  const auto serial = longest_avoiding_prefix(t, 3, AvoidanceOptions{1, 0, 10});
  CHECK(serial.longest == 26);
  for (unsigned threads : {2u, 4u}) {
    const auto par = longest_avoiding_prefix(t, 3, AvoidanceOptions{threads, 0, 6});
    CHECK(par.longest == serial.longest);
    CHECK(par.colouring == serial.colouring);
  }
}

TEST_CASE("node limit marks the result incomplete") {
  const ConstraintTable t = table_of(40, three_aps(40));
  const auto res = longest_avoiding_prefix(t, 3, AvoidanceOptions{1, 50, 10});
  CHECK_FALSE(res.complete);
  CHECK(res.longest < 27);
}

TEST_CASE("argument checks") {
  ConstraintTable t(4);
  const std::vector<std::int64_t> outside{2, 5};
  CHECK_THROWS_AS(t.add(outside), InvalidArgument);
  ConstraintTable ok(4);
  ok.finalize();
  CHECK_THROWS_AS(longest_avoiding_prefix(ok, 0), InvalidArgument);
  CHECK_THROWS_AS(longest_avoiding_prefix(ok, 40), InvalidArgument);
}
