#pragma once

// Odd-length arithmetic progressions x + d*{-N, ..., N} and their fractional
// dilates, interiors and closures.
//
// A progression is treated as the indexed family of its 2N+1 terms: its
// formal length is 2N+1 even when d = 0 makes terms collide, and averages
// over a progression weight each index once.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "radokit/exact_linalg.hpp"

namespace radokit {

struct Progression {
  std::int64_t centre = 0;
  std::int64_t difference = 0;  // >= 0
  std::int64_t radius = 0;      // >= 0

  // Throws InvalidArgument on negative difference or radius.
  static Progression make(std::int64_t centre, std::int64_t difference,
                          std::int64_t radius);

  std::int64_t formal_length() const noexcept { return 2 * radius + 1; }
  bool centred() const noexcept { return centre == 0; }
  std::int64_t term(std::int64_t index) const noexcept {
    return centre + difference * index;
  }
  std::int64_t min_element() const noexcept { return centre - difference * radius; }
  std::int64_t max_element() const noexcept { return centre + difference * radius; }

  bool contains(std::int64_t y) const noexcept;
  // Distinct elements in increasing order.
  std::vector<std::int64_t> elements() const;

  friend bool operator==(const Progression&, const Progression&) = default;
};

// floor(delta * n) for n >= 0, delta > 0.
std::int64_t floor_scaled(const Rational& delta, std::int64_t n);

// I_delta(P) = d * {-floor(delta N), ..., floor(delta N)}. 0 < delta <= 1.
Progression frac_dilate(const Progression& p, const Rational& delta);
// Same centre and difference, radius N - floor(delta N).
Progression interior(const Progression& p, const Rational& delta);
// Same centre and difference, radius N + floor(delta N).
Progression closure(const Progression& p, const Rational& delta);

Progression translate(const Progression& p, std::int64_t x);
// c * P; throws InvalidArgument for c <= 0.
Progression dilate(const Progression& p, std::int64_t c);

// Element-set relations.
bool is_subset(const Progression& inner, const Progression& outer);
bool same_elements(const Progression& a, const Progression& b);
// Elementwise sum of two progressions sharing a difference (or where one is
// a single point). Throws InvalidArgument otherwise.
Progression sumset(const Progression& a, const Progression& b);

using ComplexFunction = std::function<std::complex<double>(std::int64_t)>;
using IntegerFunction = std::function<std::int64_t(std::int64_t)>;

// |E_{x in P} f(x + y) - E_{x in P} f(x)|, averaged over the formal family.
double shifted_average_defect(const Progression& p, const ComplexFunction& f,
                              std::int64_t y);
// Exact variant for integer-valued f.
Rational shifted_average_defect_exact(const Progression& p, const IntegerFunction& f,
                                      std::int64_t y);

}  // namespace radokit
