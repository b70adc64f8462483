#include "radokit/progressions.hpp"

#include <algorithm>
#include <cstdlib>

namespace radokit {

namespace {

void check_delta(const Rational& delta) {
  if (delta <= 0 || delta > 1) {
    throw InvalidArgument("fractional dilate requires 0 < delta <= 1");
  }
}

}  // namespace

Progression Progression::make(std::int64_t centre, std::int64_t difference,
                              std::int64_t radius) {
  if (difference < 0) throw InvalidArgument("progression difference must be >= 0");
  if (radius < 0) throw InvalidArgument("progression radius must be >= 0");
  return Progression{centre, difference, radius};
}

bool Progression::contains(std::int64_t y) const noexcept {
  const std::int64_t off = y - centre;
  if (difference == 0) return off == 0;
  if (off % difference != 0) return false;
  const std::int64_t idx = off / difference;
  return idx >= -radius && idx <= radius;
}

std::vector<std::int64_t> Progression::elements() const {
  if (difference == 0) return {centre};
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(formal_length()));
  for (std::int64_t i = -radius; i <= radius; ++i) out.push_back(term(i));
  return out;
}

std::int64_t floor_scaled(const Rational& delta, std::int64_t n) {
  Integer prod = delta.get_num() * Integer(static_cast<long>(n));
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), prod.get_mpz_t(), delta.get_den_mpz_t());
  return q.get_si();
}

Progression frac_dilate(const Progression& p, const Rational& delta) {
  check_delta(delta);
  return Progression{0, p.difference, floor_scaled(delta, p.radius)};
}

Progression interior(const Progression& p, const Rational& delta) {
  check_delta(delta);
  return Progression{p.centre, p.difference, p.radius - floor_scaled(delta, p.radius)};
}

Progression closure(const Progression& p, const Rational& delta) {
  check_delta(delta);
  return Progression{p.centre, p.difference, p.radius + floor_scaled(delta, p.radius)};
}

Progression translate(const Progression& p, std::int64_t x) {
  return Progression{p.centre + x, p.difference, p.radius};
}

Progression dilate(const Progression& p, std::int64_t c) {
  if (c <= 0) throw InvalidArgument("dilation factor must be positive");
  return Progression{p.centre * c, p.difference * c, p.radius};
}

bool is_subset(const Progression& inner, const Progression& outer) {
  if (inner.difference == 0 || inner.radius == 0) return outer.contains(inner.centre);
  for (std::int64_t i = -inner.radius; i <= inner.radius; ++i) {
    if (!outer.contains(inner.term(i))) return false;
  }
  return true;
}

bool same_elements(const Progression& a, const Progression& b) {
  return is_subset(a, b) && is_subset(b, a);
}

Progression sumset(const Progression& a, const Progression& b) {
  const bool a_point = a.difference == 0 || a.radius == 0;
  const bool b_point = b.difference == 0 || b.radius == 0;
  if (a_point) return Progression{a.centre + b.centre, b.difference, b.radius};
  if (b_point) return Progression{a.centre + b.centre, a.difference, a.radius};
  if (a.difference != b.difference) {
    throw InvalidArgument("sumset: progressions have different differences");
  }
  return Progression{a.centre + b.centre, a.difference, a.radius + b.radius};
}

double shifted_average_defect(const Progression& p, const ComplexFunction& f,
                              std::int64_t y) {
  std::complex<double> shifted = 0.0;
  std::complex<double> plain = 0.0;
  for (std::int64_t i = -p.radius; i <= p.radius; ++i) {
    const std::int64_t x = p.term(i);
    shifted += f(x + y);
    plain += f(x);
  }
  return std::abs(shifted - plain) / static_cast<double>(p.formal_length());
}

Rational shifted_average_defect_exact(const Progression& p, const IntegerFunction& f,
                                      std::int64_t y) {
  Integer diff = 0;
  for (std::int64_t i = -p.radius; i <= p.radius; ++i) {
    const std::int64_t x = p.term(i);
    diff += static_cast<long>(f(x + y) - f(x));
  }
  Rational out(abs(diff), Integer(static_cast<long>(p.formal_length())));
  out.canonicalize();
  return out;
}

}  // namespace radokit
