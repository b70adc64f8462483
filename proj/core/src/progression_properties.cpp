#include "radokit/progression_properties.hpp"

#include <random>
#include <sstream>

#include "radokit/progressions.hpp"

namespace radokit {

namespace {

std::string describe(const Progression& p, const Rational& delta,
                     const Rational& delta2) {
  std::ostringstream ss;
  ss << "P=(" << p.centre << ',' << p.difference << ',' << p.radius << ") delta="
     << delta << " delta'=" << delta2;
  return ss.str();
}

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Suite {
 public:
  explicit Suite(const ProgressionSuiteConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    const char* names[] = {"symmetry",     "monotone_radius", "monotone_progression",
                           "translation",  "dilation",        "subadditivity",
                           "composition",  "interior",        "closure",
                           "invariance"};
    for (const char* n : names) out_.push_back(PropertyOutcome{n, 0, 0, {}});
  }

  std::vector<PropertyOutcome> run() {
    for (std::int64_t n = 0; n < cfg_.instances; ++n) instance();
    return out_;
  }

 private:
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Rational random_delta() {
    const std::int64_t den = uniform(1, 64);
    Rational q(static_cast<long>(uniform(1, den)), static_cast<long>(den));
    q.canonicalize();
    return q;
  }

  void record(std::size_t idx, bool ok, const std::string& ctx) {
    auto& o = out_[idx];
    ++o.cases;
    if (!ok) {
      if (o.failures == 0) o.first_failure = ctx;
      ++o.failures;
    }
  }

  void instance() {
    // Roughly one progression in twenty is degenerate (difference 0).
    const std::int64_t diff = uniform(0, 19) == 0 ? 0 : uniform(1, 50);
    const Progression p = Progression::make(uniform(-1000000, 1000000), diff,
                                            uniform(0, cfg_.max_radius));
    Rational delta = random_delta();
    Rational delta2 = random_delta();
    const std::int64_t c = uniform(1, 20);
    const std::int64_t x = uniform(-1000000, 1000000);
    const std::string ctx = describe(p, delta, delta2);
    const Progression id = frac_dilate(p, delta);

    // (1)
    {
      const Rational lhs = id.formal_length();
      const Rational rhs = delta * p.formal_length() / 3;
      record(0, id.centred() && lhs >= rhs, ctx);
    }
    // (2)
    {
      const Rational& lo = delta2 <= delta ? delta2 : delta;
      const Rational& hi = delta2 <= delta ? delta : delta2;
      record(1, is_subset(frac_dilate(p, lo), frac_dilate(p, hi)), ctx);
    }
    // (3): inner chains inside P, P inside its closure, and a coarser
    // sub-progression through a random term of P.
    {
      const Progression inner = interior(p, delta2);
      const Progression outer = closure(p, delta2);
      bool ok = is_subset(inner, p) && is_subset(frac_dilate(inner, delta), id);
      ok = ok && is_subset(p, outer) && is_subset(id, frac_dilate(outer, delta));
      if (p.difference > 0 && p.radius > 0) {
        const std::int64_t q = uniform(1, 5);
        const std::int64_t k = uniform(-p.radius, p.radius);
        const std::int64_t room = std::min(p.radius - k, p.radius + k);
        const Progression sub{p.term(k), p.difference * q, room / q};
        ok = ok && is_subset(sub, p) && is_subset(frac_dilate(sub, delta), id);
      }
      record(2, ok, ctx);
    }
    // (4)
    record(3, frac_dilate(translate(p, x), delta) == id, ctx);
    // (5)
    record(4, frac_dilate(dilate(p, c), delta) == dilate(id, c), ctx);
    // (6): pair the two parameters so that they sum to at most one.
    {
      Rational a = delta / 2;
      Rational b = (1 - a) * delta2;
      a.canonicalize();
      b.canonicalize();
      const Progression sum = sumset(frac_dilate(p, a), frac_dilate(p, b));
      record(5, is_subset(sum, frac_dilate(p, Rational(a + b))), ctx);
    }
    // (7)
    record(6, is_subset(frac_dilate(frac_dilate(p, delta2), delta),
                        frac_dilate(p, Rational(delta * delta2))),
           ctx);
    // (8)
    {
      const Progression in = interior(p, delta);
      const bool inside = is_subset(sumset(in, id), p);
      const bool big = Rational(in.formal_length()) >= (1 - delta) * p.formal_length();
      record(7, inside && big, ctx);
    }
    // (9)
    {
      const Progression cl = closure(p, delta);
      const bool eq = same_elements(cl, sumset(p, id));
      const bool small = Rational(cl.formal_length()) <= (1 + delta) * p.formal_length();
      record(8, eq && small, ctx);
    }
    // (10): a +-1 valued pseudo-random function, so sup |f| = 1.
    {
      const std::uint64_t salt = rng_();
      IntegerFunction f = [salt](std::int64_t v) -> std::int64_t {
        return (mix(static_cast<std::uint64_t>(v) ^ salt) & 1) ? 1 : -1;
      };
      const std::int64_t j = uniform(-id.radius, id.radius);
      const std::int64_t y = id.term(j);
      const Rational defect = shifted_average_defect_exact(p, f, y);
      record(9, defect <= 2 * delta, ctx + " y=" + std::to_string(y));
    }
  }

  ProgressionSuiteConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<PropertyOutcome> out_;
};

}  // namespace

std::vector<PropertyOutcome> run_progression_suite(const ProgressionSuiteConfig& cfg) {
  return Suite(cfg).run();
}

}  // namespace radokit
