#include "radokit/deuber.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace radokit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("integer overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InvalidArgument("integer overflow");
  return out;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw InvalidArgument("value does not fit in 64 bits");
  return v.get_si();
}

// Calls visit(value) for every c*s[lead] + sum_{l>lead} i_l*s[l], |i_l| <= p.
template <typename Visit>
void visit_row(std::int64_t p, std::int64_t c, std::span<const std::int64_t> s,
               std::size_t lead, Visit&& visit) {
  const std::size_t tail = s.size() - lead - 1;
  std::vector<std::int64_t> coeff(tail, -p);
  const std::int64_t base = checked_mul(c, s[lead]);
  while (true) {
    std::int64_t v = base;
    for (std::size_t l = 0; l < tail; ++l) {
      v = checked_add(v, checked_mul(coeff[l], s[lead + 1 + l]));
    }
    if (!visit(v)) return;
    std::size_t pos = tail;
    while (pos > 0 && coeff[pos - 1] == p) coeff[--pos] = -p;
    if (pos == 0) return;
    ++coeff[pos - 1];
  }
}

}  // namespace

void MpcParams::validate() const {
  if (m < 0 || p < 1 || c < 1) {
    throw InvalidArgument("(m,p,c) requires m >= 0, p >= 1, c >= 1");
  }
}

bool MpcSet::contains(std::int64_t x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

MpcParams params_from_witness(const Witness& w) {
  const Integer c = lcm_denominators(w.alpha);
  Integer p = 1;
  for (const auto& q : w.alpha.data()) {
    const Rational scaled = q * c;
    Integer v = abs(scaled.get_num());
    if (v > p) p = v;
  }
  MpcParams out;
  out.m = 1 + static_cast<std::int64_t>(rank(w.alpha));
  out.p = to_int64(p);
  out.c = to_int64(c);
  return out;
}

MpcSet mpc_elements(const MpcParams& params, std::span<const std::int64_t> s) {
  params.validate();
  if (s.size() != static_cast<std::size_t>(params.m) + 1) {
    throw InvalidArgument("generator length must be m+1");
  }
  MpcSet out;
  out.generator.assign(s.begin(), s.end());
  out.params = params;
  for (std::size_t lead = 0; lead < s.size(); ++lead) {
    visit_row(params.p, params.c, s, lead, [&](std::int64_t v) {
      out.elements.push_back(v);
      return true;
    });
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  out.valid = out.elements.front() >= 1;
  return out;
}

std::int64_t level_form_count(std::int64_t p, std::int64_t t) {
  std::int64_t n = 1;
  for (std::int64_t j = 0; j < t; ++j) n = checked_mul(n, 2 * p + 1);
  return n;
}

std::int64_t form_count(const MpcParams& params) {
  std::int64_t total = 0;
  for (std::int64_t t = 0; t <= params.m; ++t) {
    total = checked_add(total, level_form_count(params.p, t));
  }
  return total;
}

std::vector<FormIndex> enumerate_forms(const MpcParams& params) {
  params.validate();
  if (params.c <= params.p) {
    throw FormsOverlap("form levels overlap unless c > p (got p=" +
                       std::to_string(params.p) + ", c=" + std::to_string(params.c) + ")");
  }
  std::vector<FormIndex> out;
  out.reserve(static_cast<std::size_t>(form_count(params)));
  for (std::int64_t t = 0; t <= params.m; ++t) {
    std::vector<std::int64_t> coeff(static_cast<std::size_t>(t), -params.p);
    while (true) {
      out.push_back(FormIndex{t, coeff, params.c});
      std::size_t pos = coeff.size();
      while (pos > 0 && coeff[pos - 1] == params.p) coeff[--pos] = -params.p;
      if (pos == 0) break;
      ++coeff[pos - 1];
    }
  }
  return out;
}

std::int64_t eval_form(const FormIndex& form, std::span<const std::int64_t> s) {
  if (form.level < 0 || s.size() <= static_cast<std::size_t>(form.level)) {
    throw InvalidArgument("generator too short for form level");
  }
  std::int64_t v = checked_mul(form.leading, s[static_cast<std::size_t>(form.level)]);
  for (std::size_t j = 0; j < form.coeffs.size(); ++j) {
    v = checked_add(v, checked_mul(form.coeffs[j], s[j]));
  }
  return v;
}

IntegerVector extract_solution(const IntegerMatrix& a, const Witness& w,
                               std::span<const std::int64_t> s) {
  if (!verify_witness(a, w)) {
    throw InvalidArgument("extract_solution: witness fails verification");
  }
  const std::size_t t = w.blocks();
  if (s.size() < t) {
    throw InvalidArgument("extract_solution: generator needs at least t entries");
  }
  MpcParams params = params_from_witness(w);
  params.m = static_cast<std::int64_t>(s.size()) - 1;
  if (!mpc_elements(params, s).valid) {
    throw InvalidArgument("extract_solution: generator spans non-positive elements");
  }
  const std::size_t m = s.size() - 1;
  // u_k = s_{m+1-k} for k = 1..t (u[0] unused).
  std::vector<Integer> u(t + 1);
  for (std::size_t k = 1; k <= t; ++k) u[k] = static_cast<long>(s[m + 1 - k]);
  const Integer c = params.c;

  IntegerVector x(a.cols());
  for (std::size_t k = 1; k <= t; ++k) {
    for (std::size_t i : w.partition.block(k - 1)) {
      Rational acc = c * u[t + 1 - k];
      for (std::size_t l = 1; l <= t - k; ++l) {
        acc -= c * w.alpha(i, t - l) * u[l];
      }
      if (acc.get_den() != 1) {
        throw InvalidArgument("extract_solution: non-integral coordinate");
      }
      x[i] = acc.get_num();
    }
  }
  return x;
}

namespace {

class MpcFinder {
 public:
  MpcFinder(std::span<const std::int64_t> x, const MpcParams& params,
            std::int64_t bound)
      : x_(x), params_(params) {
    // Every s_j is the leading generator of some row (others zero), so c*s_j
    // must lie in X.
    for (std::int64_t v : x) {
      if (v >= 1 && v % params.c == 0 && v / params.c <= bound) {
        candidates_.push_back(v / params.c);
      }
    }
    s_.assign(static_cast<std::size_t>(params.m) + 1, 0);
  }

  std::optional<Generator> run() {
    search(static_cast<std::int64_t>(params_.m));
    return best_;
  }

 private:
  bool in_x(std::int64_t v) const {
    return std::binary_search(x_.begin(), x_.end(), v);
  }

  bool row_fits(std::size_t lead) const {
    bool ok = true;
    visit_row(params_.p, params_.c, s_, lead, [&](std::int64_t v) {
      ok = v >= 1 && in_x(v);
      return ok;
    });
    return ok;
  }

  // Fills s_pos, s_{pos-1}, ... ; rows led by later generators are checked
  // first since they involve fewer unknowns.
  void search(std::int64_t pos) {
    if (pos < 0) {
      if (!best_ || s_ < *best_) best_ = s_;
      return;
    }
    const auto idx = static_cast<std::size_t>(pos);
    for (std::int64_t cand : candidates_) {
      s_[idx] = cand;
      // Candidates ascend, so once s_0 no longer beats the best, none will.
      if (best_ && idx == 0 && !(s_ < *best_)) break;
      if (!row_fits(idx)) continue;
      search(pos - 1);
    }
  }

  std::span<const std::int64_t> x_;
  MpcParams params_;
  std::vector<std::int64_t> candidates_;
  Generator s_;
  std::optional<Generator> best_;
};

}  // namespace

std::optional<Generator> find_mpc_in_set(std::span<const std::int64_t> sorted_x,
                                         const MpcParams& params,
                                         std::int64_t bound) {
  params.validate();
  if (sorted_x.empty() || bound < 1) return std::nullopt;
  return MpcFinder(sorted_x, params, bound).run();
}

std::vector<Generator> generators_within(const MpcParams& params, std::int64_t n) {
  params.validate();
  std::vector<std::int64_t> window;
  for (std::int64_t v = 1; v <= n; ++v) window.push_back(v);
  std::vector<Generator> out;
  const std::size_t len = static_cast<std::size_t>(params.m) + 1;
  Generator s(len, 1);
  if (n < 1) return out;
  // Odometer over [1, n/c]^{m+1}; c*s_j <= n is necessary.
  const std::int64_t top = n / params.c;
  if (top < 1) return out;
  while (true) {
    bool ok = true;
    for (std::size_t lead = len; lead-- > 0 && ok;) {
      visit_row(params.p, params.c, s, lead, [&](std::int64_t v) {
        ok = v >= 1 && v <= n;
        return ok;
      });
    }
    if (ok) out.push_back(s);
    std::size_t pos = len;
    while (pos > 0 && s[pos - 1] == top) s[--pos] = 1;
    if (pos == 0) break;
    ++s[pos - 1];
  }
  return out;
}

}  // namespace radokit
