#include "radokit/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace radokit {

namespace {
__extension__ using Wide = __int128;
}  // namespace

ModFunction::ModFunction(std::int64_t modulus, std::vector<Complex> values)
    : modulus_(modulus), values_(std::move(values)) {
  if (modulus_ < 1) throw InvalidArgument("modulus must be positive");
  if (values_.size() != static_cast<std::size_t>(modulus_)) {
    throw InvalidArgument("function needs exactly N values");
  }
}

ModFunction ModFunction::constant(std::int64_t modulus, Complex value) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  return ModFunction(modulus, std::vector<Complex>(static_cast<std::size_t>(modulus), value));
}

ModFunction ModFunction::indicator(std::int64_t modulus,
                                   std::span<const std::int64_t> support) {
  ModFunction f = constant(modulus, 0.0);
  for (std::int64_t x : support) {
    const std::int64_t r = ((x % modulus) + modulus) % modulus;
    f.values_[static_cast<std::size_t>(r)] = 1.0;
  }
  return f;
}

Complex ModFunction::operator()(std::int64_t x) const noexcept {
  const std::int64_t r = ((x % modulus_) + modulus_) % modulus_;
  return values_[static_cast<std::size_t>(r)];
}

double ModFunction::sup_norm() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

ModFunction ModFunction::scaled(Complex lambda) const {
  std::vector<Complex> out(values_);
  for (auto& v : out) v *= lambda;
  return ModFunction(modulus_, std::move(out));
}

ModFunction operator+(const ModFunction& a, const ModFunction& b) {
  if (a.modulus_ != b.modulus_) throw InvalidArgument("modulus mismatch");
  std::vector<Complex> out(a.values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.values_[i];
  return ModFunction(a.modulus_, std::move(out));
}

namespace {

// Multiplicative derivative g(y) * conj(g(y+h)).
void derivative(std::span<const Complex> g, std::size_t h, std::span<Complex> out) {
  const std::size_t n = g.size();
  for (std::size_t y = 0; y < n; ++y) {
    const std::size_t z = y + h < n ? y + h : y + h - n;
    out[y] = g[y] * std::conj(g[z]);
  }
}

// Cube average of order `level` >= 1, peeling one h at a time. The order-1
// average is |E g|^2.
Complex cube_average(std::span<const Complex> g, int level,
                     std::vector<std::vector<Complex>>& scratch) {
  const std::size_t n = g.size();
  if (level == 1) {
    Complex mean = 0.0;
    for (const auto& v : g) mean += v;
    mean /= static_cast<double>(n);
    return mean * std::conj(mean);
  }
  auto& buf = scratch[static_cast<std::size_t>(level)];
  Complex acc = 0.0;
  for (std::size_t h = 0; h < n; ++h) {
    derivative(g, h, buf);
    acc += cube_average(buf, level - 1, scratch);
  }
  return acc / static_cast<double>(n);
}

}  // namespace

double gowers_norm(const ModFunction& f, int k, unsigned threads) {
  if (k < 1 || k > kMaxGowersOrder) {
    throw InvalidArgument("Gowers order k must satisfy 1 <= k <= " +
                          std::to_string(kMaxGowersOrder));
  }
  const auto& g = f.values();
  const std::size_t n = g.size();
  Complex total = 0.0;
  if (k == 1) {
    std::vector<std::vector<Complex>> scratch;
    total = cube_average(g, 1, scratch);
  } else {
    // Outermost h-level: one partial per h, reduced in index order.
    std::vector<Complex> partial(n);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    auto work = [&](unsigned id) {
      std::vector<std::vector<Complex>> scratch(static_cast<std::size_t>(k) + 1,
                                                std::vector<Complex>(n));
      std::vector<Complex> first(n);
      for (std::size_t h = id; h < n; h += workers) {
        derivative(g, h, first);
        partial[h] = cube_average(first, k - 1, scratch);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
      for (auto& t : pool) t.join();
    }
    for (const auto& v : partial) total += v;
    total /= static_cast<double>(n);
  }
  const double scale = std::max(1.0, std::abs(total.real()));
  if (std::abs(total.imag()) > 1e-9 * scale) {
    throw Error("Gowers cube average has non-negligible imaginary part");
  }
  double re = total.real();
  if (re < 0.0) {
    if (re < -1e-9) throw Error("Gowers cube average is negative");
    re = 0.0;
  }
  return std::pow(re, 1.0 / static_cast<double>(1 << k));
}

LinearSystemMap::LinearSystemMap(std::vector<std::vector<std::int64_t>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) {
    throw InvalidArgument("linear system needs at least one form and one variable");
  }
  for (const auto& r : rows_) {
    if (r.size() != rows_.front().size()) throw InvalidArgument("ragged linear system");
    if (std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; })) {
      throw InvalidArgument("linear system contains a zero form");
    }
  }
}

LinearSystemMap LinearSystemMap::from_matrix(const IntegerMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).fits_slong_p()) throw InvalidArgument("form coefficient too large");
      rows[r].push_back(m(r, c).get_si());
    }
  }
  return LinearSystemMap(std::move(rows));
}

Complex lambda_count(const LinearSystemMap& psi, std::span<const ModFunction> fs,
                     std::int64_t n) {
  if (n < 1) throw InvalidArgument("N must be positive");
  if (fs.size() != psi.forms()) throw InvalidArgument("need one function per form");
  for (const auto& f : fs) {
    if (f.modulus() != n) throw InvalidArgument("modulus mismatch");
  }
  const std::size_t d = psi.dimension();
  double cost = 1.0;
  for (std::size_t j = 0; j < d; ++j) cost *= static_cast<double>(n);
  if (cost > 101.0 * 101.0 * 101.0) {
    throw SearchSpaceTooLarge("lambda_count: N^d exceeds enumeration cap");
  }
  const std::size_t l = psi.forms();
  // Maintain psi_i(x) mod N incrementally along an odometer over {1..N}^d.
  std::vector<std::int64_t> x(d, 1);
  std::vector<std::int64_t> value(l, 0);
  std::vector<std::vector<std::int64_t>> coeff(l, std::vector<std::int64_t>(d));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      coeff[i][j] = ((psi.form(i)[j] % n) + n) % n;
      value[i] = (value[i] + coeff[i][j]) % n;
    }
  }
  Complex acc = 0.0;
  while (true) {
    Complex prod = 1.0;
    for (std::size_t i = 0; i < l; ++i) {
      prod *= fs[i].values()[static_cast<std::size_t>(value[i])];
    }
    acc += prod;
    std::size_t pos = d;
    while (pos > 0 && x[pos - 1] == n) {
      --pos;
      x[pos] = 1;
      // Rolling back from N to 1 subtracts (N-1)*coeff == +coeff mod N.
      for (std::size_t i = 0; i < l; ++i) value[i] = (value[i] + coeff[i][pos]) % n;
    }
    if (pos == 0) break;
    ++x[pos - 1];
    for (std::size_t i = 0; i < l; ++i) value[i] = (value[i] + coeff[i][pos - 1]) % n;
  }
  return acc / cost;
}

bool pairwise_independent(const LinearSystemMap& psi) {
  const std::size_t l = psi.forms();
  const std::size_t d = psi.dimension();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      bool independent = false;
      for (std::size_t a = 0; a < d && !independent; ++a) {
        for (std::size_t b = a + 1; b < d && !independent; ++b) {
          const Wide minor =
              static_cast<Wide>(psi.form(i)[a]) * psi.form(j)[b] -
              static_cast<Wide>(psi.form(i)[b]) * psi.form(j)[a];
          independent = minor != 0;
        }
      }
      if (!independent) return false;
    }
  }
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

CountReport gvn_report(const LinearSystemMap& psi, std::span<const ModFunction> fs,
                       int k, std::int64_t n, unsigned threads) {
  if (!is_prime(n)) throw InvalidArgument("gvn_report requires prime N");
  if (!pairwise_independent(psi)) {
    throw InvalidArgument("gvn_report requires pairwise independent forms");
  }
  for (const auto& f : fs) {
    if (!f.one_bounded()) throw InvalidArgument("gvn_report requires 1-bounded functions");
  }
  CountReport rep;
  rep.lambda_value = lambda_count(psi, fs, n);
  rep.lambda_abs = std::abs(rep.lambda_value);
  for (const auto& f : fs) rep.norms.push_back(gowers_norm(f, k, threads));
  rep.min_norm = *std::min_element(rep.norms.begin(), rep.norms.end());
  rep.slack = rep.min_norm - rep.lambda_abs;
  return rep;
}

IntegerSet::IntegerSet(std::vector<std::int64_t> values) : sorted_(std::move(values)) {
  std::sort(sorted_.begin(), sorted_.end());
  sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
  if (sorted_.empty()) return;
  lo_ = sorted_.front();
  hi_ = sorted_.back();
  if (hi_ - lo_ > 100'000'000) throw InvalidArgument("integer set spans too wide a range");
  bits_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), false);
  for (std::int64_t v : sorted_) bits_[static_cast<std::size_t>(v - lo_)] = true;
}

namespace {

class QCounter {
 public:
  QCounter(const IntegerSet& a, const MpcParams& params, std::span<const Progression> ps)
      : a_(a), ps_(ps) {
    const auto forms = enumerate_forms(params);
    by_level_.resize(static_cast<std::size_t>(params.m) + 1);
    for (const auto& f : forms) by_level_[static_cast<std::size_t>(f.level)].push_back(f);
    s_.assign(ps.size(), 0);
  }

  Integer run() {
    Integer total = 0;
    descend(0, total);
    return total;
  }

 private:
  bool level_ok(std::size_t t) const {
    const std::span<const std::int64_t> prefix(s_.data(), t + 1);
    for (const auto& f : by_level_[t]) {
      if (!a_.contains(eval_form(f, prefix))) return false;
    }
    return true;
  }

  void descend(std::size_t t, Integer& total) {
    if (t == ps_.size()) {
      ++total;
      return;
    }
    const Progression& p = ps_[t];
    for (std::int64_t i = -p.radius; i <= p.radius; ++i) {
      s_[t] = p.term(i);
      if (level_ok(t)) descend(t + 1, total);
    }
  }

  const IntegerSet& a_;
  std::span<const Progression> ps_;
  std::vector<std::vector<FormIndex>> by_level_;
  std::vector<std::int64_t> s_;
};

}  // namespace

Rational q_count(const IntegerSet& a, const MpcParams& params,
                 std::span<const Progression> ps) {
  params.validate();
  if (params.c <= params.p) {
    throw FormsOverlap("q_count requires c > p");
  }
  if (ps.size() != static_cast<std::size_t>(params.m) + 1) {
    throw InvalidArgument("q_count needs m+1 progressions");
  }
  Integer tuples = 1;
  for (const auto& p : ps) tuples *= static_cast<long>(p.formal_length());
  if (tuples > kMaxQTuples) {
    throw SearchSpaceTooLarge("q_count: product of progression lengths exceeds cap");
  }
  Rational q(QCounter(a, params, ps).run(), tuples);
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  Integer num;
  Integer den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

FactorizationGap factorization_gap(const IntegerSet& a, const MpcParams& params,
                                   std::span<const Progression> ps) {
  if (params.m < 1) throw InvalidArgument("factorization_gap requires m >= 1");
  FactorizationGap out;
  out.q_m = q_count(a, params, ps);
  MpcParams lower = params;
  lower.m = params.m - 1;
  out.q_prev = q_count(a, lower, ps.first(ps.size() - 1));

  const Progression scaled = dilate(ps.back(), params.c);
  Integer hits = 0;
  for (std::int64_t i = -scaled.radius; i <= scaled.radius; ++i) {
    if (a.contains(scaled.term(i))) ++hits;
  }
  out.alpha = Rational(hits, Integer(static_cast<long>(scaled.formal_length())));
  out.alpha.canonicalize();

  out.level_exponent = level_form_count(params.p, params.m);
  out.full_exponent = form_count(params);
  out.predicted = rational_pow(out.alpha, out.level_exponent) * out.q_prev;
  out.predicted_all = rational_pow(out.alpha, out.full_exponent) * out.q_prev;
  out.gap = abs(out.q_m - out.predicted);
  out.gap_all = abs(out.q_m - out.predicted_all);
  return out;
}

}  // namespace radokit
