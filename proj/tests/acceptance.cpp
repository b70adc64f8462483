// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "radokit/columns_condition.hpp"
#include "radokit/deuber.hpp"
#include "radokit/progression_properties.hpp"
#include "radokit/rado_search.hpp"
#include "radokit/uniformity.hpp"

using namespace radokit;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Independent oracles.

// Every r-colouring of [n] (colour of 1 fixed to 0) is passed to f until f
// returns false. Returns false if stopped early.
bool each_colouring(std::int64_t n, int r, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  while (true) {
    if (!f(col)) return false;
    std::size_t pos = col.size();
    while (pos > 1 && col[pos - 1] == r - 1) col[--pos] = 0;
    if (pos <= 1) return true;
    ++col[pos - 1];
  }
}

bool has_mono(const std::vector<int>& col, const std::vector<std::vector<std::int64_t>>& sets) {
  for (const auto& s : sets) {
    const int c = col[static_cast<std::size_t>(s[0] - 1)];
    bool mono = true;
    for (auto v : s) mono = mono && col[static_cast<std::size_t>(v - 1)] == c;
    if (mono) return true;
  }
  return false;
}

std::vector<std::vector<std::int64_t>> schur_triples(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t x = 1; x <= n; ++x) {
    for (std::int64_t y = 1; x + y <= n; ++y) out.push_back({x, y, x + y});
  }
  return out;
}

// Definition-level (m,p,c)-set.
std::set<std::int64_t> naive_set(const MpcParams& q, const Generator& s) {
  std::set<std::int64_t> out;
  for (std::int64_t j = 0; j <= q.m; ++j) {
    const std::int64_t lead = q.m - j;
    std::set<std::int64_t> partial{q.c * s[static_cast<std::size_t>(lead)]};
    for (std::int64_t l = lead + 1; l <= q.m; ++l) {
      std::set<std::int64_t> grown;
      for (auto v : partial) {
        for (std::int64_t i = -q.p; i <= q.p; ++i) grown.insert(v + i * s[static_cast<std::size_t>(l)]);
      }
      partial = grown;
    }
    out.insert(partial.begin(), partial.end());
  }
  return out;
}

// All (m,p,c)-sets with every element in [1, n], by generator enumeration.
std::vector<std::vector<std::int64_t>> naive_sets_within(const MpcParams& q, std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  Generator s(static_cast<std::size_t>(q.m) + 1, 1);
  while (true) {
    const auto set = naive_set(q, s);
    if (*set.begin() >= 1 && *set.rbegin() <= n) out.emplace_back(set.begin(), set.end());
    std::size_t pos = s.size();
    while (pos > 0 && s[pos - 1] == n) s[--pos] = 1;
    if (pos == 0) break;
    ++s[pos - 1];
  }
  return out;
}

bool subset_sum_zero(const std::vector<std::int64_t>& row) {
  for (unsigned mask = 1; mask < (1u << row.size()); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (mask >> i & 1u) sum += row[i];
    }
    if (sum == 0) return true;
  }
  return false;
}

std::int64_t floor_e_factorial(int r) {
  Rational lo = 0;
  Rational term = 1;
  for (int j = 0; j <= 30; ++j) {
    lo += term;
    term /= j + 1;
  }
  const Rational hi = lo + 2 * term;
  Integer fact = 1;
  for (int j = 2; j <= r; ++j) fact *= j;
  const Rational a = lo * fact;
  const Rational b = hi * fact;
  const Integer fa = a.get_num() / a.get_den();
  const Integer fb = b.get_num() / b.get_den();
  return fa == fb ? fa.get_si() : -1;
}

ModFunction random_bounded(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> v;
  for (std::int64_t i = 0; i < n; ++i) v.push_back(std::polar(unit(rng), 6.283185307179586 * unit(rng)));
  return ModFunction(n, std::move(v));
}

double fourier_u2(const ModFunction& f) {
  const std::int64_t n = f.modulus();
  double sum = 0.0;
  for (std::int64_t xi = 0; xi < n; ++xi) {
    Complex c = 0.0;
    for (std::int64_t x = 0; x < n; ++x) {
      c += f(x) * std::polar(1.0, -6.283185307179586 * static_cast<double>(x * xi % n) / static_cast<double>(n));
    }
    sum += std::pow(std::abs(c / static_cast<double>(n)), 4);
  }
  return std::pow(sum, 0.25);
}

// ---------------------------------------------------------------------------
// Criteria.

Verdict ac1() {
  const IntegerMatrix schur = IntegerMatrix::from_rows({{1, 1, -1}});
  const SearchResult res = rado_number(schur, 2, 50);
  const auto triples5 = schur_triples(5);
  bool five_forced = each_colouring(5, 2, [&](const std::vector<int>& col) { return has_mono(col, triples5); });
  const bool cert_ok = res.certificate.n == 4 && !has_mono(res.certificate.assignment, schur_triples(4)) &&
                       !find_mono_solution(schur, res.certificate);
  Verdict v;
  v.ok = res.kind == ResultKind::Exact && res.value == 4 && cert_ok && five_forced;
  v.detail = std::string("kind=") + std::string(to_string(res.kind)) + " value=" + std::to_string(res.value) +
             " certificate=" + (cert_ok ? "valid" : "invalid") +
             " naive_all_colourings_of_5_forced=" + (five_forced ? "yes" : "no");
  return v;
}

Verdict ac2() {
  const IntegerMatrix schur = IntegerMatrix::from_rows({{1, 1, -1}});
  const SearchResult res = rado_number(schur, 3, 60, SolutionMode::All, SearchOptions{worker_count(), 0});
  const bool cert_ok = res.certificate.n == res.value && !has_mono(res.certificate.assignment, schur_triples(res.value));
  Verdict v;
  v.ok = res.kind == ResultKind::Exact && res.value == 13 && cert_ok;
  v.detail = std::string("kind=") + std::string(to_string(res.kind)) + " value=" + std::to_string(res.value) +
             " nodes=" + std::to_string(res.nodes) + " certificate=" + (cert_ok ? "valid" : "invalid");
  return v;
}

Verdict ac3() {
  const IntegerMatrix schur = IntegerMatrix::from_rows({{1, 1, -1}});
  const SearchResult r2 = rado_number(schur, 2, 50);
  const SearchResult r3 = rado_number(schur, 3, 50);
  bool ok = r2.kind == ResultKind::Exact && r3.kind == ResultKind::Exact && r2.value <= 5 && r3.value <= 16;
  std::string bounds;
  const std::int64_t expected[] = {5, 16, 65};
  for (int r = 2; r <= 4; ++r) {
    const std::int64_t b = schur_factorial_bound(r);
    ok = ok && b == expected[r - 2] && b == floor_e_factorial(r);
    bounds += (r > 2 ? "," : "") + std::to_string(b);
  }
  return {ok, "R(2)=" + std::to_string(r2.value) + " R(3)=" + std::to_string(r3.value) + " floor(e*r!)_{2,3,4}=" + bounds};
}

Verdict ac4() {
  std::int64_t literal = 0;
  std::int64_t padded = 0;
  std::int64_t disagreements = 0;
  const std::int64_t nonzero[] = {-3, -2, -1, 1, 2, 3};
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<std::int64_t> row;
      for (auto i : idx) row.push_back(nonzero[i]);
      ++literal;
      const bool got = is_partition_regular(IntegerMatrix::from_rows({row}));
      if (got != single_row_oracle(row) || got != subset_sum_zero(row)) ++disagreements;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == 5) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  // Every nonzero 1x4 row over [-3,3]; zero coefficients are free variables,
  // so the oracle sees only the nonzero entries.
  for (int code = 0; code < 2401; ++code) {
    std::vector<std::int64_t> row;
    std::vector<std::int64_t> support;
    int c = code;
    for (int i = 0; i < 4; ++i) {
      row.push_back(c % 7 - 3);
      c /= 7;
      if (row.back() != 0) support.push_back(row.back());
    }
    if (support.empty()) continue;
    ++padded;
    if (is_partition_regular(IntegerMatrix::from_rows({row})) != single_row_oracle(support)) ++disagreements;
  }
  return {disagreements == 0 && literal == 1554 && padded == 2400,
          "nonzero_rows_k<=4=" + std::to_string(literal) + " rows_1x4_over_[-3,3]=" + std::to_string(padded) +
              " disagreements=" + std::to_string(disagreements)};
}

Verdict ac5() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  int matrices = 0;
  int solutions = 0;
  int failures = 0;
  int attempts = 0;
  while (matrices < 30 && attempts < 100000) {
    ++attempts;
    const std::size_t rows = 1 + rng() % 2;
    const std::size_t cols = 2 + rng() % 3;
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (auto& r : m) {
      for (auto& x : r) x = entry(rng);
    }
    const IntegerMatrix a = IntegerMatrix::from_rows(m);
    const auto w = find_witness(a);
    if (!w) continue;
    ++matrices;
    MpcParams q = params_from_witness(*w);
    q.m = std::max<std::int64_t>(q.m, static_cast<std::int64_t>(w->blocks()) - 1);
    int generated = 0;
    while (generated < 12) {
      Generator s(static_cast<std::size_t>(q.m) + 1);
      for (auto& x : s) x = 1 + static_cast<std::int64_t>(rng() % 60);
      const auto set = naive_set(q, s);
      if (*set.begin() < 1) continue;
      ++generated;
      ++solutions;
      const IntegerVector x = extract_solution(a, *w, s);
      bool ok = is_zero(std::span<const Integer>(multiply(a, x)));
      for (const auto& v : x) ok = ok && v.fits_slong_p() && set.count(v.get_si()) == 1;
      if (!ok) ++failures;
    }
  }
  return {matrices >= 25 && failures == 0,
          "matrices=" + std::to_string(matrices) + " solutions=" + std::to_string(solutions) +
              " failures=" + std::to_string(failures)};
}

Verdict ac6() {
  const auto outcomes = run_progression_suite(ProgressionSuiteConfig{1, 1000, 1000});
  bool ok = outcomes.size() == 10;
  std::string detail;
  for (const auto& o : outcomes) {
    ok = ok && o.passed() && o.cases >= 1000;
    if (!o.passed()) detail += o.name + " failed: " + o.first_failure + "; ";
  }
  return {ok, "properties=" + std::to_string(outcomes.size()) + " instances=1000 " +
                  (detail.empty() ? std::string("failures=0") : detail)};
}

Verdict ac7() {
  const unsigned threads = worker_count();
  std::mt19937_64 rng(77);
  const std::int64_t moduli[] = {17, 31, 53};
  int functions = 0;
  int violations = 0;
  double worst_fourier = 0.0;
  std::string first;
  for (int n_idx = 0; n_idx < 3; ++n_idx) {
    const std::int64_t n = moduli[n_idx];
    const int count = n_idx == 2 ? 66 : 67;
    std::vector<ModFunction> fs;
    for (int i = 0; i < count; ++i) fs.push_back(random_bounded(rng, n));
    std::vector<std::vector<double>> norms(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (int k = 1; k <= 4; ++k) norms[i].push_back(gowers_norm(fs[i], k, threads));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      ++functions;
      const ModFunction& f = fs[i];
      const ModFunction& g = fs[(i + 1) % fs.size()];
      const Complex lambda(0.6 * std::cos(static_cast<double>(i)), 0.6 * std::sin(static_cast<double>(i)));
      const ModFunction sum = f.scaled(0.5) + g.scaled(0.5);
      const ModFunction scaled = f.scaled(lambda);
      for (int k = 1; k <= 4; ++k) {
        const double fk = norms[i][static_cast<std::size_t>(k - 1)];
        const double gk = norms[(i + 1) % fs.size()][static_cast<std::size_t>(k - 1)];
        bool ok = true;
        if (k < 4) ok = ok && fk <= norms[i][static_cast<std::size_t>(k)] + 1e-9;
        ok = ok && std::abs(gowers_norm(scaled, k, threads) - std::abs(lambda) * fk) <= 1e-9;
        if (k >= 2) ok = ok && gowers_norm(sum, k, threads) <= 0.5 * fk + 0.5 * gk + 1e-9;
        if (!ok) {
          ++violations;
          if (first.empty()) first = " first=N" + std::to_string(n) + ",k" + std::to_string(k) + ",i" + std::to_string(i);
        }
      }
      if (n != 53) {
        const double diff = std::abs(norms[i][1] - fourier_u2(f));
        worst_fourier = std::max(worst_fourier, diff);
      }
    }
  }
  return {functions == 200 && violations == 0 && worst_fourier <= 1e-9,
          "functions=" + std::to_string(functions) + " violations=" + std::to_string(violations) +
              " max_fourier_diff=" + num(worst_fourier) + first};
}

Verdict ac8() {
  std::mt19937_64 rng(88);
  const LinearSystemMap schur({{1, 0}, {0, 1}, {1, 1}});
  int trials = 0;
  int violations = 0;
  int primes = 0;
  double min_slack = 1e9;
  std::string first;
  for (std::int64_t n = 31; n <= 101; ++n) {
    if (!is_prime(n)) continue;
    ++primes;
    for (int t = 0; t < 100; ++t) {
      std::vector<ModFunction> fs{random_bounded(rng, n), random_bounded(rng, n), random_bounded(rng, n)};
      const CountReport rep = gvn_report(schur, fs, 2, n);
      ++trials;
      min_slack = std::min(min_slack, rep.slack);
      if (rep.slack < -1e-9) {
        ++violations;
        if (first.empty()) first = " first=N" + std::to_string(n) + ",trial" + std::to_string(t);
      }
    }
  }
  return {violations == 0 && trials == primes * 100,
          "primes=" + std::to_string(primes) + " trials=" + std::to_string(trials) + " violations=" +
              std::to_string(violations) + " min_slack=" + num(min_slack) + first};
}

Verdict ac9() {
  const MpcParams q{1, 1, 2};
  const std::vector<Progression> ps{Progression::make(3, 1, 2), Progression::make(3, 1, 2)};
  int sets = 0;
  int disagreements = 0;
  int positive = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::int64_t> a;
    for (std::int64_t v = 1; v <= 10; ++v) {
      if (mask >> (v - 1) & 1u) a.push_back(v);
    }
    const bool q_pos = q_count(IntegerSet(a), q, ps) > 0;
    const bool embeds = find_mpc_in_set(a, q, 10).has_value();
    ++sets;
    positive += q_pos ? 1 : 0;
    if (q_pos != embeds) ++disagreements;
  }
  return {sets == 1024 && disagreements == 0,
          "subsets=" + std::to_string(sets) + " nonzero=" + std::to_string(positive) +
              " disagreements=" + std::to_string(disagreements)};
}

Verdict ac10() {
  bool ok = true;
  std::ostringstream diag;
  const std::vector<std::pair<MpcParams, std::vector<Progression>>> cases{
      {MpcParams{1, 1, 2}, {Progression::make(3, 1, 2), Progression::make(3, 1, 2)}},
      {MpcParams{2, 1, 2}, {Progression::make(10, 1, 3), Progression::make(6, 1, 2), Progression::make(3, 1, 1)}},
  };
  std::mt19937_64 rng(1010);
  for (const auto& [q, ps] : cases) {
    std::vector<std::int64_t> window;
    for (std::int64_t v = -200; v <= 200; ++v) window.push_back(v);
    const FactorizationGap full = factorization_gap(IntegerSet(window), q, ps);
    const FactorizationGap empty = factorization_gap(IntegerSet(), q, ps);
    ok = ok && full.gap == 0 && full.gap_all == 0 && full.q_m == 1 && empty.gap == 0 && empty.gap_all == 0;
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      std::vector<std::int64_t> half;
      for (auto v : window) {
        if (rng() % 2 == 0) half.push_back(v);
      }
      const FactorizationGap g = factorization_gap(IntegerSet(half), q, ps);
      worst = std::max(worst, g.gap.get_d());
    }
    diag << " m=" << q.m << ":max_gap_half_density=" << num(worst);
  }
  return {ok, "full_window_gap=0 empty_gap=0" + diag.str()};
}

Verdict ac11() {
  bool ok = true;
  std::string zero;
  for (std::int64_t c : {1, 2, 3, 5}) {
    for (std::int64_t p : {1, 2}) {
      const SearchResult r = mpc_threshold(MpcParams{0, p, c}, 2, 30);
      ok = ok && r.kind == ResultKind::Exact && r.value == c;
    }
  }
  const MpcParams q{1, 1, 1};
  const SearchResult one = mpc_threshold(q, 1, 30);
  ok = ok && one.kind == ResultKind::Exact && one.value == 3;
  const SearchResult two = mpc_threshold(q, 2, 60, SearchOptions{worker_count(), 0});
  bool oracle_t = false;
  bool oracle_prev = false;
  if (two.kind == ResultKind::Exact && two.value >= 2 && two.value <= 24) {
    const std::int64_t t = two.value;
    const auto at_t = naive_sets_within(q, t);
    oracle_t = each_colouring(t, 2, [&](const std::vector<int>& col) { return has_mono(col, at_t); });
    const auto below = naive_sets_within(q, t - 1);
    oracle_prev = !each_colouring(t - 1, 2, [&](const std::vector<int>& col) { return has_mono(col, below); });
    ok = ok && oracle_t && oracle_prev && !has_mono(two.certificate.assignment, below) &&
         two.certificate.n == t - 1;
  } else {
    ok = false;
  }
  return {ok, "(0,p,c)=c ok (1,1,1),r=1: " + std::to_string(one.value) + " (1,1,1),r=2: " +
                  std::string(to_string(two.kind)) + "(" + std::to_string(two.value) + ")" +
                  " oracle_forced_at_T=" + (oracle_t ? "yes" : "no") +
                  " oracle_avoidable_at_T-1=" + (oracle_prev ? "yes" : "no")};
}

Verdict ac12() {
  bool ok = true;
  std::string detail;
  for (const char* seed : {"1", "7", "12345"}) {
    std::vector<std::string> outs;
    for (const char* threads : {"1", "1", "4", "4"}) {
      std::ostringstream out;
      std::ostringstream err;
      const int code = cli::run({"radokit", "selftest", "--seed", seed, "--threads", threads}, out, err);
      outs.push_back(out.str());
      ok = ok && code == cli::kExitOk;
    }
    const bool same = std::all_of(outs.begin(), outs.end(), [&](const std::string& s) { return s == outs[0]; });
    ok = ok && same && !outs[0].empty();
    detail += std::string(" seed=") + seed + (same ? ":identical" : ":differs");
  }
  return {ok, "runs=4 threads=1,1,4,4" + detail};
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_seconds;  // 0 = none
  Verdict (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "schur_r2_exact_4", 1.0, ac1},
      {"AC2", "schur_r3_exact_13", 60.0, ac2},
      {"AC3", "factorial_bound", 0.0, ac3},
      {"AC4", "single_row_criterion", 60.0, ac4},
      {"AC5", "deuber_pipeline", 30.0, ac5},
      {"AC6", "progression_properties", 10.0, ac6},
      {"AC7", "gowers_norm_properties", 0.0, ac7},
      {"AC8", "gvn_probe", 0.0, ac8},
      {"AC9", "q_iff_embedding", 0.0, ac9},
      {"AC10", "factorization_gap", 0.0, ac10},
      {"AC11", "mpc_threshold", 300.0, ac11},
      {"AC12", "selftest_determinism", 0.0, ac12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || secs < c.limit_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failed;
    std::cout << c.id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << c.name << ' ' << v.detail << " time="
              << num(secs) << 's';
    if (c.limit_seconds > 0.0) std::cout << " limit=" << num(c.limit_seconds) << 's';
    std::cout << '\n' << std::flush;
  }
  std::cout << "acceptance: " << (std::size(criteria) - failed) << '/' << std::size(criteria) << " passed\n";
  return failed == 0 ? 0 : 1;
}
