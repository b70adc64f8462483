#include "selftest.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "radokit/columns_condition.hpp"
#include "radokit/deuber.hpp"
#include "radokit/progression_properties.hpp"
#include "radokit/rado_search.hpp"
#include "radokit/uniformity.hpp"

namespace radokit::cli {

namespace {

struct Tally {
  std::string suite;
  std::int64_t cases = 0;
  std::int64_t failures = 0;

  void check(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
  bool passed() const { return failures == 0; }
};

void report(std::ostream& out, const Tally& t, const std::string& extra = {}) {
  out << "suite=" << t.suite << " cases=" << t.cases << " failures=" << t.failures
      << " status=" << (t.passed() ? "pass" : "fail");
  if (!extra.empty()) out << ' ' << extra;
  out << '\n';
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (auto& r : m) {
    for (auto& v : r) v = uniform(rng, -bound, bound);
  }
  return IntegerMatrix::from_rows(m);
}

// Generator whose set is valid: each s_j exceeds p times the sum of later
// generators.
Generator random_valid_generator(std::mt19937_64& rng, const MpcParams& params) {
  Generator s(static_cast<std::size_t>(params.m) + 1);
  std::int64_t tail = 0;
  for (std::size_t j = s.size(); j-- > 0;) {
    s[j] = params.p * tail + uniform(rng, 1, 6);
    tail += s[j];
  }
  return s;
}

Tally linalg_suite(std::mt19937_64& rng) {
  Tally t{"exact_linalg"};
  for (int n = 0; n < 200; ++n) {
    const auto rows = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto cols = static_cast<std::size_t>(uniform(rng, 1, 5));
    const IntegerMatrix a = random_matrix(rng, rows, cols, 4);
    const auto basis = kernel_basis(a);
    const RowReduction red = row_reduce(a.to_rational());
    bool ok = basis.size() == cols - red.rank;
    for (const auto& v : basis) ok = ok && is_zero(std::span<const Rational>(multiply(a, v)));
    const RowReduction again = row_reduce(red.reduced);
    ok = ok && again.reduced == red.reduced && again.rank == red.rank;
    // Recombination of a random integer target against the columns.
    std::vector<IntegerVector> columns;
    for (std::size_t c = 0; c < cols; ++c) columns.push_back(a.column(c));
    IntegerVector target(rows);
    for (auto& v : target) v = static_cast<long>(uniform(rng, -4, 4));
    const auto sol = solve_combination(columns, target);
    if (sol) {
      RationalVector sum(rows);
      for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) sum[r] += (*sol)[c] * columns[c][r];
      }
      for (std::size_t r = 0; r < rows; ++r) ok = ok && sum[r] == target[r];
    } else {
      std::vector<IntegerVector> extended = columns;
      extended.push_back(target);
      RationalMatrix m(rows, extended.size());
      for (std::size_t c = 0; c < extended.size(); ++c) {
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = extended[c][r];
      }
      ok = ok && rank(m) == red.rank + 1;
    }
    t.check(ok);
  }
  return t;
}

Tally columns_suite(std::mt19937_64& rng) {
  Tally t{"columns_condition"};
  // Exhaustive single-equation agreement for entries in [-3,3] \ {0}.
  const std::int64_t values[] = {-3, -2, -1, 1, 2, 3};
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<std::int64_t> row;
      for (std::size_t i : idx) row.push_back(values[i]);
      t.check(is_partition_regular(IntegerMatrix::from_rows({row})) == single_row_oracle(row));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == 5) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
  }
  // Soundness and column-permutation relabelling on random systems.
  for (int n = 0; n < 100; ++n) {
    const IntegerMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 2)),
                                          static_cast<std::size_t>(uniform(rng, 2, 5)), 3);
    const auto w = find_witness(a);
    if (!w) continue;
    std::vector<std::size_t> perm(a.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntegerMatrix b(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) b(r, perm[c]) = a(r, c);
    }
    t.check(verify_witness(a, *w) && verify_witness(b, permute_columns(*w, perm)));
  }
  return t;
}

Tally deuber_suite(std::mt19937_64& rng) {
  Tally t{"deuber"};
  int matrices = 0;
  while (matrices < 25) {
    const IntegerMatrix a = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 2)),
                                          static_cast<std::size_t>(uniform(rng, 2, 4)), 3);
    const auto w = find_witness(a);
    if (!w) continue;
    ++matrices;
    MpcParams params = params_from_witness(*w);
    params.m = std::max<std::int64_t>(params.m, static_cast<std::int64_t>(w->blocks()) - 1);
    for (int g = 0; g < 10; ++g) {
      const Generator s = random_valid_generator(rng, params);
      const MpcSet set = mpc_elements(params, s);
      const IntegerVector x = extract_solution(a, *w, s);
      bool ok = set.valid && is_zero(std::span<const Integer>(multiply(a, x)));
      for (const auto& v : x) ok = ok && v.fits_slong_p() && set.contains(v.get_si());
      t.check(ok);
    }
  }
  // Form/set duality and nesting for small parameters with c = p + 1.
  for (std::int64_t m = 0; m <= 2; ++m) {
    for (std::int64_t p = 1; p <= 2; ++p) {
      const MpcParams params{m, p, p + 1};
      const auto forms = enumerate_forms(params);
      t.check(static_cast<std::int64_t>(forms.size()) == form_count(params));
      for (int g = 0; g < 5; ++g) {
        const Generator s = random_valid_generator(rng, params);
        Generator rev(s.rbegin(), s.rend());
        std::vector<std::int64_t> vals;
        for (const auto& f : forms) vals.push_back(eval_form(f, rev));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        t.check(vals == mpc_elements(params, s).elements);
        if (m >= 1) {
          const MpcParams lower{m - 1, p, p + 1};
          const MpcSet inner = mpc_elements(lower, Generator(s.begin() + 1, s.end()));
          const MpcSet outer = mpc_elements(params, s);
          t.check(std::includes(outer.elements.begin(), outer.elements.end(),
                                inner.elements.begin(), inner.elements.end()));
        }
      }
    }
  }
  return t;
}

Tally progression_suite(std::uint64_t seed) {
  Tally t{"progressions"};
  for (const auto& o : run_progression_suite(ProgressionSuiteConfig{seed, 1000, 1000})) {
    t.cases += o.cases;
    t.failures += o.failures;
  }
  return t;
}

ModFunction random_bounded(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> v;
  for (std::int64_t i = 0; i < n; ++i) {
    v.push_back(std::polar(unit(rng), 6.283185307179586 * unit(rng)));
  }
  return ModFunction(n, std::move(v));
}

Tally gowers_suite(std::mt19937_64& rng, unsigned threads, std::string& extra) {
  Tally t{"uniformity"};
  double checksum = 0.0;
  for (std::int64_t n : {17, 31}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ModFunction f = random_bounded(rng, n);
      const ModFunction g = random_bounded(rng, n);
      double prev = 0.0;
      for (int k = 1; k <= 3; ++k) {
        const double fk = gowers_norm(f, k, threads);
        checksum += fk;
        if (k > 1) t.check(prev <= fk + 1e-9);
        prev = fk;
        const double scaled = gowers_norm(f.scaled(Complex(0.5, -0.25)), k, threads);
        t.check(std::abs(scaled - std::abs(Complex(0.5, -0.25)) * fk) <= 1e-9);
        if (k >= 2) {
          t.check(gowers_norm(f + g, k, threads) <=
                  fk + gowers_norm(g, k, threads) + 1e-9);
        }
      }
    }
  }
  // Generalised von Neumann probe on the Schur system.
  const LinearSystemMap schur({{1, 0}, {0, 1}, {1, 1}});
  double min_slack = 1.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ModFunction> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(random_bounded(rng, 31));
    const CountReport rep = gvn_report(schur, fs, 2, 31, threads);
    min_slack = std::min(min_slack, rep.slack);
    t.check(rep.slack >= -1e-9);
  }
  extra = "norm_checksum=" + fmt(checksum) + " gvn_min_slack=" + fmt(min_slack);
  return t;
}

Tally search_suite(unsigned threads, std::string& extra) {
  Tally t{"rado_search"};
  const SearchOptions opts{threads, 0};
  const IntegerMatrix schur = IntegerMatrix::from_rows({{1, 1, -1}});
  const IntegerMatrix ap = IntegerMatrix::from_rows({{2, -1, -1}});
  std::vector<std::int64_t> values;
  std::int64_t prev = -1;
  for (int r = 1; r <= 3; ++r) {
    const SearchResult res = rado_number(schur, r, 40, SolutionMode::All, opts);
    t.check(res.kind == ResultKind::Exact);
    t.check(!find_mono_solution(schur, res.certificate));
    t.check(res.value >= prev && res.value <= schur_factorial_bound(r));
    prev = res.value;
    values.push_back(res.value);
  }
  std::int64_t prev_mode = -1;
  for (auto mode : {SolutionMode::All, SolutionMode::NonConstant, SolutionMode::Injective}) {
    const SearchResult res = rado_number(ap, 2, 40, mode, opts);
    t.check(res.kind == ResultKind::Exact && !find_mono_solution(ap, res.certificate, mode));
    t.check(res.value >= prev_mode);
    prev_mode = res.value;
    values.push_back(res.value);
  }
  const SearchResult thr = mpc_threshold(MpcParams{1, 1, 1}, 2, 60, opts);
  t.check(thr.kind == ResultKind::Exact && !has_mono_mpc(MpcParams{1, 1, 1}, thr.certificate));
  values.push_back(thr.value);
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) joined += ',';
    joined += std::to_string(values[i]);
  }
  extra = "values=" + joined;
  return t;
}

Tally q_suite() {
  Tally t{"q_count"};
  const MpcParams params{1, 1, 2};
  const std::vector<Progression> ps{Progression{3, 1, 2}, Progression{3, 1, 2}};
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::int64_t> a;
    for (std::int64_t v = 1; v <= 10; ++v) {
      if (mask >> (v - 1) & 1u) a.push_back(v);
    }
    const bool q_pos = q_count(IntegerSet(a), params, ps) > 0;
    t.check(q_pos == find_mpc_in_set(a, params, 10).has_value());
  }
  return t;
}

}  // namespace

bool run_selftest(const SelftestOptions& options, std::ostream& out) {
  std::mt19937_64 rng(options.seed);
  out << "seed=" << options.seed << '\n';
  bool all = true;
  auto emit = [&](const Tally& t, const std::string& extra = {}) {
    report(out, t, extra);
    all = all && t.passed();
  };
  emit(linalg_suite(rng));
  emit(columns_suite(rng));
  emit(deuber_suite(rng));
  emit(progression_suite(options.seed));
  std::string extra;
  emit(gowers_suite(rng, options.threads, extra), extra);
  emit(search_suite(options.threads, extra), extra);
  emit(q_suite());
  out << "selftest=" << (all ? "pass" : "fail") << '\n';
  return all;
}

}  // namespace radokit::cli
