#include "radokit/rado_search.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "radokit/text_io.hpp"

namespace radokit {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::string_view to_string(SolutionMode mode) {
  switch (mode) {
    case SolutionMode::All:
      return "all";
    case SolutionMode::NonConstant:
      return "nonconstant";
    case SolutionMode::Injective:
      return "injective";
  }
  return "all";
}

SolutionMode parse_solution_mode(std::string_view text) {
  if (text == "all") return SolutionMode::All;
  if (text == "nonconstant") return SolutionMode::NonConstant;
  if (text == "injective") return SolutionMode::Injective;
  throw InvalidArgument("unknown mode '" + std::string(text) +
                        "' (expected all|nonconstant|injective)");
}

std::string_view to_string(ResultKind kind) {
  return kind == ResultKind::Exact ? "Exact" : "AtLeast";
}

void Colouring::validate() const {
  if (n < 0) throw InvalidArgument("colouring size must be >= 0");
  if (colours < 1) throw InvalidArgument("colouring needs at least one colour");
  if (assignment.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("colouring has wrong number of entries");
  }
  for (int c : assignment) {
    if (c < 0 || c >= colours) throw InvalidArgument("colour index out of range");
  }
}

Colouring Colouring::restricted(std::int64_t m) const {
  if (m < 0 || m > n) throw InvalidArgument("restriction size out of range");
  return Colouring{m, colours,
                   std::vector<int>(assignment.begin(), assignment.begin() + m)};
}

void write_colouring(std::ostream& out, const Colouring& c) {
  out << c.n << ' ' << c.colours << '\n';
  for (std::size_t i = 0; i < c.assignment.size(); ++i) {
    if (i) out << ' ';
    out << c.assignment[i];
  }
  out << '\n';
}

Colouring read_colouring(std::istream& in) {
  LineReader reader(in);
  const std::string header = reader.expect("colouring header \"N r\"");
  const std::size_t header_line = reader.line_number();
  const auto dims = parse_int64s(header, header_line);
  if (dims.size() != 2 || dims[0] < 0 || dims[1] < 1 || dims[1] > 1024) {
    throw ParseError(header_line, "header must be \"N r\" with N >= 0, r >= 1");
  }
  Colouring c;
  c.n = dims[0];
  c.colours = static_cast<int>(dims[1]);
  while (c.assignment.size() < static_cast<std::size_t>(c.n)) {
    const std::string line = reader.expect("colour indices");
    for (std::int64_t v : parse_int64s(line, reader.line_number())) {
      if (v < 0 || v >= c.colours) {
        throw ParseError(reader.line_number(), "colour index out of range");
      }
      c.assignment.push_back(static_cast<int>(v));
    }
  }
  if (c.assignment.size() != static_cast<std::size_t>(c.n)) {
    throw ParseError(reader.line_number(), "too many colour indices");
  }
  if (reader.next()) throw ParseError(reader.line_number(), "trailing data after colouring");
  return c;
}

SolutionTable::SolutionTable(std::int64_t n, std::size_t dimension)
    : n_(n), d_(dimension), by_max_(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)) + 1) {}

void SolutionTable::add(std::vector<std::int64_t> x) {
  if (x.size() != d_) throw InvalidArgument("solution has wrong dimension");
  const std::int64_t top = *std::max_element(x.begin(), x.end());
  if (top < 1 || top > n_ || *std::min_element(x.begin(), x.end()) < 1) {
    throw InvalidArgument("solution coordinate out of range");
  }
  by_max_[static_cast<std::size_t>(top)].push_back(std::move(x));
  ++count_;
}

std::vector<std::vector<std::int64_t>> SolutionTable::all() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(count_);
  for (const auto& bucket : by_max_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

namespace {

bool keep(const std::vector<std::int64_t>& x, SolutionMode mode) {
  switch (mode) {
    case SolutionMode::All:
      return true;
    case SolutionMode::NonConstant:
      return std::any_of(x.begin(), x.end(), [&](std::int64_t v) { return v != x[0]; });
    case SolutionMode::Injective: {
      std::vector<std::int64_t> s(x);
      std::sort(s.begin(), s.end());
      return std::adjacent_find(s.begin(), s.end()) == s.end();
    }
  }
  return true;
}

}  // namespace

SolutionTable kernel_solutions(const IntegerMatrix& a, std::int64_t n, SolutionMode mode) {
  if (n < 0) throw InvalidArgument("N must be >= 0");
  const std::size_t d = a.cols();
  SolutionTable table(n, d);
  if (n == 0) return table;

  const RowReduction red = row_reduce(a.to_rational());
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  if (free.empty()) return table;  // only the zero vector
  if (std::pow(static_cast<double>(n), static_cast<double>(free.size())) >
      kMaxKernelEnumeration) {
    throw SearchSpaceTooLarge("kernel enumeration of N^" + std::to_string(free.size()) +
                              " points exceeds cap");
  }

  // Pivot row i reads den_i * x_{pivot_i} = -sum_j num_ij * x_{free_j}.
  const std::size_t rank = red.rank;
  std::vector<std::int64_t> den(rank);
  std::vector<std::vector<std::int64_t>> num(rank, std::vector<std::int64_t>(free.size()));
  for (std::size_t i = 0; i < rank; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < free.size(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), red.reduced(i, free[j]).get_den_mpz_t());
    }
    if (!l.fits_slong_p()) throw InvalidArgument("kernel coefficients too large");
    den[i] = l.get_si();
    for (std::size_t j = 0; j < free.size(); ++j) {
      const Rational scaled = -red.reduced(i, free[j]) * l;
      if (!scaled.get_num().fits_slong_p()) throw InvalidArgument("kernel coefficients too large");
      num[i][j] = scaled.get_num().get_si();
    }
  }

  std::vector<std::int64_t> fv(free.size(), 1);
  std::vector<std::int64_t> x(d);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < free.size(); ++j) x[free[j]] = fv[j];
    for (std::size_t i = 0; i < rank && ok; ++i) {
      Wide acc = 0;
      for (std::size_t j = 0; j < free.size(); ++j) {
        acc += static_cast<Wide>(num[i][j]) * fv[j];
      }
      if (acc % den[i] != 0) {
        ok = false;
        break;
      }
      const Wide v = acc / den[i];
      if (v < 1 || v > n) {
        ok = false;
        break;
      }
      x[red.pivot_cols[i]] = static_cast<std::int64_t>(v);
    }
    if (ok && keep(x, mode)) table.add(x);
    std::size_t pos = free.size();
    while (pos > 0 && fv[pos - 1] == n) fv[--pos] = 1;
    if (pos == 0) break;
    ++fv[pos - 1];
  }
  return table;
}

std::optional<MonoSolution> find_mono_solution(const IntegerMatrix& a,
                                               const Colouring& colouring,
                                               SolutionMode mode) {
  colouring.validate();
  const SolutionTable table = kernel_solutions(a, colouring.n, mode);
  for (std::int64_t top = 1; top <= colouring.n; ++top) {
    for (const auto& x : table.with_max(top)) {
      const int c = colouring.colour_of(x[0]);
      if (std::all_of(x.begin(), x.end(),
                      [&](std::int64_t v) { return colouring.colour_of(v) == c; })) {
        return MonoSolution{c, x};
      }
    }
  }
  return std::nullopt;
}

namespace {

void check_search_args(int colours, std::int64_t n_max) {
  if (colours < 1 || colours > 31) throw InvalidArgument("colour count must be in [1, 31]");
  if (n_max < 0 || n_max > kMaxSearchN) {
    throw InvalidArgument("max N must be in [0, " + std::to_string(kMaxSearchN) + "]");
  }
}

AvoidanceOptions engine_options(const SearchOptions& o) {
  AvoidanceOptions out;
  out.threads = o.threads;
  out.node_limit = o.node_limit;
  return out;
}

}  // namespace

SearchResult rado_number(const IntegerMatrix& a, int colours, std::int64_t n_max,
                         SolutionMode mode, const SearchOptions& options) {
  check_search_args(colours, n_max);
  const SolutionTable solutions = kernel_solutions(a, n_max, mode);
  ConstraintTable table(n_max);
  for (std::int64_t top = 1; top <= n_max; ++top) {
    for (const auto& x : solutions.with_max(top)) table.add(x);
  }
  table.finalize();
  const AvoidanceResult r = longest_avoiding_prefix(table, colours, engine_options(options));

  SearchResult out;
  out.value = r.longest;
  out.certificate = Colouring{r.longest, colours, r.colouring};
  out.nodes = r.nodes;
  out.kind = (r.complete && r.longest < n_max) ? ResultKind::Exact : ResultKind::AtLeast;
  return out;
}

std::int64_t schur_factorial_bound(int r) {
  if (r < 0 || r > 12) throw InvalidArgument("schur_factorial_bound supports 0 <= r <= 12");
  // e * r! = sum_{j<=r} r!/j! + sum_{j>r} r!/j!, where the tail lies in (0,1)
  // for r >= 1; for r = 0 it is e - 1.
  if (r == 0) return 2;
  std::int64_t term = 1;  // r!/r!
  std::int64_t sum = 1;
  for (int j = r; j >= 1; --j) {
    term *= j;  // r!/(j-1)!
    sum += term;
  }
  return sum;
}

SearchResult mpc_threshold(const MpcParams& params, int colours, std::int64_t n_max,
                           const SearchOptions& options) {
  params.validate();
  check_search_args(colours, n_max);
  ConstraintTable table(n_max);
  for (const auto& s : generators_within(params, n_max)) {
    table.add(mpc_elements(params, s).elements);
  }
  table.finalize();
  const AvoidanceResult r = longest_avoiding_prefix(table, colours, engine_options(options));

  SearchResult out;
  out.certificate = Colouring{r.longest, colours, r.colouring};
  out.nodes = r.nodes;
  if (r.complete && r.longest < n_max) {
    out.kind = ResultKind::Exact;
    out.value = r.longest + 1;
  } else {
    out.kind = ResultKind::AtLeast;
    out.value = r.longest;
  }
  return out;
}

bool has_mono_mpc(const MpcParams& params, const Colouring& colouring) {
  colouring.validate();
  std::vector<std::vector<std::int64_t>> classes(static_cast<std::size_t>(colouring.colours));
  for (std::int64_t v = 1; v <= colouring.n; ++v) {
    classes[static_cast<std::size_t>(colouring.colour_of(v))].push_back(v);
  }
  for (const auto& cls : classes) {
    if (find_mpc_in_set(cls, params, colouring.n)) return true;
  }
  return false;
}

}  // namespace radokit
