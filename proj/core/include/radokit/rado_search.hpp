#pragma once

// Exact Rado numbers and (m,p,c)-set thresholds by certified exhaustive
// colouring search.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radokit/colouring_engine.hpp"
#include "radokit/deuber.hpp"
#include "radokit/exact_linalg.hpp"

namespace radokit {

enum class SolutionMode { All, NonConstant, Injective };

std::string_view to_string(SolutionMode mode);
// Accepts "all", "nonconstant", "injective".
SolutionMode parse_solution_mode(std::string_view text);

// Colours 0..r-1 assigned to 1..N (assignment[i] colours i+1). Classes may be
// empty; N = 0 is allowed for the empty colouring.
struct Colouring {
  std::int64_t n = 0;
  int colours = 1;
  std::vector<int> assignment;

  // Throws InvalidArgument when sizes or colour indices are out of range.
  void validate() const;
  int colour_of(std::int64_t element) const {
    return assignment[static_cast<std::size_t>(element - 1)];
  }
  Colouring restricted(std::int64_t m) const;
};

// Certificate file: "N r" then N space-separated colour indices.
void write_colouring(std::ostream& out, const Colouring& c);
Colouring read_colouring(std::istream& in);

// Positive kernel vectors of A in [N]^d, grouped by maximum coordinate.
class SolutionTable {
 public:
  SolutionTable(std::int64_t n, std::size_t dimension);

  std::int64_t limit() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return d_; }
  std::size_t size() const noexcept { return count_; }
  // Solutions whose maximum coordinate is `n`.
  const std::vector<std::vector<std::int64_t>>& with_max(std::int64_t n) const {
    return by_max_.at(static_cast<std::size_t>(n));
  }
  // Every solution, by increasing maximum then enumeration order.
  std::vector<std::vector<std::int64_t>> all() const;

  void add(std::vector<std::int64_t> x);

 private:
  std::int64_t n_;
  std::size_t d_;
  std::size_t count_ = 0;
  std::vector<std::vector<std::vector<std::int64_t>>> by_max_;
};

inline constexpr double kMaxKernelEnumeration = 1e8;

// Throws SearchSpaceTooLarge when N^(free variables) exceeds 1e8.
SolutionTable kernel_solutions(const IntegerMatrix& a, std::int64_t n,
                               SolutionMode mode = SolutionMode::All);

struct MonoSolution {
  int colour = 0;
  std::vector<std::int64_t> x;
};

std::optional<MonoSolution> find_mono_solution(const IntegerMatrix& a,
                                               const Colouring& colouring,
                                               SolutionMode mode = SolutionMode::All);

enum class ResultKind { Exact, AtLeast };
std::string_view to_string(ResultKind kind);

struct SearchResult {
  ResultKind kind = ResultKind::AtLeast;
  std::int64_t value = 0;
  Colouring certificate;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

inline constexpr std::int64_t kMaxSearchN = 100000;

// Largest N <= n_max admitting an r-colouring of [N] with no monochromatic
// kernel vector. Exact(R) carries a colouring of [R] and means [R+1] was
// refuted; AtLeast(v) means a valid colouring of [v] is all that is known.
SearchResult rado_number(const IntegerMatrix& a, int colours, std::int64_t n_max,
                         SolutionMode mode = SolutionMode::All,
                         const SearchOptions& options = {});

// floor(e * r!) from the exact series sum_{j<=r} r!/j! (r <= 12).
std::int64_t schur_factorial_bound(int r);

// Least N such that every r-colouring of [N] has a colour class containing
// an (m,p,c)-set. Exact(T) carries an avoiding colouring of [T-1];
// AtLeast(n_max) carries an avoiding colouring of [n_max].
SearchResult mpc_threshold(const MpcParams& params, int colours, std::int64_t n_max,
                           const SearchOptions& options = {});

// True if some colour class of `colouring` contains an (m,p,c)-set.
bool has_mono_mpc(const MpcParams& params, const Colouring& colouring);

}  // namespace radokit
