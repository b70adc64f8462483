#pragma once

// Deuber (m,p,c)-sets: parameters derived from a columns-condition witness,
// element generation, the indexing family of linear forms, and extraction of
// a kernel vector of A lying inside a given (m,p,c)-set.
//
// For generator s = (s_0, ..., s_m) the set is the union over rows
// j = 0..m of { c*s_{m-j} + i_{m-j+1}*s_{m-j+1} + ... + i_m*s_m : |i| <= p }.
// A linear form of level t evaluates i_0*s_0 + ... + i_{t-1}*s_{t-1} + c*s_t,
// so the forms of a parameter triple enumerate the set of the reversed
// generator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "radokit/columns_condition.hpp"
#include "radokit/exact_linalg.hpp"

namespace radokit {

struct MpcParams {
  std::int64_t m = 0;
  std::int64_t p = 1;
  std::int64_t c = 1;

  // Throws InvalidArgument for m < 0, p < 1 or c < 1.
  void validate() const;

  friend bool operator==(const MpcParams&, const MpcParams&) = default;
};

using Generator = std::vector<std::int64_t>;

struct FormIndex {
  std::int64_t level = 0;
  std::vector<std::int64_t> coeffs;  // i_0..i_{level-1}, each |i_j| <= p
  std::int64_t leading = 1;          // c, sitting at position `level`

  friend bool operator==(const FormIndex&, const FormIndex&) = default;
};

struct MpcSet {
  std::vector<std::int64_t> elements;  // sorted, unique
  Generator generator;
  MpcParams params;
  bool valid = false;  // every element >= 1

  bool contains(std::int64_t x) const;
};

// c = lcm of denominators of alpha, p = max(1, max |c*alpha|),
// m = 1 + rank(alpha).
MpcParams params_from_witness(const Witness& w);

// Throws InvalidArgument if s.size() != m + 1 or on int64 overflow.
MpcSet mpc_elements(const MpcParams& params, std::span<const std::int64_t> s);

// All sum_{t<=m} (2p+1)^t forms, ordered by level then lexicographically by
// coefficients. Throws FormsOverlap when c <= p.
std::vector<FormIndex> enumerate_forms(const MpcParams& params);

std::int64_t eval_form(const FormIndex& form, std::span<const std::int64_t> s);

// |D_{m,p,c}| = sum_{t=0}^m (2p+1)^t.
std::int64_t form_count(const MpcParams& params);
// |D_{p,c;t}| = (2p+1)^t.
std::int64_t level_form_count(std::int64_t p, std::int64_t t);

// Kernel vector of A inside the (len(s)-1, p, c)-set generated by s, where p
// and c come from params_from_witness(w). Requires len(s) >= t. Only the
// last t generators are used: block I_k is led by s_{m-t+k}.
IntegerVector extract_solution(const IntegerMatrix& a, const Witness& w,
                               std::span<const std::int64_t> s);

// Lexicographically least generator s in [1, bound]^{m+1} whose (valid)
// (m,p,c)-set lies inside X. X must be sorted ascending.
std::optional<Generator> find_mpc_in_set(std::span<const std::int64_t> sorted_x,
                                         const MpcParams& params,
                                         std::int64_t bound);

// All generators whose set is valid and contained in [1, n].
std::vector<Generator> generators_within(const MpcParams& params, std::int64_t n);

}  // namespace radokit
