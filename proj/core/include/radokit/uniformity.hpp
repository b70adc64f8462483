#pragma once

// Gowers uniformity norms on Z/NZ, the linear-configuration average
// Lambda_Psi, and exact counts of (m,p,c)-configurations over progressions.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "radokit/deuber.hpp"
#include "radokit/exact_linalg.hpp"
#include "radokit/progressions.hpp"

namespace radokit {

using Complex = std::complex<double>;

class ModFunction {
 public:
  ModFunction(std::int64_t modulus, std::vector<Complex> values);

  static ModFunction constant(std::int64_t modulus, Complex value);
  static ModFunction indicator(std::int64_t modulus, std::span<const std::int64_t> support);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  // Argument reduced into [0, N).
  Complex operator()(std::int64_t x) const noexcept;

  double sup_norm() const noexcept;
  bool one_bounded() const noexcept { return sup_norm() <= 1.0 + 1e-12; }

  ModFunction scaled(Complex lambda) const;
  friend ModFunction operator+(const ModFunction& a, const ModFunction& b);

 private:
  std::int64_t modulus_;
  std::vector<Complex> values_;
};

inline constexpr int kMaxGowersOrder = 4;

// ||f||_{U^k(Z/NZ)} for 1 <= k <= 4. The h-average at the outermost level is
// split across `threads` workers; the per-h partial averages are reduced
// in index order, so the result does not depend on the thread count.
double gowers_norm(const ModFunction& f, int k, unsigned threads = 1);

// Integer forms psi_1..psi_l (rows) on Z^d; no row may be zero.
class LinearSystemMap {
 public:
  explicit LinearSystemMap(std::vector<std::vector<std::int64_t>> rows);
  static LinearSystemMap from_matrix(const IntegerMatrix& m);

  std::size_t forms() const noexcept { return rows_.size(); }
  std::size_t dimension() const noexcept { return rows_.front().size(); }
  const std::vector<std::int64_t>& form(std::size_t i) const { return rows_.at(i); }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// E_{x in [N]^d} prod_i f_i(psi_i(x) mod N) by enumeration of {1..N}^d.
Complex lambda_count(const LinearSystemMap& psi, std::span<const ModFunction> fs,
                     std::int64_t n);

// True iff every pair of distinct forms is linearly independent.
bool pairwise_independent(const LinearSystemMap& psi);

bool is_prime(std::int64_t n);

struct CountReport {
  Complex lambda_value;
  double lambda_abs = 0.0;
  std::vector<double> norms;  // ||f_i||_{U^k}
  double min_norm = 0.0;
  double slack = 0.0;  // min_norm - |lambda|; negative values are findings
};

// Requires pairwise independent forms, prime N and 1-bounded functions.
CountReport gvn_report(const LinearSystemMap& psi, std::span<const ModFunction> fs,
                       int k, std::int64_t n, unsigned threads = 1);

// Finite subset of Z with O(1) membership; built from any list of values.
class IntegerSet {
 public:
  IntegerSet() = default;
  explicit IntegerSet(std::vector<std::int64_t> values);

  bool contains(std::int64_t x) const noexcept {
    if (bits_.empty() || x < lo_ || x > hi_) return false;
    return bits_[static_cast<std::size_t>(x - lo_)];
  }
  const std::vector<std::int64_t>& sorted() const noexcept { return sorted_; }
  bool empty() const noexcept { return sorted_.empty(); }

 private:
  std::vector<std::int64_t> sorted_;
  std::vector<bool> bits_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
};

inline constexpr std::int64_t kMaxQTuples = 10'000'000;

// Q_{m,p,c}(A; P_0..P_m): the fraction of generator tuples s in P_0 x ... x P_m
// with every form value L_i(s) in A. Requires Ps.size() == m+1 and c > p.
Rational q_count(const IntegerSet& a, const MpcParams& params,
                 std::span<const Progression> ps);

struct FactorizationGap {
  Rational q_m;                // Q_{m,p,c}(A; P_0..P_m)
  Rational q_prev;             // Q_{m-1,p,c}(A; P_0..P_{m-1})
  Rational alpha;              // density of A on c*P_m
  Rational predicted;          // alpha^{|D_{p,c;m}|} * q_prev
  Rational gap;                // |q_m - predicted|
  Rational predicted_all;      // alpha^{|D_{m,p,c}|} * q_prev
  Rational gap_all;            // |q_m - predicted_all|
  std::int64_t level_exponent = 0;  // |D_{p,c;m}|
  std::int64_t full_exponent = 0;   // |D_{m,p,c}|
};

FactorizationGap factorization_gap(const IntegerSet& a, const MpcParams& params,
                                   std::span<const Progression> ps);

Rational rational_pow(const Rational& base, std::int64_t exponent);

}  // namespace radokit
