#include "radokit/columns_condition.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "radokit/text_io.hpp"

namespace radokit {

ColumnPartition::ColumnPartition(std::vector<Block> blocks, std::size_t columns)
    : blocks_(std::move(blocks)),
      owner_(columns, static_cast<std::size_t>(-1)),
      columns_(columns) {
  if (blocks_.empty()) throw InvalidArgument("partition needs at least one block");
  std::size_t seen = 0;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    auto& b = blocks_[j];
    if (b.empty()) throw InvalidArgument("partition block is empty");
    std::sort(b.begin(), b.end());
    for (std::size_t i : b) {
      if (i >= columns) throw InvalidArgument("partition column out of range");
      if (owner_[i] != static_cast<std::size_t>(-1)) {
        throw InvalidArgument("partition blocks overlap");
      }
      owner_[i] = j;
      ++seen;
    }
  }
  if (seen != columns) throw InvalidArgument("partition does not cover all columns");
}

namespace {

using Mask = std::uint32_t;

IntegerVector column_sum(const IntegerMatrix& a, Mask mask) {
  IntegerVector sum(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!(mask >> c & 1u)) continue;
    for (std::size_t r = 0; r < a.rows(); ++r) sum[r] += a(r, c);
  }
  return sum;
}

std::vector<std::size_t> mask_members(Mask mask, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < d; ++c) {
    if (mask >> c & 1u) out.push_back(c);
  }
  return out;
}

// Depth-first search over ordered partitions with a fixed block count.
// Span-membership answers depend only on (used columns, next block) and are
// memoised.
class WitnessSearch {
 public:
  explicit WitnessSearch(const IntegerMatrix& a) : a_(a), d_(a.cols()) {
    columns_.reserve(d_);
    for (std::size_t c = 0; c < d_; ++c) columns_.push_back(a.column(c));
    // All non-empty subsets, ordered lexicographically as sorted index lists.
    const Mask full = (Mask{1} << d_) - 1;
    for (Mask m = 1; m <= full; ++m) subsets_.push_back(m);
    std::sort(subsets_.begin(), subsets_.end(), [&](Mask x, Mask y) {
      return mask_members(x, d_) < mask_members(y, d_);
    });
  }

  std::optional<Witness> run() {
    for (std::size_t t = 1; t <= d_; ++t) {
      target_blocks_ = t;
      chosen_.clear();
      if (extend(0)) return build();
    }
    return std::nullopt;
  }

 private:
  // Coefficients expressing sum(block) over the columns in `used`.
  const std::optional<RationalVector>& relation(Mask used, Mask block) {
    const std::uint64_t key = (std::uint64_t{used} << 32) | block;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::optional<RationalVector> sol;
    if (used == 0) {
      if (is_zero(std::span<const Integer>(column_sum(a_, block)))) {
        sol = RationalVector{};
      }
    } else {
      std::vector<IntegerVector> span_vectors;
      for (std::size_t c : mask_members(used, d_)) {
        span_vectors.push_back(columns_[c]);
      }
      sol = solve_combination(span_vectors, column_sum(a_, block));
    }
    return memo_.emplace(key, std::move(sol)).first->second;
  }

  bool extend(Mask used) {
    const std::size_t placed = chosen_.size();
    const Mask full = (Mask{1} << d_) - 1;
    const std::size_t remaining_cols = d_ - static_cast<std::size_t>(std::popcount(used));
    const std::size_t remaining_blocks = target_blocks_ - placed;
    if (remaining_blocks == 0) return used == full;
    if (remaining_cols < remaining_blocks) return false;
    for (Mask block : subsets_) {
      if (block & used) continue;
      const std::size_t size = static_cast<std::size_t>(std::popcount(block));
      // Leave at least one column for each later block.
      if (remaining_cols - size < remaining_blocks - 1) continue;
      if (remaining_blocks == 1 && (used | block) != full) continue;
      if (!relation(used, block)) continue;
      chosen_.push_back(block);
      if (extend(used | block)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  Witness build() {
    const std::size_t t = chosen_.size();
    std::vector<ColumnPartition::Block> blocks;
    for (Mask m : chosen_) blocks.push_back(mask_members(m, d_));
    RationalMatrix alpha(d_, t);
    Mask used = 0;
    for (std::size_t j = 0; j < t; ++j) {
      const auto& sol = relation(used, chosen_[j]);
      const auto members = mask_members(used, d_);
      for (std::size_t l = 0; l < members.size(); ++l) {
        alpha(members[l], j) = (*sol)[l];
      }
      used |= chosen_[j];
    }
    return Witness{ColumnPartition(std::move(blocks), d_), std::move(alpha)};
  }

  const IntegerMatrix& a_;
  std::size_t d_;
  std::vector<IntegerVector> columns_;
  std::vector<Mask> subsets_;
  std::vector<Mask> chosen_;
  std::size_t target_blocks_ = 0;
  std::map<std::uint64_t, std::optional<RationalVector>> memo_;
};

}  // namespace

bool verify_witness(const IntegerMatrix& a, const Witness& w) {
  const std::size_t d = a.cols();
  const std::size_t t = w.partition.size();
  if (w.partition.columns() != d || w.alpha.rows() != d || w.alpha.cols() != t) {
    throw InvalidArgument("malformed witness: dimensions do not match the matrix");
  }
  for (std::size_t j = 0; j < t; ++j) {
    RationalVector lhs(a.rows());
    RationalVector rhs(a.rows());
    for (std::size_t i : w.partition.block(j)) {
      for (std::size_t r = 0; r < a.rows(); ++r) lhs[r] += a(r, i);
    }
    for (std::size_t i = 0; i < d; ++i) {
      const Rational& coeff = w.alpha(i, j);
      if (coeff == 0) continue;
      if (w.partition.block_of(i) >= j) return false;
      for (std::size_t r = 0; r < a.rows(); ++r) rhs[r] += coeff * a(r, i);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::optional<Witness> find_witness(const IntegerMatrix& a,
                                    std::size_t column_cap) {
  if (a.cols() > column_cap || a.cols() > 31) {
    throw SearchSpaceTooLarge("columns-condition search space too large: " +
                              std::to_string(a.cols()) + " columns exceeds cap " +
                              std::to_string(column_cap));
  }
  return WitnessSearch(a).run();
}

bool is_partition_regular(const IntegerMatrix& a, std::size_t column_cap) {
  return find_witness(a, column_cap).has_value();
}

bool single_row_oracle(std::span<const std::int64_t> row) {
  if (row.size() > 30) throw SearchSpaceTooLarge("row too long for subset enumeration");
  for (std::int64_t v : row) {
    if (v == 0) throw InvalidArgument("single_row_oracle: coefficients must be nonzero");
  }
  const std::uint32_t full = (std::uint32_t{1} << row.size()) - 1;
  for (std::uint32_t m = 1; m <= full && full != 0; ++m) {
    Integer sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (m >> i & 1u) sum += static_cast<long>(row[i]);
    }
    if (sum == 0) return true;
  }
  return false;
}

std::size_t predicted_blocks(const Witness& w) { return 1 + rank(w.alpha); }

void write_witness(std::ostream& out, const Witness& w) {
  out << w.blocks() << '\n';
  for (std::size_t j = 0; j < w.blocks(); ++j) {
    out << "I_" << (j + 1) << ':';
    for (std::size_t i : w.partition.block(j)) out << ' ' << (i + 1);
    out << '\n';
  }
  for (std::size_t i = 0; i < w.alpha.rows(); ++i) {
    for (std::size_t j = 0; j < w.alpha.cols(); ++j) {
      if (j) out << ' ';
      const Rational& q = w.alpha(i, j);
      out << q.get_num() << '/' << q.get_den();
    }
    out << '\n';
  }
}

Witness read_witness(std::istream& in) {
  LineReader reader(in);
  const std::string header = reader.expect("block count t");
  const auto tv = parse_int64s(header, reader.line_number());
  if (tv.size() != 1 || tv[0] < 1) {
    throw ParseError(reader.line_number(), "block count must be a positive integer");
  }
  const auto t = static_cast<std::size_t>(tv[0]);
  std::vector<ColumnPartition::Block> blocks;
  std::size_t d = 0;
  for (std::size_t j = 0; j < t; ++j) {
    const std::string line = reader.expect("block line I_" + std::to_string(j + 1));
    const std::string prefix = "I_" + std::to_string(j + 1) + ":";
    if (line.rfind(prefix, 0) != 0) {
      throw ParseError(reader.line_number(), "expected '" + prefix + "'");
    }
    ColumnPartition::Block block;
    for (auto v : parse_int64s(line.substr(prefix.size()), reader.line_number())) {
      if (v < 1) throw ParseError(reader.line_number(), "column indices are 1-based");
      block.push_back(static_cast<std::size_t>(v - 1));
    }
    d += block.size();
    blocks.push_back(std::move(block));
  }
  RationalMatrix alpha(d, t);
  for (std::size_t i = 0; i < d; ++i) {
    const std::string line = reader.expect("alpha row " + std::to_string(i + 1));
    std::istringstream ss(line);
    std::string tok;
    std::size_t j = 0;
    while (ss >> tok) {
      if (j >= t) throw ParseError(reader.line_number(), "too many alpha entries");
      Rational q;
      if (q.set_str(tok, 10) != 0 || q.get_den() == 0) {
        throw ParseError(reader.line_number(), "not a rational: '" + tok + "'");
      }
      q.canonicalize();
      alpha(i, j++) = q;
    }
    if (j != t) throw ParseError(reader.line_number(), "too few alpha entries");
  }
  if (reader.next()) throw ParseError(reader.line_number(), "trailing data after witness");
  try {
    return Witness{ColumnPartition(std::move(blocks), d), std::move(alpha)};
  } catch (const InvalidArgument& e) {
    throw ParseError(reader.line_number(), e.what());
  }
}

Witness permute_columns(const Witness& w, std::span<const std::size_t> perm) {
  const std::size_t d = w.partition.columns();
  if (perm.size() != d) throw InvalidArgument("permutation length mismatch");
  std::vector<ColumnPartition::Block> blocks;
  for (const auto& b : w.partition.blocks()) {
    ColumnPartition::Block nb;
    for (std::size_t i : b) nb.push_back(perm[i]);
    blocks.push_back(std::move(nb));
  }
  RationalMatrix alpha(d, w.alpha.cols());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < w.alpha.cols(); ++j) alpha(perm[i], j) = w.alpha(i, j);
  }
  return Witness{ColumnPartition(std::move(blocks), d), std::move(alpha)};
}

}  // namespace radokit
