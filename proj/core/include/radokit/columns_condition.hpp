#pragma once

// Partition regularity of integer matrices through Rado's columns condition.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "radokit/exact_linalg.hpp"

namespace radokit {

// Ordered blocks I_1, ..., I_t of 0-based column indices. Each block is kept
// sorted ascending.
class ColumnPartition {
 public:
  using Block = std::vector<std::size_t>;

  ColumnPartition() = default;
  // Throws InvalidArgument unless the blocks are non-empty, pairwise
  // disjoint and cover {0, ..., columns-1}.
  ColumnPartition(std::vector<Block> blocks, std::size_t columns);

  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t j) const { return blocks_.at(j); }

  // Index of the block containing column i.
  std::size_t block_of(std::size_t column) const { return owner_.at(column); }

  friend bool operator==(const ColumnPartition&, const ColumnPartition&) = default;

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> owner_;
  std::size_t columns_ = 0;
};

// Certificate for the columns condition: column j of alpha (d x t) expresses
// the sum of block j in terms of the columns of blocks 0..j-1.
struct Witness {
  ColumnPartition partition;
  RationalMatrix alpha;

  std::size_t blocks() const noexcept { return partition.size(); }
};

// Exact check of the columns condition. Entries of alpha outside the support
// of their relation (columns in block j or later, for column j) must be zero.
// Throws InvalidArgument if the witness dimensions do not match A.
bool verify_witness(const IntegerMatrix& a, const Witness& w);

inline constexpr std::size_t kDefaultColumnCap = 8;

// Witness with the fewest blocks; ties go to the lexicographically least
// block sequence (blocks compared as sorted index lists). Throws
// SearchSpaceTooLarge when A has more than `column_cap` columns.
std::optional<Witness> find_witness(const IntegerMatrix& a,
                                    std::size_t column_cap = kDefaultColumnCap);

bool is_partition_regular(const IntegerMatrix& a,
                          std::size_t column_cap = kDefaultColumnCap);

// Direct subset-sum test for one equation with nonzero coefficients.
bool single_row_oracle(std::span<const std::int64_t> row);

// 1 + rank(alpha), the block count the columns condition predicts when alpha
// has full rank on its support. May differ from w.blocks().
std::size_t predicted_blocks(const Witness& w);

// Witness text: "t", then "I_j: i1 i2 ..." with 1-based columns, then d lines
// of t entries "num/den".
void write_witness(std::ostream& out, const Witness& w);
Witness read_witness(std::istream& in);

// Relabels the witness for A' = A with columns permuted so that column i of
// A becomes column perm[i] of A'.
Witness permute_columns(const Witness& w, std::span<const std::size_t> perm);

}  // namespace radokit
