#pragma once

// Backtracking search for colourings of [1..N] that leave no constraint set
// monochromatic. Constraint sets are grouped by their largest element, so
// when element v is coloured only the sets ending at v need checking:
// those whose other elements already share one colour forbid that colour
// for v.
//
// Elements are coloured in increasing order. Colours are canonical: element
// 1 takes colour 0 and colour c+1 may only appear after colour c has.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace radokit {

class ConstraintTable {
 public:
  explicit ConstraintTable(std::int64_t n);

  // Adds a set of elements in [1, n]; duplicates inside the set are ignored.
  void add(std::span<const std::int64_t> elements);
  // Deduplicates and drops sets that contain another stored set. Must be
  // called once after the last add().
  void finalize();

  std::int64_t limit() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }

  // Sets whose maximum is v, each stored as its remaining elements. A set
  // with no remaining elements makes v uncolourable.
  struct Bucket {
    std::vector<std::uint32_t> offsets;  // size = sets + 1
    std::vector<std::uint32_t> others;
  };
  const Bucket& bucket(std::int64_t v) const { return buckets_[static_cast<std::size_t>(v)]; }

 private:
  std::int64_t n_;
  std::size_t count_ = 0;
  bool finalized_ = false;
  std::vector<std::vector<std::vector<std::uint32_t>>> pending_;
  std::vector<Bucket> buckets_;
};

struct AvoidanceOptions {
  unsigned threads = 1;
  // Total search nodes before giving up; 0 means unlimited. When the limit
  // trips the result is marked incomplete.
  std::uint64_t node_limit = 0;
  // Prefix length at which the tree is split into independent subtrees
  // when threads > 1.
  std::int64_t split_depth = 10;
};

struct AvoidanceResult {
  // Largest L <= limit such that [1..L] has an avoiding colouring.
  std::int64_t longest = 0;
  // Avoiding colouring of [1..longest], first in canonical search order.
  std::vector<int> colouring;
  // False when the node limit stopped the search before a full refutation.
  bool complete = true;
  std::uint64_t nodes = 0;
};

AvoidanceResult longest_avoiding_prefix(const ConstraintTable& table, int colours,
                                        const AvoidanceOptions& options = {});

}  // namespace radokit
