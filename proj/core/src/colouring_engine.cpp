#include "radokit/colouring_engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <thread>

#include "radokit/errors.hpp"

namespace radokit {

ConstraintTable::ConstraintTable(std::int64_t n) : n_(n) {
  if (n < 0) throw InvalidArgument("constraint table limit must be >= 0");
  if (n > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw InvalidArgument("constraint table limit too large");
  }
  pending_.resize(static_cast<std::size_t>(n) + 1);
}

void ConstraintTable::add(std::span<const std::int64_t> elements) {
  if (finalized_) throw InvalidArgument("constraint table already finalized");
  if (elements.empty()) throw InvalidArgument("constraint set must be non-empty");
  std::vector<std::uint32_t> set;
  set.reserve(elements.size());
  for (std::int64_t e : elements) {
    if (e < 1 || e > n_) throw InvalidArgument("constraint element out of range");
    set.push_back(static_cast<std::uint32_t>(e));
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  pending_[set.back()].push_back(std::move(set));
}

void ConstraintTable::finalize() {
  if (finalized_) return;
  // Containment filter: a set is redundant if some proper subset is already
  // stored. Small sets check their subsets by lookup, large ones scan.
  std::set<std::vector<std::uint32_t>> kept;
  buckets_.assign(pending_.size(), Bucket{});
  std::vector<std::uint32_t> sub;
  for (std::size_t v = 0; v < pending_.size(); ++v) {
    auto& list = pending_[v];
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    list.erase(std::unique(list.begin(), list.end()), list.end());
    Bucket& bucket = buckets_[v];
    bucket.offsets.push_back(0);
    for (auto& set : list) {
      bool redundant = false;
      const std::size_t k = set.size();
      if (k <= 12) {
        const std::uint32_t full = (1u << k) - 1;
        for (std::uint32_t mask = 1; mask < full && !redundant; ++mask) {
          sub.clear();
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1u) sub.push_back(set[i]);
          }
          redundant = kept.count(sub) != 0;
        }
      } else {
        for (const auto& other : kept) {
          if (other.size() < k &&
              std::includes(set.begin(), set.end(), other.begin(), other.end())) {
            redundant = true;
            break;
          }
        }
      }
      if (redundant) continue;
      bucket.others.insert(bucket.others.end(), set.begin(), set.end() - 1);
      bucket.offsets.push_back(static_cast<std::uint32_t>(bucket.others.size()));
      kept.insert(std::move(set));
      ++count_;
    }
  }
  pending_.clear();
  finalized_ = true;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Search {
 public:
  Search(const ConstraintTable& table, int colours, std::uint64_t node_limit,
         std::atomic<std::uint64_t>* shared_nodes)
      : table_(table),
        colours_(colours),
        node_limit_(node_limit),
        shared_nodes_(shared_nodes),
        colour_(static_cast<std::size_t>(table.limit()) + 1, -1) {}

  // Explores all canonical extensions of `prefix`. The run is abandoned once
  // `winner` holds an index below `index`.
  void run(std::span<const int> prefix, int used,
           const std::atomic<std::size_t>* winner = nullptr, std::size_t index = 0) {
    winner_ = winner;
    index_ = index;
    for (std::size_t i = 0; i < prefix.size(); ++i) colour_[i + 1] = prefix[i];
    const auto depth = static_cast<std::int64_t>(prefix.size());
    note(depth);
    descend(depth + 1, used);
  }

  // Collects canonical prefixes of the given length in search order. Shorter
  // dead ends still update longest().
  void collect(std::int64_t length, std::vector<std::vector<int>>& out,
               std::vector<int>& used_out) {
    collect_length_ = length;
    collect_out_ = &out;
    collect_used_ = &used_out;
    note(0);
    descend(1, 0);
    collect_out_ = nullptr;
  }

  std::int64_t longest() const noexcept { return longest_; }
  const std::vector<int>& best() const noexcept { return best_; }
  bool finished() const noexcept { return finished_; }
  bool hit_limit() const noexcept { return hit_limit_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint32_t forbidden(std::int64_t v) const {
    const auto& b = table_.bucket(v);
    const std::uint32_t all = colours_ >= 32 ? ~0u : ((1u << colours_) - 1);
    std::uint32_t mask = 0;
    for (std::size_t e = 0; e + 1 < b.offsets.size(); ++e) {
      const std::uint32_t lo = b.offsets[e];
      const std::uint32_t hi = b.offsets[e + 1];
      if (lo == hi) return all;
      const int c = colour_[b.others[lo]];
      bool mono = true;
      for (std::uint32_t k = lo + 1; k < hi && mono; ++k) mono = colour_[b.others[k]] == c;
      if (mono) {
        mask |= 1u << c;
        if (mask == all) return all;
      }
    }
    return mask;
  }

  void note(std::int64_t depth) {
    if (depth > longest_) {
      longest_ = depth;
      best_.assign(colour_.begin() + 1, colour_.begin() + 1 + depth);
      if (depth == table_.limit()) finished_ = true;
    }
  }

  bool should_stop() {
    ++nodes_;
    if (node_limit_ != 0) {
      const std::uint64_t total =
          shared_nodes_ ? shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1 : nodes_;
      if (total > node_limit_) {
        hit_limit_ = true;
        return true;
      }
    }
    if (winner_ && (nodes_ & 1023) == 0 &&
        winner_->load(std::memory_order_relaxed) < index_) {
      cancelled_ = true;
    }
    return cancelled_;
  }

  void descend(std::int64_t v, int used) {
    if (finished_ || hit_limit_ || cancelled_) return;
    if (collect_out_ && v == collect_length_ + 1) {
      collect_out_->emplace_back(colour_.begin() + 1, colour_.begin() + v);
      collect_used_->push_back(used);
      return;
    }
    if (v > table_.limit()) return;
    if (should_stop()) return;
    const std::uint32_t banned = forbidden(v);
    const int top = std::min(colours_, used + 1);
    for (int c = 0; c < top; ++c) {
      if (banned >> c & 1u) continue;
      colour_[static_cast<std::size_t>(v)] = c;
      note(v);
      descend(v + 1, std::max(used, c + 1));
      if (finished_ || hit_limit_ || cancelled_) break;
    }
    colour_[static_cast<std::size_t>(v)] = -1;
  }

  const ConstraintTable& table_;
  int colours_;
  std::uint64_t node_limit_;
  std::atomic<std::uint64_t>* shared_nodes_;
  const std::atomic<std::size_t>* winner_ = nullptr;
  std::size_t index_ = 0;
  std::vector<int> colour_;
  std::int64_t longest_ = -1;
  std::vector<int> best_;
  bool finished_ = false;
  bool hit_limit_ = false;
  bool cancelled_ = false;
  std::uint64_t nodes_ = 0;
  std::int64_t collect_length_ = 0;
  std::vector<std::vector<int>>* collect_out_ = nullptr;
  std::vector<int>* collect_used_ = nullptr;
};

AvoidanceResult sequential(const ConstraintTable& table, int colours,
                           const AvoidanceOptions& options) {
  Search s(table, colours, options.node_limit, nullptr);
  s.run({}, 0);
  return AvoidanceResult{s.longest(), s.best(), !s.hit_limit(), s.nodes()};
}

}  // namespace

AvoidanceResult longest_avoiding_prefix(const ConstraintTable& table, int colours,
                                        const AvoidanceOptions& options) {
  if (colours < 1 || colours > 31) throw InvalidArgument("colour count must be in [1, 31]");
  if (options.threads <= 1 || options.split_depth < 1 ||
      table.limit() <= options.split_depth) {
    return sequential(table, colours, options);
  }

  // Prefixes of length split_depth in search order; each is an independent
  // subtree. Picking, among subtrees reaching the overall maximum, the one
  // with the lowest index reproduces the sequential result exactly.
  std::atomic<std::uint64_t> shared_nodes{0};
  std::vector<std::vector<int>> frontier;
  std::vector<int> frontier_used;
  Search head(table, colours, options.node_limit, &shared_nodes);
  head.collect(options.split_depth, frontier, frontier_used);

  AvoidanceResult out{head.longest(), head.best(), !head.hit_limit(), head.nodes()};
  if (frontier.empty() || head.hit_limit()) return out;

  struct Slot {
    std::int64_t longest = -1;
    std::vector<int> best;
    bool hit_limit = false;
    bool ran = false;
    std::uint64_t nodes = 0;
  };
  std::vector<Slot> slots(frontier.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> winner{kNone};
  std::atomic<bool> limit_tripped{false};

  auto worker = [&] {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= frontier.size()) return;
      if (idx > winner.load() || limit_tripped.load()) continue;
      Search s(table, colours, options.node_limit, &shared_nodes);
      s.run(frontier[idx], frontier_used[idx], &winner, idx);
      Slot& slot = slots[idx];
      slot.longest = s.longest();
      slot.best = s.best();
      slot.hit_limit = s.hit_limit();
      slot.nodes = s.nodes();
      slot.ran = true;
      if (s.hit_limit()) limit_tripped.store(true);
      if (s.finished()) {
        std::size_t cur = winner.load();
        while (idx < cur && !winner.compare_exchange_weak(cur, idx)) {
        }
      }
    }
  };
  const auto n_workers =
      std::min<std::size_t>(options.threads, frontier.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  const std::size_t win = winner.load();
  const std::size_t last = win == kNone ? slots.size() : win + 1;
  for (std::size_t i = 0; i < slots.size(); ++i) out.nodes += slots[i].nodes;
  for (std::size_t i = 0; i < last; ++i) {
    const Slot& slot = slots[i];
    if (!slot.ran || slot.hit_limit) out.complete = false;
    if (slot.ran && slot.longest > out.longest) {
      out.longest = slot.longest;
      out.colouring = slot.best;
    }
  }
  return out;
}

}  // namespace radokit
