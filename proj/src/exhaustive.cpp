// Literal subset enumeration over the candidate box. Adjacency comes from the
// all-pairs distance test so this path shares no neighbor logic with the
// branch-and-bound solver it is used to check.

#include <bit>
#include <cmath>

#include "latcontact/errors.hpp"
#include "search_internal.hpp"

namespace latcontact {

namespace {

class ExhaustiveTask {
 public:
  ExhaustiveTask(const detail::BitMatrix& adj, std::size_t N, std::size_t n)
      : adj_(adj), N_(N), n_(n), mask_(adj.words(), 0) {}

  // All n-subsets whose smallest index is `first`, in lexicographic order.
  detail::TaskBest run(std::size_t first) {
    best_ = {};
    chosen_.clear();
    push(first);
    descend(first + 1, 0);
    return best_;
  }

  std::uint64_t leaves() const { return leaves_; }

 private:
  std::int64_t gain(std::size_t v) const {
    const std::uint64_t* row = adj_.row(v);
    std::int64_t g = 0;
    for (std::size_t w = 0; w < mask_.size(); ++w) g += std::popcount(row[w] & mask_[w]);
    return g;
  }

  void push(std::size_t v) {
    chosen_.push_back(static_cast<std::uint32_t>(v));
    mask_[v / 64] |= 1ull << (v % 64);
  }

  void pop() {
    const std::size_t v = chosen_.back();
    chosen_.pop_back();
    mask_[v / 64] &= ~(1ull << (v % 64));
  }

  void record(std::int64_t value) {
    if (value > best_.value) {
      best_.value = value;
      best_.indices = chosen_;
    }
  }

  void descend(std::size_t start, std::int64_t edges) {
    const std::size_t depth = chosen_.size();
    if (depth == n_) {
      ++leaves_;
      record(edges);
      return;
    }
    const std::size_t last = N_ - (n_ - depth);
    if (depth + 1 == n_) {
      // Final pick: every candidate is a leaf; keep the first best one.
      std::int64_t top = -1;
      std::size_t arg = start;
      for (std::size_t v = start; v <= last; ++v) {
        const std::int64_t g = gain(v);
        if (g > top) {
          top = g;
          arg = v;
        }
      }
      leaves_ += last + 1 - start;
      if (edges + top > best_.value) {
        push(arg);
        record(edges + top);
        pop();
      }
      return;
    }
    for (std::size_t v = start; v <= last; ++v) {
      const std::int64_t g = gain(v);
      push(v);
      descend(v + 1, edges + g);
      pop();
    }
  }

  const detail::BitMatrix& adj_;
  std::size_t N_;
  std::size_t n_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint32_t> chosen_;
  detail::TaskBest best_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

long double subset_count(std::uint64_t N, std::uint64_t n) {
  if (n > N) return 0.0L;
  n = std::min(n, N - n);
  long double c = 1.0L;
  for (std::uint64_t i = 1; i <= n; ++i) {
    c = c * static_cast<long double>(N - n + i) / static_cast<long double>(i);
  }
  return std::round(c);
}

SearchResult solve_exhaustive(const Lattice& lattice, const SearchConfig& config) {
  if (config.n < 1) throw DomainError("sphere count must be at least 1");
  const int k = detail::resolve_box_k(lattice, config);
  const auto box = coefficient_box(lattice.dimension(), k, config.box_cap);
  const std::size_t N = box.size();
  const auto n = static_cast<std::size_t>(config.n);
  if (n > N) throw DomainError("candidate box holds fewer points than requested spheres");
  const long double subsets = subset_count(N, n);
  if (subsets > static_cast<long double>(config.exhaustive_cap)) {
    throw InstanceTooLarge(subsets, config.exhaustive_cap);
  }

  const auto pairs = adjacency_all_pairs(box, lattice);
  detail::BitMatrix adj(N, (N + 63) / 64);
  for (std::size_t i = 0; i < N; ++i) {
    for (auto j : pairs.neighbors[i]) adj.set(i, j);
  }

  const std::size_t tasks = N - n + 1;
  std::vector<detail::TaskBest> bests(tasks);
  std::vector<std::uint64_t> leaves(tasks, 0);
  detail::run_tasks(tasks, config.thread_hint, [&](std::size_t first) {
    ExhaustiveTask task(adj, N, n);
    bests[first] = task.run(first);
    leaves[first] = task.leaves();
  });

  std::uint64_t total = 0;
  for (auto l : leaves) total += l;
  return detail::make_result(lattice, box, *detail::pick_canonical(bests), true, total,
                             Algorithm::kExhaustive, k);
}

}  // namespace latcontact
