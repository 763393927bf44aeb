#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "latcontact/lattice.hpp"
#include "latcontact/solver.hpp"

namespace latcontact::detail {

// Best subset found inside one task. value < 0 means none.
struct TaskBest {
  std::int64_t value = -1;
  std::vector<std::uint32_t> indices;
};

// Highest value wins; ties go to the lowest task index. Tasks are numbered in
// lexicographic order of the subsets they cover, so this yields the
// lexicographically smallest maximizer regardless of scheduling.
inline const TaskBest* pick_canonical(const std::vector<TaskBest>& bests) {
  const TaskBest* out = nullptr;
  for (const auto& b : bests) {
    if (b.value >= 0 && (out == nullptr || b.value > out->value)) out = &b;
  }
  return out;
}

// Runs fn(task) for task in [0, count) on up to `threads` workers, handing
// out task indices in increasing order.
inline void run_tasks(std::size_t count, int threads,
                      const std::function<void(std::size_t)>& fn) {
  const auto workers =
      static_cast<std::size_t>(std::clamp<std::int64_t>(threads, 1, 256));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t t = next++; t < count; t = next++) fn(t);
  };
  if (workers == 1 || count <= 1) {
    loop();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < std::min(workers, count); ++w) pool.emplace_back(loop);
  loop();
}

// Row-major adjacency bitsets, `words` 64-bit words per row.
class BitMatrix {
 public:
  BitMatrix(std::size_t n, std::size_t words) : words_(words), bits_(n * words, 0) {}

  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= 1ull << (j % 64); }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

SearchResult make_result(const Lattice& lattice, const std::vector<LatticePoint>& box,
                         const TaskBest& best, bool optimal, std::uint64_t nodes,
                         Algorithm algorithm, int box_k);

int resolve_box_k(const Lattice& lattice, const SearchConfig& config);

}  // namespace latcontact::detail
