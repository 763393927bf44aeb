// Depth-first branch-and-bound for the maximum-contact subset of the
// candidate box.
//
// Subsets are enumerated as increasing index sequences, so the search visits
// them in lexicographic order and the first maximizer it meets is the
// canonical witness. Two reductions keep the tree small without changing that
// witness:
//
//  * Translation normalization. Shifting a subset towards the origin along
//    any basis direction stays inside {0..k}^d, keeps every contact and makes
//    the sorted point list lexicographically smaller. The canonical maximizer
//    therefore touches every face lambda_i = 0, and only such subsets are
//    searched: the first point has lambda_1 = 0 and a branch dies once some
//    other face can no longer be reached.
//
//  * Bounding. With S chosen, r picks left and the pool P of indices after the
//    last pick, every new point v contributes its back-degree: a(v) contacts
//    with S plus at most min(r-1, bp(v)) with earlier picks, where bp(v)
//    counts neighbors of v inside P preceding v. Separately, the contacts
//    between S and the picks are at most the r largest a(v) and at most
//    sum_{u in S} min(r, |N(u) ∩ P|), and the contacts among the picks are
//    at most best[r], the optimum for r spheres in the same box, which is
//    solved first (smallest r upward).
//
// Work is split into tasks by the first two picks. A task prunes against
// values found by itself or by lower-numbered tasks with "bound <= value"
// (everything it could still find is lexicographically larger), and against
// any other value only with "bound < value", so ties are always settled in
// favor of the lexicographically smallest subset whatever the scheduling.

#include <atomic>
#include <cmath>
#include <limits>

#include "latcontact/errors.hpp"
#include "search_internal.hpp"

namespace latcontact {

namespace {

using Index = std::uint32_t;
constexpr std::int64_t kNone = -1;
constexpr std::uint64_t kRefreshInterval = 4096;

struct BoxGraph {
  std::size_t N = 0;
  std::size_t dims = 0;
  int max_degree = 0;
  std::vector<std::vector<Index>> neighbors;
  std::vector<std::vector<Index>> back;  // neighbors with a smaller index
  // Bit i set when coefficient i of the point is zero.
  std::vector<std::uint32_t> zero_faces;
  // Per coordinate, the last index whose coefficient is zero.
  std::vector<std::int64_t> last_zero;
  std::vector<Index> first_points;  // indices with lambda_1 = 0
};

BoxGraph make_box_graph(const std::vector<LatticePoint>& box, const Lattice& lattice) {
  BoxGraph g;
  g.N = box.size();
  g.dims = lattice.dimension();
  g.neighbors = adjacency_structure(box, lattice).neighbors;
  g.back.resize(g.N);
  g.zero_faces.assign(g.N, 0);
  g.last_zero.assign(g.dims, kNone);
  for (std::size_t v = 0; v < g.N; ++v) {
    g.max_degree = std::max(g.max_degree, static_cast<int>(g.neighbors[v].size()));
    for (auto u : g.neighbors[v]) {
      if (u < v) g.back[v].push_back(u);
    }
    for (std::size_t i = 0; i < g.dims; ++i) {
      if (box[v].coeffs[i] == 0) {
        g.zero_faces[v] |= 1u << i;
        g.last_zero[i] = static_cast<std::int64_t>(v);
      }
    }
    if (box[v].coeffs[0] == 0) g.first_points.push_back(static_cast<Index>(v));
  }
  return g;
}

struct Shared {
  Shared(std::size_t tasks, std::int64_t floor, std::uint64_t limit)
      : floor_any(floor), task_best(tasks), node_limit(limit) {
    for (auto& t : task_best) t.store(kNone, std::memory_order_relaxed);
  }

  std::atomic<std::int64_t> floor_any;
  std::vector<std::atomic<std::int64_t>> task_best;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stopped{false};
  std::uint64_t node_limit;
};

void atomic_max(std::atomic<std::int64_t>& a, std::int64_t v) {
  std::int64_t cur = a.load(std::memory_order_relaxed);
  while (cur < v && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// One task: every subset beginning with a fixed pair of picks.
class Worker {
 public:
  Worker(const BoxGraph& g, std::size_t n, const std::vector<std::int64_t>& best_by_size,
         Shared& shared)
      : g_(g),
        n_(n),
        best_by_size_(best_by_size),
        shared_(shared),
        adjacent_(g.N, 0),
        face_cover_(g.dims, 0),
        hist_a_(static_cast<std::size_t>(g.max_degree) + 1, 0),
        hist_b_(static_cast<std::size_t>(g.max_degree) + 1, 0) {}

  detail::TaskBest run(std::size_t task, Index first, Index second) {
    task_ = task;
    best_ = {};
    refresh_floors();
    push(first);
    push(second);
    descend(second);
    pop();
    pop();
    flush_nodes();
    return best_;
  }

 private:
  void push(Index v) {
    edges_ += adjacent_[v];
    for (auto u : g_.neighbors[v]) ++adjacent_[u];
    for (std::size_t i = 0; i < g_.dims; ++i) face_cover_[i] += (g_.zero_faces[v] >> i) & 1u;
    chosen_.push_back(v);
  }

  void pop() {
    const Index v = chosen_.back();
    chosen_.pop_back();
    for (std::size_t i = 0; i < g_.dims; ++i) face_cover_[i] -= (g_.zero_faces[v] >> i) & 1u;
    for (auto u : g_.neighbors[v]) --adjacent_[u];
    edges_ -= adjacent_[v];
  }

  void flush_nodes() {
    if (pending_nodes_ == 0) return;
    const auto total = shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) +
                       pending_nodes_;
    pending_nodes_ = 0;
    if (total >= shared_.node_limit) shared_.stopped.store(true, std::memory_order_relaxed);
  }

  void refresh_floors() {
    floor_any_ = shared_.floor_any.load(std::memory_order_relaxed);
    floor_prefix_ = best_.value;
    for (std::size_t t = 0; t < task_; ++t) {
      floor_prefix_ =
          std::max(floor_prefix_, shared_.task_best[t].load(std::memory_order_relaxed));
    }
  }

  void record() {
    if (edges_ <= best_.value) return;
    best_.value = edges_;
    best_.indices = chosen_;
    floor_prefix_ = std::max(floor_prefix_, edges_);
    atomic_max(shared_.task_best[task_], edges_);
    atomic_max(shared_.floor_any, edges_);
  }

  static std::int64_t top_sum(const std::vector<std::int64_t>& hist, std::size_t r) {
    std::int64_t sum = 0;
    for (std::size_t val = hist.size(); val-- > 0 && r > 0;) {
      const auto take = std::min<std::size_t>(r, static_cast<std::size_t>(hist[val]));
      sum += static_cast<std::int64_t>(take * val);
      r -= take;
    }
    return sum;
  }

  std::int64_t bound(std::size_t pool_start, std::size_t r) {
    std::fill(hist_a_.begin(), hist_a_.end(), 0);
    std::fill(hist_b_.begin(), hist_b_.end(), 0);
    const auto cap = static_cast<int>(r) - 1;
    for (std::size_t v = pool_start; v < g_.N; ++v) {
      int bp = 0;
      for (auto u : g_.back[v]) bp += u >= pool_start;
      const int a = adjacent_[v];
      ++hist_a_[static_cast<std::size_t>(a)];
      ++hist_b_[static_cast<std::size_t>(a + std::min(cap, bp))];
    }
    std::int64_t from_chosen = 0;
    for (auto u : chosen_) {
      std::int64_t forward = 0;
      for (auto it = g_.neighbors[u].rbegin(); it != g_.neighbors[u].rend() && *it >= pool_start;
           ++it) {
        ++forward;
      }
      from_chosen += std::min<std::int64_t>(static_cast<std::int64_t>(r), forward);
    }
    const std::int64_t cross = std::min(top_sum(hist_a_, r), from_chosen);
    return edges_ + std::min(top_sum(hist_b_, r), cross + best_by_size_[r]);
  }

  bool faces_reachable(std::size_t pool_start) const {
    for (std::size_t i = 1; i < g_.dims; ++i) {
      if (face_cover_[i] == 0 && g_.last_zero[i] < static_cast<std::int64_t>(pool_start)) {
        return false;
      }
    }
    return true;
  }

  void descend(Index last) {
    if (++pending_nodes_ >= kRefreshInterval) {
      flush_nodes();
      refresh_floors();
    }
    if (shared_.stopped.load(std::memory_order_relaxed)) return;

    const std::size_t r = n_ - chosen_.size();
    if (r == 0) {
      record();
      return;
    }
    const std::size_t pool_start = last + 1;
    if (g_.N - pool_start < r || !faces_reachable(pool_start)) return;
    const std::int64_t b = bound(pool_start, r);
    if (b < floor_any_ || b <= floor_prefix_) return;

    for (std::size_t v = pool_start; v + r <= g_.N; ++v) {
      push(static_cast<Index>(v));
      descend(static_cast<Index>(v));
      pop();
    }
  }

  const BoxGraph& g_;
  std::size_t n_;
  const std::vector<std::int64_t>& best_by_size_;
  Shared& shared_;

  std::size_t task_ = 0;
  std::vector<int> adjacent_;
  std::vector<int> face_cover_;
  std::vector<Index> chosen_;
  std::int64_t edges_ = 0;
  std::vector<std::int64_t> hist_a_;
  std::vector<std::int64_t> hist_b_;
  detail::TaskBest best_;
  std::int64_t floor_any_ = kNone;
  std::int64_t floor_prefix_ = kNone;
  std::uint64_t pending_nodes_ = 0;
};

// Greedy growth from a spread of seeds; gives the search a starting value.
detail::TaskBest greedy_incumbent(const BoxGraph& g, std::size_t n) {
  detail::TaskBest best;
  const std::size_t seeds = std::min<std::size_t>(g.N, 256);
  std::vector<int> adjacent(g.N);
  std::vector<char> taken(g.N);
  for (std::size_t s = 0; s < seeds; ++s) {
    const std::size_t seed = s * g.N / seeds;
    std::fill(adjacent.begin(), adjacent.end(), 0);
    std::fill(taken.begin(), taken.end(), 0);
    std::vector<Index> set;
    std::int64_t edges = 0;
    auto add = [&](std::size_t v) {
      taken[v] = 1;
      edges += adjacent[v];
      for (auto u : g.neighbors[v]) ++adjacent[u];
      set.push_back(static_cast<Index>(v));
    };
    add(seed);
    while (set.size() < n) {
      std::size_t pick = g.N;
      for (std::size_t v = 0; v < g.N; ++v) {
        if (!taken[v] && (pick == g.N || adjacent[v] > adjacent[pick])) pick = v;
      }
      add(pick);
    }
    if (edges > best.value) {
      std::sort(set.begin(), set.end());
      best.value = edges;
      best.indices = std::move(set);
    }
  }
  return best;
}

struct SizeOutcome {
  detail::TaskBest best;
  bool complete = false;
};

// Maximum contacts of an n-subset of the box given exact optima for every
// smaller size.
SizeOutcome solve_size(const BoxGraph& g, std::size_t n,
                       const std::vector<std::int64_t>& best_by_size, int threads,
                       std::atomic<std::uint64_t>& nodes, std::uint64_t node_limit) {
  const detail::TaskBest heuristic = greedy_incumbent(g, n);
  if (n == 1) return {heuristic, true};

  std::vector<std::pair<Index, Index>> tasks;
  for (auto first : g.first_points) {
    for (std::size_t second = first + 1; second + (n - 1) <= g.N; ++second) {
      tasks.emplace_back(first, static_cast<Index>(second));
    }
  }

  Shared shared(tasks.size(), heuristic.value, node_limit);
  shared.nodes.store(nodes.load());
  if (shared.nodes.load() >= node_limit) shared.stopped = true;
  std::vector<detail::TaskBest> bests(tasks.size());
  detail::run_tasks(tasks.size(), threads, [&](std::size_t t) {
    if (shared.stopped.load(std::memory_order_relaxed)) return;
    Worker worker(g, n, best_by_size, shared);
    bests[t] = worker.run(t, tasks[t].first, tasks[t].second);
  });
  nodes.store(shared.nodes.load());

  const bool complete = !shared.stopped.load();
  const detail::TaskBest* found = detail::pick_canonical(bests);
  if (complete) {
    if (found == nullptr || found->value < heuristic.value) {
      throw InvariantViolation("branch-and-bound lost the incumbent subset");
    }
    return {*found, true};
  }
  if (found != nullptr && found->value > heuristic.value) return {*found, false};
  return {heuristic, false};
}

}  // namespace

SearchResult solve_bnb(const Lattice& lattice, const SearchConfig& config) {
  if (config.n < 1) throw DomainError("sphere count must be at least 1");
  const int k = detail::resolve_box_k(lattice, config);
  const auto box = coefficient_box(lattice.dimension(), k, config.box_cap);
  const auto n = static_cast<std::size_t>(config.n);
  if (n > box.size()) throw DomainError("candidate box holds fewer points than requested spheres");
  if (lattice.dimension() > 32) throw DomainError("dimension above 32 is not supported");

  const BoxGraph g = make_box_graph(box, lattice);
  const std::uint64_t limit = config.node_limit.value_or(std::numeric_limits<std::uint64_t>::max());
  std::atomic<std::uint64_t> nodes{0};

  // best_by_size[r] bounds the contacts among any r points of the box. Sizes
  // that could not be finished fall back to r * maxdeg / 2.
  std::vector<std::int64_t> best_by_size(n + 1, 0);
  SizeOutcome outcome;
  for (std::size_t r = 1; r <= n; ++r) {
    outcome = solve_size(g, r, best_by_size, config.thread_hint, nodes, limit);
    best_by_size[r] = outcome.complete
                          ? outcome.best.value
                          : static_cast<std::int64_t>(r) * g.max_degree / 2;
  }
  return detail::make_result(lattice, box, outcome.best, outcome.complete,
                             nodes.load(), Algorithm::kBranchAndBound, k);
}

}  // namespace latcontact
