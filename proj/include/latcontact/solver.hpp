#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "latcontact/contact_graph.hpp"

namespace latcontact {

enum class Algorithm { kExhaustive, kBranchAndBound };

std::string to_string(Algorithm a);

// Subset count above which maximal_contact_number() switches to
// branch-and-bound.
inline constexpr std::uint64_t kDispatchThreshold = 10'000'000;
inline constexpr std::uint64_t kDefaultExhaustiveCap = 100'000'000;

struct SearchConfig {
  int n = 1;
  Algorithm algorithm = Algorithm::kBranchAndBound;
  // Stop after this many search nodes; the result is then not proven optimal.
  std::optional<std::uint64_t> node_limit;
  // Worker threads. Results do not depend on it.
  int thread_hint = 1;
  // Overrides k = ceil(n/d) for the coefficient box {0..k}^d.
  std::optional<int> box_k;
  std::uint64_t box_cap = kDefaultBoxCap;
  // Largest C(|box|, n) solve_exhaustive accepts.
  std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
};

struct SearchResult {
  std::int64_t contact_number = 0;
  // The lexicographically smallest maximizer (sorted point list order).
  Packing witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  // upper_bound_lattice(n) for n > 2 in three dimensions.
  std::optional<double> theorem_bound;
  Algorithm algorithm = Algorithm::kBranchAndBound;
  int box_k = 0;
};

// C(N, n) in long double; used for the exhaustive caps.
long double subset_count(std::uint64_t N, std::uint64_t n);

// Enumerates every n-subset of the candidate box. Throws InstanceTooLarge
// when C(|box|, n) exceeds config.exhaustive_cap.
SearchResult solve_exhaustive(const Lattice& lattice, const SearchConfig& config);

// Depth-first branch-and-bound over the candidate box; returns the same value
// and witness as solve_exhaustive.
SearchResult solve_bnb(const Lattice& lattice, const SearchConfig& config);

// Exhaustive when C(|box|, n) <= kDispatchThreshold, branch-and-bound
// otherwise. `config.algorithm` is ignored. Throws InvariantViolation if an
// optimal result breaks the lattice contact bound.
SearchResult maximal_contact_number(const Lattice& lattice, int n, SearchConfig config = {});

// True iff the contact number respects the strict lattice bound and, on the
// fcc preset, is at least the octahedral lower bound. Throws NotApplicable
// for n <= 2, non-optimal results, or lattices outside three dimensions.
bool verify_against_bounds(const SearchResult& result);

}  // namespace latcontact
