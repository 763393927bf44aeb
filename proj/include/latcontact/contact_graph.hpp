#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "latcontact/lattice.hpp"

namespace latcontact {

// A finite set of distinct lattice points, kept in lexicographic order.
class Packing {
 public:
  Packing(Lattice lattice, std::vector<LatticePoint> points);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  Lattice lattice_;
  std::vector<LatticePoint> points_;
};

// Vertices are indices into a point list; edges are (i, j) with i < j,
// sorted lexicographically.
struct ContactGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t edge_count() const { return edges.size(); }
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;
};

// Throws OverlapDetected if any pair sits below the contact band.
ContactGraph build_contact_graph(const Packing& packing);

std::size_t contact_count(const Packing& packing);

// Nonzero vectors with |v_i| <= 3 whose length lies in the contact band,
// lexicographically sorted. Symmetric under negation.
std::vector<LatticePoint> kissing_vectors(const Lattice& lattice);

// Per-point sorted neighbor lists over an indexed point set.
struct AdjacencyStructure {
  std::vector<std::vector<std::uint32_t>> neighbors;

  std::size_t size() const { return neighbors.size(); }
  std::size_t degree(std::size_t i) const { return neighbors[i].size(); }
  std::size_t edge_count() const;
  friend bool operator==(const AdjacencyStructure&, const AdjacencyStructure&) = default;
};

// Built by translating each point by the kissing vectors and looking the
// result up in the box. Skewed lattices use the all-pairs definition instead.
// `box` must be sorted and free of duplicates.
AdjacencyStructure adjacency_structure(std::span<const LatticePoint> box, const Lattice& lattice);

// O(n^2) reference: every pair classified by its squared distance.
AdjacencyStructure adjacency_all_pairs(std::span<const LatticePoint> box, const Lattice& lattice);

}  // namespace latcontact
