#include "latcontact/contact_graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "latcontact/errors.hpp"

namespace latcontact {

Packing::Packing(Lattice lattice, std::vector<LatticePoint> points)
    : lattice_(std::move(lattice)), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.dimension() != lattice_.dimension()) {
      throw DomainError("packing point has the wrong number of coefficients");
    }
  }
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw DomainError("packing contains the same lattice point twice");
  }
}

std::vector<std::size_t> ContactGraph::degrees() const {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

std::size_t ContactGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

ContactGraph build_contact_graph(const Packing& packing) {
  const auto& pts = packing.points();
  const auto band = packing.lattice().band();
  ContactGraph g;
  g.n = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d2 = squared_distance(packing.lattice(), pts[i], pts[j]);
      switch (band.classify(d2)) {
        case PairKind::kOverlap:
          throw OverlapDetected(i, j, d2);
        case PairKind::kContact:
          g.edges.emplace_back(i, j);
          break;
        case PairKind::kSeparated:
          break;
      }
    }
  }
  return g;
}

std::size_t contact_count(const Packing& packing) {
  return build_contact_graph(packing).edge_count();
}

std::vector<LatticePoint> kissing_vectors(const Lattice& lattice) {
  const auto d = lattice.dimension();
  const int b = kValidityCoeffBound;
  const auto band = lattice.band();
  const LatticePoint origin(std::vector<int>(d, 0));
  std::vector<LatticePoint> out;
  for (const auto& v : coefficient_box(d, 2 * b, UINT64_MAX)) {
    LatticePoint shifted = v;
    for (auto& c : shifted.coeffs) c -= b;
    if (shifted == origin) continue;
    if (band.touching(squared_distance(lattice, origin, shifted))) out.push_back(shifted);
  }
  // The shift preserves lexicographic order, so `out` is already sorted.
  return out;
}

std::size_t AdjacencyStructure::edge_count() const {
  std::size_t s = 0;
  for (const auto& nb : neighbors) s += nb.size();
  return s / 2;
}

AdjacencyStructure adjacency_all_pairs(std::span<const LatticePoint> box, const Lattice& lattice) {
  const auto band = lattice.band();
  AdjacencyStructure adj;
  adj.neighbors.resize(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = i + 1; j < box.size(); ++j) {
      if (band.touching(squared_distance(lattice, box[i], box[j]))) {
        adj.neighbors[i].push_back(static_cast<std::uint32_t>(j));
        adj.neighbors[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  for (auto& nb : adj.neighbors) std::sort(nb.begin(), nb.end());
  return adj;
}

AdjacencyStructure adjacency_structure(std::span<const LatticePoint> box, const Lattice& lattice) {
  if (lattice.skewed()) return adjacency_all_pairs(box, lattice);

  std::unordered_map<LatticePoint, std::uint32_t, LatticePointHash> index;
  index.reserve(box.size() * 2);
  for (std::size_t i = 0; i < box.size(); ++i) {
    index.emplace(box[i], static_cast<std::uint32_t>(i));
  }
  const auto kiss = kissing_vectors(lattice);
  AdjacencyStructure adj;
  adj.neighbors.resize(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (const auto& v : kiss) {
      if (auto it = index.find(box[i] + v); it != index.end()) {
        adj.neighbors[i].push_back(it->second);
      }
    }
    std::sort(adj.neighbors[i].begin(), adj.neighbors[i].end());
  }
  return adj;
}

}  // namespace latcontact
