#include "latcontact/bounds.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <numbers>

#include "latcontact/errors.hpp"

namespace latcontact {

namespace {

void require_more_than_two(std::int64_t n) {
  if (n <= 2) {
    throw DomainError("contact bounds hold only for more than two spheres (got " +
                      std::to_string(n) + ")");
  }
}

double two_thirds_power(std::int64_t n) {
  // cbrt(n)^2 is exact for perfect cubes, unlike pow(n, 2.0/3.0).
  const double c = std::cbrt(static_cast<double>(n));
  return c * c;
}

std::vector<LatticePoint> to_fcc_coefficients(const std::vector<std::array<int, 3>>& cells, int k) {
  std::vector<LatticePoint> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    // Shift by (k-1, 0, 0) to land on the even-sum sublattice, then solve
    // q = l1 (0,1,1) + l2 (1,0,1) + l3 (1,1,0).
    const int qx = c[0] + (k - 1), qy = c[1], qz = c[2];
    out.push_back(LatticePoint{(qy + qz - qx) / 2, (qx + qz - qy) / 2, (qx + qy - qz) / 2});
  }
  // Anchor the cluster at the origin of the coefficient box.
  std::array<int, 3> lo{INT_MAX, INT_MAX, INT_MAX};
  for (const auto& p : out) {
    for (std::size_t i = 0; i < 3; ++i) lo[i] = std::min(lo[i], p.coeffs[i]);
  }
  for (auto& p : out) {
    for (std::size_t i = 0; i < 3; ++i) p.coeffs[i] -= lo[i];
  }
  return out;
}

// Kissing vectors of the even-sum sublattice of Z^3.
constexpr std::array<std::array<int, 3>, 12> kFccNeighborSteps{{
    {1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0},
    {1, 0, 1}, {1, 0, -1}, {-1, 0, 1}, {-1, 0, -1},
    {0, 1, 1}, {0, 1, -1}, {0, -1, 1}, {0, -1, -1},
}};

}  // namespace

double lattice_bound_constant() {
  return 3.0 * std::cbrt(18.0 * std::numbers::pi) / std::numbers::pi;
}

double upper_bound_general(std::int64_t n) {
  require_more_than_two(n);
  return 6.0 * static_cast<double>(n) - kGeneralBoundConstant * two_thirds_power(n);
}

double upper_bound_lattice(std::int64_t n) {
  require_more_than_two(n);
  return 6.0 * static_cast<double>(n) - lattice_bound_constant() * two_thirds_power(n);
}

double bond_bound(std::int64_t Z, bool crystalline) {
  return crystalline ? upper_bound_lattice(Z) : upper_bound_general(Z);
}

std::int64_t max_below(double strict_bound) {
  return static_cast<std::int64_t>(std::ceil(strict_bound)) - 1;
}

std::int64_t octahedral_size(std::int64_t k) {
  if (k < 1) throw DomainError("octahedron index must be at least 1");
  return (2 * k * k * k + k) / 3;
}

std::vector<std::array<int, 3>> octahedral_cells(int k) {
  if (k < 1) throw DomainError("octahedron index must be at least 1");
  const int m = k - 1;
  std::vector<std::array<int, 3>> cells;
  for (int z = -m; z <= m; ++z) {
    for (int x = -m; x <= m; ++x) {
      for (int y = -m; y <= m; ++y) {
        if (std::abs(x) + std::abs(y) + std::abs(z) > m) continue;
        if (((x + y + z - m) % 2 + 2) % 2 != 0) continue;
        cells.push_back({x, y, z});
      }
    }
  }
  return cells;
}

std::vector<std::array<int, 3>> octahedral_cell_order(int k) {
  const auto cells = octahedral_cells(k);
  if (k == 1) return cells;

  std::map<std::array<int, 3>, std::size_t> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position.emplace(cells[i], i);
  std::vector<int> gain(cells.size(), 0);
  std::vector<char> placed(cells.size(), 0);
  std::vector<std::array<int, 3>> order;
  order.reserve(cells.size());
  auto place = [&](std::size_t i) {
    placed[i] = 1;
    order.push_back(cells[i]);
    for (const auto& d : kFccNeighborSteps) {
      const std::array<int, 3> q{cells[i][0] + d[0], cells[i][1] + d[1], cells[i][2] + d[2]};
      if (auto it = position.find(q); it != position.end()) ++gain[it->second];
    }
  };

  for (auto c : octahedral_cell_order(k - 1)) {
    ++c[2];
    place(position.at(c));
  }
  while (order.size() < cells.size()) {
    std::size_t pick = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!placed[i] && (pick == cells.size() || gain[i] > gain[pick])) pick = i;
    }
    place(pick);
  }
  return order;
}

std::vector<LatticePoint> octahedral_fill_order(int k) {
  return to_fcc_coefficients(octahedral_cell_order(k), k);
}


Packing octahedral_construction(int k, double radius) {
  return Packing(preset_lattice("fcc", radius), to_fcc_coefficients(octahedral_cells(k), k));
}

Packing octahedral_partial(std::int64_t n, double radius) {
  if (n < 1) throw DomainError("sphere count must be at least 1");
  int k = 1;
  while (octahedral_size(k) < n) ++k;
  auto order = octahedral_fill_order(k);
  order.resize(static_cast<std::size_t>(n));
  return Packing(preset_lattice("fcc", radius), std::move(order));
}

std::int64_t octahedral_lower_bound(std::int64_t n) {
  return static_cast<std::int64_t>(contact_count(octahedral_partial(n, 1.0)));
}

}  // namespace latcontact
