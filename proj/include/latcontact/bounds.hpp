#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "latcontact/contact_graph.hpp"

namespace latcontact {

// Constant of the n^{2/3} term for arbitrary packings of unit balls in R^3.
inline constexpr double kGeneralBoundConstant = 0.926;

// 3 (18 pi)^{1/3} / pi, evaluated in full precision (about 3.66532).
double lattice_bound_constant();

// Touching pairs of any packing of n > 2 congruent balls in R^3 stay below
// 6n - 0.926 n^{2/3}. Throws DomainError for n <= 2.
double upper_bound_general(std::int64_t n);

// Lattice packings: 6n - c n^{2/3} with c = lattice_bound_constant().
double upper_bound_lattice(std::int64_t n);

// Chemical bond ceiling for Z atoms: the lattice bound for crystals, the
// general one for amorphous compounds.
double bond_bound(std::int64_t Z, bool crystalline);

// Largest integer strictly below a (possibly fractional) strict upper bound.
std::int64_t max_below(double strict_bound);

// (2k^3 + k) / 3: 1, 6, 19, 44, 85, 146, ...
std::int64_t octahedral_size(std::int64_t k);

// Cells of the k-th octahedron in the cubic model
// { p in Z^3 : |p|_1 <= k-1, p_1+p_2+p_3 = k-1 mod 2 }, ordered by layer p_3
// and lexicographically within a layer. Cartesian centers are r*sqrt(2)*p.
std::vector<std::array<int, 3>> octahedral_cells(int k);

// Cells of the k-th octahedron in the order partial octahedra are filled.
// The (k-1)-th octahedron shifted by +e_3 lies inside the k-th one and comes
// first; the remaining cells follow greedily, each time the cell touching the
// most cells already placed (ties by layer, then lexicographically). Every
// prefix is therefore a prefix of the next octahedron's order, up to a shift.
std::vector<std::array<int, 3>> octahedral_cell_order(int k);

// Cells as nonnegative coefficients over the fcc preset basis, in fill order.
std::vector<LatticePoint> octahedral_fill_order(int k);

Packing octahedral_construction(int k, double radius);

// First n spheres of the smallest octahedron holding at least n spheres.
Packing octahedral_partial(std::int64_t n, double radius);

// Contact count of octahedral_partial(n); a lower bound for C_3(fcc, n).
std::int64_t octahedral_lower_bound(std::int64_t n);

}  // namespace latcontact
