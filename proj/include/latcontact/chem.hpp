#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "latcontact/contact_graph.hpp"

namespace latcontact {

// A monatomic compound A_Z: Z atoms of one element with radius r(A). The
// radius is always supplied by the caller and shares the lattice's unit.
struct CompoundSpec {
  std::string element_symbol;
  double radius = 0.0;
  std::int64_t Z = 0;
  // "sc", "fcc", "bcc" or a path to a lattice file.
  std::string lattice_source;
};

// Spheres of radius r(A) at the given lattice points. Throws DomainError
// when the point count differs from Z.
Packing compound_to_packing(const CompoundSpec& spec, const std::vector<LatticePoint>& points);

struct BondReport {
  std::int64_t Z = 0;
  std::int64_t bonds = 0;
  // 6Z - 0.926 Z^{2/3}; present for Z > 2.
  std::optional<double> amorphous_bound;
  // 6Z - 3.665... Z^{2/3}; present for Z > 2.
  std::optional<double> crystal_bound;
  std::optional<Packing> max_coordination_witness;
};

BondReport bond_report(const Packing& packing);

// Positions read from an XYZ file and their all-pairs contact graph.
struct XyzStructure {
  std::string comment;
  std::vector<std::string> symbols;
  std::vector<Eigen::Vector3d> positions;
  ContactGraph graph;
};

BondReport bond_report(const XyzStructure& structure);

// Count line, a comment naming lattice, radius and contact count, then
// "SYMBOL x y z" per sphere with six decimals in sorted point order.
std::string export_xyz(const Packing& packing, const std::string& element_symbol);

// Coordinates in XYZ files carry six decimals, far coarser than the lattice
// contact band, so imported structures are classified with this relative
// tolerance on squared distances.
inline constexpr double kXyzContactTolerance = 1e-5;

// Throws ParseError (with a 1-based line number) for malformed input and
// OverlapDetected for atoms closer than 2r.
XyzStructure import_xyz(const std::string& text, double radius,
                        double tolerance = kXyzContactTolerance);

}  // namespace latcontact
