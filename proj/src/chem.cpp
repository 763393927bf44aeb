#include "latcontact/chem.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "latcontact/bounds.hpp"
#include "latcontact/errors.hpp"
#include "latcontact/structure_files.hpp"

namespace latcontact {

namespace {

void fill_bounds(BondReport& report) {
  if (report.Z > 2) {
    report.amorphous_bound = bond_bound(report.Z, false);
    report.crystal_bound = bond_bound(report.Z, true);
  }
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, std::size_t line) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "not a number: '" + tok + "'");
  return v;
}

}  // namespace

Packing compound_to_packing(const CompoundSpec& spec, const std::vector<LatticePoint>& points) {
  if (!(spec.radius > 0.0)) throw DomainError("compound radius must be positive");
  if (spec.Z < 1) throw DomainError("compound atom count Z must be at least 1");
  if (static_cast<std::int64_t>(points.size()) != spec.Z) {
    throw DomainError("compound " + spec.element_symbol + " has Z = " + std::to_string(spec.Z) +
                      " but " + std::to_string(points.size()) + " positions were given");
  }
  return Packing(resolve_lattice(spec.lattice_source, spec.radius), points);
}

BondReport bond_report(const Packing& packing) {
  BondReport report;
  report.Z = static_cast<std::int64_t>(packing.size());
  report.bonds = static_cast<std::int64_t>(contact_count(packing));
  fill_bounds(report);
  return report;
}

BondReport bond_report(const XyzStructure& structure) {
  BondReport report;
  report.Z = static_cast<std::int64_t>(structure.positions.size());
  report.bonds = static_cast<std::int64_t>(structure.graph.edge_count());
  fill_bounds(report);
  return report;
}

std::string export_xyz(const Packing& packing, const std::string& element_symbol) {
  const auto& lat = packing.lattice();
  if (lat.dimension() > 3) throw DomainError("XYZ export supports at most three dimensions");
  std::ostringstream out;
  out << packing.size() << '\n';
  out << "lattice=" << lat.name() << " radius=" << fixed6(lat.radius())
      << " contacts=" << contact_count(packing) << '\n';
  for (const auto& p : packing.points()) {
    const Eigen::VectorXd x = embed(lat, p);
    out << element_symbol;
    for (Eigen::Index i = 0; i < 3; ++i) {
      out << ' ' << fixed6(i < x.size() ? x[i] : 0.0);
    }
    out << '\n';
  }
  return out.str();
}

XyzStructure import_xyz(const std::string& text, double radius, double tolerance) {
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "empty XYZ input");
  const auto head = split_ws(line);
  if (head.size() != 1) throw ParseError(1, "expected the atom count");
  std::size_t count = 0;
  {
    const auto& tok = head[0];
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), count);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(1, "atom count is not a nonnegative integer: '" + tok + "'");
    }
  }

  XyzStructure s;
  ++line_no;
  if (!std::getline(in, s.comment)) throw ParseError(line_no, "missing comment line");
  for (std::size_t i = 0; i < count; ++i) {
    ++line_no;
    if (!std::getline(in, line)) {
      throw ParseError(line_no, "expected " + std::to_string(count) + " atoms, found " +
                                    std::to_string(i));
    }
    const auto tok = split_ws(line);
    if (tok.size() < 4) throw ParseError(line_no, "expected 'SYMBOL x y z'");
    s.symbols.push_back(tok[0]);
    s.positions.emplace_back(parse_number(tok[1], line_no), parse_number(tok[2], line_no),
                             parse_number(tok[3], line_no));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_ws(line).empty()) throw ParseError(line_no, "unexpected content after the atoms");
  }

  const ContactBand band(radius, tolerance);
  s.graph.n = count;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double d2 = (s.positions[i] - s.positions[j]).squaredNorm();
      switch (band.classify(d2)) {
        case PairKind::kOverlap:
          throw OverlapDetected(i, j, d2);
        case PairKind::kContact:
          s.graph.edges.emplace_back(i, j);
          break;
        case PairKind::kSeparated:
          break;
      }
    }
  }
  return s;
}

}  // namespace latcontact
