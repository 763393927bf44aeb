#include "latcontact/errors.hpp"

#include <cstdio>
#include <string>

namespace latcontact {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

OverlappingLattice::OverlappingLattice(double min_length, double diameter)
    : Error("lattice vectors overlap: shortest vector " + format_double(min_length) +
            " is below the sphere diameter " + format_double(diameter)),
      min_length_(min_length),
      diameter_(diameter) {}

UnknownPreset::UnknownPreset(const std::string& name)
    : Error("unknown lattice preset '" + name + "' (expected sc, fcc or bcc)") {}

BoxTooLarge::BoxTooLarge(std::uint64_t points, std::uint64_t cap)
    : Error("candidate box has " + std::to_string(points) + " points, above the cap of " +
            std::to_string(cap)),
      points_(points) {}

OverlapDetected::OverlapDetected(std::size_t i, std::size_t j, double distance_sq)
    : Error("spheres " + std::to_string(i) + " and " + std::to_string(j) +
            " overlap (squared distance " + format_double(distance_sq) + ")"),
      i_(i),
      j_(j) {}

InstanceTooLarge::InstanceTooLarge(long double subset_count, std::uint64_t cap)
    : Error("exhaustive search would visit " +
            format_double(static_cast<double>(subset_count)) + " subsets (cap " +
            std::to_string(cap) + "); use the branch-and-bound solver"),
      subset_count_(subset_count) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace latcontact
