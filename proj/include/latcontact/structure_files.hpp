#pragma once

#include <optional>
#include <string>

#include "latcontact/chem.hpp"
#include "latcontact/lattice.hpp"

namespace latcontact {

// Lattice files are YAML mappings holding either
//
//   preset: fcc
//   radius: 1.0          # optional, defaults to 1
//
// or an explicit basis (one row per basis vector):
//
//   dimension: 3
//   radius: 1.28
//   basis:
//     - [0.0, 1.82, 1.82]
//     - [1.82, 0.0, 1.82]
//     - [1.82, 1.82, 0.0]
//
// `radius_override`, when set, replaces the file's radius.
Lattice parse_lattice_spec(const std::string& text, std::optional<double> radius_override = {},
                           const std::string& name = "custom");
Lattice load_lattice_file(const std::string& path, std::optional<double> radius_override = {});

// A preset name (sc, fcc, bcc) or the path of a lattice file.
Lattice resolve_lattice(const std::string& source, std::optional<double> radius);

bool is_preset_name(const std::string& name);

// Compound files:
//
//   element: Cu
//   radius: 1.28
//   Z: 13
//   lattice: fcc         # preset or lattice file path, relative to this file
CompoundSpec parse_compound_spec(const std::string& text, const std::string& base_dir = ".");
CompoundSpec load_compound_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace latcontact
