#include "latcontact/structure_files.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "latcontact/errors.hpp"

namespace latcontact {

namespace {

YAML::Node parse_mapping(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(static_cast<std::size_t>(e.mark.line + 1), e.msg);
  }
  if (!root.IsMap()) throw ParseError(1, "expected a key-value mapping");
  return root;
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception& e) {
    throw ParseError(static_cast<std::size_t>(e.mark.line + 1), "bad value for '" + key + "'");
  }
}

std::size_t line_of(const YAML::Node& node) {
  return static_cast<std::size_t>(node.Mark().line + 1);
}

}  // namespace

bool is_preset_name(const std::string& name) {
  return name == "sc" || name == "fcc" || name == "bcc";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Lattice parse_lattice_spec(const std::string& text, std::optional<double> radius_override,
                           const std::string& name) {
  const YAML::Node root = parse_mapping(text);
  double radius = 1.0;
  if (root["radius"]) radius = scalar<double>(root["radius"], "radius");
  if (radius_override) radius = *radius_override;

  if (root["preset"]) {
    if (root["basis"]) throw ParseError(line_of(root["basis"]), "give either preset or basis");
    return preset_lattice(scalar<std::string>(root["preset"], "preset"), radius);
  }
  const YAML::Node basis = root["basis"];
  if (!basis) throw ParseError(1, "missing 'preset' or 'basis'");
  if (!basis.IsSequence()) throw ParseError(line_of(basis), "'basis' must be a list of rows");

  std::vector<std::vector<double>> rows;
  for (const auto& row : basis) {
    if (!row.IsSequence()) throw ParseError(line_of(row), "basis rows must be lists");
    std::vector<double> v;
    for (const auto& x : row) v.push_back(scalar<double>(x, "basis"));
    rows.push_back(std::move(v));
  }
  if (root["dimension"]) {
    const auto d = scalar<std::size_t>(root["dimension"], "dimension");
    if (d != rows.size()) {
      throw ParseError(line_of(root["dimension"]),
                       "dimension " + std::to_string(d) + " but " + std::to_string(rows.size()) +
                           " basis rows");
    }
  }
  return make_lattice(rows, radius, name);
}

Lattice load_lattice_file(const std::string& path, std::optional<double> radius_override) {
  return parse_lattice_spec(read_text_file(path), radius_override,
                            std::filesystem::path(path).stem().string());
}

Lattice resolve_lattice(const std::string& source, std::optional<double> radius) {
  if (is_preset_name(source)) return preset_lattice(source, radius.value_or(1.0));
  if (!std::filesystem::exists(source)) throw UnknownPreset(source);
  return load_lattice_file(source, radius);
}

CompoundSpec parse_compound_spec(const std::string& text, const std::string& base_dir) {
  const YAML::Node root = parse_mapping(text);
  for (const char* key : {"element", "radius", "Z", "lattice"}) {
    if (!root[key]) throw ParseError(1, std::string("missing '") + key + "'");
  }
  CompoundSpec spec;
  spec.element_symbol = scalar<std::string>(root["element"], "element");
  spec.radius = scalar<double>(root["radius"], "radius");
  spec.Z = scalar<std::int64_t>(root["Z"], "Z");
  spec.lattice_source = scalar<std::string>(root["lattice"], "lattice");
  if (!(spec.radius > 0.0)) throw ParseError(line_of(root["radius"]), "radius must be positive");
  if (spec.Z < 1) throw ParseError(line_of(root["Z"]), "Z must be at least 1");
  if (!is_preset_name(spec.lattice_source) &&
      std::filesystem::path(spec.lattice_source).is_relative()) {
    spec.lattice_source = (std::filesystem::path(base_dir) / spec.lattice_source).string();
  }
  return spec;
}

CompoundSpec load_compound_file(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path();
  return parse_compound_spec(read_text_file(path), dir.empty() ? "." : dir.string());
}

}  // namespace latcontact
