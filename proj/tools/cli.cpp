#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcontact/bounds.hpp"
#include "latcontact/chem.hpp"
#include "latcontact/errors.hpp"
#include "latcontact/solver.hpp"
#include "latcontact/structure_files.hpp"

namespace latcontact::cli {

namespace {

using nlohmann::json;

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json lattice_json(const Lattice& lat) {
  json basis = json::array();
  for (Eigen::Index i = 0; i < lat.basis().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < lat.basis().cols(); ++j) row.push_back(lat.basis()(i, j));
    basis.push_back(row);
  }
  return {{"name", lat.name()}, {"radius", lat.radius()}, {"basis", basis}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw DomainError("cannot write '" + path + "'");
}

struct SolveArgs {
  std::string lattice;
  std::string compound;
  int n = 0;
  std::optional<double> radius;
  std::string algorithm = "auto";
  std::optional<int> box_k;
  int threads = 1;
  std::optional<std::uint64_t> node_limit;
  bool json = false;
  std::string export_xyz;
  std::string element = "X";
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  std::ostream& text = a.json ? err : out;
  int n = a.n;
  std::string element = a.element;
  std::optional<Lattice> lattice;
  if (!a.compound.empty()) {
    const CompoundSpec spec = load_compound_file(a.compound);
    lattice = resolve_lattice(spec.lattice_source, a.radius.value_or(spec.radius));
    if (n == 0) n = static_cast<int>(spec.Z);
    element = spec.element_symbol;
  } else {
    lattice = resolve_lattice(a.lattice, a.radius);
  }
  if (n < 1) {
    err << "solve: --n must be a positive integer\n";
    return kUsage;
  }

  SearchConfig config;
  config.n = n;
  config.box_k = a.box_k;
  config.thread_hint = a.threads;
  config.node_limit = a.node_limit;
  std::optional<SearchResult> result;
  if (a.algorithm == "auto") {
    result = maximal_contact_number(*lattice, n, config);
  } else if (a.algorithm == "exhaustive") {
    result = solve_exhaustive(*lattice, config);
  } else {
    result = solve_bnb(*lattice, config);
  }

  text << "lattice:        " << lattice->name() << " (radius " << lattice->radius() << ")\n"
       << "spheres:        " << n << "\n"
       << "contact number: " << result->contact_number << "\n"
       << "optimal:        " << (result->optimal ? "yes" : "no (node limit reached)") << "\n"
       << "lattice bound:  "
       << (result->theorem_bound ? fmt4(*result->theorem_bound) : std::string("n/a")) << "\n"
       << "algorithm:      " << to_string(result->algorithm) << " (box k = " << result->box_k
       << ")\n"
       << "nodes explored: " << result->nodes_explored << "\n";

  if (a.json) {
    json witness = json::array();
    for (const auto& p : result->witness.points()) witness.push_back(p.coeffs);
    json j = {{"lattice", lattice_json(*lattice)},
              {"n", n},
              {"contact_number", result->contact_number},
              {"optimal", result->optimal},
              {"bound", optional_number(result->theorem_bound)},
              {"algorithm", to_string(result->algorithm)},
              {"box_k", result->box_k},
              {"witness", witness}};
    out << j.dump(2) << "\n";
  }
  if (!a.export_xyz.empty()) write_file(a.export_xyz, export_xyz(result->witness, element));

  if (result->optimal && result->theorem_bound && !verify_against_bounds(*result)) {
    err << "error: contact number " << result->contact_number
        << " violates the lattice bounds; this is a solver bug\n";
    return kInvariant;
  }
  return kOk;
}

int run_bounds(std::int64_t n, bool lattice_only, bool general_only, bool as_json,
               std::ostream& out, std::ostream& err) {
  std::ostream& text = as_json ? err : out;
  const double general = upper_bound_general(n);
  const double lattice = upper_bound_lattice(n);
  if (!lattice_only) text << "general packing bound: " << fmt4(general) << "\n";
  if (!general_only) text << "lattice packing bound: " << fmt4(lattice) << "\n";
  if (as_json) {
    json j = {{"n", n}};
    if (!lattice_only) j["general_bound"] = general;
    if (!general_only) {
      j["lattice_bound"] = lattice;
      j["lattice_constant"] = lattice_bound_constant();
    }
    out << j.dump(2) << "\n";
  }
  return kOk;
}

int run_octa(int k, double radius, const std::string& xyz_path, const std::string& element,
             bool as_json, std::ostream& out, std::ostream& err) {
  std::ostream& text = as_json ? err : out;
  const Packing p = octahedral_construction(k, radius);
  const auto n = static_cast<std::int64_t>(p.size());
  const auto contacts = static_cast<std::int64_t>(contact_count(p));
  std::optional<double> bound;
  if (n > 2) bound = upper_bound_lattice(n);
  text << "octahedron k:   " << k << "\n"
       << "spheres:        " << n << "\n"
       << "contacts:       " << contacts << "\n"
       << "lattice bound:  " << (bound ? fmt4(*bound) : std::string("n/a")) << "\n";
  if (as_json) {
    out << json{{"k", k}, {"n", n}, {"contacts", contacts}, {"bound", optional_number(bound)}}
               .dump(2)
        << "\n";
  }
  if (!xyz_path.empty()) write_file(xyz_path, export_xyz(p, element));
  return kOk;
}

int run_analyze(const std::string& path, double radius, bool crystal, bool as_json,
                std::ostream& out, std::ostream& err) {
  std::ostream& text = as_json ? err : out;
  const XyzStructure s = import_xyz(read_text_file(path), radius);
  const BondReport report = bond_report(s);
  const std::optional<double> applicable =
      crystal ? report.crystal_bound : report.amorphous_bound;
  const bool within = !applicable || static_cast<double>(report.bonds) < *applicable;
  text << "atoms:           " << report.Z << "\n"
       << "bonds:           " << report.bonds << "\n"
       << "amorphous bound: "
       << (report.amorphous_bound ? fmt4(*report.amorphous_bound) : std::string("n/a")) << "\n";
  if (crystal) {
    text << "crystal bound:   "
         << (report.crystal_bound ? fmt4(*report.crystal_bound) : std::string("n/a")) << "\n";
  }
  if (as_json) {
    json j = {{"Z", report.Z},
              {"bonds", report.bonds},
              {"crystalline", crystal},
              {"amorphous_bound", optional_number(report.amorphous_bound)},
              {"crystal_bound", crystal ? optional_number(report.crystal_bound) : json(nullptr)},
              {"within_bound", within}};
    out << j.dump(2) << "\n";
  }
  if (!within) {
    err << "error: " << report.bonds << " bonds reach the applicable bound\n";
    return kInvariant;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal contact numbers of finite lattice sphere packings"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Maximal contact number of n spheres on a lattice");
  solve_cmd->add_option("--lattice", solve.lattice, "Preset (sc, fcc, bcc) or lattice file");
  solve_cmd->add_option("--compound", solve.compound,
                        "Compound file supplying element, radius, Z and lattice");
  solve_cmd->add_option("--n", solve.n, "Number of spheres")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--radius", solve.radius, "Sphere radius")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
  solve_cmd->add_option("--box-k", solve.box_k, "Override the coefficient box side k")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--threads", solve.threads)->check(CLI::Range(1, 256));
  solve_cmd->add_option("--node-limit", solve.node_limit, "Stop after this many search nodes");
  solve_cmd->add_flag("--json", solve.json, "Print a JSON object on stdout");
  solve_cmd->add_option("--export-xyz", solve.export_xyz, "Write the witness as XYZ");
  solve_cmd->add_option("--element", solve.element, "Element symbol for XYZ output");

  std::int64_t bounds_n = 0;
  bool lattice_only = false;
  bool general_only = false;
  bool bounds_json = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Contact number upper bounds for n spheres");
  bounds_cmd->add_option("--n", bounds_n)->required();
  auto* lo = bounds_cmd->add_flag("--lattice-only", lattice_only);
  auto* go = bounds_cmd->add_flag("--general-only", general_only);
  lo->excludes(go);
  bounds_cmd->add_flag("--json", bounds_json);

  int octa_k = 1;
  double octa_radius = 1.0;
  std::string octa_xyz;
  std::string octa_element = "X";
  bool octa_json = false;
  auto* octa_cmd = app.add_subcommand("octa", "The k-th octahedral construction on fcc");
  octa_cmd->add_option("--k", octa_k)->required()->check(CLI::Range(1, 20));
  octa_cmd->add_option("--radius", octa_radius)->check(CLI::PositiveNumber);
  octa_cmd->add_option("--export-xyz", octa_xyz);
  octa_cmd->add_option("--element", octa_element);
  octa_cmd->add_flag("--json", octa_json);

  std::string xyz_path;
  double analyze_radius = 0.0;
  bool crystal = false;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Bond count of an XYZ structure");
  analyze_cmd->add_option("--xyz", xyz_path)->required();
  analyze_cmd->add_option("--radius", analyze_radius)->required()->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--crystal", crystal, "Treat the structure as a crystal (true/false)");
  analyze_cmd->add_flag("--json", analyze_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      if (solve.lattice.empty() == solve.compound.empty()) {
        err << "solve: give exactly one of --lattice or --compound\n";
        return kUsage;
      }
      if (solve.compound.empty() && solve.n == 0) {
        err << "solve: --n is required\n";
        return kUsage;
      }
      return run_solve(solve, out, err);
    }
    if (*bounds_cmd) return run_bounds(bounds_n, lattice_only, general_only, bounds_json, out, err);
    if (*octa_cmd) {
      return run_octa(octa_k, octa_radius, octa_xyz, octa_element, octa_json, out, err);
    }
    return run_analyze(xyz_path, analyze_radius, crystal, analyze_json, out, err);
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace latcontact::cli
