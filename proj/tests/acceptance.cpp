// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// The CLI criteria run the real executable, whose path is passed as argv[1].

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "latcontact/bounds.hpp"
#include "latcontact/chem.hpp"
#include "latcontact/solver.hpp"

using namespace latcontact;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_tool;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail.clear();
  else o.detail += "; ";
  o.pass = false;
  o.detail += why;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Command {
  int status = -1;
  std::string out;
};

Command run_tool(const std::string& args) {
  Command c;
  const std::string cmd = "'" + g_tool + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

SearchConfig config(int n, Algorithm a) {
  SearchConfig c;
  c.n = n;
  c.algorithm = a;
  c.exhaustive_cap = 1'000'000'000;
  return c;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const char* name : {"sc", "fcc", "bcc"}) {
    const Lattice lat = preset_lattice(name, 1.0);
    for (int n = 2; n <= 7; ++n) {
      const auto ex = solve_exhaustive(lat, config(n, Algorithm::kExhaustive));
      const auto bb = solve_bnb(lat, config(n, Algorithm::kBranchAndBound));
      if (ex.contact_number != bb.contact_number || ex.witness.points() != bb.witness.points()) {
        fail(o, std::string(name) + " n=" + std::to_string(n) + ": exhaustive " +
                    std::to_string(ex.contact_number) + " vs bnb " +
                    std::to_string(bb.contact_number));
      }
    }
  }
  const double s = seconds_since(t0);
  if (s >= 300.0) fail(o, "sweep took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "18 instances agree, sweep " + std::to_string(s) + " s";
  return o;
}

Outcome known_values() {
  Outcome o;
  struct Case {
    const char* lattice;
    int n;
    std::int64_t expected;
  };
  const Case cases[] = {{"fcc", 2, 1}, {"fcc", 3, 3}, {"fcc", 4, 6}, {"fcc", 5, 9},
                        {"fcc", 6, 12}, {"sc", 3, 2},  {"sc", 4, 4},  {"sc", 8, 12}};
  for (const auto& c : cases) {
    const auto got = maximal_contact_number(preset_lattice(c.lattice, 1.0), c.n).contact_number;
    if (got != c.expected) {
      fail(o, std::string(c.lattice) + " C(" + std::to_string(c.n) + ") = " + std::to_string(got) +
                  ", expected " + std::to_string(c.expected));
    }
  }
  if (o.pass) o.detail = "8 values match";
  return o;
}

Outcome lattice_theorem() {
  Outcome o;
  const double c = lattice_bound_constant();
  if (!(c >= 3.665 && c <= 3.666)) fail(o, "constant " + std::to_string(c));
  for (const char* name : {"sc", "fcc", "bcc"}) {
    const Lattice lat = preset_lattice(name, 1.0);
    for (int n = 3; n <= 9; ++n) {
      const auto r = maximal_contact_number(lat, n);
      const double bound = 6.0 * n - c * std::cbrt(double(n)) * std::cbrt(double(n));
      if (!r.optimal || !(double(r.contact_number) < bound)) {
        fail(o, std::string(name) + " n=" + std::to_string(n) + " breaks the strict bound");
      }
      const auto cli = run_tool(std::string("solve --lattice ") + name + " --n " + std::to_string(n));
      if (cli.status != 0) {
        fail(o, std::string("solve ") + name + " n=" + std::to_string(n) + " exited " +
                    std::to_string(cli.status));
      }
    }
  }
  if (o.pass) {
    std::ostringstream d;
    d.precision(10);
    d << "c = " << c << ", 21 optimal solves strictly below, exit codes 0";
    o.detail = d.str();
  }
  return o;
}

Outcome corollary_ordering() {
  Outcome o;
  const double c = 3.0 * std::cbrt(18.0 * M_PI) / M_PI;
  for (std::int64_t Z = 3; Z <= 50; ++Z) {
    const double z23 = std::pow(double(Z), 2.0 / 3.0);
    const double crystal = bond_bound(Z, true);
    const double amorphous = bond_bound(Z, false);
    if (std::abs(crystal - (6.0 * Z - c * z23)) > 1e-9 ||
        std::abs(amorphous - (6.0 * Z - 0.926 * z23)) > 1e-9) {
      fail(o, "formula mismatch at Z=" + std::to_string(Z));
    }
    if (!(crystal < amorphous && amorphous < 6.0 * Z)) fail(o, "ordering at Z=" + std::to_string(Z));
  }
  if (o.pass) o.detail = "Z = 3..50";
  return o;
}

Outcome octahedral() {
  Outcome o;
  const std::int64_t sizes[] = {1, 6, 19, 44, 85, 146};
  for (int k = 1; k <= 6; ++k) {
    const auto p = octahedral_construction(k, 1.0);
    if (octahedral_size(k) != sizes[k - 1] || (2 * k * k * k + k) / 3 != sizes[k - 1] ||
        std::int64_t(p.size()) != sizes[k - 1]) {
      fail(o, "size at k=" + std::to_string(k));
    }
  }
  const auto k2 = octahedral_construction(2, 1.0);
  int pairs = 0;
  for (std::size_t i = 0; i < k2.size(); ++i) {
    for (std::size_t j = i + 1; j < k2.size(); ++j) {
      const double d = (embed(k2.lattice(), k2.points()[i]) - embed(k2.lattice(), k2.points()[j])).norm();
      pairs += std::abs(d - 2.0) <= 1e-9;
    }
  }
  if (pairs != 12) fail(o, "k=2 has " + std::to_string(pairs) + " contacts");
  std::int64_t prev = 0;
  for (std::int64_t n = 1; n <= 44; ++n) {
    const auto lb = octahedral_lower_bound(n);
    if (lb < prev) fail(o, "lower bound drops at n=" + std::to_string(n));
    prev = lb;
  }
  const Lattice fcc = preset_lattice("fcc", 1.0);
  for (int n = 1; n <= 8; ++n) {
    const auto lb = octahedral_lower_bound(n);
    const auto c = maximal_contact_number(fcc, n).contact_number;
    if (lb > c) fail(o, "n=" + std::to_string(n) + ": lower bound " + std::to_string(lb) + " > " + std::to_string(c));
  }
  if (o.pass) o.detail = "sizes, k=2 -> 12, monotone n<=44, below C(fcc,n) for n<=8";
  return o;
}

Outcome kissing() {
  Outcome o;
  const std::pair<const char*, std::size_t> expected[] = {{"sc", 6}, {"fcc", 12}, {"bcc", 8}};
  for (const auto& [name, count] : expected) {
    const auto got = kissing_vectors(preset_lattice(name, 1.0)).size();
    if (got != count) fail(o, std::string(name) + " has " + std::to_string(got));
  }
  if (o.pass) o.detail = "6 / 12 / 8";
  return o;
}

Outcome candidate_boxes() {
  Outcome o;
  const Lattice fcc = preset_lattice("fcc", 1.0);
  for (int n = 1; n <= 20; ++n) {
    const std::size_t k = static_cast<std::size_t>((n + 2) / 3);
    if (candidate_box(fcc, n).size() != (k + 1) * (k + 1) * (k + 1)) {
      fail(o, "n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n = 1..20";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string first;
  for (const char* t : {"1", "2", "8"}) {
    const auto c = run_tool(std::string("solve --lattice fcc --n 7 --threads ") + t + " --json");
    if (c.status != 0) fail(o, std::string("T=") + t + " exited " + std::to_string(c.status));
    if (first.empty()) first = c.out;
    else if (c.out != first) fail(o, std::string("T=") + t + " differs");
  }
  if (o.pass) o.detail = "T = 1, 2, 8 byte-identical";
  return o;
}

Outcome xyz_round_trip() {
  Outcome o;
  std::mt19937 rng(2024);
  const char* names[] = {"sc", "fcc", "bcc"};
  std::uniform_int_distribution<int> pick(0, 2), size(2, 10);
  std::uniform_real_distribution<double> radius(0.5, 2.5);
  for (int i = 0; i < 20; ++i) {
    const double r = radius(rng);
    const Lattice lat = preset_lattice(names[pick(rng)], r);
    const int n = size(rng);
    const auto result = maximal_contact_number(lat, n);
    const auto s = import_xyz(export_xyz(result.witness, "X"), r);
    if (std::int64_t(s.graph.edge_count()) != result.contact_number) {
      fail(o, lat.name() + " n=" + std::to_string(n) + ": contacts changed");
    }
    for (std::size_t j = 0; j < s.positions.size(); ++j) {
      const auto x = embed(lat, result.witness.points()[j]);
      if ((s.positions[j] - x).cwiseAbs().maxCoeff() > 1e-6) {
        fail(o, lat.name() + " n=" + std::to_string(n) + ": coordinates moved");
        break;
      }
    }
  }
  if (o.pass) o.detail = "20 witnesses";
  return o;
}

Outcome solver_scale() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto c = run_tool("solve --lattice fcc --n 10 --algorithm bnb --json");
  const double s = seconds_since(t0);
  if (c.status != 0) {
    fail(o, "exited " + std::to_string(c.status));
    return o;
  }
  const json j = json::parse(c.out);
  const auto value = j["contact_number"].get<std::int64_t>();
  if (j["optimal"] != true) fail(o, "not optimal");
  if (s >= 600.0) fail(o, "took " + std::to_string(s) + " s");
  if (!(double(value) < upper_bound_lattice(10))) fail(o, "breaks the lattice bound");
  if (value < octahedral_lower_bound(10)) fail(o, "below the octahedral lower bound");
  if (o.pass) o.detail = "C(fcc,10) = " + std::to_string(value) + " in " + std::to_string(s) + " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to latcontact executable>\n";
    return 2;
  }
  g_tool = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence", oracle_equivalence},
      {"2 known small values", known_values},
      {"3 lattice contact bound", lattice_theorem},
      {"4 crystal vs amorphous bond bounds", corollary_ordering},
      {"5 octahedral construction", octahedral},
      {"6 kissing vectors", kissing},
      {"7 candidate box size", candidate_boxes},
      {"8 CLI determinism", determinism},
      {"9 XYZ round trip", xyz_round_trip},
      {"10 solver scale", solver_scale},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      fail(o, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
