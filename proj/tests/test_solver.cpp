#include <doctest.h>

#include <cmath>

#include "latcontact/bounds.hpp"
#include "latcontact/errors.hpp"
#include "latcontact/solver.hpp"
#include "oracles.hpp"

using namespace latcontact;

namespace {

std::vector<LatticePoint> cube(int k) {
  std::vector<LatticePoint> out;
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      for (int c = 0; c <= k; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

SearchConfig config_for(int n, int threads = 1) {
  SearchConfig c;
  c.n = n;
  c.thread_hint = threads;
  return c;
}

void check_witness(const SearchResult& r, int n) {
  CHECK(r.witness.size() == static_cast<std::size_t>(n));
  CHECK(static_cast<std::int64_t>(contact_count(r.witness)) == r.contact_number);
  CHECK(oracle::contacts(r.witness.lattice(), r.witness.points()) == r.contact_number);
  for (const auto& p : r.witness.points()) {
    for (int c : p.coeffs) CHECK((c >= 0 && c <= r.box_k));
  }
}

}  // namespace

TEST_CASE("subset counts") {
  CHECK(subset_count(27, 6) == 296010.0L);
  CHECK(subset_count(5, 0) == 1.0L);
  CHECK(subset_count(3, 5) == 0.0L);
}

TEST_CASE("small exhaustive examples") {
  const Lattice fcc = preset_lattice("fcc", 1.0);
  const Lattice sc = preset_lattice("sc", 1.0);
  CHECK(solve_exhaustive(fcc, config_for(1)).contact_number == 0);
  CHECK(solve_exhaustive(fcc, config_for(2)).contact_number == 1);
  CHECK(solve_exhaustive(fcc, config_for(4)).contact_number == 6);
  CHECK(solve_exhaustive(sc, config_for(3)).contact_number == 2);
  CHECK(solve_exhaustive(sc, config_for(4)).contact_number == 4);
  const auto six = solve_exhaustive(fcc, config_for(6));
  CHECK(six.contact_number == 12);
  CHECK(six.optimal);
  CHECK(six.algorithm == Algorithm::kExhaustive);
  check_witness(six, 6);
}

TEST_CASE("both solvers agree with the Cartesian brute force") {
  for (const char* name : {"sc", "fcc", "bcc"}) {
    const Lattice lat = preset_lattice(name, 1.0);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const auto ref = oracle::max_contacts(lat, cube((n + 2) / 3), static_cast<std::size_t>(n));
      const auto ex = solve_exhaustive(lat, config_for(n));
      const auto bb = solve_bnb(lat, config_for(n));
      CHECK(ex.contact_number == ref.best);
      CHECK(bb.contact_number == ref.best);
      CHECK(ex.witness.points() == ref.witness);
      CHECK(bb.witness.points() == ref.witness);
      CHECK(bb.optimal);
      check_witness(bb, n);
    }
  }
}

TEST_CASE("known contact numbers") {
  const Lattice fcc = preset_lattice("fcc", 1.0);
  const Lattice sc = preset_lattice("sc", 1.0);
  const Lattice bcc = preset_lattice("bcc", 1.0);
  CHECK(maximal_contact_number(fcc, 2).contact_number == 1);
  CHECK(maximal_contact_number(fcc, 3).contact_number == 3);
  CHECK(maximal_contact_number(fcc, 4).contact_number == 6);
  // Five fcc spheres reach 8; the 9-contact bipyramid needs an hcp stacking.
  CHECK(maximal_contact_number(fcc, 5).contact_number == 8);
  CHECK(maximal_contact_number(fcc, 6).contact_number == 12);
  CHECK(maximal_contact_number(sc, 8).contact_number == 12);
  CHECK(maximal_contact_number(bcc, 8).contact_number == 13);
}

TEST_CASE("canonical octahedron witness") {
  const auto r = maximal_contact_number(preset_lattice("fcc", 1.0), 6);
  const std::vector<LatticePoint> expected{{0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                           {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};
  CHECK(r.witness.points() == expected);
}

TEST_CASE("dispatch picks the solver by subset count") {
  const Lattice fcc = preset_lattice("fcc", 1.0);
  CHECK(maximal_contact_number(fcc, 6).algorithm == Algorithm::kExhaustive);
  CHECK(maximal_contact_number(fcc, 8).algorithm == Algorithm::kBranchAndBound);
  CHECK(to_string(Algorithm::kExhaustive) == "exhaustive");
  CHECK(to_string(Algorithm::kBranchAndBound) == "branch_and_bound");
}

TEST_CASE("branch-and-bound values are monotone and within bounds (property)") {
  for (const char* name : {"sc", "fcc", "bcc"}) {
    const Lattice lat = preset_lattice(name, 1.0);
    std::int64_t prev = 0;
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      const auto r = solve_bnb(lat, config_for(n));
      CHECK(r.optimal);
      CHECK(r.contact_number >= prev);
      check_witness(r, n);
      const auto g = build_contact_graph(r.witness);
      CHECK(g.max_degree() <= kissing_vectors(lat).size());
      if (n > 2) {
        REQUIRE(r.theorem_bound.has_value());
        CHECK(*r.theorem_bound == upper_bound_lattice(n));
        CHECK(static_cast<double>(r.contact_number) < *r.theorem_bound);
        CHECK(verify_against_bounds(r));
      }
      if (std::string(name) == "fcc") CHECK(r.contact_number >= octahedral_lower_bound(n));
      prev = r.contact_number;
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  const Lattice fcc = preset_lattice("fcc", 1.0);
  const Lattice bcc = preset_lattice("bcc", 1.0);
  for (int n : {5, 8, 9}) {
    const auto base = solve_bnb(fcc, config_for(n, 1));
    for (int t : {2, 3, 8}) {
      const auto r = solve_bnb(fcc, config_for(n, t));
      CHECK(r.contact_number == base.contact_number);
      CHECK(r.witness.points() == base.witness.points());
    }
  }
  const auto e1 = solve_exhaustive(bcc, config_for(6, 1));
  const auto e4 = solve_exhaustive(bcc, config_for(6, 4));
  CHECK(e1.witness.points() == e4.witness.points());
}

TEST_CASE("node limit yields a valid non-optimal result") {
  SearchConfig c = config_for(12);
  c.node_limit = 50;
  const auto r = solve_bnb(preset_lattice("fcc", 1.0), c);
  CHECK_FALSE(r.optimal);
  check_witness(r, 12);
  CHECK_THROWS_AS(verify_against_bounds(r), NotApplicable);
}

TEST_CASE("box override") {
  const Lattice fcc = preset_lattice("fcc", 1.0);
  SearchConfig c = config_for(4);
  c.box_k = 1;
  const auto r = solve_bnb(fcc, c);
  CHECK(r.box_k == 1);
  CHECK(r.contact_number == 6);
  c.box_k = 0;  // one point cannot hold four spheres
  CHECK_THROWS_AS(solve_bnb(fcc, c), Error);
  c.box_k = -1;
  CHECK_THROWS_AS(solve_bnb(fcc, c), DomainError);
}

TEST_CASE("exhaustive cap") {
  SearchConfig c = config_for(7);
  try {
    solve_exhaustive(preset_lattice("fcc", 1.0), c);
    FAIL("expected InstanceTooLarge");
  } catch (const InstanceTooLarge& e) {
    CHECK(e.subset_count() == subset_count(64, 7));
  }
}

TEST_CASE("verify_against_bounds") {
  const Lattice fcc = preset_lattice("fcc", 1.0);
  CHECK(verify_against_bounds(maximal_contact_number(fcc, 4)));
  CHECK_THROWS_AS(verify_against_bounds(maximal_contact_number(fcc, 2)), NotApplicable);

  auto bogus = maximal_contact_number(fcc, 6);
  bogus.contact_number = 24;  // above 6n - c n^{2/3}
  CHECK_FALSE(verify_against_bounds(bogus));
  bogus.contact_number = 11;  // below the octahedron
  CHECK_FALSE(verify_against_bounds(bogus));

  const Lattice hex = make_lattice({{2, 0}, {1, std::sqrt(3.0)}}, 1.0);
  CHECK_THROWS_AS(verify_against_bounds(maximal_contact_number(hex, 4)), NotApplicable);
}

TEST_CASE("two-dimensional hexagonal lattice") {
  const Lattice hex = make_lattice({{2, 0}, {1, std::sqrt(3.0)}}, 1.0);
  CHECK(maximal_contact_number(hex, 3).contact_number == 3);
  CHECK(maximal_contact_number(hex, 4).contact_number == 5);
  CHECK(maximal_contact_number(hex, 7).contact_number == 12);
  CHECK_FALSE(maximal_contact_number(hex, 7).theorem_bound.has_value());
}
