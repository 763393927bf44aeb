#include "latcontact/solver.hpp"

#include <cmath>

#include "latcontact/bounds.hpp"
#include "latcontact/errors.hpp"
#include "search_internal.hpp"

namespace latcontact {

std::string to_string(Algorithm a) {
  return a == Algorithm::kExhaustive ? "exhaustive" : "branch_and_bound";
}

namespace detail {

int resolve_box_k(const Lattice& lattice, const SearchConfig& config) {
  if (config.box_k) {
    if (*config.box_k < 0) throw DomainError("box side override must be nonnegative");
    return *config.box_k;
  }
  return box_side_for(lattice.dimension(), config.n);
}

SearchResult make_result(const Lattice& lattice, const std::vector<LatticePoint>& box,
                         const TaskBest& best, bool optimal, std::uint64_t nodes,
                         Algorithm algorithm, int box_k) {
  std::vector<LatticePoint> pts;
  pts.reserve(best.indices.size());
  for (auto i : best.indices) pts.push_back(box[i]);
  Packing witness(lattice, std::move(pts));
  const auto n = static_cast<std::int64_t>(witness.size());
  if (static_cast<std::int64_t>(contact_count(witness)) != best.value) {
    throw InvariantViolation("witness contact count disagrees with the search value");
  }
  std::optional<double> bound;
  if (lattice.dimension() == 3 && n > 2) bound = upper_bound_lattice(n);
  return SearchResult{.contact_number = best.value,
                      .witness = std::move(witness),
                      .optimal = optimal,
                      .nodes_explored = nodes,
                      .theorem_bound = bound,
                      .algorithm = algorithm,
                      .box_k = box_k};
}

}  // namespace detail

SearchResult maximal_contact_number(const Lattice& lattice, int n, SearchConfig config) {
  if (n < 1) throw DomainError("sphere count must be at least 1");
  config.n = n;
  const int k = detail::resolve_box_k(lattice, config);
  const long double points = std::pow(static_cast<long double>(k) + 1, lattice.dimension());
  const bool small = points <= static_cast<long double>(config.box_cap) &&
                     subset_count(static_cast<std::uint64_t>(points), static_cast<std::uint64_t>(n)) <=
                         static_cast<long double>(kDispatchThreshold);
  SearchResult result = small ? solve_exhaustive(lattice, config) : solve_bnb(lattice, config);
  if (result.optimal && result.theorem_bound &&
      !(static_cast<double>(result.contact_number) < *result.theorem_bound)) {
    throw InvariantViolation("contact number " + std::to_string(result.contact_number) +
                             " reaches the lattice bound " + std::to_string(*result.theorem_bound));
  }
  return result;
}

bool verify_against_bounds(const SearchResult& result) {
  const auto n = static_cast<std::int64_t>(result.witness.size());
  if (n <= 2) throw NotApplicable("bounds apply only to more than two spheres");
  if (!result.optimal) throw NotApplicable("result is not proven optimal");
  if (result.witness.lattice().dimension() != 3) {
    throw NotApplicable("the lattice contact bound is stated for three dimensions");
  }
  bool ok = static_cast<double>(result.contact_number) < upper_bound_lattice(n);
  if (result.witness.lattice().name() == "fcc") {
    ok = ok && result.contact_number >= octahedral_lower_bound(n);
  }
  return ok;
}

}  // namespace latcontact
