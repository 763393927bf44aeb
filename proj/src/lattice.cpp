#include "latcontact/lattice.hpp"

#include <cmath>
#include <limits>

#include "latcontact/errors.hpp"

namespace latcontact {

namespace {

// Visits every vector of [-bound, bound]^d except the origin.
template <typename Fn>
void for_each_nonzero(std::size_t d, int bound, Fn&& fn) {
  std::vector<int> c(d, -bound);
  while (true) {
    bool zero = true;
    for (int x : c) zero = zero && x == 0;
    if (!zero) fn(c);
    std::size_t i = 0;
    while (i < d && c[i] == bound) c[i++] = -bound;
    if (i == d) return;
    ++c[i];
  }
}

double quadratic_form(const Eigen::MatrixXd& gram, const std::vector<int>& v) {
  double s = 0.0;
  const auto d = static_cast<Eigen::Index>(v.size());
  for (Eigen::Index i = 0; i < d; ++i) {
    if (v[i] == 0) continue;
    double row = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) row += gram(i, j) * v[j];
    s += v[i] * row;
  }
  return s;
}

}  // namespace

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int c : p.coeffs) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}

ContactBand::ContactBand(double radius, double eps) {
  const double d2 = 4.0 * radius * radius;
  lo_ = d2 * (1.0 - eps);
  hi_ = d2 * (1.0 + eps);
}

Lattice make_lattice(const std::vector<std::vector<double>>& basis, double radius,
                     std::string name) {
  const std::size_t d = basis.size();
  if (d == 0) throw DomainError("lattice basis is empty");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("sphere radius must be a positive finite number");
  }
  Lattice lat;
  lat.basis_.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (basis[i].size() != d) {
      throw DomainError("basis vector " + std::to_string(i + 1) + " has " +
                        std::to_string(basis[i].size()) + " components, expected " +
                        std::to_string(d));
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (!std::isfinite(basis[i][j])) throw DomainError("basis contains a non-finite value");
      lat.basis_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis[i][j];
    }
  }
  lat.gram_ = lat.basis_ * lat.basis_.transpose();
  lat.radius_ = radius;
  lat.name_ = std::move(name);

  // Scale-free determinant test: det(G) / prod(G_ii) is 1 for an orthogonal
  // basis and 0 for a dependent one (Hadamard).
  Eigen::LLT<Eigen::MatrixXd> llt(lat.gram_);
  double diag = 1.0;
  for (Eigen::Index i = 0; i < lat.gram_.rows(); ++i) diag *= lat.gram_(i, i);
  if (llt.info() != Eigen::Success || !(diag > 0.0) ||
      lat.gram_.determinant() <= 1e-12 * diag) {
    throw DegenerateBasis("basis vectors are linearly dependent (Gram matrix is singular)");
  }

  const Eigen::MatrixXd dual = lat.gram_.inverse();
  const double reach = 2.0 * radius * std::sqrt(1.0 + kContactTolerance);
  for (Eigen::Index i = 0; i < dual.rows(); ++i) {
    const double b = reach * std::sqrt(dual(i, i));
    lat.contact_coeff_bound_ =
        std::max(lat.contact_coeff_bound_, static_cast<int>(std::floor(b + 1e-9)));
  }

  lat.min_vector_length_ = min_vector_length(lat, kValidityCoeffBound);
  const double min_sq = lat.min_vector_length_ * lat.min_vector_length_;
  if (min_sq < lat.band().lower()) {
    throw OverlappingLattice(lat.min_vector_length_, lat.diameter());
  }
  return lat;
}

Lattice preset_lattice(const std::string& name, double radius) {
  if (name == "sc") {
    const double a = 2.0 * radius;
    return make_lattice({{a, 0, 0}, {0, a, 0}, {0, 0, a}}, radius, name);
  }
  if (name == "fcc") {
    const double s = radius * std::sqrt(2.0);
    return make_lattice({{0, s, s}, {s, 0, s}, {s, s, 0}}, radius, name);
  }
  if (name == "bcc") {
    const double a = 4.0 * radius / std::sqrt(3.0);
    const double h = a / 2.0;
    return make_lattice({{a, 0, 0}, {0, a, 0}, {h, h, h}}, radius, name);
  }
  throw UnknownPreset(name);
}

Eigen::VectorXd embed(const Lattice& lattice, const LatticePoint& p) {
  const auto d = static_cast<Eigen::Index>(lattice.dimension());
  if (static_cast<Eigen::Index>(p.dimension()) != d) {
    throw DomainError("lattice point has the wrong number of coefficients");
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i) x += p.coeffs[i] * lattice.basis().row(i).transpose();
  return x;
}

double squared_distance(const Lattice& lattice, const LatticePoint& p, const LatticePoint& q) {
  if (p.dimension() != lattice.dimension() || q.dimension() != lattice.dimension()) {
    throw DomainError("lattice point has the wrong number of coefficients");
  }
  return quadratic_form(lattice.gram(), (p - q).coeffs);
}

double min_vector_length(const Lattice& lattice, int coeff_bound) {
  if (coeff_bound < 1) throw DomainError("coefficient bound must be at least 1");
  double best = std::numeric_limits<double>::infinity();
  for_each_nonzero(lattice.dimension(), coeff_bound, [&](const std::vector<int>& v) {
    best = std::min(best, quadratic_form(lattice.gram(), v));
  });
  return std::sqrt(best);
}

int box_side_for(std::size_t dimension, int n) {
  if (n < 1) throw DomainError("sphere count must be at least 1");
  const int d = static_cast<int>(dimension);
  return (n + d - 1) / d;
}

std::vector<LatticePoint> coefficient_box(std::size_t dimension, int k, std::uint64_t cap) {
  if (k < 0) throw DomainError("box side must be nonnegative");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    count *= static_cast<std::uint64_t>(k) + 1;
    if (count > cap) {
      // Finish the product without overflow for the message.
      long double full = std::pow(static_cast<long double>(k) + 1, dimension);
      throw BoxTooLarge(full > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(full), cap);
    }
  }
  std::vector<LatticePoint> box;
  box.reserve(count);
  // Odometer with the last coordinate fastest yields lexicographic order.
  std::vector<int> c(dimension, 0);
  while (true) {
    box.emplace_back(c);
    std::size_t i = dimension;
    while (i > 0 && c[i - 1] == k) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  return box;
}

std::vector<LatticePoint> candidate_box(const Lattice& lattice, int n, std::uint64_t cap) {
  return coefficient_box(lattice.dimension(), box_side_for(lattice.dimension(), n), cap);
}

}  // namespace latcontact
