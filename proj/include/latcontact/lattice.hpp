#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace latcontact {

// Relative half-width of the contact band around (2r)^2.
inline constexpr double kContactTolerance = 1e-9;
// Coefficient range used for the packing-validity check and kissing vectors.
inline constexpr int kValidityCoeffBound = 3;
inline constexpr std::uint64_t kDefaultBoxCap = 20000;

// Integer coefficients over a lattice basis. Ordered lexicographically.
struct LatticePoint {
  std::vector<int> coeffs;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> c) : coeffs(std::move(c)) {}
  LatticePoint(std::initializer_list<int> c) : coeffs(c) {}

  std::size_t dimension() const { return coeffs.size(); }
  int operator[](std::size_t i) const { return coeffs[i]; }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

enum class PairKind { kOverlap, kContact, kSeparated };

// Classifies squared center distances against the band
// [(2r)^2 (1 - eps), (2r)^2 (1 + eps)].
class ContactBand {
 public:
  ContactBand(double radius, double eps = kContactTolerance);

  PairKind classify(double distance_sq) const {
    if (distance_sq < lo_) return PairKind::kOverlap;
    if (distance_sq <= hi_) return PairKind::kContact;
    return PairKind::kSeparated;
  }
  bool touching(double distance_sq) const { return classify(distance_sq) == PairKind::kContact; }
  double lower() const { return lo_; }
  double upper() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

// A free Z-module of rank d carrying congruent spheres of radius r at every
// point. Immutable; construct through make_lattice() or preset_lattice().
class Lattice {
 public:
  std::size_t dimension() const { return static_cast<std::size_t>(basis_.rows()); }
  // Row i is the basis vector omega_i.
  const Eigen::MatrixXd& basis() const { return basis_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  double radius() const { return radius_; }
  double diameter() const { return 2.0 * radius_; }
  const std::string& name() const { return name_; }
  ContactBand band() const { return ContactBand(radius_); }

  // Shortest nonzero vector found by the validity enumeration.
  double min_vector_length() const { return min_vector_length_; }

  // Largest |lambda_i| any vector in the contact band can have. When this
  // exceeds kValidityCoeffBound the bounded enumerations are not exhaustive
  // and callers fall back to all-pairs distance tests.
  int contact_coeff_bound() const { return contact_coeff_bound_; }
  bool skewed() const { return contact_coeff_bound_ > kValidityCoeffBound; }

 private:
  friend Lattice make_lattice(const std::vector<std::vector<double>>& basis, double radius,
                              std::string name);

  Lattice() = default;

  Eigen::MatrixXd basis_;
  Eigen::MatrixXd gram_;
  double radius_ = 0.0;
  double min_vector_length_ = 0.0;
  int contact_coeff_bound_ = 0;
  std::string name_;
};

// Throws DegenerateBasis when the Gram matrix is not positive definite and
// OverlappingLattice when some nonzero vector with |lambda_i| <= 3 is shorter
// than 2r (within the contact tolerance).
Lattice make_lattice(const std::vector<std::vector<double>>& basis, double radius,
                     std::string name = "custom");

// sc, fcc or bcc scaled so the minimal vector length is exactly 2r.
Lattice preset_lattice(const std::string& name, double radius);

Eigen::VectorXd embed(const Lattice& lattice, const LatticePoint& p);

// (p - q)^T G (p - q).
double squared_distance(const Lattice& lattice, const LatticePoint& p, const LatticePoint& q);

double min_vector_length(const Lattice& lattice, int coeff_bound);

// All points of {0..k}^d, lexicographically sorted. Throws BoxTooLarge when
// (k+1)^d exceeds the cap.
std::vector<LatticePoint> coefficient_box(std::size_t dimension, int k,
                                          std::uint64_t cap = kDefaultBoxCap);

// The search region for n spheres: k = ceil(n/d).
std::vector<LatticePoint> candidate_box(const Lattice& lattice, int n,
                                        std::uint64_t cap = kDefaultBoxCap);

int box_side_for(std::size_t dimension, int n);

}  // namespace latcontact
