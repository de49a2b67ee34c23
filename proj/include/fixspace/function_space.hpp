#ifndef FIXSPACE_FUNCTION_SPACE_HPP
#define FIXSPACE_FUNCTION_SPACE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fixspace/action.hpp"
#include "fixspace/exact.hpp"

namespace fixspace {

/// An element of L(X): one exact scalar per point.
class FunctionOnX {
 public:
  FunctionOnX() = default;
  /// The zero function on `degree` points.
  explicit FunctionOnX(std::size_t degree) : values_(degree) {}
  explicit FunctionOnX(std::vector<GaussianRational> values) : values_(std::move(values)) {}

  static FunctionOnX constant(std::size_t degree, const GaussianRational& value);
  static FunctionOnX delta(std::size_t degree, Point x);
  static FunctionOnX indicator(std::size_t degree, std::span<const Point> cell);

  std::size_t degree() const { return values_.size(); }
  const std::vector<GaussianRational>& values() const { return values_; }
  const GaussianRational& operator[](Point x) const { return values_[x]; }
  GaussianRational& operator[](Point x) { return values_[x]; }
  bool is_zero() const;

  FunctionOnX& operator+=(const FunctionOnX& rhs);
  FunctionOnX& operator-=(const FunctionOnX& rhs);
  FunctionOnX& operator*=(const GaussianRational& scalar);

  friend FunctionOnX operator+(FunctionOnX a, const FunctionOnX& b) { return a += b; }
  friend FunctionOnX operator-(FunctionOnX a, const FunctionOnX& b) { return a -= b; }
  friend FunctionOnX operator*(const GaussianRational& s, FunctionOnX f) { return f *= s; }
  friend bool operator==(const FunctionOnX& a, const FunctionOnX& b) { return a.values_ == b.values_; }

 private:
  std::vector<GaussianRational> values_;
};

/// Witness that a function is constant on every orbit.
struct InvariantCertificate {
  FunctionOnX function;
  Partition partition;
  std::vector<GaussianRational> orbit_values;  // one per cell, in cell order
};

/// (a * f)(x) = f(a^-1 . x). Throws Error{"DegreeMismatch"}.
FunctionOnX act_on_function(const GroupAction& act, Element a, const FunctionOnX& f);

/// Certificate iff f is constant on every orbit; decided by an orbit scan.
std::optional<InvariantCertificate> is_invariant(const GroupAction& act, const FunctionOnX& f);
/// Same test for the subgroup `h` under the inherited action.
std::optional<InvariantCertificate> is_invariant(const GroupAction& act, const Subgroup& h, const FunctionOnX& f);

/// One orbit indicator per cell of orbits(act), in cell order.
std::vector<FunctionOnX> indicator_basis(const GroupAction& act);

/// <f, g> = (1/n) sum f(x) conj(g(x)). Throws DegreeMismatch or EmptyDomain.
GaussianRational inner_product(const FunctionOnX& f, const FunctionOnX& g);
/// <f, f> as a rational.
Rational norm_sq(const FunctionOnX& f);

struct UnitarityCheck {
  GaussianRational acted;     // <a*f, a*g>
  GaussianRational original;  // <f, g>
};

/// Throws Error{"IdentityViolated"} if the two inner products differ.
UnitarityCheck unitarity_check(const GroupAction& act, Element a, const FunctionOnX& f, const FunctionOnX& g);

/// Replaces f by its orbit averages: the orthogonal projection onto L^G(X).
FunctionOnX fourier_projection(const GroupAction& act, const FunctionOnX& f);

/// Coefficient of f against sqrt(|X|/|C|) delta_C, reported without the
/// square root: the raw orbit sum and the squared modulus
/// |sum_{x in C} f(x)|^2 / (|X| |C|).
struct FourierCoefficient {
  std::vector<Point> cell;
  GaussianRational raw_sum;
  Rational coefficient_norm_sq;
};

std::vector<FourierCoefficient> fourier_coefficients(const GroupAction& act, const FunctionOnX& f);

struct BesselCheck {
  Rational orbit_side;  // sum_i (1/|C_i|) |sum_{x in C_i} f(x)|^2
  Rational total_side;  // sum_x |f(x)|^2
  bool strict() const { return orbit_side < total_side; }
};

/// Both sides of Bessel's inequality. Throws Error{"IdentityViolated"} if the
/// inequality fails or equality disagrees with invariance of f.
BesselCheck bessel_check(const GroupAction& act, const FunctionOnX& f);

/// delta_x for the first point x on a non-singleton orbit, for which
/// ||f_hat|| < ||f||. Throws Error{"ActionIsTrivial"}.
FunctionOnX strict_bessel_witness(const GroupAction& act);

/// sum_x f(x).
GaussianRational sigma(const FunctionOnX& f);

/// The three orthogonal splittings of f:
///   f = invariant_part + perp_part           (L^G(X) and its complement)
///   f = mean_part + kernel_part              (span f_1 and ker sigma)
///   invariant_part = mean_part + invariant_kernel_part
struct Decomposition {
  FunctionOnX invariant_part;
  FunctionOnX perp_part;
  FunctionOnX mean_part;
  FunctionOnX kernel_part;
  FunctionOnX invariant_kernel_part;
};

/// Throws Error{"IdentityViolated"} if any splitting fails its orthogonality
/// or kernel condition.
Decomposition decompose(const GroupAction& act, const FunctionOnX& f);

/// delta_x - (1/|C(x)|) delta_{C(x)} for every point x; spans L^G(X)^perp.
std::vector<FunctionOnX> perp_spanning_set(const GroupAction& act);
/// delta_x - delta_0 for x = 1..n-1; spans ker sigma.
std::vector<FunctionOnX> sigma_kernel_spanning_set(std::size_t degree);
/// delta_{C_i} - (|C_i|/|C_1|) delta_{C_1} for i >= 2; spans the kernel of
/// sigma restricted to L^G(X).
std::vector<FunctionOnX> invariant_kernel_spanning_set(const GroupAction& act);

/// Dimension of the span, by exact Gaussian elimination.
std::size_t rank(std::span<const FunctionOnX> functions);

struct PerpSubsetCheck {
  bool is_subset = false;
  bool equality = false;
  std::size_t perp_dimension = 0;
  std::size_t kernel_dimension = 0;
};

/// Checks that L^G(X)^perp lies in ker sigma and whether the two coincide.
PerpSubsetCheck perp_subset_check(const GroupAction& act);

/// f o phi^-1, moving f along an equivariant bijection phi: X -> Y.
FunctionOnX transport(const FunctionOnX& f, const Permutation& phi);

}  // namespace fixspace

#endif  // FIXSPACE_FUNCTION_SPACE_HPP
