#ifndef FIXSPACE_RES_IND_HPP
#define FIXSPACE_RES_IND_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fixspace/action.hpp"
#include "fixspace/function_space.hpp"

namespace fixspace {

/// A nonempty union of orbits Y inside the G-set X.
class InvariantSubset {
 public:
  const GroupAction& action() const { return action_; }
  /// Sorted ascending.
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Point x) const { return position_[x].has_value(); }
  /// Position of an ambient point within points(); nullopt outside Y.
  std::optional<std::size_t> position(Point x) const { return position_[x]; }

 private:
  friend InvariantSubset invariant_subset(const GroupAction& act, std::vector<Point> points);

  InvariantSubset(GroupAction action, std::vector<Point> points);

  GroupAction action_;
  std::vector<Point> points_;
  std::vector<std::optional<std::size_t>> position_;
};

/// Validates closure of `points` under the action. Errors: EmptySubset,
/// PointOutOfRange, NotInvariant(element, point, image).
InvariantSubset invariant_subset(const GroupAction& act, std::vector<Point> points);

/// An element of L(Y); values are indexed by position in subset.points().
struct FunctionOnY {
  InvariantSubset subset;
  std::vector<GaussianRational> values;

  /// Value at an ambient point of Y.
  const GaussianRational& at(Point x) const { return values[*subset.position(x)]; }
};

/// Throws Error{"DegreeMismatch"} when the value count differs from |Y|.
FunctionOnY make_function_on(const InvariantSubset& y, std::vector<GaussianRational> values);

/// True iff g is constant on every orbit contained in Y.
bool is_invariant(const FunctionOnY& g);

/// <f, g>_Y = (1/|Y|) sum_{y in Y} f(y) conj(g(y)).
GaussianRational inner_product(const FunctionOnY& f, const FunctionOnY& g);

/// Res f: the values of f at the points of Y.
FunctionOnY restrict(const FunctionOnX& f, const InvariantSubset& y);

/// g on Y, zero elsewhere.
FunctionOnX extend_by_zero(const FunctionOnY& g);

/// Ind g(x) = (|X| / (|G| |Y|)) sum_{b in G} g~(b^-1 . x), with g~ the
/// extension by zero. Always lands in L^G(X).
FunctionOnX induce(const FunctionOnY& g);

struct ReciprocityReport {
  GaussianRational induced_side;     // <Ind f, g>_X
  GaussianRational restricted_side;  // <f, Res g>_Y
  bool f_invariant = false;
  bool g_invariant = false;

  bool equal() const { return induced_side == restricted_side; }
  bool preconditions_hold() const { return f_invariant && g_invariant; }
};

/// Evaluates both sides of Frobenius reciprocity for f in L(Y), g in L(X).
/// Both sides are always computed; the invariance flags report whether the
/// identity is asserted. Throws Error{"IdentityViolated"} if f and g are
/// invariant yet the sides differ.
ReciprocityReport reciprocity_check(const FunctionOnY& f, const FunctionOnX& g);

}  // namespace fixspace

#endif  // FIXSPACE_RES_IND_HPP
