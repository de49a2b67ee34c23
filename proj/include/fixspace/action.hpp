#ifndef FIXSPACE_ACTION_HPP
#define FIXSPACE_ACTION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fixspace/exact.hpp"
#include "fixspace/group.hpp"

namespace fixspace {

/// Points of a G-set are positions 0..degree-1.
using Point = std::size_t;

/// Disjoint nonempty cells covering 0..degree-1, kept in canonical form:
/// each cell sorted, cells ordered by smallest member.
class Partition {
 public:
  /// Throws Error{"InvalidPartition"} for empty cells, out-of-range or
  /// repeated points, or points left uncovered.
  static Partition from_cells(std::size_t degree, std::vector<std::vector<Point>> cells);

  std::size_t degree() const { return cell_of_.size(); }
  std::size_t size() const { return cells_.size(); }
  const std::vector<std::vector<Point>>& cells() const { return cells_; }
  const std::vector<Point>& cell(std::size_t i) const { return cells_[i]; }
  std::size_t cell_of(Point x) const { return cell_of_[x]; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.cells_ == b.cells_; }

 private:
  Partition() = default;

  std::vector<std::vector<Point>> cells_;
  std::vector<std::size_t> cell_of_;
};

/// A finite group acting on 0..degree-1 through a materialized table.
class GroupAction {
 public:
  /// Verifies shape, the identity axiom and compatibility (ab)x = a(bx).
  /// Errors: ShapeMismatch, EmptyDomain, PointOutOfRange,
  /// IdentityAxiomViolated, CompatibilityViolated.
  static GroupAction validate(FiniteGroup group, std::vector<std::vector<Point>> table);

  const FiniteGroup& group() const { return group_; }
  std::size_t degree() const { return degree_; }
  Point act(Element a, Point x) const { return (*table_)[a * degree_ + x]; }
  std::span<const Point> row(Element a) const { return {table_->data() + a * degree_, degree_}; }
  std::vector<std::vector<Point>> table() const;

 private:
  friend GroupAction evaluation_action(const FiniteGroup& g);

  GroupAction(FiniteGroup group, std::size_t degree, std::vector<Point> flat)
      : group_(std::move(group)), degree_(degree), table_(std::make_shared<const std::vector<Point>>(std::move(flat))) {}

  FiniteGroup group_;
  std::size_t degree_ = 0;
  std::shared_ptr<const std::vector<Point>> table_;
};

inline GroupAction validate_action(FiniteGroup group, std::vector<std::vector<Point>> table) {
  return GroupAction::validate(std::move(group), std::move(table));
}

/// sigma . x = sigma(x) for a permutation group. Throws
/// Error{"NotAPermutationGroup"} for table-form groups.
GroupAction evaluation_action(const FiniteGroup& g);

/// a . x = a x a^-1 on the group's own elements.
GroupAction conjugation_action(const FiniteGroup& g);

/// Left cosets of `h` in the order their smallest element appears.
std::vector<std::vector<Element>> left_cosets(const FiniteGroup& g, const Subgroup& h);

/// a . (xH) = (ax)H on left cosets, numbered as in left_cosets().
GroupAction coset_action(const FiniteGroup& g, const Subgroup& h);

/// Same action with points renamed x -> relabel[x].
GroupAction relabel_points(const GroupAction& act, const Permutation& relabel);

std::vector<Point> orbit(const GroupAction& act, Point x);
std::vector<Point> orbit(const GroupAction& act, const Subgroup& h, Point x);
Partition orbits(const GroupAction& act);
/// Orbits of the subgroup `h` under the inherited action.
Partition orbits(const GroupAction& act, const Subgroup& h);

std::vector<Point> fix(const GroupAction& act, Element a);
Subgroup stabilizer(const GroupAction& act, Point x);

bool is_free(const GroupAction& act);
bool is_transitive(const GroupAction& act);
bool is_trivial(const GroupAction& act);
/// A non-identity element together with a point it fixes, if any.
std::optional<std::pair<Element, Point>> non_free_witness(const GroupAction& act);

/// Sum of |Fix a| over a in h.
std::size_t burnside_sum(const GroupAction& act, const Subgroup& h);

/// dim L^H(X) = (1/|H|) sum |Fix a|. The result is cross-checked against the
/// H-orbit count; Error{"NotAnInteger"} signals a broken table.
Rational burnside_dimension(const GroupAction& act, const Subgroup& h);
Rational burnside_dimension(const GroupAction& act);

struct DimensionDifference {
  Rational dimension_side;   // |G| dim L^G(X) - |H| dim L^H(X)
  Rational fixed_point_side;  // sum over a in G \ H of |Fix a|
};

/// Both sides of the dimension-difference identity, computed independently.
/// Throws Error{"IdentityViolated"} if they disagree.
DimensionDifference dimension_difference(const GroupAction& act, const Subgroup& h);

struct FreeRatio {
  Rational ratio;  // dim L^H / dim L^G
  std::size_t index = 0;
};

/// For a free action, dim L^H / dim L^G together with [G : H].
/// Throws Error{"NotFree"} naming a fixing element and point.
FreeRatio free_ratio_check(const GroupAction& act, const Subgroup& h);

/// An equivariant bijection phi with phi(a.x) = a.phi(x), if one exists.
/// Both actions must use the same group (Error{"GroupMismatch"}); differing
/// degrees simply yield no bijection.
std::optional<Permutation> are_equivalent(const GroupAction& lhs, const GroupAction& rhs);

bool is_equivariant(const GroupAction& lhs, const GroupAction& rhs, const Permutation& phi);

}  // namespace fixspace

#endif  // FIXSPACE_ACTION_HPP
