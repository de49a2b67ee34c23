#ifndef FIXSPACE_GROUP_HPP
#define FIXSPACE_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fixspace {

/// Group elements are positions 0..order-1 in a materialized group.
using Element = std::size_t;

/// A permutation of 0..n-1 in one-line notation: p[x] is the image of x.
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultClosureCap = 20160;

/// Throws Error{"NotAPermutation"} if `p` is not a bijection on 0..p.size()-1.
void check_permutation(std::span<const std::size_t> p);
bool is_permutation(std::span<const std::size_t> p);
/// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
Permutation identity_permutation(std::size_t degree);
/// Disjoint-cycle text, e.g. "(0 1 2)(3 4)"; the identity is "()".
std::string cycle_notation(const Permutation& p);

/// Multiplication table as supplied by a caller, before validation.
struct GroupTable {
  std::vector<std::vector<std::size_t>> mul;
  std::optional<Element> identity;
  std::optional<std::vector<Element>> inverse;
  std::vector<std::string> labels;
};

/// A finite group with every product available by index.
///
/// Instances are immutable and share their storage, so copies are cheap.
/// Groups built from permutations remember the permutation of each
/// element; the abstract group and its action on points stay separate.
class FiniteGroup {
 public:
  /// Checks the group axioms on a table, deriving identity and inverses
  /// when absent. Errors name the first offending entry:
  /// ShapeMismatch, EntryOutOfRange, NotLatinSquare, NoIdentity, NoInverse,
  /// NotAssociative.
  static FiniteGroup validate(const GroupTable& table);

  /// Breadth-first closure of `generators` under composition. Element 0 is
  /// the identity. Throws NotAPermutation or SizeLimitExceeded.
  static FiniteGroup from_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                     std::size_t cap = kDefaultClosureCap);

  std::size_t order() const;
  Element identity() const;
  Element inverse(Element a) const;
  Element mul(Element a, Element b) const;
  bool is_abelian() const;

  bool has_labels() const;
  /// Display label; the element index when no labels were supplied.
  std::string label(Element a) const;

  bool is_permutation_group() const;
  /// Number of points permuted; 0 for table-form groups.
  std::size_t degree() const;
  const Permutation& permutation(Element a) const;
  const std::vector<Permutation>& generators() const;
  std::optional<Element> find(const Permutation& p) const;

  /// Full multiplication table, row-major.
  std::vector<std::vector<Element>> table() const;

  /// True when both handles refer to the same storage or to identical
  /// multiplication tables.
  bool same_as(const FiniteGroup& other) const;

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Direct product with elements (a, b) stored at index a * |rhs| + b.
FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs);

class Subgroup {
 public:
  /// Throws Error{"NotASubgroup"} when `members` is not closed or lacks the
  /// identity, Error{"InvalidElement"} on out-of-range indices.
  static Subgroup from_members(const FiniteGroup& parent, std::vector<Element> members);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return parent_; }
  /// Sorted ascending.
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element a) const { return a < mask_.size() && mask_[a]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  Subgroup(FiniteGroup parent, std::vector<Element> members);

  FiniteGroup parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

/// Smallest subgroup containing `seeds`.
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> seeds);

/// [G : H]. Throws Error{"ParentMismatch"} if `h` is not a subgroup of `g`.
std::size_t index(const FiniteGroup& g, const Subgroup& h);

/// True iff `sigma` (a bijection on element indices) preserves products.
bool automorphism_check(const FiniteGroup& g, const Permutation& sigma);

/// Order of `a` in `g`.
std::size_t element_order(const FiniteGroup& g, Element a);

/// A small generating set, chosen greedily in index order.
std::vector<Element> generating_set(const FiniteGroup& g);

/// Every automorphism of `g`, as permutations of element indices, sorted
/// lexicographically. Candidates come from assigning images to a generating
/// set; each survivor is confirmed with automorphism_check.
std::vector<Permutation> automorphisms(const FiniteGroup& g);

}  // namespace fixspace

#endif  // FIXSPACE_GROUP_HPP
