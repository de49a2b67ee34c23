#ifndef FIXSPACE_PARTITION_GROUP_HPP
#define FIXSPACE_PARTITION_GROUP_HPP

#include <cstddef>
#include <vector>

#include "fixspace/action.hpp"
#include "fixspace/group.hpp"

namespace fixspace {

/// A partition supplied as input; same invariants as an orbit partition.
using PartitionSpec = Partition;

struct PartitionGroup {
  FiniteGroup group;
  GroupAction action;  // evaluation
  std::vector<Permutation> generators;
};

/// Transpositions (x y) for every pair x != y sharing a cell, or only the
/// adjacent pairs of each cell when `minimal_generators` is set. Both
/// generate the product of the symmetric groups on the cells.
std::vector<Permutation> partition_generators(const PartitionSpec& p, bool minimal_generators = false);

/// The group generated by partition_generators(), acting by evaluation, whose
/// orbits are exactly the cells. Throws Error{"SizeLimitExceeded"} when the
/// product of cell-size factorials exceeds `cap`.
PartitionGroup group_from_partition(const PartitionSpec& p, std::size_t cap = kDefaultClosureCap,
                                    bool minimal_generators = false);

/// True iff sigma maps every cell onto itself. Throws Error{"NotAPermutation"}.
bool sp_membership(const PartitionSpec& p, const Permutation& sigma);

}  // namespace fixspace

#endif  // FIXSPACE_PARTITION_GROUP_HPP
