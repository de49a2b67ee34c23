#include "fixspace/partition_group.hpp"

#include "fixspace/error.hpp"

namespace fixspace {

namespace {

Permutation transposition(std::size_t degree, Point x, Point y) {
  Permutation p = identity_permutation(degree);
  std::swap(p[x], p[y]);
  return p;
}

}  // namespace

std::vector<Permutation> partition_generators(const PartitionSpec& p, bool minimal_generators) {
  std::vector<Permutation> gens;
  for (const auto& cell : p.cells()) {
    if (minimal_generators) {
      for (std::size_t i = 0; i + 1 < cell.size(); ++i) gens.push_back(transposition(p.degree(), cell[i], cell[i + 1]));
    } else {
      for (std::size_t i = 0; i < cell.size(); ++i)
        for (std::size_t j = i + 1; j < cell.size(); ++j) gens.push_back(transposition(p.degree(), cell[i], cell[j]));
    }
  }
  return gens;
}

PartitionGroup group_from_partition(const PartitionSpec& p, std::size_t cap, bool minimal_generators) {
  // |G_P| = prod |cell|!, checked before any closure work.
  std::size_t order = 1;
  for (const auto& cell : p.cells())
    for (std::size_t k = 2; k <= cell.size(); ++k) {
      if (order > cap) break;
      order *= k;
    }
  if (order > cap)
    throw Error("SizeLimitExceeded", "product of cell factorials exceeds the cap",
                {{"cap", static_cast<std::int64_t>(cap)}});

  auto gens = partition_generators(p, minimal_generators);
  FiniteGroup g = FiniteGroup::from_generators(p.degree(), gens, cap);
  GroupAction act = evaluation_action(g);
  if (!(orbits(act) == p)) throw Error("IdentityViolated", "orbits of the constructed group differ from the cells");
  return {std::move(g), std::move(act), std::move(gens)};
}

bool sp_membership(const PartitionSpec& p, const Permutation& sigma) {
  if (sigma.size() != p.degree())
    throw Error("NotAPermutation", "length differs from degree", {{"length", static_cast<std::int64_t>(sigma.size())}});
  check_permutation(sigma);
  for (Point x = 0; x < p.degree(); ++x)
    if (p.cell_of(sigma[x]) != p.cell_of(x)) return false;
  return true;
}

}  // namespace fixspace
