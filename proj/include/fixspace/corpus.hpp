#ifndef FIXSPACE_CORPUS_HPP
#define FIXSPACE_CORPUS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fixspace/action.hpp"
#include "fixspace/group.hpp"

namespace fixspace {

/// Builds a named permutation group: "Z<n>", "S<n>" (n <= 7), "A<n>",
/// "D<n>" (dihedral of order 2n), "Q8", "Dic3", or a direct product of
/// these joined by 'x' such as "Z2xZ4". Factors act on disjoint points.
/// Throws Error{"UnknownGroupName"}.
FiniteGroup named_group(const std::string& name);

/// One representative of every isomorphism class of groups of order
/// <= max_order (max_order <= 12), with its name.
std::vector<std::pair<std::string, FiniteGroup>> small_groups(std::size_t max_order);

using CorpusParams = std::map<std::string, std::string>;

/// Flags fixed by the construction itself; unset fields are not asserted.
struct CorpusExpectation {
  std::optional<std::size_t> orbit_count;
  std::optional<bool> is_free;
  std::optional<bool> is_transitive;
  std::optional<bool> is_trivial;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  GroupAction action;
  CorpusExpectation expected;
  /// |G| divides |X|; when false the action cannot be free.
  bool order_divides_degree = false;
  /// Parameters after defaults were filled in.
  CorpusParams params;
};

struct CorpusInfo {
  std::string name;
  std::string description;
  CorpusParams defaults;
  /// True for the eight families of non-free actions.
  bool non_free_family = false;
};

const std::vector<CorpusInfo>& corpus_list();

/// Builds a corpus action. Errors: UnknownCorpusName, ParamOutOfRange, and
/// IdentityViolated if a recomputed flag contradicts the expectation.
CorpusEntry build(const std::string& name, const CorpusParams& params = {});

}  // namespace fixspace

#endif  // FIXSPACE_CORPUS_HPP
