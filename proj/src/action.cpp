#include "fixspace/action.hpp"

#include <algorithm>
#include <map>

#include "fixspace/error.hpp"

namespace fixspace {

namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_subgroup_of(const GroupAction& act, const Subgroup& h) {
  if (!h.parent().same_as(act.group()))
    throw Error("ParentMismatch", "subgroup does not belong to the acting group");
}

Partition partition_from_orbits(const GroupAction& act, std::span<const Element> elements) {
  const std::size_t n = act.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> cells;
  for (Point x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Point> cell;
    for (Element a : elements) {
      const Point y = act.act(a, x);
      if (!seen[y]) {
        seen[y] = true;
        cell.push_back(y);
      }
    }
    cells.push_back(std::move(cell));
  }
  return Partition::from_cells(n, std::move(cells));
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> v(g.order());
  for (Element a = 0; a < g.order(); ++a) v[a] = a;
  return v;
}

std::size_t stabilizer_order(const GroupAction& act, Point x) {
  std::size_t count = 0;
  for (Element a = 0; a < act.group().order(); ++a)
    if (act.act(a, x) == x) ++count;
  return count;
}

// Equivariant bijection between the orbit of x0 and the orbit of y0 sending
// x0 to y0, or nullopt when stabilizers differ.
std::optional<std::vector<std::pair<Point, Point>>> match_orbits(const GroupAction& lhs, Point x0,
                                                                  const GroupAction& rhs, Point y0) {
  std::map<Point, Point> phi;
  std::map<Point, Point> back;
  for (Element a = 0; a < lhs.group().order(); ++a) {
    const Point x = lhs.act(a, x0);
    const Point y = rhs.act(a, y0);
    auto [it, fresh] = phi.emplace(x, y);
    if (!fresh && it->second != y) return std::nullopt;
    auto [jt, fresh_back] = back.emplace(y, x);
    if (!fresh_back && jt->second != x) return std::nullopt;
  }
  return std::vector<std::pair<Point, Point>>(phi.begin(), phi.end());
}

}  // namespace

Partition Partition::from_cells(std::size_t degree, std::vector<std::vector<Point>> cells) {
  Partition p;
  p.cell_of_.assign(degree, degree);
  for (auto& cell : cells) {
    if (cell.empty()) throw Error("InvalidPartition", "empty cell");
    std::sort(cell.begin(), cell.end());
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (Point x : cells[i]) {
      if (x >= degree) throw Error("InvalidPartition", "point out of range", {{"point", as_i64(x)}});
      if (p.cell_of_[x] != degree) throw Error("InvalidPartition", "point in two cells", {{"point", as_i64(x)}});
      p.cell_of_[x] = i;
    }
  for (Point x = 0; x < degree; ++x)
    if (p.cell_of_[x] == degree) throw Error("InvalidPartition", "point not covered", {{"point", as_i64(x)}});
  p.cells_ = std::move(cells);
  return p;
}

GroupAction GroupAction::validate(FiniteGroup group, std::vector<std::vector<Point>> table) {
  const std::size_t m = group.order();
  if (table.size() != m)
    throw Error("ShapeMismatch", "action table needs one row per group element", {{"rows", as_i64(table.size())}});
  const std::size_t n = table.front().size();
  if (n == 0) throw Error("EmptyDomain", "the point set must be nonempty");
  std::vector<Point> flat;
  flat.reserve(m * n);
  for (Element a = 0; a < m; ++a) {
    if (table[a].size() != n)
      throw Error("ShapeMismatch", "ragged action table", {{"row", as_i64(a)}, {"length", as_i64(table[a].size())}});
    for (Point x = 0; x < n; ++x) {
      if (table[a][x] >= n)
        throw Error("PointOutOfRange", "action image out of range",
                    {{"element", as_i64(a)}, {"point", as_i64(x)}, {"image", as_i64(table[a][x])}});
      flat.push_back(table[a][x]);
    }
  }
  GroupAction act(std::move(group), n, std::move(flat));
  const FiniteGroup& g = act.group();

  for (Point x = 0; x < n; ++x)
    if (act.act(g.identity(), x) != x)
      throw Error("IdentityAxiomViolated", "identity moves a point", {{"point", as_i64(x)}});
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) {
      const Element ab = g.mul(a, b);
      for (Point x = 0; x < n; ++x)
        if (act.act(ab, x) != act.act(a, act.act(b, x)))
          throw Error("CompatibilityViolated", "(ab).x != a.(b.x)",
                      {{"a", as_i64(a)}, {"b", as_i64(b)}, {"point", as_i64(x)}});
    }
  for (Element a = 0; a < m; ++a) {
    const auto row = act.row(a);
    if (!is_permutation(row)) throw Error("RowNotPermutation", "element does not permute points", {{"element", as_i64(a)}});
  }
  return act;
}

std::vector<std::vector<Point>> GroupAction::table() const {
  std::vector<std::vector<Point>> t(group_.order());
  for (Element a = 0; a < group_.order(); ++a) {
    const auto r = row(a);
    t[a].assign(r.begin(), r.end());
  }
  return t;
}

GroupAction evaluation_action(const FiniteGroup& g) {
  if (!g.is_permutation_group())
    throw Error("NotAPermutationGroup", "evaluation needs a group given by permutations");
  const std::size_t n = g.degree();
  if (n == 0) throw Error("EmptyDomain", "the point set must be nonempty");
  std::vector<Point> flat;
  flat.reserve(g.order() * n);
  for (Element a = 0; a < g.order(); ++a) {
    const auto& p = g.permutation(a);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return GroupAction(g, n, std::move(flat));
}

GroupAction conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<Point>> t(g.order(), std::vector<Point>(g.order()));
  for (Element a = 0; a < g.order(); ++a)
    for (Element x = 0; x < g.order(); ++x) t[a][x] = g.mul(g.mul(a, x), g.inverse(a));
  return GroupAction::validate(g, std::move(t));
}

std::vector<std::vector<Element>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) throw Error("ParentMismatch", "subgroup belongs to a different group");
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Element>> cosets;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> c;
    for (Element s : h.members()) c.push_back(g.mul(x, s));
    std::sort(c.begin(), c.end());
    for (Element y : c) seen[y] = true;
    cosets.push_back(std::move(c));
  }
  return cosets;
}

GroupAction coset_action(const FiniteGroup& g, const Subgroup& h) {
  const auto cosets = left_cosets(g, h);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (Element y : cosets[i]) coset_of[y] = i;
  std::vector<std::vector<Point>> t(g.order(), std::vector<Point>(cosets.size()));
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < cosets.size(); ++i) t[a][i] = coset_of[g.mul(a, cosets[i].front())];
  return GroupAction::validate(g, std::move(t));
}

GroupAction relabel_points(const GroupAction& act, const Permutation& relabel) {
  if (relabel.size() != act.degree())
    throw Error("ShapeMismatch", "relabeling length differs from degree", {{"length", as_i64(relabel.size())}});
  check_permutation(relabel);
  std::vector<std::vector<Point>> t(act.group().order(), std::vector<Point>(act.degree()));
  for (Element a = 0; a < act.group().order(); ++a)
    for (Point x = 0; x < act.degree(); ++x) t[a][relabel[x]] = relabel[act.act(a, x)];
  return GroupAction::validate(act.group(), std::move(t));
}

std::vector<Point> orbit(const GroupAction& act, Point x) { return orbit(act, Subgroup::whole(act.group()), x); }

std::vector<Point> orbit(const GroupAction& act, const Subgroup& h, Point x) {
  if (x >= act.degree()) throw Error("PointOutOfRange", "no such point", {{"point", as_i64(x)}});
  require_subgroup_of(act, h);
  std::vector<Point> out;
  for (Element a : h.members()) out.push_back(act.act(a, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition orbits(const GroupAction& act) {
  const auto all = all_elements(act.group());
  return partition_from_orbits(act, all);
}

Partition orbits(const GroupAction& act, const Subgroup& h) {
  require_subgroup_of(act, h);
  return partition_from_orbits(act, h.members());
}

std::vector<Point> fix(const GroupAction& act, Element a) {
  if (a >= act.group().order()) throw Error("InvalidElement", "no such element", {{"element", as_i64(a)}});
  std::vector<Point> out;
  for (Point x = 0; x < act.degree(); ++x)
    if (act.act(a, x) == x) out.push_back(x);
  return out;
}

Subgroup stabilizer(const GroupAction& act, Point x) {
  if (x >= act.degree()) throw Error("PointOutOfRange", "no such point", {{"point", as_i64(x)}});
  std::vector<Element> members;
  for (Element a = 0; a < act.group().order(); ++a)
    if (act.act(a, x) == x) members.push_back(a);
  return Subgroup::from_members(act.group(), std::move(members));
}

std::optional<std::pair<Element, Point>> non_free_witness(const GroupAction& act) {
  for (Element a = 0; a < act.group().order(); ++a) {
    if (a == act.group().identity()) continue;
    for (Point x = 0; x < act.degree(); ++x)
      if (act.act(a, x) == x) return std::pair{a, x};
  }
  return std::nullopt;
}

bool is_free(const GroupAction& act) { return !non_free_witness(act).has_value(); }

bool is_transitive(const GroupAction& act) {
  std::vector<bool> reached(act.degree(), false);
  for (Element a = 0; a < act.group().order(); ++a) reached[act.act(a, 0)] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

bool is_trivial(const GroupAction& act) {
  for (Element a = 0; a < act.group().order(); ++a)
    for (Point x = 0; x < act.degree(); ++x)
      if (act.act(a, x) != x) return false;
  return true;
}

std::size_t burnside_sum(const GroupAction& act, const Subgroup& h) {
  require_subgroup_of(act, h);
  std::size_t total = 0;
  for (Element a : h.members())
    for (Point x = 0; x < act.degree(); ++x)
      if (act.act(a, x) == x) ++total;
  return total;
}

Rational burnside_dimension(const GroupAction& act, const Subgroup& h) {
  const Rational dim = Rational(static_cast<std::int64_t>(burnside_sum(act, h))) /
                       Rational(static_cast<std::int64_t>(h.order()));
  if (!dim.is_integer())
    throw Error("NotAnInteger", "fixed-point average " + dim.to_string() + " is not an integer");
  const std::size_t cells = orbits(act, h).size();
  if (dim != Rational(static_cast<std::int64_t>(cells)))
    throw Error("NotAnInteger", "fixed-point average disagrees with the orbit count",
                {{"orbits", as_i64(cells)}, {"average", dim.to_int64()}});
  return dim;
}

Rational burnside_dimension(const GroupAction& act) { return burnside_dimension(act, Subgroup::whole(act.group())); }

DimensionDifference dimension_difference(const GroupAction& act, const Subgroup& h) {
  const auto& g = act.group();
  const Rational g_order(static_cast<std::int64_t>(g.order()));
  const Rational h_order(static_cast<std::int64_t>(h.order()));
  DimensionDifference d;
  d.dimension_side = g_order * burnside_dimension(act) - h_order * burnside_dimension(act, h);
  std::int64_t outside = 0;
  for (Element a = 0; a < g.order(); ++a)
    if (!h.contains(a)) outside += static_cast<std::int64_t>(fix(act, a).size());
  d.fixed_point_side = Rational(outside);
  if (d.dimension_side != d.fixed_point_side)
    throw Error("IdentityViolated", "dimension difference " + d.dimension_side.to_string() +
                                        " != fixed points outside H " + d.fixed_point_side.to_string());
  return d;
}

FreeRatio free_ratio_check(const GroupAction& act, const Subgroup& h) {
  if (auto w = non_free_witness(act))
    throw Error("NotFree", "a non-identity element fixes a point",
                {{"element", as_i64(w->first)}, {"point", as_i64(w->second)}});
  FreeRatio r;
  r.ratio = burnside_dimension(act, h) / burnside_dimension(act);
  r.index = index(act.group(), h);
  if (r.ratio != Rational(static_cast<std::int64_t>(r.index)))
    throw Error("IdentityViolated", "dimension ratio " + r.ratio.to_string() + " differs from the index",
                {{"index", as_i64(r.index)}});
  return r;
}

bool is_equivariant(const GroupAction& lhs, const GroupAction& rhs, const Permutation& phi) {
  if (phi.size() != lhs.degree() || lhs.degree() != rhs.degree() || !is_permutation(phi)) return false;
  for (Element a = 0; a < lhs.group().order(); ++a)
    for (Point x = 0; x < lhs.degree(); ++x)
      if (phi[lhs.act(a, x)] != rhs.act(a, phi[x])) return false;
  return true;
}

std::optional<Permutation> are_equivalent(const GroupAction& lhs, const GroupAction& rhs) {
  if (!lhs.group().same_as(rhs.group()))
    throw Error("GroupMismatch", "equivalence is only defined for actions of the same group");
  if (lhs.degree() != rhs.degree()) return std::nullopt;

  struct OrbitInfo {
    Point base;
    std::size_t size;
    std::vector<std::size_t> stabilizer_orders;
  };
  auto summarize = [](const GroupAction& act) {
    std::vector<OrbitInfo> out;
    const Partition cells_of = orbits(act);
    for (const auto& cell : cells_of.cells()) {
      OrbitInfo info{cell.front(), cell.size(), {}};
      for (Point x : cell) info.stabilizer_orders.push_back(stabilizer_order(act, x));
      std::sort(info.stabilizer_orders.begin(), info.stabilizer_orders.end());
      out.push_back(std::move(info));
    }
    return out;
  };
  const auto left = summarize(lhs);
  const auto right = summarize(rhs);
  if (left.size() != right.size()) return std::nullopt;

  Permutation phi(lhs.degree(), lhs.degree());
  std::vector<bool> used(right.size(), false);
  for (const auto& l : left) {
    bool matched = false;
    for (std::size_t j = 0; j < right.size() && !matched; ++j) {
      const auto& r = right[j];
      if (used[j] || r.size != l.size || r.stabilizer_orders != l.stabilizer_orders) continue;
      for (Point y : orbit(rhs, r.base)) {
        auto pairs = match_orbits(lhs, l.base, rhs, y);
        if (!pairs) continue;
        for (auto [x, image] : *pairs) phi[x] = image;
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  if (!is_equivariant(lhs, rhs, phi))
    throw Error("IdentityViolated", "assembled bijection is not equivariant");
  return phi;
}

}  // namespace fixspace
