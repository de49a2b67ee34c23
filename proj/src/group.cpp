#include "fixspace/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "fixspace/error.hpp"

namespace fixspace {

namespace {

// Groups up to this order keep a full product table; larger permutation
// groups compose permutations on demand.
constexpr std::size_t kTableLimit = 4096;

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t v : p) {
      h ^= v + 0x9e3779b97f4a7c15ULL;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

void check_permutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] >= p.size())
      throw Error("NotAPermutation", "image out of range", {{"position", as_i64(x)}, {"image", as_i64(p[x])}});
    if (seen[p[x]])
      throw Error("NotAPermutation", "repeated image", {{"position", as_i64(x)}, {"image", as_i64(p[x])}});
    seen[p[x]] = true;
  }
}

bool is_permutation(std::span<const std::size_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = x;
  return r;
}

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[x] = true;
      x = p[x];
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct FiniteGroup::Data {
  std::size_t order = 0;
  Element identity = 0;
  std::vector<std::uint32_t> table;  // empty when products are composed on demand
  std::vector<Element> inverse;
  std::vector<std::string> labels;

  std::size_t degree = 0;
  std::vector<Permutation> perms;
  std::vector<Permutation> generators;
  std::unordered_map<Permutation, Element, PermutationHash> lookup;
};

FiniteGroup FiniteGroup::validate(const GroupTable& input) {
  const auto& mul = input.mul;
  const std::size_t m = mul.size();
  if (m == 0) throw Error("ShapeMismatch", "empty multiplication table");
  for (std::size_t a = 0; a < m; ++a) {
    if (mul[a].size() != m)
      throw Error("ShapeMismatch", "row length differs from table size",
                  {{"row", as_i64(a)}, {"length", as_i64(mul[a].size())}});
    for (std::size_t b = 0; b < m; ++b)
      if (mul[a][b] >= m)
        throw Error("EntryOutOfRange", "table entry is not an element",
                    {{"a", as_i64(a)}, {"b", as_i64(b)}, {"value", as_i64(mul[a][b])}});
  }
  if (!input.labels.empty() && input.labels.size() != m)
    throw Error("ShapeMismatch", "label count differs from table size", {{"labels", as_i64(input.labels.size())}});

  for (std::size_t a = 0; a < m; ++a) {
    std::vector<bool> seen(m, false);
    for (std::size_t b = 0; b < m; ++b) {
      if (seen[mul[a][b]])
        throw Error("NotLatinSquare", "repeated entry in row",
                    {{"row", as_i64(a)}, {"column", as_i64(b)}, {"value", as_i64(mul[a][b])}});
      seen[mul[a][b]] = true;
    }
  }
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<bool> seen(m, false);
    for (std::size_t a = 0; a < m; ++a) {
      if (seen[mul[a][b]])
        throw Error("NotLatinSquare", "repeated entry in column",
                    {{"row", as_i64(a)}, {"column", as_i64(b)}, {"value", as_i64(mul[a][b])}});
      seen[mul[a][b]] = true;
    }
  }

  auto is_identity = [&](Element e) {
    for (std::size_t x = 0; x < m; ++x)
      if (mul[e][x] != x || mul[x][e] != x) return false;
    return true;
  };
  Element e = 0;
  if (input.identity) {
    e = *input.identity;
    if (e >= m) throw Error("NoIdentity", "declared identity is out of range", {{"identity", as_i64(e)}});
    for (std::size_t x = 0; x < m; ++x)
      if (mul[e][x] != x || mul[x][e] != x)
        throw Error("NoIdentity", "declared identity does not act as identity",
                    {{"identity", as_i64(e)}, {"element", as_i64(x)}});
  } else {
    bool found = false;
    for (Element c = 0; c < m && !found; ++c)
      if (is_identity(c)) {
        e = c;
        found = true;
      }
    if (!found) throw Error("NoIdentity", "no two-sided identity element", {{"order", as_i64(m)}});
  }

  std::vector<Element> inv(m);
  if (input.inverse) {
    if (input.inverse->size() != m)
      throw Error("ShapeMismatch", "inverse table length differs from table size",
                  {{"length", as_i64(input.inverse->size())}});
    inv = *input.inverse;
    for (std::size_t a = 0; a < m; ++a)
      if (inv[a] >= m || mul[a][inv[a]] != e || mul[inv[a]][a] != e)
        throw Error("NoInverse", "declared inverse is wrong", {{"element", as_i64(a)}});
  } else {
    for (std::size_t a = 0; a < m; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < m && !found; ++b)
        if (mul[a][b] == e && mul[b][a] == e) {
          inv[a] = b;
          found = true;
        }
      if (!found) throw Error("NoInverse", "element has no two-sided inverse", {{"element", as_i64(a)}});
    }
  }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error("NotAssociative", "(ab)c != a(bc)", {{"a", as_i64(a)}, {"b", as_i64(b)}, {"c", as_i64(c)}});

  auto data = std::make_shared<Data>();
  data->order = m;
  data->identity = e;
  data->inverse = std::move(inv);
  data->labels = input.labels;
  data->table.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) data->table[a * m + b] = static_cast<std::uint32_t>(mul[a][b]);
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                         std::size_t cap) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.size() != degree)
      throw Error("NotAPermutation", "generator length differs from degree",
                  {{"generator", as_i64(i)}, {"length", as_i64(g.size())}});
    try {
      check_permutation(g);
    } catch (const Error& err) {
      Error::Witness w{{"generator", as_i64(i)}};
      w.insert(w.end(), err.witness().begin(), err.witness().end());
      throw Error("NotAPermutation", "generator is not a bijection", std::move(w));
    }
  }

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = generators;
  data->perms.push_back(identity_permutation(degree));
  data->lookup.emplace(data->perms.front(), 0);

  const std::size_t k = generators.size();
  std::vector<Element> right;  // right[x * k + j] = x * generator j
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t x = 0; x < data->perms.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation p = compose(data->perms[x], generators[j]);
      auto [it, inserted] = data->lookup.emplace(std::move(p), data->perms.size());
      if (inserted) {
        if (data->perms.size() >= cap)
          throw Error("SizeLimitExceeded", "closure exceeds the configured cap", {{"cap", as_i64(cap)}});
        data->perms.push_back(it->first);
        parent.push_back(x);
        via.push_back(j);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t m = data->perms.size();
  data->order = m;
  data->identity = 0;
  data->labels.reserve(m);
  for (const auto& p : data->perms) data->labels.push_back(cycle_notation(p));
  data->inverse.resize(m);
  for (std::size_t a = 0; a < m; ++a) data->inverse[a] = data->lookup.at(invert(data->perms[a]));

  if (m <= kTableLimit) {
    // a * b = (a * parent(b)) * generator, following the closure tree.
    data->table.resize(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      auto* row = &data->table[a * m];
      row[0] = static_cast<std::uint32_t>(a);
      for (std::size_t b = 1; b < m; ++b) row[b] = static_cast<std::uint32_t>(right[row[parent[b]] * k + via[b]]);
    }
  }
  return FiniteGroup(std::move(data));
}

std::size_t FiniteGroup::order() const { return data_->order; }
Element FiniteGroup::identity() const { return data_->identity; }
Element FiniteGroup::inverse(Element a) const { return data_->inverse[a]; }

Element FiniteGroup::mul(Element a, Element b) const {
  if (!data_->table.empty()) return data_->table[a * data_->order + b];
  return data_->lookup.at(compose(data_->perms[a], data_->perms[b]));
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::has_labels() const { return !data_->labels.empty(); }

std::string FiniteGroup::label(Element a) const {
  return data_->labels.empty() ? std::to_string(a) : data_->labels[a];
}

bool FiniteGroup::is_permutation_group() const { return !data_->perms.empty(); }
std::size_t FiniteGroup::degree() const { return data_->degree; }
const Permutation& FiniteGroup::permutation(Element a) const { return data_->perms.at(a); }
const std::vector<Permutation>& FiniteGroup::generators() const { return data_->generators; }

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  auto it = data_->lookup.find(p);
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  const std::size_t m = order();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  if (data_ == other.data_) return true;
  if (order() != other.order() || identity() != other.identity()) return false;
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < order(); ++b)
      if (mul(a, b) != other.mul(a, b)) return false;
  return true;
}

FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs) {
  const std::size_t m = lhs.order();
  const std::size_t k = rhs.order();
  GroupTable t;
  t.mul.assign(m * k, std::vector<std::size_t>(m * k));
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < k; ++b)
      for (Element c = 0; c < m; ++c)
        for (Element d = 0; d < k; ++d) t.mul[a * k + b][c * k + d] = lhs.mul(a, c) * k + rhs.mul(b, d);
  t.identity = lhs.identity() * k + rhs.identity();
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < k; ++b) t.labels.push_back("(" + lhs.label(a) + ", " + rhs.label(b) + ")");
  return FiniteGroup::validate(t);
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), false) {
  for (Element a : members_) mask_[a] = true;
}

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<Element> members) {
  for (Element a : members)
    if (a >= parent.order()) throw Error("InvalidElement", "element out of range", {{"element", as_i64(a)}});
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h(parent, std::move(members));
  if (!h.contains(parent.identity()))
    throw Error("NotASubgroup", "identity missing", {{"identity", as_i64(parent.identity())}});
  for (Element a : h.members_)
    for (Element b : h.members_)
      if (!h.contains(parent.mul(a, b)))
        throw Error("NotASubgroup", "not closed under multiplication",
                    {{"a", as_i64(a)}, {"b", as_i64(b)}, {"product", as_i64(parent.mul(a, b))}});
  return h;
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<Element> all(parent.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {parent.identity()}); }

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> seeds) {
  for (Element s : seeds)
    if (s >= g.order()) throw Error("InvalidElement", "seed out of range", {{"element", as_i64(s)}});
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : seeds) {
      const Element y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return Subgroup::from_members(g, std::move(members));
}

std::size_t index(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) throw Error("ParentMismatch", "subgroup belongs to a different group");
  return g.order() / h.order();
}

bool automorphism_check(const FiniteGroup& g, const Permutation& sigma) {
  if (sigma.size() != g.order())
    throw Error("NotAPermutation", "map length differs from group order", {{"length", as_i64(sigma.size())}});
  check_permutation(sigma);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (sigma[g.mul(a, b)] != g.mul(sigma[a], sigma[b])) return false;
  return true;
}

std::size_t element_order(const FiniteGroup& g, Element a) {
  std::size_t n = 1;
  for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++n;
  return n;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> candidates(g.order());
  std::iota(candidates.begin(), candidates.end(), Element{0});
  std::vector<std::size_t> orders(g.order());
  for (Element a = 0; a < g.order(); ++a) orders[a] = element_order(g, a);
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) { return orders[a] > orders[b]; });

  std::vector<Element> gens;
  Subgroup h = Subgroup::trivial(g);
  for (Element a : candidates) {
    if (h.order() == g.order()) break;
    if (h.contains(a)) continue;
    gens.push_back(a);
    h = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<Permutation> automorphisms(const FiniteGroup& g) {
  const std::size_t m = g.order();
  const std::vector<Element> gens = generating_set(g);

  // Spanning tree of the Cayley graph: x = parent[x] * gens[via[x]].
  std::vector<Element> parent(m, m);
  std::vector<std::size_t> via(m, 0);
  std::vector<Element> bfs{g.identity()};
  parent[g.identity()] = g.identity();
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = g.mul(bfs[i], gens[j]);
      if (parent[y] == m) {
        parent[y] = bfs[i];
        via[y] = j;
        bfs.push_back(y);
      }
    }

  std::vector<std::size_t> orders(m);
  for (Element a = 0; a < m; ++a) orders[a] = element_order(g, a);

  std::vector<Permutation> result;
  std::vector<Element> images(gens.size());
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == gens.size()) {
      Permutation sigma(m);
      sigma[g.identity()] = g.identity();
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        const Element x = bfs[i];
        sigma[x] = g.mul(sigma[parent[x]], images[via[x]]);
      }
      if (is_permutation(sigma) && automorphism_check(g, sigma)) result.push_back(std::move(sigma));
      return;
    }
    for (Element t = 0; t < m; ++t) {
      if (orders[t] != orders[gens[j]]) continue;
      images[j] = t;
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace fixspace
