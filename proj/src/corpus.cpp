#include "fixspace/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "fixspace/error.hpp"

namespace fixspace {

namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

struct Factor {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

Permutation cycle(std::size_t degree, std::initializer_list<std::size_t> points) {
  Permutation p = identity_permutation(degree);
  std::vector<std::size_t> v(points);
  for (std::size_t i = 0; i < v.size(); ++i) p[v[i]] = v[(i + 1) % v.size()];
  return p;
}

Permutation long_cycle(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t x = 0; x < degree; ++x) p[x] = (x + 1) % degree;
  return p;
}

std::optional<std::size_t> parse_size(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return static_cast<std::size_t>(std::stoul(s));
}

Factor factor_from_name(const std::string& name) {
  if (name == "Q8") {
    // Left multiplication on {1,-1,i,-i,j,-j,k,-k}.
    return {8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}};
  }
  if (name == "Dic3") {
    // <(0 1 2), (1 2)(3 4 5 6)>: the order-4 element inverts the 3-cycle.
    Permutation y = identity_permutation(7);
    y[1] = 2, y[2] = 1, y[3] = 4, y[4] = 5, y[5] = 6, y[6] = 3;
    return {7, {cycle(7, {0, 1, 2}), y}};
  }
  const auto n = name.size() > 1 ? parse_size(name.substr(1)) : std::nullopt;
  if (!n || *n == 0) throw Error("UnknownGroupName", "unrecognized group '" + name + "'");
  switch (name.front()) {
    case 'Z':
      if (*n > 64) break;
      return {*n, *n > 1 ? std::vector<Permutation>{long_cycle(*n)} : std::vector<Permutation>{}};
    case 'S': {
      if (*n > 7) break;
      Factor f{*n, {}};
      if (*n > 1) f.generators = {cycle(*n, {0, 1}), long_cycle(*n)};
      return f;
    }
    case 'A': {
      if (*n > 7) break;
      Factor f{*n, {}};
      for (std::size_t i = 2; i < *n; ++i) {
        Permutation p = identity_permutation(*n);
        p[0] = 1, p[1] = i, p[i] = 0;
        f.generators.push_back(p);
      }
      return f;
    }
    case 'D': {
      if (*n < 3 || *n > 32) break;
      Permutation reflection(*n);
      for (std::size_t x = 0; x < *n; ++x) reflection[x] = (*n - x) % *n;
      return {*n, {long_cycle(*n), reflection}};
    }
    default:
      break;
  }
  throw Error("UnknownGroupName", "unrecognized group '" + name + "'");
}

// --- parameter handling -----------------------------------------------------

class ParamReader {
 public:
  explicit ParamReader(const CorpusParams& given) : given_(given) {}

  std::string text(const std::string& key, const std::string& fallback) {
    auto it = given_.find(key);
    std::string v = it == given_.end() ? fallback : it->second;
    used_[key] = v;
    return v;
  }

  std::size_t size(const std::string& key, std::size_t fallback, std::size_t lo, std::size_t hi) {
    const std::string v = text(key, std::to_string(fallback));
    auto n = parse_size(v);
    if (!n || *n < lo || *n > hi)
      throw Error("ParamOutOfRange", "parameter '" + key + "' must be an integer in [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "], got '" + v + "'");
    return *n;
  }

  std::vector<Element> elements(const std::string& key, const std::string& fallback) {
    const std::string v = text(key, fallback);
    std::vector<Element> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto n = parse_size(item);
      if (!n) throw Error("ParamOutOfRange", "parameter '" + key + "' must be a comma-separated index list");
      out.push_back(*n);
    }
    return out;
  }

  bool flag(const std::string& key) {
    const std::string v = text(key, "false");
    if (v != "true" && v != "false") throw Error("ParamOutOfRange", "parameter '" + key + "' must be true or false");
    return v == "true";
  }

  FiniteGroup group(const std::string& key, const std::string& fallback) {
    const std::string v = text(key, fallback);
    try {
      return named_group(v);
    } catch (const Error& e) {
      throw Error("ParamOutOfRange", e.message());
    }
  }

  CorpusParams finish() const {
    for (const auto& [k, v] : given_)
      if (!used_.count(k)) throw Error("ParamOutOfRange", "unknown parameter '" + k + "'");
    return used_;
  }

 private:
  const CorpusParams& given_;
  CorpusParams used_;
};

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of(std::size_t n, std::size_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup nontrivial_subgroup(const FiniteGroup& g, std::vector<Element> seeds) {
  if (seeds.empty()) {
    if (g.order() < 2) throw Error("ParamOutOfRange", "the trivial group has no nontrivial subgroup");
    seeds.push_back(g.identity() == 0 ? 1 : 0);
  }
  for (Element s : seeds)
    if (s >= g.order()) throw Error("ParamOutOfRange", "subgroup seed out of range", {{"element", as_i64(s)}});
  Subgroup h = subgroup_generated(g, seeds);
  if (h.order() < 2) throw Error("ParamOutOfRange", "the subgroup must be nontrivial");
  return h;
}

// Conjugation action on a family of element sets closed under conjugation.
GroupAction conjugation_on_sets(const FiniteGroup& g, const std::vector<std::vector<Element>>& sets) {
  std::map<std::vector<Element>, std::size_t> index_of;
  for (std::size_t i = 0; i < sets.size(); ++i) index_of.emplace(sets[i], i);
  std::vector<std::vector<Point>> t(g.order(), std::vector<Point>(sets.size()));
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::vector<Element> image;
      for (Element y : sets[i]) image.push_back(g.mul(g.mul(a, y), g.inverse(a)));
      std::sort(image.begin(), image.end());
      t[a][i] = index_of.at(image);
    }
  return GroupAction::validate(g, std::move(t));
}

std::vector<std::vector<Element>> conjugates_of(const FiniteGroup& g, const std::vector<Element>& set) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> image;
    for (Element y : set) image.push_back(g.mul(g.mul(x, y), g.inverse(x)));
    std::sort(image.begin(), image.end());
    if (seen.insert(image).second) out.push_back(std::move(image));
  }
  return out;
}

// A maximal p-subgroup, grown one p-element at a time; maximal p-subgroups
// are Sylow subgroups.
Subgroup sylow_subgroup(const FiniteGroup& g, std::size_t p) {
  std::vector<Element> gens;
  Subgroup h = Subgroup::trivial(g);
  bool grown = true;
  while (grown) {
    grown = false;
    for (Element x = 0; x < g.order(); ++x) {
      if (h.contains(x) || !is_power_of(element_order(g, x), p)) continue;
      auto candidate = gens;
      candidate.push_back(x);
      Subgroup k = subgroup_generated(g, candidate);
      if (is_power_of(k.order(), p)) {
        gens = std::move(candidate);
        h = std::move(k);
        grown = true;
        break;
      }
    }
  }
  return h;
}

using Builder = std::function<CorpusEntry(ParamReader&)>;

CorpusEntry entry(GroupAction act, std::string description) {
  return CorpusEntry{"", std::move(description), std::move(act), {}, false, {}};
}

CorpusEntry build_symmetric(ParamReader& r) {
  const std::size_t n = r.size("n", 3, 1, 7);
  auto e = entry(evaluation_action(named_group("S" + std::to_string(n))), "Sym(X) acting on X by evaluation");
  if (n > 1) e.expected.is_transitive = true;
  if (n > 2) e.expected.is_free = false;
  return e;
}

CorpusEntry build_coset(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S3");
  const Subgroup h = nontrivial_subgroup(g, r.elements("subgroup", ""));
  auto e = entry(coset_action(g, h), "G acting on the left cosets of a nontrivial subgroup");
  e.expected.is_transitive = true;
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_conjugate_subsets(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S3");
  std::vector<Element> set = r.elements("subset", "");
  if (set.empty()) set = nontrivial_subgroup(g, r.elements("subgroup", "")).members();
  for (Element y : set)
    if (y >= g.order()) throw Error("ParamOutOfRange", "subset element out of range", {{"element", as_i64(y)}});
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::size_t normalizer = 0;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> image;
    for (Element y : set) image.push_back(g.mul(g.mul(x, y), g.inverse(x)));
    std::sort(image.begin(), image.end());
    if (image == set) ++normalizer;
  }
  if (normalizer < 2) throw Error("ParamOutOfRange", "the subset must have a nontrivial normalizer");
  auto e = entry(conjugation_on_sets(g, conjugates_of(g, set)), "G acting on the conjugates xYx^-1 of a subset Y");
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_sylow(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S4");
  const std::size_t p = r.size("p", 3, 2, 1000);
  if (!is_prime(p) || g.order() % p != 0)
    throw Error("ParamOutOfRange", "p must be a prime dividing the group order", {{"p", as_i64(p)}});
  const Subgroup sylow = sylow_subgroup(g, p);
  auto e = entry(conjugation_on_sets(g, conjugates_of(g, sylow.members())),
                 "G acting on its Sylow p-subgroups by conjugation");
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_order_p(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S4");
  const std::size_t p = r.size("p", 2, 2, 1000);
  if (!is_prime(p) || g.order() % p != 0)
    throw Error("ParamOutOfRange", "p must be a prime dividing the group order", {{"p", as_i64(p)}});
  std::vector<std::vector<Element>> points;
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == p) points.push_back({x});
  auto e = entry(conjugation_on_sets(g, points), "G acting on its elements of order p by conjugation");
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_gl(ParamReader& r) {
  const bool large = r.flag("allow_large");
  const std::size_t n = r.size("n", 2, 2, large ? 3 : 2);
  const std::size_t q = r.size("q", 2, 2, large ? 5 : 3);
  if (!is_prime(q)) throw Error("ParamOutOfRange", "q must be prime", {{"q", as_i64(q)}});

  std::size_t vectors = 1;
  for (std::size_t i = 0; i < n; ++i) vectors *= q;
  std::size_t all_matrices = 1;
  for (std::size_t i = 0; i < n * n; ++i) all_matrices *= q;

  using Matrix = std::vector<std::size_t>;  // row-major
  auto mat_mul = [&](const Matrix& a, const Matrix& b) {
    Matrix c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
        c[i * n + j] = s % q;
      }
    return c;
  };
  auto decode_vector = [&](std::size_t v) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i, v /= q) out[i] = v % q;
    return out;
  };
  auto apply = [&](const Matrix& a, std::size_t v) {
    const auto col = decode_vector(v);
    std::size_t out = 0, scale = 1;
    for (std::size_t i = 0; i < n; ++i, scale *= q) {
      std::size_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * col[k];
      out += (s % q) * scale;
    }
    return out;
  };

  // Invertible over F_q iff the map on column vectors is a bijection.
  std::vector<Matrix> group;
  for (std::size_t code = 0; code < all_matrices; ++code) {
    Matrix m(n * n);
    std::size_t c = code;
    for (auto& entry_value : m) entry_value = c % q, c /= q;
    std::vector<bool> hit(vectors, false);
    bool bijective = true;
    for (std::size_t v = 0; v < vectors && bijective; ++v) {
      const std::size_t w = apply(m, v);
      bijective = !hit[w];
      hit[w] = true;
    }
    if (bijective) group.push_back(std::move(m));
  }
  if (group.size() > (large ? 512u : 48u))
    throw Error("ParamOutOfRange", "GL(n, q) is too large for a materialized table", {{"order", as_i64(group.size())}});
  std::sort(group.begin(), group.end(), [&](const Matrix& a, const Matrix& b) {
    // Identity first, then lexicographic.
    const Matrix id = [&] {
      Matrix m(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
      return m;
    }();
    if ((a == id) != (b == id)) return a == id;
    return a < b;
  });

  std::map<Matrix, std::size_t> index_of;
  for (std::size_t i = 0; i < group.size(); ++i) index_of.emplace(group[i], i);
  GroupTable t;
  t.mul.assign(group.size(), std::vector<std::size_t>(group.size()));
  for (std::size_t a = 0; a < group.size(); ++a)
    for (std::size_t b = 0; b < group.size(); ++b) t.mul[a][b] = index_of.at(mat_mul(group[a], group[b]));
  for (const auto& m : group) {
    std::string label = "[";
    for (std::size_t i = 0; i < n; ++i) {
      label += i ? ",[" : "[";
      for (std::size_t j = 0; j < n; ++j) label += (j ? "," : "") + std::to_string(m[i * n + j]);
      label += "]";
    }
    t.labels.push_back(label + "]");
  }
  const FiniteGroup g = FiniteGroup::validate(t);

  std::vector<std::vector<Point>> act(g.order(), std::vector<Point>(vectors));
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t v = 0; v < vectors; ++v) act[a][v] = apply(group[a], v);
  auto e = entry(GroupAction::validate(g, std::move(act)), "GL(n, F_q) acting on column vectors");
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_subsets(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S3");
  const std::size_t n = g.degree();
  if (n == 0 || n > 4) throw Error("ParamOutOfRange", "the base set must have 1 to 4 points", {{"degree", as_i64(n)}});
  if (is_power_of(g.order(), 2)) throw Error("ParamOutOfRange", "the group must not be a 2-group");
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<Point>> act(g.order(), std::vector<Point>(subsets));
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::size_t image = 0;
      for (Point x = 0; x < n; ++x)
        if (mask >> x & 1) image |= std::size_t{1} << g.permutation(a)[x];
      act[a][mask] = image;
    }
  auto e = entry(GroupAction::validate(g, std::move(act)), "G acting on the subsets of a G-set (point = bitmask)");
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_two_sided(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S3");
  const FiniteGroup gg = direct_product(g, g);
  const std::size_t m = g.order();
  std::vector<std::vector<Point>> act(gg.order(), std::vector<Point>(m));
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      for (Element x = 0; x < m; ++x) act[a * m + b][x] = g.mul(g.mul(a, x), g.inverse(b));
  auto e = entry(GroupAction::validate(gg, std::move(act)), "G x G acting on G by (a, b).x = a x b^-1");
  e.expected.is_free = false;
  return e;
}

CorpusEntry build_trivial(ParamReader& r) {
  const std::size_t n = r.size("n", 3, 1, 64);
  const FiniteGroup g = r.group("group", "Z2");
  std::vector<std::vector<Point>> act(g.order(), identity_permutation(n));
  auto e = entry(GroupAction::validate(g, std::move(act)), "a group fixing every point");
  e.expected.is_trivial = true;
  e.expected.orbit_count = n;
  e.expected.is_free = g.order() == 1;
  return e;
}

CorpusEntry build_evaluation(ParamReader& r) {
  auto e = entry(evaluation_action(r.group("group", "D4")), "a permutation group acting on its points");
  return e;
}

CorpusEntry build_conjugation(ParamReader& r) {
  const FiniteGroup g = r.group("group", "S3");
  auto e = entry(conjugation_action(g), "G acting on itself by conjugation; invariants are class functions");
  e.expected.is_trivial = g.is_abelian();
  return e;
}

CorpusEntry build_cyclic_translation(ParamReader& r) {
  const std::size_t n = r.size("n", 4, 1, 64);
  auto e = entry(evaluation_action(named_group("Z" + std::to_string(n))), "Z_n acting on itself by translation");
  e.expected.is_free = true;
  e.expected.is_transitive = true;
  e.expected.orbit_count = 1;
  return e;
}

CorpusEntry build_periodic(ParamReader& r) {
  const std::size_t n = r.size("n", 6, 1, 64);
  const std::size_t t = r.size("t", 2, 0, n - 1);
  Permutation shift(n);
  for (std::size_t x = 0; x < n; ++x) shift[x] = (x + t) % n;
  const FiniteGroup g = FiniteGroup::from_generators(n, {shift});
  auto e = entry(evaluation_action(g), "<t> acting on Z_n by addition; invariants are t-periodic functions");
  e.expected.orbit_count = std::gcd(n, t);
  e.expected.is_free = true;
  return e;
}

CorpusEntry build_transposition(ParamReader& r) {
  const std::size_t n = r.size("n", 4, 2, 64);
  Permutation swap = identity_permutation(n);
  std::swap(swap[0], swap[1]);
  auto e = entry(evaluation_action(FiniteGroup::from_generators(n, {swap})), "Z_2 swapping points 0 and 1");
  e.expected.orbit_count = n - 1;
  e.expected.is_transitive = n == 2;
  return e;
}

struct Family {
  CorpusInfo info;
  Builder build;
};

const std::vector<Family>& families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> f = {
        {{"symmetric", "Sym(X) acting on X by evaluation", {{"n", "3"}}, true}, build_symmetric},
        {{"coset", "G acting on the left cosets of a nontrivial subgroup", {{"group", "S3"}, {"subgroup", ""}}, true},
         build_coset},
        {{"conjugate_subsets", "G acting on the conjugates of a subset with nontrivial normalizer",
          {{"group", "S3"}, {"subset", ""}, {"subgroup", ""}},
          true},
         build_conjugate_subsets},
        {{"sylow_conjugation", "G acting on its Sylow p-subgroups by conjugation", {{"group", "S4"}, {"p", "3"}}, true},
         build_sylow},
        {{"order_p_conjugation", "G acting on its elements of order p by conjugation", {{"group", "S4"}, {"p", "2"}},
          true},
         build_order_p},
        {{"gl_on_vectors", "GL(n, F_q) acting on column vectors",
          {{"n", "2"}, {"q", "2"}, {"allow_large", "false"}},
          true},
         build_gl},
        {{"subsets", "G acting on the subsets of a G-set", {{"group", "S3"}}, true}, build_subsets},
        {{"two_sided", "G x G acting on G by (a, b).x = a x b^-1", {{"group", "S3"}}, true}, build_two_sided},
        {{"trivial", "a group fixing every point", {{"n", "3"}, {"group", "Z2"}}, false}, build_trivial},
        {{"evaluation", "a permutation group acting on its points", {{"group", "D4"}}, false}, build_evaluation},
        {{"conjugation", "G acting on itself by conjugation (class functions)", {{"group", "S3"}}, false},
         build_conjugation},
        {{"cyclic_translation", "Z_n acting on itself by translation", {{"n", "4"}}, false}, build_cyclic_translation},
        {{"periodic", "<t> acting on Z_n by addition (t-periodic functions)", {{"n", "6"}, {"t", "2"}}, false},
         build_periodic},
        {{"transposition", "Z_2 swapping points 0 and 1", {{"n", "4"}}, false}, build_transposition},
    };
    return f;
  }();
  return all;
}

void check_expectation(const CorpusEntry& e) {
  auto fail = [&](const std::string& what) {
    throw Error("IdentityViolated", "corpus entry '" + e.name + "' contradicts its expected " + what);
  };
  const auto& x = e.expected;
  if (x.orbit_count && *x.orbit_count != orbits(e.action).size()) fail("orbit count");
  if (x.is_free && *x.is_free != is_free(e.action)) fail("freeness");
  if (x.is_transitive && *x.is_transitive != is_transitive(e.action)) fail("transitivity");
  if (x.is_trivial && *x.is_trivial != is_trivial(e.action)) fail("triviality");
}

}  // namespace

FiniteGroup named_group(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) parts.push_back(part);
  if (parts.empty()) throw Error("UnknownGroupName", "empty group name");

  std::size_t degree = 0;
  std::vector<Factor> factors;
  for (const auto& p : parts) {
    factors.push_back(factor_from_name(p));
    degree += factors.back().degree;
  }
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators) {
      Permutation shifted = identity_permutation(degree);
      for (std::size_t x = 0; x < f.degree; ++x) shifted[offset + x] = offset + g[x];
      gens.push_back(std::move(shifted));
    }
    offset += f.degree;
  }
  return FiniteGroup::from_generators(degree, gens);
}

std::vector<std::pair<std::string, FiniteGroup>> small_groups(std::size_t max_order) {
  static const std::vector<std::pair<std::size_t, std::string>> catalog = {
      {1, "Z1"},   {2, "Z2"},   {3, "Z3"},     {4, "Z4"},   {4, "Z2xZ2"}, {5, "Z5"},   {6, "Z6"},
      {6, "S3"},   {7, "Z7"},   {8, "Z8"},     {8, "Z4xZ2"}, {8, "Z2xZ2xZ2"}, {8, "D4"}, {8, "Q8"},
      {9, "Z9"},   {9, "Z3xZ3"}, {10, "Z10"},  {10, "D5"},  {11, "Z11"}, {12, "Z12"}, {12, "Z2xZ6"},
      {12, "A4"},  {12, "D6"},  {12, "Dic3"},
  };
  if (max_order > 12) throw Error("ParamOutOfRange", "small group catalog stops at order 12");
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const auto& [order, name] : catalog)
    if (order <= max_order) out.emplace_back(name, named_group(name));
  return out;
}

const std::vector<CorpusInfo>& corpus_list() {
  static const std::vector<CorpusInfo> infos = [] {
    std::vector<CorpusInfo> v;
    for (const auto& f : families()) v.push_back(f.info);
    return v;
  }();
  return infos;
}

CorpusEntry build(const std::string& name, const CorpusParams& params) {
  for (const auto& f : families()) {
    if (f.info.name != name) continue;
    ParamReader reader(params);
    CorpusEntry e = f.build(reader);
    e.name = name;
    e.params = reader.finish();
    e.order_divides_degree = e.action.degree() % e.action.group().order() == 0;
    check_expectation(e);
    return e;
  }
  throw Error("UnknownCorpusName", "no corpus entry named '" + name + "'");
}

}  // namespace fixspace
