#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error_kind.hpp"
#include "fixspace/corpus.hpp"
#include "fixspace/group.hpp"
#include "generators.hpp"

using namespace fixspace;
using fixspace::testing::error_of;
using fixspace::testing::kind_of;
using fixspace::testing::witness_value;

namespace {

// Closure by repeated composition until nothing new appears.
std::set<Permutation> closure_oracle(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{identity_permutation(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> current(seen.begin(), seen.end());
    for (const auto& a : current)
      for (const auto& g : gens) {
        Permutation p(degree);
        for (std::size_t x = 0; x < degree; ++x) p[x] = g[a[x]];
        grew |= seen.insert(p).second;
      }
  }
  return seen;
}

std::set<Permutation> elements_of(const FiniteGroup& g) {
  std::set<Permutation> out;
  for (Element a = 0; a < g.order(); ++a) out.insert(g.permutation(a));
  return out;
}

GroupTable cyclic_table(std::size_t m) {
  GroupTable t;
  t.mul.assign(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t.mul[a][b] = (a + b) % m;
  return t;
}

bool associative_oracle(const std::vector<std::vector<std::size_t>>& s) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (s[s[a][b]][c] != s[a][s[b][c]]) return false;
  return true;
}

bool two_sided_inverses_oracle(const std::vector<std::vector<std::size_t>>& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < s.size(); ++b) found |= s[a][b] == 0 && s[b][a] == 0;
    if (!found) return false;
  }
  return true;
}

void normalized_latin_squares(std::size_t n, std::vector<std::vector<std::size_t>>& sq,
                              std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (sq.size() == n) {
    out.push_back(sq);
    return;
  }
  std::vector<std::size_t> row(n);
  std::iota(row.begin(), row.end(), 0);
  do {
    if (row[0] != sq.size()) continue;
    bool ok = true;
    for (const auto& prev : sq)
      for (std::size_t c = 0; c < n && ok; ++c) ok = prev[c] != row[c];
    if (!ok) continue;
    sq.push_back(row);
    normalized_latin_squares(n, sq, out);
    sq.pop_back();
  } while (std::next_permutation(row.begin(), row.end()));
}

std::size_t brute_force_automorphism_count(const FiniteGroup& g) {
  std::vector<std::size_t> rest;
  for (Element a = 0; a < g.order(); ++a)
    if (a != g.identity()) rest.push_back(a);
  std::size_t count = 0;
  do {
    Permutation sigma(g.order());
    sigma[g.identity()] = g.identity();
    std::size_t k = 0;
    for (Element a = 0; a < g.order(); ++a)
      if (a != g.identity()) sigma[a] = rest[k++];
    bool hom = true;
    for (Element a = 0; a < g.order() && hom; ++a)
      for (Element b = 0; b < g.order() && hom; ++b) hom = sigma[g.mul(a, b)] == g.mul(sigma[a], sigma[b]);
    count += hom;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

}  // namespace

TEST_CASE("from_generators matches the closure oracle") {
  SUBCASE("S3 from a transposition and a 3-cycle") {
    const std::vector<Permutation> gens = {{1, 0, 2}, {1, 2, 0}};
    const auto g = FiniteGroup::from_generators(3, gens);
    CHECK(g.order() == 6);
    CHECK(elements_of(g) == closure_oracle(3, gens));
    CHECK(g.identity() == 0);
    CHECK(g.permutation(0) == identity_permutation(3));
  }
  SUBCASE("no generators") {
    const auto g = FiniteGroup::from_generators(4, {});
    CHECK(g.order() == 1);
    CHECK(g.permutation(0) == identity_permutation(4));
  }
  SUBCASE("a 4-cycle generates its four powers") {
    const Permutation c = {1, 2, 3, 0};
    const auto g = FiniteGroup::from_generators(4, {c});
    std::set<Permutation> powers;
    Permutation p = identity_permutation(4);
    for (int k = 0; k < 4; ++k) {
      powers.insert(p);
      p = compose(c, p);
    }
    CHECK(g.order() == 4);
    CHECK(elements_of(g) == powers);
  }
  SUBCASE("larger closures agree with the oracle") {
    const std::vector<std::vector<Permutation>> cases = {
        {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}},
        {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}},
        {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}},
    };
    for (const auto& gens : cases) {
      const auto g = FiniteGroup::from_generators(gens.front().size(), gens);
      CHECK(elements_of(g) == closure_oracle(gens.front().size(), gens));
    }
  }
}

TEST_CASE("from_generators rejects bad input") {
  CHECK(kind_of([] { FiniteGroup::from_generators(3, {{0, 0, 1}}); }) == "NotAPermutation");
  CHECK(kind_of([] { FiniteGroup::from_generators(3, {{0, 1, 3}}); }) == "NotAPermutation");
  CHECK(kind_of([] { FiniteGroup::from_generators(3, {{0, 1}}); }) == "NotAPermutation");
  const auto e = error_of([] { FiniteGroup::from_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 100); });
  REQUIRE(e);
  CHECK(e->kind() == "SizeLimitExceeded");
  CHECK(witness_value(*e, "cap") == 100);
  CHECK(FiniteGroup::from_generators(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, 120).order() == 120);
}

TEST_CASE("from_generators output passes table validation") {
  for (const auto& [name, g] : small_groups(12)) {
    CAPTURE(name);
    const auto again = FiniteGroup::validate(GroupTable{g.table(), std::nullopt, std::nullopt, {}});
    CHECK(again.order() == g.order());
    CHECK(again.identity() == g.identity());
    for (Element a = 0; a < g.order(); ++a) CHECK(again.inverse(a) == g.inverse(a));
  }
}

TEST_CASE("groups beyond the table limit multiply correctly") {
  const auto g = named_group("S7");
  REQUIRE(g.order() == 5040);
  fixspace::testing::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Element a = rng.below(g.order()), b = rng.below(g.order());
    CHECK(g.permutation(g.mul(a, b)) == compose(g.permutation(a), g.permutation(b)));
    CHECK(g.mul(a, g.inverse(a)) == g.identity());
  }
}

TEST_CASE("validate accepts the integers mod 2") {
  const auto g = FiniteGroup::validate(cyclic_table(2));
  CHECK(g.order() == 2);
  CHECK(g.identity() == 0);
  CHECK(g.inverse(1) == 1);
  CHECK(g.is_abelian());
}

TEST_CASE("validate names the first violated axiom") {
  CHECK(kind_of([] { FiniteGroup::validate(GroupTable{{{0, 0}, {0, 0}}, {}, {}, {}}); }) == "NotLatinSquare");
  CHECK(kind_of([] { FiniteGroup::validate(GroupTable{{{0, 1}, {1}}, {}, {}, {}}); }) == "ShapeMismatch");
  CHECK(kind_of([] { FiniteGroup::validate(GroupTable{{{0, 2}, {1, 0}}, {}, {}, {}}); }) == "EntryOutOfRange");
  CHECK(kind_of([] { FiniteGroup::validate(GroupTable{{}, {}, {}, {}}); }) == "ShapeMismatch");
  // a*b = -a-b mod 3 is a Latin square without an identity.
  GroupTable no_identity;
  no_identity.mul.assign(3, std::vector<std::size_t>(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) no_identity.mul[a][b] = (6 - a - b) % 3;
  CHECK(kind_of([&] { FiniteGroup::validate(no_identity); }) == "NoIdentity");

  GroupTable wrong_identity = cyclic_table(3);
  wrong_identity.identity = 1;
  CHECK(kind_of([&] { FiniteGroup::validate(wrong_identity); }) == "NoIdentity");
  GroupTable wrong_inverse = cyclic_table(3);
  wrong_inverse.inverse = std::vector<Element>{0, 1, 2};
  CHECK(kind_of([&] { FiniteGroup::validate(wrong_inverse); }) == "NoInverse");
}

TEST_CASE("normalized Latin squares of order 5 are classified like the triple-loop oracle") {
  std::vector<std::vector<std::size_t>> start = {{0, 1, 2, 3, 4}};
  std::vector<std::vector<std::vector<std::size_t>>> squares;
  normalized_latin_squares(5, start, squares);
  std::size_t groups = 0, no_inverse = 0, not_associative = 0;
  for (const auto& s : squares) {
    const std::string kind = kind_of([&] { FiniteGroup::validate(GroupTable{s, {}, {}, {}}); });
    std::string expected;
    if (!associative_oracle(s)) expected = two_sided_inverses_oracle(s) ? "NotAssociative" : "NoInverse";
    CHECK(kind == expected);
    groups += kind.empty();
    no_inverse += kind == "NoInverse";
    not_associative += kind == "NotAssociative";
  }
  CHECK(squares.size() == 56);
  CHECK(groups == 6);
  CHECK(no_inverse == 48);
  CHECK(not_associative == 2);
}

TEST_CASE("the NotAssociative witness is a genuine failing triple") {
  const std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  const auto e = error_of([&] { FiniteGroup::validate(GroupTable{loop, {}, {}, {}}); });
  REQUIRE(e);
  CHECK(e->kind() == "NotAssociative");
  const auto a = *witness_value(*e, "a"), b = *witness_value(*e, "b"), c = *witness_value(*e, "c");
  CHECK(loop[loop[a][b]][c] != loop[a][loop[b][c]]);
}

TEST_CASE("subgroup_generated") {
  const auto z4 = named_group("Z4");
  const auto s3 = named_group("S3");
  CHECK(subgroup_generated(z4, std::vector<Element>{}).members() == std::vector<Element>{0});

  // In Z4 built from a 4-cycle, element 2 is the square of the generator.
  REQUIRE(z4.permutation(2) == compose(z4.permutation(1), z4.permutation(1)));
  CHECK(subgroup_generated(z4, std::vector<Element>{2}).members() == std::vector<Element>{0, 2});

  for (Element a = 0; a < s3.order(); ++a) {
    if (element_order(s3, a) != 3) continue;
    const auto h = subgroup_generated(s3, std::vector<Element>{a});
    CHECK(h.order() == 3);
    for (Element x : h.members()) CHECK(element_order(s3, x) != 2);
    CHECK(index(s3, h) == 2);
  }
  CHECK(kind_of([&] { subgroup_generated(s3, std::vector<Element>{6}); }) == "InvalidElement");
}

TEST_CASE("subgroup_generated is idempotent and respects Lagrange") {
  fixspace::testing::Rng rng(0x5B6);
  for (const auto& [name, g] : small_groups(12)) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto h = fixspace::testing::random_subgroup(rng, g);
      CHECK(subgroup_generated(g, h.members()) == h);
      CHECK(index(g, h) * h.order() == g.order());
      CHECK(h.contains(g.identity()));
      for (Element a : h.members()) {
        CHECK(h.contains(g.inverse(a)));
        for (Element b : h.members()) CHECK(h.contains(g.mul(a, b)));
      }
    }
  }
}

TEST_CASE("index examples") {
  const auto z4 = named_group("Z4");
  CHECK(index(z4, Subgroup::whole(z4)) == 1);
  CHECK(index(z4, Subgroup::from_members(z4, {0, 2})) == 2);
  CHECK(kind_of([&] { index(named_group("Z2"), Subgroup::whole(z4)); }) == "ParentMismatch");
  CHECK(kind_of([&] { Subgroup::from_members(z4, {0, 1}); }) == "NotASubgroup");
  CHECK(kind_of([&] { Subgroup::from_members(z4, {1, 3}); }) == "NotASubgroup");
}

TEST_CASE("automorphism_check examples") {
  const auto z4 = named_group("Z4");
  CHECK(automorphism_check(z4, identity_permutation(4)));
  Permutation inversion(4);
  for (Element a = 0; a < 4; ++a) inversion[a] = z4.inverse(a);
  CHECK(inversion == Permutation{0, 3, 2, 1});
  CHECK(automorphism_check(z4, inversion));
  CHECK_FALSE(automorphism_check(z4, {0, 2, 1, 3}));
  CHECK(kind_of([&] { automorphism_check(z4, {0, 0, 1, 2}); }) == "NotAPermutation");
}

TEST_CASE("automorphism group orders agree with brute force up to order 8") {
  for (const auto& [name, g] : small_groups(8)) {
    CAPTURE(name);
    const auto autos = automorphisms(g);
    CHECK(autos.size() == brute_force_automorphism_count(g));
    for (const auto& sigma : autos) CHECK(automorphism_check(g, sigma));
  }
}

TEST_CASE("automorphism group orders of every group of order at most 12") {
  const std::map<std::string, std::size_t> known = {
      {"Z1", 1},  {"Z2", 1},  {"Z3", 2},         {"Z4", 2},  {"Z2xZ2", 6}, {"Z5", 4},     {"Z6", 2},
      {"S3", 6},  {"Z7", 6},  {"Z8", 4},         {"Z4xZ2", 8}, {"Z2xZ2xZ2", 168}, {"D4", 8}, {"Q8", 24},
      {"Z9", 6},  {"Z3xZ3", 48}, {"Z10", 4},     {"D5", 20}, {"Z11", 10},  {"Z12", 4},    {"Z2xZ6", 12},
      {"A4", 24}, {"D6", 12}, {"Dic3", 12},
  };
  const auto groups = small_groups(12);
  CHECK(groups.size() == 24);
  for (const auto& [name, g] : groups) {
    CAPTURE(name);
    CHECK(automorphisms(g).size() == known.at(name));
  }
}

TEST_CASE("small groups are pairwise non-isomorphic") {
  std::set<std::pair<bool, std::vector<std::size_t>>> invariants;
  const auto groups = small_groups(12);
  for (const auto& [name, g] : groups) {
    std::vector<std::size_t> orders;
    for (Element a = 0; a < g.order(); ++a) orders.push_back(element_order(g, a));
    std::sort(orders.begin(), orders.end());
    invariants.insert({g.is_abelian(), orders});
  }
  CHECK(invariants.size() == groups.size());
}

TEST_CASE("direct products") {
  const auto z2 = named_group("Z2"), z3 = named_group("Z3");
  const auto p = direct_product(z2, z3);
  CHECK(p.order() == 6);
  CHECK(p.is_abelian());
  bool has_order_six = false;
  for (Element a = 0; a < p.order(); ++a) has_order_six |= element_order(p, a) == 6;
  CHECK(has_order_six);
  CHECK(p.label(1) == "((), (0 1 2))");
}

TEST_CASE("permutation helpers") {
  CHECK(cycle_notation(identity_permutation(3)) == "()");
  CHECK(cycle_notation({1, 2, 0, 4, 3}) == "(0 1 2)(3 4)");
  const Permutation a = {1, 2, 0}, b = {1, 0, 2};
  CHECK(compose(a, b) == Permutation{2, 1, 0});
  CHECK(compose(a, invert(a)) == identity_permutation(3));
  CHECK(is_permutation(a));
  CHECK_FALSE(is_permutation(std::vector<std::size_t>{0, 0}));
  const auto e = error_of([] { check_permutation(std::vector<std::size_t>{0, 2, 2}); });
  REQUIRE(e);
  CHECK(witness_value(*e, "position") == 2);
}

TEST_CASE("named group orders") {
  const std::map<std::string, std::size_t> orders = {{"Z1", 1},  {"S4", 24},     {"A5", 60},  {"D7", 14},
                                                     {"Q8", 8},  {"Dic3", 12},   {"S3xZ2", 12}, {"A4xZ2", 24},
                                                     {"Z5xZ5", 25}, {"S7", 5040}};
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    CHECK(named_group(name).order() == order);
  }
  CHECK(kind_of([] { named_group("X5"); }) == "UnknownGroupName");
  CHECK(kind_of([] { named_group("S9"); }) == "UnknownGroupName");
  CHECK(kind_of([] { named_group("Z"); }) == "UnknownGroupName");
}
