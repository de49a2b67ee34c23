#include <doctest.h>

#include "fixspace/corpus.hpp"
#include "fixspace/function_space.hpp"
#include "fixspace/res_ind.hpp"
#include "generators.hpp"

using namespace fixspace;
using fixspace::testing::Rng;

TEST_CASE("fixed-point average equals the orbit count for random subgroups") {
  Rng rng(0xB0);
  for (const auto& [name, act] : fixspace::testing::corpus_actions()) {
    CAPTURE(name);
    for (int trial = 0; trial < 5; ++trial) {
      const auto h = fixspace::testing::random_subgroup(rng, act.group());
      CHECK(burnside_dimension(act, h) == Rational(static_cast<std::int64_t>(orbits(act, h).size())));
      const auto d = dimension_difference(act, h);
      CHECK(d.dimension_side == d.fixed_point_side);
    }
  }
}

TEST_CASE("trivial iff every basis vector is invariant iff every orbit is a singleton") {
  for (const auto& [name, act] : fixspace::testing::corpus_actions()) {
    CAPTURE(name);
    bool all_invariant = true;
    for (Point x = 0; x < act.degree(); ++x) all_invariant &= is_invariant(act, FunctionOnX::delta(act.degree(), x)).has_value();
    const bool singletons = orbits(act).size() == act.degree();
    CHECK(all_invariant == singletons);
    CHECK(is_trivial(act) == singletons);
    CHECK(is_trivial(act) == (burnside_dimension(act) == Rational(static_cast<std::int64_t>(act.degree()))));
  }
}

TEST_CASE("transitive iff dimension one iff the basis is the constant function") {
  for (const auto& [name, act] : fixspace::testing::corpus_actions()) {
    CAPTURE(name);
    const bool dim_one = burnside_dimension(act) == Rational(1);
    const auto basis = indicator_basis(act);
    const bool basis_is_one =
        basis.size() == 1 && basis.front() == FunctionOnX::constant(act.degree(), GaussianRational(1));
    CHECK(is_transitive(act) == dim_one);
    CHECK(dim_one == basis_is_one);
  }
}

TEST_CASE("sigma is invariant under the action and measures the constant component") {
  Rng rng(0x51);
  for (const auto& [name, act] : fixspace::testing::corpus_actions()) {
    CAPTURE(name);
    const auto one = FunctionOnX::constant(act.degree(), GaussianRational(1));
    const GaussianRational n(static_cast<std::int64_t>(act.degree()));
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = fixspace::testing::random_function(rng, act.degree());
      const Element a = rng.below(act.group().order());
      CHECK(sigma(act_on_function(act, a, f)) == sigma(f));
      CHECK(inner_product(f, one) == sigma(f) / n);
    }
    const auto check = perp_subset_check(act);
    CHECK(check.is_subset);
    CHECK(check.equality == is_transitive(act));
  }
}

TEST_CASE("Bessel holds with equality exactly on invariant functions") {
  Rng rng(0xBE);
  for (const auto& [name, act] : fixspace::testing::corpus_actions()) {
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = trial % 3 == 0 ? fixspace::testing::random_invariant_function(rng, act)
                                    : fixspace::testing::random_function(rng, act.degree());
      const auto b = bessel_check(act, f);
      CHECK(b.orbit_side <= b.total_side);
      CHECK((b.orbit_side == b.total_side) == is_invariant(act, f).has_value());
    }
  }
}

TEST_CASE("equivariant bijections transport invariant functions") {
  Rng rng(0x26);
  for (const auto& [name, act] : fixspace::testing::corpus_actions()) {
    CAPTURE(name);
    const auto other = relabel_points(act, fixspace::testing::random_permutation(rng, act.degree()));
    const auto phi = are_equivalent(act, other);
    REQUIRE(phi);
    for (int trial = 0; trial < 3; ++trial) {
      const auto h = fixspace::testing::random_subgroup(rng, act.group());
      FunctionOnX f(act.degree());
      const Partition cells_of = orbits(act, h);
      for (const auto& cell : cells_of.cells()) {
        const auto c = fixspace::testing::random_scalar(rng);
        for (Point x : cell) f[x] = c;
      }
      CHECK(is_invariant(other, h, transport(f, *phi)));
    }
  }
}

TEST_CASE("automorphisms fix at most |A| |G| points in total") {
  for (const auto& [name, g] : small_groups(12)) {
    CAPTURE(name);
    const auto autos = automorphisms(g);
    std::size_t fixed = 0;
    for (const auto& tau : autos)
      for (Element x = 0; x < g.order(); ++x) fixed += tau[x] == x;
    CHECK(fixed <= autos.size() * g.order());
  }
}
