#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "error_kind.hpp"
#include "fixspace/partition_group.hpp"
#include "set_partitions.hpp"

using namespace fixspace;
using fixspace::testing::factorial;
using fixspace::testing::kind_of;

TEST_CASE("set partition enumeration gives the Bell numbers") {
  const std::vector<std::size_t> bell = {1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(fixspace::testing::all_set_partitions(n).size() == bell[n - 1]);
}

TEST_CASE("group_from_partition examples") {
  const auto singletons = group_from_partition(Partition::from_cells(4, {{0}, {1}, {2}, {3}}));
  CHECK(singletons.group.order() == 1);
  CHECK(is_trivial(singletons.action));
  CHECK(singletons.generators.empty());

  const auto pair = group_from_partition(Partition::from_cells(2, {{0, 1}}));
  CHECK(pair.group.order() == 2);
  CHECK(orbit(pair.action, 0) == std::vector<Point>{0, 1});

  const auto p = Partition::from_cells(5, {{0, 1, 2}, {3, 4}});
  const auto g = group_from_partition(p);
  CHECK(g.group.order() == 12);
  CHECK(orbits(g.action) == p);
  CHECK(g.generators.size() == 4);
}

TEST_CASE("minimal generators give the same group") {
  const auto p = Partition::from_cells(6, {{0, 2, 4, 5}, {1, 3}});
  const auto full = group_from_partition(p);
  const auto minimal = group_from_partition(p, kDefaultClosureCap, true);
  CHECK(full.generators.size() == 7);
  CHECK(minimal.generators.size() == 4);
  CHECK(minimal.group.order() == full.group.order());
  CHECK(minimal.group.order() == 48);
  for (Element a = 0; a < full.group.order(); ++a) CHECK(minimal.group.find(full.group.permutation(a)).has_value());
}

TEST_CASE("the cap is checked before any closure work") {
  const auto p = Partition::from_cells(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  CHECK(kind_of([&] { group_from_partition(p); }) == "SizeLimitExceeded");
  CHECK(kind_of([&] { group_from_partition(Partition::from_cells(4, {{0, 1, 2}, {3}}), 5); }) == "SizeLimitExceeded");
  CHECK(group_from_partition(Partition::from_cells(4, {{0, 1, 2}, {3}}), 6).group.order() == 6);
}

TEST_CASE("sp_membership") {
  const auto p = Partition::from_cells(3, {{0, 1}, {2}});
  CHECK(sp_membership(p, {0, 1, 2}));
  CHECK(sp_membership(p, {1, 0, 2}));
  CHECK_FALSE(sp_membership(p, {0, 2, 1}));
  CHECK(kind_of([&] { sp_membership(p, {0, 0, 1}); }) == "NotAPermutation");
  CHECK(kind_of([&] { sp_membership(p, {0, 1}); }) == "NotAPermutation");
}

TEST_CASE("round trip and containment for every partition of up to 5 points") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& cells : fixspace::testing::all_set_partitions(n)) {
      const auto p = Partition::from_cells(n, cells);
      const auto g = group_from_partition(p);
      CHECK(orbits(g.action) == p);
      CHECK(burnside_dimension(g.action) == Rational(static_cast<std::int64_t>(p.size())));
      std::size_t expected = 1;
      for (const auto& c : p.cells()) expected *= factorial(c.size());
      CHECK(g.group.order() == expected);
      for (Element a = 0; a < g.group.order(); ++a) CHECK(sp_membership(p, g.group.permutation(a)));
    }
}

TEST_CASE("S_P counted by brute force matches the product of factorials") {
  for (const auto& cells : {std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4}, {5}},
                            std::vector<std::vector<std::size_t>>{{0, 3}, {1, 4}, {2, 5}}}) {
    const auto p = Partition::from_cells(6, cells);
    std::vector<std::size_t> sigma(6);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::size_t count = 0;
    do count += sp_membership(p, sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    CHECK(count == group_from_partition(p).group.order());
  }
}
