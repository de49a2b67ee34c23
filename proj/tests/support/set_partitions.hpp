#ifndef FIXSPACE_TEST_SET_PARTITIONS_HPP
#define FIXSPACE_TEST_SET_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

namespace fixspace::testing {

// Every set partition of {0..n-1}, via restricted growth strings.
inline std::vector<std::vector<std::vector<std::size_t>>> all_set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> label(n, 0);
  auto emit = [&] {
    const std::size_t k = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<std::size_t>> cells(k);
    for (std::size_t x = 0; x < n; ++x) cells[label[x]].push_back(x);
    out.push_back(std::move(cells));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      label[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0) return out;
  label[0] = 0;
  rec(rec, 1, 1);
  return out;
}

inline std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace fixspace::testing

#endif  // FIXSPACE_TEST_SET_PARTITIONS_HPP
