#ifndef FIXSPACE_TEST_ERROR_KIND_HPP
#define FIXSPACE_TEST_ERROR_KIND_HPP

#include <optional>
#include <string>

#include "fixspace/error.hpp"

namespace fixspace::testing {

// Kind of the fixspace::Error thrown by fn, or "" when nothing is thrown.
template <class Fn>
std::string kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

template <class Fn>
std::optional<Error> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

inline std::optional<std::int64_t> witness_value(const Error& e, const std::string& key) {
  for (const auto& [k, v] : e.witness())
    if (k == key) return v;
  return std::nullopt;
}

}  // namespace fixspace::testing

#endif  // FIXSPACE_TEST_ERROR_KIND_HPP
