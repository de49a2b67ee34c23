#ifndef FIXSPACE_ERROR_HPP
#define FIXSPACE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fixspace {

/// A named failure carrying machine-readable witness data.
///
/// `kind()` is a stable identifier such as "NotAssociative" or
/// "NotInvariant"; `witness()` lists the offending indices (elements,
/// points, generator positions) in the order they were found.
class Error : public std::runtime_error {
 public:
  using Witness = std::vector<std::pair<std::string, std::int64_t>>;

  Error(std::string kind, std::string message, Witness witness = {})
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        message_(std::move(message)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::string message_;
  Witness witness_;
};

}  // namespace fixspace

#endif  // FIXSPACE_ERROR_HPP
