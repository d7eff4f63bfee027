#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orient_shatter {

// Bad user input: malformed graph, invalid parameters, unknown coordinate.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or scan would exceed its configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(what + " (requested " + std::to_string(requested) + ", limit " +
                           std::to_string(limit) + ")"),
        requested_(requested),
        limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

// A theorem-guaranteed relation failed to hold: always an implementation bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orient_shatter
