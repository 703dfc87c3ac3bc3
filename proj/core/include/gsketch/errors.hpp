// errors.hpp - exception types shared by the gsketch library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsketch {

/// Raised when a shortest path is requested between nodes in different
/// components.
class NoPathError : public std::runtime_error {
 public:
  NoPathError(std::uint32_t u, std::uint32_t v)
      : std::runtime_error("no path between " + std::to_string(u) + " and " +
                           std::to_string(v)),
        u_(u),
        v_(v) {}

  std::uint32_t u() const noexcept { return u_; }
  std::uint32_t v() const noexcept { return v_; }

 private:
  std::uint32_t u_;
  std::uint32_t v_;
};

/// Input violates a documented precondition of a construction.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction reached a state its correctness argument rules out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gsketch
