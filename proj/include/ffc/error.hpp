#pragma once

#include <stdexcept>
#include <string>

namespace ffc {

enum class ErrorKind {
  malformed,    // unparsable or invariant-violating input
  size_limit,   // partition-lattice cap exceeded
  dimension,    // mismatched degrees / ground sets
  domain,       // mathematically undefined request
  index,        // sequence too short for the requested order
  convergence,  // numeric iteration failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ffc
