#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tamari {

// Raised on malformed input or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a structural check. An empty message means the object is valid.
struct Validation {
  bool ok = true;
  std::string message;

  static Validation pass() { return {}; }
  static Validation fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace tamari
