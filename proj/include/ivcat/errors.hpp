#pragma once

#include <stdexcept>
#include <string>

namespace ivcat {

/// Malformed input: bad interval, unknown operation letter, unparsable file.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit (bit cap, materialization cap) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ivcat
