#pragma once

#include <stdexcept>
#include <string>

namespace psub {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cycle notation or file content could not be parsed.
struct parse_error : error {
  using error::error;
};

// Degree mismatch or a non-bijective image list.
struct invalid_permutation : error {
  using error::error;
};

// Enumeration would exceed the configured element or lattice-node cap.
struct cap_exceeded : error {
  using error::error;
};

struct not_a_subgroup : error {
  using error::error;
};

struct not_normal : error {
  using error::error;
};

struct no_such_prime : error {
  using error::error;
};

struct unknown_builtin : error {
  using error::error;
};

struct invalid_parameter : error {
  using error::error;
};

struct not_invertible : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

}  // namespace psub
