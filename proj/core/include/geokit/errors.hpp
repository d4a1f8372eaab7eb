#pragma once

#include <stdexcept>

namespace geokit {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point does not match the shape required by the space descriptor.
struct shape_error : error {
  using error::error;
};

// A coordinate lies outside the carrier set (e.g. half-plane x2 <= 0).
struct domain_error : error {
  using error::error;
};

// A scalar argument lies outside its documented range.
struct range_error : error {
  using error::error;
};

// The space does not support the requested operation (e.g. no pairing).
struct capability_error : error {
  using error::error;
};

// Malformed configuration text.
struct parse_error : error {
  using error::error;
};

// Fixed-point iteration exceeded its budget without converging.
struct nonconvergence_error : error {
  using error::error;
};

// A rejection sampler exceeded its attempt budget.
struct sampler_error : error {
  using error::error;
};

}  // namespace geokit
