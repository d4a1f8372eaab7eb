#pragma once

#include <vector>

#include "geokit/point.hpp"

namespace geokit {

/// Closed recursive description of a space instance:
///   pnorm(dim, p)  - R^dim with the p-norm (p > 1), affine convex structure
///   half_plane()   - Poincare upper half-plane
///   product(...)   - product of factor spaces with the l2 combination metric
///
/// Capability flags are derived from the structure:
///   has_pi      - a pairing pi is available (pnorm, half_plane, products of
///                 has_pi factors)
///   claims_cat0 - half_plane, pnorm with p == 2, products of such
class Space {
 public:
  enum class Kind { pnorm, half_plane, product };

  static Space pnorm(int dim, double p);
  static Space half_plane();
  static Space product(std::vector<Space> factors);

  Kind kind() const { return kind_; }
  bool is_pnorm() const { return kind_ == Kind::pnorm; }
  bool is_half_plane() const { return kind_ == Kind::half_plane; }
  bool is_product() const { return kind_ == Kind::product; }

  int dim() const;
  double p() const;
  const std::vector<Space>& factors() const;

  bool has_pi() const;
  bool claims_cat0() const;

  // Human-readable form, e.g. "product[halfplane, pnorm(2,3)]".
  std::string describe() const;

  bool operator==(const Space& other) const;

 private:
  Space() = default;
  Kind kind_ = Kind::pnorm;
  int dim_ = 0;
  double p_ = 0.0;
  std::vector<Space> factors_;
};

}  // namespace geokit
