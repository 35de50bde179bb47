#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "holder/boundary.hpp"
#include "holder/conformal_map.hpp"

namespace holder {

/// An unbounded simply connected domain together with its Riemann map,
/// boundary access, and whatever ground truth is known for it.
struct DomainSpec {
    std::string name;
    MapPtr map;

    std::function<bool(Complex)> contains;
    std::function<double(Complex)> euclid_dist_to_boundary;  // analytic, may be null
    std::vector<BoundaryCurve> boundary_curves;

    std::optional<double> known_alpha;
    std::string known_alpha_note;
    bool known_alpha_none = false;  // established non-Holder (vs merely unknown)

    std::optional<double> known_hardy;
    bool known_hardy_infinite = false;
    std::string known_hardy_note;

    bool contains_origin = false;

    Complex base_point() const { return map->base_point(); }

    /// Chordal delta-net of the boundary (flat point set, spec operation).
    std::vector<ExtendedComplex> boundary_net_points(double delta) const;

    /// Shared chordal-net oracle, built lazily per mesh and cached.
    std::shared_ptr<const BoundaryOracle> sigma_oracle(double delta) const;

    /// dist(0, C \ D): zero when the origin is outside D, else the analytic
    /// boundary distance at the origin.
    double dist_origin_to_complement() const;

  private:
    mutable std::shared_ptr<const BoundaryOracle> cached_oracle_;
    mutable double cached_oracle_delta_ = -1.0;
};

}  // namespace holder
