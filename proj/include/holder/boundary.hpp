#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "holder/extended_complex.hpp"
#include "holder/kdtree.hpp"

namespace holder {

/// One connected boundary piece, parameterized over s in [0,1]. Ends flagged
/// at infinity are open: at(s) is only evaluable for s strictly inside.
struct BoundaryCurve {
    std::function<Complex(double)> at;
    bool starts_at_infinity = false;
    bool ends_at_infinity = false;
};

/// Certified sample net of a curve family. Adjacent samples along each
/// curve are within `certified_delta` of each other in the build metric
/// (chordal or Euclidean), and escaping tails are covered through the point
/// at infinity.
class BoundaryNet {
  public:
    enum class Metric { Chordal, Euclidean };

    struct Sample {
        double s;
        Complex z;
    };

    struct Component {
        BoundaryCurve curve;
        std::vector<Sample> samples;
        KdTree<3> sphere_tree;   // built for chordal nets
        KdTree<2> planar_tree;   // built for euclidean nets
    };

    BoundaryNet(std::vector<BoundaryCurve> curves, double delta, Metric metric);

    const std::vector<Component>& components() const { return components_; }
    double requested_delta() const { return requested_delta_; }
    double certified_delta() const { return certified_delta_; }
    Metric metric() const { return metric_; }
    std::size_t total_samples() const;

    /// Flattened point set (the spec-level "boundary sampler" output).
    std::vector<ExtendedComplex> flat_points() const;

  private:
    std::vector<Component> components_;
    double requested_delta_;
    double certified_delta_;
    Metric metric_;
};

struct RefinedDistance {
    double value = 0.0;
    double uncertainty = 0.0;
};

/// Distance-to-boundary evaluator: coarse bracketing on the certified net,
/// then golden-section refinement on the exact parametric curve. Falls back
/// to the net-level uncertainty when basin coverage cannot be certified.
class BoundaryOracle {
  public:
    BoundaryOracle(std::vector<BoundaryCurve> curves, double delta,
                   BoundaryNet::Metric metric);

    const BoundaryNet& net() const { return *net_; }

    /// Spherical distance to the boundary (chordal-metric net required).
    RefinedDistance sigma_dist(const ExtendedComplex& w) const;

    /// Euclidean distance to the boundary (euclidean-metric net required).
    RefinedDistance euclid_dist(Complex w) const;

  private:
    std::shared_ptr<BoundaryNet> net_;
};

}  // namespace holder
