#pragma once

#include <functional>
#include <vector>

#include "holder/extended_complex.hpp"

namespace holder {

/// A bounded planar region carried by a membership predicate and a
/// boundary-distance evaluator (consistent: dist > 0 on members).
struct GridRegion {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
    int base_cells = 16;  // cells per side at depth 0; keeps cell < side/8
    std::function<bool(Complex)> contains;
    std::function<double(Complex)> boundary_dist;

    double cell_size(int depth) const;
};

struct QhResult {
    double value = 0.0;
    double error = 0.0;  // difference between the two finest depths
};

/// Quasi-hyperbolic distance by Dijkstra on an 8-connected grid graph with
/// edge weight = Euclidean edge length x mean of 1/dist at the endpoints.
/// Endpoints snap to the nearest member nodes; snap segments are costed with
/// the same rule. Throws NotInRegion / DisconnectedEndpoints.
QhResult quasihyperbolic_distance(const GridRegion& region, Complex w1, Complex w2,
                                  int depth);

/// Single-source variant at one fixed depth: distances from `source` to each
/// target. Unreachable targets come back as +infinity.
std::vector<double> quasihyperbolic_distances(const GridRegion& region, Complex source,
                                              const std::vector<Complex>& targets,
                                              int depth);

}  // namespace holder
