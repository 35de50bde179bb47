#pragma once

#include <optional>
#include <vector>

#include "holder/extended_complex.hpp"
#include "holder/polyline.hpp"

namespace holder {

class ConformalMap;

/// Chordal distance on the Riemann sphere, range [0, 2].
double chordal_distance(const ExtendedComplex& z, const ExtendedComplex& w);

/// Geodesic (spherical) distance, range [0, pi]. Closed form 2*asin(chi/2);
/// validated against the path-infimum definition in the test suite.
double spherical_distance(const ExtendedComplex& z, const ExtendedComplex& w);

struct PathLength {
    double value = 0.0;
    double error = 0.0;  // difference between the two finest refinement levels
};

/// Spherical length of a polyline, optionally pushed through a map defined
/// on the unit disk. Composite Gauss-Legendre (4 nodes per subdivision) at
/// two refinement levels; the finer value is returned.
/// A trailing/leading infinite vertex is interpreted as radial continuation
/// to ∞ and handled through the inversion z -> 1/z, which preserves the
/// spherical density.
PathLength spherical_path_length(const PolylinePath& path,
                                 const ConformalMap* map = nullptr);

/// f#(z) = 2|f'(z)| / (1 + |f(z)|^2); requires |z| < 1.
double spherical_derivative(const ConformalMap& map, const ExtendedComplex& z);

struct SigmaDistance {
    double value = 0.0;
    double uncertainty = 0.0;  // (pi/2) * net mesh, from the chordal/spherical sandwich
};

/// Spherical distance from w to a sampled boundary set declared to be a
/// delta-net in the chordal metric.
SigmaDistance dist_sigma_to_boundary(const ExtendedComplex& w,
                                     const std::vector<ExtendedComplex>& boundary,
                                     double net_delta);

}  // namespace holder
