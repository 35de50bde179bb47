#pragma once

#include "holder/conformal_map.hpp"
#include "holder/polyline.hpp"

namespace holder {

/// A point strictly inside the unit disk.
struct HyperbolicPoint {
    Complex z;
    explicit HyperbolicPoint(Complex v) : z(v) {
        if (!(std::abs(v) < 1.0))
            throw OutOfDomain("HyperbolicPoint: |z| >= 1");
    }
};

/// Poincare distance in the disk: log((1+p)/(1-p)) with p the Mobius-invariant
/// pseudodistance |(z1-z2)/(1 - conj(z1) z2)|.
double hyperbolic_distance_disk(const HyperbolicPoint& z1, const HyperbolicPoint& z2);

/// Hyperbolic distance in the image domain of `map`, computed through the
/// registered inverse. Throws NoInverse / PreimageNotInDisk.
double hyperbolic_distance_domain(const ConformalMap& map, Complex w1, Complex w2);

/// Density of the image domain at map(z): (2/(1-|z|^2)) / |map'(z)|.
double hyperbolic_density_pushforward(const ConformalMap& map, const HyperbolicPoint& z);

/// Polyline along the radius t e^{i theta}, t in [t0, t1], with geometric
/// vertex spacing accumulating at |z| = 1.
PolylinePath radial_geodesic(double theta, double t0, double t1);

/// Hyperbolic geodesic realized as the Mobius image of a diameter:
/// at(t) = (t e^{i phi} + a) / (1 + conj(a) t e^{i phi}), t in [-1, 1].
/// Endpoints at(±1) lie on the unit circle.
struct DiskGeodesic {
    Complex a;   // |a| < 1
    double phi;
    Complex at(double t) const {
        const Complex v = std::polar(1.0, phi) * t;
        return (v + a) / (1.0 + std::conj(a) * v);
    }
};

}  // namespace holder
