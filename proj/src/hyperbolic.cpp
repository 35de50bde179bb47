#include "holder/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace holder {

double hyperbolic_distance_disk(const HyperbolicPoint& z1, const HyperbolicPoint& z2) {
    const Complex num = z1.z - z2.z;
    const Complex den = 1.0 - std::conj(z1.z) * z2.z;
    const double p = std::abs(num) / std::abs(den);
    // log((1+p)/(1-p)) = 2 atanh(p); atanh keeps precision for small p.
    return 2.0 * std::atanh(std::min(p, 1.0 - 1e-17));
}

double hyperbolic_distance_domain(const ConformalMap& map, Complex w1, Complex w2) {
    if (!map.has_inverse())
        throw NoInverse("hyperbolic_distance_domain: map has no inverse");
    const Complex z1 = map.inverse(w1);
    const Complex z2 = map.inverse(w2);
    if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0))
        throw PreimageNotInDisk("hyperbolic_distance_domain: preimage outside disk");
    return hyperbolic_distance_disk(HyperbolicPoint(z1), HyperbolicPoint(z2));
}

double hyperbolic_density_pushforward(const ConformalMap& map, const HyperbolicPoint& z) {
    const double dz = std::abs(map.deriv(z.z));
    if (dz == 0.0 || !std::isfinite(dz))
        throw ZeroDerivative("hyperbolic_density_pushforward: |map'| is zero");
    return (2.0 / (1.0 - std::norm(z.z))) / dz;
}

PolylinePath radial_geodesic(double theta, double t0, double t1) {
    if (!(0.0 <= t0 && t0 < t1 && t1 < 1.0))
        throw BadParameter("radial_geodesic: need 0 <= t0 < t1 < 1");
    const double u0 = 1.0 - t0, u1 = 1.0 - t1;
    const int n = std::max(16, int(std::ceil(16.0 * std::log2(u0 / u1))));
    const Complex dir = std::polar(1.0, theta);
    std::vector<ExtendedComplex> vs;
    vs.reserve(n + 1);
    for (int j = 0; j <= n; ++j) {
        // geometric spacing in 1-t, accumulating at the unit circle
        const double u = u0 * std::pow(u1 / u0, double(j) / n);
        vs.emplace_back(dir * (1.0 - u));
    }
    return PolylinePath::through(std::move(vs), 2);
}

}  // namespace holder
