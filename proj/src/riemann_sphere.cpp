#include "holder/riemann_sphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "holder/conformal_map.hpp"

namespace holder {

namespace {

// 4-node Gauss-Legendre abscissae/weights on [-1, 1].
constexpr double kGlNodes[4] = {-0.8611363115940526, -0.3399810435848563,
                                0.3399810435848563, 0.8611363115940526};
constexpr double kGlWeights[4] = {0.3478548451374538, 0.6521451548625461,
                                  0.6521451548625461, 0.3478548451374538};

double abs_safe(const Complex& z) { return std::hypot(z.real(), z.imag()); }

// Composite GL4 of fn over [0,1] split into n panels.
double gl_composite(const std::function<double(double)>& fn, int n) {
    double sum = 0.0;
    const double h = 1.0 / n;
    for (int i = 0; i < n; ++i) {
        const double mid = (i + 0.5) * h;
        double panel = 0.0;
        for (int j = 0; j < 4; ++j)
            panel += kGlWeights[j] * fn(mid + 0.5 * h * kGlNodes[j]);
        sum += panel * 0.5 * h;
    }
    return sum;
}

// Spherical length of the straight segment [a, b], both finite.
double segment_length_free(Complex a, Complex b, int n) {
    const Complex d = b - a;
    const double len = abs_safe(d);
    auto fn = [&](double t) {
        const Complex z = a + t * d;
        const double m2 = z.real() * z.real() + z.imag() * z.imag();
        return 2.0 * len / (1.0 + m2);
    };
    return gl_composite(fn, n);
}

// Spherical length of the image under `map` of the straight segment [a, b]
// inside the unit disk.
double segment_length_mapped(const ConformalMap& map, Complex a, Complex b, int n) {
    const Complex d = b - a;
    const double len = abs_safe(d);
    auto fn = [&](double t) {
        const Complex z = a + t * d;
        if (abs_safe(z) >= 1.0)
            throw NonFiniteIntegrand("spherical_path_length: node outside the unit disk");
        const double fs = spherical_derivative(map, ExtendedComplex(z));
        if (!std::isfinite(fs))
            throw NonFiniteIntegrand("spherical_path_length: non-finite integrand");
        return fs * len;
    };
    return gl_composite(fn, n);
}

}  // namespace

double chordal_distance(const ExtendedComplex& z, const ExtendedComplex& w) {
    if (!z.is_finite() && !w.is_finite()) return 0.0;
    if (!z.is_finite() || !w.is_finite()) {
        const Complex v = (z.is_finite() ? z : w).value();
        return 2.0 / std::hypot(1.0, abs_safe(v));
    }
    Complex a = z.value(), b = w.value();
    if (a == b) return 0.0;
    // Inversion is a sphere isometry; use it when |a-b| could overflow.
    if (abs_safe(a) > 1e150 && abs_safe(b) > 1e150) {
        a = 1.0 / a;
        b = 1.0 / b;
    }
    const double num = 2.0 * abs_safe(a - b);
    const double den = std::hypot(1.0, abs_safe(a)) * std::hypot(1.0, abs_safe(b));
    return std::clamp(num / den, 0.0, 2.0);
}

double spherical_distance(const ExtendedComplex& z, const ExtendedComplex& w) {
    const double chi = chordal_distance(z, w);
    return 2.0 * std::asin(std::clamp(0.5 * chi, 0.0, 1.0));
}

PathLength spherical_path_length(const PolylinePath& path, const ConformalMap* map) {
    path.validate();
    double coarse = 0.0, fine = 0.0;
    for (std::size_t seg = 0; seg + 1 < path.vertices.size(); ++seg) {
        const ExtendedComplex& pa = path.vertices[seg];
        const ExtendedComplex& pb = path.vertices[seg + 1];
        const int n = std::max(1, path.subdivision(seg));
        if (map != nullptr) {
            if (!pa.is_finite() || !pb.is_finite())
                throw NonFiniteIntegrand(
                    "spherical_path_length: infinite vertex under a disk map");
            coarse += segment_length_mapped(*map, pa.value(), pb.value(), n);
            fine += segment_length_mapped(*map, pa.value(), pb.value(), 2 * n);
            continue;
        }
        if (pa.is_finite() && pb.is_finite()) {
            coarse += segment_length_free(pa.value(), pb.value(), n);
            fine += segment_length_free(pa.value(), pb.value(), 2 * n);
        } else {
            // Radial continuation to ∞: the inversion z -> 1/z preserves the
            // spherical density and sends the outward ray from v to [1/v, 0].
            const Complex v = (pa.is_finite() ? pa : pb).value();
            if (v == Complex(0.0, 0.0))
                throw NonFiniteIntegrand(
                    "spherical_path_length: ray from 0 to ∞ is ambiguous");
            coarse += segment_length_free(1.0 / v, Complex(0.0, 0.0), n);
            fine += segment_length_free(1.0 / v, Complex(0.0, 0.0), 2 * n);
        }
    }
    return {fine, std::abs(fine - coarse)};
}

double spherical_derivative(const ConformalMap& map, const ExtendedComplex& z) {
    if (!z.is_finite() || abs_safe(z.value()) >= 1.0)
        throw OutOfDomain("spherical_derivative: point outside the unit disk");
    const Complex v = z.value();
    const Complex w = map.eval(v);
    const Complex d = map.deriv(v);
    const double aw = abs_safe(w);
    if (aw > 1e150) {
        // 2|f'| / (1+|f|^2) ~ 2|f'|/|f|^2 without overflowing |f|^2.
        const double inv = 1.0 / aw;
        return 2.0 * abs_safe(d) * inv * inv;
    }
    return 2.0 * abs_safe(d) / (1.0 + aw * aw);
}

SigmaDistance dist_sigma_to_boundary(const ExtendedComplex& w,
                                     const std::vector<ExtendedComplex>& boundary,
                                     double net_delta) {
    if (boundary.empty())
        throw EmptyBoundary("dist_sigma_to_boundary: empty boundary sample");
    double min_chi = 4.0;
    for (const auto& b : boundary) min_chi = std::min(min_chi, chordal_distance(w, b));
    const double sigma = 2.0 * std::asin(std::clamp(0.5 * min_chi, 0.0, 1.0));
    return {sigma, 0.5 * M_PI * net_delta};
}

}  // namespace holder
