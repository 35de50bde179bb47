#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "holder/errors.hpp"

namespace holder {

using Complex = std::complex<double>;

/// A point of the Riemann sphere C ∪ {∞}. Finite points carry a complex
/// value with finite real and imaginary parts; there is exactly one
/// representation of the point at infinity.
class ExtendedComplex {
  public:
    ExtendedComplex() = default;

    ExtendedComplex(Complex v) : value_(v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw BadParameter("ExtendedComplex: non-finite components");
    }
    ExtendedComplex(double x) : ExtendedComplex(Complex(x, 0.0)) {}

    static ExtendedComplex infinity() {
        ExtendedComplex p;
        p.finite_ = false;
        p.value_ = Complex(0.0, 0.0);
        return p;
    }

    /// Collapses any overflowed complex value to the point at infinity.
    static ExtendedComplex projective(Complex v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return infinity();
        return ExtendedComplex(v);
    }

    bool is_finite() const { return finite_; }

    Complex value() const {
        if (!finite_) throw OutOfDomain("ExtendedComplex: value() at infinity");
        return value_;
    }

    friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

  private:
    Complex value_{0.0, 0.0};
    bool finite_ = true;
};

/// Stereographic image on the unit sphere in R^3; ∞ maps to the north pole.
/// Euclidean distance between sphere points equals the chordal distance.
inline std::array<double, 3> sphere_point(const ExtendedComplex& p) {
    if (!p.is_finite()) return {0.0, 0.0, 1.0};
    const Complex z = p.value();
    const double a = std::abs(z);
    if (a > 1e150) {
        // Work through 1/z to avoid overflow of |z|^2.
        const double inv = 1.0 / a;
        const Complex u = std::conj(z) * inv * inv;  // equals 1/z
        return {2.0 * u.real(), -2.0 * u.imag(), 1.0 - 2.0 * inv * inv};
    }
    const double d = 1.0 + a * a;
    return {2.0 * z.real() / d, 2.0 * z.imag() / d, (a * a - 1.0) / d};
}

}  // namespace holder
