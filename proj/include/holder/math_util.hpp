#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace holder {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    std::size_t n = 0;
};

/// Ordinary least squares of y against x.
inline LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit f;
    f.n = x.size();
    if (f.n < 2) return f;
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < f.n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / double(f.n), my = sy / double(f.n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    f.slope = sxx > 0 ? sxy / sxx : 0.0;
    f.intercept = my - f.slope * mx;
    double rr = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        rr += r * r;
    }
    f.residual_rms = std::sqrt(rr / double(f.n));
    return f;
}

/// Golden-section minimization of a unimodal function on [a, b].
inline double golden_min(const std::function<double(double)>& fn, double a, double b,
                         int iters = 80) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int i = 0; i < iters && (b - a) > 1e-14 * (1.0 + std::abs(a) + std::abs(b)); ++i) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = fn(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

/// Bisection for a sign change of fn on [a, b]; requires fn(a), fn(b) of
/// opposite sign (or zero). Returns the midpoint of the final bracket.
inline double bisect(const std::function<double(double)>& fn, double a, double b,
                     int iters) {
    double fa = fn(a);
    for (int i = 0; i < iters; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = fn(m);
        if ((fa <= 0 && fm <= 0) || (fa >= 0 && fm >= 0)) {
            a = m; fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

inline double sqr(double x) { return x * x; }

}  // namespace holder
