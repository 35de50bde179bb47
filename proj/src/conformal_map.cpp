#include "holder/conformal_map.hpp"

#include <cmath>
#include <cstdio>

namespace holder {

namespace {

std::string format_theta(double theta) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", theta);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// SectorMap

SectorMap::SectorMap(double theta) : theta_(theta), beta_(theta / M_PI) {
    if (!(theta > 0.0) || theta > 2.0 * M_PI + 1e-12)
        throw BadParameter("sector: theta must lie in (0, 2*pi]");
}

std::string SectorMap::name() const { return "sector:" + format_theta(theta_); }

Complex SectorMap::eval(Complex z) const {
    return std::pow((1.0 + z) / (1.0 - z), beta_);
}

Complex SectorMap::deriv(Complex z) const {
    const Complex m = 1.0 - z;
    return beta_ * std::pow((1.0 + z) / m, beta_ - 1.0) * 2.0 / (m * m);
}

Complex SectorMap::inverse(Complex w) const {
    const Complex xi = std::pow(w, 1.0 / beta_);
    return (xi - 1.0) / (xi + 1.0);
}

LogPolar SectorMap::eval_log_polar(double u, double theta) const {
    const Complex p = one_plus_z(u, theta);
    const Complex m = one_minus_z(u, theta);
    return {beta_ * (std::log(std::abs(p)) - std::log(std::abs(m))),
            beta_ * (std::arg(p) - std::arg(m))};
}

// ---------------------------------------------------------------------------
// KoebeMap

Complex KoebeMap::eval(Complex z) const {
    const Complex m = 1.0 - z;
    return z / (m * m);
}

Complex KoebeMap::deriv(Complex z) const {
    const Complex m = 1.0 - z;
    return (1.0 + z) / (m * m * m);
}

Complex KoebeMap::inverse(Complex w) const {
    if (w == Complex(0.0, 0.0)) return {0.0, 0.0};
    return (2.0 * w + 1.0 - std::sqrt(4.0 * w + 1.0)) / (2.0 * w);
}

LogPolar KoebeMap::eval_log_polar(double u, double theta) const {
    const Complex m = one_minus_z(u, theta);
    return {std::log1p(-u) - 2.0 * std::log(std::abs(m)), theta - 2.0 * std::arg(m)};
}

// ---------------------------------------------------------------------------
// StripMap

Complex StripMap::eval(Complex z) const { return std::log((1.0 + z) / (1.0 - z)); }

Complex StripMap::deriv(Complex z) const { return 2.0 / ((1.0 - z) * (1.0 + z)); }

Complex StripMap::inverse(Complex w) const { return std::tanh(0.5 * w); }

LogPolar StripMap::eval_log_polar(double u, double theta) const {
    const Complex p = one_plus_z(u, theta);
    const Complex m = one_minus_z(u, theta);
    const double re = std::log(std::abs(p)) - std::log(std::abs(m));
    const double im = std::arg(p) - std::arg(m);
    return {std::log(std::hypot(re, im)), std::atan2(im, re)};
}

// ---------------------------------------------------------------------------
// TranslatedMap

LogPolar TranslatedMap::eval_log_polar(double u, double theta) const {
    const LogPolar lp = inner_->eval_log_polar(u, theta);
    // Past this magnitude the offset perturbs log|w| by less than 1e-24.
    if (lp.log_abs > 60.0) return lp;
    const Complex w = std::exp(lp.log_abs) * Complex(std::cos(lp.arg), std::sin(lp.arg)) +
                      offset_;
    const double aw = std::abs(w);
    if (aw == 0.0) return {-745.0, 0.0};
    return {std::log(aw), std::arg(w)};
}

}  // namespace holder
