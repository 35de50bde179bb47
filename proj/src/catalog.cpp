#include "holder/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace holder {

namespace {

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

BoundaryCurve ray_curve(Complex apex, double phi) {
    BoundaryCurve c;
    c.at = [apex, phi](double s) {
        const double t = std::tan(0.5 * M_PI * s);
        return apex + std::polar(t * t, phi);
    };
    c.ends_at_infinity = true;
    return c;
}

double dist_to_ray(Complex w, Complex apex, double phi) {
    const Complex u = (w - apex) * std::polar(1.0, -phi);
    if (u.real() >= 0.0) return std::abs(u.imag());
    return std::abs(u);
}

DomainSpec sector_spec(double theta, Complex offset, bool translated) {
    if (!(theta > 0.0) || theta > 2.0 * M_PI + 1e-12)
        throw BadParameter("sector: theta must lie in (0, 2*pi]");
    DomainSpec d;
    MapPtr base = std::make_shared<SectorMap>(theta);
    if (translated) {
        d.map = std::make_shared<TranslatedMap>(base, offset);
        d.name = "sector:" + fmt_g(theta) + ":offset=" + fmt_g(offset.real()) + "," +
                 fmt_g(offset.imag());
    } else {
        d.map = base;
        d.name = "sector:" + fmt_g(theta);
    }

    const double half = 0.5 * theta;
    d.contains = [half, offset](Complex w) {
        const Complex v = w - offset;
        if (v == Complex(0.0, 0.0)) return false;
        return std::abs(std::arg(v)) < half;
    };
    d.euclid_dist_to_boundary = [half, offset](Complex w) {
        const double d1 = dist_to_ray(w, offset, half);
        const double d2 = dist_to_ray(w, offset, -half);
        return std::min(d1, d2);
    };
    if (theta >= 2.0 * M_PI - 1e-12) {
        d.boundary_curves = {ray_curve(offset, M_PI)};
    } else {
        d.boundary_curves = {ray_curve(offset, half), ray_curve(offset, -half)};
    }

    d.known_alpha = std::min(theta / M_PI, 1.0);
    d.known_alpha_note = theta < M_PI ? "S_theta is theta/pi-Holder for theta < pi"
                                      : "S_theta is 1-Holder for theta >= pi";
    d.known_hardy = M_PI / theta;
    d.known_hardy_note = "h(S_theta) = pi/theta";
    if (translated) {
        d.known_alpha_note += "; translation-invariant";
        d.known_hardy_note += "; translation-invariant";
    }
    d.contains_origin = d.contains(Complex(0.0, 0.0));
    return d;
}

}  // namespace

DomainSpec make_sector(double theta) { return sector_spec(theta, {0.0, 0.0}, false); }

DomainSpec make_translated_sector(double theta, Complex offset) {
    return sector_spec(theta, offset, true);
}

DomainSpec make_koebe() {
    DomainSpec d;
    d.name = "koebe";
    d.map = std::make_shared<KoebeMap>();
    d.contains = [](Complex w) {
        return !(w.imag() == 0.0 && w.real() <= -0.25);
    };
    d.euclid_dist_to_boundary = [](Complex w) {
        if (w.real() <= -0.25) return std::abs(w.imag());
        return std::abs(w - Complex(-0.25, 0.0));
    };
    BoundaryCurve slit;
    slit.at = [](double s) {
        const double t = std::tan(0.5 * M_PI * s);
        return Complex(-0.25 - t * t, 0.0);
    };
    slit.ends_at_infinity = true;
    d.boundary_curves = {slit};
    d.known_alpha = 1.0;
    d.known_alpha_note = "affine image of the slit plane S_{2pi}";
    d.known_hardy = 0.5;
    d.known_hardy_note = "affine image of S_{2pi}; Hardy number is affine-invariant";
    d.contains_origin = true;
    return d;
}

DomainSpec make_strip() {
    DomainSpec d;
    d.name = "strip";
    d.map = std::make_shared<StripMap>();
    d.contains = [](Complex w) { return std::abs(w.imag()) < 0.5 * M_PI; };
    d.euclid_dist_to_boundary = [](Complex w) {
        return std::abs(0.5 * M_PI - std::abs(w.imag()));
    };
    for (const double side : {0.5 * M_PI, -0.5 * M_PI}) {
        BoundaryCurve line;
        line.at = [side](double s) {
            return Complex(std::tan(M_PI * (s - 0.5)), side);
        };
        line.starts_at_infinity = true;
        line.ends_at_infinity = true;
        d.boundary_curves.push_back(line);
    }
    d.known_alpha_none = true;
    d.known_alpha_note = "no alpha: the Riemann map decays only logarithmically "
                         "toward the prime ends at infinity";
    d.known_hardy_infinite = true;
    d.known_hardy_note = "hyperbolic distance to C_r grows superlogarithmically";
    d.contains_origin = true;
    return d;
}

DomainSpec parse_domain(const std::string& name) {
    if (name == "koebe") return make_koebe();
    if (name == "strip") return make_strip();
    if (name.rfind("sector:", 0) == 0) {
        const std::string rest = name.substr(7);
        const auto colon = rest.find(':');
        const std::string theta_str = rest.substr(0, colon);
        char* end = nullptr;
        const double theta = std::strtod(theta_str.c_str(), &end);
        if (end == theta_str.c_str() || *end != '\0')
            throw BadParameter("cannot parse sector angle '" + theta_str + "'");
        if (colon == std::string::npos) return make_sector(theta);
        const std::string tail = rest.substr(colon + 1);
        if (tail.rfind("offset=", 0) != 0)
            throw BadParameter("expected offset=<re>,<im> in '" + name + "'");
        const std::string vals = tail.substr(7);
        const auto comma = vals.find(',');
        if (comma == std::string::npos)
            throw BadParameter("expected offset=<re>,<im> in '" + name + "'");
        const double re = std::strtod(vals.substr(0, comma).c_str(), nullptr);
        const double im = std::strtod(vals.substr(comma + 1).c_str(), nullptr);
        return make_translated_sector(theta, {re, im});
    }
    throw UnknownDomain("unknown domain '" + name + "'");
}

std::vector<DomainSpec> default_catalog() {
    std::vector<DomainSpec> cat;
    for (const double theta : {0.25 * M_PI, 0.5 * M_PI, 0.75 * M_PI, M_PI,
                               1.5 * M_PI, 2.0 * M_PI})
        cat.push_back(make_sector(theta));
    cat.push_back(make_koebe());
    cat.push_back(make_strip());
    cat.push_back(make_translated_sector(0.5 * M_PI, {5.0, 0.0}));
    return cat;
}

// ---------------------------------------------------------------------------
// DomainSpec

std::vector<ExtendedComplex> DomainSpec::boundary_net_points(double delta) const {
    return BoundaryNet(boundary_curves, delta, BoundaryNet::Metric::Chordal)
        .flat_points();
}

std::shared_ptr<const BoundaryOracle> DomainSpec::sigma_oracle(double delta) const {
    if (!cached_oracle_ || cached_oracle_delta_ != delta) {
        cached_oracle_ = std::make_shared<BoundaryOracle>(
            boundary_curves, delta, BoundaryNet::Metric::Chordal);
        cached_oracle_delta_ = delta;
    }
    return cached_oracle_;
}

double DomainSpec::dist_origin_to_complement() const {
    if (!contains(Complex(0.0, 0.0))) return 0.0;
    return euclid_dist_to_boundary(Complex(0.0, 0.0));
}

}  // namespace holder
