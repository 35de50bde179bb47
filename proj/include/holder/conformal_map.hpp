#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <string>

#include "holder/extended_complex.hpp"

namespace holder {

/// log|f| and arg f; usable where |f| itself would over/underflow.
struct LogPolar {
    double log_abs = 0.0;
    double arg = 0.0;
};

/// 1 + (1-u) e^{i theta}, cancellation-free for small u and theta near pi.
inline Complex one_plus_z(double u, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double ch = std::cos(0.5 * theta);
    return Complex(2.0 * ch * ch - u * c, (1.0 - u) * s);
}

/// 1 - (1-u) e^{i theta}, cancellation-free for small u and theta near 0.
inline Complex one_minus_z(double u, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const double sh = std::sin(0.5 * theta);
    return Complex(2.0 * sh * sh + u * c, -(1.0 - u) * s);
}

/// Analytic univalent map of the unit disk. Evaluation may overflow to a
/// non-finite complex for points mapping extremely close to ∞; callers that
/// care route through ExtendedComplex::projective.
class ConformalMap {
  public:
    virtual ~ConformalMap() = default;

    virtual std::string name() const = 0;
    virtual Complex eval(Complex z) const = 0;
    virtual Complex deriv(Complex z) const = 0;

    virtual bool has_inverse() const { return false; }
    virtual Complex inverse(Complex) const {
        throw NoInverse("map '" + name() + "' has no registered inverse");
    }

    Complex base_point() const { return eval(Complex(0.0, 0.0)); }

    /// Evaluation at z = (1-u) e^{i theta} in log-polar form. The default
    /// adapter loses accuracy once u drops below ~1e-12; catalog maps
    /// override with forms stable down to u ~ 1e-300.
    virtual LogPolar eval_log_polar(double u, double theta) const {
        const Complex z = (1.0 - u) * Complex(std::cos(theta), std::sin(theta));
        const Complex w = eval(z);
        return {std::log(std::abs(w)), std::arg(w)};
    }

    double log_abs_polar(double u, double theta) const {
        return eval_log_polar(u, theta).log_abs;
    }
};

using MapPtr = std::shared_ptr<const ConformalMap>;

class IdentityMap final : public ConformalMap {
  public:
    std::string name() const override { return "identity"; }
    Complex eval(Complex z) const override { return z; }
    Complex deriv(Complex) const override { return {1.0, 0.0}; }
    bool has_inverse() const override { return true; }
    Complex inverse(Complex w) const override { return w; }
};

/// z -> a z (test fixture; a != 0).
class ScaleMap final : public ConformalMap {
  public:
    explicit ScaleMap(Complex a) : a_(a) {}
    std::string name() const override { return "scale"; }
    Complex eval(Complex z) const override { return a_ * z; }
    Complex deriv(Complex) const override { return a_; }
    bool has_inverse() const override { return true; }
    Complex inverse(Complex w) const override { return w / a_; }

  private:
    Complex a_;
};

/// Disk automorphism z -> e^{i phi} (z - a)/(1 - conj(a) z), |a| < 1.
class DiskAutomorphism final : public ConformalMap {
  public:
    DiskAutomorphism(Complex a, double phi) : a_(a), rot_(std::polar(1.0, phi)) {
        if (std::abs(a) >= 1.0) throw BadParameter("DiskAutomorphism: |a| >= 1");
    }
    std::string name() const override { return "disk-automorphism"; }
    Complex eval(Complex z) const override {
        return rot_ * (z - a_) / (1.0 - std::conj(a_) * z);
    }
    Complex deriv(Complex z) const override {
        const Complex d = 1.0 - std::conj(a_) * z;
        return rot_ * (1.0 - std::norm(a_)) / (d * d);
    }
    bool has_inverse() const override { return true; }
    Complex inverse(Complex w) const override {
        const Complex v = w / rot_;
        return (v + a_) / (1.0 + std::conj(a_) * v);
    }

  private:
    Complex a_;
    Complex rot_;
};

/// g(z) = ((1+z)/(1-z))^{theta/pi}, mapping the disk onto the sector
/// {|Arg w| < theta/2}. Principal branch; (1+z)/(1-z) has positive real
/// part on the disk, so the branch is unambiguous.
class SectorMap final : public ConformalMap {
  public:
    explicit SectorMap(double theta);
    std::string name() const override;
    Complex eval(Complex z) const override;
    Complex deriv(Complex z) const override;
    bool has_inverse() const override { return true; }
    Complex inverse(Complex w) const override;
    LogPolar eval_log_polar(double u, double theta) const override;
    double theta() const { return theta_; }
    double beta() const { return beta_; }  // theta/pi

  private:
    double theta_;
    double beta_;
};

/// Koebe map z/(1-z)^2 onto C minus the slit (-inf, -1/4].
class KoebeMap final : public ConformalMap {
  public:
    std::string name() const override { return "koebe"; }
    Complex eval(Complex z) const override;
    Complex deriv(Complex z) const override;
    bool has_inverse() const override { return true; }
    Complex inverse(Complex w) const override;
    LogPolar eval_log_polar(double u, double theta) const override;
};

/// log((1+z)/(1-z)) onto the strip {|Im w| < pi/2}.
class StripMap final : public ConformalMap {
  public:
    std::string name() const override { return "strip"; }
    Complex eval(Complex z) const override;
    Complex deriv(Complex z) const override;
    bool has_inverse() const override { return true; }
    Complex inverse(Complex w) const override;
    LogPolar eval_log_polar(double u, double theta) const override;
};

/// inner followed by w -> w + offset.
class TranslatedMap final : public ConformalMap {
  public:
    TranslatedMap(MapPtr inner, Complex offset) : inner_(std::move(inner)), offset_(offset) {}
    std::string name() const override { return inner_->name() + "+offset"; }
    Complex eval(Complex z) const override { return inner_->eval(z) + offset_; }
    Complex deriv(Complex z) const override { return inner_->deriv(z); }
    bool has_inverse() const override { return inner_->has_inverse(); }
    Complex inverse(Complex w) const override { return inner_->inverse(w - offset_); }
    LogPolar eval_log_polar(double u, double theta) const override;
    Complex offset() const { return offset_; }
    const ConformalMap& inner() const { return *inner_; }

  private:
    MapPtr inner_;
    Complex offset_;
};

/// h = g ∘ f with g(w) = r/(w - w0); maps the disk onto D' = g(D) with a
/// pole at the preimage of w0 (the disk center when f(0) = w0).
class ReductionMap final : public ConformalMap {
  public:
    ReductionMap(MapPtr f, Complex w0, double r) : f_(std::move(f)), w0_(w0), r_(r) {}
    std::string name() const override { return f_->name() + "/reduced"; }
    Complex eval(Complex z) const override { return r_ / (f_->eval(z) - w0_); }
    Complex deriv(Complex z) const override {
        const Complex d = f_->eval(z) - w0_;
        return -r_ * f_->deriv(z) / (d * d);
    }
    bool has_inverse() const override { return f_->has_inverse(); }
    Complex inverse(Complex zeta) const override {
        return f_->inverse(w0_ + r_ / zeta);
    }

  private:
    MapPtr f_;
    Complex w0_;
    double r_;
};

}  // namespace holder
