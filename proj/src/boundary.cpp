#include "holder/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "holder/math_util.hpp"
#include "holder/riemann_sphere.hpp"

namespace holder {

namespace {

using P3 = std::array<double, 3>;

double dist3(const P3& a, const P3& b) {
    return std::sqrt(sqr(a[0] - b[0]) + sqr(a[1] - b[1]) + sqr(a[2] - b[2]));
}

constexpr P3 kPole = {0.0, 0.0, 1.0};
constexpr std::size_t kMaxSamplesPerComponent = 4'000'000;

struct NetBuilder {
    const BoundaryCurve& curve;
    BoundaryNet::Metric metric;
    double target;
    std::vector<BoundaryNet::Sample>* out;

    double gap(const Complex& a, const Complex& b) const {
        if (metric == BoundaryNet::Metric::Euclidean) return std::abs(a - b);
        return dist3(sphere_point(ExtendedComplex::projective(a)),
                     sphere_point(ExtendedComplex::projective(b)));
    }

    double gap_to_pole(const Complex& a) const {
        return dist3(sphere_point(ExtendedComplex::projective(a)), kPole);
    }

    void emit(double s, const Complex& z) const {
        if (out->size() >= kMaxSamplesPerComponent)
            throw BadParameter("boundary net: sample budget exceeded; mesh too fine");
        out->push_back({s, z});
    }

    // In-order refinement; emits the right endpoint of each final interval.
    void refine(double s0, const Complex& z0, double s1, const Complex& z1,
                int depth) const {
        if ((depth >= 6 && gap(z0, z1) <= target) || s1 - s0 <= 1e-13 || depth >= 52) {
            emit(s1, z1);
            return;
        }
        const double sm = 0.5 * (s0 + s1);
        const Complex zm = curve.at(sm);
        refine(s0, z0, sm, zm, depth + 1);
        refine(sm, zm, s1, z1, depth + 1);
    }

    // Right tail escaping to ∞: subdivide until the last finite sample is
    // chordally within `target` of the pole; everything beyond it is then
    // covered through the pole by the triangle inequality.
    void refine_tail_right(double s0, const Complex& z0, int depth) const {
        if (gap_to_pole(z0) <= target || 1.0 - s0 <= 1e-13 || depth >= 60) return;
        const double sm = 0.5 * (s0 + 1.0);
        const Complex zm = curve.at(sm);
        refine(s0, z0, sm, zm, std::max(depth, 6));
        refine_tail_right(sm, zm, depth + 1);
    }

    void refine_tail_left(double s1, const Complex& z1, int depth) const {
        if (gap_to_pole(z1) <= target || s1 <= 1e-13 || depth >= 60) {
            emit(s1, z1);
            return;
        }
        const double sm = 0.5 * s1;
        const Complex zm = curve.at(sm);
        refine_tail_left(sm, zm, depth + 1);
        refine(sm, zm, s1, z1, std::max(depth, 6));
    }
};

}  // namespace

BoundaryNet::BoundaryNet(std::vector<BoundaryCurve> curves, double delta, Metric metric)
    : requested_delta_(delta), certified_delta_(0.0), metric_(metric) {
    if (!(delta > 0.0)) throw BadParameter("boundary net: delta must be positive");
    for (auto& curve : curves) {
        if (metric == Metric::Euclidean &&
            (curve.starts_at_infinity || curve.ends_at_infinity))
            throw BadParameter("boundary net: euclidean net needs finite curve ends");

        Component comp;
        comp.curve = curve;
        NetBuilder builder{comp.curve, metric, 0.45 * delta, &comp.samples};

        const double s_lo = curve.starts_at_infinity ? 0.25 : 0.0;
        const double s_hi = curve.ends_at_infinity ? 0.75 : 1.0;
        const Complex z_lo = curve.at(s_lo);
        const Complex z_hi = curve.at(s_hi);

        if (curve.starts_at_infinity)
            builder.refine_tail_left(s_lo, z_lo, 0);
        else
            builder.emit(s_lo, z_lo);
        builder.refine(s_lo, z_lo, s_hi, z_hi, 0);
        if (curve.ends_at_infinity) builder.refine_tail_right(s_hi, z_hi, 0);

        // Certify the realized mesh.
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < comp.samples.size(); ++i)
            worst = std::max(worst, builder.gap(comp.samples[i].z, comp.samples[i + 1].z));
        if (curve.starts_at_infinity && !comp.samples.empty())
            worst = std::max(worst, 2.0 * builder.gap_to_pole(comp.samples.front().z));
        if (curve.ends_at_infinity && !comp.samples.empty())
            worst = std::max(worst, 2.0 * builder.gap_to_pole(comp.samples.back().z));
        certified_delta_ = std::max(certified_delta_, worst);

        if (metric == Metric::Chordal) {
            std::vector<std::array<double, 3>> pts;
            pts.reserve(comp.samples.size());
            for (const auto& s : comp.samples)
                pts.push_back(sphere_point(ExtendedComplex::projective(s.z)));
            comp.sphere_tree = KdTree<3>(std::move(pts));
        } else {
            std::vector<std::array<double, 2>> pts;
            pts.reserve(comp.samples.size());
            for (const auto& s : comp.samples)
                pts.push_back({s.z.real(), s.z.imag()});
            comp.planar_tree = KdTree<2>(std::move(pts));
        }
        components_.push_back(std::move(comp));
    }
}

std::size_t BoundaryNet::total_samples() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.samples.size();
    return n;
}

std::vector<ExtendedComplex> BoundaryNet::flat_points() const {
    std::vector<ExtendedComplex> pts;
    pts.reserve(total_samples());
    for (const auto& c : components_)
        for (const auto& s : c.samples) pts.push_back(ExtendedComplex::projective(s.z));
    return pts;
}

// ---------------------------------------------------------------------------
// BoundaryOracle

BoundaryOracle::BoundaryOracle(std::vector<BoundaryCurve> curves, double delta,
                               BoundaryNet::Metric metric)
    : net_(std::make_shared<BoundaryNet>(std::move(curves), delta, metric)) {}

namespace {

// Groups sorted sample indices into contiguous runs (gap <= 3).
std::vector<std::pair<std::size_t, std::size_t>> index_runs(std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (runs.empty() || idx[i] > runs.back().second + 3)
            runs.push_back({idx[i], idx[i]});
        else
            runs.back().second = idx[i];
    }
    return runs;
}

}  // namespace

RefinedDistance BoundaryOracle::sigma_dist(const ExtendedComplex& w) const {
    if (net_->metric() != BoundaryNet::Metric::Chordal)
        throw BadParameter("sigma_dist needs a chordal net");
    const auto q = sphere_point(w);
    constexpr std::size_t kNeighbors = 12;

    double best = M_PI;  // sphere diameter
    double unexplored_lb = M_PI;
    for (const auto& comp : net_->components()) {
        const auto hits = comp.sphere_tree.nearest_k(q, kNeighbors);
        if (hits.empty()) continue;
        std::vector<std::size_t> idx;
        idx.reserve(hits.size());
        for (const auto& h : hits) idx.push_back(h.index);
        for (const auto& [lo, hi] : index_runs(std::move(idx))) {
            const std::size_t n = comp.samples.size();
            double s_lo = comp.samples[lo >= 2 ? lo - 2 : 0].s;
            double s_hi = comp.samples[std::min(hi + 2, n - 1)].s;
            if (lo <= 2 && comp.curve.starts_at_infinity) s_lo = 1e-15;
            if (hi + 3 >= n && comp.curve.ends_at_infinity) s_hi = 1.0 - 1e-15;
            auto fn = [&](double s) {
                return spherical_distance(
                    w, ExtendedComplex::projective(comp.curve.at(s)));
            };
            const double s_min = golden_min(fn, s_lo, s_hi, 70);
            best = std::min(best, fn(s_min));
        }
        best = std::min(best,
                        2.0 * std::asin(std::clamp(
                                  0.5 * std::sqrt(hits.front().dist2), 0.0, 1.0)));
        if (hits.size() == kNeighbors) {
            // Any basin not visited has all net samples beyond the k-th hit.
            const double dk = std::sqrt(hits.back().dist2);
            unexplored_lb =
                std::min(unexplored_lb, dk - net_->certified_delta());
        }
    }
    const double slop = 1e-9 * (1.0 + best);
    if (unexplored_lb >= best) return {best, slop};
    return {best, 0.5 * M_PI * net_->certified_delta()};
}

RefinedDistance BoundaryOracle::euclid_dist(Complex w) const {
    if (net_->metric() != BoundaryNet::Metric::Euclidean)
        throw BadParameter("euclid_dist needs a euclidean net");
    const std::array<double, 2> q = {w.real(), w.imag()};
    constexpr std::size_t kNeighbors = 12;

    double best = std::numeric_limits<double>::infinity();
    double unexplored_lb = std::numeric_limits<double>::infinity();
    for (const auto& comp : net_->components()) {
        const auto hits = comp.planar_tree.nearest_k(q, kNeighbors);
        if (hits.empty()) continue;
        std::vector<std::size_t> idx;
        idx.reserve(hits.size());
        for (const auto& h : hits) idx.push_back(h.index);
        for (const auto& [lo, hi] : index_runs(std::move(idx))) {
            const std::size_t n = comp.samples.size();
            const double s_lo = comp.samples[lo >= 2 ? lo - 2 : 0].s;
            const double s_hi = comp.samples[std::min(hi + 2, n - 1)].s;
            auto fn = [&](double s) { return std::abs(w - comp.curve.at(s)); };
            const double s_min = golden_min(fn, s_lo, s_hi, 70);
            best = std::min(best, fn(s_min));
        }
        best = std::min(best, std::sqrt(hits.front().dist2));
        if (hits.size() == kNeighbors)
            unexplored_lb = std::min(
                unexplored_lb, std::sqrt(hits.back().dist2) - net_->certified_delta());
    }
    const double slop = 1e-12 * (1.0 + best);
    if (unexplored_lb >= best) return {best, slop};
    return {best, net_->certified_delta()};
}

}  // namespace holder
