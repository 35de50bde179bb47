#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "holder/conformal_map.hpp"
#include "holder/riemann_sphere.hpp"
#include "holder/rng.hpp"

using namespace holder;

namespace {

const ExtendedComplex kInf = ExtendedComplex::infinity();

// Random sphere point: finite with |z| <= 1e3, occasionally infinity.
ExtendedComplex random_point(Rng& rng) {
    if (rng.next_double() < 0.01) return kInf;
    const double r = rng.log_uniform(1e-3, 1e3);
    const double t = rng.uniform(0.0, 2.0 * M_PI);
    return ExtendedComplex(std::polar(r, t));
}

// Independent oracle for the spherical distance: length of the great-circle
// arc between the stereographic images, computed as a refined polyline
// pulled back to the plane. Arcs that skim the north pole project badly
// (first-order chord error), so those are measured after rotating the whole
// configuration onto the equator; rotation invariance is tested separately.
double great_circle_length(const ExtendedComplex& a, const ExtendedComplex& b, int n) {
    const auto pa = sphere_point(a);
    const auto pb = sphere_point(b);
    double dotp = pa[0] * pb[0] + pa[1] * pb[1] + pa[2] * pb[2];
    dotp = std::clamp(dotp, -1.0, 1.0);
    const double omega = std::acos(dotp);
    if (omega == 0.0) return 0.0;

    std::vector<ExtendedComplex> vs;
    vs.reserve(n + 1);
    bool skims_pole = false;
    for (int i = 0; i <= n && !skims_pole; ++i) {
        const double t = double(i) / n;
        const double sa = std::sin((1.0 - t) * omega) / std::sin(omega);
        const double sb = std::sin(t * omega) / std::sin(omega);
        const double px = sa * pa[0] + sb * pb[0];
        const double py = sa * pa[1] + sb * pb[1];
        const double pz = sa * pa[2] + sb * pb[2];
        if (pz > 0.9) {
            skims_pole = true;
            break;
        }
        vs.emplace_back(Complex(px / (1.0 - pz), py / (1.0 - pz)));
    }
    if (!skims_pole)
        return spherical_path_length(PolylinePath::through(std::move(vs), 1)).value;

    // Equator framing: same central angle, vertices on the unit circle.
    vs.clear();
    for (int i = 0; i <= n; ++i)
        vs.emplace_back(std::polar(1.0, omega * double(i) / n));
    return spherical_path_length(PolylinePath::through(std::move(vs), 1)).value;
}

}  // namespace

TEST_CASE("chordal distance closed forms") {
    CHECK(chordal_distance(ExtendedComplex(Complex(0, 0)), kInf) == doctest::Approx(2.0));
    CHECK(chordal_distance(kInf, kInf) == 0.0);
    CHECK(chordal_distance(ExtendedComplex(Complex(0.3, -0.7)),
                           ExtendedComplex(Complex(0.3, -0.7))) == 0.0);
    // antipodal pair: -1 = -1/conj(1)
    CHECK(chordal_distance(ExtendedComplex(1.0), ExtendedComplex(-1.0)) ==
          doctest::Approx(2.0));
}

TEST_CASE("spherical distance closed forms and sandwich") {
    CHECK(spherical_distance(ExtendedComplex(Complex(0.4, 0.1)),
                             ExtendedComplex(Complex(0.4, 0.1))) == 0.0);
    CHECK(spherical_distance(ExtendedComplex(0.0), kInf) == doctest::Approx(M_PI));
    CHECK(spherical_distance(ExtendedComplex(0.0), ExtendedComplex(1.0)) ==
          doctest::Approx(0.5 * M_PI));

    Rng rng(2024);
    for (int i = 0; i < 100000; ++i) {
        const auto a = random_point(rng);
        const auto b = random_point(rng);
        const double chi = chordal_distance(a, b);
        const double sig = spherical_distance(a, b);
        REQUIRE(chi <= sig);
        REQUIRE(sig <= 0.5 * M_PI * chi);
    }
}

TEST_CASE("spherical distance is invariant under sphere rotations") {
    // z -> (a z - conj(c)) / (c z + conj(a)), |a|^2 + |c|^2 = 1
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Complex a(rng.uniform(-1, 1), rng.uniform(-1, 1));
        Complex c(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double norm = std::sqrt(std::norm(a) + std::norm(c));
        if (norm < 1e-3) continue;
        a /= norm;
        c /= norm;
        auto rotate = [&](const ExtendedComplex& p) -> ExtendedComplex {
            if (!p.is_finite()) {
                if (std::abs(c) < 1e-300) return ExtendedComplex::infinity();
                return ExtendedComplex(a / c);
            }
            const Complex z = p.value();
            const Complex den = c * z + std::conj(a);
            if (std::abs(den) < 1e-300) return ExtendedComplex::infinity();
            return ExtendedComplex::projective((a * z - std::conj(c)) / den);
        };
        const auto z = random_point(rng);
        const auto w = random_point(rng);
        const double before = spherical_distance(z, w);
        const double after = spherical_distance(rotate(z), rotate(w));
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
}

TEST_CASE("closed form agrees with the path-infimum definition") {
    Rng rng(91);
    int tested = 0;
    for (int i = 0; tested < 1000; ++i) {
        REQUIRE(i < 5000);
        const auto a = random_point(rng);
        const auto b = random_point(rng);
        const double closed = spherical_distance(a, b);
        const double arc = great_circle_length(a, b, 8192);
        ++tested;
        CHECK(arc >= closed - 1e-9);   // any path is at least the infimum
        CHECK(arc <= closed + 1e-6);   // and the great circle attains it
    }
}

TEST_CASE("spherical path length: closed forms") {
    // segment [0,1], no map: 2 arctan(t) at 1 -> pi/2
    auto seg = PolylinePath::through({ExtendedComplex(0.0), ExtendedComplex(1.0)}, 8);
    const auto len = spherical_path_length(seg);
    CHECK(len.value == doctest::Approx(0.5 * M_PI).epsilon(1e-10));
    CHECK(len.error < 1e-8);

    // refinement is monotone within the reported error
    auto seg2 = PolylinePath::through({ExtendedComplex(0.0), ExtendedComplex(1.0)}, 16);
    CHECK(std::abs(spherical_path_length(seg2).value - len.value) <= len.error + 1e-14);

    // epsilon-length segment
    auto tiny = PolylinePath::through(
        {ExtendedComplex(Complex(0.5, 0)), ExtendedComplex(Complex(0.5 + 1e-9, 0))}, 1);
    CHECK(spherical_path_length(tiny).value <= 1e-9 * 2.0);

    // identity map reproduces the free-space density
    IdentityMap id;
    auto seg3 = PolylinePath::through({ExtendedComplex(0.0), ExtendedComplex(0.7)}, 8);
    const auto mapped = spherical_path_length(seg3, &id);
    const auto free_len = spherical_path_length(seg3);
    CHECK(mapped.value == doctest::Approx(free_len.value).epsilon(1e-12));

    // radial path to infinity: [0, 1] + [1, inf) has total length pi
    auto to_inf = PolylinePath::through(
        {ExtendedComplex(0.0), ExtendedComplex(1.0), ExtendedComplex::infinity()}, 8);
    CHECK(spherical_path_length(to_inf).value == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("spherical path length under a map matches radial quadrature") {
    SectorMap g(0.5 * M_PI);
    // l_sigma(f o gamma) over [0, r]e^{i theta} equals int f#(t e^{i theta}) dt
    const double theta = 0.3;
    const Complex dir = std::polar(1.0, theta);
    auto path = PolylinePath::through(
        {ExtendedComplex(Complex(0, 0)), ExtendedComplex(0.9 * dir)}, 64);
    const auto lhs = spherical_path_length(path, &g);
    // direct quadrature at two refinement levels
    auto quad = [&](int n) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = (i + 0.5) * 0.9 / n;
            s += spherical_derivative(g, ExtendedComplex(t * dir)) * 0.9 / n;
        }
        return s;
    };
    CHECK(lhs.value == doctest::Approx(quad(4000)).epsilon(1e-6));
    CHECK(std::abs(quad(8000) - quad(4000)) < 1e-5);
}

TEST_CASE("spherical derivative") {
    IdentityMap id;
    CHECK(spherical_derivative(id, ExtendedComplex(0.0)) == doctest::Approx(2.0));
    SectorMap half_plane(M_PI);
    CHECK(spherical_derivative(half_plane, ExtendedComplex(0.0)) == doctest::Approx(2.0));
    KoebeMap koebe;
    CHECK(spherical_derivative(koebe, ExtendedComplex(0.0)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(spherical_derivative(id, ExtendedComplex(1.0)), OutOfDomain);
    CHECK_THROWS_AS(spherical_derivative(id, ExtendedComplex::infinity()), OutOfDomain);
}

TEST_CASE("dist_sigma_to_boundary on a unit-circle net") {
    std::vector<ExtendedComplex> circle;
    const int n = 4096;
    for (int i = 0; i < n; ++i)
        circle.emplace_back(std::polar(1.0, 2.0 * M_PI * i / n));
    const double delta = 2.0 * M_PI / n;

    const auto at_sample = dist_sigma_to_boundary(circle[17], circle, delta);
    CHECK(at_sample.value == 0.0);

    const auto from_center = dist_sigma_to_boundary(ExtendedComplex(0.0), circle, delta);
    CHECK(from_center.value == doctest::Approx(0.5 * M_PI).epsilon(1e-6));
    CHECK(from_center.uncertainty == doctest::Approx(0.5 * M_PI * delta));

    const auto from_inf = dist_sigma_to_boundary(kInf, circle, delta);
    CHECK(from_inf.value == doctest::Approx(0.5 * M_PI).epsilon(1e-6));

    CHECK_THROWS_AS(dist_sigma_to_boundary(ExtendedComplex(0.0), {}, delta),
                    EmptyBoundary);
}
