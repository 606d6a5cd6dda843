#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geometry.hpp"
#include "group.hpp"
#include "rng.hpp"

using namespace hs;

namespace {

const HatPoint kCenter{cplx(0, 1), cplx(0, 0)};
const HatPoint kDouble{cplx(0, 2), cplx(0, 0)};

// independent hyperbolic distance through the cross-ratio route
double hyp_distance_oracle(cplx w1, cplx w2) {
    double t = std::abs(w1 - w2) / std::abs(w1 - std::conj(w2));
    return std::log((1.0 + t) / (1.0 - t));
}

// trapezoid arc length with one-sided tangents, independent of the
// Simpson-based helper in the library
double arc_length_trapezoid(const HatPoint& p1, const HatPoint& p2, int panels) {
    double s0 = distance(p1, p2).rho;
    double h = s0 / panels;
    auto speed = [&](double s) {
        double d = s0 * 1e-6;
        double a = std::max(0.0, s - d), b = std::min(s0, s + d);
        HatPoint pa = geodesic_point(p1, p2, a);
        HatPoint pb = geodesic_point(p1, p2, b);
        double dx = (pb.tau.real() - pa.tau.real()) / (b - a);
        double dy = (pb.tau.imag() - pa.tau.imag()) / (b - a);
        double du = (pb.z.real() - pa.z.real()) / (b - a);
        double dv = (pb.z.imag() - pa.z.imag()) / (b - a);
        MetricAtPoint g = metric_at(geodesic_point(p1, p2, s));
        return std::sqrt(g.g_xx * dx * dx + g.g_yy * dy * dy + g.g_uu * du * du +
                         g.g_vv * dv * dv + 2 * g.g_xu * dx * du + 2 * g.g_yv * dy * dv);
    };
    double sum = 0.5 * (speed(0) + speed(s0));
    for (int i = 1; i < panels; ++i) sum += speed(i * h);
    return sum * h;
}

} // namespace

TEST_CASE("metric coefficients") {
    MetricAtPoint g = metric_at(kCenter);
    CHECK(g.g_xx == doctest::Approx(2.0));
    CHECK(g.g_yy == doctest::Approx(2.0));
    CHECK(g.g_uu == doctest::Approx(2.0));
    CHECK(g.g_vv == doctest::Approx(2.0));
    CHECK(g.g_xu == 0.0);
    CHECK(g.g_yv == 0.0);

    CHECK(metric_at(kDouble).g_xx == doctest::Approx(0.5));

    // reflecting z flips the cross terms and keeps the diagonal
    HatPoint p{cplx(0.4, 1.7), cplx(0.3, 0.8)};
    HatPoint pr{p.tau, -p.z};
    MetricAtPoint a = metric_at(p), b = metric_at(pr);
    CHECK(a.g_xx == b.g_xx);
    CHECK(a.g_xu == -b.g_xu);
    CHECK(a.g_yv == -b.g_yv);

    // positive definiteness of the pair blocks: g^2 - h^2 > 0
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        MetricAtPoint m = metric_at(sample_hat_point(rng));
        CHECK(m.g_xx > 0);
        CHECK(m.g_xx * m.g_xx - m.g_xu * m.g_xu > 0);
    }

    CHECK_THROWS_AS(metric_at(HatPoint{cplx(0, 1), cplx(0, 1)}), std::domain_error);
}

TEST_CASE("distance closed cases") {
    DistanceBreakdown same = distance(kCenter, kCenter);
    CHECK(same.A == 2.0);
    CHECK(same.B == 2.0);
    CHECK(same.lambda == 1.0);
    CHECK(same.mu == 1.0);
    CHECK(same.rho == 0.0);

    DistanceBreakdown d = distance(kCenter, kDouble);
    CHECK(d.A == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(d.B == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(d.lambda == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.mu == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(d.rho - std::sqrt(2.0) * std::log(2.0)) < 1e-12);

    // factor distance equals acosh(A/2), tying the formula to the
    // upper half-plane geometry of i and 2i
    CHECK(std::abs(std::log(d.lambda) - std::acosh(d.A / 2.0)) < 1e-13);
    CHECK(std::abs(std::log(d.lambda) - std::log(2.0)) < 1e-14);
}

TEST_CASE("distance axioms and factor consistency") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        HatPoint a = sample_hat_point(rng);
        HatPoint b = sample_hat_point(rng);
        HatPoint c = sample_hat_point(rng);

        DistanceBreakdown dab = distance(a, b);
        CHECK(dab.A >= 2.0);
        CHECK(dab.B >= 2.0);
        CHECK(dab.lambda >= 1.0);
        CHECK(dab.mu >= 1.0);
        CHECK(distance(b, a).rho == doctest::Approx(dab.rho).epsilon(1e-14));

        // triangle inequality with desk-scale slack
        CHECK(dab.rho <= distance(a, c).rho + distance(c, b).rho + 1e-9);

        // the plus factor carries the hyperbolic distance of tau + z
        double oracle = hyp_distance_oracle(a.w_plus(), b.w_plus());
        CHECK(std::abs(std::log(dab.lambda) - oracle) < 1e-10);
        double oracle2 = hyp_distance_oracle(a.w_minus(), b.w_minus());
        CHECK(std::abs(std::log(dab.mu) - oracle2) < 1e-10);
    }
}

TEST_CASE("distance invariance under the group") {
    Rng rng(41);
    for (int t = 0; t < 500; ++t) {
        GHatElement g = sample_g_hat_plus(rng);
        if (rng.uniform() < 0.3) g = g_hat_mul(g, g_hat_minus_representative());
        HatPoint a = sample_hat_point(rng);
        HatPoint b = sample_hat_point(rng);
        double before = distance(a, b).rho;
        double after = distance(symplectic_act(g.m, a), symplectic_act(g.m, b)).rho;
        CHECK(std::abs(before - after) < 1e-9);
    }

    // split form of the same invariance
    for (int t = 0; t < 100; ++t) {
        Sl2Pair p{sample_sl2(rng), sample_sl2(rng)};
        HatPoint a = sample_hat_point(rng);
        HatPoint b = sample_hat_point(rng);
        double before = distance(a, b).rho;
        double after = distance(act_via_split(p, a, 1), act_via_split(p, b, 1)).rho;
        CHECK(std::abs(before - after) < 1e-9);
    }
}

TEST_CASE("geodesic endpoints and parametrization") {
    HatPoint start = geodesic_point(kCenter, kDouble, 0.0);
    CHECK(start == kCenter); // exact

    double s0 = distance(kCenter, kDouble).rho;
    CHECK(max_abs_diff(geodesic_point(kCenter, kDouble, s0), kDouble) < 1e-12);

    // vertical geodesic: the midpoint of i -> 2i is sqrt(2) i per factor
    HatPoint mid = geodesic_point(kCenter, kDouble, 0.5 * s0);
    CHECK(std::abs(mid.tau - cplx(0.0, std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(mid.z) < 1e-12);

    CHECK_THROWS_AS(geodesic_point(kCenter, kDouble, -0.1), std::domain_error);
    CHECK_THROWS_AS(geodesic_point(kCenter, kDouble, s0 + 0.1), std::domain_error);
    CHECK_THROWS_AS(geodesic_point(kCenter, kCenter, 0.0), std::domain_error);
}

TEST_CASE("geodesics are unit speed") {
    Rng rng(51);
    for (int t = 0; t < 100; ++t) {
        HatPoint a = sample_hat_point(rng);
        HatPoint b = sample_hat_point(rng);
        if (max_abs_diff(a, b) < 1e-6) continue;
        double s0 = distance(a, b).rho;

        CHECK(geodesic_point(a, b, 0.0) == a);
        CHECK(max_abs_diff(geodesic_point(a, b, s0), b) < 1e-9);
        for (double q : {0.25, 0.5, 0.75}) {
            HatPoint mid = geodesic_point(a, b, q * s0);
            CHECK(valid_hat_point(mid));
            CHECK(std::abs(distance(a, mid).rho - q * s0) < 1e-6);
        }
    }
}

TEST_CASE("geodesic with one stationary factor") {
    // equal plus factors: the curve moves only in the minus factor
    HatPoint a{cplx(0.5, 1.0), cplx(0.5, 0.0)};   // w+ = 1 + i, w- = i
    HatPoint b{cplx(0.5, 1.5), cplx(0.5, -0.5)};  // w+ = 1 + i, w- = 2i
    double s0 = distance(a, b).rho;
    CHECK(s0 == doctest::Approx(std::log(2.0)));
    for (double q : {0.3, 0.7, 1.0}) {
        HatPoint g = geodesic_point(a, b, q * s0);
        CHECK(std::abs(g.w_plus() - a.w_plus()) < 1e-12);
    }
    CHECK(max_abs_diff(geodesic_point(a, b, s0), b) < 1e-12);
}

TEST_CASE("arc length equals the distance") {
    // independent trapezoid quadrature against the closed form
    CHECK(std::abs(arc_length_trapezoid(kCenter, kDouble, 4000) -
                   distance(kCenter, kDouble).rho) < 1e-5);

    HatPoint a{cplx(0.4, 1.2), cplx(-0.1, 0.3)};
    HatPoint b{cplx(-0.6, 2.1), cplx(0.4, -0.7)};
    CHECK(std::abs(arc_length_trapezoid(a, b, 4000) - distance(a, b).rho) < 1e-5);
}

TEST_CASE("volume density") {
    CHECK(volume_density(kCenter) == doctest::Approx(4.0));
    CHECK(volume_density(HatPoint{cplx(0, 2), cplx(0, 1)}) == doctest::Approx(4.0 / 9.0));

    // change of variables under the action, Jacobian by central differences
    Rng rng(61);
    for (int t = 0; t < 25; ++t) {
        GHatElement g = sample_g_hat_plus(rng);
        HatPoint p = sample_hat_point(rng);
        HatPoint img = symplectic_act(g.m, p);

        const double h = 1e-4;
        double jac[4][4];
        for (int col = 0; col < 4; ++col) {
            double d[4] = {0, 0, 0, 0};
            d[col] = h;
            HatPoint pp{cplx(p.tau.real() + d[0], p.tau.imag() + d[1]),
                        cplx(p.z.real() + d[2], p.z.imag() + d[3])};
            HatPoint pm{cplx(p.tau.real() - d[0], p.tau.imag() - d[1]),
                        cplx(p.z.real() - d[2], p.z.imag() - d[3])};
            HatPoint ip = symplectic_act(g.m, pp);
            HatPoint im = symplectic_act(g.m, pm);
            jac[0][col] = (ip.tau.real() - im.tau.real()) / (2 * h);
            jac[1][col] = (ip.tau.imag() - im.tau.imag()) / (2 * h);
            jac[2][col] = (ip.z.real() - im.z.real()) / (2 * h);
            jac[3][col] = (ip.z.imag() - im.z.imag()) / (2 * h);
        }
        CMat jm(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) jm.at(i, j) = jac[i][j];
        double dj = std::abs(det(jm).real());
        CHECK(std::abs(volume_density(img) * dj - volume_density(p)) / volume_density(p) < 1e-6);
    }

    CHECK_THROWS_AS(volume_density(HatPoint{cplx(0, 1), cplx(0, 1)}), std::domain_error);
}

TEST_CASE("laplacian on closed-form fields") {
    HatPoint p{cplx(0.3, 1.4), cplx(-0.2, 0.5)};

    CHECK(std::abs(laplacian_apply([](const HatPoint&) { return 3.5; }, p)) < 1e-8);
    CHECK(std::abs(laplacian_apply([](const HatPoint& q) { return q.tau.real(); }, p)) < 1e-6);

    // quadratic fields have exact central differences:
    //   f = x^2        -> (y^2 + v^2)
    //   f = x u        -> 2 y v
    //   f = y^2 - v^2  -> 0
    double y = p.y(), v = p.v();
    double r1 = laplacian_apply([](const HatPoint& q) { return q.tau.real() * q.tau.real(); }, p);
    CHECK(std::abs(r1 - (y * y + v * v)) < 1e-8);
    double r2 = laplacian_apply([](const HatPoint& q) { return q.tau.real() * q.z.real(); }, p);
    CHECK(std::abs(r2 - 2.0 * y * v) < 1e-8);
    double r3 = laplacian_apply(
        [](const HatPoint& q) { return q.y() * q.y() - q.v() * q.v(); }, p);
    CHECK(std::abs(r3) < 1e-8);

    // log of the invariant gap has constant laplacian -2
    auto logdet = [](const HatPoint& q) { return std::log(q.y() * q.y() - q.v() * q.v()); };
    CHECK(std::abs(laplacian_apply(logdet, p) + 2.0) < 1e-5);
    CHECK(std::abs(laplacian_apply_richardson(logdet, p) + 2.0) < 1e-8);

    CHECK_THROWS_AS(laplacian_apply(logdet, p, 0.5), std::domain_error);
    CHECK_THROWS_AS(laplacian_apply(logdet, p, -1e-3), std::domain_error);
}

TEST_CASE("laplacian commutes with the action") {
    Rng rng(71);
    auto f = [](const HatPoint& q) { return std::log(q.y() * q.y() - q.v() * q.v()); };
    int done = 0;
    for (int t = 0; t < 200 && done < 40; ++t) {
        GHatElement g = sample_g_hat_plus(rng);
        HatPoint p = sample_hat_point(rng);
        HatPoint img = symplectic_act(g.m, p);
        double gap_p = p.y() - std::abs(p.v());
        double gap_i = img.y() - std::abs(img.v());
        double ratio = std::max({img.w_plus().imag() / p.w_plus().imag(),
                                 img.w_minus().imag() / p.w_minus().imag(), 1.0});
        if (gap_p < 0.15 || gap_i < 0.15 || ratio > 8.0) continue;
        ++done;
        ScalarField pulled = [&](const HatPoint& q) { return f(symplectic_act(g.m, q)); };
        double lhs = laplacian_apply_richardson(pulled, p, 1e-3 / ratio);
        double rhs = laplacian_apply_richardson(f, img, 1e-3);
        CHECK(std::abs(lhs - rhs) < 1e-4);
    }
    CHECK(done >= 40);
}
