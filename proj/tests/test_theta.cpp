#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polarization.hpp"
#include "rng.hpp"
#include "theta.hpp"

using namespace hs;

namespace {

constexpr double kPi = 3.14159265358979323846;

const HatPoint kCenter{cplx(0, 1), cplx(0, 0)};

// 1-d oracle: sum over n of q^(n^2) x^n with q = exp(i pi tau), x = exp(2 pi i z)
cplx theta1d(cplx tau, cplx z, int radius) {
    cplx s = 0.0;
    for (int n = -radius; n <= radius; ++n) {
        cplx expo = cplx(0, kPi) * (static_cast<double>(n) * n * tau + 2.0 * n * z);
        s += std::exp(expo);
    }
    return s;
}

CVec2 zero2() { return CVec2{cplx(0, 0), cplx(0, 0)}; }

} // namespace

TEST_CASE("value at the center against the product oracle") {
    ThetaValue v = theta_series(kCenter, zero2(), ThetaTruncation{10, 0.0});
    cplx oracle = theta1d(cplx(0, 1), cplx(0, 0), 40);
    CHECK(std::abs(v.value - oracle * oracle) < 1e-12);
    CHECK(v.value.real() == doctest::Approx(1.18034).epsilon(1e-5));
    CHECK(v.value.imag() == doctest::Approx(0.0));
}

TEST_CASE("diagonal periods factorize") {
    // [[tau, 0], [0, tau]] splits the double series into a product
    HatPoint w{cplx(0.3, 1.2), cplx(0, 0)};
    Rng rng(1);
    for (int t = 0; t < 10; ++t) {
        cplx z1(rng.uniform(-1, 1), rng.uniform(-0.2, 0.2));
        cplx z2(rng.uniform(-1, 1), rng.uniform(-0.2, 0.2));
        ThetaValue v = theta_series(w, CVec2{z1, z2}, ThetaTruncation{12, 0.0});
        cplx oracle = theta1d(w.tau, z1, 12) * theta1d(w.tau, z2, 12);
        CHECK(std::abs(v.value - oracle) < 1e-12 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("evenness and integer shifts") {
    Rng rng(2);
    HatPoint w{cplx(-0.2, 1.0), cplx(0.3, 0.4)};
    for (int t = 0; t < 20; ++t) {
        CVec2 z{cplx(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3)),
                cplx(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))};
        ThetaTruncation trunc = choose_truncation(w, z, 1e-12);
        cplx a = theta_series(w, z, trunc).value;
        cplx b = theta_series(w, CVec2{-z[0], -z[1]}, trunc).value;
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));

        cplx c = theta_series(w, CVec2{z[0] + 1.0, z[1]}, trunc).value;
        CHECK(std::abs(a - c) < 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("tail bound controls truncation error") {
    for (double imtau : {1.0, 2.0})
        for (double imz : {0.0, 0.5}) {
            if (imz >= imtau) continue;
            HatPoint w{cplx(0.1, imtau), cplx(-0.3, imz)};
            CVec2 z{cplx(0.4, 0.1), cplx(-0.2, -0.15)};
            ThetaTruncation t1 = choose_truncation(w, z, 1e-12);
            CHECK(t1.tail_bound <= 1e-12);
            cplx v1 = theta_series(w, z, t1).value;
            cplx v2 = theta_series(w, z, ThetaTruncation{2 * t1.radius, 0.0}).value;
            CHECK(std::abs(v1 - v2) <= t1.tail_bound);

            // the bound shrinks as the radius grows
            CHECK(theta_tail_bound(w, z, t1.radius + 5) < t1.tail_bound);
        }

    // insufficient radius is flagged
    ThetaValue coarse = theta_series(kCenter, zero2(), ThetaTruncation{1, 0.0});
    CHECK_FALSE(coarse.accurate);
    CHECK(coarse.tail_bound > 1e-12);

    CHECK_THROWS_AS(theta_series(HatPoint{cplx(0, 1), cplx(0, 1)}, zero2(), ThetaTruncation{5, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(theta_series(kCenter, zero2(), ThetaTruncation{0, 0.0}), std::domain_error);
}

TEST_CASE("quasi-periodicity closed case") {
    CVec2 z{cplx(0.1, 0.2), cplx(-0.3, 0.1)};
    ResidualReport zero = quasi_periodicity_residual(kCenter, z, {0, 0}, {0, 0},
                                                     ThetaTruncation{12, 0.0});
    CHECK(zero.conclusive);
    CHECK(zero.residual == 0.0);

    ResidualReport rep = quasi_periodicity_residual(kCenter, z, {1, 0}, {0, 1},
                                                    ThetaTruncation{12, 0.0});
    CHECK(rep.conclusive);
    CHECK(rep.residual <= 1e-9);

    // direct oracle at the same data: theta(z + m Omega + k) against the
    // classical multiplier, radius 20 summation
    cplx shifted = theta_series(kCenter, CVec2{z[0] + cplx(0, 1), z[1] + 1.0},
                                ThetaTruncation{20, 0.0})
                       .value;
    cplx base = theta_series(kCenter, z, ThetaTruncation{20, 0.0}).value;
    cplx factor = std::exp(cplx(0, -kPi) * cplx(0, 1) + cplx(0, -2 * kPi) * z[0]);
    CHECK(std::abs(shifted - factor * base) < 1e-9 * std::abs(shifted));
}

TEST_CASE("quasi-periodicity across the domain") {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        HatPoint w{cplx(rng.uniform(-0.5, 0.5), rng.uniform(1.0, 2.0)),
                   cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))};
        CVec2 z{cplx(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3)),
                cplx(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))};
        std::array<int, 2> m{rng.uniform_int(-2, 2), rng.uniform_int(-2, 2)};
        std::array<int, 2> k{rng.uniform_int(-2, 2), rng.uniform_int(-2, 2)};
        ResidualReport rep =
            quasi_periodicity_residual(w, z, m, k, choose_truncation(w, z, 1e-12));
        CHECK(rep.conclusive);
        CHECK(rep.residual <= 1e-8);
    }
}

TEST_CASE("theta-null triggers a shifted retry") {
    // odd half period of the diagonal center: a zero of the series
    CVec2 null_z{cplx(0.5, 0.5), cplx(0.5, 0.5)};
    cplx at_null = theta_series(kCenter, null_z, ThetaTruncation{15, 0.0}).value;
    CHECK(std::abs(at_null) < 1e-10);

    ResidualReport rep = quasi_periodicity_residual(kCenter, null_z, {1, 0}, {0, 0},
                                                    ThetaTruncation{15, 0.0});
    CHECK(rep.retries >= 1);
    CHECK(rep.conclusive);
    CHECK(rep.residual <= 1e-8);
}

TEST_CASE("principal bridge residual") {
    Rng rng(4);
    for (const HatPoint& w : {kCenter, HatPoint{cplx(0.4, 1.3), cplx(0.2, 0.0)}}) {
        CVec2 z{cplx(0.17, 0.05), cplx(-0.23, 0.11)};

        BridgeResult zero = principal_bridge_residual(w, z, LatticeIndex{0, 0, 0, 0},
                                                      ThetaTruncation{10, 0.0});
        CHECK(zero.conclusive);
        CHECK(zero.residual <= 1e-12);

        for (const LatticeIndex& alpha :
             {LatticeIndex{0, 0, 1, 0}, LatticeIndex{1, 0, 0, 0}, LatticeIndex{0, 1, 0, 1},
              LatticeIndex{-1, 2, 1, -2}}) {
            BridgeResult br = principal_bridge_residual(w, z, alpha, ThetaTruncation{10, 0.0});
            CHECK(br.conclusive);
            CHECK(br.residual <= 1e-8);
            for (const cplx& tw : br.twist) CHECK(std::abs(std::abs(tw) - 1.0) < 1e-8);
        }

        for (int t = 0; t < 5; ++t) {
            LatticeIndex alpha{rng.uniform_int(-2, 2), rng.uniform_int(-2, 2),
                               rng.uniform_int(-2, 2), rng.uniform_int(-2, 2)};
            CVec2 zr{cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3)),
                     cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3))};
            BridgeResult br = principal_bridge_residual(w, zr, alpha, ThetaTruncation{10, 0.0});
            CHECK(br.conclusive);
            CHECK(br.residual <= 1e-8);
        }
    }

    // the bridge is restricted to the principal integrality domain
    CHECK_THROWS_AS(principal_bridge_residual(HatPoint{cplx(0, 2), cplx(0, 1)}, zero2(),
                                              LatticeIndex{1, 0, 0, 0}, ThetaTruncation{10, 0.0}),
                    std::domain_error);
}

TEST_CASE("principal section space is one-dimensional") {
    // a second solution of the factor equation built by a lattice shift
    // must be proportional to the first
    HatPoint w = kCenter;
    RiemannFormSpec spec = make_form(FormKind::Tau, w);
    SemiCharacter chi = canonical_semicharacter(spec);
    LatticeBasis lat = spec.lattice;

    auto y_inv_bilinear = [&](const CVec2& u, const CVec2& v) {
        return (u[0] * v[0] + u[1] * v[1]) / w.y();
    };
    auto theta_tilde = [&](const CVec2& z) {
        cplx th = theta_series(w, z, ThetaTruncation{14, 0.0}).value;
        return std::exp(0.5 * kPi * y_inv_bilinear(z, z)) * th;
    };
    LatticeIndex e1{1, 0, 0, 0};
    auto second = [&](const CVec2& z) {
        CVec2 ze{z[0] + lat.basis_vector(0)[0], z[1] + lat.basis_vector(0)[1]};
        return theta_tilde(ze) / automorphic_factor(spec, chi, e1, z);
    };

    CVec2 za{cplx(0.21, 0.04), cplx(-0.35, 0.12)};
    CVec2 zb{cplx(-0.44, -0.09), cplx(0.18, 0.23)};
    cplx ratio_a = second(za) / theta_tilde(za);
    cplx ratio_b = second(zb) / theta_tilde(zb);
    CHECK(std::abs(ratio_a - ratio_b) < 1e-6 * std::abs(ratio_a));
}
