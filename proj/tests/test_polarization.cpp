#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polarization.hpp"
#include "rng.hpp"

using namespace hs;

namespace {

const HatPoint kOmega21{cplx(0.3, 2.0), cplx(0.1, 1.0)}; // Im tau 2, Im z 1
const HatPoint kTauPt{cplx(0.3, 2.0), cplx(0.1, 0.0)};
const HatPoint kStarPt{cplx(0.3, 1.0), cplx(0.1, 0.0)};

LatticeIndex random_index(Rng& rng, int bound) {
    return LatticeIndex{rng.uniform_int(-bound, bound), rng.uniform_int(-bound, bound),
                        rng.uniform_int(-bound, bound), rng.uniform_int(-bound, bound)};
}

CVec2 random_z(Rng& rng) {
    return CVec2{cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                 cplx(rng.uniform(-1, 1), rng.uniform(-1, 1))};
}

} // namespace

TEST_CASE("lattice basis and period matrix") {
    LatticeBasis lat = make_lattice(kOmega21);
    CVec2 e1 = lat.basis_vector(0);
    CHECK(e1[0] == kOmega21.tau);
    CHECK(e1[1] == kOmega21.z);
    CVec2 e2 = lat.basis_vector(1);
    CHECK(e2[0] == kOmega21.z);
    CHECK(e2[1] == kOmega21.tau);
    CHECK(lat.basis_vector(2)[0] == cplx(1, 0));
    CHECK(lat.basis_vector(3)[1] == cplx(1, 0));

    CVec2 p = lat.point(LatticeIndex{1, -2, 3, 4});
    CHECK(std::abs(p[0] - (kOmega21.tau - 2.0 * kOmega21.z + 3.0)) < 1e-15);
    CHECK(std::abs(p[1] - (kOmega21.z - 2.0 * kOmega21.tau + 4.0)) < 1e-15);

    // |det| of the real period matrix is y^2 - v^2
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        HatPoint w = sample_hat_point(rng);
        CMat m = to_cmat(make_lattice(w).real_period_matrix());
        double expect = w.y() * w.y() - w.v() * w.v();
        CHECK(std::abs(std::abs(det(m).real()) - expect) < 1e-10 * std::max(1.0, expect));
    }

    CHECK_THROWS_AS(make_lattice(HatPoint{cplx(0, 1), cplx(0, 2)}), std::domain_error);
}

TEST_CASE("gram matrices of the three named forms") {
    // principal kind: the alternating Gram matrix is the standard form
    GramMatrices gt = gram_matrices(make_form(FormKind::Tau, kTauPt));
    Mat4d j4 = symplectic_form_j4();
    CHECK(max_abs_diff4(gt.e, j4) == 0.0);

    // identity kind at Im tau 2, Im z 1: upper-right block [[2,1],[1,2]]
    GramMatrices go = gram_matrices(make_form(FormKind::Omega, kOmega21));
    Mat4d expect{};
    rat(expect, 0, 2) = 2;
    rat(expect, 0, 3) = 1;
    rat(expect, 1, 2) = 1;
    rat(expect, 1, 3) = 2;
    rat(expect, 2, 0) = -2;
    rat(expect, 3, 0) = -1;
    rat(expect, 2, 1) = -1;
    rat(expect, 3, 1) = -2;
    CHECK(max_abs_diff4(go.e, expect) == 0.0);

    // symmetric part matches the direct formulas
    cplx tau = kOmega21.tau, z = kOmega21.z;
    CHECK(rat(go.s, 0, 0) == doctest::Approx(std::norm(tau) + std::norm(z)));
    CHECK(rat(go.s, 0, 1) == doctest::Approx(2.0 * (tau * std::conj(z)).real()));
    CHECK(rat(go.s, 0, 2) == doctest::Approx(tau.real()));
    CHECK(rat(go.s, 0, 3) == doctest::Approx(z.real()));
    CHECK(rat(go.s, 2, 2) == doctest::Approx(1.0));
    CHECK(rat(go.s, 2, 3) == doctest::Approx(0.0));

    // star kind: upper-right block from Im(2 tau + z), Im(tau + 2 z)
    HatPoint wst{cplx(0.3, 1.5), cplx(0.1, 0.5)};
    GramMatrices gs = gram_matrices(make_form(FormKind::Star, wst));
    double p = (2.0 * wst.tau + wst.z).imag();
    double r = (wst.tau + 2.0 * wst.z).imag();
    CHECK(rat(gs.e, 0, 2) == doctest::Approx(p));
    CHECK(rat(gs.e, 0, 3) == doctest::Approx(r));
    CHECK(rat(gs.e, 1, 2) == doctest::Approx(r));
    CHECK(rat(gs.e, 1, 3) == doctest::Approx(p));
    CHECK(rat(gs.e, 2, 3) == doctest::Approx(0.0));

    // exact symmetry and antisymmetry
    Rng rng(2);
    for (int t = 0; t < 30; ++t) {
        HatPoint w = sample_hat_point(rng);
        GramMatrices g = gram_matrices(make_form(FormKind::Omega, w));
        for (int i = 0; i < 4; ++i) {
            CHECK(rat(g.e, i, i) == 0.0);
            for (int j = 0; j < 4; ++j) {
                CHECK(rat(g.s, i, j) == rat(g.s, j, i));
                CHECK(rat(g.e, i, j) == -rat(g.e, j, i));
            }
        }
    }
}

TEST_CASE("riemann form conditions") {
    CHECK(is_riemann_form(make_form(FormKind::Tau, kTauPt)).ok);
    CHECK(is_riemann_form(make_form(FormKind::Tau, HatPoint{cplx(-1.7, 0.42), cplx(0.9, 0.0)})).ok);

    RiemannCheck frac = is_riemann_form(make_form(FormKind::Omega, HatPoint{cplx(0, 1.5), cplx(0, 0)}));
    CHECK_FALSE(frac.ok);
    CHECK(frac.nondegenerate);
    CHECK_FALSE(frac.integral);

    // kind tau needs a real off-diagonal entry
    RiemannCheck tau_bad = is_riemann_form(make_form(FormKind::Tau, kOmega21));
    CHECK_FALSE(tau_bad.ok);
    CHECK_FALSE(tau_bad.integral);

    // star kind is integral exactly when Im(2 tau + z) and Im(tau + 2 z) are
    CHECK(is_riemann_form(make_form(FormKind::Star, kOmega21)).ok);
    CHECK_FALSE(is_riemann_form(make_form(FormKind::Star, HatPoint{cplx(0, 1.3), cplx(0, 0.4)})).ok);
    CHECK(is_riemann_form(make_form(FormKind::Star, HatPoint{cplx(0, 5.0 / 3.0), cplx(0, -1.0 / 3.0)})).ok);

    // degenerate custom coefficient matrix
    CMat h(2, 2);
    h.at(0, 0) = 1;
    h.at(0, 1) = 1;
    h.at(1, 0) = 1;
    h.at(1, 1) = 1;
    RiemannCheck degen = is_riemann_form(make_custom_form(h, HatPoint{cplx(0, 1), cplx(0, 0)}));
    CHECK_FALSE(degen.nondegenerate);

    CMat nh(2, 2);
    nh.at(0, 1) = cplx(0, 1);
    nh.at(1, 0) = cplx(0, 1);
    CHECK_THROWS_AS(make_custom_form(nh, kTauPt), std::domain_error);
}

TEST_CASE("section dimensions") {
    CHECK(section_dimension(make_form(FormKind::Omega, kOmega21)) == 3);
    CHECK(section_dimension(make_form(FormKind::Tau, kTauPt)) == 1);
    CHECK(section_dimension(make_form(FormKind::Star, kStarPt)) == 3);

    for (int it = 1; it <= 5; ++it)
        for (int iz = -(it - 1); iz <= it - 1; ++iz) {
            HatPoint w{cplx(0.7, it), cplx(-0.4, iz)};
            std::int64_t base = static_cast<std::int64_t>(it) * it - static_cast<std::int64_t>(iz) * iz;
            CHECK(section_dimension(make_form(FormKind::Omega, w)) == base);
            CHECK(section_dimension(make_form(FormKind::Star, w)) == 3 * base);
        }

    CHECK_THROWS_AS(section_dimension(make_form(FormKind::Omega, HatPoint{cplx(0, 1.5), cplx(0, 0)})),
                    std::domain_error);

    // integral and nondegenerate but indefinite: rejected
    CMat h(2, 2);
    h.at(0, 0) = 1;
    h.at(1, 1) = -1;
    RiemannFormSpec indef = make_custom_form(h, HatPoint{cplx(0, 1), cplx(0, 0)});
    CHECK(is_riemann_form(indef).ok);
    CHECK_THROWS_AS(section_dimension(indef), std::domain_error);
}

TEST_CASE("canonical semicharacter") {
    RiemannFormSpec spec = make_form(FormKind::Omega, kOmega21);
    SemiCharacter chi = canonical_semicharacter(spec);

    CHECK(chi.value(LatticeIndex{0, 0, 0, 0}) == cplx(1, 0));
    for (int i = 0; i < 4; ++i) CHECK(chi.base_value(i) == cplx(1, 0));

    // defining relation, exactly, on random pairs with coordinates up to 20
    Rng rng(3);
    for (int t = 0; t < 1000; ++t) {
        LatticeIndex m = random_index(rng, 20);
        LatticeIndex n = random_index(rng, 20);
        CHECK(semicharacter_defect(chi, m, n) == 0);
    }

    // two-term expansion: chi(e1 + e3) = exp(i pi E13) chi(e1) chi(e3)
    IMat4 e = integral_alternating_gram(spec);
    cplx lhs = chi.value(LatticeIndex{1, 0, 1, 0});
    cplx rhs = ((iat(e, 0, 2) % 2 + 2) % 2 == 0 ? 1.0 : -1.0) * chi.value(LatticeIndex{1, 0, 0, 0}) *
               chi.value(LatticeIndex{0, 0, 1, 0});
    CHECK(lhs == rhs);

    // exhaustive small box
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int c = -3; c <= 3; ++c)
                for (int d = -3; d <= 3; ++d) {
                    LatticeIndex m{a, b, c, d};
                    LatticeIndex n{d, c, b, a};
                    CHECK(semicharacter_defect(chi, m, n) == 0);
                }

    CHECK_THROWS_AS(canonical_semicharacter(make_form(FormKind::Omega, HatPoint{cplx(0, 1.5), cplx(0, 0)})),
                    std::domain_error);
}

TEST_CASE("automorphic factor values") {
    RiemannFormSpec spec = make_form(FormKind::Tau, kTauPt);
    SemiCharacter chi = canonical_semicharacter(spec);

    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        CVec2 z = random_z(rng);
        CHECK(automorphic_factor(spec, chi, LatticeIndex{0, 0, 0, 0}, z) == cplx(1, 0));
    }

    // modulus at z = 0 is exp(pi/2 H(alpha, alpha))
    for (int t = 0; t < 50; ++t) {
        LatticeIndex alpha = random_index(rng, 2);
        CVec2 av = spec.lattice.point(alpha);
        double expect = std::exp(0.5 * 3.14159265358979323846 *
                                 hermitian_value(spec, av, av).real());
        cplx j = automorphic_factor(spec, chi, alpha, CVec2{cplx(0, 0), cplx(0, 0)});
        CHECK(std::abs(std::abs(j) - expect) < 1e-9 * expect);
    }
}

TEST_CASE("factor cocycle identity") {
    for (const RiemannFormSpec& spec :
         {make_form(FormKind::Tau, kTauPt), make_form(FormKind::Omega, kOmega21),
          make_form(FormKind::Star, kStarPt)}) {
        SemiCharacter chi = canonical_semicharacter(spec);
        CHECK(factor_cocycle_residual(spec, chi, 500, 99) <= 1e-9);
    }
}

TEST_CASE("corrupted semicharacter is detected") {
    RiemannFormSpec spec = make_form(FormKind::Tau, kTauPt);
    SemiCharacter chi = canonical_semicharacter(spec);
    // negating the stored value on a basis vector participating in a
    // nonzero pairing breaks the extension rule
    double res = factor_cocycle_residual(spec, corrupted_semicharacter_values(chi, 0), 500, 100);
    CHECK(res >= 0.5);

    CHECK_THROWS_AS(corrupted_semicharacter_values(chi, 7), std::domain_error);
}

TEST_CASE("tensor rule for factors") {
    // H1 + H2 with the product semicharacter gives the product factor
    HatPoint w{cplx(0.3, 1.0), cplx(0.1, 0.0)};
    RiemannFormSpec s1 = make_form(FormKind::Omega, w);
    RiemannFormSpec s2 = make_form(FormKind::Star, w);
    RiemannFormSpec sum = make_custom_form(s1.h + s2.h, w);

    SemiCharacter c1 = canonical_semicharacter(s1);
    SemiCharacter c2 = canonical_semicharacter(s2);
    SemiCharacter csum = canonical_semicharacter(sum);

    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        LatticeIndex alpha = random_index(rng, 2);
        CVec2 z = random_z(rng);
        // product semicharacter equals the canonical one of the summed form
        CHECK(csum.value(alpha) == c1.value(alpha) * c2.value(alpha));
        cplx lhs = log_automorphic_factor(sum, csum, alpha, z);
        cplx rhs = log_automorphic_factor(s1, c1, alpha, z) + log_automorphic_factor(s2, c2, alpha, z);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}
