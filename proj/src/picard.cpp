#include "picard.hpp"

#include <algorithm>
#include <cmath>

namespace hs {

namespace {

constexpr double kPi = 3.14159265358979323846;

double reduce_mod_2pi(double x) { return std::remainder(x, 2.0 * kPi); }

double circle_defect(cplx delta_exponent) {
    cplx d(delta_exponent.real(), reduce_mod_2pi(delta_exponent.imag()));
    return std::abs(std::exp(d) - cplx(1.0, 0.0));
}

} // namespace

DualPoint dual_scale(const DualPoint& l, double s) { return DualPoint{l.c1 * s, l.c2 * s}; }

DualPoint dual_add(const DualPoint& a, const DualPoint& b) {
    return DualPoint{a.c1 + b.c1, a.c2 + b.c2};
}

std::array<DualPoint, 4> dual_basis(const LatticeBasis& lat, const Tolerance& tol) {
    // Im ell(e_j) is linear in (Re c1, Im c1, Re c2, Im c2):
    //   Im[(cr + i ci)(er - i ei)] = ci er - cr ei  per coordinate.
    CMat a(4, 4);
    for (int j = 0; j < 4; ++j) {
        CVec2 e = lat.basis_vector(j);
        a.at(j, 0) = -e[0].imag();
        a.at(j, 1) = e[0].real();
        a.at(j, 2) = -e[1].imag();
        a.at(j, 3) = e[1].real();
    }
    CMat ainv = inverse(a, tol); // throws on singular period data
    std::array<DualPoint, 4> duals;
    for (int i = 0; i < 4; ++i) {
        // solve a * c = delta_i
        DualPoint l;
        l.c1 = cplx(ainv.at(0, i).real(), ainv.at(1, i).real());
        l.c2 = cplx(ainv.at(2, i).real(), ainv.at(3, i).real());
        duals[static_cast<size_t>(i)] = l;
    }
    return duals;
}

DualPoint dual_lattice_point(const std::array<DualPoint, 4>& duals, const LatticeIndex& k) {
    DualPoint l;
    for (int i = 0; i < 4; ++i)
        l = dual_add(l, dual_scale(duals[static_cast<size_t>(i)], static_cast<double>(k[static_cast<size_t>(i)])));
    return l;
}

cplx poincare_hermitian(const CVec2& z1, const DualPoint& l1, const CVec2& z2, const DualPoint& l2) {
    return l1(z2) + std::conj(l2(z1));
}

cplx log_poincare_factor(const LatticeBasis& lat, const LatticeIndex& alpha, const DualPoint& ellhat,
                         const CVec2& zpt, const DualPoint& ell) {
    CVec2 av = lat.point(alpha);
    cplx chi_log(0.0, -kPi * ellhat(av).imag());
    cplx h_mixed = poincare_hermitian(zpt, ell, av, ellhat);
    cplx h_diag = poincare_hermitian(av, ellhat, av, ellhat);
    return chi_log + kPi * h_mixed + 0.5 * kPi * h_diag;
}

cplx poincare_factor(const LatticeBasis& lat, const LatticeIndex& alpha, const DualPoint& ellhat,
                     const CVec2& zpt, const DualPoint& ell) {
    return std::exp(log_poincare_factor(lat, alpha, ellhat, zpt, ell));
}

double poincare_semicharacter_residual(const LatticeBasis& lat, int trials, std::uint64_t seed,
                                       const Tolerance& tol) {
    auto duals = dual_basis(lat, tol);
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        LatticeIndex a{}, b{}, ka{}, kb{};
        for (int i = 0; i < 4; ++i) {
            a[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
            b[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
            ka[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
            kb[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
        }
        CVec2 av = lat.point(a), bv = lat.point(b);
        DualPoint la = dual_lattice_point(duals, ka), lb = dual_lattice_point(duals, kb);

        // chi((a,la)+(b,lb)) vs chi(a,la) chi(b,lb) exp(i pi E)
        double lhs = -kPi * (dual_add(la, lb)(CVec2{av[0] + bv[0], av[1] + bv[1]})).imag();
        double e_pair = (la(bv)).imag() - (lb(av)).imag();
        double rhs = -kPi * la(av).imag() - kPi * lb(bv).imag() + kPi * e_pair;
        worst = std::max(worst, circle_defect(cplx(0.0, lhs - rhs)));
    }
    return worst;
}

double poincare_cocycle_residual(const LatticeBasis& lat, int trials, std::uint64_t seed,
                                 const Tolerance& tol) {
    auto duals = dual_basis(lat, tol);
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        LatticeIndex a{}, b{}, ab{}, ka{}, kb{}, kab{};
        for (int i = 0; i < 4; ++i) {
            a[static_cast<size_t>(i)] = rng.uniform_int(-2, 2);
            b[static_cast<size_t>(i)] = rng.uniform_int(-2, 2);
            ab[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
            ka[static_cast<size_t>(i)] = rng.uniform_int(-2, 2);
            kb[static_cast<size_t>(i)] = rng.uniform_int(-2, 2);
            kab[static_cast<size_t>(i)] = ka[static_cast<size_t>(i)] + kb[static_cast<size_t>(i)];
        }
        CVec2 z{cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))};
        DualPoint ell{cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                      cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))};

        DualPoint la = dual_lattice_point(duals, ka);
        DualPoint lb = dual_lattice_point(duals, kb);
        DualPoint lab = dual_lattice_point(duals, kab);
        CVec2 bv = lat.point(b);
        CVec2 zb{z[0] + bv[0], z[1] + bv[1]};
        DualPoint ellb = dual_add(ell, lb);

        cplx l1 = log_poincare_factor(lat, ab, lab, z, ell);
        cplx l2 = log_poincare_factor(lat, a, la, zb, ellb);
        cplx l3 = log_poincare_factor(lat, b, lb, z, ell);
        worst = std::max(worst, circle_defect(l1 - l2 - l3));
    }
    return worst;
}

double fiber_triviality_residual(const LatticeBasis& lat, const DualPoint& ell,
                                 const LatticeIndex& alpha, const CVec2& zpt) {
    CVec2 av = lat.point(alpha);
    CVec2 za{zpt[0] + av[0], zpt[1] + av[1]};
    // exponent of h(z+a) J(a,z) - exponent of e^{2 pi i Im ell(a)} h(z)
    cplx lhs = -kPi * std::conj(ell(za)) + kPi * ell(av);
    cplx rhs = cplx(0.0, 2.0 * kPi * ell(av).imag()) - kPi * std::conj(ell(zpt));
    return circle_defect(lhs - rhs);
}

cplx log_translate_factor(const RiemannFormSpec& spec, const SemiCharacter& chi, const CVec2& a,
                          const LatticeIndex& alpha, const CVec2& zpt) {
    return log_automorphic_factor(spec, chi, alpha, CVec2{zpt[0] + a[0], zpt[1] + a[1]});
}

cplx translate_factor(const RiemannFormSpec& spec, const SemiCharacter& chi, const CVec2& a,
                      const LatticeIndex& alpha, const CVec2& zpt) {
    return std::exp(log_translate_factor(spec, chi, a, alpha, zpt));
}

std::array<cplx, 4> TranslationCharacter::values() const {
    std::array<cplx, 4> v;
    for (int i = 0; i < 4; ++i)
        v[static_cast<size_t>(i)] = std::exp(cplx(0.0, 2.0 * kPi * exponent[static_cast<size_t>(i)]));
    return v;
}

bool TranslationCharacter::is_trivial(const Tolerance& tol) const {
    for (double e : exponent)
        if (std::abs(e - std::round(e)) > tol.abs_tol + tol.rel_tol * std::abs(e)) return false;
    return true;
}

TranslationCharacter translation_character(const RiemannFormSpec& spec, const CVec2& a,
                                           const Tolerance& tol) {
    RiemannCheck c = is_riemann_form(spec, tol);
    if (!c.integral)
        throw std::domain_error("translation_character: alternating form is not integral");
    TranslationCharacter t;
    for (int i = 0; i < 4; ++i)
        t.exponent[static_cast<size_t>(i)] = alternating_value(spec, a, spec.lattice.basis_vector(i));
    return t;
}

KernelStructure kernel_subgroup(const RiemannFormSpec& spec, const Tolerance& tol) {
    RiemannCheck c = is_riemann_form(spec, tol);
    if (!c.ok) throw std::domain_error("kernel_subgroup: not a Riemann form (" + c.reason + ")");
    if (!is_hermitian_pd(spec.h, tol))
        throw std::domain_error("kernel_subgroup: coefficient matrix is not positive definite");
    IMat4 e = integral_alternating_gram(spec, tol);
    SnfResult snf = smith_normal_form4(e);
    KernelStructure k;
    k.divisors = snf.divisors;
    k.order = 1;
    for (std::int64_t d : snf.divisors) {
        if (d == 0) throw std::domain_error("kernel_subgroup: degenerate alternating form");
        k.order = checked_mul(k.order, d);
    }
    std::string s;
    for (std::int64_t d : snf.divisors)
        if (d > 1) {
            if (!s.empty()) s += " x ";
            s += "Z/" + std::to_string(d);
        }
    k.structure = s.empty() ? "trivial" : s;
    return k;
}

double square_theorem_residual(const RiemannFormSpec& spec, const SemiCharacter& chi,
                               const CVec2& a, const CVec2& b, int trials, std::uint64_t seed) {
    Tolerance tol;
    double worst = 0.0;

    // exponent additivity of the degree-zero characters
    TranslationCharacter ta = translation_character(spec, a, tol);
    TranslationCharacter tb = translation_character(spec, b, tol);
    TranslationCharacter tab = translation_character(spec, CVec2{a[0] + b[0], a[1] + b[1]}, tol);
    for (int i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(tab.exponent[static_cast<size_t>(i)] -
                                         ta.exponent[static_cast<size_t>(i)] -
                                         tb.exponent[static_cast<size_t>(i)]));

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        LatticeIndex alpha{};
        for (int i = 0; i < 4; ++i) alpha[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
        CVec2 z{cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))};
        CVec2 ab{a[0] + b[0], a[1] + b[1]};
        cplx delta = log_translate_factor(spec, chi, ab, alpha, z) +
                     log_automorphic_factor(spec, chi, alpha, z) -
                     log_translate_factor(spec, chi, a, alpha, z) -
                     log_translate_factor(spec, chi, b, alpha, z);
        worst = std::max(worst, circle_defect(delta));
    }
    return worst;
}

double chern_pairing_from_factor(const RiemannFormSpec& spec, const SemiCharacter& chi,
                                 const LatticeIndex& alpha, const LatticeIndex& beta,
                                 const CVec2& zpt) {
    CVec2 av = spec.lattice.point(alpha);
    CVec2 bv = spec.lattice.point(beta);
    CVec2 za{zpt[0] + av[0], zpt[1] + av[1]};
    CVec2 zb{zpt[0] + bv[0], zpt[1] + bv[1]};
    cplx combo = log_automorphic_factor(spec, chi, beta, za) +
                 log_automorphic_factor(spec, chi, alpha, zpt) -
                 log_automorphic_factor(spec, chi, alpha, zb) -
                 log_automorphic_factor(spec, chi, beta, zpt);
    return combo.imag() / (2.0 * kPi);
}

CurvatureResult curvature_matrix(const RiemannFormSpec& spec, std::uint64_t seed,
                                 const Tolerance& tol) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!tol.close(spec.h.at(i, j), std::conj(spec.h.at(j, i))))
                throw std::domain_error("curvature_matrix: coefficient matrix is not Hermitian");

    CurvatureResult res;
    res.c = spec.h * cplx(kPi, 0.0);

    // second differences of the log weight pi H(z, z); mixed Wirtinger
    // derivative d^2/dz_i dz_bar_j recovers the coefficient
    auto logw = [&](const CVec2& z) { return kPi * hermitian_value(spec, z, z).real(); };
    const double h = 1e-3;
    Rng rng(seed);
    double worst = 0.0;
    for (int pt = 0; pt < 10; ++pt) {
        CVec2 z{cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                auto step = [&](int k, double dre, double dim) {
                    CVec2 w = z;
                    w[static_cast<size_t>(k)] += cplx(dre, dim);
                    return w;
                };
                double xx, yy, xy, yx;
                if (i == j) {
                    double f0 = logw(z);
                    xx = (logw(step(i, h, 0)) - 2 * f0 + logw(step(i, -h, 0))) / (h * h);
                    yy = (logw(step(i, 0, h)) - 2 * f0 + logw(step(i, 0, -h))) / (h * h);
                    xy = 0.0;
                    yx = 0.0;
                } else {
                    auto step2 = [&](double dxi, double dyi, double dxj, double dyj) {
                        CVec2 w = z;
                        w[static_cast<size_t>(i)] += cplx(dxi, dyi);
                        w[static_cast<size_t>(j)] += cplx(dxj, dyj);
                        return w;
                    };
                    xx = (logw(step2(h, 0, h, 0)) - logw(step2(h, 0, -h, 0)) -
                          logw(step2(-h, 0, h, 0)) + logw(step2(-h, 0, -h, 0))) /
                         (4 * h * h);
                    yy = (logw(step2(0, h, 0, h)) - logw(step2(0, h, 0, -h)) -
                          logw(step2(0, -h, 0, h)) + logw(step2(0, -h, 0, -h))) /
                         (4 * h * h);
                    xy = (logw(step2(h, 0, 0, h)) - logw(step2(h, 0, 0, -h)) -
                          logw(step2(-h, 0, 0, h)) + logw(step2(-h, 0, 0, -h))) /
                         (4 * h * h);
                    yx = (logw(step2(0, h, h, 0)) - logw(step2(0, h, -h, 0)) -
                          logw(step2(0, -h, h, 0)) + logw(step2(0, -h, -h, 0))) /
                         (4 * h * h);
                }
                cplx fd = 0.25 * cplx(xx + yy, xy - yx);
                worst = std::max(worst, std::abs(fd - res.c.at(i, j)));
            }
    }
    res.constancy_residual = worst;
    return res;
}

int HodgeTable::euler() const {
    int e = 0;
    for (int k = 0; k <= 4; ++k) e += (k % 2 == 0 ? 1 : -1) * betti[static_cast<size_t>(k)];
    return e;
}

HodgeTable hodge_numbers() {
    auto binom = [](int n, int k) {
        int r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    HodgeTable t;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) t.h[static_cast<size_t>(p)][static_cast<size_t>(q)] = binom(2, p) * binom(2, q);
    for (int k = 0; k <= 4; ++k) t.betti[static_cast<size_t>(k)] = binom(4, k);
    return t;
}

} // namespace hs
