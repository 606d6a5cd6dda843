#include "polarization.hpp"

#include <cmath>

namespace hs {

namespace {

constexpr double kPi = 3.14159265358979323846;

// exp of a complex exponent with the imaginary part already moderate
cplx exp_c(cplx w) { return std::exp(w); }

// reduce to (-pi, pi]
double reduce_mod_2pi(double x) {
    double r = std::remainder(x, 2.0 * kPi);
    return r;
}

} // namespace

CVec2 LatticeBasis::basis_vector(int i) const {
    switch (i) {
        case 0: return CVec2{omega.tau, omega.z};
        case 1: return CVec2{omega.z, omega.tau};
        case 2: return CVec2{cplx(1.0, 0.0), cplx(0.0, 0.0)};
        case 3: return CVec2{cplx(0.0, 0.0), cplx(1.0, 0.0)};
        default: throw std::domain_error("LatticeBasis: basis index out of range");
    }
}

CVec2 LatticeBasis::point(const LatticeIndex& n) const {
    CVec2 p{cplx(0.0, 0.0), cplx(0.0, 0.0)};
    for (int i = 0; i < 4; ++i) {
        CVec2 e = basis_vector(i);
        p[0] += static_cast<double>(n[static_cast<size_t>(i)]) * e[0];
        p[1] += static_cast<double>(n[static_cast<size_t>(i)]) * e[1];
    }
    return p;
}

Mat4d LatticeBasis::real_period_matrix() const {
    Mat4d m{};
    for (int i = 0; i < 4; ++i) {
        CVec2 e = basis_vector(i);
        rat(m, i, 0) = e[0].real();
        rat(m, i, 1) = e[0].imag();
        rat(m, i, 2) = e[1].real();
        rat(m, i, 3) = e[1].imag();
    }
    return m;
}

LatticeBasis make_lattice(const HatPoint& omega, const Tolerance& tol) {
    if (!valid_hat_point(omega, tol))
        throw std::domain_error("make_lattice: base point outside the special half-space");
    return LatticeBasis{omega};
}

std::string form_kind_name(FormKind k) {
    switch (k) {
        case FormKind::Omega: return "omega";
        case FormKind::Tau: return "tau";
        case FormKind::Star: return "star";
        case FormKind::Custom: return "custom";
    }
    return "custom";
}

FormKind form_kind_from_name(const std::string& name) {
    if (name == "omega") return FormKind::Omega;
    if (name == "tau") return FormKind::Tau;
    if (name == "star") return FormKind::Star;
    if (name == "custom") return FormKind::Custom;
    throw std::domain_error("unknown form kind: " + name);
}

RiemannFormSpec make_form(FormKind kind, const HatPoint& omega, const Tolerance& tol) {
    RiemannFormSpec spec;
    spec.lattice = make_lattice(omega, tol);
    spec.kind = kind;
    switch (kind) {
        case FormKind::Omega:
            spec.h = CMat::identity(2);
            break;
        case FormKind::Tau:
            spec.h = CMat::identity(2) * cplx(1.0 / omega.tau.imag(), 0.0);
            break;
        case FormKind::Star:
            spec.h = CMat(2, 2);
            spec.h.at(0, 0) = 2.0;
            spec.h.at(0, 1) = 1.0;
            spec.h.at(1, 0) = 1.0;
            spec.h.at(1, 1) = 2.0;
            break;
        case FormKind::Custom:
            throw std::domain_error("make_form: custom kind needs an explicit coefficient matrix");
    }
    return spec;
}

RiemannFormSpec make_custom_form(const CMat& h, const HatPoint& omega, const Tolerance& tol) {
    if (h.rows != 2 || h.cols != 2) throw std::domain_error("make_custom_form: h must be 2x2");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!tol.close(h.at(i, j), std::conj(h.at(j, i))))
                throw std::domain_error("make_custom_form: coefficient matrix is not Hermitian");
    RiemannFormSpec spec;
    spec.h = h;
    spec.lattice = make_lattice(omega, tol);
    spec.kind = FormKind::Custom;
    return spec;
}

cplx hermitian_value(const RiemannFormSpec& spec, const CVec2& u, const CVec2& w) {
    cplx s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s += u[static_cast<size_t>(i)] * spec.h.at(i, j) * std::conj(w[static_cast<size_t>(j)]);
    return s;
}

double alternating_value(const RiemannFormSpec& spec, const CVec2& u, const CVec2& w) {
    return hermitian_value(spec, u, w).imag();
}

GramMatrices gram_matrices(const RiemannFormSpec& spec) {
    GramMatrices g{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx h = hermitian_value(spec, spec.lattice.basis_vector(i), spec.lattice.basis_vector(j));
            rat(g.s, i, j) = h.real();
            rat(g.e, i, j) = h.imag();
        }
    return g;
}

RiemannCheck is_riemann_form(const RiemannFormSpec& spec, const Tolerance& tol) {
    RiemannCheck r;
    r.nondegenerate = std::abs(det2(spec.h)) > tol.abs_tol;
    r.integral = true;
    GramMatrices g = gram_matrices(spec);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double v = rat(g.e, i, j);
            worst = std::max(worst, std::abs(v - std::round(v)));
        }
    if (worst > tol.abs_tol + tol.rel_tol) r.integral = false;
    r.ok = r.nondegenerate && r.integral;
    if (r.ok)
        r.reason = "ok";
    else if (!r.nondegenerate)
        r.reason = "coefficient matrix is degenerate";
    else
        r.reason = "alternating form is not integral on the lattice";
    return r;
}

IMat4 integral_alternating_gram(const RiemannFormSpec& spec, const Tolerance& tol) {
    RiemannCheck c = is_riemann_form(spec, tol);
    if (!c.integral)
        throw std::domain_error("integral_alternating_gram: alternating form is not integral");
    GramMatrices g = gram_matrices(spec);
    IMat4 e{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            iat(e, i, j) = static_cast<std::int64_t>(std::llround(rat(g.e, i, j)));
    // exact antisymmetrization is automatic after rounding; keep it explicit
    for (int i = 0; i < 4; ++i) iat(e, i, i) = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) iat(e, i, j) = -iat(e, j, i);
    return e;
}

std::int64_t section_dimension(const RiemannFormSpec& spec, const Tolerance& tol) {
    RiemannCheck c = is_riemann_form(spec, tol);
    if (!c.ok) throw std::domain_error("section_dimension: not a Riemann form (" + c.reason + ")");
    if (!is_hermitian_pd(spec.h, tol))
        throw std::domain_error("section_dimension: coefficient matrix is not positive definite");
    std::int64_t pf = pfaffian4(integral_alternating_gram(spec, tol));
    return pf < 0 ? -pf : pf;
}

cplx SemiCharacter::base_value(int i) const {
    double ph = base_phase[static_cast<size_t>(i)];
    if (ph == 0.0) return cplx(1.0, 0.0);
    return exp_c(cplx(0.0, kPi * ph));
}

double SemiCharacter::phase(const LatticeIndex& n) const {
    double linear = 0.0;
    for (int i = 0; i < 4; ++i) linear += n[static_cast<size_t>(i)] * base_phase[static_cast<size_t>(i)];
    std::int64_t quad = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            quad = checked_add(quad, checked_mul(static_cast<std::int64_t>(n[static_cast<size_t>(i)]) * n[static_cast<size_t>(j)], iat(e, i, j)));
    return linear + static_cast<double>(quad);
}

cplx SemiCharacter::value(const LatticeIndex& n) const {
    double linear = 0.0;
    bool pure = true;
    for (int i = 0; i < 4; ++i) {
        linear += n[static_cast<size_t>(i)] * base_phase[static_cast<size_t>(i)];
        if (base_phase[static_cast<size_t>(i)] != 0.0) pure = false;
    }
    std::int64_t quad = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            quad = checked_add(quad, checked_mul(static_cast<std::int64_t>(n[static_cast<size_t>(i)]) * n[static_cast<size_t>(j)], iat(e, i, j)));
    cplx sign = (quad % 2 == 0) ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
    if (pure) return sign; // exact root of unity
    return sign * exp_c(cplx(0.0, kPi * linear));
}

SemiCharacter canonical_semicharacter(const IMat4& e_form) {
    if (!is_antisymmetric(e_form))
        throw std::domain_error("canonical_semicharacter: alternating matrix required");
    SemiCharacter chi;
    chi.e = e_form;
    return chi;
}

SemiCharacter canonical_semicharacter(const RiemannFormSpec& spec, const Tolerance& tol) {
    return canonical_semicharacter(integral_alternating_gram(spec, tol));
}

int semicharacter_defect(const SemiCharacter& chi, const LatticeIndex& m, const LatticeIndex& n) {
    LatticeIndex sum{};
    for (int i = 0; i < 4; ++i) sum[static_cast<size_t>(i)] = m[static_cast<size_t>(i)] + n[static_cast<size_t>(i)];
    auto quad = [&](const LatticeIndex& k) {
        std::int64_t q = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                q += static_cast<std::int64_t>(k[static_cast<size_t>(i)]) * k[static_cast<size_t>(j)] * iat(chi.e, i, j);
        return q;
    };
    std::int64_t pairing = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            pairing += static_cast<std::int64_t>(m[static_cast<size_t>(i)]) * n[static_cast<size_t>(j)] * iat(chi.e, i, j);
    std::int64_t defect = quad(sum) - quad(m) - quad(n) - pairing;
    return static_cast<int>(((defect % 2) + 2) % 2);
}

SemiCharValues semicharacter_values(const SemiCharacter& chi) {
    return [chi](const LatticeIndex& n) { return chi.value(n); };
}

SemiCharValues corrupted_semicharacter_values(const SemiCharacter& chi, int index) {
    if (index < 0 || index > 3)
        throw std::domain_error("corrupted_semicharacter_values: basis index out of range");
    return [chi, index](const LatticeIndex& n) {
        cplx v = chi.value(n);
        if (n[static_cast<size_t>(index)] == 1) v = -v;
        return v;
    };
}

namespace {

cplx log_factor_impl(const RiemannFormSpec& spec, const cplx& chi_log, const LatticeIndex& alpha,
                     const CVec2& zpt) {
    CVec2 av = spec.lattice.point(alpha);
    cplx hz = hermitian_value(spec, zpt, av);
    cplx ha = hermitian_value(spec, av, av);
    return chi_log + kPi * hz + 0.5 * kPi * ha;
}

} // namespace

cplx log_automorphic_factor(const RiemannFormSpec& spec, const SemiCharacter& chi,
                            const LatticeIndex& alpha, const CVec2& zpt) {
    return log_factor_impl(spec, cplx(0.0, kPi * chi.phase(alpha)), alpha, zpt);
}

cplx automorphic_factor(const RiemannFormSpec& spec, const SemiCharacter& chi,
                        const LatticeIndex& alpha, const CVec2& zpt) {
    return exp_c(log_automorphic_factor(spec, chi, alpha, zpt));
}

double factor_cocycle_residual(const RiemannFormSpec& spec, const SemiCharValues& chi_values,
                               int trials, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        LatticeIndex a{}, b{}, ab{};
        for (int i = 0; i < 4; ++i) {
            a[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
            b[static_cast<size_t>(i)] = rng.uniform_int(-3, 3);
            ab[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
        }
        CVec2 z{cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))};
        CVec2 bz = z;
        CVec2 bv = spec.lattice.point(b);
        bz[0] += bv[0];
        bz[1] += bv[1];

        cplx la = log_factor_impl(spec, std::log(chi_values(ab)), ab, z);
        cplx lb = log_factor_impl(spec, std::log(chi_values(a)), a, bz);
        cplx lc = log_factor_impl(spec, std::log(chi_values(b)), b, z);
        cplx delta = la - lb - lc;
        delta = cplx(delta.real(), reduce_mod_2pi(delta.imag()));
        worst = std::max(worst, std::abs(exp_c(delta) - cplx(1.0, 0.0)));
    }
    return worst;
}

double factor_cocycle_residual(const RiemannFormSpec& spec, const SemiCharacter& chi,
                               int trials, std::uint64_t seed) {
    return factor_cocycle_residual(spec, semicharacter_values(chi), trials, seed);
}

} // namespace hs
