#include "theta.hpp"

#include <cmath>

namespace hs {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxRadius = 200;

double lambda_min(const HatPoint& omega) { return omega.y() - std::abs(omega.v()); }

CVec2 shifted(const CVec2& z, const CVec2& d) { return CVec2{z[0] + d[0], z[1] + d[1]}; }

CVec2 lattice_shift(const HatPoint& omega, const std::array<int, 2>& m, const std::array<int, 2>& k) {
    // m Omega + k for row vector m
    cplx s0 = static_cast<double>(m[0]) * omega.tau + static_cast<double>(m[1]) * omega.z +
              static_cast<double>(k[0]);
    cplx s1 = static_cast<double>(m[0]) * omega.z + static_cast<double>(m[1]) * omega.tau +
              static_cast<double>(k[1]);
    return CVec2{s0, s1};
}

// minimal radius that keeps the shifted arguments accurate as well
int radius_for(const HatPoint& omega, const CVec2& z, double target) {
    for (int r = 1; r <= kMaxRadius; ++r)
        if (theta_tail_bound(omega, z, r) <= target) return r;
    throw std::domain_error("theta: truncation target unreachable (radius cap hit)");
}

} // namespace

double theta_tail_bound(const HatPoint& omega, const CVec2& zpt, int radius) {
    double lmin = lambda_min(omega);
    if (lmin <= 0.0) throw std::domain_error("theta_tail_bound: point outside the special half-space");
    double s = std::abs(zpt[0].imag()) + std::abs(zpt[1].imag());
    double bound = 0.0;
    double prev = 0.0;
    for (int k = radius + 1; k <= radius + 10000; ++k) {
        double t = 8.0 * k * std::exp(-kPi * lmin * static_cast<double>(k) * k + 2.0 * kPi * k * s);
        bound += t;
        if (t < 1e-300) break;
        if (!std::isfinite(bound)) return bound;
        // once the shell terms decay geometrically, close the remainder
        if (k > radius + 1 && t < 0.5 * prev && t < 1e-18 * bound) {
            bound += t; // crude closure of the remaining sub-geometric tail
            break;
        }
        prev = t;
    }
    return bound;
}

ThetaTruncation choose_truncation(const HatPoint& omega, const CVec2& zpt, double target) {
    ThetaTruncation t;
    t.radius = radius_for(omega, zpt, target);
    t.tail_bound = theta_tail_bound(omega, zpt, t.radius);
    return t;
}

ThetaValue theta_series(const HatPoint& omega, const CVec2& zpt, const ThetaTruncation& trunc) {
    if (trunc.radius < 1) throw std::domain_error("theta_series: radius must be >= 1");
    if (lambda_min(omega) <= 0.0)
        throw std::domain_error("theta_series: point outside the special half-space");
    cplx sum = 0.0;
    for (int n1 = -trunc.radius; n1 <= trunc.radius; ++n1)
        for (int n2 = -trunc.radius; n2 <= trunc.radius; ++n2) {
            cplx quad = (static_cast<double>(n1) * n1 + static_cast<double>(n2) * n2) * omega.tau +
                        2.0 * static_cast<double>(n1) * n2 * omega.z;
            cplx lin = static_cast<double>(n1) * zpt[0] + static_cast<double>(n2) * zpt[1];
            sum += std::exp(cplx(0.0, kPi) * quad + cplx(0.0, 2.0 * kPi) * lin);
        }
    ThetaValue v;
    v.value = sum;
    v.radius = trunc.radius;
    v.tail_bound = theta_tail_bound(omega, zpt, trunc.radius);
    v.accurate = v.tail_bound <= 1e-12;
    return v;
}

ResidualReport quasi_periodicity_residual(const HatPoint& omega, const CVec2& zpt,
                                          const std::array<int, 2>& m,
                                          const std::array<int, 2>& k,
                                          const ThetaTruncation& trunc,
                                          const Tolerance& tol) {
    ResidualReport rep;
    CVec2 z = zpt;
    for (int attempt = 0; attempt < 3; ++attempt) {
        CVec2 shift = lattice_shift(omega, m, k);
        CVec2 zs = shifted(z, shift);

        int radius = std::max({trunc.radius, radius_for(omega, z, 1e-12), radius_for(omega, zs, 1e-12)});
        ThetaTruncation tr{radius, 0.0};
        cplx th = theta_series(omega, z, tr).value;
        if (std::abs(th) <= 1e-6) { // theta-null; move off the zero set
            z = shifted(z, CVec2{cplx(0.1, 0.0), cplx(0.0, 0.07)});
            rep.retries = attempt + 1;
            continue;
        }
        cplx th_shift = theta_series(omega, zs, tr).value;

        cplx quad = (static_cast<double>(m[0]) * m[0] + static_cast<double>(m[1]) * m[1]) * omega.tau +
                    2.0 * static_cast<double>(m[0]) * m[1] * omega.z;
        cplx lin = static_cast<double>(m[0]) * z[0] + static_cast<double>(m[1]) * z[1];
        cplx factor = std::exp(cplx(0.0, -kPi) * quad + cplx(0.0, -2.0 * kPi) * lin);

        // scale-invariant defect; the raw quotient |.|/|theta(z)| degrades
        // with exp(pi m Y m^t) and would drown the roundoff signal
        double scale = std::max(std::abs(th_shift), std::abs(factor * th)) + tol.abs_tol;
        rep.residual = std::abs(th_shift - factor * th) / scale;
        rep.conclusive = true;
        return rep;
    }
    rep.conclusive = false;
    rep.residual = std::nan("");
    return rep;
}

namespace {

// symmetric bilinear companion of the principal form: B(u, w) = u Y^-1 w^t
cplx bilinear_b(const HatPoint& omega, const CVec2& u, const CVec2& w, const Tolerance& tol) {
    CMat y(2, 2);
    y.at(0, 0) = omega.tau.imag();
    y.at(1, 1) = omega.tau.imag();
    y.at(0, 1) = omega.z.imag();
    y.at(1, 0) = omega.z.imag();
    CMat yi = inverse2(y, tol);
    cplx s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += u[static_cast<size_t>(i)] * yi.at(i, j) * w[static_cast<size_t>(j)];
    return s;
}

} // namespace

BridgeResult principal_bridge_residual(const HatPoint& omega, const CVec2& zpt,
                                       const LatticeIndex& alpha, const ThetaTruncation& trunc,
                                       const Tolerance& tol) {
    if (std::abs(omega.v()) > tol.abs_tol)
        throw std::domain_error(
            "principal_bridge_residual: Im of the off-diagonal entry must vanish (principal case)");

    RiemannFormSpec spec = make_form(FormKind::Tau, omega, tol);
    SemiCharacter chi = canonical_semicharacter(spec, tol);
    LatticeBasis lat = spec.lattice;

    auto theta_tilde = [&](const CVec2& z) {
        int radius = std::max(trunc.radius, radius_for(omega, z, 1e-12));
        cplx th = theta_series(omega, z, ThetaTruncation{radius, 0.0}).value;
        return std::exp(0.5 * kPi * bilinear_b(omega, z, z, tol)) * th;
    };

    BridgeResult res;
    CVec2 z = zpt;
    for (int attempt = 0; attempt < 3; ++attempt) {
        cplx base = theta_tilde(z);
        if (std::abs(base) <= 1e-8) {
            z = shifted(z, CVec2{cplx(0.1, 0.0), cplx(0.0, 0.07)});
            res.retries = attempt + 1;
            continue;
        }

        // fit the residual character on the basis vectors
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            LatticeIndex ei{};
            ei[static_cast<size_t>(i)] = 1;
            CVec2 ze = shifted(z, lat.basis_vector(i));
            cplx lhs = theta_tilde(ze);
            cplx rhs = automorphic_factor(spec, chi, ei, z) * base;
            if (std::abs(rhs) == 0.0) {
                ok = false;
                break;
            }
            cplx t = lhs / rhs;
            double mod = std::abs(t);
            if (mod <= 0.5 || mod >= 2.0) {
                ok = false; // not a unit twist; z too close to the zero set
                break;
            }
            res.twist[static_cast<size_t>(i)] = t / mod;
        }
        if (!ok) {
            z = shifted(z, CVec2{cplx(0.1, 0.0), cplx(0.0, 0.07)});
            res.retries = attempt + 1;
            continue;
        }

        cplx twist = 1.0;
        for (int i = 0; i < 4; ++i)
            twist *= std::pow(res.twist[static_cast<size_t>(i)], static_cast<double>(alpha[static_cast<size_t>(i)]));

        CVec2 za = shifted(z, lat.point(alpha));
        cplx lhs = theta_tilde(za);
        cplx rhs = automorphic_factor(spec, chi, alpha, z) * twist * base;
        double scale = std::max(std::abs(lhs), std::abs(rhs)) + tol.abs_tol;
        res.residual = std::abs(lhs - rhs) / scale;
        res.conclusive = true;
        return res;
    }
    res.conclusive = false;
    res.residual = std::nan("");
    return res;
}

} // namespace hs
