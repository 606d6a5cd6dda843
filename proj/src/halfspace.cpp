#include "halfspace.hpp"

#include <cmath>

namespace hs {

namespace {

// Hermitian positive-definiteness via leading principal minors, after a
// symmetry residual check. 2x2 only.
bool hermitian_pd_strict(const CMat& m, const Tolerance& tol) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!tol.close(m.at(i, j), std::conj(m.at(j, i)))) return false;
    double m00 = m.at(0, 0).real();
    double d = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).real();
    return m00 > tol.abs_tol && d > tol.abs_tol;
}

CMat imag_part(const CMat& m) {
    CMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows * m.cols; ++i) r.e[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)].imag();
    return r;
}

bool is_symmetric(const CMat& m, const Tolerance& tol) {
    return m.rows == 2 && m.cols == 2 && tol.close(m.at(0, 1), m.at(1, 0));
}

} // namespace

CMat HatPoint::matrix() const {
    CMat m(2, 2);
    m.at(0, 0) = tau;
    m.at(1, 1) = tau;
    m.at(0, 1) = z;
    m.at(1, 0) = z;
    return m;
}

bool valid_hat_point(const HatPoint& p, const Tolerance& tol) {
    if (!std::isfinite(p.tau.real()) || !std::isfinite(p.tau.imag()) ||
        !std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()))
        return false;
    return p.y() - std::abs(p.v()) > tol.abs_tol;
}

HatPoint make_hat_point(cplx tau, cplx z, const Tolerance& tol) {
    HatPoint p{tau, z};
    if (!valid_hat_point(p, tol))
        throw std::domain_error("make_hat_point: Im(tau) > |Im(z)| violated");
    return p;
}

bool operator==(const HatPoint& a, const HatPoint& b) { return a.tau == b.tau && a.z == b.z; }

double max_abs_diff(const HatPoint& a, const HatPoint& b) {
    return std::max(std::abs(a.tau - b.tau), std::abs(a.z - b.z));
}

CMat DiskPoint::matrix() const {
    CMat m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = b;
    return m;
}

DiskPoint disk_point_from_matrix(const CMat& w, const Tolerance& tol) {
    if (!in_disk_hat(w, tol))
        throw std::domain_error("disk_point_from_matrix: not a special-disk point");
    return DiskPoint{w.at(0, 0), w.at(0, 1)};
}

bool in_hat_h2(const CMat& omega, const Tolerance& tol) {
    if (omega.rows != 2 || omega.cols != 2 || !omega.all_finite()) return false;
    if (!tol.close(omega.at(0, 0), omega.at(1, 1))) return false;
    if (!tol.close(omega.at(0, 1), omega.at(1, 0))) return false;
    double y = omega.at(0, 0).imag();
    double v = omega.at(0, 1).imag();
    return y - std::abs(v) > tol.abs_tol;
}

bool in_siegel_h2(const CMat& omega, const Tolerance& tol) {
    if (omega.rows != 2 || omega.cols != 2 || !omega.all_finite()) return false;
    if (!is_symmetric(omega, tol)) return false;
    return hermitian_pd_strict(imag_part(omega), tol);
}

bool in_disk_d2(const CMat& w, const Tolerance& tol) {
    if (w.rows != 2 || w.cols != 2 || !w.all_finite()) return false;
    if (!is_symmetric(w, tol)) return false;
    CMat gap = CMat::identity(2) - w * w.conjugate();
    return hermitian_pd_strict(gap, tol);
}

bool in_disk_hat(const CMat& w, const Tolerance& tol) {
    if (!in_disk_d2(w, tol)) return false;
    CMat q = swap_q2();
    return max_abs_diff(q * w, w * q) <= tol.abs_tol + tol.rel_tol * w.max_abs();
}

CMat symplectic_act(const Mat4d& m, const CMat& omega, const Tolerance& tol) {
    Mat4d j = symplectic_form_j4();
    if (max_abs_diff4(mul4(transpose4(m), mul4(j, m)), j) >
        tol.abs_tol + tol.rel_tol * max_abs4(m) * max_abs4(m))
        throw std::domain_error("symplectic_act: matrix is not symplectic within tolerance");
    if (!in_siegel_h2(omega, tol))
        throw std::domain_error("symplectic_act: Im(omega) is not positive definite");

    CMat a(2, 2), b(2, 2), c(2, 2), d(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) {
            a.at(i, jj) = rat(m, i, jj);
            b.at(i, jj) = rat(m, i, jj + 2);
            c.at(i, jj) = rat(m, i + 2, jj);
            d.at(i, jj) = rat(m, i + 2, jj + 2);
        }
    CMat den = c * omega + d;
    if (std::abs(det2(den)) <= tol.abs_tol)
        throw std::runtime_error("symplectic_act: C*Omega + D singular (invalid input)");
    return (a * omega + b) * inverse2(den, tol);
}

HatPoint symplectic_act(const Mat4d& m, const HatPoint& p, const Tolerance& tol) {
    CMat img = symplectic_act(m, p.matrix(), tol);
    if (!in_hat_h2(img, tol))
        throw std::domain_error("symplectic_act: image left the special half-space");
    // average away roundoff so the (tau, z) representation stays clean
    cplx tau = 0.5 * (img.at(0, 0) + img.at(1, 1));
    cplx z = 0.5 * (img.at(0, 1) + img.at(1, 0));
    return HatPoint{tau, z};
}

CMat cayley_to_disk(const CMat& omega, const Tolerance& tol) {
    CMat i_id = CMat::identity(2) * cplx(0.0, 1.0);
    return (omega - i_id) * inverse2(omega + i_id, tol);
}

DiskPoint cayley_to_disk(const HatPoint& p, const Tolerance& tol) {
    CMat w = cayley_to_disk(p.matrix(), tol);
    return DiskPoint{0.5 * (w.at(0, 0) + w.at(1, 1)), 0.5 * (w.at(0, 1) + w.at(1, 0))};
}

CMat cayley_to_halfspace(const CMat& w, const Tolerance& tol) {
    CMat gap = CMat::identity(2) - w;
    if (std::abs(det2(gap)) <= tol.abs_tol)
        throw std::domain_error("cayley_to_halfspace: I - W singular (boundary point)");
    return cplx(0.0, 1.0) * (CMat::identity(2) + w) * inverse2(gap, tol);
}

HatPoint cayley_to_halfspace(const DiskPoint& w, const Tolerance& tol) {
    CMat omega = cayley_to_halfspace(w.matrix(), tol);
    return HatPoint{0.5 * (omega.at(0, 0) + omega.at(1, 1)), 0.5 * (omega.at(0, 1) + omega.at(1, 0))};
}

CMat GStarElement::matrix() const {
    CMat h(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            h.at(i, j) = alpha.at(i, j);
            h.at(i, j + 2) = beta.at(i, j);
            h.at(i + 2, j) = std::conj(beta.at(i, j));
            h.at(i + 2, j + 2) = std::conj(alpha.at(i, j));
        }
    return h;
}

GStarElement conjugate_by_t(const Mat4d& m) {
    CMat a(2, 2), b(2, 2), c(2, 2), d(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a.at(i, j) = rat(m, i, j);
            b.at(i, j) = rat(m, i, j + 2);
            c.at(i, j) = rat(m, i + 2, j);
            d.at(i, j) = rat(m, i + 2, j + 2);
        }
    GStarElement h;
    h.alpha = (a + d + cplx(0.0, 1.0) * (b - c)) * cplx(0.5, 0.0);
    h.beta = (a - d - cplx(0.0, 1.0) * (b + c)) * cplx(0.5, 0.0);
    return h;
}

double gstar_membership_residual(const GStarElement& h) {
    CMat hm = h.matrix();
    CMat i22 = CMat::identity(4);
    i22.at(2, 2) = -1.0;
    i22.at(3, 3) = -1.0;
    double r1 = max_abs_diff(hm.dagger() * i22 * hm, i22);

    CMat jc(4, 4);
    jc.at(0, 2) = 1.0;
    jc.at(1, 3) = 1.0;
    jc.at(2, 0) = -1.0;
    jc.at(3, 1) = -1.0;
    double r2 = max_abs_diff(hm.transpose() * jc * hm, jc);
    return std::max(r1, r2);
}

CMat disk_act(const GStarElement& h, const CMat& w, const Tolerance& tol) {
    double scale = std::max(1.0, h.matrix().max_abs());
    if (gstar_membership_residual(h) > tol.abs_tol + tol.rel_tol * scale * scale)
        throw std::domain_error("disk_act: element fails the conjugated-group identities");
    CMat den = h.beta.conjugate() * w + h.alpha.conjugate();
    if (std::abs(det2(den)) <= tol.abs_tol)
        throw std::runtime_error("disk_act: singular denominator (input outside the domain)");
    return (h.alpha * w + h.beta) * inverse2(den, tol);
}

HatPoint sample_hat_point(Rng& rng) {
    double y = rng.uniform(0.4, 3.0);
    double v = rng.uniform(-0.8, 0.8) * y;
    double x = rng.uniform(-2.0, 2.0);
    double u = rng.uniform(-2.0, 2.0);
    return HatPoint{cplx(x, y), cplx(u, v)};
}

} // namespace hs
