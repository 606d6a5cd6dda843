#pragma once

#include "rng.hpp"
#include "smallmat.hpp"
#include "tolerance.hpp"

namespace hs {

/// A point of the special half-space: the 2x2 matrix [[tau, z], [z, tau]]
/// stored by its two independent entries. Membership requires
/// Im(tau) > |Im(z)| >= 0, strictly (boundary points are rejected within
/// abs_tol); equivalently the imaginary part of the matrix is positive
/// definite.
struct HatPoint {
    cplx tau;
    cplx z;

    CMat matrix() const;
    double y() const { return tau.imag(); }
    double v() const { return z.imag(); }
    /// split coordinates: the two upper half-plane factors tau +- z
    cplx w_plus() const { return tau + z; }
    cplx w_minus() const { return tau - z; }
};

bool valid_hat_point(const HatPoint& p, const Tolerance& tol = Tolerance());
HatPoint make_hat_point(cplx tau, cplx z, const Tolerance& tol = Tolerance());

bool operator==(const HatPoint& a, const HatPoint& b);
double max_abs_diff(const HatPoint& a, const HatPoint& b);

/// Symmetric 2x2 matrix commuting with q, i.e. of the shape [[a, b], [b, a]];
/// membership in the special disk additionally needs I - W conj(W) > 0.
struct DiskPoint {
    cplx a;
    cplx b;

    CMat matrix() const;
};

DiskPoint disk_point_from_matrix(const CMat& w, const Tolerance& tol = Tolerance());

/// Membership test for the special half-space on a raw 2x2 complex matrix:
/// symmetric with equal diagonal and equal off-diagonal entries, and
/// Im(tau) > |Im(z)| within tol. Returns false on malformed shape.
bool in_hat_h2(const CMat& omega, const Tolerance& tol = Tolerance());

/// Membership in the full degree-2 Siegel half-space (symmetric, Im > 0).
bool in_siegel_h2(const CMat& omega, const Tolerance& tol = Tolerance());

/// Membership in the bounded domain (symmetric, I - W conj(W) > 0).
bool in_disk_d2(const CMat& w, const Tolerance& tol = Tolerance());

/// Membership in the special disk: in_disk_d2 plus qW = Wq.
bool in_disk_hat(const CMat& w, const Tolerance& tol = Tolerance());

/// Fractional-linear symplectic action (A Omega + B)(C Omega + D)^-1.
/// Requires m symplectic within tol and Im(omega) positive definite.
CMat symplectic_act(const Mat4d& m, const CMat& omega, const Tolerance& tol = Tolerance());
HatPoint symplectic_act(const Mat4d& m, const HatPoint& p, const Tolerance& tol = Tolerance());

/// Cayley transform toward the bounded domain: (Omega - iI)(Omega + iI)^-1.
CMat cayley_to_disk(const CMat& omega, const Tolerance& tol = Tolerance());
DiskPoint cayley_to_disk(const HatPoint& p, const Tolerance& tol = Tolerance());

/// Inverse Cayley transform: i (I + W)(I - W)^-1. Throws std::domain_error
/// when I - W is singular within tolerance (boundary point).
CMat cayley_to_halfspace(const CMat& w, const Tolerance& tol = Tolerance());
HatPoint cayley_to_halfspace(const DiskPoint& w, const Tolerance& tol = Tolerance());

/// Image of a real symplectic matrix under conjugation by the Cayley matrix:
/// the block form [[alpha, beta], [conj(beta), conj(alpha)]] with
///   alpha = ((A+D) + i(B-C)) / 2,   beta = ((A-D) - i(B+C)) / 2.
struct GStarElement {
    CMat alpha; // 2x2
    CMat beta;  // 2x2

    CMat matrix() const;
};

GStarElement conjugate_by_t(const Mat4d& m);

/// Largest residual of the two membership identities of the conjugated
/// group: h in SU(2,2) and h symplectic over C.
double gstar_membership_residual(const GStarElement& h);

/// Bounded-domain action (alpha W + beta)(conj(beta) W + conj(alpha))^-1.
/// Requires h to satisfy the membership identities within tol.
CMat disk_act(const GStarElement& h, const CMat& w, const Tolerance& tol = Tolerance());

/// Deterministic pseudo-random point of the special half-space, used by the
/// property suites.
HatPoint sample_hat_point(Rng& rng);

} // namespace hs
