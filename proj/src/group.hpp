#pragma once

#include <array>
#include <optional>

#include "halfspace.hpp"
#include "rng.hpp"
#include "smallmat.hpp"
#include "tolerance.hpp"

namespace hs {

/// Element of the symmetry group of the special half-space: a real 4x4
/// symplectic matrix that commutes (epsilon = +1) or anticommutes
/// (epsilon = -1) with the swap involution Q. The eight scalars a1..d2 are
/// the independent block entries; epsilon is detected from the matrix,
/// never supplied by callers.
struct GHatElement {
    Mat4d m{};
    int epsilon = 1;

    double a1() const { return rat(m, 0, 0); }
    double a2() const { return rat(m, 0, 1); }
    double b1() const { return rat(m, 0, 2); }
    double b2() const { return rat(m, 0, 3); }
    double c1() const { return rat(m, 2, 0); }
    double c2() const { return rat(m, 2, 1); }
    double d1() const { return rat(m, 2, 2); }
    double d2() const { return rat(m, 2, 3); }
};

/// Returns the sign epsilon when m is symplectic and (anti)commutes with Q
/// within tol, absent otherwise.
std::optional<int> in_g_hat(const Mat4d& m, const Tolerance& tol = Tolerance());

/// Wraps a raw matrix, throwing std::domain_error when it fails in_g_hat.
GHatElement make_g_hat(const Mat4d& m, const Tolerance& tol = Tolerance());

GHatElement g_hat_mul(const GHatElement& a, const GHatElement& b, const Tolerance& tol = Tolerance());

/// Real 2x2 with determinant 1, acting on the upper half-plane by Moebius
/// transformations.
struct Sl2 {
    double a = 1, b = 0, c = 0, d = 1;

    double det() const { return a * d - b * c; }
    cplx moebius(cplx w) const { return (a * w + b) / (c * w + d); }
    Sl2 mul(const Sl2& o) const {
        return Sl2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

struct Sl2Pair {
    Sl2 m1;
    Sl2 m2;
};

/// Splits an epsilon = +1 element into its two unimodular factors
///   M1 = [[a1+a2, b1+b2], [c1+c2, d1+d2]],  M2 = [[a1-a2, b1-b2], [c1-c2, d1-d2]].
/// Throws std::domain_error on epsilon = -1 input.
Sl2Pair decompose_sl2_pair(const GHatElement& g, const Tolerance& tol = Tolerance());

/// Inverse of the splitting; the output always carries epsilon = +1.
/// Throws std::domain_error unless both inputs are unimodular within tol.
GHatElement compose_sl2_pair(const Sl2Pair& p, const Tolerance& tol = Tolerance());

/// Factorwise action on split coordinates:
///   tau* = (M1<tau+z> + M2<tau-z>) / 2,  z* = epsilon (M1<tau+z> - M2<tau-z>) / 2.
HatPoint act_via_split(const Sl2Pair& p, const HatPoint& pt, int epsilon,
                       const Tolerance& tol = Tolerance());

/// Element of the 6-dimensional Lie algebra: blocks [[X, Y], [Z, -X]] with
/// X, Y, Z all of the shape [[p, q], [q, p]].
struct LieHatElement {
    double x1 = 0, x2 = 0; // X block
    double y1 = 0, y2 = 0; // Y block
    double z1 = 0, z2 = 0; // Z block

    Mat4d matrix() const;
    std::array<double, 6> coords() const { return {x1, x2, y1, y2, z1, z2}; }
};

bool in_lie_hat(const Mat4d& x, const Tolerance& tol = Tolerance());
LieHatElement lie_from_matrix(const Mat4d& x, const Tolerance& tol = Tolerance());
LieHatElement lie_bracket(const LieHatElement& a, const LieHatElement& b);

/// The six canonical basis elements (x1, x2, y1, y2, z1, z2 directions).
std::array<LieHatElement, 6> lie_canonical_basis();

using Mat6d = std::array<double, 36>;

/// Gram matrix of the Killing form Tr(ad X ad Y), computed by brute force:
/// the 6x6 matrices of ad in the supplied basis are built, multiplied and
/// traced. Throws std::domain_error when the basis does not span.
Mat6d killing_gram(const std::array<LieHatElement, 6>& basis, const Tolerance& tol = Tolerance());

/// Numerical rank by pivoted Gaussian elimination with a relative threshold.
int gram_rank(const Mat6d& g, const Tolerance& tol = Tolerance());

/// Least-squares fit of the constant c in the bilinear pattern
/// 2c (2 a1 p1 + 2 a2 p2 + b1 r1 + b2 r2 + c1 q1 + c2 q2) against a computed
/// Gram matrix, together with the relative residual of the fit.
struct KillingFit {
    double c = 0.0;
    double residual = 0.0;
};
KillingFit fit_killing_constant(const std::array<LieHatElement, 6>& basis, const Mat6d& gram);

/// Stabilizer of i*I2: block pattern C = -B, D = A with
/// a1^2 + a2^2 + b1^2 + b2^2 = 1 and a1 a2 + b1 b2 = 0.
bool in_stabilizer(const GHatElement& g, const Tolerance& tol = Tolerance());

/// Deterministic pseudo-random unimodular matrix from bounded Iwasawa
/// coordinates: rotation x diag(e^t, e^-t) x shear with angle uniform,
/// t and the shear in [-1, 1]. Keeps conditioning safe for 1e-10 tolerances.
Sl2 sample_sl2(Rng& rng);

/// Pseudo-random epsilon = +1 element built from two sampled unimodular
/// factors; a pure function of the seed.
GHatElement sample_g_hat_plus(std::uint64_t seed);
GHatElement sample_g_hat_plus(Rng& rng);

/// Fixed representative of the epsilon = -1 part (diag(1,-1,1,-1)).
GHatElement g_hat_minus_representative();

} // namespace hs
