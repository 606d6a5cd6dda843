#pragma once

#include <array>

#include "halfspace.hpp"
#include "polarization.hpp"
#include "tolerance.hpp"

namespace hs {

/// Lattice-sum truncation: the series runs over |n1|, |n2| <= radius and
/// tail_bound is the rigorous Gaussian bound
///   sum_{k > radius} 8k exp(-pi lmin k^2 + 2 pi k (|Im z1| + |Im z2|)),
/// lmin = smallest eigenvalue of Im(Omega) = Im(tau) - |Im(z)|.
struct ThetaTruncation {
    int radius = 1;
    double tail_bound = 1.0;
};

double theta_tail_bound(const HatPoint& omega, const CVec2& zpt, int radius);

/// Smallest radius whose tail bound meets the target; throws when the
/// target is unreachable below the internal radius cap.
ThetaTruncation choose_truncation(const HatPoint& omega, const CVec2& zpt,
                                  double target = 1e-12);

struct ThetaValue {
    cplx value;
    int radius = 0;
    double tail_bound = 0.0;
    bool accurate = true; // false when the requested radius missed 1e-12
};

/// Truncated lattice series sum_n exp(i pi n Omega n^t + 2 pi i n.z) over
/// the square box |n|_inf <= radius.
ThetaValue theta_series(const HatPoint& omega, const CVec2& zpt, const ThetaTruncation& trunc);

struct ResidualReport {
    double residual = 0.0;
    bool conclusive = true; // false when every retry landed on a theta-null
    int retries = 0;
};

/// Relative defect of the translation law
///   theta(z + m Omega + k) = exp(-i pi m Omega m^t - 2 pi i m.z) theta(z)
/// for integer vectors m, k. Near a zero of theta the base point is shifted
/// by (0.1, 0.07i) up to three times before reporting inconclusive.
ResidualReport quasi_periodicity_residual(const HatPoint& omega, const CVec2& zpt,
                                          const std::array<int, 2>& m,
                                          const std::array<int, 2>& k,
                                          const ThetaTruncation& trunc,
                                          const Tolerance& tol = Tolerance());

struct BridgeResult {
    double residual = 0.0;
    std::array<cplx, 4> twist{}; // fitted character on the basis vectors
    bool conclusive = true;
    int retries = 0;
};

/// Connects the lattice series to the principal-polarization automorphic
/// factor. With B(u, w) = u . Im(Omega)^-1 . w^t (symmetric bilinear) the
/// scaled function exp(pi/2 B(z, z)) theta(z) satisfies the factor equation
/// for the kind-Tau form, up to a character fitted on the basis vectors.
/// Requires Im(z-coordinate of Omega) = 0, the principal integrality domain.
BridgeResult principal_bridge_residual(const HatPoint& omega, const CVec2& zpt,
                                       const LatticeIndex& alpha, const ThetaTruncation& trunc,
                                       const Tolerance& tol = Tolerance());

} // namespace hs
