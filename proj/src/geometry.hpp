#pragma once

#include <functional>

#include "halfspace.hpp"
#include "tolerance.hpp"

namespace hs {

/// Coefficients of the invariant metric in real coordinates (x, y, u, v),
/// tau = x + iy, z = u + iv:
///   ds^2 = g (dx^2 + dy^2 + du^2 + dv^2) + 2 g_xu (dx du + dy dv),
///   g = 2 (y^2 + v^2) / (y^2 - v^2)^2,  g_xu = -4 y v / (y^2 - v^2)^2.
/// In split coordinates tau +- z this is the product of the two hyperbolic
/// upper half-plane metrics.
struct MetricAtPoint {
    double g_xx, g_yy, g_uu, g_vv;
    double g_xu, g_yv;
};

MetricAtPoint metric_at(const HatPoint& p, const Tolerance& tol = Tolerance());

/// Distance data between two points. The two half-plane factors carry the
/// geometry: cosh of the factor distance is A/2 (resp. B/2), lambda and mu
/// are the exponentials of the factor distances and
///   rho = sqrt(log(lambda)^2 + log(mu)^2).
struct DistanceBreakdown {
    double A, B;
    double lambda, mu;
    double rho;
};

DistanceBreakdown distance(const HatPoint& p1, const HatPoint& p2,
                           const Tolerance& tol = Tolerance());

/// Hyperbolic upper half-plane distance (used as the factor oracle).
double hyperbolic_distance(cplx w1, cplx w2);

/// Point at arc length s on the geodesic from p1 to p2, 0 <= s <= s0 where
/// s0 = distance(p1, p2).rho. The curve is unit speed; gamma(0) = p1
/// exactly and gamma(s0) = p2 in closed form.
HatPoint geodesic_point(const HatPoint& p1, const HatPoint& p2, double s,
                        const Tolerance& tol = Tolerance());

/// Invariant volume density 4 / ((y+v)^2 (y-v)^2).
double volume_density(const HatPoint& p, const Tolerance& tol = Tolerance());

using ScalarField = std::function<double(const HatPoint&)>;

/// Laplace-Beltrami operator of the invariant metric, evaluated by central
/// finite differences with step h (error O(h^2) for smooth fields):
///   (y^2+v^2)/2 (f_xx + f_yy + f_uu + f_vv) + 2 y v (f_xu + f_yv),
/// i.e. the sum of the hyperbolic Laplacians of the two split factors.
double laplacian_apply(const ScalarField& f, const HatPoint& p, double h = 1e-3,
                       const Tolerance& tol = Tolerance());

/// Richardson-extrapolated variant, (4 D(h/2) - D(h)) / 3: cancels the h^2
/// truncation term, leaving O(h^4) error.
double laplacian_apply_richardson(const ScalarField& f, const HatPoint& p, double h = 1e-3,
                                  const Tolerance& tol = Tolerance());

} // namespace hs
