#include "geometry.hpp"

#include <cmath>
#include <string>

namespace hs {

namespace {

void require_interior(const HatPoint& p, const Tolerance& tol, const char* who) {
    if (!valid_hat_point(p, tol)) throw std::domain_error(std::string(who) + ": point outside the special half-space");
}

struct FactorGeodesic {
    double x1, y1; // start
    double u1, v1; // end
    double lambda; // exp of the factor distance
};

// Position at fraction controlled by lambda^(s/s0); collapses to the
// constant i when the factor is stationary (lambda = 1).
cplx factor_position(const FactorGeodesic& f, double s, double s0) {
    double biglam = std::expm1(2.0 * std::log(f.lambda)); // lambda^2 - 1
    double k;
    if (biglam == 0.0) {
        k = 0.0; // stationary factor, numerator terms vanish anyway
    } else {
        k = std::expm1(2.0 * (s / s0) * std::log(f.lambda)) / biglam;
    }
    double pw = std::pow(f.lambda, s / s0);
    cplx num = f.lambda * (f.u1 - f.x1) * k + cplx(0.0, f.v1 * pw);
    cplx den = (f.lambda * f.y1 - f.v1) * k + f.v1;
    return num / den;
}

} // namespace

MetricAtPoint metric_at(const HatPoint& p, const Tolerance& tol) {
    require_interior(p, tol, "metric_at");
    double y = p.y(), v = p.v();
    double d = y * y - v * v;
    double g = 2.0 * (y * y + v * v) / (d * d);
    double cross = -4.0 * y * v / (d * d);
    return MetricAtPoint{g, g, g, g, cross, cross};
}

double hyperbolic_distance(cplx w1, cplx w2) {
    double dx = w1.real() - w2.real();
    double dy = w1.imag() - w2.imag();
    double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * w1.imag() * w2.imag());
    return std::acosh(std::max(1.0, arg));
}

DistanceBreakdown distance(const HatPoint& p1, const HatPoint& p2, const Tolerance& tol) {
    require_interior(p1, tol, "distance");
    require_interior(p2, tol, "distance");
    cplx a1 = p1.w_plus(), a2 = p1.w_minus();
    cplx b1 = p2.w_plus(), b2 = p2.w_minus();

    auto cosh2 = [](cplx w, cplx ww) {
        double dx = w.real() - ww.real();
        return (w.imag() * w.imag() + ww.imag() * ww.imag() + dx * dx) / (w.imag() * ww.imag());
    };
    DistanceBreakdown r{};
    r.A = std::max(2.0, cosh2(a1, b1));
    r.B = std::max(2.0, cosh2(a2, b2));
    r.lambda = 0.5 * (r.A + std::sqrt(std::max(0.0, r.A * r.A - 4.0)));
    r.mu = 0.5 * (r.B + std::sqrt(std::max(0.0, r.B * r.B - 4.0)));
    double ll = std::log(r.lambda), lm = std::log(r.mu);
    r.rho = std::sqrt(ll * ll + lm * lm);
    return r;
}

HatPoint geodesic_point(const HatPoint& p1, const HatPoint& p2, double s, const Tolerance& tol) {
    require_interior(p1, tol, "geodesic_point");
    require_interior(p2, tol, "geodesic_point");
    if (max_abs_diff(p1, p2) <= tol.abs_tol)
        throw std::domain_error("geodesic_point: endpoints coincide");
    DistanceBreakdown d = distance(p1, p2, tol);
    double s0 = d.rho;
    if (s < 0.0 || s > s0 * (1.0 + tol.rel_tol) + tol.abs_tol)
        throw std::domain_error("geodesic_point: arc length outside [0, s0]");
    if (s == 0.0) return p1;
    s = std::min(s, s0);

    FactorGeodesic fp{p1.w_plus().real(), p1.w_plus().imag(),
                       p2.w_plus().real(), p2.w_plus().imag(), d.lambda};
    FactorGeodesic fm{p1.w_minus().real(), p1.w_minus().imag(),
                       p2.w_minus().real(), p2.w_minus().imag(), d.mu};

    cplx rp = factor_position(fp, s, s0);
    cplx rm = factor_position(fm, s, s0);
    // w_plus(s) = x1 + y1 R(s), w_minus(s) = x2 + y2 T(s)
    cplx wp = fp.x1 + fp.y1 * rp;
    cplx wm = fm.x1 + fm.y1 * rm;
    return HatPoint{0.5 * (wp + wm), 0.5 * (wp - wm)};
}

double volume_density(const HatPoint& p, const Tolerance& tol) {
    require_interior(p, tol, "volume_density");
    double y = p.y(), v = p.v();
    double a = (y + v) * (y + v);
    double b = (y - v) * (y - v);
    return 4.0 / (a * b);
}

double laplacian_apply(const ScalarField& f, const HatPoint& p, double h, const Tolerance& tol) {
    require_interior(p, tol, "laplacian_apply");
    if (!(h > 0.0) || h > 0.1) throw std::domain_error("laplacian_apply: step must lie in (0, 0.1]");

    double x = p.tau.real(), y = p.tau.imag();
    double u = p.z.real(), v = p.z.imag();
    auto eval = [&](double dx, double dy, double du, double dv) {
        return f(HatPoint{cplx(x + dx, y + dy), cplx(u + du, v + dv)});
    };

    double f0 = eval(0, 0, 0, 0);
    double fxx = (eval(h, 0, 0, 0) - 2.0 * f0 + eval(-h, 0, 0, 0)) / (h * h);
    double fyy = (eval(0, h, 0, 0) - 2.0 * f0 + eval(0, -h, 0, 0)) / (h * h);
    double fuu = (eval(0, 0, h, 0) - 2.0 * f0 + eval(0, 0, -h, 0)) / (h * h);
    double fvv = (eval(0, 0, 0, h) - 2.0 * f0 + eval(0, 0, 0, -h)) / (h * h);
    double fxu = (eval(h, 0, h, 0) - eval(h, 0, -h, 0) - eval(-h, 0, h, 0) + eval(-h, 0, -h, 0)) / (4.0 * h * h);
    double fyv = (eval(0, h, 0, h) - eval(0, h, 0, -h) - eval(0, -h, 0, h) + eval(0, -h, 0, -h)) / (4.0 * h * h);

    double w = 0.5 * (y * y + v * v);
    return w * (fxx + fyy + fuu + fvv) + 2.0 * y * v * (fxu + fyv);
}

double laplacian_apply_richardson(const ScalarField& f, const HatPoint& p, double h,
                                  const Tolerance& tol) {
    double coarse = laplacian_apply(f, p, h, tol);
    double fine = laplacian_apply(f, p, 0.5 * h, tol);
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace hs
