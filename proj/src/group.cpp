#include "group.hpp"

#include <cmath>

namespace hs {

namespace {

constexpr double kPi = 3.14159265358979323846;

double pattern_scale(const Mat4d& m) { return std::max(1.0, max_abs4(m)); }

// Solve a dense 6x6 system by Gaussian elimination with partial pivoting.
// Returns false when the matrix is singular within the threshold.
bool solve6(Mat6d a, std::array<double, 6>& b, double piv_tol) {
    for (int k = 0; k < 6; ++k) {
        int piv = k;
        for (int i = k + 1; i < 6; ++i)
            if (std::abs(a[static_cast<size_t>(6 * i + k)]) > std::abs(a[static_cast<size_t>(6 * piv + k)])) piv = i;
        if (std::abs(a[static_cast<size_t>(6 * piv + k)]) <= piv_tol) return false;
        if (piv != k) {
            for (int j = 0; j < 6; ++j)
                std::swap(a[static_cast<size_t>(6 * k + j)], a[static_cast<size_t>(6 * piv + j)]);
            std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(piv)]);
        }
        double p = a[static_cast<size_t>(6 * k + k)];
        for (int i = k + 1; i < 6; ++i) {
            double f = a[static_cast<size_t>(6 * i + k)] / p;
            if (f == 0.0) continue;
            for (int j = k; j < 6; ++j) a[static_cast<size_t>(6 * i + j)] -= f * a[static_cast<size_t>(6 * k + j)];
            b[static_cast<size_t>(i)] -= f * b[static_cast<size_t>(k)];
        }
    }
    for (int k = 5; k >= 0; --k) {
        double s = b[static_cast<size_t>(k)];
        for (int j = k + 1; j < 6; ++j) s -= a[static_cast<size_t>(6 * k + j)] * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(k)] = s / a[static_cast<size_t>(6 * k + k)];
    }
    return true;
}

} // namespace

std::optional<int> in_g_hat(const Mat4d& m, const Tolerance& tol) {
    double scale = pattern_scale(m);
    Mat4d j = symplectic_form_j4();
    if (max_abs_diff4(mul4(transpose4(m), mul4(j, m)), j) > tol.abs_tol + tol.rel_tol * scale * scale)
        return std::nullopt;
    Mat4d q = swap_involution_q4();
    Mat4d mq = mul4(m, q);
    Mat4d qm = mul4(q, m);
    double thresh = tol.abs_tol + tol.rel_tol * scale;
    if (max_abs_diff4(mq, qm) <= thresh) return 1;
    if (max_abs_diff4(mq, neg4(qm)) <= thresh) return -1;
    return std::nullopt;
}

GHatElement make_g_hat(const Mat4d& m, const Tolerance& tol) {
    auto eps = in_g_hat(m, tol);
    if (!eps) throw std::domain_error("make_g_hat: matrix is not in the special subgroup");
    return GHatElement{m, *eps};
}

GHatElement g_hat_mul(const GHatElement& a, const GHatElement& b, const Tolerance& tol) {
    return make_g_hat(mul4(a.m, b.m), tol);
}

Sl2Pair decompose_sl2_pair(const GHatElement& g, const Tolerance& tol) {
    (void)tol;
    if (g.epsilon != 1)
        throw std::domain_error("decompose_sl2_pair: defined on the epsilon = +1 part only");
    Sl2 m1{g.a1() + g.a2(), g.b1() + g.b2(), g.c1() + g.c2(), g.d1() + g.d2()};
    Sl2 m2{g.a1() - g.a2(), g.b1() - g.b2(), g.c1() - g.c2(), g.d1() - g.d2()};
    return Sl2Pair{m1, m2};
}

GHatElement compose_sl2_pair(const Sl2Pair& p, const Tolerance& tol) {
    if (!tol.close(p.m1.det(), 1.0) || !tol.close(p.m2.det(), 1.0))
        throw std::domain_error("compose_sl2_pair: factors must be unimodular");
    double a1 = 0.5 * (p.m1.a + p.m2.a), a2 = 0.5 * (p.m1.a - p.m2.a);
    double b1 = 0.5 * (p.m1.b + p.m2.b), b2 = 0.5 * (p.m1.b - p.m2.b);
    double c1 = 0.5 * (p.m1.c + p.m2.c), c2 = 0.5 * (p.m1.c - p.m2.c);
    double d1 = 0.5 * (p.m1.d + p.m2.d), d2 = 0.5 * (p.m1.d - p.m2.d);
    Mat4d m{};
    rat(m, 0, 0) = a1; rat(m, 0, 1) = a2; rat(m, 0, 2) = b1; rat(m, 0, 3) = b2;
    rat(m, 1, 0) = a2; rat(m, 1, 1) = a1; rat(m, 1, 2) = b2; rat(m, 1, 3) = b1;
    rat(m, 2, 0) = c1; rat(m, 2, 1) = c2; rat(m, 2, 2) = d1; rat(m, 2, 3) = d2;
    rat(m, 3, 0) = c2; rat(m, 3, 1) = c1; rat(m, 3, 2) = d2; rat(m, 3, 3) = d1;
    return GHatElement{m, 1};
}

HatPoint act_via_split(const Sl2Pair& p, const HatPoint& pt, int epsilon, const Tolerance& tol) {
    if (epsilon != 1 && epsilon != -1)
        throw std::domain_error("act_via_split: epsilon must be +1 or -1");
    if (!valid_hat_point(pt, tol))
        throw std::domain_error("act_via_split: point outside the special half-space");
    cplx wp = p.m1.moebius(pt.w_plus());
    cplx wm = p.m2.moebius(pt.w_minus());
    cplx tau = 0.5 * (wp + wm);
    cplx z = 0.5 * static_cast<double>(epsilon) * (wp - wm);
    return HatPoint{tau, z};
}

Mat4d LieHatElement::matrix() const {
    Mat4d m{};
    rat(m, 0, 0) = x1;  rat(m, 0, 1) = x2;  rat(m, 0, 2) = y1;  rat(m, 0, 3) = y2;
    rat(m, 1, 0) = x2;  rat(m, 1, 1) = x1;  rat(m, 1, 2) = y2;  rat(m, 1, 3) = y1;
    rat(m, 2, 0) = z1;  rat(m, 2, 1) = z2;  rat(m, 2, 2) = -x1; rat(m, 2, 3) = -x2;
    rat(m, 3, 0) = z2;  rat(m, 3, 1) = z1;  rat(m, 3, 2) = -x2; rat(m, 3, 3) = -x1;
    return m;
}

bool in_lie_hat(const Mat4d& x, const Tolerance& tol) {
    LieHatElement l{rat(x, 0, 0), rat(x, 0, 1), rat(x, 0, 2), rat(x, 0, 3),
                    rat(x, 2, 0), rat(x, 2, 1)};
    return max_abs_diff4(x, l.matrix()) <= tol.abs_tol + tol.rel_tol * max_abs4(x);
}

LieHatElement lie_from_matrix(const Mat4d& x, const Tolerance& tol) {
    if (!in_lie_hat(x, tol))
        throw std::domain_error("lie_from_matrix: matrix does not match the algebra pattern");
    return LieHatElement{rat(x, 0, 0), rat(x, 0, 1), rat(x, 0, 2), rat(x, 0, 3),
                         rat(x, 2, 0), rat(x, 2, 1)};
}

LieHatElement lie_bracket(const LieHatElement& a, const LieHatElement& b) {
    Mat4d am = a.matrix(), bm = b.matrix();
    Mat4d c = mul4(am, bm);
    Mat4d d = mul4(bm, am);
    Mat4d r{};
    for (size_t i = 0; i < 16; ++i) r[i] = c[i] - d[i];
    // brackets stay in the algebra exactly; read the coordinates back
    return LieHatElement{rat(r, 0, 0), rat(r, 0, 1), rat(r, 0, 2), rat(r, 0, 3),
                         rat(r, 2, 0), rat(r, 2, 1)};
}

std::array<LieHatElement, 6> lie_canonical_basis() {
    std::array<LieHatElement, 6> b{};
    b[0].x1 = 1;
    b[1].x2 = 1;
    b[2].y1 = 1;
    b[3].y2 = 1;
    b[4].z1 = 1;
    b[5].z2 = 1;
    return b;
}

Mat6d killing_gram(const std::array<LieHatElement, 6>& basis, const Tolerance& tol) {
    // coordinate matrix of the basis, columns = coords
    Mat6d coord{};
    double scale = 0.0;
    for (int j = 0; j < 6; ++j) {
        auto c = basis[static_cast<size_t>(j)].coords();
        for (int i = 0; i < 6; ++i) {
            coord[static_cast<size_t>(6 * i + j)] = c[static_cast<size_t>(i)];
            scale = std::max(scale, std::abs(c[static_cast<size_t>(i)]));
        }
    }
    double piv_tol = tol.abs_tol + tol.rel_tol * scale;

    // ad(basis[k]) expressed in the basis itself: solve coord * u = [X, B_j]
    std::array<Mat6d, 6> ad{};
    for (int k = 0; k < 6; ++k) {
        for (int j = 0; j < 6; ++j) {
            auto br = lie_bracket(basis[static_cast<size_t>(k)], basis[static_cast<size_t>(j)]).coords();
            std::array<double, 6> u = br;
            if (!solve6(coord, u, piv_tol))
                throw std::domain_error("killing_gram: basis does not span the algebra");
            for (int i = 0; i < 6; ++i) ad[static_cast<size_t>(k)][static_cast<size_t>(6 * i + j)] = u[static_cast<size_t>(i)];
        }
    }

    Mat6d gram{};
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
            double tr = 0.0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    tr += ad[static_cast<size_t>(p)][static_cast<size_t>(6 * i + j)] *
                          ad[static_cast<size_t>(q)][static_cast<size_t>(6 * j + i)];
            gram[static_cast<size_t>(6 * p + q)] = tr;
        }
    return gram;
}

int gram_rank(const Mat6d& g, const Tolerance& tol) {
    Mat6d a = g;
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    double thresh = tol.abs_tol + tol.rel_tol * scale;
    int rank = 0;
    for (int col = 0, row = 0; col < 6 && row < 6; ++col) {
        int piv = row;
        for (int i = row + 1; i < 6; ++i)
            if (std::abs(a[static_cast<size_t>(6 * i + col)]) > std::abs(a[static_cast<size_t>(6 * piv + col)])) piv = i;
        if (std::abs(a[static_cast<size_t>(6 * piv + col)]) <= thresh) continue;
        if (piv != row)
            for (int j = 0; j < 6; ++j)
                std::swap(a[static_cast<size_t>(6 * row + j)], a[static_cast<size_t>(6 * piv + j)]);
        for (int i = row + 1; i < 6; ++i) {
            double f = a[static_cast<size_t>(6 * i + col)] / a[static_cast<size_t>(6 * row + col)];
            for (int j = col; j < 6; ++j)
                a[static_cast<size_t>(6 * i + j)] -= f * a[static_cast<size_t>(6 * row + j)];
        }
        ++row;
        ++rank;
    }
    return rank;
}

KillingFit fit_killing_constant(const std::array<LieHatElement, 6>& basis, const Mat6d& gram) {
    // pattern value at c = 1: 2 (2 a1 p1 + 2 a2 p2 + b1 r1 + b2 r2 + c1 q1 + c2 q2)
    auto pattern = [](const LieHatElement& u, const LieHatElement& w) {
        return 2.0 * (2.0 * u.x1 * w.x1 + 2.0 * u.x2 * w.x2 + u.y1 * w.z1 + u.y2 * w.z2 +
                      u.z1 * w.y1 + u.z2 * w.y2);
    };
    double num = 0.0, den = 0.0, gnorm = 0.0;
    Mat6d pat{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            double p = pattern(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
            pat[static_cast<size_t>(6 * i + j)] = p;
            double g = gram[static_cast<size_t>(6 * i + j)];
            num += p * g;
            den += p * p;
            gnorm += g * g;
        }
    KillingFit fit;
    fit.c = (den > 0.0) ? num / den : 0.0;
    double rss = 0.0;
    for (size_t i = 0; i < 36; ++i) {
        double d = gram[i] - fit.c * pat[i];
        rss += d * d;
    }
    fit.residual = (gnorm > 0.0) ? std::sqrt(rss / gnorm) : std::sqrt(rss);
    return fit;
}

bool in_stabilizer(const GHatElement& g, const Tolerance& tol) {
    // C = -B and D = A blocks
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (!tol.close(rat(g.m, i + 2, j), -rat(g.m, i, j + 2))) return false;
            if (!tol.close(rat(g.m, i + 2, j + 2), rat(g.m, i, j))) return false;
        }
    double n = g.a1() * g.a1() + g.a2() * g.a2() + g.b1() * g.b1() + g.b2() * g.b2();
    double cross = g.a1() * g.a2() + g.b1() * g.b2();
    return tol.close(n, 1.0) && tol.close(cross, 0.0);
}

Sl2 sample_sl2(Rng& rng) {
    double theta = rng.uniform(0.0, 2.0 * kPi);
    double t = rng.uniform(-1.0, 1.0);
    double s = rng.uniform(-1.0, 1.0);
    Sl2 rot{std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)};
    Sl2 diag{std::exp(t), 0.0, 0.0, std::exp(-t)};
    Sl2 shear{1.0, s, 0.0, 1.0};
    return rot.mul(diag).mul(shear);
}

GHatElement sample_g_hat_plus(Rng& rng) {
    Sl2Pair p{sample_sl2(rng), sample_sl2(rng)};
    return compose_sl2_pair(p);
}

GHatElement sample_g_hat_plus(std::uint64_t seed) {
    Rng rng(seed);
    return sample_g_hat_plus(rng);
}

GHatElement g_hat_minus_representative() {
    Mat4d m{};
    rat(m, 0, 0) = 1.0;
    rat(m, 1, 1) = -1.0;
    rat(m, 2, 2) = 1.0;
    rat(m, 3, 3) = -1.0;
    return GHatElement{m, -1};
}

} // namespace hs
