#include "smallmat.hpp"

#include <cmath>

namespace hs {

namespace {
bool legal_dim(int n) { return n == 1 || n == 2 || n == 4; }
} // namespace

CMat::CMat(int r, int c) : rows(r), cols(c) {
    if (!legal_dim(r) || !legal_dim(c))
        throw std::domain_error("CMat: dimensions must be 1, 2 or 4");
}

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::operator+(const CMat& o) const {
    if (!same_shape(*this, o)) throw std::domain_error("CMat: shape mismatch in +");
    CMat r(rows, cols);
    for (int i = 0; i < rows * cols; ++i) r.e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] + o.e[static_cast<size_t>(i)];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    if (!same_shape(*this, o)) throw std::domain_error("CMat: shape mismatch in -");
    CMat r(rows, cols);
    for (int i = 0; i < rows * cols; ++i) r.e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] - o.e[static_cast<size_t>(i)];
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    if (cols != o.rows) throw std::domain_error("CMat: shape mismatch in *");
    CMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            cplx aik = at(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

CMat CMat::operator*(cplx s) const {
    CMat r(rows, cols);
    for (int i = 0; i < rows * cols; ++i) r.e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] * s;
    return r;
}

CMat operator*(cplx s, const CMat& m) { return m * s; }

CMat CMat::transpose() const {
    CMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

CMat CMat::conjugate() const {
    CMat r(rows, cols);
    for (int i = 0; i < rows * cols; ++i) r.e[static_cast<size_t>(i)] = std::conj(e[static_cast<size_t>(i)]);
    return r;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < rows * cols; ++i) m = std::max(m, std::abs(e[static_cast<size_t>(i)]));
    return m;
}

bool CMat::all_finite() const {
    for (int i = 0; i < rows * cols; ++i) {
        const cplx& v = e[static_cast<size_t>(i)];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

bool same_shape(const CMat& a, const CMat& b) { return a.rows == b.rows && a.cols == b.cols; }

double max_abs_diff(const CMat& a, const CMat& b) {
    if (!same_shape(a, b)) throw std::domain_error("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (int i = 0; i < a.rows * a.cols; ++i) m = std::max(m, std::abs(a.e[static_cast<size_t>(i)] - b.e[static_cast<size_t>(i)]));
    return m;
}

cplx det2(const CMat& m) {
    if (m.rows != 2 || m.cols != 2) throw std::domain_error("det2: matrix is not 2x2");
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

cplx det(const CMat& m) {
    if (m.rows != m.cols) throw std::domain_error("det: matrix is not square");
    if (m.rows == 1) return m.at(0, 0);
    if (m.rows == 2) return det2(m);
    // 4x4 by LU with partial pivoting
    CMat a = m;
    cplx d = 1.0;
    for (int k = 0; k < 4; ++k) {
        int piv = k;
        for (int i = k + 1; i < 4; ++i)
            if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
        if (piv != k) {
            for (int j = 0; j < 4; ++j) std::swap(a.at(k, j), a.at(piv, j));
            d = -d;
        }
        if (a.at(k, k) == cplx(0.0, 0.0)) return 0.0;
        d *= a.at(k, k);
        for (int i = k + 1; i < 4; ++i) {
            cplx f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < 4; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return d;
}

bool is_hermitian_pd(const CMat& m, const Tolerance& tol) {
    if (m.rows != 2 || m.cols != 2) throw std::domain_error("is_hermitian_pd: matrix is not 2x2");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!tol.close(m.at(i, j), std::conj(m.at(j, i)))) return false;
    double m00 = m.at(0, 0).real();
    double d = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).real();
    return m00 > tol.abs_tol && d > tol.abs_tol;
}

CMat inverse2(const CMat& m, const Tolerance& tol) {
    cplx d = det2(m);
    if (std::abs(d) <= tol.abs_tol) throw std::domain_error("inverse2: matrix is singular within tolerance");
    CMat r(2, 2);
    r.at(0, 0) = m.at(1, 1) / d;
    r.at(0, 1) = -m.at(0, 1) / d;
    r.at(1, 0) = -m.at(1, 0) / d;
    r.at(1, 1) = m.at(0, 0) / d;
    return r;
}

CMat inverse(const CMat& m, const Tolerance& tol) {
    if (m.rows != m.cols) throw std::domain_error("inverse: matrix is not square");
    int n = m.rows;
    if (n == 1) {
        if (std::abs(m.at(0, 0)) <= tol.abs_tol) throw std::domain_error("inverse: singular");
        CMat r(1, 1);
        r.at(0, 0) = 1.0 / m.at(0, 0);
        return r;
    }
    if (n == 2) return inverse2(m, tol);
    CMat a = m;
    CMat r = CMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
        if (std::abs(a.at(piv, k)) <= tol.abs_tol)
            throw std::domain_error("inverse: matrix is singular within tolerance");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(piv, j));
                std::swap(r.at(k, j), r.at(piv, j));
            }
        cplx p = a.at(k, k);
        for (int j = 0; j < n; ++j) {
            a.at(k, j) /= p;
            r.at(k, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            cplx f = a.at(i, k);
            if (f == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                r.at(i, j) -= f * r.at(k, j);
            }
        }
    }
    return r;
}

Mat4d ident4() {
    Mat4d m{};
    for (int i = 0; i < 4; ++i) rat(m, i, i) = 1.0;
    return m;
}

Mat4d mul4(const Mat4d& a, const Mat4d& b) {
    Mat4d r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            double aik = rat(a, i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < 4; ++j) rat(r, i, j) += aik * rat(b, k, j);
        }
    return r;
}

Mat4d transpose4(const Mat4d& m) {
    Mat4d r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rat(r, j, i) = rat(m, i, j);
    return r;
}

Mat4d neg4(const Mat4d& m) {
    Mat4d r{};
    for (size_t i = 0; i < 16; ++i) r[i] = -m[i];
    return r;
}

double max_abs4(const Mat4d& m) {
    double r = 0.0;
    for (double v : m) r = std::max(r, std::abs(v));
    return r;
}

double max_abs_diff4(const Mat4d& a, const Mat4d& b) {
    double r = 0.0;
    for (size_t i = 0; i < 16; ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

CMat to_cmat(const Mat4d& m) {
    CMat r(4, 4);
    for (int i = 0; i < 16; ++i) r.e[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
    return r;
}

Mat4d symplectic_form_j4() {
    Mat4d j{};
    rat(j, 0, 2) = 1.0;
    rat(j, 1, 3) = 1.0;
    rat(j, 2, 0) = -1.0;
    rat(j, 3, 1) = -1.0;
    return j;
}

Mat4d swap_involution_q4() {
    Mat4d q{};
    rat(q, 0, 1) = 1.0;
    rat(q, 1, 0) = 1.0;
    rat(q, 2, 3) = 1.0;
    rat(q, 3, 2) = 1.0;
    return q;
}

CMat swap_q2() {
    CMat q(2, 2);
    q.at(0, 1) = 1.0;
    q.at(1, 0) = 1.0;
    return q;
}

CMat cayley_t4() {
    const double s = 1.0 / std::sqrt(2.0);
    CMat t(4, 4);
    t.at(0, 0) = s;
    t.at(1, 1) = s;
    t.at(0, 2) = s;
    t.at(1, 3) = s;
    t.at(2, 0) = cplx(0.0, s);
    t.at(3, 1) = cplx(0.0, s);
    t.at(2, 2) = cplx(0.0, -s);
    t.at(3, 3) = cplx(0.0, -s);
    return t;
}

double one_norm(const CMat& m) {
    double r = 0.0;
    for (int j = 0; j < m.cols; ++j) {
        double c = 0.0;
        for (int i = 0; i < m.rows; ++i) c += std::abs(m.at(i, j));
        r = std::max(r, c);
    }
    return r;
}

CMat mat_exp(const CMat& x) {
    if (x.rows != x.cols) throw std::domain_error("mat_exp: matrix is not square");
    if (!x.all_finite()) throw std::domain_error("mat_exp: non-finite entries");
    double nrm = one_norm(x);
    if (nrm > 64.0) throw std::domain_error("mat_exp: norm overflow (1-norm > 64)");

    int s = 0;
    while (nrm > 0.5) {
        nrm *= 0.5;
        ++s;
    }
    CMat a = x * cplx(std::ldexp(1.0, -s), 0.0);

    CMat result = CMat::identity(x.rows);
    CMat term = CMat::identity(x.rows);
    for (int k = 1; k <= 24; ++k) {
        term = term * a * cplx(1.0 / k, 0.0);
        result = result + term;
    }
    for (int i = 0; i < s; ++i) result = result * result;
    return result;
}

} // namespace hs
