#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "tolerance.hpp"

namespace hs {

using cplx = std::complex<double>;

/// Small dense complex matrix, row-major, sizes 1/2/4 on each axis.
/// Everything in this project is 2x2 or 4x4; storage is inline.
struct CMat {
    int rows = 0;
    int cols = 0;
    std::array<cplx, 16> e{};

    CMat() = default;
    CMat(int r, int c);

    cplx& at(int i, int j) { return e[static_cast<size_t>(i * cols + j)]; }
    const cplx& at(int i, int j) const { return e[static_cast<size_t>(i * cols + j)]; }

    static CMat zero(int r, int c) { return CMat(r, c); }
    static CMat identity(int n);

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(cplx s) const;

    CMat transpose() const;
    CMat conjugate() const;
    CMat dagger() const { return conjugate().transpose(); }

    double max_abs() const;
    bool all_finite() const;
};

CMat operator*(cplx s, const CMat& m);

bool same_shape(const CMat& a, const CMat& b);
double max_abs_diff(const CMat& a, const CMat& b);

cplx det2(const CMat& m);
cplx det(const CMat& m);

/// True iff m is Hermitian within tol and both leading principal minors
/// exceed tol.abs_tol. 2x2 only.
bool is_hermitian_pd(const CMat& m, const Tolerance& tol = Tolerance());

/// 2x2 inverse by the closed-form adjugate. Throws std::domain_error when
/// |det| <= tol.abs_tol.
CMat inverse2(const CMat& m, const Tolerance& tol = Tolerance());

/// General small inverse (n <= 4), Gaussian elimination with partial pivoting.
CMat inverse(const CMat& m, const Tolerance& tol = Tolerance());

/// Real 4x4 matrix used for symplectic group elements.
using Mat4d = std::array<double, 16>;

inline double& rat(Mat4d& m, int i, int j) { return m[static_cast<size_t>(4 * i + j)]; }
inline double rat(const Mat4d& m, int i, int j) { return m[static_cast<size_t>(4 * i + j)]; }

Mat4d ident4();
Mat4d mul4(const Mat4d& a, const Mat4d& b);
Mat4d transpose4(const Mat4d& m);
Mat4d neg4(const Mat4d& m);
double max_abs4(const Mat4d& m);
double max_abs_diff4(const Mat4d& a, const Mat4d& b);
CMat to_cmat(const Mat4d& m);

/// The standard symplectic form [[0, I2], [-I2, 0]].
Mat4d symplectic_form_j4();
/// The coordinate-swap involution diag(q, q) with q = [[0,1],[1,0]].
Mat4d swap_involution_q4();
/// q as a complex 2x2.
CMat swap_q2();
/// The Cayley conjugation matrix (1/sqrt(2)) [[I2, I2], [i I2, -i I2]].
CMat cayley_t4();

/// ||m||_1 (max column sum), used to pick the exponential scaling.
double one_norm(const CMat& m);

/// Matrix exponential by scaling-and-squaring with a 24-term Taylor core:
/// the input is scaled by 2^-s until its 1-norm is <= 0.5, the series is
/// summed to term 24 (remainder < 1e-31 at that norm), then squared s times.
/// Inputs with 1-norm above 64 are rejected.
CMat mat_exp(const CMat& x);

} // namespace hs
