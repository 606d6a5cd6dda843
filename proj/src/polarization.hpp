#pragma once

#include <array>
#include <functional>
#include <string>

#include "exact.hpp"
#include "halfspace.hpp"
#include "rng.hpp"
#include "smallmat.hpp"
#include "tolerance.hpp"

namespace hs {

using CVec2 = std::array<cplx, 2>;
using LatticeIndex = std::array<int, 4>; // integer coordinates in the basis below

/// The rank-4 lattice attached to a half-space point, with basis
///   e1 = (tau, z),  e2 = (z, tau),  e3 = (1, 0),  e4 = (0, 1).
struct LatticeBasis {
    HatPoint omega;

    CVec2 basis_vector(int i) const;
    CVec2 point(const LatticeIndex& n) const;
    /// real 4x4 period matrix (rows = Re/Im of the basis vectors)
    Mat4d real_period_matrix() const;
};

LatticeBasis make_lattice(const HatPoint& omega, const Tolerance& tol = Tolerance());

enum class FormKind { Omega, Tau, Star, Custom };

std::string form_kind_name(FormKind k);
FormKind form_kind_from_name(const std::string& name);

/// A Hermitian form H(u, w) = u . h . conj(w)^t on C^2 (linear in u,
/// conjugate-linear in w) together with the lattice it polarizes.
/// The three named kinds fix h:
///   Omega: h = I2;  Tau: h = I2 / Im(tau);  Star: h = [[2,1],[1,2]].
struct RiemannFormSpec {
    CMat h; // 2x2 Hermitian coefficient matrix
    LatticeBasis lattice;
    FormKind kind = FormKind::Custom;
};

RiemannFormSpec make_form(FormKind kind, const HatPoint& omega, const Tolerance& tol = Tolerance());
RiemannFormSpec make_custom_form(const CMat& h, const HatPoint& omega, const Tolerance& tol = Tolerance());

cplx hermitian_value(const RiemannFormSpec& spec, const CVec2& u, const CVec2& w);
double alternating_value(const RiemannFormSpec& spec, const CVec2& u, const CVec2& w);

struct GramMatrices {
    Mat4d s; // Re H(e_i, e_j), symmetric
    Mat4d e; // Im H(e_i, e_j), antisymmetric
};

GramMatrices gram_matrices(const RiemannFormSpec& spec);

struct RiemannCheck {
    bool ok = false;
    bool nondegenerate = false;
    bool integral = false;
    std::string reason;
};

/// Riemann-form test: h nondegenerate and Im H integer-valued on the
/// lattice basis, with the failing condition reported.
RiemannCheck is_riemann_form(const RiemannFormSpec& spec, const Tolerance& tol = Tolerance());

/// Rounds the Gram matrix of Im H to exact integers, verifying every entry
/// is within tol of an integer. Throws std::domain_error otherwise.
IMat4 integral_alternating_gram(const RiemannFormSpec& spec, const Tolerance& tol = Tolerance());

/// dim of the section space: |Pf| of the integral alternating Gram matrix.
/// Requires a positive definite Riemann form.
std::int64_t section_dimension(const RiemannFormSpec& spec, const Tolerance& tol = Tolerance());

/// Semi-character of the lattice with respect to an integral alternating
/// Gram matrix e: value on sum(n_i e_i) is
///   prod_i base_i^{n_i} * exp(i pi sum_{i<j} n_i n_j e_ij).
/// base_i = exp(i pi phase_i); the canonical choice is phase = 0 on the
/// basis, which makes every value an exact +-1 when the phases vanish.
struct SemiCharacter {
    IMat4 e{};
    std::array<double, 4> base_phase{}; // in units of pi

    cplx base_value(int i) const;
    /// exponent of the value in units of pi: sum n_i phase_i + quadratic part
    double phase(const LatticeIndex& n) const;
    cplx value(const LatticeIndex& n) const;
};

SemiCharacter canonical_semicharacter(const IMat4& e_form);
SemiCharacter canonical_semicharacter(const RiemannFormSpec& spec, const Tolerance& tol = Tolerance());

/// Exact consistency of the defining relation on a pair of lattice points:
/// returns the integer-parity defect (0 means the relation holds exactly).
int semicharacter_defect(const SemiCharacter& chi, const LatticeIndex& m, const LatticeIndex& n);

/// Value functions let the residual drivers run against deliberately
/// corrupted characters (negative controls) without weakening the type.
using SemiCharValues = std::function<cplx(const LatticeIndex&)>;

SemiCharValues semicharacter_values(const SemiCharacter& chi);
/// Table-model corruption: the stored value at the given basis vector is
/// negated (applied whenever that coordinate equals 1) while all other
/// values keep the canonical extension. Violates the defining relation.
SemiCharValues corrupted_semicharacter_values(const SemiCharacter& chi, int index);

/// log of the automorphic factor J(alpha, z) = chi(alpha) exp(pi H(z, alpha)
/// + pi/2 H(alpha, alpha)); kept in exponent form so residual checks stay
/// finite for large alpha.
cplx log_automorphic_factor(const RiemannFormSpec& spec, const SemiCharacter& chi,
                            const LatticeIndex& alpha, const CVec2& zpt);
cplx automorphic_factor(const RiemannFormSpec& spec, const SemiCharacter& chi,
                        const LatticeIndex& alpha, const CVec2& zpt);

/// Max relative cocycle residual |J(a+b, z) / (J(a, b+z) J(b, z)) - 1| over
/// pseudo-random triples, evaluated at exponent level.
double factor_cocycle_residual(const RiemannFormSpec& spec, const SemiCharacter& chi,
                               int trials, std::uint64_t seed);
double factor_cocycle_residual(const RiemannFormSpec& spec, const SemiCharValues& chi_values,
                               int trials, std::uint64_t seed);

} // namespace hs
