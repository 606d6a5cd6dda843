#pragma once

#include <array>
#include <string>

#include "exact.hpp"
#include "polarization.hpp"

namespace hs {

/// Conjugate-linear functional on C^2, ell(z) = c1 conj(z1) + c2 conj(z2).
/// Functionals with Im(ell(e_i)) integral for every basis vector form the
/// dual lattice.
struct DualPoint {
    cplx c1{};
    cplx c2{};

    cplx operator()(const CVec2& z) const { return c1 * std::conj(z[0]) + c2 * std::conj(z[1]); }
};

DualPoint dual_scale(const DualPoint& l, double s);
DualPoint dual_add(const DualPoint& a, const DualPoint& b);

/// Basis of the dual lattice: Im(ell_i(e_j)) = delta_ij, obtained from a
/// real 4x4 linear solve against the period matrix.
std::array<DualPoint, 4> dual_basis(const LatticeBasis& lat, const Tolerance& tol = Tolerance());

DualPoint dual_lattice_point(const std::array<DualPoint, 4>& duals, const LatticeIndex& k);

/// Hermitian pairing on C^2 x dual space underpinning the universal bundle:
/// H((z1, l1), (z2, l2)) = l1(z2) + conj(l2(z1)).
cplx poincare_hermitian(const CVec2& z1, const DualPoint& l1, const CVec2& z2, const DualPoint& l2);

/// log of the universal-bundle automorphic factor at lattice element
/// (alpha, ellhat) evaluated at (z, ell); the semi-character is
/// exp(-i pi Im ellhat(alpha)).
cplx log_poincare_factor(const LatticeBasis& lat, const LatticeIndex& alpha, const DualPoint& ellhat,
                         const CVec2& zpt, const DualPoint& ell);
cplx poincare_factor(const LatticeBasis& lat, const LatticeIndex& alpha, const DualPoint& ellhat,
                     const CVec2& zpt, const DualPoint& ell);

/// Max defect of the semi-character law on the product lattice over random
/// pairs, and of the factor cocycle over random triples.
double poincare_semicharacter_residual(const LatticeBasis& lat, int trials, std::uint64_t seed,
                                       const Tolerance& tol = Tolerance());
double poincare_cocycle_residual(const LatticeBasis& lat, int trials, std::uint64_t seed,
                                 const Tolerance& tol = Tolerance());

/// Defect of the flat-restriction identity
///   h_ell(z + alpha) J_ell(alpha, z) = exp(2 pi i Im ell(alpha)) h_ell(z)
/// with J_ell(alpha, z) = exp(pi ell(alpha)), h_ell(z) = exp(-pi conj(ell(z))).
double fiber_triviality_residual(const LatticeBasis& lat, const DualPoint& ell,
                                 const LatticeIndex& alpha, const CVec2& zpt);

/// Translated factor J(alpha, z + a) (the pullback bundle along z -> z + a).
cplx translate_factor(const RiemannFormSpec& spec, const SemiCharacter& chi, const CVec2& a,
                      const LatticeIndex& alpha, const CVec2& zpt);
cplx log_translate_factor(const RiemannFormSpec& spec, const SemiCharacter& chi, const CVec2& a,
                          const LatticeIndex& alpha, const CVec2& zpt);

/// Degree-zero part of the translated bundle: the character
/// alpha -> exp(2 pi i E(a, alpha)) recorded by its exponents on the basis.
struct TranslationCharacter {
    std::array<double, 4> exponent{}; // E(a, e_i)

    std::array<cplx, 4> values() const;
    bool is_trivial(const Tolerance& tol = Tolerance()) const;
};

TranslationCharacter translation_character(const RiemannFormSpec& spec, const CVec2& a,
                                           const Tolerance& tol = Tolerance());

/// Finite subgroup of translations preserving the bundle class, computed
/// from the Smith normal form of the integral alternating Gram matrix.
struct KernelStructure {
    std::array<std::int64_t, 4> divisors{};
    std::int64_t order = 0;
    std::string structure; // e.g. "trivial" or "Z/3 x Z/3"
};

KernelStructure kernel_subgroup(const RiemannFormSpec& spec, const Tolerance& tol = Tolerance());

/// Factor-level square-theorem test: the ratio
///   J(alpha, z+a+b) J(alpha, z) / (J(alpha, z+a) J(alpha, z+b))
/// must be independent of alpha and z, and the translation characters must
/// be additive in the exponents. Returns the max defect over random trials.
double square_theorem_residual(const RiemannFormSpec& spec, const SemiCharacter& chi,
                               const CVec2& a, const CVec2& b, int trials, std::uint64_t seed);

/// First-Chern-class readback: recovers E(alpha, beta) from the factor
/// exponents via Im[log J(beta, z+alpha) + log J(alpha, z)
///                 - log J(alpha, z+beta) - log J(beta, z)] / (2 pi).
double chern_pairing_from_factor(const RiemannFormSpec& spec, const SemiCharacter& chi,
                                 const LatticeIndex& alpha, const LatticeIndex& beta,
                                 const CVec2& zpt);

struct CurvatureResult {
    CMat c;                    // constant coefficient matrix pi * h
    double constancy_residual; // max FD deviation across sample points
};

/// Curvature of the bundle metric weight exp(-pi H(z, z)): the constant
/// (1,1)-coefficients pi*h, cross-checked by finite differences of the log
/// weight at pseudo-random points.
CurvatureResult curvature_matrix(const RiemannFormSpec& spec, std::uint64_t seed = 12345,
                                 const Tolerance& tol = Tolerance());

struct HodgeTable {
    std::array<std::array<int, 3>, 3> h{}; // h[p][q], 0 <= p,q <= 2
    std::array<int, 5> betti{};            // b_0 .. b_4

    int euler() const;
};

/// Closed-form Hodge data of a 2-dimensional complex torus:
/// h^{p,q} = C(2,p) C(2,q), b_k = C(4,k).
HodgeTable hodge_numbers();

} // namespace hs
