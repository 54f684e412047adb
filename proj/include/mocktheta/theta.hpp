// SPDX-License-Identifier: MIT
//
// Rank-1 theta functions in a unified two-family form, the four classical
// Jacobi theta constants with characteristics, and a small lattice-sum
// evaluator used as an independent cross-check oracle.
//
// The central object is, for sign sigma in {+1, -1}, index j, and degree m
// (both in (1/2) * Z, m > 0), with q = e^(2 pi i tau):
//
//   Theta^sigma_{j,m}(tau, z, t)
//     = e^(2 pi i m t) * Sum_{k in Z} sigma^k
//         * q^(m (k + j/2m)^2) * e^(2 pi i m (k + j/2m) z)
//
// Periodicity in the index: Theta^sigma_{j + 2m, m} = sigma * Theta^sigma_{j,m},
// so ThetaIndex stores j reduced into [0, 2m) together with the sign picked up
// by the reduction.

#pragma once

#include <array>
#include <vector>

#include "mocktheta/numeric.hpp"

namespace mocktheta {

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
Sign parse_sign(std::string_view text);  // "+" or "-"

// How the elliptic variable enters the series: `unified` is the convention
// above; `doubled` replaces z by 2z in the minus family only, matching the
// older series normalization some tables use.
enum class ThetaScale { unified, doubled };

// ----------------------------------------------------------------------------
// ThetaIndex
// ----------------------------------------------------------------------------

struct ThetaIndex {
    Sign sign;
    HalfInt j;          // reduced into [0, 2m)
    HalfInt m;          // degree, > 0
    int prefactor_sign; // sigma^w for the w reductions applied to the raw j

    // Accepts any j in (1/2) Z; throws std::domain_error unless m > 0.
    ThetaIndex(Sign sign, HalfInt j, HalfInt m);

    // The narrow index families used by the enumerations and the CLI:
    //   plus:  j, m, (and s elsewhere) integral
    //   minus: j and m both in 1/2 + Z
    bool is_canonical() const;
    // As above but throws std::domain_error when the combination is not
    // canonical.
    static ThetaIndex canonical(Sign sign, HalfInt j, HalfInt m);
};

// The 2m index residues {base, base + 1, ..., base + 2m - 1} of a family,
// base = 0 for plus and 1/2 for minus.  Requires 2m integral.
std::vector<HalfInt> family_indices(Sign sign, HalfInt m);

// ----------------------------------------------------------------------------
// Evaluators
// ----------------------------------------------------------------------------

// Theta^sigma_{j,m}(tau, z, t); adaptive in k up to tr.series_halfwidth.
Evaluated theta_jm(const ThetaIndex& idx, cplx tau, cplx z, cplx t,
                   const Truncation& tr, ThetaScale scale = ThetaScale::unified);

// Jacobi theta with characteristics a, b in {0, 1}:
//   vartheta_{ab}(tau, z)
//     = Sum_{n in Z} e^(pi i (n + a/2)^2 tau) * e^(2 pi i (n + a/2)(z + b/2))
Evaluated jacobi_theta_ab(int a, int b, cplx tau, cplx z, const Truncation& tr);

// Same values routed through the two-family series:
//   vartheta_00 = Theta^+_{0,1/2}(tau, 2z, 0)      vartheta_01 = Theta^-_{0,1/2}(tau, 2z, 0)
//   vartheta_10 = Theta^+_{1/2,1/2}(tau, 2z, 0)    vartheta_11 = i * Theta^-_{1/2,1/2}(tau, 2z, 0)
// Kept as a second, independently coded route for convention self-tests.
Evaluated jacobi_theta_ab_from_family(int a, int b, cplx tau, cplx z,
                                      const Truncation& tr);

// ----------------------------------------------------------------------------
// Lattice-sum oracle (ranks 1 and 2)
// ----------------------------------------------------------------------------

// A rank-ell (ell <= 2) positive-definite even-type lattice datum: the Gram
// matrix of a basis alpha_1..alpha_ell, a degree m with m * (alpha_i|alpha_j)
// integral, and the coordinates of an offset vector lambda in the basis.
struct LatticeData {
    int rank = 1;
    std::array<std::array<Rational, 2>, 2> gram{};   // (alpha_i | alpha_j)
    HalfInt m;
    std::array<Rational, 2> lambda{};                // coords of the offset

    LatticeData(int rank, std::array<std::array<Rational, 2>, 2> gram,
                HalfInt m, std::array<Rational, 2> lambda);
};

// Sum_{alpha in Z^rank} (sigma)^(m (alpha|alpha))
//   * q^((m/2) |alpha + lambda/m|^2) * e^(2 pi i m (alpha + lambda/m | z))
//   * e^(2 pi i m t)
// with z a vector of `rank` complex entries and |.|^2, (.|.) taken in the Gram
// form.  Enumeration covers the ellipsoid where terms exceed tr.tail_tol.
// For sigma = -1 requires m (alpha|alpha) integral for all alpha.
Evaluated lattice_theta(const LatticeData& data, Sign sign, cplx tau,
                        const std::vector<cplx>& z, cplx t, const Truncation& tr);

// ----------------------------------------------------------------------------
// Transformation-law reference sides
// ----------------------------------------------------------------------------

enum class ModularGen { S, T };

// The substituted argument of the S transformation for the scalar series:
// (tau, z, t) -> (-1/tau, z/tau, t - z^2 / (4 tau)).
struct SPoint {
    cplx tau, z, t;
};
SPoint modular_S_point(cplx tau, cplx z, cplx t);

// Predicted right-hand side of the modular law at (tau, z, t):
//   T:  e^(pi i j^2 / 2m) * Theta^sigma_{j,m}(tau, z, t)  evaluated at tau+1 on the left
//   S:  sqrt(-i tau / 2m) * Sum_{j' in family} e^(-pi i j j' / m)
//         * Theta^sigma_{j',m}(tau, z, t)
// The caller compares theta_jm at the transformed point against this value.
Evaluated theta_modular_reference(const ThetaIndex& idx, ModularGen gen,
                                  cplx tau, cplx z, cplx t, const Truncation& tr);

// Predicted right-hand sides of the elliptic (translation) laws.
//
// Lattice shift z -> z + a with a * m integral:
//   e^(pi i j a) * Theta^sigma_{j,m}(tau, z, t)
// Throws std::domain_error when a * m is not an integer.
Evaluated theta_elliptic_reference(const ThetaIndex& idx, const Rational& a,
                                   cplx tau, cplx z, cplx t, const Truncation& tr);

// Quasi-period shift z -> z + tau/m:
//   q^(-1/4m) * e^(-pi i z) * Theta^sigma_{j+1,m}(tau, z, t)
Evaluated theta_elliptic_reference_tau_shift(const ThetaIndex& idx, cplx tau,
                                             cplx z, cplx t, const Truncation& tr);

}  // namespace mocktheta
