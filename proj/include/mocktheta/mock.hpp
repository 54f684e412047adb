// SPDX-License-Identifier: MIT
//
// Appell-Lerch sums Phi^(sigma,[m,s]), their Zwegers-style completion, and the
// eta/theta quotients they are measured against.
//
// The basic sum, for sign sigma, degree m, twist s (half-integers, m > 0):
//
//   Phi^(sigma,[m,s])(tau, z1, z2, t)
//     = e^(2 pi i m t) * Sum_{n in Z} sigma^n
//         * q^(m n^2 + n s) * e^(2 pi i (m n (z1 + z2) + s z1))
//           / (1 - e^(2 pi i z1) q^n)
//
// The real-analytic correction uses the one-variable kernel
//
//   R^sigma_{j,m}(tau, z) = Sum_{n = j + 2mk, k in Z} sigma^k
//       * (S_k - gauss_E(psi_{m,n}(tau, z)))
//       * e^(- pi i n^2 tau / 2m) * e^(2 pi i n z)
//
// with psi_{m,n}(tau, z) = (n - 2m Im z / Im tau) sqrt(Im tau / m) and sign
// factor S_k = +1 for k >= 0, -1 for k <= -1.  The completed (modified) sum is
// phi_tilde = phi - (1/2) phi_add with phi_add the R-Theta pairing below.

#pragma once

#include <vector>

#include "mocktheta/theta.hpp"

namespace mocktheta {

// ----------------------------------------------------------------------------
// Index
// ----------------------------------------------------------------------------

struct MockIndex {
    Sign sign;
    HalfInt m;  // degree, > 0
    HalfInt s;  // twist

    // Accepts any half-integer s; throws std::domain_error unless m > 0.
    MockIndex(Sign sign, HalfInt m, HalfInt s);

    // Narrow families: plus has m, s integral; minus has m, s both in 1/2 + Z.
    bool is_canonical() const;
    static MockIndex canonical(Sign sign, HalfInt m, HalfInt s);
};

// Guard distance: evaluations throw pole_proximity_error when a denominator
// magnitude drops below this.
inline constexpr double kPoleGuard = 1e-12;

// ----------------------------------------------------------------------------
// Coordinates: (z1, z2) <-> (u, v) with z1 = v - u, z2 = -v - u.
// ----------------------------------------------------------------------------

struct UVCoords {
    cplx u, v;
};
UVCoords change_coords(cplx z1, cplx z2);          // u = -(z1+z2)/2, v = (z1-z2)/2
struct Z12Coords {
    cplx z1, z2;
};
Z12Coords change_coords_inverse(cplx u, cplx v);

// ----------------------------------------------------------------------------
// Evaluators
// ----------------------------------------------------------------------------

// The Appell-Lerch sum above.  Throws pole_proximity_error when z1 sits within
// the guard distance of the pole set z1 in Z + tau Z (geometric denominator).
Evaluated phi(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
              const Truncation& tr);

// The same function computed through the rank-1 lattice-sum route: decompose
// the summand against lattice_theta data for the hyperbolic-plane basis.
// Independent of phi()'s code path; used as its oracle.
Evaluated phi_lattice_oracle(const MockIndex& idx, cplx tau, cplx z1, cplx z2,
                             cplx t, const Truncation& tr);

// Frame argument of the Gaussian sigmoid inside R: value carries
// (n - 2 m a(z)) sqrt(y / m) with v-frame a(z) = Im z / Im tau.
struct PsiArg {
    HalfInt m, n;
    cplx tau, z;
    double value;
    PsiArg(HalfInt m, HalfInt n, cplx tau, cplx z);
};

// R^sigma_{j,m}(tau, z); j may be any half-integer (reduced internally).
Evaluated zwegers_R(Sign sign, HalfInt j, HalfInt m, cplx tau, cplx z,
                    const Truncation& tr);

// e^(2 pi i m t) * Sum_{j = s, s+1, ..., s+2m-1}
//     R^sigma_{j,m}(tau, (z1 - z2)/2) * Theta^sigma_{j,m}(tau, z1 + z2, 0)
Evaluated phi_add(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
                  const Truncation& tr);

// phi - (1/2) phi_add: the modified (completed) sum.
Evaluated phi_tilde(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
                    const Truncation& tr);

// phi_tilde in (u, v) coordinates: phi_tilde(tau, v - u, -v - u, t).
Evaluated phi_tilde_uv(const MockIndex& idx, cplx tau, cplx u, cplx v, cplx t,
                       const Truncation& tr);
Evaluated phi_uv(const MockIndex& idx, cplx tau, cplx u, cplx v, cplx t,
                 const Truncation& tr);

// Eta/theta quotient of degree 1:
//   -i * e^(2 pi i t) * eta(tau)^3 * vartheta_11(tau, 2u)
//     / (vartheta_11(tau, v - u) * vartheta_11(tau, v + u))
// The -i normalization makes superdenominator_A equal the difference
//   phi^(+,[1,0])(tau, z1, z2, t) - phi^(+,[1,0])(tau, -z2, -z1, t)
// exactly under this library's vartheta_11 phase convention.
// Throws pole_proximity_error near the vartheta_11 zero sets.
Evaluated superdenominator_A(cplx tau, cplx u, cplx v, cplx t, const Truncation& tr);

// Degree-1/2 companions:
//   e^(pi i t) * superdenominator_A(tau, u, v, 0)
//     * vartheta_ab(tau, v) / vartheta_ab(tau, u)
Evaluated superdenominator_B(int a, int b, cplx tau, cplx u, cplx v, cplx t,
                             const Truncation& tr);

// Sesquiholomorphic theta pairing of degree m:
//   e^(2 pi i m t) * Sum_{j in s + Z mod 2m}
//     Theta^sigma_{j,m}(-conj tau, 2 conj v) * Theta^sigma_{-j,m}(tau, 2u)
Evaluated theta_pair(Sign sign, HalfInt m, HalfInt s, cplx tau, cplx u, cplx v,
                     cplx t, const Truncation& tr);

// sqrt(m / y) * e^(-4 pi m y a(v)^2): the Gaussian frame weight through which
// d/d(conj v) of R factors over the conjugated theta.
cplx frame_gaussian_weight(HalfInt m, cplx tau, cplx v);

}  // namespace mocktheta
