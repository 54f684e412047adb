// SPDX-License-Identifier: MIT

#include "oracle_support.hpp"

#include <cmath>
#include <cstdlib>

namespace oracle {
namespace {

const ld kPi = 3.14159265358979323846264338327950288L;

cld cexp_ld(ld re, ld im) {
    if (re < -11300.0L) return {0.0L, 0.0L};
    ld r = expl(re);
    return {r * cosl(im), r * sinl(im)};
}

// exp(2 pi i w)
cld e2pi(cld w) { return cexp_ld(-2.0L * kPi * w.imag(), 2.0L * kPi * w.real()); }

ld erf_maclaurin(ld t) {
    // erf(t) = (2/sqrt(pi)) Sum (-1)^k t^(2k+1) / (k! (2k+1))
    ld t2 = t * t;
    ld term = t;
    ld sum = 0.0L;
    for (int k = 0; k < 80; ++k) {
        sum += term / (2 * k + 1);
        term *= -t2 / (k + 1);
        if (fabsl(term) < 1e-24L) break;
    }
    return 2.0L / sqrtl(kPi) * sum;
}

}  // namespace

ld gauss_E_quad(ld x) {
    if (x < 0) return -gauss_E_quad(-x);
    // 10-point Gauss-Legendre nodes/weights on [-1, 1].
    static const ld nodes[5] = {
        0.148874338981631210884826001130L, 0.433395394129247190799265943166L,
        0.679409568299024406234327365115L, 0.865063366688984510732096688423L,
        0.973906528517171720077964012084L};
    static const ld weights[5] = {
        0.295524224714752870173892994651L, 0.269266719309996355091226921569L,
        0.219086362515982043995534934228L, 0.149451349150580593145776339658L,
        0.066671344308688137593568809893L};
    const int panels = 16;
    ld h = x / panels;
    ld total = 0.0L;
    for (int p = 0; p < panels; ++p) {
        ld mid = (p + 0.5L) * h;
        ld half = 0.5L * h;
        for (int i = 0; i < 5; ++i) {
            ld rp = mid + half * nodes[i];
            ld rm = mid - half * nodes[i];
            total += weights[i] * half * (expl(-kPi * rp * rp) + expl(-kPi * rm * rm));
        }
    }
    return 2.0L * total;
}

ld erfcx_cf(ld t) {
    if (t < 2.0L) return expl(t * t) * (1.0L - erf_maclaurin(t));
    // Laplace continued fraction: erfcx(t) = (1/sqrt(pi)) / (t + (1/2)/(t + 1/(t + (3/2)/(t + ...))))
    ld c = t;
    for (int k = 120; k >= 1; --k) c = t + (0.5L * k) / c;
    return 1.0L / (sqrtl(kPi) * c);
}

ld gauss_tail_scaled_ref(ld x) { return erfcx_cf(sqrtl(kPi) * x); }

cld theta_jm_ref(int sigma, ld j, ld m, cld tau, cld z, cld t, int K,
                 bool doubled_minus_z) {
    cld zc = (doubled_minus_z && sigma < 0) ? 2.0L * z : z;
    ld x = j / (2.0L * m);
    cld sum{0.0L, 0.0L};
    for (int k = -K; k <= K; ++k) {
        ld kk = k + x;
        cld w = m * kk * kk * tau + m * kk * zc + m * t;
        cld term = e2pi(w);
        if (sigma < 0 && (k & 1)) term = -term;
        sum += term;
    }
    return sum;
}

cld vartheta_ref(int a, int b, cld tau, cld z, int K) {
    cld sum{0.0L, 0.0L};
    for (int n = -K; n <= K; ++n) {
        ld na = n + 0.5L * a;
        cld w = 0.5L * na * na * tau + na * (z + cld(0.5L * b, 0.0L));
        sum += e2pi(w);
    }
    return sum;
}

cld eta_ref(cld tau, int N) {
    cld q = e2pi(tau);
    cld prod{1.0L, 0.0L};
    cld qn{1.0L, 0.0L};
    for (int n = 1; n <= N; ++n) {
        qn *= q;
        prod *= (cld{1.0L, 0.0L} - qn);
    }
    return e2pi(tau / 24.0L) * prod;
}

cld zwegers_R_ref(int sigma, ld j, ld m, cld tau, cld z, int K) {
    ld x = tau.real(), y = tau.imag();
    ld a = z.imag() / y;
    cld sum{0.0L, 0.0L};
    for (int k = -K; k <= K; ++k) {
        ld n = j + 2.0L * m * k;
        ld dev = n - 2.0L * m * a;
        ld psi = dev * sqrtl(y / m);
        int S = (k >= 0) ? 1 : -1;
        ld g = (kPi * y / (2.0L * m)) * dev * dev - 2.0L * kPi * m * a * a * y;
        ld theta_ang = -kPi * n * n * x / (2.0L * m) + 2.0L * kPi * n * z.real();
        bool matched = (S > 0) ? (psi >= 0.0L) : (psi < 0.0L);
        ld mag;
        if (matched) {
            ld ell = g - kPi * psi * psi;
            mag = (ell < -11300.0L) ? 0.0L
                                    : erfcx_cf(sqrtl(kPi) * fabsl(psi)) * expl(ell);
        } else {
            ld small = (kPi * psi * psi > 11300.0L)
                           ? 0.0L
                           : expl(-kPi * psi * psi) * erfcx_cf(sqrtl(kPi) * fabsl(psi));
            mag = (2.0L - small) * expl(g);
        }
        ld coeff = S * mag;
        if (sigma < 0 && (k & 1)) coeff = -coeff;
        sum += coeff * cld{cosl(theta_ang), sinl(theta_ang)};
    }
    return sum;
}

cld phi_ref(int sigma, ld m, ld s, cld tau, cld z1, cld z2, cld t, int K) {
    cld sum{0.0L, 0.0L};
    for (int n = -K; n <= K; ++n) {
        cld w = (m * n * n + n * s) * tau + m * n * (z1 + z2) + s * z1 + m * t;
        cld denom = cld{1.0L, 0.0L} - e2pi(z1 + cld(n, 0) * tau);
        cld term = e2pi(w) / denom;
        if (sigma < 0 && (n & 1)) term = -term;
        sum += term;
    }
    return sum;
}

cld phi_add_ref(int sigma, ld m, ld s, cld tau, cld z1, cld z2, cld t) {
    int count = static_cast<int>(2.0L * m + 0.5L);
    cld sum{0.0L, 0.0L};
    for (int i = 0; i < count; ++i) {
        ld j = s + i;
        sum += zwegers_R_ref(sigma, j, m, tau, 0.5L * (z1 - z2)) *
               theta_jm_ref(sigma, j, m, tau, z1 + z2, cld{0.0L, 0.0L});
    }
    return e2pi(m * t) * sum;
}

cld phi_tilde_ref(int sigma, ld m, ld s, cld tau, cld z1, cld z2, cld t) {
    return phi_ref(sigma, m, s, tau, z1, z2, t) -
           0.5L * phi_add_ref(sigma, m, s, tau, z1, z2, t);
}

cld sden_A_ref(cld tau, cld u, cld v, cld t) {
    cld eta = eta_ref(tau);
    cld num = eta * eta * eta * vartheta_ref(1, 1, tau, 2.0L * u);
    cld den = vartheta_ref(1, 1, tau, v - u) * vartheta_ref(1, 1, tau, v + u);
    return cld{0.0L, -1.0L} * e2pi(t) * num / den;
}

cld sden_B_ref(int a, int b, cld tau, cld u, cld v, cld t) {
    return e2pi(0.5L * t) * sden_A_ref(tau, u, v, cld{0.0L, 0.0L}) *
           vartheta_ref(a, b, tau, v) / vartheta_ref(a, b, tau, u);
}

cld theta_pair_ref(int sigma, ld m, ld s, cld tau, cld u, cld v, cld t) {
    int count = static_cast<int>(2.0L * m + 0.5L);
    cld mtau = -std::conj(tau);
    cld vbar2 = 2.0L * std::conj(v);
    cld sum{0.0L, 0.0L};
    for (int i = 0; i < count; ++i) {
        ld j = s + i;
        sum += theta_jm_ref(sigma, j, m, mtau, vbar2, cld{0.0L, 0.0L}) *
               theta_jm_ref(sigma, -j, m, tau, 2.0L * u, cld{0.0L, 0.0L});
    }
    return e2pi(m * t) * sum;
}

long long euler_product_coefficient(long long k) {
    if (k == 0) return 1;
    for (long long g = 1;; ++g) {
        long long p1 = g * (3 * g - 1) / 2;
        long long p2 = g * (3 * g + 1) / 2;
        if (p1 > k && p2 > k) return 0;
        if (p1 == k || p2 == k) return (g % 2 == 0) ? 1 : -1;
    }
}

}  // namespace oracle
