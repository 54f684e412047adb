// SPDX-License-Identifier: MIT
//
// Evaluation notes.
//
// phi: each summand has denominator 1 - e^(2 pi i (z1 + n tau)); once
// Im(z1 + n tau) < 0 the exponential exceeds 1 and the fraction is rewritten as
//   1 / (1 - e^c) = -e^(-c) / (1 - e^(-c))
// so both the numerator and the reciprocal stay bounded.
//
// zwegers_R: with a = Im z / Im tau, beta = pi y / 2m and psi as in the header,
// the factor (S_k - gauss_E(psi)) is expanded through gauss_tail_scaled:
//   matched sign   (S_k psi >= 0):  S_k - E = S_k e^(-pi psi^2) gts(|psi|)
//   mismatched sign (S_k psi < 0):  S_k - E = S_k (2 - e^(-pi psi^2) gts(|psi|))
// In the matched branch the Gaussian is folded into the exponential, giving the
// exponent -beta ((n - 2ma)^2 + 4 m^2 a^2) <= 0; in the mismatched branch the
// plain exponent is beta ((n - 2ma)^2 - 4 m^2 a^2), which is <= 0 on the whole
// mismatch range because |n - 2ma| <= |2ma| there.  No overflow either way.
//
// Index shifts: R_{j + 2m} = sigma^(-1) (R_j - 2 e^(-pi i j^2 tau / 2m + 2 pi i j z)),
// used to reduce an arbitrary j into [0, 2m).

#include "mocktheta/mock.hpp"

#include <cmath>
#include <stdexcept>

namespace mocktheta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

void require_upper(cplx tau) {
    if (!(std::isfinite(tau.real()) && std::isfinite(tau.imag()) && tau.imag() > 0.0))
        throw std::domain_error("tau must lie in the upper half-plane");
}

int sigma_pow(Sign sign, long long k) {
    if (sign == Sign::plus) return 1;
    return (k % 2 == 0) ? 1 : -1;
}

}  // namespace

MockIndex::MockIndex(Sign sign_, HalfInt m_, HalfInt s_) : sign(sign_), m(m_), s(s_) {
    if (!(m.twice() > 0)) throw std::domain_error("degree m must be positive");
}

bool MockIndex::is_canonical() const {
    if (sign == Sign::plus) return m.is_integer() && s.is_integer();
    return !m.is_integer() && !s.is_integer();
}

MockIndex MockIndex::canonical(Sign sign, HalfInt m, HalfInt s) {
    MockIndex idx(sign, m, s);
    if (!idx.is_canonical())
        throw std::domain_error("index parity does not match the sign family");
    return idx;
}

UVCoords change_coords(cplx z1, cplx z2) {
    return {-0.5 * (z1 + z2), 0.5 * (z1 - z2)};
}

Z12Coords change_coords_inverse(cplx u, cplx v) { return {v - u, -v - u}; }

// ----------------------------------------------------------------------------
// phi and its lattice-route oracle
// ----------------------------------------------------------------------------

Evaluated phi(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
              const Truncation& tr) {
    require_upper(tau);
    const double m_v = idx.m.value(), s_v = idx.s.value();
    const double y = tau.imag();

    auto term = [&](long long n) -> cplx {
        double nd = static_cast<double>(n);
        cplx arg = tau * (m_v * nd * nd + nd * s_v) + m_v * nd * (z1 + z2) + s_v * z1;
        cplx c = z1 + nd * tau;  // denominator exponent / (2 pi i)
        double mu = z1.imag() + nd * y;
        cplx den;
        cplx value;
        if (mu >= 0.0) {
            den = 1.0 - expi2(c);
            if (std::abs(den) < kPoleGuard)
                throw pole_proximity_error("phi summand denominator vanishes: "
                                           "z1 too close to Z + tau Z",
                                           std::abs(den));
            value = expi2(arg) / den;
        } else {
            den = 1.0 - expi2(-c);
            if (std::abs(den) < kPoleGuard)
                throw pole_proximity_error("phi summand denominator vanishes: "
                                           "z1 too close to Z + tau Z",
                                           std::abs(den));
            value = -expi2(arg - c) / den;
        }
        return static_cast<double>(sigma_pow(idx.sign, n)) * value;
    };

    long long n0 = llround(-s_v / (2.0 * m_v));
    cplx sum = term(n0);
    double tail = 0.0;
    for (int dir = -1; dir <= 1; dir += 2) {
        int quiet = 0;
        for (long long step = 1;; ++step) {
            if (step > tr.series_halfwidth)
                throw truncation_overflow_error("phi series did not settle within "
                                                "the truncation window");
            cplx tn = term(n0 + dir * step);
            sum += tn;
            if (std::abs(tn) < tr.tail_tol * (1.0 + std::abs(sum))) {
                if (++quiet >= 3) {
                    tail += std::abs(tn);
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    cplx pre = expi2(m_v * t);
    return {pre * sum, std::abs(pre) * tail};
}

Evaluated phi_lattice_oracle(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
                             const Truncation& tr) {
    require_upper(tau);
    const double m_v = idx.m.value(), s_v = idx.s.value();
    const double y = tau.imag();
    const bool odd_two_m = (idx.m.twice() % 2) != 0;

    // Hyperbolic-plane route: lattice vectors n alpha_1 + k alpha_2 against the
    // offset -s alpha_1 give the summand below; the geometric k-sum over the
    // isotropic direction has already been carried out in closed form.
    auto term = [&](long long n) -> cplx {
        double nd = static_cast<double>(n);
        cplx arg = tau * (m_v * nd * nd - nd * s_v) - m_v * nd * (z1 + z2) + s_v * z1;
        cplx c = z1 - nd * tau;
        double mu = z1.imag() - nd * y;
        cplx den;
        cplx value;
        if (mu >= 0.0) {
            den = 1.0 - expi2(c);
            if (std::abs(den) < kPoleGuard)
                throw pole_proximity_error("lattice-route denominator vanishes: "
                                           "z1 too close to Z + tau Z",
                                           std::abs(den));
            value = expi2(arg) / den;
        } else {
            den = 1.0 - expi2(-c);
            if (std::abs(den) < kPoleGuard)
                throw pole_proximity_error("lattice-route denominator vanishes: "
                                           "z1 too close to Z + tau Z",
                                           std::abs(den));
            value = -expi2(arg - c) / den;
        }
        int sgn = (idx.sign == Sign::minus && odd_two_m && (n % 2) != 0) ? -1 : 1;
        return static_cast<double>(sgn) * value;
    };

    long long n0 = llround(s_v / (2.0 * m_v));
    cplx sum = term(n0);
    double tail = 0.0;
    for (int dir = -1; dir <= 1; dir += 2) {
        int quiet = 0;
        for (long long step = 1;; ++step) {
            if (step > tr.series_halfwidth)
                throw truncation_overflow_error("lattice-route series did not "
                                                "settle within the truncation window");
            cplx tn = term(n0 + dir * step);
            sum += tn;
            if (std::abs(tn) < tr.tail_tol * (1.0 + std::abs(sum))) {
                if (++quiet >= 3) {
                    tail += std::abs(tn);
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    cplx pre = expi2(m_v * t);
    return {pre * sum, std::abs(pre) * tail};
}

// ----------------------------------------------------------------------------
// Zwegers kernel
// ----------------------------------------------------------------------------

PsiArg::PsiArg(HalfInt m_, HalfInt n_, cplx tau_, cplx z_)
    : m(m_), n(n_), tau(tau_), z(z_) {
    require_upper(tau_);
    if (!(m_.twice() > 0)) throw std::domain_error("degree m must be positive");
    double y = tau_.imag();
    double a = z_.imag() / y;
    value = (n_.value() - 2.0 * m_.value() * a) * std::sqrt(y / m_.value());
}

namespace {

// R at a reduced index j0 in [0, 2m).
Evaluated zwegers_R_reduced(Sign sign, double j0, double m_v, cplx tau, cplx z,
                            const Truncation& tr) {
    const double y = tau.imag();
    const double a = z.imag() / y;
    const double sqrt_ym = std::sqrt(y / m_v);

    struct Term {
        cplx value;
        bool matched;
    };
    auto term = [&](long long k) -> Term {
        double n = j0 + 2.0 * m_v * static_cast<double>(k);
        double sk = (k >= 0) ? 1.0 : -1.0;
        double psi = (n - 2.0 * m_v * a) * sqrt_ym;
        double sgn = static_cast<double>(sigma_pow(sign, k)) * sk;
        cplx osc = -(n * n / (4.0 * m_v)) * tau + n * z;  // phase / (2 pi i)
        bool matched = sk * psi >= 0.0;
        cplx value;
        if (matched) {
            cplx w = 2.0 * kPi * cplx(0.0, 1.0) * osc - kPi * psi * psi;
            value = sgn * gauss_tail_scaled(std::abs(psi)) * std::exp(w);
        } else {
            double g = gauss_tail_scaled(std::abs(psi));
            double e = std::exp(-kPi * psi * psi);
            value = sgn * (2.0 - e * g) * expi2(osc);
        }
        return {value, matched};
    };

    long long k0 = llround((2.0 * m_v * a - j0) / (2.0 * m_v));
    Term first = term(k0);
    cplx sum = first.value;
    double tail = 0.0;
    for (int dir = -1; dir <= 1; dir += 2) {
        int quiet = 0;
        for (long long step = 1;; ++step) {
            if (step > tr.series_halfwidth)
                throw truncation_overflow_error("R series did not settle within "
                                                "the truncation window");
            Term tn = term(k0 + dir * step);
            sum += tn.value;
            if (tn.matched &&
                std::abs(tn.value) < tr.tail_tol * (1.0 + std::abs(sum))) {
                if (++quiet >= 3) {
                    tail += std::abs(tn.value);
                    break;
                }
            } else {
                quiet = 0;
            }
        }
    }
    return {sum, tail};
}

}  // namespace

Evaluated zwegers_R(Sign sign, HalfInt j, HalfInt m, cplx tau, cplx z,
                    const Truncation& tr) {
    require_upper(tau);
    if (!(m.twice() > 0)) throw std::domain_error("degree m must be positive");
    HalfInt two_m = HalfInt::from_twice(2 * m.twice());
    long long wraps = 0;
    HalfInt j0 = reduce_mod(j, two_m, wraps);

    const double m_v = m.value();
    const double sig = static_cast<double>(sign_value(sign));
    auto boundary = [&](double jj) -> cplx {
        return expi2(-(jj * jj / (4.0 * m_v)) * tau + jj * z);
    };

    Evaluated out = zwegers_R_reduced(sign, j0.value(), m_v, tau, z, tr);
    double j_cur = j0.value();
    for (long long w = 0; w < wraps; ++w) {
        out.value = sig * (out.value - 2.0 * boundary(j_cur));
        j_cur += 2.0 * m_v;
    }
    for (long long w = 0; w > wraps; --w) {
        j_cur -= 2.0 * m_v;
        out.value = sig * out.value + 2.0 * boundary(j_cur);
    }
    return out;
}

// ----------------------------------------------------------------------------
// Completion and quotients
// ----------------------------------------------------------------------------

Evaluated phi_add(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
                  const Truncation& tr) {
    require_upper(tau);
    cplx zr = 0.5 * (z1 - z2);
    cplx zt = z1 + z2;
    cplx sum{0.0, 0.0};
    double tail = 0.0;
    long long count = idx.m.twice();  // 2m summands
    for (long long l = 0; l < count; ++l) {
        HalfInt j = idx.s + HalfInt::whole(l);
        Evaluated r = zwegers_R(idx.sign, j, idx.m, tau, zr, tr);
        Evaluated th = theta_jm(ThetaIndex(idx.sign, j, idx.m), tau, zt, {0, 0}, tr);
        sum += r.value * th.value;
        tail += r.tail * std::abs(th.value) + std::abs(r.value) * th.tail;
    }
    cplx pre = expi2(idx.m.value() * t);
    return {pre * sum, std::abs(pre) * tail};
}

Evaluated phi_tilde(const MockIndex& idx, cplx tau, cplx z1, cplx z2, cplx t,
                    const Truncation& tr) {
    Evaluated base = phi(idx, tau, z1, z2, t, tr);
    Evaluated add = phi_add(idx, tau, z1, z2, t, tr);
    return {base.value - 0.5 * add.value, base.tail + 0.5 * add.tail};
}

Evaluated phi_tilde_uv(const MockIndex& idx, cplx tau, cplx u, cplx v, cplx t,
                       const Truncation& tr) {
    Z12Coords z = change_coords_inverse(u, v);
    return phi_tilde(idx, tau, z.z1, z.z2, t, tr);
}

Evaluated phi_uv(const MockIndex& idx, cplx tau, cplx u, cplx v, cplx t,
                 const Truncation& tr) {
    Z12Coords z = change_coords_inverse(u, v);
    return phi(idx, tau, z.z1, z.z2, t, tr);
}

namespace {

double rel_tail(const Evaluated& e) {
    return e.tail / (std::abs(e.value) + 1e-300);
}

}  // namespace

Evaluated superdenominator_A(cplx tau, cplx u, cplx v, cplx t, const Truncation& tr) {
    require_upper(tau);
    Evaluated eta = dedekind_eta(tau, tr);
    Evaluated top = jacobi_theta_ab(1, 1, tau, 2.0 * u, tr);
    Evaluated d1 = jacobi_theta_ab(1, 1, tau, v - u, tr);
    Evaluated d2 = jacobi_theta_ab(1, 1, tau, v + u, tr);
    if (std::abs(d1.value) < kPoleGuard)
        throw pole_proximity_error("superdenominator_A pole: v - u on the "
                                   "vartheta_11 zero set",
                                   std::abs(d1.value));
    if (std::abs(d2.value) < kPoleGuard)
        throw pole_proximity_error("superdenominator_A pole: v + u on the "
                                   "vartheta_11 zero set",
                                   std::abs(d2.value));
    cplx eta3 = eta.value * eta.value * eta.value;
    cplx value = cplx(0.0, -1.0) * expi2(t) * eta3 * top.value / (d1.value * d2.value);
    double tail = std::abs(value) * (3.0 * rel_tail(eta) + rel_tail(top) +
                                     rel_tail(d1) + rel_tail(d2));
    return {value, tail};
}

Evaluated superdenominator_B(int a, int b, cplx tau, cplx u, cplx v, cplx t,
                             const Truncation& tr) {
    Evaluated base = superdenominator_A(tau, u, v, {0, 0}, tr);
    Evaluated num = jacobi_theta_ab(a, b, tau, v, tr);
    Evaluated den = jacobi_theta_ab(a, b, tau, u, tr);
    if (std::abs(den.value) < kPoleGuard)
        throw pole_proximity_error("superdenominator_B pole: u on the "
                                   "vartheta_ab zero set",
                                   std::abs(den.value));
    cplx value = expi2(0.5 * t) * base.value * num.value / den.value;
    double tail =
        std::abs(value) * (rel_tail(base) + rel_tail(num) + rel_tail(den));
    return {value, tail};
}

Evaluated theta_pair(Sign sign, HalfInt m, HalfInt s, cplx tau, cplx u, cplx v,
                     cplx t, const Truncation& tr) {
    require_upper(tau);
    if (!(m.twice() > 0)) throw std::domain_error("degree m must be positive");
    cplx tau_star = -std::conj(tau);
    cplx v_bar = std::conj(v);
    cplx sum{0.0, 0.0};
    double tail = 0.0;
    for (long long l = 0; l < m.twice(); ++l) {
        HalfInt j = s + HalfInt::whole(l);
        Evaluated left =
            theta_jm(ThetaIndex(sign, j, m), tau_star, 2.0 * v_bar, {0, 0}, tr);
        Evaluated right = theta_jm(ThetaIndex(sign, -j, m), tau, 2.0 * u, {0, 0}, tr);
        sum += left.value * right.value;
        tail += left.tail * std::abs(right.value) + std::abs(left.value) * right.tail;
    }
    cplx pre = expi2(m.value() * t);
    return {pre * sum, std::abs(pre) * tail};
}

cplx frame_gaussian_weight(HalfInt m, cplx tau, cplx v) {
    require_upper(tau);
    if (!(m.twice() > 0)) throw std::domain_error("degree m must be positive");
    double y = tau.imag();
    double a = v.imag() / y;
    double m_v = m.value();
    return {std::sqrt(m_v / y) * std::exp(-4.0 * kPi * m_v * y * a * a), 0.0};
}

}  // namespace mocktheta
