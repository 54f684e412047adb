// SPDX-License-Identifier: MIT

#include "mocktheta/theta.hpp"

#include <algorithm>
#include <cmath>

namespace mocktheta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Log-magnitude of e^(2 pi i w).
double logmag(cplx w) { return -2.0 * kPi * w.imag(); }

int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

Sign parse_sign(std::string_view text) {
    if (text == "+") return Sign::plus;
    if (text == "-") return Sign::minus;
    throw std::invalid_argument("sign must be '+' or '-', got '" + std::string(text) + "'");
}

// ----------------------------------------------------------------------------
// ThetaIndex
// ----------------------------------------------------------------------------

ThetaIndex::ThetaIndex(Sign sign, HalfInt j_raw, HalfInt m_in) : sign(sign), m(m_in) {
    if (m.twice() <= 0) throw std::domain_error("ThetaIndex: m must be > 0");
    long long wraps = 0;
    j = reduce_mod(j_raw, m + m, wraps);
    prefactor_sign = (sign == Sign::minus && (wraps % 2 != 0)) ? -1 : 1;
}

bool ThetaIndex::is_canonical() const {
    if (prefactor_sign != 1) return false;
    if (sign == Sign::plus) return j.is_integer() && m.is_integer();
    return !j.is_integer() && !m.is_integer();
}

ThetaIndex ThetaIndex::canonical(Sign sign, HalfInt j, HalfInt m) {
    ThetaIndex idx(sign, j, m);
    if (!idx.is_canonical())
        throw std::domain_error("ThetaIndex: (" + j.str() + ", " + m.str() +
                                ") is not canonical for sign " + sign_char(sign));
    return idx;
}

std::vector<HalfInt> family_indices(Sign sign, HalfInt m) {
    long long count = m.twice();  // = 2m, always integral
    if (count <= 0) throw std::domain_error("family_indices: m must be > 0");
    HalfInt base = (sign == Sign::plus) ? HalfInt::whole(0) : HalfInt::half();
    std::vector<HalfInt> out;
    out.reserve(count);
    for (long long i = 0; i < count; ++i) out.push_back(base + HalfInt::whole(i));
    return out;
}

// ----------------------------------------------------------------------------
// theta_jm
// ----------------------------------------------------------------------------

Evaluated theta_jm(const ThetaIndex& idx, cplx tau, cplx z, cplx t,
                   const Truncation& tr, ThetaScale scale) {
    if (!(tau.imag() > 0.0)) throw std::domain_error("theta_jm: Im tau must be > 0");
    const double m = idx.m.value();
    const double x = idx.j.value() / (2.0 * m);
    const cplx zc = (scale == ThetaScale::doubled && idx.sign == Sign::minus) ? 2.0 * z : z;
    const double y = tau.imag();

    auto exponent = [&](long long k) {
        double kk = static_cast<double>(k) + x;
        return m * kk * kk * tau + m * kk * zc + m * t;
    };
    const double log_tol = std::log(tr.tail_tol);

    // Expand outward from the magnitude peak of the Gaussian factor.
    long long k0 = std::llround(-x - zc.imag() / (2.0 * y));
    long long lo = k0, hi = k0;
    while (logmag(exponent(lo - 1)) > log_tol) {
        if (k0 - (lo - 1) > tr.series_halfwidth)
            throw truncation_overflow_error("theta_jm: series cap reached");
        --lo;
    }
    while (logmag(exponent(hi + 1)) > log_tol) {
        if ((hi + 1) - k0 > tr.series_halfwidth)
            throw truncation_overflow_error("theta_jm: series cap reached");
        ++hi;
    }

    cplx sum{0.0, 0.0};
    for (long long k = lo; k <= hi; ++k) {
        cplx term = expi2(exponent(k));
        if (idx.sign == Sign::minus && parity_sign(k) < 0) term = -term;
        sum += term;
    }
    Evaluated out;
    out.value = static_cast<double>(idx.prefactor_sign) * sum;
    out.tail = 2.0 * (std::exp(logmag(exponent(lo - 1))) + std::exp(logmag(exponent(hi + 1))));
    return out;
}

// ----------------------------------------------------------------------------
// jacobi_theta_ab
// ----------------------------------------------------------------------------

Evaluated jacobi_theta_ab(int a, int b, cplx tau, cplx z, const Truncation& tr) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::domain_error("jacobi_theta_ab: characteristics must be 0 or 1");
    if (!(tau.imag() > 0.0)) throw std::domain_error("jacobi_theta_ab: Im tau must be > 0");
    const double x = 0.5 * a;
    const cplx zb = z + cplx(0.5 * b, 0.0);
    const double y = tau.imag();

    auto exponent = [&](long long n) {
        double na = static_cast<double>(n) + x;
        return 0.5 * na * na * tau + na * zb;
    };
    const double log_tol = std::log(tr.tail_tol);

    long long n0 = std::llround(-x - z.imag() / y);
    long long lo = n0, hi = n0;
    while (logmag(exponent(lo - 1)) > log_tol) {
        if (n0 - (lo - 1) > tr.series_halfwidth)
            throw truncation_overflow_error("jacobi_theta_ab: series cap reached");
        --lo;
    }
    while (logmag(exponent(hi + 1)) > log_tol) {
        if ((hi + 1) - n0 > tr.series_halfwidth)
            throw truncation_overflow_error("jacobi_theta_ab: series cap reached");
        ++hi;
    }

    cplx sum{0.0, 0.0};
    for (long long n = lo; n <= hi; ++n) sum += expi2(exponent(n));
    Evaluated out;
    out.value = sum;
    out.tail = 2.0 * (std::exp(logmag(exponent(lo - 1))) + std::exp(logmag(exponent(hi + 1))));
    return out;
}

Evaluated jacobi_theta_ab_from_family(int a, int b, cplx tau, cplx z,
                                      const Truncation& tr) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::domain_error("jacobi_theta_ab_from_family: characteristics must be 0 or 1");
    Sign sign = (b == 0) ? Sign::plus : Sign::minus;
    HalfInt j = (a == 0) ? HalfInt::whole(0) : HalfInt::half();
    ThetaIndex idx(sign, j, HalfInt::half());
    Evaluated base = theta_jm(idx, tau, 2.0 * z, {0.0, 0.0}, tr);
    if (a == 1 && b == 1) base.value *= cplx(0.0, 1.0);
    return base;
}

// ----------------------------------------------------------------------------
// Lattice sums
// ----------------------------------------------------------------------------

LatticeData::LatticeData(int rank_in, std::array<std::array<Rational, 2>, 2> gram_in,
                         HalfInt m_in, std::array<Rational, 2> lambda_in)
    : rank(rank_in), gram(gram_in), m(m_in), lambda(lambda_in) {
    if (rank != 1 && rank != 2) throw std::domain_error("LatticeData: rank must be 1 or 2");
    if (m.twice() <= 0) throw std::domain_error("LatticeData: m must be > 0");
    if (rank == 2 && !(gram[0][1] == gram[1][0]))
        throw std::domain_error("LatticeData: gram must be symmetric");
    // Positive definiteness via leading principal minors.
    if (gram[0][0].num <= 0) throw std::domain_error("LatticeData: gram not positive definite");
    if (rank == 2) {
        Rational det = gram[0][0] * gram[1][1] - gram[0][1] * gram[0][1];
        if (det.num <= 0) throw std::domain_error("LatticeData: gram not positive definite");
    }
    for (int i = 0; i < rank; ++i)
        for (int jj = 0; jj < rank; ++jj)
            if (!product_is_integer(gram[i][jj], m))
                throw std::domain_error("LatticeData: m * gram must be integral");
}

namespace {

// m * (alpha|alpha) as an exact Rational for alpha = (k1, k2).
Rational m_norm2(const LatticeData& d, long long k1, long long k2) {
    Rational mr(d.m.twice(), 2);
    Rational n2 = Rational::integer(k1 * k1) * d.gram[0][0];
    if (d.rank == 2)
        n2 = n2 + Rational::integer(2 * k1 * k2) * d.gram[0][1] +
             Rational::integer(k2 * k2) * d.gram[1][1];
    return mr * n2;
}

}  // namespace

Evaluated lattice_theta(const LatticeData& data, Sign sign, cplx tau,
                        const std::vector<cplx>& z, cplx t, const Truncation& tr) {
    if (!(tau.imag() > 0.0)) throw std::domain_error("lattice_theta: Im tau must be > 0");
    if (static_cast<int>(z.size()) != data.rank)
        throw std::domain_error("lattice_theta: z size must equal rank");

    const double m = data.m.value();
    const double g00 = data.gram[0][0].value();
    const double g01 = (data.rank == 2) ? data.gram[0][1].value() : 0.0;
    const double g11 = (data.rank == 2) ? data.gram[1][1].value() : 0.0;
    const double l0 = data.lambda[0].value() / m;
    const double l1 = (data.rank == 2) ? data.lambda[1].value() / m : 0.0;
    const double log_tol = std::log(tr.tail_tol);
    const long long cap = tr.series_halfwidth;

    // exponent w for the term at alpha = (k1, k2): (m/2)|v|^2 tau + m (v|z) + m t
    auto exponent = [&](long long k1, long long k2) {
        double v0 = k1 + l0, v1 = k2 + l1;
        double norm2 = g00 * v0 * v0 + 2.0 * g01 * v0 * v1 + g11 * v1 * v1;
        cplx pair = v0 * (g00 * z[0] + (data.rank == 2 ? g01 * z[1] : cplx{0.0, 0.0}));
        if (data.rank == 2) pair += v1 * (g01 * z[0] + g11 * z[1]);
        return 0.5 * m * norm2 * tau + m * pair + m * t;
    };
    auto term_sign = [&](long long k1, long long k2) {
        if (sign == Sign::plus) return 1;
        Rational p = m_norm2(data, k1, k2);
        if (p.den != 1)
            throw std::domain_error("lattice_theta: sign - requires m|alpha|^2 integral");
        return parity_sign(p.num);
    };

    cplx sum{0.0, 0.0};
    double tail = 0.0;

    if (data.rank == 1) {
        long long k0 = std::llround(-l0);
        long long lo = k0, hi = k0;
        while (logmag(exponent(lo - 1, 0)) > log_tol) {
            if (k0 - (lo - 1) > cap) throw truncation_overflow_error("lattice_theta: cap");
            --lo;
        }
        while (logmag(exponent(hi + 1, 0)) > log_tol) {
            if ((hi + 1) - k0 > cap) throw truncation_overflow_error("lattice_theta: cap");
            ++hi;
        }
        for (long long k = lo; k <= hi; ++k)
            sum += static_cast<double>(term_sign(k, 0)) * expi2(exponent(k, 0));
        tail = 2.0 * (std::exp(logmag(exponent(lo - 1, 0))) +
                      std::exp(logmag(exponent(hi + 1, 0))));
        return {sum, tail};
    }

    // Rank 2: scan rows k1, each row adaptively in k2 around its conditional
    // minimum of the quadratic form; rows stop once entirely below tolerance.
    auto row = [&](long long k1, bool& live) {
        long long c2 = std::llround(-l1 - (g01 / g11) * (k1 + l0));
        double row_best = -1e300;
        long long lo = c2, hi = c2;
        while (logmag(exponent(k1, lo - 1)) > log_tol) {
            if (c2 - (lo - 1) > cap) throw truncation_overflow_error("lattice_theta: cap");
            --lo;
        }
        while (logmag(exponent(k1, hi + 1)) > log_tol) {
            if ((hi + 1) - c2 > cap) throw truncation_overflow_error("lattice_theta: cap");
            ++hi;
        }
        for (long long k2 = lo; k2 <= hi; ++k2) {
            double lm = logmag(exponent(k1, k2));
            row_best = std::max(row_best, lm);
            sum += static_cast<double>(term_sign(k1, k2)) * expi2(exponent(k1, k2));
        }
        tail += std::exp(logmag(exponent(k1, lo - 1))) +
                std::exp(logmag(exponent(k1, hi + 1)));
        live = row_best > log_tol;
    };

    long long c1 = std::llround(-l0);
    bool live = true;
    long long k1 = c1;
    while (true) {
        row(k1, live);
        if (!live) break;
        if (k1 - c1 > cap) throw truncation_overflow_error("lattice_theta: cap");
        ++k1;
    }
    k1 = c1 - 1;
    live = true;
    while (true) {
        row(k1, live);
        if (!live) break;
        if (c1 - k1 > cap) throw truncation_overflow_error("lattice_theta: cap");
        --k1;
    }
    tail *= 2.0;
    return {sum, tail};
}

// ----------------------------------------------------------------------------
// Transformation references
// ----------------------------------------------------------------------------

SPoint modular_S_point(cplx tau, cplx z, cplx t) {
    return {-1.0 / tau, z / tau, t - z * z / (4.0 * tau)};
}

Evaluated theta_modular_reference(const ThetaIndex& idx, ModularGen gen, cplx tau,
                                  cplx z, cplx t, const Truncation& tr) {
    if (gen == ModularGen::T) {
        // e^(pi i j^2 / 2m) Theta_j; the phase is invariant under j -> j + 2m
        // in both families, so the reduced index is safe to use.
        double jj = idx.j.value();
        cplx phase = expi2({jj * jj / (4.0 * idx.m.value()), 0.0});
        Evaluated base = theta_jm(idx, tau, z, t, tr);
        base.value *= phase;
        return base;
    }
    // S: sqrt(-i tau / 2m) Sum_{j'} e^(-pi i j j' / m) Theta_{j'}; the wrap
    // sign of a reduced index multiplies the whole sum.
    cplx pref = principal_sqrt(cplx(0.0, -1.0) * tau / (2.0 * idx.m.value()));
    cplx sum{0.0, 0.0};
    double tail = 0.0;
    for (const HalfInt& jp : family_indices(idx.sign, idx.m)) {
        cplx kernel = expi2({-idx.j.value() * jp.value() / (2.0 * idx.m.value()), 0.0});
        Evaluated part = theta_jm(ThetaIndex(idx.sign, jp, idx.m), tau, z, t, tr);
        sum += kernel * part.value;
        tail += part.tail;
    }
    return {static_cast<double>(idx.prefactor_sign) * pref * sum,
            std::abs(pref) * tail};
}

Evaluated theta_elliptic_reference(const ThetaIndex& idx, const Rational& a, cplx tau,
                                   cplx z, cplx t, const Truncation& tr) {
    if (!product_is_integer(a, idx.m))
        throw std::domain_error("theta_elliptic_reference: shift needs a*m integral, got a = " +
                                a.str() + ", m = " + idx.m.str());
    cplx phase = expi2({0.5 * idx.j.value() * a.value(), 0.0});
    Evaluated base = theta_jm(idx, tau, z, t, tr);
    base.value *= phase;
    return base;
}

Evaluated theta_elliptic_reference_tau_shift(const ThetaIndex& idx, cplx tau, cplx z,
                                             cplx t, const Truncation& tr) {
    ThetaIndex next(idx.sign, idx.j + HalfInt::whole(1), idx.m);
    Evaluated base = theta_jm(next, tau, z, t, tr);
    cplx factor = expi2(-tau / (4.0 * idx.m.value())) * expi2(-0.5 * z);
    base.value = static_cast<double>(idx.prefactor_sign) * factor * base.value;
    base.tail *= std::abs(factor);
    return base;
}

}  // namespace mocktheta
