// SPDX-License-Identifier: MIT

#include "mocktheta/numeric.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace mocktheta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

long long parse_ll(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

// exp(t^2) erfc(t), t >= 0: direct product below t = 12 (no overflow there),
// asymptotic series above.
double erfcx(double t) {
    if (t <= 12.0) return std::exp(t * t) * std::erfc(t);
    // erfcx(t) ~ (1/(t sqrt(pi))) Sum_k (-1)^k (2k-1)!! / (2 t^2)^k
    double inv2t2 = 1.0 / (2.0 * t * t);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 12; ++k) {
        term *= -(2 * k - 1) * inv2t2;
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum / (t * std::sqrt(kPi));
}

}  // namespace

// ----------------------------------------------------------------------------
// HalfInt / Rational
// ----------------------------------------------------------------------------

HalfInt HalfInt::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return whole(parse_ll(text));
    long long num = parse_ll(text.substr(0, slash));
    long long den = parse_ll(text.substr(slash + 1));
    if (den == 1) return whole(num);
    if (den != 2)
        throw std::invalid_argument("not a half-integer: '" + std::string(text) + "'");
    return from_twice(num);
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt reduce_mod(HalfInt j, HalfInt period, long long& wraps_out) {
    if (period.twice() <= 0) throw std::domain_error("reduce_mod: period must be > 0");
    long long a = j.twice(), p = period.twice();
    long long r = ((a % p) + p) % p;
    wraps_out = (a - r) / p;
    return HalfInt::from_twice(r);
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_ll(text), 1);
    return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}

bool product_is_integer(const Rational& r, HalfInt h) {
    return (r.num * h.twice()) % (2 * r.den) == 0;
}

// ----------------------------------------------------------------------------
// DomainPoint
// ----------------------------------------------------------------------------

DomainPoint::DomainPoint(cplx tau, cplx u, cplx v, cplx t)
    : tau(tau), u(u), v(v), t(t), x(tau.real()), y(tau.imag()) {
    if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("DomainPoint: Im tau must be positive and finite");
    frame_of(tau, v, a, b);
}

void DomainPoint::frame_of(cplx tau, cplx z, double& a_out, double& b_out) {
    a_out = z.imag() / tau.imag();
    b_out = a_out * tau.real() - z.real();
}

// ----------------------------------------------------------------------------
// Special functions
// ----------------------------------------------------------------------------

cplx principal_sqrt(cplx w) {
    if (w.imag() == 0.0) {
        // Real axis: argument 0 or pi; the branch takes theta = +pi on the
        // negative axis regardless of the sign of the zero imaginary part.
        if (w.real() >= 0.0) return {std::sqrt(w.real()), 0.0};
        return {0.0, std::sqrt(-w.real())};
    }
    return std::sqrt(w);
}

double gauss_E(double x) {
    if (!std::isfinite(x)) throw std::domain_error("gauss_E: non-finite input");
    double ax = std::abs(x);
    if (ax <= 1.5) {
        // 2x Sum_k (-pi x^2)^k / (k! (2k+1))
        double m = -kPi * x * x;
        double c = 1.0;
        double sum = 0.0;
        for (int k = 0; k < 64; ++k) {
            sum += c / (2 * k + 1);
            c *= m / (k + 1);
            if (std::abs(c) < 1e-20) break;
        }
        return 2.0 * x * sum;
    }
    double tail = std::exp(-kPi * x * x) * erfcx(std::sqrt(kPi) * ax);
    return x > 0 ? 1.0 - tail : tail - 1.0;
}

double gauss_tail_scaled(double x) {
    if (!std::isfinite(x)) throw std::domain_error("gauss_tail_scaled: non-finite input");
    if (x < 0.0) throw std::domain_error("gauss_tail_scaled: negative input");
    return erfcx(std::sqrt(kPi) * x);
}

cplx expi2(cplx w) {
    double re = -2.0 * kPi * w.imag();
    if (re < -745.0) return {0.0, 0.0};
    double r = std::exp(re);
    double ang = 2.0 * kPi * w.real();
    return {r * std::cos(ang), r * std::sin(ang)};
}

Evaluated dedekind_eta(cplx tau, const Truncation& tr) {
    if (!(tau.imag() > 0.0)) throw std::domain_error("dedekind_eta: Im tau must be > 0");
    cplx q = expi2(tau);
    cplx prod{1.0, 0.0};
    cplx qn{1.0, 0.0};
    for (int n = 1; n <= tr.eta_terms; ++n) {
        qn *= q;
        prod *= (cplx{1.0, 0.0} - qn);
    }
    Evaluated out;
    out.value = expi2(tau / 24.0) * prod;
    double aq = std::abs(q);
    out.tail = std::pow(aq, tr.eta_terms + 1) / (1.0 - aq);
    return out;
}

// ----------------------------------------------------------------------------
// SplitMix
// ----------------------------------------------------------------------------

std::uint64_t SplitMix::word(std::uint64_t counter) const {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix::uniform(std::uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
}

}  // namespace mocktheta
