// SPDX-License-Identifier: MIT
//
// Shared numeric kernel: exact half-integer and rational arithmetic, the
// upper-half-plane evaluation point with its real coordinate frame, truncation
// control, typed evaluation errors, and the special functions every series in
// this library leans on:
//
//   principal_sqrt(w)       branch with argument in (-pi, pi]
//   gauss_E(x)            = 2 * Integral_0^x exp(-pi r^2) dr      (odd, -> +-1)
//   gauss_tail_scaled(x)  = exp(pi x^2) * (1 - gauss_E(x)),  x >= 0
//   dedekind_eta(tau)     = q^(1/24) * Prod_{n>=1} (1 - q^n),  q = e^(2 pi i tau)

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mocktheta {

using cplx = std::complex<double>;

// ----------------------------------------------------------------------------
// Errors.  std::domain_error is used for argument-domain violations; the types
// below separate failures that depend on the evaluation point or settings.
// ----------------------------------------------------------------------------

// Base for evaluation-time failures (as opposed to bad arguments).
struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An evaluation point landed within the guard distance of a series pole.
struct pole_proximity_error : evaluation_error {
    explicit pole_proximity_error(const std::string& what, double distance)
        : evaluation_error(what), distance(distance) {}
    double distance;
};

// An adaptive sum hit the term cap before its tail dropped below tolerance.
struct truncation_overflow_error : evaluation_error {
    using evaluation_error::evaluation_error;
};

// A finite-difference step size fell outside the supported window.
struct step_error : evaluation_error {
    using evaluation_error::evaluation_error;
};

// ----------------------------------------------------------------------------
// HalfInt: exact elements of (1/2) * Z, stored as twice the value.
// ----------------------------------------------------------------------------

class HalfInt {
  public:
    constexpr HalfInt() : twice_(0) {}

    static constexpr HalfInt from_twice(long long t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    static constexpr HalfInt whole(long long n) { return from_twice(2 * n); }
    static constexpr HalfInt half() { return from_twice(1); }

    // Accepts "3", "-2", "1/2", "-7/2".  Throws std::invalid_argument.
    static HalfInt parse(std::string_view text);

    constexpr long long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    double value() const { return 0.5 * static_cast<double>(twice_); }
    std::string str() const;

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ + b.twice_);
    }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
        return from_twice(a.twice_ - b.twice_);
    }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
    friend constexpr bool operator!=(HalfInt a, HalfInt b) { return a.twice_ != b.twice_; }
    friend constexpr bool operator<(HalfInt a, HalfInt b) { return a.twice_ < b.twice_; }
    friend constexpr bool operator<=(HalfInt a, HalfInt b) { return a.twice_ <= b.twice_; }
    friend constexpr bool operator>(HalfInt a, HalfInt b) { return a.twice_ > b.twice_; }
    friend constexpr bool operator>=(HalfInt a, HalfInt b) { return a.twice_ >= b.twice_; }

    // True when a * b lands in Z (e.g. (1/2) * 4, 3 * 2).
    static constexpr bool product_is_integer(HalfInt a, HalfInt b) {
        return (a.twice_ * b.twice_) % 4 == 0;
    }

  private:
    long long twice_;
};

// Reduces j into [0, period) by multiples of period (> 0); wraps_out receives
// the number of periods subtracted (negative when j was below 0).
HalfInt reduce_mod(HalfInt j, HalfInt period, long long& wraps_out);

// ----------------------------------------------------------------------------
// Rational: small exact fractions for lattice data and shift amounts.
// ----------------------------------------------------------------------------

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);  // normalizes; throws on d == 0
    static Rational integer(long long n) { return Rational(n, 1); }
    static Rational parse(std::string_view text);  // "2", "-1/3"

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num, den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// True when r * h lands in Z for half-integer h.
bool product_is_integer(const Rational& r, HalfInt h);

// ----------------------------------------------------------------------------
// Truncation: caps and tolerances for the adaptive series evaluators.
// ----------------------------------------------------------------------------

struct Truncation {
    // Hard cap on the summation half-width |n| <= K; adaptive evaluators stop
    // earlier once the next term falls below tail_tol, and throw
    // truncation_overflow_error if the cap is hit first.
    int series_halfwidth = 400;
    // Number of factors kept in the eta product.
    int eta_terms = 64;
    // Absolute target for the first omitted term of a series.
    double tail_tol = 1e-14;
};

// A computed value together with a bound on the truncated series tail.
struct Evaluated {
    cplx value{0.0, 0.0};
    double tail = 0.0;
};

// ----------------------------------------------------------------------------
// DomainPoint: (tau, u, v, t) with Im tau > 0, plus the real frame
//   tau = x + i y,   v = a * tau - b
// cached on construction (a = Im v / y, b = a x - Re v).
// ----------------------------------------------------------------------------

struct DomainPoint {
    cplx tau, u, v, t;
    double x, y, a, b;

    DomainPoint(cplx tau, cplx u, cplx v, cplx t);

    // Same frame decomposition for an arbitrary z against this tau.
    static void frame_of(cplx tau, cplx z, double& a_out, double& b_out);

    DomainPoint with_u(cplx nu) const { return DomainPoint(tau, nu, v, t); }
    DomainPoint with_v(cplx nv) const { return DomainPoint(tau, u, nv, t); }
    DomainPoint with_t(cplx nt) const { return DomainPoint(tau, u, v, nt); }
    DomainPoint with_tau(cplx ntau) const { return DomainPoint(ntau, u, v, t); }
};

// ----------------------------------------------------------------------------
// Special functions.
// ----------------------------------------------------------------------------

// Square root with argument in (-pi, pi]: principal_sqrt(-1) = i,
// principal_sqrt(-2i) = 1 - i.
cplx principal_sqrt(cplx w);

// Odd sigmoid 2 * Integral_0^x exp(-pi r^2) dr; |abs error| < 1e-13.
// Throws std::domain_error on non-finite input.
double gauss_E(double x);

// exp(pi x^2) * (1 - gauss_E(x)) for x >= 0, evaluated without overflow;
// relative error < 1e-12.  Equals 1 at x = 0, strictly decreasing.
// Throws std::domain_error for x < 0 or non-finite input.
double gauss_tail_scaled(double x);

// Dedekind eta by its q-product; tail reports |q|^(N+1) / (1 - |q|) for the
// dropped factors.  Throws std::domain_error unless Im tau > 0.
Evaluated dedekind_eta(cplx tau, const Truncation& tr);

// exp(2 pi i w), the basic character every series here is built from.
cplx expi2(cplx w);

// Deterministic counter-based generator: value depends only on (seed, counter),
// so sample clouds replay identically across platforms and runs.
class SplitMix {
  public:
    explicit SplitMix(std::uint64_t seed) : seed_(seed) {}
    // k-th raw 64-bit word of the stream.
    std::uint64_t word(std::uint64_t counter) const;
    // k-th uniform double in [0, 1).
    double uniform(std::uint64_t counter) const;
    // Next value from an internal counter (still replayable from the seed).
    double next() { return uniform(counter_++); }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace mocktheta
