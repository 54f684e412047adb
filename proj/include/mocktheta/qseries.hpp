// SPDX-License-Identifier: MIT
//
// Exact truncated q-expansions with Laurent-polynomial coefficients in
// zeta = e^(2 pi i z).  Powers of q live on the (1/24) Z grid (so eta's
// q^(1/24) and the thetas' q^(1/8) are exact), powers of zeta on the (1/2) Z
// grid (so zeta^(1/2) = e^(pi i z) is exact), and scalar phases are tracked in
// the ring Z[omega], omega = e^(2 pi i / 8).  Everything here is exact integer
// arithmetic; the only floats appear in evaluate(), the bridge back to the
// numeric evaluators.

#pragma once

#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mocktheta/numeric.hpp"

namespace mocktheta {

using BigInt = boost::multiprecision::cpp_int;

// ----------------------------------------------------------------------------
// Cyclo8: the ring Z[omega] with omega^4 = -1, coordinates over {1, omega,
// omega^2, omega^3}.  Hosts every scalar phase the theta shift laws produce
// (signs, i = omega^2, and the eighth roots from half-characteristics).
// ----------------------------------------------------------------------------

struct Cyclo8 {
    std::array<BigInt, 4> c{};  // c[0] + c[1] w + c[2] w^2 + c[3] w^3

    static Cyclo8 zero() { return {}; }
    static Cyclo8 one();
    static Cyclo8 integer(long long n);
    static Cyclo8 omega_pow(long long k);  // omega^k, any k

    bool is_zero() const;
    cplx to_complex() const;
    std::string str() const;

    friend Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b);
    friend Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b);
    friend Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b);
    Cyclo8 operator-() const;
    friend bool operator==(const Cyclo8& a, const Cyclo8& b) { return a.c == b.c; }
};

// ----------------------------------------------------------------------------
// QZSeries
// ----------------------------------------------------------------------------

class QZSeries {
  public:
    // Coefficient of one q-power: map from doubled zeta-exponent to scalar.
    using ZetaPoly = std::map<long long, Cyclo8>;

    // Zero series with cutoff at q-exponent `order` (must lie on the 1/24 grid).
    static QZSeries zero(const Rational& order);
    // c * q^(q_num/24) * zeta^(z_num/2), truncated against `order`.
    static QZSeries monomial(const Rational& order, const Cyclo8& c,
                             long long q_num24, long long z_num2);

    const Rational& order() const { return order_; }
    long long order24() const { return order24_; }
    // True when terms at or above the cutoff may have been dropped.
    bool truncated_above() const { return truncated_above_; }

    bool is_zero() const { return terms_.empty(); }
    // Coefficient of q^(q_num/24) zeta^(z_num/2) (zero if absent).
    Cyclo8 coefficient(long long q_num24, long long z_num2) const;
    const std::map<long long, ZetaPoly>& terms() const { return terms_; }

    QZSeries& add_term(long long q_num24, long long z_num2, const Cyclo8& c);
    // Record that terms at or above the cutoff exist but are not stored.
    void mark_truncated();

    friend QZSeries operator+(const QZSeries& a, const QZSeries& b);
    friend QZSeries operator-(const QZSeries& a, const QZSeries& b);
    friend QZSeries operator*(const QZSeries& a, const QZSeries& b);
    QZSeries operator-() const;
    // Exact equality of stored terms (orders must match).
    friend bool operator==(const QZSeries& a, const QZSeries& b);

    // Multiply by the monomial c * q^(q_num/24) * zeta^(z_num/2).
    QZSeries scaled(const Cyclo8& c, long long q_num24 = 0, long long z_num2 = 0) const;

    // Substitutions, all exact on the grids:
    QZSeries substitute_zeta_square() const;    // z -> 2z      (zeta -> zeta^2)
    QZSeries substitute_z_plus_half() const;    // z -> z + 1/2 (zeta^(k/2) gains i^k)
    QZSeries substitute_z_plus_half_tau() const;// z -> z + tau/2 (zeta^(k/2) gains q^(k/4))

    // First term (lowest q, then lowest zeta) where the two series differ.
    struct Mismatch {
        long long q_num24;
        long long z_num2;
        Cyclo8 lhs, rhs;
    };
    static std::optional<Mismatch> first_mismatch(const QZSeries& a, const QZSeries& b);

    // Numeric value at (tau, z); tail reports |q|^order for the dropped range.
    Evaluated evaluate(cplx tau, cplx z) const;

  private:
    explicit QZSeries(const Rational& order);
    Rational order_;
    long long order24_;
    bool truncated_above_ = false;
    std::map<long long, ZetaPoly> terms_;
    friend QZSeries series_mul(const QZSeries&, const QZSeries&);
};

// ----------------------------------------------------------------------------
// Named expansions and identity checks
// ----------------------------------------------------------------------------

// q^(1/24) Prod_{n >= 1} (1 - q^n), exact to the cutoff.
QZSeries eta_series(const Rational& order);

enum class SeriesForm { sum, product };

// vartheta_ab as a series in q and zeta: `sum` transcribes the defining
// bilateral sum; `product` uses the triple-product factorization
//   vartheta_00 = Prod (1-q^n)(1 + zeta q^(n-1/2))(1 + zeta^-1 q^(n-1/2))
//   vartheta_01 = Prod (1-q^n)(1 - zeta q^(n-1/2))(1 - zeta^-1 q^(n-1/2))
//   vartheta_10 = q^(1/8)(zeta^(1/2) + zeta^(-1/2)) Prod (1-q^n)(1 + zeta q^n)(1 + zeta^-1 q^n)
//   vartheta_11 = i q^(1/8)(zeta^(1/2) - zeta^(-1/2)) Prod (1-q^n)(1 - zeta q^n)(1 - zeta^-1 q^n)
// Agreement of the two forms is the Jacobi triple product identity.
QZSeries theta_ab_series(int a, int b, SeriesForm form, const Rational& order);

// Outcome of an exact identity comparison.
struct IdentityResidual {
    bool equal;
    std::optional<QZSeries::Mismatch> mismatch;
    std::string description;
};

// Prod_{a,b} vartheta_ab(tau, z)  ==  eta(tau)^3 * vartheta_11(tau, 2z),
// both sides expanded exactly to the cutoff.  With drop_factor in {0..3} the
// corresponding vartheta_ab factor (in the order 00, 01, 10, 11) is removed
// from the left side — a deliberately false variant for negative controls.
IdentityResidual product_identity_check(const Rational& order, int drop_factor = -1);

// Shift laws as exact series identities (n = 1 versions):
//   vartheta_ab(tau, z + 1/2)   == (-1)^(a b) vartheta_{a, 1-b}(tau, z)
//   vartheta_ab(tau, z + tau/2) == (-i)^b q^(-1/8) zeta^(-1/2) vartheta_{1-a, b}(tau, z)
IdentityResidual shift_half_check(int a, int b, const Rational& order);
IdentityResidual shift_half_tau_check(int a, int b, const Rational& order);

// Pentagonal-number coefficient of q^(1/24 + k) in eta, by the exact
// partition-style recurrence (independent of eta_series); used as its oracle.
long long eta_coefficient_reference(long long k);

}  // namespace mocktheta
