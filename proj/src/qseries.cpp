// SPDX-License-Identifier: MIT

#include "mocktheta/qseries.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mocktheta {

// ----------------------------------------------------------------------------
// Cyclo8
// ----------------------------------------------------------------------------

Cyclo8 Cyclo8::one() { return integer(1); }

Cyclo8 Cyclo8::integer(long long n) {
    Cyclo8 r;
    r.c[0] = n;
    return r;
}

Cyclo8 Cyclo8::omega_pow(long long k) {
    long long r = k % 8;
    if (r < 0) r += 8;
    Cyclo8 out;
    if (r < 4)
        out.c[static_cast<std::size_t>(r)] = 1;
    else
        out.c[static_cast<std::size_t>(r - 4)] = -1;
    return out;
}

bool Cyclo8::is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

cplx Cyclo8::to_complex() const {
    static const double s = std::sqrt(0.5);
    double c0 = c[0].convert_to<double>();
    double c1 = c[1].convert_to<double>();
    double c2 = c[2].convert_to<double>();
    double c3 = c[3].convert_to<double>();
    return {c0 + s * (c1 - c3), c2 + s * (c1 + c3)};
}

std::string Cyclo8::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        const BigInt& v = c[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        if (!first) out << (v > 0 ? " + " : " - ");
        BigInt mag = v > 0 ? v : BigInt(-v);
        if (first && v < 0) out << "-";
        if (mag != 1 || k == 0) out << mag.str();
        if (k >= 1) {
            out << "w";
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b) {
    Cyclo8 r;
    for (int i = 0; i < 4; ++i) {
        auto u = static_cast<std::size_t>(i);
        r.c[u] = a.c[u] + b.c[u];
    }
    return r;
}

Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b) {
    Cyclo8 r;
    for (int i = 0; i < 4; ++i) {
        auto u = static_cast<std::size_t>(i);
        r.c[u] = a.c[u] - b.c[u];
    }
    return r;
}

Cyclo8 Cyclo8::operator-() const {
    Cyclo8 r;
    for (int i = 0; i < 4; ++i) {
        auto u = static_cast<std::size_t>(i);
        r.c[u] = -c[u];
    }
    return r;
}

Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b) {
    // omega^4 = -1.
    Cyclo8 r;
    for (int i = 0; i < 4; ++i) {
        auto ui = static_cast<std::size_t>(i);
        if (a.c[ui] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            auto uj = static_cast<std::size_t>(j);
            if (b.c[uj] == 0) continue;
            BigInt prod = a.c[ui] * b.c[uj];
            int k = i + j;
            if (k >= 4)
                r.c[static_cast<std::size_t>(k - 4)] -= prod;
            else
                r.c[static_cast<std::size_t>(k)] += prod;
        }
    }
    return r;
}

// ----------------------------------------------------------------------------
// QZSeries
// ----------------------------------------------------------------------------

QZSeries::QZSeries(const Rational& order) : order_(order) {
    BigInt num24 = BigInt(24) * order.num;
    if (num24 % order.den != 0)
        throw std::domain_error("series cutoff must lie on the 1/24 grid");
    BigInt limited = num24 / order.den;
    if (limited > 1'000'000 || limited < -1'000'000)
        throw std::domain_error("series cutoff out of range");
    order24_ = limited.convert_to<long long>();
}

QZSeries QZSeries::zero(const Rational& order) { return QZSeries(order); }

QZSeries QZSeries::monomial(const Rational& order, const Cyclo8& c, long long q_num24,
                            long long z_num2) {
    QZSeries s(order);
    s.add_term(q_num24, z_num2, c);
    return s;
}

Cyclo8 QZSeries::coefficient(long long q_num24, long long z_num2) const {
    auto it = terms_.find(q_num24);
    if (it == terms_.end()) return Cyclo8::zero();
    auto jt = it->second.find(z_num2);
    if (jt == it->second.end()) return Cyclo8::zero();
    return jt->second;
}

QZSeries& QZSeries::add_term(long long q_num24, long long z_num2, const Cyclo8& c) {
    if (c.is_zero()) return *this;
    if (q_num24 >= order24_) {
        truncated_above_ = true;
        return *this;
    }
    Cyclo8& slot = terms_[q_num24][z_num2];
    slot = slot + c;
    if (slot.is_zero()) {
        terms_[q_num24].erase(z_num2);
        if (terms_[q_num24].empty()) terms_.erase(q_num24);
    }
    return *this;
}

namespace {

Rational rational_from_24(long long num24) { return Rational(num24, 24); }

std::optional<long long> lowest_exponent(const QZSeries& s) {
    if (s.terms().empty()) return std::nullopt;
    return s.terms().begin()->first;
}

QZSeries truncated_to(const QZSeries& s, const Rational& order) {
    QZSeries out = QZSeries::zero(order);
    for (const auto& [q24, poly] : s.terms())
        for (const auto& [z2, c] : poly) out.add_term(q24, z2, c);
    // A truncated source pins its function only modulo some power of q, so the
    // restriction cannot be exact either.
    if (s.truncated_above()) out.mark_truncated();
    return out;
}

QZSeries add_scaled(const QZSeries& a, const QZSeries& b, int sign_b) {
    long long ord = std::min(a.order24(), b.order24());
    QZSeries out = QZSeries::zero(rational_from_24(ord));
    for (const auto& [q24, poly] : a.terms())
        for (const auto& [z2, c] : poly) out.add_term(q24, z2, c);
    for (const auto& [q24, poly] : b.terms())
        for (const auto& [z2, c] : poly)
            out.add_term(q24, z2, sign_b > 0 ? c : -c);
    if (a.truncated_above() || b.truncated_above()) out.mark_truncated();
    return out;
}

}  // namespace

void QZSeries::mark_truncated() { truncated_above_ = true; }

QZSeries operator+(const QZSeries& a, const QZSeries& b) { return add_scaled(a, b, 1); }

QZSeries operator-(const QZSeries& a, const QZSeries& b) { return add_scaled(a, b, -1); }

QZSeries QZSeries::operator-() const {
    QZSeries out = QZSeries::zero(order_);
    out.truncated_above_ = truncated_above_;
    for (const auto& [q24, poly] : terms_)
        for (const auto& [z2, c] : poly) out.add_term(q24, z2, -c);
    return out;
}

QZSeries series_mul(const QZSeries& a, const QZSeries& b) {
    // A truncated series pins its function only modulo q^order; the product is
    // then pinned modulo q^min(ordA + minB, ordB + minA).
    auto min_a = lowest_exponent(a);
    auto min_b = lowest_exponent(b);
    if (!min_a && !a.truncated_above()) return QZSeries::zero(b.order_ + a.order_);
    if (!min_b && !b.truncated_above()) return QZSeries::zero(a.order_ + b.order_);
    long long eff_a = min_a ? *min_a : a.order24();
    long long eff_b = min_b ? *min_b : b.order24();
    long long ord = std::min(a.order24() + eff_b, b.order24() + eff_a);
    if (!a.truncated_above() && !b.truncated_above())
        ord = std::max(ord, a.order24() + b.order24());
    QZSeries out = QZSeries::zero(rational_from_24(ord));
    for (const auto& [qa, pa] : a.terms_)
        for (const auto& [qb, pb] : b.terms_) {
            long long q24 = qa + qb;
            if (q24 >= ord) {
                out.truncated_above_ = true;
                continue;
            }
            for (const auto& [za, ca] : pa)
                for (const auto& [zb, cb] : pb) out.add_term(q24, za + zb, ca * cb);
        }
    if (a.truncated_above() || b.truncated_above()) out.truncated_above_ = true;
    return out;
}

QZSeries operator*(const QZSeries& a, const QZSeries& b) { return series_mul(a, b); }

bool operator==(const QZSeries& a, const QZSeries& b) {
    return a.order24() == b.order24() && a.terms() == b.terms();
}

QZSeries QZSeries::scaled(const Cyclo8& c, long long q_num24, long long z_num2) const {
    QZSeries out = QZSeries::zero(rational_from_24(order24_ + q_num24));
    out.truncated_above_ = truncated_above_;
    if (c.is_zero()) return out;
    for (const auto& [q24, poly] : terms_)
        for (const auto& [z2, cc] : poly)
            out.add_term(q24 + q_num24, z2 + z_num2, c * cc);
    return out;
}

QZSeries QZSeries::substitute_zeta_square() const {
    QZSeries out = QZSeries::zero(order_);
    out.truncated_above_ = truncated_above_;
    for (const auto& [q24, poly] : terms_)
        for (const auto& [z2, c] : poly) out.add_term(q24, 2 * z2, c);
    return out;
}

QZSeries QZSeries::substitute_z_plus_half() const {
    // zeta^(k/2) -> e^(pi i k / 2) zeta^(k/2) = omega^(2k) zeta^(k/2).
    QZSeries out = QZSeries::zero(order_);
    out.truncated_above_ = truncated_above_;
    for (const auto& [q24, poly] : terms_)
        for (const auto& [z2, c] : poly)
            out.add_term(q24, z2, c * Cyclo8::omega_pow(2 * z2));
    return out;
}

QZSeries QZSeries::substitute_z_plus_half_tau() const {
    // zeta^(k/2) -> zeta^(k/2) q^(k/4): the q-exponent gains 6k on the /24 grid.
    QZSeries out = QZSeries::zero(order_);
    out.truncated_above_ = truncated_above_;
    for (const auto& [q24, poly] : terms_)
        for (const auto& [z2, c] : poly) out.add_term(q24 + 6 * z2, z2, c);
    return out;
}

std::optional<QZSeries::Mismatch> QZSeries::first_mismatch(const QZSeries& a,
                                                           const QZSeries& b) {
    long long bound = std::min(a.order24(), b.order24());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (true) {
        bool a_live = ia != a.terms_.end() && ia->first < bound;
        bool b_live = ib != b.terms_.end() && ib->first < bound;
        if (!a_live && !b_live) return std::nullopt;
        if (a_live && (!b_live || ia->first < ib->first)) {
            const auto& [z2, c] = *ia->second.begin();
            return Mismatch{ia->first, z2, c, Cyclo8::zero()};
        }
        if (b_live && (!a_live || ib->first < ia->first)) {
            const auto& [z2, c] = *ib->second.begin();
            return Mismatch{ib->first, z2, Cyclo8::zero(), c};
        }
        // Same q-level: walk the zeta-polynomials together.
        auto ja = ia->second.begin();
        auto jb = ib->second.begin();
        while (ja != ia->second.end() || jb != ib->second.end()) {
            bool ja_live = ja != ia->second.end();
            bool jb_live = jb != ib->second.end();
            if (ja_live && (!jb_live || ja->first < jb->first))
                return Mismatch{ia->first, ja->first, ja->second, Cyclo8::zero()};
            if (jb_live && (!ja_live || jb->first < ja->first))
                return Mismatch{ib->first, jb->first, Cyclo8::zero(), jb->second};
            if (!(ja->second == jb->second))
                return Mismatch{ia->first, ja->first, ja->second, jb->second};
            ++ja;
            ++jb;
        }
        ++ia;
        ++ib;
    }
}

Evaluated QZSeries::evaluate(cplx tau, cplx z) const {
    if (!(std::isfinite(tau.real()) && std::isfinite(tau.imag()) && tau.imag() > 0.0))
        throw std::domain_error("series evaluation requires Im(tau) > 0");
    cplx sum{0.0, 0.0};
    for (const auto& [q24, poly] : terms_) {
        cplx qpow = expi2(tau * (static_cast<double>(q24) / 24.0));
        cplx level{0.0, 0.0};
        for (const auto& [z2, c] : poly)
            level += c.to_complex() * expi2(z * (static_cast<double>(z2) / 2.0));
        sum += qpow * level;
    }
    double tail = 0.0;
    if (truncated_above_) {
        constexpr double two_pi = 6.283185307179586476925286766559;
        tail = std::exp(-two_pi * tau.imag() * static_cast<double>(order24_) / 24.0);
    }
    return {sum, tail};
}

// ----------------------------------------------------------------------------
// Named expansions
// ----------------------------------------------------------------------------

QZSeries eta_series(const Rational& order) {
    QZSeries s = QZSeries::monomial(order, Cyclo8::one(), 1, 0);
    s.mark_truncated();  // keep every intermediate product capped at the cutoff
    long long ord = s.order24();
    for (long long n = 1; 24 * n < ord; ++n) {
        QZSeries factor = QZSeries::monomial(order, Cyclo8::one(), 0, 0);
        factor.add_term(24 * n, 0, Cyclo8::integer(-1));
        s = s * factor;
    }
    return truncated_to(s, order);
}

QZSeries theta_ab_series(int a, int b, SeriesForm form, const Rational& order) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::domain_error("theta characteristics must be 0 or 1");
    QZSeries out = QZSeries::zero(order);
    long long ord = out.order24();
    if (form == SeriesForm::sum) {
        out.mark_truncated();
        if (ord <= 0) return out;
        // Sum over n of (-1)^(n b) omega^(2ab) q^(3 k^2 / 24) zeta^(k/2), k = 2n + a.
        for (long long n = -ord; ; ++n) {
            long long k = 2 * n + a;
            if (3 * k * k >= ord && k > 0) break;
            if (3 * k * k >= ord) continue;
            Cyclo8 c = Cyclo8::omega_pow(2 * a * b);
            if (b != 0 && (n % 2) != 0) c = -c;
            out.add_term(3 * k * k, k, c);
        }
        return out;
    }
    // Triple-product form.
    int zeta_sign = (b == 0) ? 1 : -1;       // sign on the zeta factors
    long long offset = (a == 0) ? -12 : 0;   // q^(n - 1/2) vs q^n in the zeta factors
    QZSeries prod = QZSeries::monomial(order, Cyclo8::one(), 0, 0);
    prod.mark_truncated();  // keep every intermediate product capped at the cutoff
    for (long long n = 1;; ++n) {
        long long qn = 24 * n;
        long long qz = 24 * n + offset;
        if (qn >= ord && qz >= ord) break;
        QZSeries factor = QZSeries::monomial(order, Cyclo8::one(), 0, 0);
        factor.add_term(qn, 0, Cyclo8::integer(-1));
        prod = prod * factor;
        QZSeries zf1 = QZSeries::monomial(order, Cyclo8::one(), 0, 0);
        zf1.add_term(qz, 2, Cyclo8::integer(zeta_sign));
        QZSeries zf2 = QZSeries::monomial(order, Cyclo8::one(), 0, 0);
        zf2.add_term(qz, -2, Cyclo8::integer(zeta_sign));
        prod = prod * zf1 * zf2;
    }
    if (a == 1) {
        // Prefactor q^(1/8) (zeta^(1/2) +- zeta^(-1/2)), with i for (a,b) = (1,1).
        Cyclo8 unit = (b == 0) ? Cyclo8::one() : Cyclo8::omega_pow(2);
        QZSeries pre = QZSeries::monomial(order, unit, 3, 1);
        pre.add_term(3, -1, (b == 0) ? unit : -unit);
        prod = pre * prod;
    }
    prod = truncated_to(prod, order);
    prod.mark_truncated();
    return prod;
}

namespace {

IdentityResidual residual_from(const QZSeries& lhs, const QZSeries& rhs,
                               const std::string& label) {
    auto mm = QZSeries::first_mismatch(lhs, rhs);
    IdentityResidual out;
    out.equal = !mm.has_value();
    out.mismatch = mm;
    if (out.equal) {
        out.description = label + ": all terms agree below the cutoff";
    } else {
        std::ostringstream msg;
        msg << label << ": first mismatch at q^(" << mm->q_num24 << "/24) zeta^("
            << mm->z_num2 << "/2): lhs = " << mm->lhs.str()
            << ", rhs = " << mm->rhs.str();
        out.description = msg.str();
    }
    return out;
}

}  // namespace

IdentityResidual product_identity_check(const Rational& order, int drop_factor) {
    QZSeries lhs = QZSeries::monomial(order, Cyclo8::one(), 0, 0);
    int slot = 0;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            if (slot++ == drop_factor) continue;
            lhs = lhs * theta_ab_series(a, b, SeriesForm::sum, order);
        }
    QZSeries eta = eta_series(order);
    QZSeries rhs = eta * eta * eta *
                   theta_ab_series(1, 1, SeriesForm::sum, order).substitute_zeta_square();
    return residual_from(truncated_to(lhs, order), truncated_to(rhs, order),
                         "four-theta product vs eta^3 theta_11(2z)");
}

IdentityResidual shift_half_check(int a, int b, const Rational& order) {
    QZSeries lhs = theta_ab_series(a, b, SeriesForm::sum, order).substitute_z_plus_half();
    QZSeries rhs = theta_ab_series(a, 1 - b, SeriesForm::sum, order);
    if (a * b != 0) rhs = rhs.scaled(Cyclo8::integer(-1));
    std::ostringstream label;
    label << "theta_" << a << b << "(z + 1/2) shift";
    return residual_from(lhs, rhs, label.str());
}

IdentityResidual shift_half_tau_check(int a, int b, const Rational& order) {
    // The substitution moves q-exponents by 6k (k the doubled zeta-exponent), so
    // expand with enough slack that nothing from above the final cutoff can fall
    // below it.
    QZSeries probe = QZSeries::zero(order);
    long long slack =
        2 * static_cast<long long>(
                std::sqrt(static_cast<double>(probe.order24()) / 3.0)) + 4;
    Rational ext = order + Rational(slack, 1);
    QZSeries lhs =
        theta_ab_series(a, b, SeriesForm::sum, ext).substitute_z_plus_half_tau();
    QZSeries rhs = theta_ab_series(1 - a, b, SeriesForm::sum, ext)
                       .scaled(Cyclo8::omega_pow(-2 * b), -3, -1);
    std::ostringstream label;
    label << "theta_" << a << b << "(z + tau/2) shift";
    return residual_from(truncated_to(lhs, order), truncated_to(rhs, order),
                         label.str());
}

long long eta_coefficient_reference(long long k) {
    // Euler: Prod (1 - q^n) = Sum_j (-1)^j q^(j(3j-1)/2) over all integers j.
    long long total = 0;
    for (long long j = -k - 2; j <= k + 2; ++j) {
        long long pent = j * (3 * j - 1) / 2;
        if (pent == k) total += (j % 2 == 0) ? 1 : -1;
    }
    return total;
}

}  // namespace mocktheta
