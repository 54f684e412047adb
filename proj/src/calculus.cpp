// SPDX-License-Identifier: MIT
//
// Stencil layout.  A first derivative along a real direction dir uses the
// central difference at step h = step * (1 + |coordinate|), optionally
// Richardson-extrapolated by halving h.  Second-order stencils divide by h^2,
// so the same h would push the rounding floor (~eps / h^2) above the accuracy
// the property tests need; they widen the step twenty-fold, which sits near
// the optimum of the truncation-vs-rounding tradeoff for central-4 stencils.
//
// Wirtinger combinations, with (x, y) the real and imaginary parts of the
// active coordinate:
//   d_w      = (d_x - i d_y) / 2          d_wbar   = (d_x + i d_y) / 2
//   d_w^2    = (d_xx - d_yy - 2 i d_xy) / 4
//   d_wbar^2 = (d_xx - d_yy + 2 i d_xy) / 4
//   d_w d_wbar = (d_xx + d_yy) / 4
// The mixed d_xy is a nested central difference in the two directions, sharing
// one step parameter so Richardson extrapolation stays valid.

#include "mocktheta/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mocktheta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kSecondOrderWidening = 20.0;
constexpr double kTauMarginFactor = 10.0;

const cplx kI{0.0, 1.0};

template <typename G>
cplx central_first(const G& g, cplx w, cplx dir, double h, Scheme scheme) {
    if (scheme == Scheme::central2)
        return (g(w + h * dir) - g(w - h * dir)) / (2.0 * h);
    return (-g(w + 2.0 * h * dir) + 8.0 * g(w + h * dir) - 8.0 * g(w - h * dir) +
            g(w - 2.0 * h * dir)) /
           (12.0 * h);
}

template <typename G>
cplx central_second(const G& g, cplx w, cplx dir, double h, Scheme scheme) {
    if (scheme == Scheme::central2)
        return (g(w + h * dir) - 2.0 * g(w) + g(w - h * dir)) / (h * h);
    return (-g(w + 2.0 * h * dir) + 16.0 * g(w + h * dir) - 30.0 * g(w) +
            16.0 * g(w - h * dir) - g(w - 2.0 * h * dir)) /
           (12.0 * h * h);
}

template <typename A>
cplx richardson(const A& approx, double h, const DiffConfig& cfg) {
    cplx coarse = approx(h);
    if (!cfg.richardson) return coarse;
    cplx fine = approx(0.5 * h);
    return cfg.scheme == Scheme::central2 ? (4.0 * fine - coarse) / 3.0
                                          : (16.0 * fine - coarse) / 15.0;
}

enum class Coord { tau, u, v };

Coord coord_of(Var var) {
    switch (var) {
        case Var::tau:
        case Var::tau_bar:
            return Coord::tau;
        case Var::u:
        case Var::u_bar:
            return Coord::u;
        case Var::v:
        case Var::v_bar:
            return Coord::v;
        case Var::t:
            break;
    }
    throw std::domain_error("Var::t has no finite-difference coordinate");
}

bool is_conjugate(Var var) {
    return var == Var::tau_bar || var == Var::u_bar || var == Var::v_bar;
}

struct Section {
    cplx base;
    std::function<cplx(cplx)> eval;
};

Section section_for(const FunctionHandle& f, const DomainPoint& p, Coord coord) {
    switch (coord) {
        case Coord::tau:
            return {p.tau, [&f, p](cplx w) { return f.eval(p.with_tau(w)); }};
        case Coord::u:
            return {p.u, [&f, p](cplx w) { return f.eval(p.with_u(w)); }};
        case Coord::v:
            return {p.v, [&f, p](cplx w) { return f.eval(p.with_v(w)); }};
    }
    throw std::logic_error("unreachable");
}

double base_step(const DiffConfig& cfg, cplx w) {
    return cfg.step * (1.0 + std::abs(w));
}

void require_tau_margin(const DomainPoint& p, Coord coord, double h) {
    if (coord == Coord::tau && !(p.y > kTauMarginFactor * h))
        throw step_error("Im tau too small for the tau finite-difference stencil");
}

cplx analytic_t_factor(const FunctionHandle& f) {
    return 2.0 * kPi * kI * f.degree.value();
}

}  // namespace

void validate(const DiffConfig& cfg) {
    if (!(cfg.step >= 1e-7 && cfg.step <= 1e-2))
        throw step_error("finite-difference step must lie in [1e-7, 1e-2]");
}

cplx wirtinger(const FunctionHandle& f, const DomainPoint& p, Var var,
               const DiffConfig& cfg) {
    validate(cfg);
    if (var == Var::t) return analytic_t_factor(f) * f.eval(p);
    Coord coord = coord_of(var);
    Section sec = section_for(f, p, coord);
    double h = base_step(cfg, sec.base);
    require_tau_margin(p, coord, h);
    cplx dx = richardson(
        [&](double hh) { return central_first(sec.eval, sec.base, {1.0, 0.0}, hh,
                                              cfg.scheme); },
        h, cfg);
    cplx dy = richardson(
        [&](double hh) { return central_first(sec.eval, sec.base, kI, hh,
                                              cfg.scheme); },
        h, cfg);
    return is_conjugate(var) ? 0.5 * (dx + kI * dy) : 0.5 * (dx - kI * dy);
}

cplx wirtinger_second(const FunctionHandle& f, const DomainPoint& p, Var var,
                      const DiffConfig& cfg) {
    validate(cfg);
    if (var == Var::t) {
        cplx fac = analytic_t_factor(f);
        return fac * fac * f.eval(p);
    }
    Coord coord = coord_of(var);
    Section sec = section_for(f, p, coord);
    double h = kSecondOrderWidening * base_step(cfg, sec.base);
    require_tau_margin(p, coord, h);
    cplx dxx = richardson(
        [&](double hh) { return central_second(sec.eval, sec.base, {1.0, 0.0}, hh,
                                               cfg.scheme); },
        h, cfg);
    cplx dyy = richardson(
        [&](double hh) { return central_second(sec.eval, sec.base, kI, hh,
                                               cfg.scheme); },
        h, cfg);
    cplx dxy = richardson(
        [&](double hh) {
            auto inner = [&](cplx w) {
                return central_first(sec.eval, w, {1.0, 0.0}, hh, cfg.scheme);
            };
            return central_first(inner, sec.base, kI, hh, cfg.scheme);
        },
        h, cfg);
    cplx sign = is_conjugate(var) ? kI : -kI;
    return 0.25 * (dxx - dyy + 2.0 * sign * dxy);
}

cplx wirtinger_v_vbar(const FunctionHandle& f, const DomainPoint& p,
                      const DiffConfig& cfg) {
    validate(cfg);
    Section sec = section_for(f, p, Coord::v);
    double h = kSecondOrderWidening * base_step(cfg, sec.base);
    cplx dxx = richardson(
        [&](double hh) { return central_second(sec.eval, sec.base, {1.0, 0.0}, hh,
                                               cfg.scheme); },
        h, cfg);
    cplx dyy = richardson(
        [&](double hh) { return central_second(sec.eval, sec.base, kI, hh,
                                               cfg.scheme); },
        h, cfg);
    return 0.25 * (dxx + dyy);
}

cplx apply_D(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg) {
    cplx m = f.degree.value();
    return 8.0 * kPi * kI * m * wirtinger(f, p, Var::tau, cfg) +
           wirtinger_second(f, p, Var::v, cfg) - wirtinger_second(f, p, Var::u, cfg);
}

cplx apply_Dbar(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg) {
    cplx m = f.degree.value();
    return 8.0 * kPi * kI * m *
               (wirtinger(f, p, Var::tau_bar, cfg) +
                p.a * wirtinger(f, p, Var::v_bar, cfg)) +
           wirtinger_second(f, p, Var::v_bar, cfg);
}

cplx apply_Delta(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg) {
    cplx m = f.degree.value();
    return 4.0 * kPi * kI * m * p.a * wirtinger(f, p, Var::v_bar, cfg) -
           wirtinger_v_vbar(f, p, cfg);
}

cplx apply_Dbar_plain(const FunctionHandle& f, const DomainPoint& p,
                      const DiffConfig& cfg) {
    cplx m = f.degree.value();
    return 8.0 * kPi * kI * m * wirtinger(f, p, Var::tau_bar, cfg) +
           wirtinger_second(f, p, Var::v_bar, cfg);
}

cplx theta_map(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg) {
    double m = f.degree.value();
    double weight = std::exp(4.0 * kPi * m * p.a * p.a * p.y);
    return -2.0 * kI * std::sqrt(p.y) * weight * wirtinger(f, p, Var::v_bar, cfg);
}

FunctionHandle operator_handle(OperatorKind kind, const FunctionHandle& f,
                               const DiffConfig& cfg) {
    validate(cfg);
    std::string tag;
    switch (kind) {
        case OperatorKind::D:
            tag = "D";
            break;
        case OperatorKind::Dbar:
            tag = "Dbar";
            break;
        case OperatorKind::Delta:
            tag = "Delta";
            break;
    }
    FunctionHandle inner = f;
    auto eval = [kind, inner, cfg](const DomainPoint& p) -> cplx {
        switch (kind) {
            case OperatorKind::D:
                return apply_D(inner, p, cfg);
            case OperatorKind::Dbar:
                return apply_Dbar(inner, p, cfg);
            case OperatorKind::Delta:
                return apply_Delta(inner, p, cfg);
        }
        throw std::logic_error("unreachable");
    };
    return {f.degree, std::move(eval), tag + "[" + f.label + "]"};
}

// ----------------------------------------------------------------------------
// SL(2, Z)
// ----------------------------------------------------------------------------

SL2Matrix::SL2Matrix(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1)
        throw std::domain_error("SL2Matrix entries must have determinant 1");
}

SL2Matrix operator*(const SL2Matrix& lhs, const SL2Matrix& rhs) {
    return SL2Matrix(lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                     lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d);
}

cplx sl2_act(const FunctionHandle& f, const SL2Matrix& A, const DomainPoint& p) {
    cplx den = static_cast<double>(A.c) * p.tau + static_cast<double>(A.d);
    cplx tau2 = (static_cast<double>(A.a) * p.tau + static_cast<double>(A.b)) / den;
    cplx u2 = p.u / den;
    cplx v2 = p.v / den;
    cplx t2 = p.t - static_cast<double>(A.c) * (p.u * p.u - p.v * p.v) / den;
    return f.eval(DomainPoint(tau2, u2, v2, t2)) / den;
}

FunctionHandle sl2_slashed(const FunctionHandle& f, const SL2Matrix& A) {
    FunctionHandle inner = f;
    auto eval = [inner, A](const DomainPoint& p) { return sl2_act(inner, A, p); };
    return {f.degree, std::move(eval), f.label + "|slash"};
}

cplx sl2_act_S_shortcut(const FunctionHandle& f, const DomainPoint& p) {
    double m = f.degree.value();
    cplx phase = expi2(m * (p.v * p.v - p.u * p.u) / p.tau);
    DomainPoint q(-1.0 / p.tau, p.u / p.tau, p.v / p.tau, p.t);
    return phase * f.eval(q) / p.tau;
}

}  // namespace mocktheta
