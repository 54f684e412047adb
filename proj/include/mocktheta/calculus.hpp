// SPDX-License-Identifier: MIT
//
// Finite-difference Wirtinger calculus on functions of (tau, u, v, t), the
// three second-order operators built from it, the lowering map to the
// conjugate-holomorphic side, and the weight-(-1) SL(2, Z) action.
//
// Every function enters as a FunctionHandle: an evaluator plus its degree m,
// meaning f(tau, u, v, t) = e^(2 pi i m t) f(tau, u, v, 0).  Derivatives in t
// are therefore taken analytically (d/dt -> 2 pi i m); all other derivatives
// are central finite differences with optional Richardson extrapolation.
//
// With the frame tau = x + i y, v = a tau - b:
//
//   D      f = 8 pi i m d_tau f + d_v^2 f - d_u^2 f
//   Dbar   f = 8 pi i m (d_taubar + a d_vbar) f + d_vbar^2 f
//   Delta  f = 4 pi i m a d_vbar f - d_v d_vbar f
//   theta_map f = -2 i y^(1/2) e^(4 pi m a^2 y) d_vbar f
//
// and the group acts by
//
//   (f |_A)(tau, u, v, t) = (c tau + d)^(-1)
//       * f( (a tau + b)/(c tau + d), u/(c tau + d), v/(c tau + d),
//            t - c (u^2 - v^2)/(c tau + d) ).

#pragma once

#include <functional>
#include <string>

#include "mocktheta/numeric.hpp"

namespace mocktheta {

struct FunctionHandle {
    HalfInt degree;
    std::function<cplx(const DomainPoint&)> eval;
    std::string label;
};

enum class Scheme { central2, central4 };

struct DiffConfig {
    // Base step; scaled by (1 + |coordinate|) per variable, and widened for
    // second-order stencils per the rounding-error model.
    double step = 1e-4;
    bool richardson = true;
    Scheme scheme = Scheme::central4;
};

// Throws step_error unless 1e-7 <= step <= 1e-2.
void validate(const DiffConfig& cfg);

enum class Var { tau, tau_bar, u, u_bar, v, v_bar, t };

// First Wirtinger derivative d f / d var at p.  Var::t is analytic
// (2 pi i m f(p)); Var::tau and conjugates keep Im tau clear of the real axis
// (throws step_error when y is too small for the stencil).
cplx wirtinger(const FunctionHandle& f, const DomainPoint& p, Var var,
               const DiffConfig& cfg);

// Second derivatives d^2 f / d var^2 and the mixed d_v d_vbar f.
cplx wirtinger_second(const FunctionHandle& f, const DomainPoint& p, Var var,
                      const DiffConfig& cfg);
cplx wirtinger_v_vbar(const FunctionHandle& f, const DomainPoint& p,
                      const DiffConfig& cfg);

cplx apply_D(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg);
cplx apply_Dbar(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg);
cplx apply_Delta(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg);
// The holomorphic-side companion of Dbar: 8 pi i m d_taubar + d_vbar^2
// (no frame shear term); annihilates the conjugate-theta combinations.
cplx apply_Dbar_plain(const FunctionHandle& f, const DomainPoint& p,
                      const DiffConfig& cfg);

cplx theta_map(const FunctionHandle& f, const DomainPoint& p, const DiffConfig& cfg);

// Wraps an operator as a new handle (same degree) so operators can be nested,
// e.g. for commutator tests.
enum class OperatorKind { D, Dbar, Delta };
FunctionHandle operator_handle(OperatorKind kind, const FunctionHandle& f,
                               const DiffConfig& cfg);

// ----------------------------------------------------------------------------
// SL(2, Z)
// ----------------------------------------------------------------------------

struct SL2Matrix {
    long long a, b, c, d;
    SL2Matrix(long long a, long long b, long long c, long long d);  // det must be 1
    static SL2Matrix S() { return SL2Matrix(0, -1, 1, 0); }
    static SL2Matrix T() { return SL2Matrix(1, 1, 0, 1); }
    friend SL2Matrix operator*(const SL2Matrix& lhs, const SL2Matrix& rhs);
};

// (f |_A)(p) by the substitution formula above.
cplx sl2_act(const FunctionHandle& f, const SL2Matrix& A, const DomainPoint& p);

// f |_A as a reusable handle.
FunctionHandle sl2_slashed(const FunctionHandle& f, const SL2Matrix& A);

// Direct short form of f |_S for degree-m handles:
//   (1/tau) e^(2 pi i m (v^2 - u^2)/tau) f(-1/tau, u/tau, v/tau, t).
// Must agree with sl2_act(f, S, p); kept as an independent code path.
cplx sl2_act_S_shortcut(const FunctionHandle& f, const DomainPoint& p);

}  // namespace mocktheta
