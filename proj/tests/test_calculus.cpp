// SPDX-License-Identifier: MIT

#include "mocktheta/calculus.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "mocktheta/mock.hpp"

using namespace mocktheta;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
const Truncation kTr{};
const DiffConfig kCfg{};
const cplx kI{0.0, 1.0};

double nerr(cplx got, cplx want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

FunctionHandle oscillator(double alpha, double beta) {
    return {HalfInt::whole(0),
            [alpha, beta](const DomainPoint& p) {
                return expi2(alpha * p.v + beta * std::conj(p.v));
            },
            "oscillator"};
}

FunctionHandle phi_tilde_handle_local(const MockIndex& idx) {
    return {idx.m,
            [idx](const DomainPoint& p) {
                return phi_tilde_uv(idx, p.tau, p.u, p.v, p.t, kTr).value;
            },
            "phi_tilde"};
}

FunctionHandle theta_u_handle_local(Sign sign, HalfInt j, HalfInt m) {
    ThetaIndex ti(sign, j, m);
    return {m,
            [ti](const DomainPoint& p) {
                return theta_jm(ti, p.tau, 2.0 * p.u, {0, 0}, kTr).value;
            },
            "theta(2u)"};
}

FunctionHandle r_v_handle(Sign sign, HalfInt j, HalfInt m) {
    return {m,
            [sign, j, m](const DomainPoint& p) {
                return zwegers_R(sign, j, m, p.tau, p.v, kTr).value;
            },
            "R(v)"};
}

const DomainPoint kP0{{0.13, 1.21}, {0.31, 0.04}, {0.17, -0.06}, {0.02, 0.0}};
const DomainPoint kP1{{-0.21, 1.45}, {0.22, -0.08}, {0.36, 0.11}, {0.0, 0.0}};
const DomainPoint kP2{{0.05, 0.93}, {0.41, 0.09}, {0.12, 0.07}, {0.01, 0.0}};

TEST(WirtingerFirst, KnownAnalyticFunctions) {
    FunctionHandle f = oscillator(0.7, -0.4);
    for (const DomainPoint& p : {kP0, kP1}) {
        cplx base = f.eval(p);
        cplx dv = wirtinger(f, p, Var::v, kCfg);
        cplx dvb = wirtinger(f, p, Var::v_bar, kCfg);
        EXPECT_LT(nerr(dv, 2.0 * kPi * kI * 0.7 * base), 1e-10);
        EXPECT_LT(nerr(dvb, 2.0 * kPi * kI * (-0.4) * base), 1e-10);
        // No u or tau dependence.
        EXPECT_LT(std::abs(wirtinger(f, p, Var::u, kCfg)), 1e-10);
        EXPECT_LT(std::abs(wirtinger(f, p, Var::tau, kCfg)), 1e-10);
    }

    FunctionHandle idtau{HalfInt::whole(0),
                         [](const DomainPoint& p) { return p.tau; }, "tau"};
    EXPECT_LT(std::abs(wirtinger(idtau, kP0, Var::tau, kCfg) - 1.0), 1e-11);
    EXPECT_LT(std::abs(wirtinger(idtau, kP0, Var::tau_bar, kCfg)), 1e-11);
    FunctionHandle ctau{HalfInt::whole(0),
                        [](const DomainPoint& p) { return std::conj(p.tau); },
                        "conj tau"};
    EXPECT_LT(std::abs(wirtinger(ctau, kP0, Var::tau_bar, kCfg) - 1.0), 1e-11);

    // t is analytic: d/dt brings down 2 pi i m.
    FunctionHandle deg{HalfInt::parse("3/2"),
                       [](const DomainPoint& p) { return expi2(1.5 * p.t); }, "t-only"};
    cplx dt = wirtinger(deg, kP0, Var::t, kCfg);
    EXPECT_LT(nerr(dt, 2.0 * kPi * kI * 1.5 * deg.eval(kP0)), 1e-14);
}

TEST(WirtingerSecond, KnownFunctions) {
    FunctionHandle f = oscillator(0.7, -0.4);
    for (const DomainPoint& p : {kP0, kP2}) {
        cplx base = f.eval(p);
        cplx a = 2.0 * kPi * kI * 0.7, b = 2.0 * kPi * kI * (-0.4);
        EXPECT_LT(nerr(wirtinger_second(f, p, Var::v, kCfg), a * a * base), 1e-8);
        EXPECT_LT(nerr(wirtinger_second(f, p, Var::v_bar, kCfg), b * b * base), 1e-8);
        EXPECT_LT(nerr(wirtinger_v_vbar(f, p, kCfg), a * b * base), 1e-8);
    }

    FunctionHandle vbar2{HalfInt::whole(0),
                         [](const DomainPoint& p) {
                             cplx w = std::conj(p.v);
                             return w * w;
                         },
                         "vbar^2"};
    EXPECT_LT(std::abs(wirtinger_second(vbar2, kP0, Var::v_bar, kCfg) - 2.0), 1e-9);
    EXPECT_LT(std::abs(wirtinger_second(vbar2, kP0, Var::v, kCfg)), 1e-9);
    EXPECT_LT(std::abs(wirtinger_v_vbar(vbar2, kP0, kCfg)), 1e-9);
}

TEST(Config, StepValidation) {
    DiffConfig bad;
    bad.step = 1e-8;
    EXPECT_THROW(wirtinger(oscillator(1, 0), kP0, Var::v, bad), step_error);
    bad.step = 0.1;
    EXPECT_THROW(wirtinger(oscillator(1, 0), kP0, Var::v, bad), step_error);

    // Tau stencil must keep clear of the real axis.
    DomainPoint low{{0.0, 5e-4}, {0.1, 0.0}, {0.2, 0.0}, {0, 0}};
    EXPECT_THROW(wirtinger(oscillator(1, 0), low, Var::tau, kCfg), step_error);
}

TEST(Holomorphy, PhiHasNoBarDerivatives) {
    MockIndex idx(Sign::plus, HalfInt::whole(1), HalfInt::whole(0));
    FunctionHandle f{idx.m,
                     [idx](const DomainPoint& p) {
                         return phi_uv(idx, p.tau, p.u, p.v, p.t, kTr).value;
                     },
                     "phi"};
    for (const DomainPoint& p : {kP0, kP1}) {
        cplx scale = f.eval(p);
        EXPECT_LT(std::abs(wirtinger(f, p, Var::v_bar, kCfg)),
                  1e-8 * (1.0 + std::abs(scale)));
        EXPECT_LT(std::abs(wirtinger(f, p, Var::u_bar, kCfg)),
                  1e-8 * (1.0 + std::abs(scale)));
        EXPECT_LT(std::abs(wirtinger(f, p, Var::tau_bar, kCfg)),
                  1e-8 * (1.0 + std::abs(scale)));
    }
}

TEST(HeatFlow, ThetaInUAnnihilatedByD) {
    // Theta(tau, 2u) has no v dependence, so D reduces to 8 pi i m d_tau - d_u^2.
    struct Case {
        Sign sign;
        HalfInt j, m;
    } cases[] = {{Sign::plus, HalfInt::whole(0), HalfInt::whole(1)},
                 {Sign::plus, HalfInt::whole(1), HalfInt::whole(2)},
                 {Sign::minus, HalfInt::half(), HalfInt::half()},
                 {Sign::minus, HalfInt::parse("3/2"), HalfInt::parse("3/2")}};
    for (const auto& c : cases) {
        FunctionHandle f = theta_u_handle_local(c.sign, c.j, c.m);
        for (const DomainPoint& p : {kP0, kP1, kP2}) {
            cplx resid = apply_D(f, p, kCfg);
            EXPECT_LT(std::abs(resid), 1e-6 * (1.0 + std::abs(f.eval(p))))
                << f.label << " m " << c.m.str();
        }
    }
}

TEST(HeatFlow, FrameGaussianWeightAnnihilatedByD) {
    // The weight depends on tau and v only, so D reduces to 8 pi i m d_tau + d_v^2.
    for (HalfInt m : {HalfInt::whole(1), HalfInt::half(), HalfInt::parse("3/2")}) {
        FunctionHandle f{m,
                         [m](const DomainPoint& p) {
                             return frame_gaussian_weight(m, p.tau, p.v);
                         },
                         "frame weight"};
        for (const DomainPoint& p : {kP0, kP2}) {
            cplx resid = apply_D(f, p, kCfg);
            EXPECT_LT(std::abs(resid), 1e-5 * (1.0 + std::abs(f.eval(p))))
                << "m " << m.str();
        }
    }
}

TEST(HeatFlow, ConjugateThetaAnnihilatedByPlainDbar) {
    // g = Theta(-conj tau, 2 conj v) satisfies (8 pi i m d_taubar + d_vbar^2) g = 0.
    struct Case {
        Sign sign;
        HalfInt j, m;
    } cases[] = {{Sign::plus, HalfInt::whole(0), HalfInt::whole(1)},
                 {Sign::minus, HalfInt::half(), HalfInt::half()}};
    for (const auto& c : cases) {
        ThetaIndex ti(c.sign, c.j, c.m);
        FunctionHandle g{c.m,
                         [ti](const DomainPoint& p) {
                             return theta_jm(ti, -std::conj(p.tau),
                                             2.0 * std::conj(p.v), {0, 0}, kTr)
                                 .value;
                         },
                         "conj theta"};
        for (const DomainPoint& p : {kP0, kP2}) {
            cplx resid = apply_Dbar_plain(g, p, kCfg);
            EXPECT_LT(std::abs(resid), 1e-5 * (1.0 + std::abs(g.eval(p))));
        }
    }
}

TEST(ZwegersKernel, VBarDerivativeClosedForm) {
    // d_vbar R_j = 2 i sqrt(m/y) e^(-4 pi m y a^2) Theta_j(-conj tau, 2 conj v).
    struct Case {
        Sign sign;
        HalfInt j, m;
    } cases[] = {{Sign::plus, HalfInt::whole(0), HalfInt::whole(1)},
                 {Sign::plus, HalfInt::whole(1), HalfInt::whole(1)},
                 {Sign::minus, HalfInt::half(), HalfInt::half()},
                 {Sign::minus, HalfInt::parse("3/2"), HalfInt::parse("3/2")}};
    for (const auto& c : cases) {
        FunctionHandle f = r_v_handle(c.sign, c.j, c.m);
        for (const DomainPoint& p : {kP0, kP1, kP2}) {
            cplx got = wirtinger(f, p, Var::v_bar, kCfg);
            cplx theta = theta_jm(ThetaIndex(c.sign, c.j, c.m), -std::conj(p.tau),
                                  2.0 * std::conj(p.v), {0, 0}, kTr)
                             .value;
            cplx want = 2.0 * kI * frame_gaussian_weight(c.m, p.tau, p.v) * theta;
            EXPECT_LT(nerr(got, want), 1e-6) << "j " << c.j.str() << " m " << c.m.str();
        }
    }
}

TEST(ZwegersKernel, DbarResidualSmall) {
    struct Case {
        Sign sign;
        HalfInt j, m;
    } cases[] = {{Sign::plus, HalfInt::whole(0), HalfInt::whole(1)},
                 {Sign::minus, HalfInt::half(), HalfInt::half()}};
    for (const auto& c : cases) {
        FunctionHandle f = r_v_handle(c.sign, c.j, c.m);
        for (const DomainPoint& p : {kP0, kP2}) {
            cplx resid = apply_Dbar(f, p, kCfg);
            EXPECT_LT(std::abs(resid), 1e-5 * (1.0 + std::abs(f.eval(p))));
        }
    }
}

TEST(CompletedSum, AnnihilatedByAllThreeOperators) {
    MockIndex idx(Sign::plus, HalfInt::whole(1), HalfInt::whole(0));
    FunctionHandle f = phi_tilde_handle_local(idx);
    for (const DomainPoint& p : {kP0, kP1}) {
        double scale = 1.0 + std::abs(f.eval(p));
        EXPECT_LT(std::abs(apply_D(f, p, kCfg)), 1e-5 * scale);
        EXPECT_LT(std::abs(apply_Dbar(f, p, kCfg)), 1e-5 * scale);
        EXPECT_LT(std::abs(apply_Delta(f, p, kCfg)), 1e-5 * scale);
    }

    // The heat balance also holds for the uncompleted sum: the q-exponents
    // mn^2 + ns pair off against the u- and v-exponentials term by term.
    FunctionHandle raw{idx.m,
                       [idx](const DomainPoint& p) {
                           return phi_uv(idx, p.tau, p.u, p.v, p.t, kTr).value;
                       },
                       "phi"};
    EXPECT_LT(std::abs(apply_D(raw, kP0, kCfg)),
              1e-5 * (1.0 + std::abs(raw.eval(kP0))));

    // Control: a tau twist breaks the balance by 16 pi^2 m/10 times the value.
    FunctionHandle twisted{idx.m,
                           [idx](const DomainPoint& p) {
                               return expi2(0.1 * p.tau) *
                                      phi_uv(idx, p.tau, p.u, p.v, p.t, kTr).value;
                           },
                           "twisted phi"};
    EXPECT_GT(std::abs(apply_D(twisted, kP0, kCfg)), 1e-2);
}

TEST(ThetaMap, LowersToThePairing) {
    // Holomorphic input maps to zero.
    MockIndex plain(Sign::plus, HalfInt::whole(1), HalfInt::whole(0));
    FunctionHandle hol{plain.m,
                       [plain](const DomainPoint& p) {
                           return phi_uv(plain, p.tau, p.u, p.v, p.t, kTr).value;
                       },
                       "phi"};
    EXPECT_LT(std::abs(theta_map(hol, kP0, kCfg)),
              1e-7 * (1.0 + std::abs(hol.eval(kP0))));

    // The completed sum maps to -2 sqrt(m) times the sesquiholomorphic pairing.
    struct Case {
        Sign sign;
        HalfInt m, s;
    } cases[] = {{Sign::plus, HalfInt::whole(1), HalfInt::whole(0)},
                 {Sign::minus, HalfInt::half(), HalfInt::half()}};
    for (const auto& c : cases) {
        MockIndex idx(c.sign, c.m, c.s);
        FunctionHandle f = phi_tilde_handle_local(idx);
        for (const DomainPoint& p : {kP0, kP2}) {
            cplx got = theta_map(f, p, kCfg);
            cplx pair =
                theta_pair(c.sign, c.m, c.s, p.tau, p.u, p.v, p.t, kTr).value;
            cplx want = -2.0 * std::sqrt(c.m.value()) * pair;
            EXPECT_LT(nerr(got, want), 1e-6) << "m " << c.m.str();
        }
    }
}

TEST(SL2Action, IdentityShortcutAndComposition) {
    MockIndex idx(Sign::plus, HalfInt::whole(1), HalfInt::whole(0));
    FunctionHandle f = phi_tilde_handle_local(idx);

    SL2Matrix one(1, 0, 0, 1);
    EXPECT_LT(std::abs(sl2_act(f, one, kP0) - f.eval(kP0)), 1e-15);

    // Independent S paths agree.
    for (const DomainPoint& p : {kP0, kP1}) {
        cplx via_matrix = sl2_act(f, SL2Matrix::S(), p);
        cplx via_shortcut = sl2_act_S_shortcut(f, p);
        EXPECT_LT(nerr(via_matrix, via_shortcut), 1e-12);
    }

    // (f|S)|S = f|(-I), i.e. -f(tau, -u, -v, t).
    FunctionHandle fS = sl2_slashed(f, SL2Matrix::S());
    cplx twice = sl2_act(fS, SL2Matrix::S(), kP0);
    cplx direct = -f.eval(DomainPoint(kP0.tau, -kP0.u, -kP0.v, kP0.t));
    EXPECT_LT(nerr(twice, direct), 1e-10);

    // T then S equals the product matrix.
    SL2Matrix ST = SL2Matrix::S() * SL2Matrix::T();
    FunctionHandle fT = sl2_slashed(f, SL2Matrix::T());
    cplx nested = sl2_act(fT, SL2Matrix::S(), kP0);
    cplx product = sl2_act(f, ST, kP0);
    EXPECT_LT(nerr(nested, product), 1e-12);

    EXPECT_THROW(SL2Matrix(1, 1, 1, 1), std::domain_error);
}

TEST(SL2Action, OperatorCovariance) {
    MockIndex idx(Sign::plus, HalfInt::whole(1), HalfInt::whole(0));
    FunctionHandle tilde = phi_tilde_handle_local(idx);
    // The completed sum sits in every kernel, so both sides vanish on it; the
    // oscillator exercises the covariance away from the kernels.
    FunctionHandle osc{HalfInt::whole(1),
                       [](const DomainPoint& p) {
                           return expi2(p.t + 0.3 * p.tau + 0.6 * p.v +
                                        0.2 * std::conj(p.v) + 0.1 * p.u +
                                        0.15 * std::conj(p.tau));
                       },
                       "oscillator"};
    SL2Matrix mats[] = {SL2Matrix::S(), SL2Matrix::T(), SL2Matrix::S() * SL2Matrix::T()};
    for (const FunctionHandle& f : {tilde, osc}) {
      for (const SL2Matrix& A : mats) {
        for (const DomainPoint& p : {kP0, kP1}) {
            cplx den = static_cast<double>(A.c) * p.tau + static_cast<double>(A.d);
            FunctionHandle fA = sl2_slashed(f, A);

            cplx lhs_D = sl2_act(operator_handle(OperatorKind::D, f, kCfg), A, p);
            cplx rhs_D = den * den * apply_D(fA, p, kCfg);
            EXPECT_LT(nerr(lhs_D, rhs_D), 1e-4) << "D covariance";

            cplx lhs_Db = sl2_act(operator_handle(OperatorKind::Dbar, f, kCfg), A, p);
            cplx rhs_Db = std::conj(den) * std::conj(den) * apply_Dbar(fA, p, kCfg);
            EXPECT_LT(nerr(lhs_Db, rhs_Db), 1e-4) << "Dbar covariance";

            cplx lhs_Dl = sl2_act(operator_handle(OperatorKind::Delta, f, kCfg), A, p);
            cplx rhs_Dl = den * std::conj(den) * apply_Delta(fA, p, kCfg);
            EXPECT_LT(nerr(lhs_Dl, rhs_Dl), 1e-4) << "Delta covariance";
        }
      }
    }
}

TEST(SL2Action, OperatorCommutators) {
    // On any degree-m handle:
    //   [Dbar, D] = 16 pi i m / (tau - conj tau) * Delta
    //   [Delta, D] = 8 pi i m / (tau - conj tau) * Delta
    //   [Delta, Dbar] = -8 pi i m / (tau - conj tau) * Delta
    MockIndex idx(Sign::plus, HalfInt::whole(1), HalfInt::whole(0));
    FunctionHandle f = phi_tilde_handle_local(idx);
    DiffConfig outer;
    outer.step = 1e-3;

    // The commutators act on a generic function: use an oscillator with tau
    // dependence so none of the terms vanish identically.
    FunctionHandle g{HalfInt::whole(1),
                     [](const DomainPoint& p) {
                         return expi2(0.3 * p.tau + 0.6 * p.v +
                                      0.2 * std::conj(p.v) + 0.1 * p.u +
                                      0.15 * std::conj(p.tau) + p.t);
                     },
                     "generic"};

    for (const FunctionHandle& h : {g, f}) {
        const DomainPoint& p = kP0;
        double m = h.degree.value();
        cplx factor = 2.0 * kPi * kI * m / (p.tau - std::conj(p.tau));
        cplx delta = apply_Delta(h, p, kCfg);

        FunctionHandle Dh = operator_handle(OperatorKind::D, h, kCfg);
        FunctionHandle Dbh = operator_handle(OperatorKind::Dbar, h, kCfg);

        cplx comm1 = apply_Dbar(Dh, p, outer) - apply_D(Dbh, p, outer);
        EXPECT_LT(nerr(comm1, 8.0 * factor * delta), 1e-3) << "[Dbar, D] " << h.label;

        cplx comm2 = apply_Delta(Dh, p, outer) -
                     apply_D(operator_handle(OperatorKind::Delta, h, kCfg), p, outer);
        EXPECT_LT(nerr(comm2, 4.0 * factor * delta), 1e-3) << "[Delta, D] " << h.label;

        cplx comm3 =
            apply_Delta(Dbh, p, outer) -
            apply_Dbar(operator_handle(OperatorKind::Delta, h, kCfg), p, outer);
        EXPECT_LT(nerr(comm3, -4.0 * factor * delta), 1e-3)
            << "[Delta, Dbar] " << h.label;
    }
}

}  // namespace
