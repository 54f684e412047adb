// SPDX-License-Identifier: MIT
//
// Verification harness: deterministic sample clouds on the domain, membership
// checks for the two function spaces F^[m;s,s'] (real-analytic, holomorphic in
// u) and G^[m;s,s'] (holomorphic in u and conj v), span/ratio evidence, and
// the named identity suites the CLI exposes.  Reports are plain data,
// serialized to JSON (schema 1) and optional per-point residual CSV, and are
// byte-reproducible for a fixed seed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mocktheta/calculus.hpp"
#include "mocktheta/mock.hpp"

namespace mocktheta {

// ----------------------------------------------------------------------------
// Tolerance ladder (from the finite-difference error model; series bounds from
// the adaptive tails).
// ----------------------------------------------------------------------------

inline constexpr double kTolSeries = 1e-10;        // pure series identities
inline constexpr double kTolSeriesTight = 1e-11;   // convention-level identities
inline constexpr double kTolModularT = 1e-12;      // T law: same series, phase factored
inline constexpr double kTolModularS = 1e-9;       // S law: resummation + sqrt
// Membership shift laws in the z- and t-directions: exact series reindexing,
// no magnification.
inline constexpr double kTolMembershipSeries = 1e-7;
// Independent tau-direction shifts change Im(v - u) by a full y, so the
// completed sum is reconstructed from pieces up to e^(4 pi m y) times larger
// than the result; at m <= 2, y <= 2.5 the double-precision residual envelope
// reaches ~1e-5.  The falsified-twist controls sit at O(1).
inline constexpr double kTolMembershipTau = 1e-4;
inline constexpr double kTolFirstDeriv = 1e-6;
inline constexpr double kTolSecondDeriv = 1e-5;
inline constexpr double kTolCovariance = 1e-4;
inline constexpr double kTolCommutator = 1e-3;
inline constexpr double kTolSpanDispersion = 1e-8;

// ----------------------------------------------------------------------------
// Reports
// ----------------------------------------------------------------------------

struct CheckEntry {
    std::string name;
    double max_abs_err;
    double tol;
    bool pass;
};

// One residual sample, for the optional CSV dump.
struct ResidualRow {
    std::string check;
    int point;
    cplx tau, u, v;
    double residual;
};

struct HarnessConfig {
    Truncation trunc{};
    DiffConfig diff{};
};

struct SuiteParams {
    HalfInt m, s, sprime;
    std::uint64_t seed = 7;
    int points = 10;
};

struct CheckReport {
    std::string suite;
    SuiteParams params;
    HarnessConfig config;
    std::vector<std::pair<std::string, double>> tolerances;  // echoed knobs
    std::vector<CheckEntry> checks;
    std::vector<ResidualRow> residuals;
    bool overall = true;

    // Appends an entry and folds it into `overall`.
    void add(const std::string& name, double err, double tol);
    // As above for a deliberately falsified instance: passes iff err > tol.
    void add_control(const std::string& name, double err, double tol);

    nlohmann::ordered_json to_json() const;
    std::string to_json_text() const;   // dump with trailing newline
    std::string residual_csv() const;
};

// ----------------------------------------------------------------------------
// Sample cloud
// ----------------------------------------------------------------------------

// Distance from w to the lattice Z + tau Z in cell coordinates (the (xi, eta)
// of w = xi tau + eta reduced to the centered unit square).
double cell_distance(cplx w, cplx tau);

struct SampleCloud {
    std::uint64_t seed;
    std::vector<DomainPoint> points;

    // Draws `count` points with tau in [-0.4, 0.4] x i[0.8, 2.5] and u, v in
    // the fundamental cell, rejecting points with cell_distance(v +- u) < 0.05.
    // max_frame_a additionally bounds |a(u)|, |a(v)| (the tau-direction
    // components), keeping the e^(4 pi m a^2 y) frame factors moderate for
    // derivative-based checks.
    static SampleCloud generate(std::uint64_t seed, int count,
                                double max_frame_a = 0.45);
};

inline constexpr double kCloudMargin = 0.05;

// ----------------------------------------------------------------------------
// Membership and span checks
// ----------------------------------------------------------------------------

// Conditions on a degree-m handle f, sampled over the cloud:
//   F1  t-shift degree law
//   F2  vartheta_11(v-u) vartheta_11(v+u) f bounded near the locus;
//       u-holomorphy (d/d conj u within first-derivative budget)
//   F3  f(tau, u+j, v+k, t)        = e^(2 pi i s (j+k)) f,  j,k in {-1,0,1,2}
//       f(tau, u+j tau, v+k tau, t)= e^(2 pi i (s'(j+k) + 2m(k v - j u)))
//                                      * q^(m(k^2 - j^2)) f
//   F4  f(tau, u+k/2m,   v+k/2m)   = f,                     k in {1,2,3}
//       f(tau, u+k tau/2m, v+k tau/2m) = e^(2 pi i k (v-u)) f
//   F5  D f = Dbar f = Delta f = 0 within the second-derivative budget
CheckReport check_F_membership(const FunctionHandle& f, HalfInt m, HalfInt s,
                               HalfInt sprime, const SampleCloud& cloud,
                               const HarnessConfig& cfg);

// Conditions on the conjugate-holomorphic side:
//   G1  degree law;  G2  d/d conj u = 0 and d/d v = 0
//   G3(i) as F3(i); G3(ii) phase e^(2 pi i (s'(j+k) + 2m(k conj v - j u)))
//         * e^(2 pi i m (k^2 conj tau - j^2 tau))
//   G4(i) as F4(i); G4(ii) phase e^(2 pi i k (conj v - u))
//         * e^((pi i k^2 / 2m)(conj tau - tau))
//   G5  D g = 0 and (8 pi i m d_conj-tau + d_conj-v^2) g = 0
CheckReport check_G_membership(const FunctionHandle& g, HalfInt m, HalfInt s,
                               HalfInt sprime, const SampleCloud& cloud,
                               const HarnessConfig& cfg);

struct SpanRatio {
    cplx c;             // mean of f/g over the cloud
    double dispersion;  // max |f/g - c|
};
// Points where |g| falls below the resample floor are skipped.
SpanRatio span_ratio(const FunctionHandle& f, const FunctionHandle& g,
                     const SampleCloud& cloud);

// ----------------------------------------------------------------------------
// Named suites
// ----------------------------------------------------------------------------

// Handle factories for the library functions (labels embed the indices).
FunctionHandle phi_handle(const MockIndex& idx, const Truncation& tr);
FunctionHandle phi_tilde_handle(const MockIndex& idx, const Truncation& tr);
FunctionHandle superdenominator_A_handle(const Truncation& tr);
FunctionHandle superdenominator_B_handle(int a, int b, const Truncation& tr);
FunctionHandle theta_pair_handle(Sign sign, HalfInt m, HalfInt s,
                                 const Truncation& tr);
// e^(2 pi i m t) Theta^sigma_{j,m}(tau, 2u): the heat-flow theta handle.
FunctionHandle theta_u_handle(const ThetaIndex& idx, const Truncation& tr);
// e^(2 pi i m t) R^sigma_{j,m}(tau, v): the correction-kernel handle.
FunctionHandle zwegers_R_handle(Sign sign, HalfInt j, HalfInt m,
                                const Truncation& tr);

// Suite names: theta-elliptic, theta-modular, zwegers-dbar, r-shift,
// dv-bar-closed-form, theta-pair-link, denominator-A, denominator-B,
// product-identity, covariance, commutators, f-membership, g-membership,
// s-periodicity, modular-span.
// Throws std::invalid_argument for unknown names.
CheckReport run_identity_suite(const std::string& name, const SuiteParams& params,
                               const HarnessConfig& cfg);
std::vector<std::string> suite_names();

// Sign family for the membership probe of F^[m;s,s']: plus when s' is
// integral, minus when s' is strictly half-integral.
Sign probe_sign_for(HalfInt sprime);

}  // namespace mocktheta
