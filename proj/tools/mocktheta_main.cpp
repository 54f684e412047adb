// SPDX-License-Identifier: MIT
//
// Command-line front door for the library: point evaluation (eval), grid
// tables (table), verification suites (verify), and exact q-expansion
// identities (qcheck).
//
// Exit codes: 0 success / all checks pass, 1 computation failure or failed
// check (pole-proximity and truncation-overflow carry typed messages), 2
// usage errors.  A fixed seed makes every output byte-reproducible.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mocktheta/harness.hpp"
#include "mocktheta/qseries.hpp"

using namespace mocktheta;
using nlohmann::ordered_json;

namespace {

// --------------------------------------------------------------------------
// Literal parsing: complex numbers as "a+bi" ("i", "-i", "0.35i", "1-2i").
// --------------------------------------------------------------------------

double parse_real(const std::string& text) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument("bad numeric literal: " + text);
    }
    return value;
}

cplx parse_complex(const std::string& raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    }
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    if (text.back() != 'i') {
        return {parse_real(text), 0.0};
    }
    std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is neither leading nor an exponent sign.
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            return {parse_real(body.substr(0, k)), parse_real(body.substr(k))};
        }
    }
    return {0.0, parse_real(body)};
}

ordered_json complex_json(cplx w) {
    return {{"re", w.real()}, {"im", w.imag()}};
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

// --------------------------------------------------------------------------
// Function selector shared by eval and table.
// --------------------------------------------------------------------------

struct FnRequest {
    std::string fn = "phi-tilde";
    std::string sign = "+";
    std::string m = "1";
    std::string s = "0";
    std::string j = "0";
    int a = 0;
    int b = 0;
};

void add_fn_options(CLI::App* cmd, FnRequest& req) {
    cmd->add_option("--fn", req.fn,
                    "Function: theta, vartheta, phi, phi-add, phi-tilde, r, "
                    "sden-a, sden-b, theta-pair")
        ->capture_default_str();
    cmd->add_option("--sign", req.sign, "Family sign: + or -")
        ->capture_default_str();
    cmd->add_option("--m", req.m, "Degree m as a half-integer, e.g. 2 or 1/2")
        ->capture_default_str();
    cmd->add_option("--s", req.s, "Twist s as a half-integer")
        ->capture_default_str();
    cmd->add_option("--j", req.j, "Theta/R index j as a half-integer")
        ->capture_default_str();
    cmd->add_option("--a", req.a, "vartheta characteristic a in {0,1}")
        ->capture_default_str();
    cmd->add_option("--b", req.b, "vartheta characteristic b in {0,1}")
        ->capture_default_str();
}

void add_truncation_options(CLI::App* cmd, Truncation& tr) {
    cmd->add_option("--series-halfwidth", tr.series_halfwidth,
                    "Hard cap on summation half-width")
        ->capture_default_str();
    cmd->add_option("--eta-terms", tr.eta_terms, "Factors kept in the eta product")
        ->capture_default_str();
    cmd->add_option("--tail-tol", tr.tail_tol, "Adaptive series tail target")
        ->capture_default_str();
}

// Evaluate the selected function.  One-variable theta flavors read their
// elliptic argument from u; the correction kernel r reads it from v.
Evaluated evaluate_fn(const FnRequest& req, cplx tau, cplx u, cplx v, cplx t,
                      const Truncation& tr) {
    if (req.fn == "theta") {
        ThetaIndex idx(parse_sign(req.sign), HalfInt::parse(req.j),
                       HalfInt::parse(req.m));
        return theta_jm(idx, tau, u, t, tr);
    }
    if (req.fn == "vartheta") {
        return jacobi_theta_ab(req.a, req.b, tau, u, tr);
    }
    MockIndex make_idx(parse_sign(req.sign), HalfInt::parse(req.m),
                       HalfInt::parse(req.s));
    if (req.fn == "phi") return phi_uv(make_idx, tau, u, v, t, tr);
    if (req.fn == "phi-add") {
        Z12Coords z = change_coords_inverse(u, v);
        return phi_add(make_idx, tau, z.z1, z.z2, t, tr);
    }
    if (req.fn == "phi-tilde") return phi_tilde_uv(make_idx, tau, u, v, t, tr);
    if (req.fn == "r") {
        return zwegers_R(parse_sign(req.sign), HalfInt::parse(req.j),
                         HalfInt::parse(req.m), tau, v, tr);
    }
    if (req.fn == "sden-a") return superdenominator_A(tau, u, v, t, tr);
    if (req.fn == "sden-b") return superdenominator_B(req.a, req.b, tau, u, v, t, tr);
    if (req.fn == "theta-pair") {
        return theta_pair(parse_sign(req.sign), HalfInt::parse(req.m),
                          HalfInt::parse(req.s), tau, u, v, t, tr);
    }
    throw std::invalid_argument("unknown function: " + req.fn);
}

ordered_json fn_params_json(const FnRequest& req, const std::string& tau,
                            const std::string& u, const std::string& v,
                            const std::string& t) {
    return {{"sign", req.sign}, {"m", req.m}, {"s", req.s}, {"j", req.j},
            {"a", req.a},       {"b", req.b}, {"tau", tau}, {"u", u},
            {"v", v},           {"t", t}};
}

// --------------------------------------------------------------------------
// Subcommand bodies.
// --------------------------------------------------------------------------

int run_eval(const FnRequest& req, const std::string& tau_s, const std::string& u_s,
             const std::string& v_s, const std::string& t_s, const Truncation& tr,
             const std::string& out_path) {
    cplx tau = parse_complex(tau_s), u = parse_complex(u_s), v = parse_complex(v_s),
         t = parse_complex(t_s);
    Evaluated got = evaluate_fn(req, tau, u, v, t, tr);
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "eval";
    doc["fn"] = req.fn;
    doc["params"] = fn_params_json(req, tau_s, u_s, v_s, t_s);
    doc["value"] = complex_json(got.value);
    doc["tail"] = got.tail;
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

int run_table(const FnRequest& req, const std::string& tau_s, const std::string& t_s,
              const std::string& u0_s, const std::string& u1_s, int u_steps,
              const std::string& v0_s, const std::string& v1_s, int v_steps,
              const Truncation& tr, const std::string& out_path) {
    if (u_steps < 1 || v_steps < 1) {
        throw std::invalid_argument("table: step counts must be at least 1");
    }
    cplx tau = parse_complex(tau_s), t = parse_complex(t_s);
    cplx u0 = parse_complex(u0_s), u1 = parse_complex(u1_s);
    cplx v0 = parse_complex(v0_s), v1 = parse_complex(v1_s);

    std::string csv =
        "tau_re,tau_im,u_re,u_im,v_re,v_im,value_re,value_im,tail_bound\n";
    for (int iu = 0; iu < u_steps; ++iu) {
        double fu = u_steps == 1 ? 0.0 : static_cast<double>(iu) / (u_steps - 1);
        cplx u = u0 + fu * (u1 - u0);
        for (int iv = 0; iv < v_steps; ++iv) {
            double fv = v_steps == 1 ? 0.0 : static_cast<double>(iv) / (v_steps - 1);
            cplx v = v0 + fv * (v1 - v0);
            Evaluated got = evaluate_fn(req, tau, u, v, t, tr);
            for (double x : {tau.real(), tau.imag(), u.real(), u.imag(), v.real(),
                             v.imag(), got.value.real(), got.value.imag()}) {
                csv += fmt_double(x);
                csv += ',';
            }
            csv += fmt_double(got.tail);
            csv += '\n';
        }
    }
    write_output(out_path, csv);
    return 0;
}

int run_verify(const std::string& suite, const std::string& m_s,
               const std::string& s_s, const std::string& sp_s, std::uint64_t seed,
               int points, const HarnessConfig& cfg, const std::string& out_path,
               const std::string& residuals_path) {
    SuiteParams params{HalfInt::parse(m_s), HalfInt::parse(s_s),
                       HalfInt::parse(sp_s), seed, points};
    CheckReport rep = run_identity_suite(suite, params, cfg);
    write_output(out_path, rep.to_json_text());
    if (!residuals_path.empty()) {
        write_output(residuals_path, rep.residual_csv());
    }
    return rep.overall ? 0 : 1;
}

int run_qcheck(const std::string& identity, long long order,
               const std::string& out_path) {
    if (order < 1) throw std::invalid_argument("qcheck: order must be positive");
    Rational cut = Rational::integer(order);
    std::vector<IdentityResidual> results;
    if (identity == "product-identity") {
        results.push_back(product_identity_check(cut));
    } else if (identity == "triple-product") {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                QZSeries sum = theta_ab_series(a, b, SeriesForm::sum, cut);
                QZSeries prod = theta_ab_series(a, b, SeriesForm::product, cut);
                auto mm = QZSeries::first_mismatch(sum, prod);
                IdentityResidual res;
                res.equal = !mm.has_value();
                res.mismatch = mm;
                res.description = "theta_" + std::to_string(a) + std::to_string(b) +
                                  " sum form vs product form";
                results.push_back(std::move(res));
            }
        }
    } else if (identity == "shift-half" || identity == "shift-half-tau") {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                results.push_back(identity == "shift-half"
                                      ? shift_half_check(a, b, cut)
                                      : shift_half_tau_check(a, b, cut));
            }
        }
    } else {
        throw std::invalid_argument("unknown identity: " + identity);
    }

    bool overall = true;
    ordered_json checks = ordered_json::array();
    for (const IdentityResidual& res : results) {
        overall = overall && res.equal;
        ordered_json entry;
        entry["name"] = res.description;
        entry["equal"] = res.equal;
        if (res.mismatch) {
            entry["mismatch"] = {{"q_num24", res.mismatch->q_num24},
                                 {"z_num2", res.mismatch->z_num2},
                                 {"lhs", res.mismatch->lhs.str()},
                                 {"rhs", res.mismatch->rhs.str()}};
        }
        checks.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "qcheck";
    doc["identity"] = identity;
    doc["order"] = order;
    doc["checks"] = std::move(checks);
    doc["overall"] = overall;
    write_output(out_path, doc.dump(2) + "\n");
    return overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Rank-1 theta functions, Appell-Lerch sums, and their real-analytic "
        "completions: evaluation, tables, verification suites, exact "
        "q-expansions."};
    app.require_subcommand(1);

    // eval
    FnRequest eval_req;
    std::string eval_tau = "i", eval_u = "0.2", eval_v = "0.35i", eval_t = "0";
    Truncation eval_tr;
    std::string eval_out;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one function at one point");
    add_fn_options(eval_cmd, eval_req);
    eval_cmd->add_option("--tau", eval_tau, "Base point, Im tau > 0")
        ->capture_default_str();
    eval_cmd->add_option("--u", eval_u, "First elliptic argument")
        ->capture_default_str();
    eval_cmd->add_option("--v", eval_v, "Second elliptic argument")
        ->capture_default_str();
    eval_cmd->add_option("--t", eval_t, "Degree direction")->capture_default_str();
    add_truncation_options(eval_cmd, eval_tr);
    eval_cmd->add_option("--out", eval_out, "Write JSON here instead of stdout");

    // table
    FnRequest table_req;
    std::string table_tau = "i", table_t = "0";
    std::string table_u0 = "0.1", table_u1 = "0.4", table_v0 = "0.35i",
                table_v1 = "0.35i";
    int table_u_steps = 5, table_v_steps = 1;
    Truncation table_tr;
    std::string table_out;
    CLI::App* table_cmd = app.add_subcommand("table", "CSV grid of one function");
    add_fn_options(table_cmd, table_req);
    table_cmd->add_option("--tau", table_tau, "Base point, Im tau > 0")
        ->capture_default_str();
    table_cmd->add_option("--t", table_t, "Degree direction")->capture_default_str();
    table_cmd->add_option("--u-start", table_u0, "First u")->capture_default_str();
    table_cmd->add_option("--u-stop", table_u1, "Last u")->capture_default_str();
    table_cmd->add_option("--u-steps", table_u_steps, "Number of u samples")
        ->capture_default_str();
    table_cmd->add_option("--v-start", table_v0, "First v")->capture_default_str();
    table_cmd->add_option("--v-stop", table_v1, "Last v")->capture_default_str();
    table_cmd->add_option("--v-steps", table_v_steps, "Number of v samples")
        ->capture_default_str();
    add_truncation_options(table_cmd, table_tr);
    table_cmd->add_option("--out", table_out, "Write CSV here instead of stdout");

    // verify
    std::string verify_suite = "product-identity";
    std::string verify_m = "1", verify_s = "0", verify_sp = "0";
    std::uint64_t verify_seed = 7;
    int verify_points = 10;
    HarnessConfig verify_cfg;
    std::string verify_out, verify_residuals;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run one verification suite, JSON report");
    verify_cmd
        ->add_option("--suite", verify_suite, "Suite name (see --list-suites)")
        ->capture_default_str();
    verify_cmd->add_flag_callback(
        "--list-suites",
        [] {
            for (const std::string& name : suite_names()) std::cout << name << "\n";
            std::exit(0);
        },
        "Print available suite names and exit");
    verify_cmd->add_option("--m", verify_m, "Degree m")->capture_default_str();
    verify_cmd->add_option("--s", verify_s, "Twist s")->capture_default_str();
    verify_cmd->add_option("--sprime", verify_sp, "Companion twist s'")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_seed, "Sample cloud seed")
        ->capture_default_str();
    verify_cmd->add_option("--points", verify_points, "Sample cloud size")
        ->capture_default_str();
    add_truncation_options(verify_cmd, verify_cfg.trunc);
    verify_cmd
        ->add_option("--step", verify_cfg.diff.step, "Finite-difference base step")
        ->capture_default_str();
    verify_cmd->add_option("--out", verify_out, "Write JSON here instead of stdout");
    verify_cmd->add_option("--residuals", verify_residuals,
                           "Also write per-point residual CSV here");

    // qcheck
    std::string qcheck_identity = "product-identity";
    long long qcheck_order = 20;
    std::string qcheck_out;
    CLI::App* qcheck_cmd =
        app.add_subcommand("qcheck", "Exact q-expansion identity check");
    qcheck_cmd
        ->add_option("--identity", qcheck_identity,
                     "One of: product-identity, triple-product, shift-half, "
                     "shift-half-tau")
        ->capture_default_str();
    qcheck_cmd->add_option("--order", qcheck_order, "Expansion cutoff q^order")
        ->capture_default_str();
    qcheck_cmd->add_option("--out", qcheck_out, "Write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            return run_eval(eval_req, eval_tau, eval_u, eval_v, eval_t, eval_tr,
                            eval_out);
        }
        if (table_cmd->parsed()) {
            return run_table(table_req, table_tau, table_t, table_u0, table_u1,
                             table_u_steps, table_v0, table_v1, table_v_steps,
                             table_tr, table_out);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_suite, verify_m, verify_s, verify_sp,
                              verify_seed, verify_points, verify_cfg, verify_out,
                              verify_residuals);
        }
        if (qcheck_cmd->parsed()) {
            return run_qcheck(qcheck_identity, qcheck_order, qcheck_out);
        }
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const pole_proximity_error& e) {
        std::cerr << "pole-proximity: " << e.what() << "\n";
        return 1;
    } catch (const truncation_overflow_error& e) {
        std::cerr << "truncation-overflow: " << e.what() << "\n";
        return 1;
    } catch (const evaluation_error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
