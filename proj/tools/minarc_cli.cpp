// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Every numeric in JSON output carries its
// interval endpoints (or an "exact" marker); verification failures exit 1,
// usage errors exit 2, precision failures exit 3.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minarc/certify.hpp"
#include "minarc/engine.hpp"
#include "minarc/interval.hpp"
#include "minarc/mucancel.hpp"
#include "minarc/oracle.hpp"
#include "minarc/parallel.hpp"
#include "minarc/sieve.hpp"
#include "minarc/smoothing.hpp"

using nlohmann::json;
using namespace minarc;

namespace {

constexpr const char* kSchemaVersion = "minarc-output v1";

json iv(const Interval& v) {
    json j;
    j["lo"] = v.lo();
    j["hi"] = v.hi();
    j["width"] = v.width();
    if (v.is_point()) j["exact"] = true;
    return j;
}

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";  // human mode mirrors the JSON for now
    }
}

std::string cache_dir() {
    const char* env = std::getenv("MINARC_CACHE_DIR");
    return env ? env : ".minarc-cache";
}

int cmd_bound(double x, double q, double delta, double delta_cap, bool worst_case,
              bool proof_constants, bool as_json) {
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "bound";
    if (worst_case) {
        Interval ratio = worst_case_ratio(x, q, delta_cap);
        out["mode"] = "worst-case (primorial convention, first-choice assembly)";
        out["q0"] = q;
        out["delta_cap"] = delta_cap;
        out["bound_over_x"] = iv(ratio);
        out["convention_notes"] =
            "q = q0 with q/phi(q) of the largest primorial <= q0, plus the smallest "
            "primorial >= q0 with its exact ratio; worse delta regime taken; "
            "proof-assembly form (S_I1 + S_I2 + S_II before the final coarsening)";
        emit(out, as_json);
        return 0;
    }
    ArcApprox arc = ArcApprox::make(x, 1, std::uint64_t(q), delta);
    BoundReport rep = main_theorem_bound(arc, proof_constants);
    out["branch"] = rep.branch == BoundReport::Branch::small_q ? "small_q" : "large_q";
    out["total"] = iv(rep.total);
    out["total_over_x"] = iv(rep.total / x);
    json comps;
    for (auto& [name, v] : rep.components) comps[name] = iv(v);
    out["components"] = comps;
    out["parameters"] = {{"x", x}, {"q", q}, {"delta", delta}, {"delta0", arc.delta0}};
    emit(out, as_json);
    return 0;
}

int cmd_table(double x, double delta_cap, bool as_json) {
    std::vector<double> q0s = {1e5, 1.5e5, 2.5e5, 5e5, 7.5e5, 1e6, 1e7};
    auto rows = table1(x, q0s, delta_cap);
    if (as_json) {
        json out;
        out["schema"] = kSchemaVersion;
        out["command"] = "table";
        json jr = json::array();
        for (auto& r : rows)
            jr.push_back({{"q0", r.q0},
                          {"assembly_ratio", iv(r.assembly_ratio)},
                          {"theorem_ratio", iv(r.theorem_ratio)}});
        out["rows"] = jr;
        out["convention_notes"] =
            "assembly_ratio follows the documented primorial worst-case convention; "
            "theorem_ratio evaluates the stated theorem at q = q0";
        emit(out, true);
    } else {
        std::printf("# q0\tassembly_bound/x\ttheorem_bound/x\n");
        for (auto& r : rows)
            std::printf("%g\t%.5f\t%.5f\n", r.q0, r.assembly_ratio.hi(), r.theorem_ratio.hi());
    }
    return 0;
}

int cmd_verify_mertens(double limit, const std::string& envelope, bool extended,
                       const std::string& ckpt_dir, bool resume, int threads, bool as_json) {
    MertensEnvelope env;
    if (envelope == "half-inv-sqrt") env = MertensEnvelope::half_inv_sqrt;
    else if (envelope == "sqrt-two-over-x") env = MertensEnvelope::sqrt_two_over_x;
    else {
        std::cerr << "unknown envelope: " << envelope << "\n";
        return 2;
    }
    MertensScanOptions opt;
    opt.sieve.threads = threads;
    if (extended) opt.sieve.global_cap = 2'000'000'000'000ull;
    opt.checkpoint_dir = ckpt_dir;
    opt.resume = resume;
    ScanReport rep = mertens_scan(std::uint64_t(limit), env, opt);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "verify-mertens";
    out["limit"] = rep.limit;
    out["envelope"] = envelope;
    if (rep.first_violation) out["first_violation"] = *rep.first_violation;
    else out["first_violation"] = nullptr;
    out["max_ratio"] = iv(rep.max_ratio);
    out["final_sum"] = {{"hi", rep.final_state.sum.hi},
                        {"lo", rep.final_state.sum.lo},
                        {"certified_error", rep.final_state.certified_error}};
    if (!ckpt_dir.empty()) out["checkpoint_dir"] = ckpt_dir;
    emit(out, as_json);
    bool expected_violation = env == MertensEnvelope::half_inv_sqrt && limit >= 7.8e9;
    if (env == MertensEnvelope::sqrt_two_over_x && rep.first_violation) return 1;
    if (expected_violation && !rep.first_violation) return 1;
    return 0;
}

int cmd_verify_chebyshev(std::vector<double> ys, bool as_json) {
    std::vector<std::uint64_t> samples;
    for (double y : ys) samples.push_back(std::uint64_t(y));
    if (samples.empty()) samples = {10, 117, 663, 10000, 100000, 1000000, 2000000};
    auto rows = chebyshev_checks(samples);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "verify-chebyshev";
    json jr = json::array();
    bool all = true;
    for (auto& r : rows) {
        all = all && r.all_ok;
        jr.push_back({{"y", r.y},
                      {"lambda_over_n", iv(r.lambda_over_n)},
                      {"psi", iv(r.psi)},
                      {"lambda_times_n", iv(r.lambda_times_n)},
                      {"logp_sq_half_range", iv(r.logp_sq_upper)},
                      {"ok", r.all_ok}});
    }
    out["rows"] = jr;
    out["all_ok"] = all;
    emit(out, as_json);
    return all ? 0 : 1;
}

int cmd_verify_gv(int v, std::uint32_t x_max, bool rebuild, bool as_json) {
    std::string path = cache_dir() + "/gtable-v" + std::to_string(v) + "-" +
                       std::to_string(x_max) + ".bin";
    std::optional<CancellationTable> table;
    if (!rebuild) table = load_g_table(v, x_max, path);
    if (!table) {
        table = build_g_table(v, x_max);
        std::filesystem::create_directories(cache_dir());
        save_g_table(*table, path);
    }
    double c = v == 1 ? 1.0 : 2.1;
    GBoundReport rep = g_bound_check(*table, 33, x_max, c);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "verify-gv";
    out["v"] = v;
    out["x_max"] = x_max;
    out["bound_c"] = c;
    out["bound_holds"] = rep.ok;
    out["max_x_abs_g"] = iv(rep.max_x_abs_g);
    out["argmax"] = rep.argmax;
    out["reference_value"] = 2.0895071;
    emit(out, as_json);
    return rep.ok ? 0 : 1;
}

int cmd_verify_corto(int v, std::uint32_t s_max, bool as_json) {
    auto table = build_g_table(v, std::max(s_max, 100000u));
    auto curve = build_g_curve(table, s_max);
    double target = v == 1 ? 0.36393 : 0.37273;
    bool ok = true;
    double worst = -1;
    std::uint32_t worst_s = 0;
    std::uint32_t s_from = v == 1 ? 40 : 16;
    for (std::uint32_t s = s_from; s <= s_max; ++s) {
        Interval g = G_value(curve, double(s));
        if (g.hi() > worst) { worst = g.hi(); worst_s = s; }
        if (!(g.hi() <= target)) ok = false;
    }
    int N = v == 1 ? 100000 : 10;
    IntegralCheck ic = g_integral_check(curve, 40.0, N, target);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "verify-corto";
    out["v"] = v;
    out["s_range"] = {s_from, s_max};
    out["triple_sum_bound"] = target;
    out["pointwise_ok"] = ok;
    out["max_G"] = worst;
    out["argmax_S"] = worst_s;
    out["integral_ok"] = ic.ok;
    out["integral_worst_T"] = ic.worst_T;
    out["integral_worst_ratio"] = iv(ic.worst_ratio);
    emit(out, as_json);
    return ok && ic.ok ? 0 : 1;
}

int cmd_certify_fourier(const std::string& out_path, int threads, double grid_step,
                        double log_scaled_y, bool as_json) {
    if (log_scaled_y > 0) {
        LogScaledCertOptions lopt;
        lopt.threads = threads;
        LogScaledCertResult r = certify_log_scaled_norm(log_scaled_y, lopt);
        if (!out_path.empty()) write_certificate(out_path, r.cert);
        json out;
        out["schema"] = kSchemaVersion;
        out["command"] = "certify-fourier";
        out["log_scaled_y"] = log_scaled_y;
        out["certified_upper"] = iv(r.cert.certified_upper);
        out["max_arg_gap"] = iv(r.max_arg_gap);
        out["arg_bound_final"] = iv(r.arg_bound_final);
        out["excluded_region_max"] = iv(r.excluded_region_max);
        out["phase_g_over_k"] = iv(r.phase_g_over_k);
        bool ok = r.arg_bound_final.hi() < 1.0471975 && r.excluded_region_max.hi() < 29.1 &&
                  r.phase_g_over_k.hi() < 1.0471975;
        out["ok"] = ok;
        emit(out, as_json);
        return ok ? 0 : 3;
    }
    FourierCertOptions opt;
    opt.threads = threads;
    if (grid_step > 0) opt.grid_step = grid_step;
    MaxCertificate cert = certify_eta2pp_fourier_norm(opt);
    if (!out_path.empty()) write_certificate(out_path, cert);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "certify-fourier";
    out["certified_upper"] = iv(cert.certified_upper);
    out["sampled_max"] = iv(cert.sampled_max);
    out["witness_point"] = cert.witness_point;
    out["grid_step"] = cert.grid_step;
    out["quadrature_error"] = iv(cert.quadrature_error);
    out["reference_bound"] = 31.521;
    out["reference_found"] = 31.52065;
    if (!out_path.empty()) out["certificate_file"] = out_path;
    bool ok = cert.certified_upper.hi() <= 31.521 && cert.sampled_max.lo() >= 31.52;
    out["ok"] = ok;
    emit(out, as_json);
    return ok ? 0 : 3;
}

int cmd_verify_lemmas(int trig_count, int sieve_count, int typeI_count, double typeI_eps,
                      std::uint64_t seed, const std::string& report_path, bool as_json) {
    std::vector<SuiteSummary> suites;
    suites.push_back(run_trig_suite(TrigVariant::sum_over_full_period, trig_count, seed + 1));
    suites.push_back(run_trig_suite(TrigVariant::q_excluded, trig_count, seed + 2));
    suites.push_back(run_trig_suite(TrigVariant::b_over_sin, trig_count, seed + 3));
    SieveVariant variants[] = {SieveVariant::pokor1,          SieveVariant::pokor2,
                               SieveVariant::zerom,           SieveVariant::pokor1_odd,
                               SieveVariant::pokor2_odd,      SieveVariant::zerom_odd,
                               SieveVariant::kraken_garn1b,   SieveVariant::kraken_garn1a,
                               SieveVariant::kraken_gargamel, SieveVariant::kraken_procida2,
                               SieveVariant::kraken_procida3};
    int k = 10;
    for (auto v : variants) suites.push_back(run_large_sieve_suite(v, sieve_count, seed + k++));
    suites.push_back(run_type_I_suite(typeI_count, seed + 99, typeI_eps));
    std::ofstream report;
    if (!report_path.empty()) report.open(report_path);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "verify-lemmas";
    out["seed"] = seed;
    json js = json::array();
    std::uint64_t violations = 0;
    for (auto& s : suites) {
        js.push_back({{"suite", s.name},
                      {"total", s.total},
                      {"holds", s.holds},
                      {"inconclusive", s.inconclusive},
                      {"violations", s.violations},
                      {"skipped", s.skipped},
                      {"inconclusive_rate", s.inconclusive_rate()}});
        violations += s.violations;
        if (report.is_open())
            for (auto& r : s.results) report << check_result_jsonl(r) << "\n";
    }
    out["suites"] = js;
    out["violations"] = violations;
    emit(out, as_json);
    return violations == 0 ? 0 : 1;
}

int cmd_vaughan(double alpha, double x, double U, double V, bool as_json) {
    VaughanResult v = vaughan_decompose(alpha, std::uint64_t(x), U, V);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "vaughan";
    auto cx = [&](const ComplexInterval& z) {
        return json{{"re", iv(z.re)}, {"im", iv(z.im)}};
    };
    out["S_total"] = cx(v.S_total);
    out["S_I1"] = cx(v.S_I1);
    out["S_I2"] = cx(v.S_I2);
    out["S_II"] = cx(v.S_II);
    out["S_0inf"] = cx(v.S_0inf);
    out["S_0v"] = cx(v.S_0v);
    out["residual"] = cx(v.residual);
    out["residual_contains_zero"] = v.residual_contains_zero;
    out["residual_width"] = v.residual_width;
    emit(out, as_json);
    return v.residual_contains_zero ? 0 : 1;
}

int cmd_params(double x, double q, double delta, const std::string& choice, bool as_json) {
    Parameters p = select_parameters(x, q, delta,
                                     choice == "second" ? ParameterChoice::second
                                                        : ParameterChoice::first);
    json out;
    out["schema"] = kSchemaVersion;
    out["command"] = "params";
    out["choice"] = choice;
    out["U"] = iv(p.U);
    out["V"] = iv(p.V);
    out["Q"] = iv(p.Q);
    out["y"] = iv(p.y);
    out["theta"] = iv(p.theta);
    out["side_conditions_ok"] = p.side_conditions_ok;
    out["violations"] = p.violations;
    emit(out, as_json);
    return p.side_conditions_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verified minor-arc bound computations"};
    app.require_subcommand(1);
    bool as_json = false;
    int threads = default_threads();
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--threads", threads, "worker threads");

    auto* bound = app.add_subcommand("bound", "evaluate the main bound at (x, q, delta)");
    double b_x = 1e27, b_q = 1e6, b_delta = 0, b_cap = 8;
    bool b_worst = false, b_proof = false;
    bound->add_option("--x", b_x, "x")->required();
    bound->add_option("--q", b_q, "q (or q0 with --worst-case)")->required();
    bound->add_option("--delta", b_delta, "delta");
    bound->add_option("--delta-cap", b_cap, "worst-case |delta| cap");
    bound->add_flag("--worst-case", b_worst, "worst case over q >= q0, |delta| <= cap");
    bound->add_flag("--proof-constants", b_proof, "use the sharper proof pair (0.49911, 2.491)");

    auto* table = app.add_subcommand("table", "reproduce the worst-case bound table");
    double t_x = 1e27, t_cap = 8;
    table->add_option("--x", t_x, "x");
    table->add_option("--delta-cap", t_cap, "delta cap");

    auto* vm = app.add_subcommand("verify-mertens", "scan |sum mu(n)/n| against an envelope");
    double m_limit = 1e10;
    std::string m_env = "sqrt-two-over-x", m_ckpt;
    bool m_ext = false, m_resume = false;
    vm->add_option("--limit", m_limit, "scan limit");
    vm->add_option("--envelope", m_env, "half-inv-sqrt | sqrt-two-over-x");
    vm->add_flag("--extended", m_ext, "allow limits beyond the desk-scale cap");
    vm->add_option("--checkpoint-dir", m_ckpt, "checkpoint directory");
    vm->add_flag("--resume", m_resume, "resume from the newest checkpoint");

    auto* vc = app.add_subcommand("verify-chebyshev", "verify Lambda-sum bounds at samples");
    std::vector<double> c_ys;
    vc->add_option("--y", c_ys, "sample points");

    auto* vg = app.add_subcommand("verify-gv", "verify g_v bounds on [33, x-max]");
    int g_v = 2;
    double g_xmax = 1e6;
    bool g_rebuild = false;
    vg->add_option("--v", g_v, "v = 1 or 2");
    vg->add_option("--x-max", g_xmax, "table size");
    vg->add_flag("--rebuild-cache", g_rebuild, "ignore the cached table");

    auto* vco = app.add_subcommand("verify-corto", "verify the triple-sum bound");
    int co_v = 2;
    double co_smax = 1e5;
    vco->add_option("--v", co_v, "v = 1 or 2");
    vco->add_option("--s-max", co_smax, "S range limit");

    auto* cf = app.add_subcommand("certify-fourier", "certify |(eta2'')^|_inf <= 31.521");
    std::string f_out = "eta2pp-fourier.cert";
    double f_step = 0, f_logy = 0;
    cf->add_option("--out", f_out, "certificate file");
    cf->add_option("--grid-step", f_step, "override the 1e-3 grid");
    cf->add_option("--log-scaled", f_logy, "certify the log-scaled norm at this y (>= 4)");

    auto* vl = app.add_subcommand("verify-lemmas", "run the brute-force lemma suites");
    int l_trig = 10000, l_sieve = 1000, l_typeI = 200;
    double l_eps = 0.07;
    std::uint64_t l_seed = 20260808;
    std::string l_report;
    vl->add_option("--trig-count", l_trig, "instances per trig variant");
    vl->add_option("--sieve-count", l_sieve, "instances per large-sieve variant");
    vl->add_option("--typeI-count", l_typeI, "type I instances");
    vl->add_option("--typeI-eps", l_eps, "epsilon for the large-delta type I branch");
    vl->add_option("--seed", l_seed, "suite seed");
    vl->add_option("--report", l_report, "JSON-lines per-instance report path");

    auto* va = app.add_subcommand("vaughan", "exact Vaughan decomposition at desk scale");
    double a_alpha = 0.3, a_x = 1e4, a_U = 30, a_V = 30;
    va->add_option("--alpha", a_alpha, "alpha");
    va->add_option("--x", a_x, "x (<= 1e6)");
    va->add_option("--U", a_U, "U");
    va->add_option("--V", a_V, "V");

    auto* pp = app.add_subcommand("params", "the published parameter choices and side conditions");
    double p_x = 1e25, p_q = 1e5, p_delta = 0;
    std::string p_choice = "first";
    pp->add_option("--x", p_x, "x");
    pp->add_option("--q", p_q, "q");
    pp->add_option("--delta", p_delta, "delta");
    pp->add_option("--choice", p_choice, "first | second");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed())
            return cmd_bound(b_x, b_q, b_delta, b_cap, b_worst, b_proof, as_json);
        if (table->parsed()) return cmd_table(t_x, t_cap, as_json);
        if (vm->parsed())
            return cmd_verify_mertens(m_limit, m_env, m_ext, m_ckpt, m_resume, threads, as_json);
        if (vc->parsed()) return cmd_verify_chebyshev(c_ys, as_json);
        if (vg->parsed()) return cmd_verify_gv(g_v, std::uint32_t(g_xmax), g_rebuild, as_json);
        if (vco->parsed()) return cmd_verify_corto(co_v, std::uint32_t(co_smax), as_json);
        if (cf->parsed()) return cmd_certify_fourier(f_out, threads, f_step, f_logy, as_json);
        if (vl->parsed())
            return cmd_verify_lemmas(l_trig, l_sieve, l_typeI, l_eps, l_seed, l_report, as_json);
        if (va->parsed()) return cmd_vaughan(a_alpha, a_x, a_U, a_V, as_json);
        if (pp->parsed()) return cmd_params(p_x, p_q, p_delta, p_choice, as_json);
    } catch (const precision_error& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
