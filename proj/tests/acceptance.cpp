// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: every criterion is pinned here at its stated
// tolerance and prints one PASS/FAIL line. Run a single criterion with
// --criterion N (used by ctest) or everything with --all.
//
// Criterion 5 includes the C(2.16e20, 2y) = 1.39942 +- 1e-4 comparison.
// That target is not attainable from the published C formula (which
// reproduces every other golden anchor; see the README note): the honest
// value is 1.40017..., and the subcheck reports FAIL rather than loosening
// the tolerance.

#include <cinttypes>
#include <cstdarg>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "minarc/certify.hpp"
#include "minarc/engine.hpp"
#include "minarc/mucancel.hpp"
#include "minarc/oracle.hpp"
#include "minarc/parallel.hpp"
#include "minarc/sieve.hpp"
#include "minarc/smoothing.hpp"

using namespace minarc;

namespace {

int g_failures = 0;

void sub(bool ok, const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    std::printf("    [%s] ", ok ? "pass" : "FAIL");
    std::vprintf(fmt, ap);
    std::printf("\n");
    va_end(ap);
    if (!ok) ++g_failures;
}

void criterion_line(int n, bool ok, const char* what) {
    std::printf("criterion %d [%s] %s\n", n, ok ? "PASS" : "FAIL", what);
    std::fflush(stdout);
}

bool fast_mode() { return std::getenv("MINARC_ACCEPT_FAST") != nullptr; }

// 1. Fourier-norm certificate: <= 31.521, sampled >= 31.52.
bool criterion1() {
    int before = g_failures;
    FourierCertOptions opt;
    opt.threads = default_threads();
    if (fast_mode()) opt.grid_step = 5e-3;
    MaxCertificate cert = certify_eta2pp_fourier_norm(opt);
    sub(cert.certified_upper.hi() <= 31.521, "certified_upper = %.6f <= 31.521",
        cert.certified_upper.hi());
    sub(cert.sampled_max.lo() >= 31.52, "sampled_max >= %.6f >= 31.52 (reference finds 31.52065)",
        cert.sampled_max.lo());
    sub(std::fabs(cert.sampled_max.lo() - 31.52065) < 1e-3,
        "sampled max near the reference 31.52065 (witness t = %.3f)", cert.witness_point);
    write_certificate("eta2pp-fourier.cert", cert);
    sub(check_certificate(read_certificate("eta2pp-fourier.cert")),
        "serialized certificate re-checks");
    return g_failures == before;
}

// 2. Trig-polynomial maximum.
bool criterion2() {
    int before = g_failures;
    Interval d2 = 9.0 * square(pi_interval());
    MaxCertificate cert = grid_max([](double t) { return appendix_g(Interval(t)); },
                                   4.0 * 3.14159265358979, d2, 2.5e-4);
    sub(cert.certified_upper.hi() <= 7.87052, "certified max |g| = %.7f <= 7.87052",
        cert.certified_upper.hi());
    sub(cert.sampled_max.lo() >= 7.8704, "witness lower bound %.7f >= 7.8704",
        cert.sampled_max.lo());
    return g_failures == before;
}

// 3. Mertens threshold at n = 7727068587.
bool criterion3() {
    int before = g_failures;
    MertensScanOptions opt;
    opt.sieve.threads = default_threads();
    std::uint64_t limit = 8'000'000'000ull;
    std::uint64_t cap10 = 10'000'000'000ull;
    if (fast_mode()) {
        std::printf("    (MINARC_ACCEPT_FAST: scan truncated to 2e7; threshold not reachable)\n");
        limit = 20'000'000;
        cap10 = 30'000'000;
    }
    ScanReport rep = mertens_scan(limit, MertensEnvelope::half_inv_sqrt, opt);
    if (!fast_mode()) {
        sub(rep.first_violation.has_value() && *rep.first_violation == 7727068587ull,
            "first violation of 1/(2 sqrt x) at n = %" PRIu64 " (expected 7727068587)",
            rep.first_violation.value_or(0));
    } else {
        sub(!rep.first_violation.has_value(), "no violation below the truncated limit");
    }
    sub(rep.final_state.certified_error < 1e-12,
        "certified accumulation error %.3e < 1e-12 at the boundary",
        rep.final_state.certified_error);
    ScanReport rep2 = mertens_scan(cap10, MertensEnvelope::sqrt_two_over_x, opt);
    sub(!rep2.first_violation.has_value(), "sqrt(2/x) envelope holds to %.1e", double(cap10));
    sub(rep2.max_ratio.hi() <= 1.0, "max |m(n)| sqrt((n+1)/2) = %.6f <= 1", rep2.max_ratio.hi());
    return g_failures == before;
}

// 4. mu-cancellation constants.
bool criterion4() {
    int before = g_failures;
    std::uint32_t x_max = fast_mode() ? 100000 : 1000000;
    CancellationTable t2 = build_g_table(2, x_max);
    GBoundReport b2 = g_bound_check(t2, 33, x_max, 2.1);
    sub(b2.ok, "|g_2(x)| <= 2.1/x on [33, %u]", x_max);
    if (!fast_mode()) {
        double mid = 0.5 * (b2.max_x_abs_g.lo() + b2.max_x_abs_g.hi());
        sub(std::fabs(mid - 2.0895071) <= 1e-5 + b2.max_x_abs_g.width(),
            "max x |g_2(x)| = %.7f (reference: 2.0895071, +-1e-5) at x = %u", mid, b2.argmax);
    }
    CancellationTable t1 = build_g_table(1, x_max);
    GBoundReport b1 = g_bound_check(t1, 33, x_max, 1.0);
    sub(b1.ok, "|g_1(x)| <= 1/x on [33, %u]", x_max);

    std::uint32_t s_max = fast_mode() ? 10000 : 100000;
    GCurve curve = build_g_curve(t2, s_max);
    bool corto = true;
    double worst = -1;
    std::uint32_t worst_s = 0;
    for (std::uint32_t s = 16; s <= s_max; ++s) {
        Interval g = G_value(curve, double(s));
        if (g.hi() > worst) { worst = g.hi(); worst_s = s; }
        if (!(g.hi() <= 0.37273)) corto = false;
    }
    sub(corto, "triple_sum(v=2, S) <= 0.37273 for integer S in [16, %u] (max %.5f at S=%u)",
        s_max, worst, worst_s);
    IntegralCheck ic = g_integral_check(curve, 40.0, 10, 0.37273);
    sub(ic.ok, "int_1^T G_2 dS/S <= 0.37273 log T on the N=10 grid (worst ratio %.5f at T=%.1f)",
        ic.worst_ratio.hi(), ic.worst_T);
    return g_failures == before;
}

// 5. Engine golden constants.
bool criterion5() {
    int before = g_failures;
    Interval r = engine_R(Interval(1e25), Interval(5e5));
    sub(std::fabs(r.mid() - 0.59648) <= 1e-5 && r.width() < 1e-9,
        "R(1e25, 5e5) = %.7f (reference: 0.59648 +- 1e-5)", r.mid());
    Interval c_x0 = engine_C(Interval(2.16e20), Interval(2e6));
    bool c_x0_ok = std::fabs(c_x0.mid() - 1.39942) <= 1e-4;
    sub(c_x0_ok,
        "C(2.16e20, 2y) = %.7f vs reference 1.39942 +- 1e-4 "
        "(stale in the source: its own formula gives 1.4001747; every other "
        "golden anchor matches, see README)",
        c_x0.mid());
    Interval c2 = engine_C(Interval(3.1e28), Interval(2e6));
    sub(std::fabs(c2.mid() - 0.64020) <= 1e-4, "C(3.1e28, 2e6) = %.7f (reference: 0.64020 +- 1e-4)",
        c2.mid());
    Interval rho = optimal_rho();
    sub(std::fabs(rho.mid() - 3.61407) <= 1e-5, "optimal rho = %.7f (reference: 3.61407 +- 1e-5)",
        rho.mid());
    bool audit_ok = true;
    for (const auto& line : audit_constants())
        if (!line.ok) {
            audit_ok = false;
            std::printf("      audit failure: %s\n", line.detail.c_str());
        }
    sub(audit_ok, "startup constant audit passes every strict inequality (%zu checks)",
        audit_constants().size());
    return g_failures == before;
}

// 6. Table 1 reproduction within +-2%.
bool criterion6() {
    int before = g_failures;
    const double reference[7][2] = {{1e5, 0.04522}, {1.5e5, 0.03821}, {2.5e5, 0.03097},
                                {5e5, 0.02336}, {7.5e5, 0.01984}, {1e6, 0.01767},
                                {1e7, 0.00716}};
    for (auto& row : reference) {
        Interval got = worst_case_ratio(1e27, row[0], 8.0);
        double rel = got.hi() / row[1] - 1.0;
        sub(std::fabs(rel) <= 0.02, "q0 = %8.0f: bound/x = %.5f vs reference %.5f (%+.2f%%)", row[0],
            got.hi(), row[1], 100 * rel);
    }
    return g_failures == before;
}

// 7. Exact-identity suite: 100 random Vaughan decompositions.
bool criterion7() {
    int before = g_failures;
    int count = fast_mode() ? 10 : 100;
    SuiteSummary s = run_vaughan_suite(count, 20260808, 1e5);
    sub(s.violations == 0 && s.holds == s.total,
        "%" PRIu64 "/%" PRIu64 " residual intervals contain 0 with width < 1e-8 x", s.holds,
        s.total);
    return g_failures == before;
}

// 8. Inequality suites.
bool criterion8() {
    int before = g_failures;
    int trig = fast_mode() ? 300 : 10000;
    int sieve = fast_mode() ? 50 : 1000;
    int typeI = fast_mode() ? 30 : 200;
    std::uint64_t seed = 20260808;
    std::uint64_t violations = 0, inconclusive = 0, effective = 0;
    auto account = [&](const SuiteSummary& s) {
        violations += s.violations;
        inconclusive += s.inconclusive;
        effective += s.total - s.skipped;
        sub(s.violations == 0, "%s: %" PRIu64 " checks, %" PRIu64 " holds, %" PRIu64
                               " inconclusive, %" PRIu64 " skipped, 0 violations",
            s.name.c_str(), s.total, s.holds, s.inconclusive, s.skipped);
    };
    account(run_trig_suite(TrigVariant::sum_over_full_period, trig, seed + 1));
    account(run_trig_suite(TrigVariant::q_excluded, trig, seed + 2));
    account(run_trig_suite(TrigVariant::b_over_sin, trig, seed + 3));
    SieveVariant variants[] = {SieveVariant::pokor1,          SieveVariant::pokor2,
                               SieveVariant::zerom,           SieveVariant::pokor1_odd,
                               SieveVariant::pokor2_odd,      SieveVariant::zerom_odd,
                               SieveVariant::kraken_garn1b,   SieveVariant::kraken_garn1a,
                               SieveVariant::kraken_gargamel, SieveVariant::kraken_procida2,
                               SieveVariant::kraken_procida3};
    int k = 10;
    for (auto v : variants) account(run_large_sieve_suite(v, sieve, seed + k++));
    account(run_type_I_suite(typeI, seed + 99));
    double rate = effective ? double(inconclusive) / double(effective) : 0.0;
    sub(rate < 0.01, "overall inconclusive rate %.4f%% < 1%%", 100 * rate);
    sub(violations == 0, "zero VIOLATION verdicts overall");
    return g_failures == before;
}

// 9. Second-choice total at x0.
bool criterion9() {
    int before = g_failures;
    SecondChoiceReport rep = second_choice_totals(2.16e20);
    sub(rep.sI1_dominated && rep.sII_dominated && rep.sI2.hi() <= rep.printed_sI2.hi() * 1.01,
        "S_I1 and S_II below their printed forms; S_I2 within 1%% "
        "(its printed 1213.15 halves an x/(2y) log(Vy) step; see notes)");
    sub(rep.total_dominated && rep.printed_sum_dominated,
        "assembled total <= 0.27266 x^{5/6}(log x)^{3/2} + 1217.35 x^{2/3} log x at x0");
    sub(rep.rounded_dominates, "theorem's rounded 0.2727/1218 dominates 0.27266/1217.35 "
                               "term-by-term");
    return g_failures == before;
}

}  // namespace

int main(int argc, char** argv) {
    int which = 0;
    bool all = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) which = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--all")) all = true;
    }
    if (!which && !all) {
        std::printf("usage: acceptance --criterion N | --all\n");
        return 2;
    }
    struct Row {
        int n;
        bool (*fn)();
        const char* what;
    } rows[] = {
        {1, criterion1, "Fourier-norm certificate (<= 31.521, sampled >= 31.52)"},
        {2, criterion2, "trig-polynomial maximum (<= 7.87052, witness >= 7.8704)"},
        {3, criterion3, "Mertens threshold at n = 7727068587 and sqrt(2/x) envelope"},
        {4, criterion4, "mu-cancellation constants (2.0895071, 0.37273 family)"},
        {5, criterion5, "engine golden constants and startup audit"},
        {6, criterion6, "worst-case table reproduction within +-2%"},
        {7, criterion7, "100 exact Vaughan decompositions"},
        {8, criterion8, "lemma inequality suites, zero violations"},
        {9, criterion9, "second-choice totals dominated by printed coefficients"},
    };
    int bad = 0;
    for (auto& row : rows) {
        if (!all && row.n != which) continue;
        std::printf("criterion %d: %s\n", row.n, row.what);
        bool ok = row.fn();
        criterion_line(row.n, ok, row.what);
        if (!ok) ++bad;
    }
    return bad;
}
