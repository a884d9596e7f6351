// SPDX-License-Identifier: Apache-2.0

#include "minarc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "minarc/ball.hpp"
#include "minarc/dd.hpp"
#include "minarc/sieve.hpp"
#include "minarc/smoothing.hpp"

namespace minarc {

Verdict compare_sound(const Interval& lhs, const Interval& rhs) {
    if (lhs.lo() > rhs.hi()) return Verdict::violation;
    if (lhs.hi() <= rhs.lo()) return Verdict::holds;
    return Verdict::inconclusive;
}

namespace {

// e(t) for t given as an exact rational r/den plus a small double-double
// correction; the rational part reduces exactly.
ComplexInterval e_of_rational(std::int64_t r, std::int64_t den, const DD& frac, double frac_err) {
    // t = r/den + frac, r already reduced mod den
    Interval t = Interval(double(r)) / double(den);
    Interval f(detail::add_down(frac.hi, frac.lo - frac_err),
               detail::add_up(frac.hi, frac.lo + frac_err));
    return unit_phase(t + f);
}

// e(alpha n) for double alpha and integer n (n < 2^52).
ComplexInterval e_of(double alpha, double n) {
    DD t = DD::from_prod(alpha, n);
    double k = std::nearbyint(t.hi);
    t = t + (-k);
    Interval arg(detail::add_down(t.hi, t.lo - std::fabs(t.hi) * 0x1.0p-100),
                 detail::add_up(t.hi, t.lo + std::fabs(t.hi) * 0x1.0p-100));
    return unit_phase(arg);
}

// min(A, C / sin^2), sound when the sine enclosure touches zero.
Interval min_A_C_over_sin2(const Interval& A, const Interval& C, const Interval& sin_val) {
    Interval s2 = square(sin_val);
    if (s2.lo() <= 0.0) {
        double lo = A.lo();
        if (s2.hi() > 0.0)
            lo = std::min(lo, (C / Interval(s2.hi())).lo());
        return Interval(std::min(lo, A.lo()), A.hi());
    }
    return min(A, C / s2);
}

// |sin(pi alpha n)| as an interval, alpha = a/q + beta/(q Q).
Interval sin_pi_alpha_n(std::int64_t a, std::uint64_t q, double beta, double Q, std::uint64_t n) {
    std::int64_t r = std::int64_t((__int128(a % std::int64_t(q)) * __int128(n % q)) % std::int64_t(q));
    if (r < 0) r += std::int64_t(q);
    Interval frac = Interval(beta) * double(n) / (double(q) * Q);
    Interval arg = Interval(double(r)) / double(q) + frac;
    return abs(sinpi(arg));
}

}  // namespace

CheckResult trig_lemma_check(const TrigInstance& inst, TrigVariant which) {
    CheckResult out;
    out.lemma = which == TrigVariant::sum_over_full_period ? "trig_full_period"
                : which == TrigVariant::q_excluded         ? "trig_q_excluded"
                                                           : "trig_b_over_sin";
    if (std::gcd(std::uint64_t(std::llabs(inst.a)), inst.q) != 1) {
        out.note = "gcd(a,q) != 1";
        return out;
    }
    if (std::fabs(inst.beta) > 1.0 || inst.Q < double(inst.q)) {
        out.note = "hypothesis |beta|<=1, q<=Q violated";
        return out;
    }
    double y1 = inst.y1, y2 = inst.y2;
    if (which != TrigVariant::sum_over_full_period) {
        if (!(y2 > y1 && y2 - y1 <= double(inst.q) && y2 <= inst.Q / 2.0)) {
            out.note = "range hypotheses violated";
            return out;
        }
    } else {
        y2 = y1 + double(inst.q);
    }
    Interval A(inst.A), C(inst.C), B(inst.B);
    Interval lhs(0.0);
    std::uint64_t n0 = std::uint64_t(std::floor(y1)) + 1;
    std::uint64_t n1 = std::uint64_t(std::floor(y2));
    for (std::uint64_t n = n0; n <= n1; ++n) {
        if (which != TrigVariant::sum_over_full_period && n % inst.q == 0) continue;
        Interval s = sin_pi_alpha_n(inst.a, inst.q, inst.beta, inst.Q, n);
        if (which == TrigVariant::b_over_sin) {
            // min(B/|sin|, C/sin^2)
            Interval s2 = square(s);
            if (s.lo() <= 0.0) {
                double lo = 0.0;
                if (s.hi() > 0.0)
                    lo = std::min((B / Interval(s.hi())).lo(), (C / Interval(s2.hi())).lo());
                // both branches blow up as sin -> 0 (cannot happen under the
                // q-excluded hypotheses; kept for a sound degenerate path)
                lhs += Interval(std::max(lo, 0.0), 1e300);
                lhs = Interval(lhs.lo(), std::min(lhs.hi(), 1e300));
            } else {
                lhs += min(B / s, C / s2);
            }
        } else {
            lhs += min_A_C_over_sin2(A, C, s);
        }
    }
    Interval rhs;
    switch (which) {
        case TrigVariant::sum_over_full_period:
            rhs = trig_full_period_rhs(A, C, inst.q);
            break;
        case TrigVariant::q_excluded:
            rhs = trig_q_excluded_rhs(A, C, inst.q);
            break;
        case TrigVariant::b_over_sin:
            rhs = trig_b_over_sin_rhs(B, C, inst.q);
            break;
    }
    out.lhs = lhs;
    out.rhs = rhs;
    out.verdict = compare_sound(lhs, rhs);
    return out;
}

ComplexInterval scaled_eta2_sum(double alpha, std::uint64_t N) {
    ComplexInterval acc(Interval(0.0), Interval(0.0));
    SmoothingFn eta2 = SmoothingFn::eta2();
    for (std::uint64_t n = N / 4; n <= N; ++n) {
        Interval w = eval(eta2, Interval(double(n)) / double(N));
        if (w.hi() == 0.0) continue;
        acc += w * e_of(alpha, double(n));
    }
    return acc;
}

CheckResult quadratic_decay_check(double alpha, std::uint64_t N) {
    CheckResult out;
    out.lemma = "quadratic_decay";
    Interval sin_a = abs(sinpi(Interval(alpha)));
    if (sin_a.lo() < 1e-4) {
        out.note = "alpha too close to an integer";
        return out;
    }
    Interval lhs = scaled_eta2_sum(alpha, N).abs();
    Interval rhs = quadratic_decay_rhs(Interval(31.521) / double(N), sin_a);
    out.lhs = lhs;
    out.rhs = rhs;
    out.verdict = compare_sound(lhs, rhs);
    return out;
}

namespace {

// lhs = sum over the m-range of |sum_p (log p) e(alpha m p)|^2 with
// alpha = num/den + fr; phases advance by the per-prime step e(alpha p).
Interval large_sieve_lhs(std::int64_t a, std::uint64_t den, double fr, double A0, double A1,
                         int stride, std::uint64_t m0, const std::vector<std::uint64_t>& primes) {
    std::vector<double> log_mid(primes.size()), log_rad(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Interval l = Interval::with_ulps(std::log(double(primes[i])), 2);
        log_mid[i] = l.mid();
        log_rad[i] = l.width();
    }
    std::vector<Ball> z(primes.size()), u(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        double p = double(primes[i]);
        DD f0 = DD::from_prod(fr, p * double(m0));
        std::int64_t r0 = std::int64_t((__int128(a % std::int64_t(den)) *
                                        ((__int128(primes[i]) * m0) % den)) %
                                       std::int64_t(den));
        if (r0 < 0) r0 += std::int64_t(den);
        z[i] = Ball::from(
            e_of_rational(r0, std::int64_t(den), f0, std::fabs(f0.hi) * 0x1.0p-100 + 1e-300));
        DD fs = DD::from_prod(fr, p * double(stride));
        std::int64_t rs = std::int64_t((__int128(a % std::int64_t(den)) *
                                        ((__int128(primes[i]) * std::uint64_t(stride)) % den)) %
                                       std::int64_t(den));
        if (rs < 0) rs += std::int64_t(den);
        u[i] = Ball::from(
            e_of_rational(rs, std::int64_t(den), fs, std::fabs(fs.hi) * 0x1.0p-100 + 1e-300));
    }
    Interval total(0.0);
    for (std::uint64_t m = m0; double(m) <= A1; m += std::uint64_t(stride)) {
        if (double(m) > A0) {
            double sre = 0, sim = 0, srad = 0;
            for (std::size_t i = 0; i < primes.size(); ++i) {
                sre += log_mid[i] * z[i].re;
                sim += log_mid[i] * z[i].im;
                srad += log_mid[i] * z[i].rad + log_rad[i] * z[i].mag_upper();
            }
            // accumulated double rounding in the center sums
            double n = double(primes.size());
            srad = (srad + 4e-16 * n * (std::fabs(sre) + std::fabs(sim))) * (1 + 4e-16);
            double mag = std::hypot(sre, sim) * (1 + 4e-16);
            double hi = (mag + srad) * (mag + srad) * (1 + 8e-16);
            double lo = std::max(0.0, mag - srad);
            lo = lo * lo * (1 - 8e-16);
            total += Interval(lo, hi);
        }
        for (std::size_t i = 0; i < primes.size(); ++i) z[i] = z[i] * u[i];
    }
    return total;
}

}  // namespace

CheckResult large_sieve_check(const SieveInstance& inst, SieveVariant which) {
    CheckResult out;
    switch (which) {
        case SieveVariant::pokor1: out.lemma = "ls_pokor1"; break;
        case SieveVariant::pokor2: out.lemma = "ls_pokor2"; break;
        case SieveVariant::zerom: out.lemma = "ls_zerom"; break;
        case SieveVariant::pokor1_odd: out.lemma = "ls_pokor1_odd"; break;
        case SieveVariant::pokor2_odd: out.lemma = "ls_pokor2_odd"; break;
        case SieveVariant::zerom_odd: out.lemma = "ls_zerom_odd"; break;
        case SieveVariant::kraken_garn1b: out.lemma = "ls_garn1b"; break;
        case SieveVariant::kraken_garn1a: out.lemma = "ls_garn1a"; break;
        case SieveVariant::kraken_gargamel: out.lemma = "ls_gargamel"; break;
        case SieveVariant::kraken_procida2: out.lemma = "ls_procida2"; break;
        case SieveVariant::kraken_procida3: out.lemma = "ls_procida3"; break;
    }
    bool odd = inst.odd_m;
    bool kraken = which == SieveVariant::kraken_garn1b || which == SieveVariant::kraken_garn1a ||
                  which == SieveVariant::kraken_gargamel || which == SieveVariant::kraken_procida2 ||
                  which == SieveVariant::kraken_procida3;
    if (std::gcd(std::uint64_t(std::llabs(inst.a)), inst.q) != 1) {
        out.note = "gcd(a,q) != 1";
        return out;
    }
    if (!(inst.Wp >= inst.W / 2.0 && inst.W >= 1.0)) {
        out.note = "W' >= W/2 violated";
        return out;
    }
    // Hypotheses per variant.
    switch (which) {
        case SieveVariant::pokor2:
        case SieveVariant::pokor2_odd:
        case SieveVariant::kraken_garn1a:
            if (!(double(inst.q) < inst.W / 2.0 && inst.Q >= 3.5 * inst.W)) {
                out.note = "needs q < W/2 and Q >= 3.5 W";
                return out;
            }
            break;
        case SieveVariant::zerom:
            if (!(inst.A1 - inst.A0 <= inst.varrho * double(inst.q) &&
                  double(inst.q) <= inst.rho * inst.Q && inst.varrho * inst.rho < 1.0)) {
                out.note = "zerom range hypotheses violated";
                return out;
            }
            break;
        case SieveVariant::zerom_odd:
            if (!(inst.A1 - inst.A0 <= 2.0 * inst.varrho * double(inst.q) &&
                  double(inst.q) <= inst.rho * inst.Q && inst.varrho * inst.rho < 1.0)) {
                out.note = "zerom range hypotheses violated";
                return out;
            }
            break;
        case SieveVariant::kraken_gargamel:
            if (!(inst.W > inst.x / (4.0 * double(inst.q)))) {
                out.note = "needs W > x/4q";
                return out;
            }
            break;
        case SieveVariant::kraken_procida2:
            if (!(inst.delta != 0 &&
                  inst.x / (4.0 * inst.W) + double(inst.q) <=
                      inst.x / (std::fabs(inst.delta) * double(inst.q)))) {
                out.note = "needs x/4W + q <= x/|delta| q";
                return out;
            }
            break;
        case SieveVariant::kraken_procida3:
            if (!(inst.delta != 0 && double(inst.q) <= inst.rho * inst.Q && inst.rho < 1.0)) {
                out.note = "needs q <= rho Q, rho < 1";
                return out;
            }
            break;
        default:
            break;
    }
    if (kraken) {
        if (!(inst.Q >= 3.5 * inst.W && double(inst.q) <= inst.Q)) {
            out.note = "kraken needs Q >= 3.5 W, q <= Q";
            return out;
        }
    }

    auto primes = primes_in(std::uint64_t(inst.Wp), std::uint64_t(inst.W));
    RunningSum lsq;
    for (auto p : primes) {
        DD lp(std::log(double(p)));
        lsq.add(lp * lp, 2.0 * lp.hi * lp.hi * 0x1.0p-51);
    }
    DD lv = lsq.value();
    Interval sum_logp_sq(detail::add_down(lv.hi, lv.lo - lsq.certified_error()),
                         detail::add_up(lv.hi, lv.lo + lsq.certified_error()));

    // alpha (plain) or 2 alpha (odd/kraken) equals a/q + delta/x; the phase
    // argument is alpha m p = (a (m p) / den) + (delta/(x <<mult>>)) m p with
    // den = q, mult = 1 plain; den = 2q, mult = 2 for the odd convention.
    std::uint64_t den = odd || kraken ? 2 * inst.q : inst.q;
    double fr = inst.x != 0 ? inst.delta / (inst.x * (odd || kraken ? 2.0 : 1.0))
                            : inst.delta / (odd || kraken ? 2.0 : 1.0);
    int stride = odd || kraken ? 2 : 1;
    std::uint64_t m0 = std::uint64_t(std::floor(inst.A0)) + 1;  // first integer > A0
    if (stride == 2 && (m0 & 1) == 0) ++m0;
    Interval lhs = large_sieve_lhs(inst.a, den, fr, inst.A0, inst.A1, stride, m0, primes);

    Interval rhs;
    try {
    switch (which) {
        case SieveVariant::pokor1:
        case SieveVariant::pokor1_odd:
            rhs = ls_block_rhs(inst.A0, inst.A1, inst.q, inst.Q, inst.W, inst.Wp, sum_logp_sq, odd);
            break;
        case SieveVariant::pokor2:
        case SieveVariant::pokor2_odd:
            rhs = ls_prime_support_rhs(inst.A0, inst.A1, inst.q, inst.W, sum_logp_sq, odd);
            break;
        case SieveVariant::zerom:
        case SieveVariant::zerom_odd:
            rhs = ls_single_block_rhs(inst.varrho, inst.rho, inst.q, inst.W, inst.Wp, sum_logp_sq);
            break;
        case SieveVariant::kraken_garn1b:
            rhs = ls_kraken_garn1b_rhs(inst.x, inst.W, inst.Wp, inst.q, double(inst.q) / inst.Q,
                                       sum_logp_sq);
            break;
        case SieveVariant::kraken_garn1a:
            rhs = ls_kraken_garn1a_rhs(inst.x, inst.W, inst.Wp, inst.q, sum_logp_sq);
            break;
        case SieveVariant::kraken_gargamel:
            rhs = ls_kraken_gargamel_rhs(inst.x, inst.W, inst.Wp, inst.q, sum_logp_sq);
            break;
        case SieveVariant::kraken_procida2:
            rhs = ls_kraken_procida2_rhs(inst.x, inst.W, inst.Wp, inst.q, inst.delta, sum_logp_sq);
            break;
        case SieveVariant::kraken_procida3:
            rhs = ls_kraken_procida3_rhs(inst.x, inst.W, inst.Wp, inst.q, inst.delta,
                                         double(inst.q) / inst.Q, inst.Q, sum_logp_sq);
            break;
    }
    } catch (const domain_error& e) {
        out.note = std::string("rhs hypothesis failure: ") + e.what();
        return out;
    }
    out.lhs = lhs;
    out.rhs = rhs;
    out.verdict = compare_sound(lhs, rhs);
    return out;
}

VaughanResult vaughan_decompose(double alpha, std::uint64_t x, double U, double V) {
    VaughanResult res;
    SmoothingFn eta2 = SmoothingFn::eta2();
    // Lambda markers up to x: lambda_p[n] = p if n = p^k else 0.
    std::vector<std::uint32_t> lambda_p(x + 1, 0);
    {
        SieveConfig cfg;
        cfg.block_size = x + 1;
        cfg.global_cap = std::max<std::uint64_t>(x, cfg.global_cap);
        SieveSegment seg = sieve_segment(1, x, cfg);
        for (const auto& pp : seg.prime_powers) lambda_p[pp.n] = std::uint32_t(pp.p);
    }
    auto mu = mu_up_to(std::uint32_t(x));
    auto eta_at = [&](double num) { return eval(eta2, Interval(num) / double(x)); };
    auto log_iv = [](double v) { return Interval::with_ulps(std::log(v), 2); };

    ComplexInterval zero(Interval(0.0), Interval(0.0));
    res.S_total = zero;
    for (std::uint64_t n = x / 4; n <= x; ++n) {
        if (n < 1 || lambda_p[n] == 0) continue;
        Interval w = eta_at(double(n));
        if (w.hi() == 0.0 && w.lo() == 0.0) continue;
        res.S_total += (log_iv(double(lambda_p[n])) * w) * e_of(alpha, double(n));
    }
    // S_I1 = sum_{m<=U odd} mu(m) sum_{n odd} log n e(alpha m n) eta(mn/x)
    res.S_I1 = zero;
    for (std::uint64_t m = 1; double(m) <= U; m += 2) {
        if (mu[m] == 0) continue;
        ComplexInterval inner = zero;
        std::uint64_t n_lo = std::uint64_t(double(x) / 4.0 / double(m));
        std::uint64_t n_hi = std::uint64_t(double(x) / double(m)) + 1;
        for (std::uint64_t n = std::max<std::uint64_t>(n_lo, 1) | 1; n <= n_hi; n += 2) {
            Interval w = eta_at(double(m) * double(n));
            if (w.hi() == 0.0 && w.lo() == 0.0) continue;
            inner += (log_iv(double(n)) * w) * e_of(alpha, double(m) * double(n));
        }
        res.S_I1 += Interval(double(mu[m])) * inner;
    }
    // S_I2 = sum_{d<=V odd} Lambda(d) sum_{m<=U odd} mu(m) sum_{n odd} e(...) eta(dmn/x)
    res.S_I2 = zero;
    for (std::uint64_t d = 2; double(d) <= V; ++d) {
        if (lambda_p[d] == 0 || d % 2 == 0) continue;
        Interval ld = log_iv(double(lambda_p[d]));
        ComplexInterval mid = zero;
        for (std::uint64_t m = 1; double(m) <= U; m += 2) {
            if (mu[m] == 0) continue;
            ComplexInterval inner = zero;
            double dm = double(d) * double(m);
            std::uint64_t n_lo = std::uint64_t(double(x) / 4.0 / dm);
            std::uint64_t n_hi = std::uint64_t(double(x) / dm) + 1;
            for (std::uint64_t n = std::max<std::uint64_t>(n_lo, 1) | 1; n <= n_hi; n += 2) {
                Interval w = eta_at(dm * double(n));
                if (w.hi() == 0.0 && w.lo() == 0.0) continue;
                inner += w * e_of(alpha, dm * double(n));
            }
            mid += Interval(double(mu[m])) * inner;
        }
        res.S_I2 += ld * mid;
    }
    // S_II = sum_{m>U odd} (sum_{d|m, d>U} mu(d)) sum_{n>V odd} Lambda(n) e eta
    res.S_II = zero;
    for (std::uint64_t m = std::uint64_t(U) + 1; double(m) * std::max(V, 1.0) <= double(x); ++m) {
        if (m % 2 == 0) continue;
        // w(m) = sum_{d | m, d > U} mu(d)
        int wm = 0;
        {
            std::uint64_t t = m;
            std::uint32_t pf[12];
            int np = 0;
            for (std::uint64_t p = 3; p * p <= t; p += 2) {
                if (t % p == 0) {
                    pf[np++] = std::uint32_t(p);
                    while (t % p == 0) t /= p;
                }
            }
            if (t > 1) pf[np++] = std::uint32_t(t);
            for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
                std::uint64_t dv = 1;
                int bits = 0;
                for (int b = 0; b < np; ++b)
                    if (mask & (1u << b)) { dv *= pf[b]; ++bits; }
                if (double(dv) > U) wm += (bits & 1) ? -1 : 1;
            }
        }
        if (wm == 0) continue;
        ComplexInterval inner = zero;
        std::uint64_t n_lo = std::uint64_t(double(x) / 4.0 / double(m));
        std::uint64_t n_hi = std::uint64_t(double(x) / double(m)) + 1;
        for (std::uint64_t n = (std::max<std::uint64_t>(n_lo, std::uint64_t(V) + 1)) | 1; n <= n_hi;
             n += 2) {
            if (double(n) <= V || lambda_p[n] == 0) continue;
            Interval w = eta_at(double(m) * double(n));
            if (w.hi() == 0.0 && w.lo() == 0.0) continue;
            inner += (log_iv(double(lambda_p[n])) * w) * e_of(alpha, double(m) * double(n));
        }
        res.S_II += Interval(double(wm)) * inner;
    }
    // S_0inf = sum_{n<=V odd} Lambda(n) e(alpha n) eta(n/x)
    res.S_0inf = zero;
    for (std::uint64_t n = 3; double(n) <= V; n += 2) {
        if (lambda_p[n] == 0) continue;
        Interval w = eta_at(double(n));
        if (w.hi() == 0.0 && w.lo() == 0.0) continue;
        res.S_0inf += (log_iv(double(lambda_p[n])) * w) * e_of(alpha, double(n));
    }
    // S_0v = sum over powers of 2
    res.S_0v = zero;
    for (std::uint64_t n = 2; n <= x; n *= 2) {
        Interval w = eta_at(double(n));
        if (w.hi() == 0.0 && w.lo() == 0.0) continue;
        res.S_0v += (log_iv(2.0) * w) * e_of(alpha, double(n));
    }
    ComplexInterval rhs = res.S_I1 - res.S_I2 + res.S_II + res.S_0inf + res.S_0v;
    res.residual = res.S_total - rhs;
    res.residual_contains_zero = res.residual.re.contains(0.0) && res.residual.im.contains(0.0);
    res.residual_width = std::max(res.residual.re.width(), res.residual.im.width());
    return res;
}

namespace {

// T_m type inner sums for the type I lemma left sides.
ComplexInterval type_I_inner(double alpha, double m, double x, bool odd_n, bool log_factor) {
    ComplexInterval acc(Interval(0.0), Interval(0.0));
    SmoothingFn eta2 = SmoothingFn::eta2();
    std::uint64_t n_lo = std::uint64_t(x / 4.0 / m);
    std::uint64_t n_hi = std::uint64_t(x / m) + 1;
    std::uint64_t start = std::max<std::uint64_t>(n_lo, 1);
    if (odd_n) start |= 1;
    for (std::uint64_t n = start; n <= n_hi; n += odd_n ? 2 : 1) {
        Interval w = eval(eta2, Interval(m * double(n)) / x);
        if (w.hi() == 0.0 && w.lo() == 0.0) continue;
        if (log_factor) w *= Interval::with_ulps(std::log(double(n)), 2);
        acc += w * e_of(alpha, m * double(n));
    }
    return acc;
}

}  // namespace

CheckResult type_I_lemma_check(const TypeILemmaInput& in, TypeILemma which) {
    CheckResult out;
    out.lemma = which == TypeILemma::bosta1   ? "typeI_bosta1"
                : which == TypeILemma::bosta2 ? "typeI_bosta2"
                : which == TypeILemma::bostb1 ? "typeI_bostb1"
                                              : "typeI_bogus";
    // admissibility
    if (double(in.q) > in.Q0) {
        out.note = "needs q <= Q0";
        return out;
    }
    bool odd = which != TypeILemma::bosta1;
    // The summation phase alpha is a concrete double; the lemma datum is
    // then (a, q, delta_true) with delta_true recovered exactly in dd so
    // both sides refer to the same arc.
    double base = double(in.a) / double(in.q) + in.delta / in.x;
    double alpha2 = odd ? base / 2.0 : base;  // 2 alpha = a/q + delta/x for the odd lemmas
    TypeILemmaInput eff = in;
    {
        DD aq_dd = DD::from_div(double(in.a), double(in.q));
        DD diff = DD(alpha2 * (odd ? 2.0 : 1.0)) - aq_dd;
        eff.delta = (diff * in.x).to_double();
    }
    double cap = 1.0 / (double(in.q) * in.Q0);
    if (std::fabs(eff.delta / in.x) > cap) {
        out.note = "needs |delta/x| <= 1/(q Q0)";
        return out;
    }
    switch (which) {
        case TypeILemma::bosta1:
        case TypeILemma::bosta2:
            if (!(in.Q0 >= 16.0)) { out.note = "needs Q0 >= 16"; return out; }
            if (!(in.D >= 1.0 && in.D <= in.x)) { out.note = "needs 1 <= D <= x"; return out; }
            break;
        case TypeILemma::bostb1:
            if (!(in.Q0 >= std::max(16.0, 2.0 * std::sqrt(in.x)))) {
                out.note = "needs Q0 >= max(16, 2 sqrt x)";
                return out;
            }
            if (!(in.D >= std::sqrt(3.0) && in.D <= in.x / 4.0 && in.D <= in.x / std::exp(1.0))) {
                out.note = "needs sqrt3 <= D <= min(x/4, x/e)";
                return out;
            }
            break;
        case TypeILemma::bogus: {
            const Constants& cs = Constants::table();
            if (!(in.Q0 >= std::max(2.0 * std::exp(1.0), 2.0 * std::sqrt(in.x)))) {
                out.note = "needs Q0 >= max(2e, 2 sqrt x)";
                return out;
            }
            if (!(in.U >= 1.0 && in.V >= 1.0 &&
                  in.U * in.V + 19.0 / 18.0 * in.Q0 <= in.x / 5.6)) {
                out.note = "needs UV + (19/18) Q0 <= x/5.6";
                return out;
            }
            if (!(in.x >= (square(euler_e_interval()) * cs.c2 / 2.0).hi())) {
                out.note = "needs x >= e^2 c2 / 2";
                return out;
            }
            break;
        }
    }

    ComplexInterval lhs_c(Interval(0.0), Interval(0.0));
    auto mu = mu_up_to(std::uint32_t(std::max(in.D, in.U) ) + 1);
    if (which == TypeILemma::bogus) {
        std::vector<std::uint32_t> lambda_p(std::uint64_t(in.V) + 1, 0);
        SieveConfig cfg;
        cfg.block_size = std::uint64_t(in.V) + 2;
        SieveSegment seg = sieve_segment(1, std::uint64_t(in.V), cfg);
        for (const auto& pp : seg.prime_powers) lambda_p[pp.n] = std::uint32_t(pp.p);
        for (std::uint64_t v = 3; double(v) <= in.V; v += 2) {
            if (lambda_p[v] == 0) continue;
            ComplexInterval midsum(Interval(0.0), Interval(0.0));
            for (std::uint64_t u = 1; double(u) <= in.U; u += 2) {
                if (mu[u] == 0) continue;
                midsum += Interval(double(mu[u])) *
                          type_I_inner(alpha2, double(v) * double(u), in.x, true, false);
            }
            lhs_c += Interval::with_ulps(std::log(double(lambda_p[v])), 2) * midsum;
        }
    } else {
        for (std::uint64_t m = 1; double(m) <= in.D; m += odd ? 2 : 1) {
            if (mu[m] == 0) continue;
            lhs_c += Interval(double(mu[m])) *
                     type_I_inner(alpha2, double(m), in.x, odd, which == TypeILemma::bostb1);
        }
    }
    Interval lhs = lhs_c.abs();
    Interval rhs;
    switch (which) {
        case TypeILemma::bosta1: rhs = bosta1_rhs(eff); break;
        case TypeILemma::bosta2: rhs = bosta2_rhs(eff); break;
        case TypeILemma::bostb1: rhs = bostb1_rhs(eff); break;
        case TypeILemma::bogus: rhs = bogus_rhs(eff); break;
    }
    out.lhs = lhs;
    out.rhs = rhs;
    out.verdict = compare_sound(lhs, rhs);
    return out;
}

// ---------------------------------------------------------------- suites

namespace {

std::uint64_t random_coprime(std::mt19937_64& rng, std::uint64_t q) {
    if (q == 1) return 0;
    for (;;) {
        std::uint64_t a = rng() % q;
        if (a == 0) continue;
        if (std::gcd(a, q) == 1) return a;
    }
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

}  // namespace

SuiteSummary run_trig_suite(TrigVariant which, int count, std::uint64_t seed) {
    SuiteSummary sum;
    sum.name = which == TrigVariant::sum_over_full_period ? "trig_full_period"
               : which == TrigVariant::q_excluded         ? "trig_q_excluded"
                                                          : "trig_b_over_sin";
    sum.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        TrigInstance inst;
        inst.q = std::uint64_t(log_uniform(rng, 1.0, 1000.0));
        if (inst.q < 1) inst.q = 1;
        inst.a = std::int64_t(random_coprime(rng, inst.q));
        if (inst.q == 1) inst.a = 0;
        inst.beta = 2.0 * unit(rng) - 1.0;
        inst.Q = log_uniform(rng, double(inst.q), 1e6);
        inst.A = unit(rng) < 0.05 ? 0.0 : log_uniform(rng, 1e-3, 1e3);
        inst.C = unit(rng) < 0.05 ? 0.0 : log_uniform(rng, 1e-6, 1e2);
        inst.B = log_uniform(rng, 1e-3, 1e3);
        if (which == TrigVariant::sum_over_full_period) {
            inst.y1 = unit(rng) * 1e6;
        } else {
            inst.y2 = std::min(unit(rng) * 1e6, inst.Q / 2.0);
            double len = unit(rng) * double(inst.q);
            inst.y1 = std::max(0.0, inst.y2 - len);
        }
        CheckResult r = trig_lemma_check(inst, which);
        r.id = std::uint64_t(i);
        r.seed = seed;
        ++sum.total;
        switch (r.verdict) {
            case Verdict::holds: ++sum.holds; break;
            case Verdict::inconclusive: ++sum.inconclusive; break;
            case Verdict::violation: ++sum.violations; break;
            case Verdict::skipped: ++sum.skipped; break;
        }
        sum.results.push_back(std::move(r));
    }
    return sum;
}

SuiteSummary run_large_sieve_suite(SieveVariant which, int count, std::uint64_t seed) {
    SuiteSummary sum;
    sum.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        SieveInstance inst;
        inst.W = log_uniform(rng, 200.0, 1e4);
        inst.Wp = inst.W / 2.0 + unit(rng) * (inst.W / 2.0 - 1.0);
        bool kraken = which == SieveVariant::kraken_garn1b || which == SieveVariant::kraken_garn1a ||
                      which == SieveVariant::kraken_gargamel ||
                      which == SieveVariant::kraken_procida2 ||
                      which == SieveVariant::kraken_procida3;
        inst.odd_m = which == SieveVariant::pokor1_odd || which == SieveVariant::pokor2_odd ||
                     which == SieveVariant::zerom_odd || kraken;
        if (!kraken) {
            if (which == SieveVariant::pokor2 || which == SieveVariant::pokor2_odd) {
                inst.q = 1 + std::uint64_t(log_uniform(rng, 1.0, inst.W / 2.2));
                inst.Q = 3.5 * inst.W + unit(rng) * 10.0 * inst.W;
            } else {
                inst.q = 1 + std::uint64_t(log_uniform(rng, 1.0, 2e3));
                inst.Q = log_uniform(rng, double(inst.q) + 1, 1e7);
            }
            inst.a = std::int64_t(random_coprime(rng, inst.q));
            if (inst.q == 1) inst.a = 0;
            // alpha = a/q + theta with |theta| <= 1/(q Q): represent via x = 1
            inst.x = 1.0;
            inst.delta = (2.0 * unit(rng) - 1.0) / (double(inst.q) * inst.Q);
            inst.A0 = unit(rng) * 1e5;
            double len;
            if (which == SieveVariant::zerom || which == SieveVariant::zerom_odd) {
                inst.varrho = 0.05 + 0.9 * unit(rng);
                inst.rho = std::min(1.0, double(inst.q) / inst.Q + unit(rng) * 0.5);
                if (inst.varrho * inst.rho >= 1.0) inst.varrho = 0.9 / inst.rho;
                // keep clear of the boundary so A1 - A0 <= varrho q survives rounding
                len = 0.98 * inst.varrho * double(inst.q) * (inst.odd_m ? 2.0 : 1.0);
            } else {
                len = unit(rng) * std::min(2000.0, 4.0 * double(inst.q) + 50.0);
            }
            inst.A1 = inst.A0 + len;
        } else {
            inst.x = log_uniform(rng, 2e5, 4e6);
            inst.W = log_uniform(rng, std::max(200.0, inst.x / 4000.0), 1e4);
            inst.Wp = inst.W / 2.0 + unit(rng) * (inst.W / 2.0 - 1.0);
            inst.Q = std::max(3.5 * inst.W, log_uniform(rng, 3.5 * inst.W, 1e6));
            std::uint64_t qmax = which == SieveVariant::kraken_garn1a
                                     ? std::uint64_t(inst.W / 2.2)
                                     : std::uint64_t(std::min(inst.Q, 5e3));
            inst.q = 1 + std::uint64_t(log_uniform(rng, 1.0, double(std::max<std::uint64_t>(qmax, 2))));
            if (which == SieveVariant::kraken_gargamel) {
                // the hypothesis W > x/4q needs q above x/(4W)
                double qmin = inst.x / (3.9 * inst.W) + 1.0;
                inst.q = std::uint64_t(qmin + log_uniform(rng, 1.0, 50.0));
            }
            inst.a = std::int64_t(random_coprime(rng, inst.q));
            if (inst.q == 1) inst.a = 0;
            double dmax = inst.x / (double(inst.q) * inst.Q);
            inst.delta = (2.0 * unit(rng) - 1.0) * dmax;
            if (which == SieveVariant::kraken_procida2 || which == SieveVariant::kraken_procida3) {
                if (inst.delta == 0) inst.delta = dmax / 2;
            }
            inst.rho = double(inst.q) / inst.Q;
            inst.A0 = std::max(inst.x / (2.0 * inst.W), 1.0);  // U' with U <= x/2W
            inst.A1 = inst.x / inst.W;
        }
        CheckResult r = large_sieve_check(inst, which);
        r.id = std::uint64_t(i);
        r.seed = seed;
        sum.name = r.lemma;
        ++sum.total;
        switch (r.verdict) {
            case Verdict::holds: ++sum.holds; break;
            case Verdict::inconclusive: ++sum.inconclusive; break;
            case Verdict::violation: ++sum.violations; break;
            case Verdict::skipped: ++sum.skipped; break;
        }
        sum.results.push_back(std::move(r));
    }
    return sum;
}

SuiteSummary run_type_I_suite(int count, std::uint64_t seed, double eps) {
    SuiteSummary sum;
    sum.name = "type_I_lemmas";
    sum.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        TypeILemmaInput in;
        TypeILemma which = static_cast<TypeILemma>(rng() % 4);
        in.x = log_uniform(rng, 1e4, 3e5);
        in.q = 1 + std::uint64_t(log_uniform(rng, 1.0, 200.0));
        in.eps = eps;
        std::uint64_t a = random_coprime(rng, in.q);
        if (in.q == 1) a = 0;
        // Build an admissible (Q0, delta)
        if (which == TypeILemma::bosta1 || which == TypeILemma::bosta2) {
            in.Q0 = std::max(16.0, log_uniform(rng, 16.0, std::sqrt(in.x) * 4.0));
            in.D = log_uniform(rng, 1.0, std::min(in.x / 8.0, 300.0));
        } else if (which == TypeILemma::bostb1) {
            in.Q0 = 2.0 * std::sqrt(in.x) * (1.0 + unit(rng));
            in.D = log_uniform(rng, 2.0, std::min(in.x / 4.5, 300.0));
        } else {
            in.Q0 = 2.0 * std::sqrt(in.x) * (1.0 + unit(rng));
            double budget = in.x / 5.6 - 19.0 / 18.0 * in.Q0;
            if (budget < 9.0) {
                in.Q0 = 2.0 * std::sqrt(in.x);
                budget = in.x / 5.6 - 19.0 / 18.0 * in.Q0;
            }
            double uv = log_uniform(rng, 4.0, std::max(8.0, std::min(budget, 2000.0)));
            in.U = std::max(1.0, log_uniform(rng, 1.0, uv));
            in.V = std::max(1.0, uv / in.U);
        }
        in.delta = (2.0 * unit(rng) - 1.0) * 0.99 * in.x / (double(in.q) * in.Q0);
        in.a = std::int64_t(a);
        CheckResult r = type_I_lemma_check(in, which);
        r.id = std::uint64_t(i);
        r.seed = seed;
        ++sum.total;
        switch (r.verdict) {
            case Verdict::holds: ++sum.holds; break;
            case Verdict::inconclusive: ++sum.inconclusive; break;
            case Verdict::violation: ++sum.violations; break;
            case Verdict::skipped: ++sum.skipped; break;
        }
        sum.results.push_back(std::move(r));
    }
    return sum;
}

SuiteSummary run_vaughan_suite(int count, std::uint64_t seed, double x_max,
                               double residual_tol_per_x) {
    SuiteSummary sum;
    sum.name = "vaughan_identity";
    sum.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        std::uint64_t x = std::uint64_t(log_uniform(rng, 500.0, x_max));
        double alpha = unit(rng);
        double U = log_uniform(rng, 1.0, std::sqrt(double(x)));
        double V = log_uniform(rng, 1.0, std::sqrt(double(x)));
        VaughanResult v = vaughan_decompose(alpha, x, U, V);
        CheckResult r;
        r.id = std::uint64_t(i);
        r.seed = seed;
        r.lemma = "vaughan_residual";
        r.lhs = Interval(std::fabs(v.residual.re.mid()) + std::fabs(v.residual.im.mid()));
        r.rhs = Interval(residual_tol_per_x * double(x));
        bool ok = v.residual_contains_zero && v.residual_width < residual_tol_per_x * double(x);
        r.verdict = ok ? Verdict::holds : Verdict::violation;
        ++sum.total;
        if (ok) ++sum.holds; else ++sum.violations;
        sum.results.push_back(std::move(r));
    }
    return sum;
}

SuiteSummary run_quadratic_decay_suite(int count, std::uint64_t seed) {
    SuiteSummary sum;
    sum.name = "quadratic_decay";
    sum.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < count; ++i) {
        double alpha = unit(rng);
        std::uint64_t N = std::uint64_t(log_uniform(rng, 1e3, 2e4));
        CheckResult r = quadratic_decay_check(alpha, N);
        r.id = std::uint64_t(i);
        r.seed = seed;
        ++sum.total;
        switch (r.verdict) {
            case Verdict::holds: ++sum.holds; break;
            case Verdict::inconclusive: ++sum.inconclusive; break;
            case Verdict::violation: ++sum.violations; break;
            case Verdict::skipped: ++sum.skipped; break;
        }
        sum.results.push_back(std::move(r));
    }
    return sum;
}

std::string check_result_jsonl(const CheckResult& r) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"id\":" << r.id << ",\"seed\":" << r.seed << ",\"lemma\":\"" << r.lemma << "\""
       << ",\"lhs\":[" << r.lhs.lo() << "," << r.lhs.hi() << "]"
       << ",\"rhs\":[" << r.rhs.lo() << "," << r.rhs.hi() << "]"
       << ",\"verdict\":\""
       << (r.verdict == Verdict::holds          ? "holds"
           : r.verdict == Verdict::inconclusive ? "inconclusive"
           : r.verdict == Verdict::violation    ? "VIOLATION"
                                                : "skipped")
       << "\"";
    if (!r.note.empty()) os << ",\"note\":\"" << r.note << "\"";
    os << "}";
    return os.str();
}

}  // namespace minarc
