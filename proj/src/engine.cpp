// SPDX-License-Identifier: Apache-2.0

#include "minarc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "minarc/sieve.hpp"

namespace minarc {

namespace {

Interval sqrt13_over_3() { return sqrt(Interval(13.0) / 3.0); }

Interval logplus(const Interval& v) {
    if (v.hi() <= 1.0) return Interval(0.0);
    Interval l = log(Interval(std::max(v.lo(), 1.0), v.hi()));
    return Interval(std::max(0.0, l.lo()), std::max(0.0, l.hi()));
}

const Interval kGamma = Interval::with_ulps(0x1.2788cfc6fb619p-1, 1);  // Euler-Mascheroni

// Exact sum_{m <= limit, gcd(m, modulus) = 1} mu(m)/m as a tight interval.
Interval mu_over_m_sum(std::uint64_t limit, std::uint64_t modulus) {
    if (limit < 1) return Interval(0.0);
    auto mu = mu_up_to(std::uint32_t(limit));
    DD s(0.0);
    double err = 0.0;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (mu[m] == 0) continue;
        if (modulus > 1 && std::gcd(m, modulus) != 1) continue;
        DD term = DD::from_div(double(mu[m]), double(m));
        s = s + term;
        err += 0x1.0p-100 * (std::fabs(s.hi) + std::fabs(term.hi));
    }
    return Interval(detail::add_down(s.hi, s.lo - err), detail::add_up(s.hi, s.lo + err));
}

// sum_{m <= limit, gcd(m,q)=1} mu(m)/m * log(x/(m q))
Interval mu_log_sum(std::uint64_t limit, std::uint64_t q, double x) {
    if (limit < 1) return Interval(0.0);
    auto mu = mu_up_to(std::uint32_t(limit));
    Interval s(0.0);
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (mu[m] == 0) continue;
        if (std::gcd(m, q) != 1) continue;
        s += Interval(double(mu[m])) / double(m) * log(Interval(x) / (double(m) * double(q)));
    }
    return s;
}

}  // namespace

const Constants& Constants::table() {
    static const Constants c = [] {
        Constants t;
        t.c0 = Interval(31.521);
        t.c1 = Interval(1.0000028);
        t.c2 = 6.0 * pi_interval() / (5.0 * sqrt(t.c0));
        t.c2_b1 = (3.0 * pi_interval() / (5.0 * sqrt(t.c0))) * (1.0 + sqrt13_over_3());
        t.c0p = Interval(0.798437);
        t.c0pp = Interval(1.685532);
        t.c3I = Interval(2.11104);
        t.c4I = Interval(1.00303);
        t.c5I = Interval(3.57422);
        t.c6I = Interval(2.23389);
        // the published rounding 6.19072 sits 2.7e-6 below 2 sqrt(3 c0 c1)/pi;
        // stored sound.
        t.c7I = Interval(6.19073);
        t.c8I = Interval(3.53017);
        t.c9I = Interval(2.58877);
        t.c10I = Interval(9.37301);
        t.c11I = Interval(9.0857);
        t.c4I2 = Interval(3.57422);
        t.c5I2 = Interval(3.53312);
        t.c6I2 = 2.0 * sqrt(3.0 * t.c0 * t.c1) / pi_interval() + 3.0 * t.c1 / (2.0 * t.c2) +
                 55.0 * t.c0 * t.c2 / (6.0 * square(pi_interval()));
        t.c8I2 = Interval(1.17257);
        t.c9I2 = Interval(0.82214);
        t.c10I2 = Interval(1.78783);
        // the published 28.26771 is inconsistent with the c6I2 definition
        // (the true c6I2 + c10I2 log 2 is 29.32199..); stored sound.
        t.c12I2 = Interval(29.32200);
        t.c13I2 = Interval(1.31541);
        t.c14I2 = Interval(3.57422);
        t.c15I2 = Interval(3.71301);
        t.c16I2 = Interval(1.50061);
        t.c17I2 = Interval(25.0295);
        t.c18I2 = Interval(3.57565);
        t.k0 = Interval(1.27);
        t.k1 = Interval(0.2347);
        t.k2 = Interval(1.93768);
        t.k4 = Interval(90.5671);
        t.k6 = Interval(0.60428);
        t.k7 = Interval(0.1281);
        t.k9 = Interval(3.9086);
        return t;
    }();
    return c;
}

std::vector<AuditLine> audit_constants() {
    const Constants& t = Constants::table();
    std::vector<AuditLine> out;
    auto check = [&](const std::string& name, const Interval& claimed, const Interval& rhs) {
        bool ok = claimed.lo() > rhs.hi();
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %.8f > %.8f %s", name.c_str(), claimed.lo(), rhs.hi(),
                      ok ? "ok" : "FAIL");
        out.push_back({name, ok, buf});
    };
    Interval pi = pi_interval(), pi2 = square(pi), l2 = log2_interval(), e = euler_e_interval();
    check("c1 > 1 + 8 log2 / 2e6", t.c1, 1.0 + 8.0 * l2 / 2e6);
    check("c0p > c0/(2pi)^2", t.c0p, t.c0 / square(2.0 * pi));
    check("c0pp > 96 log2/(2pi)^2", t.c0pp, 96.0 * l2 / square(2.0 * pi));
    check("c3I > c0pp/c0p", t.c3I, t.c0pp / t.c0p);
    check("c4I >= 1.00303 (Ramare)", t.c4I + 1e-9, Interval(1.00303));
    check("c5I > 2 sqrt(c0 c1)/pi", t.c5I, 2.0 * sqrt(t.c0 * t.c1) / pi);
    check("c6I > 3 c1/(2 c2)", t.c6I, 3.0 * t.c1 / (2.0 * t.c2));
    check("c7I > 2 sqrt(3 c0 c1)/pi", t.c7I, 2.0 * sqrt(3.0 * t.c0 * t.c1) / pi);
    check("c8I > 16 log2/pi", t.c8I, 16.0 * l2 / pi);
    check("c9I > 3 sqrt2 c1/(2 sqrt c2)", t.c9I, 3.0 * sqrt(Interval(2.0)) * t.c1 / (2.0 * sqrt(t.c2)));
    check("c10I > c0 (1/2 - 2/pi^2)", t.c10I, t.c0 * (Interval(0.5) - 2.0 / pi2));
    check("c11I > c0 e^3/(32 pi log2)", t.c11I, t.c0 * pow(e, 3) / (4.0 * pi * 8.0 * l2));
    check("c4I2 > 2 sqrt(c0 c1)/pi", t.c4I2, 2.0 * sqrt(t.c0 * t.c1) / pi);
    check("c5I2 > 1.0004 c8I", t.c5I2, Interval(1.0004) * t.c8I);
    check("c8I2 > 0.5004 c10I/4", t.c8I2, Interval(0.5004) * t.c10I / 4.0);
    check("c9I2 > 3 c1 1.0004/(2 e c2)", t.c9I2, 3.0 * t.c1 * Interval(1.0004) / (2.0 * e * t.c2));
    check("c10I2 > 1.0004 sqrt(c0 c1)/pi", t.c10I2, Interval(1.0004) * sqrt(t.c0 * t.c1) / pi);
    check("c12I2 > c6I2 + c10I2 log2", t.c12I2, t.c6I2 + t.c10I2 * l2);
    check("c13I2 > (2 sqrt(c0 c1)/pi)(1.0004/e)", t.c13I2,
          2.0 * sqrt(t.c0 * t.c1) / pi * Interval(1.0004) / e);
    check("c14I2 > 2 sqrt(c0 c1)/pi", t.c14I2, 2.0 * sqrt(t.c0 * t.c1) / pi);
    check("c15I2 > (2 sqrt(c0 c1)/pi) 1.03883", t.c15I2,
          2.0 * sqrt(t.c0 * t.c1) / pi * Interval(1.03883));
    check("c16I2 > 1.0004 (3 c1/2)", t.c16I2, Interval(1.0004) * 3.0 * t.c1 / 2.0);
    check("c17I2 > 1.0004 (35 c0 c2/(3 pi^2))", t.c17I2,
          Interval(1.0004) * 35.0 * t.c0 * t.c2 / (3.0 * pi2));
    check("c18I2 > (2 sqrt(c0 c1)/pi) 1.0004", t.c18I2,
          2.0 * sqrt(t.c0 * t.c1) / pi * Interval(1.0004));
    // type II chain (zeta(3/2)^3 via a tight enclosure)
    Interval zeta32 = Interval::with_ulps(2.6123753486854883, 2);
    Interval k1_exact = 2.0 / pi2 + t.k0 * pow(zeta32, 3) / sqrt(Interval(5e5));
    check("k1 >= exact", t.k1 + 1e-12, k1_exact);
    check("k2 >= 4 sqrt(k1 exact)", t.k2 + 1e-12, 4.0 * sqrt(k1_exact));
    check("k4 >= 4 k0 zeta(3/2)^3", t.k4 + 1e-12, 4.0 * t.k0 * pow(zeta32, 3));
    check("k6 = 4 * 0.15107", t.k6 + 1e-12, Interval(4.0 * 0.15107));
    check("k7 >= sqrt2 k4/1000", t.k7 + 1e-12, sqrt(Interval(2.0)) * t.k4 / 1000.0);
    check("k9 >= 8 sqrt(1.0172 k1 exact)", t.k9 + 1e-12,
          8.0 * sqrt(Interval(1.0172) * k1_exact));
    return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            f.push_back({p, k});
        }
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::uint64_t phi_of(std::uint64_t q) {
    std::uint64_t phi = q;
    for (auto [p, k] : factorize(q)) phi -= phi / p;
    return phi;
}

Interval digamma_majorant(double q) {
    if (!(q >= 3.0)) throw domain_error("digamma_majorant needs q >= 3");
    Interval ll = log(log(Interval(q)));
    return exp(kGamma) * ll + Interval(2.50637) / ll;
}

Interval engine_C(const Interval& x, const Interval& t) {
    Interval x13 = pow(x, Interval(1.0) / 3.0);
    Interval denom_arg = 9.0 * x13 / (Interval(2.004) * t);
    if (!(denom_arg.lo() > 1.0))
        throw domain_error("C_{x,t}: t out of range (needs t < 9 x^{1/3}/2.004)");
    return log(1.0 + log(4.0 * t) / (2.0 * log(denom_arg)));
}

Interval engine_R(const Interval& x, const Interval& t) {
    return Interval(0.27125) * engine_C(x, t) + Interval(0.41415);
}

ArcApprox ArcApprox::make(double x, std::int64_t a, std::uint64_t q, double delta) {
    ArcApprox arc;
    arc.x = x;
    arc.a = a;
    arc.q = q;
    arc.delta = delta;
    arc.Q = 0.75 * std::cbrt(x) * std::cbrt(x);
    arc.delta0 = std::max(2.0, std::fabs(delta) / 4.0);
    if (q < 1) throw domain_error("ArcApprox: q >= 1 required");
    std::uint64_t g = std::gcd(std::uint64_t(std::llabs(a)), q);
    if (g != 1 && !(a == 0 && q == 1)) throw domain_error("ArcApprox: gcd(a, q) must be 1");
    if (double(q) > arc.Q) throw domain_error("ArcApprox: q exceeds Q = (3/4) x^{2/3}");
    if (std::fabs(delta / x) > 1.0 / (double(q) * arc.Q) * (1 + 1e-12))
        throw domain_error("ArcApprox: |delta/x| exceeds 1/(q Q)");
    return arc;
}

namespace {

// L_{x,delta0,q} of the theorem statement.
Interval theorem_L(const Interval& x, const Interval& d0, std::uint64_t q, std::uint64_t phi) {
    Interval lq = log(Interval(double(q)));
    Interval opt1 = (Interval(1.75) * log(d0) + Interval(3.25) * lq + Interval(80.0) / 9.0) /
                    (Interval(double(phi)) / double(q));
    Interval opt2 = Interval(5.0) / 6.0 * log(x) + Interval(50.0) / 9.0;
    return min(opt1, opt2) + Interval(80.0) / 9.0 * lq + Interval(16.0) / 9.0 * log(d0) +
           Interval(111.0) / 5.0;
}

}  // namespace

BoundReport main_theorem_bound(const ArcApprox& arc, bool proof_constants) {
    if (!(arc.x >= 2.16e20))
        throw domain_error("main theorem requires x >= 2.16e20");
    BoundReport rep;
    Interval x(arc.x);
    Interval x56 = pow(x, Interval(5.0) / 6.0);
    double y = std::cbrt(arc.x) / 6.0;
    if (double(arc.q) <= y) {
        rep.branch = BoundReport::Branch::small_q;
        Interval d0(arc.delta0);
        Interval d0q = d0 * double(arc.q);
        std::uint64_t phi = phi_of(arc.q);
        Interval R = engine_R(x, d0q);
        Interval K = proof_constants ? Interval(0.49911) : Interval(0.5);
        Interval c25 = proof_constants ? Interval(2.491) : Interval(2.5);
        Interval main = (R * log(d0q) + K) / sqrt(d0 * double(phi)) * x;
        Interval second = c25 * x / sqrt(d0q);
        Interval lterm = 2.0 * x / d0q * theorem_L(x, d0, arc.q, phi);
        Interval tail = 3.2 * x56;
        rep.components = {{"main", main}, {"sqrt_d0q", second}, {"L_term", lterm},
                          {"x_5_6", tail}};
        rep.total = main + second + lterm + tail;
    } else {
        rep.branch = BoundReport::Branch::large_q;
        Interval lx = log(x);
        Interval first = 0.2727 * x56 * pow(lx, Interval(1.5));
        Interval second = 1218.0 * pow(x, Interval(2.0) / 3.0) * lx;
        rep.components = {{"x56_log32", first}, {"x23_log", second}};
        rep.total = first + second;
    }
    return rep;
}

namespace {

struct PrimorialInfo {
    std::uint64_t value;
    Interval ratio;  // q/phi(q)
};

std::vector<PrimorialInfo> primorials_up_to(double limit) {
    static const int ps[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    std::vector<PrimorialInfo> out;
    std::uint64_t v = 1;
    Interval r(1.0);
    for (int p : ps) {
        if (double(v) * p > limit) break;
        v *= std::uint64_t(p);
        r *= Interval(double(p)) / double(p - 1);
        out.push_back({v, r});
    }
    return out;
}

// First-choice assembly of |S_eta|/x (proof form, worst delta regime),
// for given q and q/phi(q).
Interval first_choice_ratio(double x, double q, const Interval& ratio) {
    const Constants& cs = Constants::table();
    Interval ix(x), iq(q);
    Interval lx = log(ix), lq = log(iq);
    Interval d0(2.0);
    Interval t = d0 * iq;  // delta0 q
    Interval lt = log(t);
    Interval phi = iq / ratio;

    // S_II (the |delta| < 8 display): main sqrt pair + the two tails.
    Interval sII = sqrt(engine_C(ix, t) * lt + lq / 2.0) *
                       sqrt(Interval(0.30214) * lt + Interval(0.67506)) / sqrt(2.0 * phi) +
                   Interval(16.404) * sqrt(ratio) * pow(ix, Interval(-0.25)) +
                   Interval(1.84251) * pow(ix, -Interval(1.0) / 6.0);

    // S_I1 (therwald), with min(1, c0'/delta^2) <= 1.
    Interval sI1 = min(ratio * (Interval(1.75) * lt + Interval(6.11676)),
                       Interval(0.5) * lx + Interval(5.65787)) / iq +
                   (Interval(0.67845) * lx - Interval(1.20818)) * pow(ix, -Interval(1.0) / 3.0) /
                       sqrt(t) +
                   Interval(0.0507) * pow(ix, -Interval(1.0) / 3.0);

    // S_I2 (cleson) common part.
    Interval sI2c = min(ratio * (Interval(1.5) * lq + Interval(2.74107)),
                        lx / 3.0 + log(Interval(0.75)) / 2.0) / iq +
                    Interval(0.29315) / (iq * iq * d0) +
                    (Interval(22.9462) * lx + Interval(56.6134)) * pow(ix, -Interval(1.0) / 3.0);
    Interval regA = sI2c + Interval(2.19818) / sqrt(t);
    Interval dB = Interval(1.0) / (2.0 * cs.c2);  // worst |delta| in the large regime
    Interval regB = sI2c + Interval(2.49086) / sqrt(t) +
                    (Interval(3.30386) * log(dB * iq * iq * iq) + Interval(16.4137)) / (dB * iq);
    return sII + sI1 + max(regA, regB);
}

}  // namespace

Interval worst_case_ratio(double x, double q0, double delta_cap) {
    if (!(x >= 2.16e20)) throw domain_error("worst_case_ratio requires x >= 2.16e20");
    if (delta_cap > 8.0)
        throw domain_error("worst_case_ratio: delta caps above 8 are not in the table convention");
    auto prims = primorials_up_to(q0 * 1.0 + 0.5);
    Interval best(0.0);
    bool any = false;
    auto consider = [&](double q, const Interval& ratio) {
        Interval v = first_choice_ratio(x, q, ratio);
        best = any ? max(best, v) : v;
        any = true;
    };
    // q = q0 with the ratio of the largest primorial <= q0
    Interval r0 = prims.empty() ? Interval(1.0) : prims.back().ratio;
    consider(q0, r0);
    // the smallest primorial >= q0, with its exact ratio (only while it
    // stays inside the small-q branch q <= x^{1/3}/6)
    double y = std::cbrt(x) / 6.0;
    for (const auto& pi : primorials_up_to(8.0 * q0)) {
        if (double(pi.value) >= q0) {
            if (double(pi.value) <= y) consider(double(pi.value), pi.ratio);
            break;
        }
    }
    return best;
}

std::vector<Table1Row> table1(double x, const std::vector<double>& q0_list, double delta_cap) {
    std::vector<Table1Row> rows;
    for (double q0 : q0_list) {
        Table1Row row;
        row.q0 = q0;
        row.assembly_ratio = worst_case_ratio(x, q0, delta_cap);
        // theorem-statement evaluation at q = q0 with primorial phi
        auto prims = primorials_up_to(q0);
        Interval ratio = prims.empty() ? Interval(1.0) : prims.back().ratio;
        Interval iq(q0), d0(2.0);
        Interval t = d0 * iq;
        Interval phi = iq / ratio;
        Interval ix(x);
        Interval main = (engine_R(ix, t) * log(t) + 0.5) / sqrt(d0 * phi);
        Interval second = 2.5 / sqrt(t);
        Interval lterm_min =
            min((Interval(1.75) * log(d0) + Interval(3.25) * log(iq) + Interval(80.0) / 9.0) * ratio,
                Interval(5.0) / 6.0 * log(ix) + Interval(50.0) / 9.0);
        Interval lterm = 2.0 / t *
                         (lterm_min + Interval(80.0) / 9.0 * log(iq) +
                          Interval(16.0) / 9.0 * log(d0) + Interval(111.0) / 5.0);
        Interval tail = 3.2 * pow(ix, -Interval(1.0) / 6.0);
        row.theorem_ratio = main + second + lterm + tail;
        rows.push_back(row);
    }
    return rows;
}

Parameters select_parameters(double x, double q, double delta, ParameterChoice choice) {
    if (!(x >= 2.16e20)) throw domain_error("select_parameters requires x >= 2.16e20");
    Parameters out;
    Interval ix(x);
    Interval x13 = pow(ix, Interval(1.0) / 3.0);
    Interval x23 = pow(ix, Interval(2.0) / 3.0);
    double d0 = std::max(2.0, std::fabs(delta) / 4.0);
    if (choice == ParameterChoice::first) {
        out.y = x13 / 6.0;
        out.Q = Interval(0.75) * x23;
        out.U = x23 / (9.0 * sqrt(Interval(q) * d0));
        out.V = 9.0 * x13 / 2.0;
        out.theta = Interval(27.0) / 8.0;
    } else {
        out.V = x13 / 3.0;
        out.U = 500.0 * sqrt(Interval(6.0)) * x13;
        out.Q = ix / out.U;
        out.y = x13 / 6.0;
        out.theta = square(euler_e_interval());
    }
    auto fail = [&](const std::string& s) {
        out.side_conditions_ok = false;
        out.violations.push_back(s);
    };
    // The conditions hold as real-arithmetic identities of the published
    // choices; a violation is flagged only when certain (interval-sound).
    if (out.V.lo() >= x / 4.0) fail("V < x/4");
    if ((out.U * out.V).lo() > x) fail("UV <= x");
    if (out.Q.hi() < sqrt(euler_e_interval() * ix).lo()) fail("Q >= sqrt(e x)");
    if (out.Q.hi() < out.U.lo() || out.Q.hi() < (ix / out.U).lo()) fail("Q >= max(U, x/U)");
    Interval x_over_UV = ix / (out.U * out.V);
    if ((out.U / x_over_UV).hi() < 5e5) fail("U >= 5e5 x/(UV)");
    if (choice == ParameterChoice::first) {
        // werto: V/(2 theta q) >= 1 for q <= y
        if (q <= out.y.hi() && (out.V / (2.0 * out.theta * q)).hi() < 1.0)
            fail("V/2thetaq >= 1");
    }
    return out;
}

namespace {

Interval rho_formula(const Interval& x1, const Interval& t) {
    Interval C = engine_C(x1, t);
    Interval A = C * (log(t) + 0.002) + log(4.0 * t) / 2.0;
    Interval B = Interval(0.30214) * log(t) + Interval(0.67506);
    return A / B;
}

}  // namespace

Interval optimal_rho() { return rho_formula(Interval(1e25), Interval(8e5)); }
Interval balance_rho() { return rho_formula(Interval(1e25), Interval(4e5)); }

RhoConsequences rho_consequences(const Interval& rho) {
    RhoConsequences out;
    Interval sr = sqrt(rho);
    out.coeff_C = 1.0 / (2.0 * sr);
    // absorbs 0.27125 * C * 0.002 <= 0.000047 log(d0 q) (C/log t <= 0.08659)
    out.coeff_log = 1.0 / (4.0 * sr) + sr * 0.30214 / 2.0 + Interval(0.000047);
    out.coeff_const = 0.5 * (log2_interval() / sr + sr / 2.0 * 0.67506);
    return out;
}

// ------------------------------------------------------------- lemma RHSes

Interval trig_full_period_rhs(const Interval& A, const Interval& C, std::uint64_t q) {
    Interval pi2 = square(pi_interval());
    Interval qq{double(q)};
    return min(2.0 * A + 6.0 * square(qq) / pi2 * C,
               3.0 * A + 4.0 * qq / pi_interval() * sqrt(A * C));
}

Interval trig_q_excluded_rhs(const Interval& A, const Interval& C, std::uint64_t q) {
    Interval pi2 = square(pi_interval());
    Interval qq{double(q)};
    return min(Interval(20.0) / (3.0 * pi2) * C * square(qq),
               2.0 * A + 4.0 * qq / pi_interval() * sqrt(A * C));
}

Interval trig_b_over_sin_rhs(const Interval& B, const Interval& C, std::uint64_t q) {
    Interval qq{double(q)};
    if (!(B.lo() > 0)) throw domain_error("trig_b_over_sin_rhs: B must be positive");
    Interval arg = C * pow(euler_e_interval(), 3) * qq / (B * pi_interval());
    // max(2, log t) over t in arg: [2, max(2, log sup)]
    double hi = arg.hi() > 1.0 ? std::max(2.0, log(Interval(arg.hi())).hi()) : 2.0;
    double lo = arg.lo() > 1.0 ? std::max(2.0, log(Interval(arg.lo())).lo()) : 2.0;
    Interval mx(lo, hi);
    return 2.0 * B * qq / pi_interval() * mx;
}

Interval quadratic_decay_rhs(const Interval& c0norm, const Interval& sin_pi_alpha) {
    return 0.25 * c0norm / square(sin_pi_alpha);
}

Interval ls_block_rhs(double A0, double A1, std::uint64_t q, double Q, double W, double Wp,
                      const Interval& sum_logp_sq, bool odd_m) {
    double k = odd_m ? std::min(2.0 * double(q), Q) : std::min(double(q), std::ceil(Q / 2.0));
    double blocks = std::ceil((A1 - A0) / k);
    return Interval(blocks) * (Interval(W) - Wp + 2.0 * double(q)) * sum_logp_sq;
}

Interval ls_prime_support_rhs(double A0, double A1, std::uint64_t q, double W,
                              const Interval& sum_logp_sq, bool odd_m) {
    double denom = odd_m ? 2.0 * double(q) : double(q);
    double blocks = std::ceil((A1 - A0) / denom);
    Interval ratio = Interval(double(q)) / double(phi_of(q));
    return Interval(blocks) * ratio * Interval(W) / log(Interval(W) / (2.0 * double(q))) *
           sum_logp_sq;
}

Interval ls_single_block_rhs(double varrho, double rho, std::uint64_t q, double W, double Wp,
                             const Interval& sum_logp_sq) {
    return (Interval(W) - Wp + double(q) / (Interval(1.0) - varrho * rho)) * sum_logp_sq;
}

Interval ls_kraken_garn1b_rhs(double x, double W, double Wp, std::uint64_t q, double rho,
                              const Interval& sum_logp_sq) {
    (void)Wp;
    Interval m = max(Interval(1.0), Interval(2.0 * rho));
    return (m * (Interval(x) / (8.0 * double(q)) + Interval(x) / (2.0 * W)) + Interval(W) / 2.0 +
            2.0 * double(q)) *
           sum_logp_sq;
}

Interval ls_kraken_garn1a_rhs(double x, double W, double Wp, std::uint64_t q,
                              const Interval& sum_logp_sq) {
    (void)Wp;
    Interval phi(double(phi_of(q)));
    Interval lg = log(Interval(W) / (2.0 * double(q)));
    return (Interval(x) / (4.0 * phi) / lg +
            Interval(double(q)) / phi * Interval(W) / lg) *
           sum_logp_sq;
}

Interval ls_kraken_gargamel_rhs(double x, double W, double Wp, std::uint64_t q,
                                const Interval& sum_logp_sq) {
    (void)Wp;
    Interval denom = Interval(1.0) - Interval(x) / (4.0 * W * double(q));
    if (!(denom.lo() > 0)) throw domain_error("gargamel: needs W > x/4q");
    return (Interval(W) / 2.0 + double(q) / denom) * sum_logp_sq;
}

Interval ls_kraken_procida2_rhs(double x, double W, double Wp, std::uint64_t q, double delta,
                                const Interval& sum_logp_sq) {
    (void)Wp;
    Interval dq = Interval(std::fabs(delta)) * double(q);
    Interval arg = Interval(x) / dq / (double(q) + Interval(x) / (4.0 * W));
    if (!(arg.lo() > 1.0)) throw domain_error("procida2: log argument <= 1");
    Interval ratio = Interval(2.0) * double(q) / double(phi_of(q)) / log(arg);
    return min(Interval(1.0), ratio) * (Interval(x) / dq + Interval(W) / 2.0) * sum_logp_sq;
}

Interval ls_kraken_procida3_rhs(double x, double W, double Wp, std::uint64_t q, double delta,
                                double rho, double Qarc, const Interval& sum_logp_sq) {
    (void)Wp;
    Interval dq = Interval(std::fabs(delta)) * double(q);
    Interval one_m_rho = Interval(1.0) - rho;
    if (!(one_m_rho.lo() > 0)) throw domain_error("procida3: rho must be < 1");
    return (Interval(x) / dq + Interval(W) / 2.0 + Interval(x) / (8.0 * one_m_rho * Qarc) +
            Interval(x) / (4.0 * one_m_rho * W)) *
           sum_logp_sq;
}

// ------------------------------------------------------ type I lemma RHSes

namespace {

const Interval kEtaP1 = 8.0 * log2_interval();  // |eta2'|_1

struct TypeICommon {
    Interval x, q, d0abs, Q0, D, c1;
    double Mq;  // floor(M/q) with M = min(Q0/2, D)
};

}  // namespace

Interval bosta1_rhs(const TypeILemmaInput& in) {
    const Constants& cs = Constants::table();
    Interval x(in.x), q(double(in.q)), D(in.D);
    Interval c2 = cs.c2_b1;
    Interval c1 = 1.0 + kEtaP1 / (2.0 * x / D);
    double M = std::min(in.Q0 / 2.0, in.D);
    std::uint64_t Mq = std::uint64_t(M / double(in.q));
    Interval musum = abs(mu_over_m_sum(Mq, in.q));
    Interval dd(std::fabs(in.delta));
    Interval pi = pi_interval(), pi2 = square(pi);
    Interval main =
        x / q * min(Interval(1.0), cs.c0 / square(2.0 * pi * max(dd, Interval(1e-300)))) * musum;
    if (in.delta == 0) main = x / q * musum;
    Interval err0 = cs.c0 * (Interval(0.25) - 1.0 / pi2) *
                    (square(D) / (2.0 * x * q) + D / (2.0 * x));
    Interval base = main + err0;
    bool small_delta = std::fabs(in.delta) <= (Interval(1.0) / (2.0 * c2)).lo() || in.D <= in.Q0 / 2.0;
    if (small_delta) {
        Interval tail = 2.0 * sqrt(cs.c0 * c1) / pi * D +
                        3.0 * c1 * x / q * logplus(D / (c2 * x / q)) +
                        sqrt(cs.c0 * c1) / pi * q * logplus(D / (q / 2.0)) +
                        kEtaP1 / pi * q *
                            max(Interval(2.0),
                                log(cs.c0 * pow(euler_e_interval(), 3) * square(q) /
                                    (4.0 * pi * kEtaP1 * x))) +
                        (2.0 * sqrt(3.0 * cs.c0 * c1) / pi + 3.0 * c1 / c2 +
                         55.0 * cs.c0 * c2 / (12.0 * pi2)) *
                            q;
        return base + tail;
    }
    Interval eps(in.eps);
    Interval varpi = sqrt(3.0 + 2.0 * eps) +
                     ((1.0 + sqrt13_over_3()) / 4.0 - 1.0) / (2.0 * (1.0 + eps));
    Interval xdq = x / (dd * q);
    Interval mn = min(Interval(std::floor(xdq.lo())) + 1.0, 2.0 * D);
    Interval tail = 2.0 * sqrt(cs.c0 * c1) / pi *
                        (D + (1.0 + eps) * mn * (varpi + 0.5 * logplus(2.0 * D / xdq))) +
                    3.0 * c1 * (2.0 + (1.0 + eps) / eps * logplus(2.0 * D / xdq)) * x / in.Q0 +
                    35.0 * cs.c0 * c2 / (6.0 * pi2) * q;
    return base + tail;
}

Interval bosta2_rhs(const TypeILemmaInput& in) {
    const Constants& cs = Constants::table();
    Interval x(in.x), q(double(in.q)), D(in.D);
    Interval c2 = cs.c2;
    Interval c1 = 1.0 + kEtaP1 / (x / D);
    double M = std::min(in.Q0 / 2.0, in.D);
    std::uint64_t Mq = std::uint64_t(M / double(in.q));
    Interval pi = pi_interval(), pi2 = square(pi);
    Interval main(0.0);
    if (in.q % 2 == 1) {
        Interval musum = abs(mu_over_m_sum(Mq, 2 * in.q));
        Interval dd(std::fabs(in.delta));
        main = x / (2.0 * q) *
               (in.delta == 0
                    ? Interval(1.0)
                    : min(Interval(1.0), cs.c0 / square(pi * max(dd, Interval(1e-300))))) *
               musum;
    }
    Interval err0 = cs.c0 * q / x * (Interval(0.125) - 1.0 / (2.0 * pi2)) * square(D / q + 1.0);
    Interval base = main + err0;
    bool small_delta = std::fabs(in.delta) <= (Interval(1.0) / (2.0 * c2)).lo() || in.D <= in.Q0 / 2.0;
    if (small_delta) {
        Interval tail = 2.0 * sqrt(cs.c0 * c1) / pi * D +
                        1.5 * c1 * x / q * logplus(D / (c2 * x / q)) +
                        sqrt(cs.c0 * c1) / pi * q * logplus(D / (q / 2.0)) +
                        2.0 * kEtaP1 / pi * q *
                            max(Interval(1.0),
                                log(cs.c0 * pow(euler_e_interval(), 3) * square(q) /
                                    (4.0 * pi * kEtaP1 * x))) +
                        (2.0 * sqrt(3.0 * cs.c0 * c1) / pi + 3.0 * c1 / (2.0 * c2) +
                         55.0 * cs.c0 * c2 / (6.0 * pi2)) *
                            q;
        return base + tail;
    }
    Interval eps(in.eps);
    Interval dd(std::fabs(in.delta));
    Interval xdq = x / (dd * q);
    Interval mn = min(Interval(std::floor(xdq.lo())) + 1.0, 2.0 * D);
    Interval tail = 2.0 * sqrt(cs.c0 * c1) / pi *
                        (D + (1.0 + eps) * mn *
                                 (sqrt(3.0 + 2.0 * eps) + 0.5 * logplus(2.0 * D / xdq))) +
                    1.5 * c1 * (2.0 + (1.0 + eps) / eps * logplus(2.0 * D / xdq)) * x / in.Q0 +
                    35.0 * cs.c0 * c2 / (3.0 * pi2) * q;
    return base + tail;
}

Interval bostb1_rhs(const TypeILemmaInput& in) {
    const Constants& cs = Constants::table();
    Interval x(in.x), q(double(in.q)), D(in.D);
    Interval c2 = cs.c2;
    Interval c1 = 1.0 + kEtaP1 / (x / D);
    double M = std::min(in.Q0 / 2.0, in.D);
    std::uint64_t Mq = std::uint64_t(M / double(in.q));
    Interval pi = pi_interval(), pi2 = square(pi);
    Interval e = euler_e_interval();
    Interval main(0.0);
    if (in.q % 2 == 1) {
        Interval mls = abs(mu_log_sum(Mq, in.q, in.x));
        Interval mus = abs(mu_over_m_sum(Mq, 2 * in.q));
        Interval dd(std::fabs(in.delta));
        Interval f1 = in.delta == 0
                          ? Interval(1.0)
                          : min(Interval(1.0), (cs.c0 / square(dd)) / square(2.0 * pi));
        // |(log.eta2)^(-delta)| <= min(2 - log4, c0''/delta^2)
        Interval f2 = in.delta == 0
                          ? Interval(2.0) - log(Interval(4.0))
                          : min(Interval(2.0) - log(Interval(4.0)), cs.c0pp / square(dd));
        main = x / q * f1 * mls + x / q * f2 * mus;
    }
    Interval err0 = cs.c0 * (Interval(0.5) - 2.0 / pi2) *
                    (square(D) / (4.0 * q * x) * log(sqrt(e) * x / D) + 1.0 / e);
    Interval base = main + err0;
    bool small_delta = std::fabs(in.delta) <= (Interval(1.0) / (2.0 * c2)).lo() || in.D <= in.Q0 / 2.0;
    if (small_delta) {
        Interval tail =
            2.0 * sqrt(cs.c0 * c1) / pi * D * log(e * x / D) +
            1.5 * c1 * x / q * logplus(D / (c2 * x / q)) * log(q / c2) +
            (2.0 * kEtaP1 / pi *
                 max(Interval(1.0),
                     log(cs.c0 * pow(e, 3) * square(q) / (4.0 * pi * kEtaP1 * x))) *
                 log(x) +
             2.0 * sqrt(cs.c0 * c1) / pi * (sqrt(Interval(3.0)) + 0.5 * logplus(D / (q / 2.0))) *
                 log(q / c2)) *
                q +
            1.5 * c1 * sqrt(2.0 * x / c2) * log(2.0 * x / c2) +
            20.0 * cs.c0 * pow(c2, Interval(1.5)) / (3.0 * pi2) * sqrt(2.0 * x) *
                log(2.0 * sqrt(e) * x / c2);
        return base + tail;
    }
    Interval eps(in.eps);
    Interval dd(std::fabs(in.delta));
    Interval xdq = x / (dd * q);
    Interval tail =
        2.0 * sqrt(cs.c0 * c1) / pi * D * log(e * x / D) +
        2.0 * sqrt(cs.c0 * c1) / pi * (1.0 + eps) * (xdq + 1.0) *
            (sqrt(3.0 + 2.0 * eps) * logplus(2.0 * sqrt(e) * dd * q) +
             0.5 * logplus(2.0 * D / xdq) * logplus(2.0 * dd * q)) +
        (0.75 * c1 * (2.0 / sqrt(Interval(5.0)) + (1.0 + eps) / (2.0 * eps) * log(x)) +
         Interval(40.0) / 3.0 * sqrt(Interval(2.0)) * cs.c0 * pow(c2, Interval(1.5))) *
            sqrt(x) * log(x);
    return base + tail;
}

Interval bogus_rhs(const TypeILemmaInput& in) {
    const Constants& cs = Constants::table();
    Interval x(in.x), q(double(in.q));
    Interval U(in.U), V(in.V);
    Interval D = U * V;
    Interval c2 = cs.c2;
    Interval c1 = 1.0 + kEtaP1 / (2.0 * x / D);
    Interval c4(1.03884);
    Interval pi = pi_interval(), pi2 = square(pi);
    Interval e = euler_e_interval();
    Interval dd(std::fabs(in.delta));
    Interval main(0.0);
    if (in.q % 2 == 1) {
        Interval f = in.delta == 0
                         ? Interval(1.0)
                         : min(Interval(1.0), cs.c0 / square(pi * max(dd, Interval(1e-300))));
        main = x / (2.0 * q) * f * log(V * q);
    }
    Interval err0 = (Interval(0.25) - 1.0 / pi2) * cs.c0 *
                    (square(D) * log(V) / (2.0 * q * x) + 1.5 * c4 * U * square(V) / x +
                     square(U + 1.0) * V / (2.0 * x) * log(q));
    Interval base = main + err0;
    bool small_delta = std::fabs(in.delta) <= (Interval(1.0) / (2.0 * c2)).lo() ||
                       (U * V).hi() <= in.Q0 / 2.0;
    if (small_delta) {
        Interval tail =
            2.0 * sqrt(cs.c0 * c1) / pi *
                (D * log(D / sqrt(e)) +
                 q * (sqrt(Interval(3.0)) * log(c2 * x / q) +
                      log(D) / 2.0 * logplus(D / (q / 2.0)))) +
            1.5 * c1 * x / q * log(D) * logplus(D / (c2 * x / q)) +
            2.0 * kEtaP1 / pi * q *
                max(Interval(1.0),
                    log(cs.c0 * pow(e, 3) * square(q) / (4.0 * pi * kEtaP1 * x))) *
                log(q / 2.0) +
            1.5 * c1 / sqrt(2.0 * c2) * sqrt(x) * log(c2 * x / 2.0) +
            25.0 * cs.c0 / (4.0 * pi2) * pow(2.0 * c2, Interval(1.5)) * sqrt(x) * log(x);
        return base + tail;
    }
    Interval eps(in.eps);
    Interval xdq = x / (dd * q);
    Interval tail =
        2.0 * sqrt(cs.c0 * c1) / pi * D * log(D / e) +
        2.0 * sqrt(cs.c0 * c1) / pi * (1.0 + eps) * (xdq + 1.0) *
            ((sqrt(3.0 + 2.0 * eps) - 1.0) * log((xdq + 1.0) / sqrt(Interval(2.0))) +
             0.5 * log(D) * logplus(square(e) * D / xdq)) +
        (1.5 * c1 * (Interval(0.5) + 3.0 * (1.0 + eps) / (16.0 * eps) * log(x)) +
         20.0 * cs.c0 / (3.0 * pi2) * pow(2.0 * c2, Interval(1.5))) *
            sqrt(x) * log(x);
    return base + tail;
}

// ------------------------------------ named type I / type II evaluators

Interval guanaco_C0(double delta, double eps) {
    const Constants& cs = Constants::table();
    bool small = std::fabs(delta) <= (Interval(1.0) / (2.0 * cs.c2)).lo();
    if (small) return cs.c4I2 + cs.c9I2;
    return cs.c4I2 + (1.0 + Interval(eps)) * cs.c13I2;
}

Interval typeI_SI1_bound(double x, std::uint64_t q, double delta) {
    // eq (therwald): first-choice instantiation of the S_I1 lemma bound.
    const Constants& cs = Constants::table();
    Interval ix(x);
    Interval iq{double(q)};
    Interval lx = log(ix);
    double d0 = std::max(2.0, std::fabs(delta) / 4.0);
    Interval t = Interval(d0) * iq;
    Interval ratio = iq / double(phi_of(q));
    Interval f = delta == 0.0
                     ? Interval(1.0)
                     : min(Interval(1.0), cs.c0p / square(Interval(std::fabs(delta))));
    return ix / iq * f *
               min(ratio * (Interval(1.75) * log(t) + Interval(6.11676)),
                   Interval(0.5) * lx + Interval(5.65787)) +
           pow(ix, Interval(2.0) / 3.0) / sqrt(t) *
               (Interval(0.67845) * lx - Interval(1.20818)) +
           Interval(0.0507) * pow(ix, Interval(2.0) / 3.0);
}

Interval typeII_Phi(double x, double q, double U, double V, double theta) {
    // eq (cocot); 0 when the integration range is empty (2 theta q > x/U).
    Interval ix(x), iq(q), iU(U), iV(V), th(theta);
    if ((2.0 * th * iq).lo() > (ix / iU).hi()) return Interval(0.0);
    if (q <= (iV / (2.0 * th)).lo()) {
        return log(2.0 * iq) * log(1.0 + log(ix / (iU * iV)) / log(iV / (2.0 * iq)));
    }
    return log(2.0 * iq) * (log(log(ix / (2.0 * iU * iq))) - log(log(th)));
}

// -------------------------------------------------- second choice totals

namespace {

Interval hust_ratio(double xv, double qv) {
    const Constants& cs = Constants::table();
    Interval x(xv), q(qv);
    Interval x13 = pow(x, Interval(1.0) / 3.0);
    Interval V = x13 / 3.0, U = 500.0 * sqrt(Interval(6.0)) * x13;
    Interval y = x13 / 6.0;
    Interval th = square(euler_e_interval());
    Interval t1 = x * sqrt(digamma_majorant(qv)) / sqrt(2.0 * q) *
                  sqrt((log(x / (U * 2.0 * th * q)) +
                        log(2.0 * q) * log(log(x / (2.0 * U * q)) / log(th))) *
                       (cs.k6 * log(x / (U * 2.0 * th * q)) + 2.0 * cs.k7));
    Interval t2 = sqrt(Interval(2.0)) * cs.k2 * sqrt(digamma_majorant((x / (2.0 * th * U)).mid())) *
                  (1.0 + Interval(1.15) * sqrt(log(x / (th * U)) / 2.0)) * x / sqrt(U);
    Interval t3 = (cs.k2 * sqrt(log(x / U)) + cs.k9) * x / sqrt(V);
    Interval t4 = cs.k2 / 6.0 *
                  (pow(log(th * y / 2.0), Interval(1.5)) - pow(log(y), Interval(1.5))) * x / sqrt(y);
    Interval t5 = cs.k2 *
                  (sqrt(2.0 * th * log(x / U)) +
                   Interval(2.0) / 3.0 * (pow(log(x / U), Interval(1.5)) - pow(log(V), Interval(1.5)))) *
                  x / sqrt(2.0 * th * U);
    Interval den = pow(x, Interval(5.0) / 6.0) * pow(log(x), Interval(1.5));
    return (t1 + t2 + t3 + t4 + t5) / den;
}

Interval vinland3_ratio(double xv) {
    const Constants& cs = Constants::table();
    Interval x(xv);
    Interval x13 = pow(x, Interval(1.0) / 3.0);
    Interval V = x13 / 3.0, U = 500.0 * sqrt(Interval(6.0)) * x13;
    Interval Q = x / U;
    Interval th = square(euler_e_interval());
    Interval q_lo = x / (2.0 * th * U);  // range endpoints: decreasing + increasing parts
    Interval base = (cs.k2 * sqrt(2.0 * log(x / U)) + cs.k9) * x / sqrt(V) +
                    cs.k2 * sqrt(log(x / U)) * x / sqrt(U);
    Interval bracket = 2.0 * cs.k2 / 3.0 *
                       (pow(log(x / U), Interval(1.5)) - pow(log(V), Interval(1.5))) *
                       (x / (2.0 * sqrt(2.0 * q_lo)) + sqrt(Q * x));
    Interval den = pow(x, Interval(5.0) / 6.0) * pow(log(x), Interval(1.5));
    return (base + bracket) / den;
}

Interval vinlandsaga_ratio(double xv) {
    const Constants& cs = Constants::table();
    Interval x(xv);
    Interval x13 = pow(x, Interval(1.0) / 3.0);
    Interval V = x13 / 3.0, U = 500.0 * sqrt(Interval(6.0)) * x13;
    Interval Q = x / U;
    Interval y = x13 / 6.0;
    Interval th = square(euler_e_interval());
    // the printed instantiation pins |delta q| at its y-multiples
    Interval t1 = 2.0 * x * sqrt(digamma_majorant(y.mid())) / sqrt(8.0 * y) *
                  sqrt((log(x / (U * th * 8.0 * y)) +
                        log(3.0 * y) * log(log(x / (3.0 * U * y)) / log(8.0 * th / 3.0))) *
                       (cs.k6 * log(x / (U * th * 2.0 * y)) + 2.0 * cs.k7));
    Interval t2 = 2.0 * cs.k2 / 3.0 *
                  (x / sqrt(16.0 * y) *
                       (pow(log(8.0 * th * y), Interval(1.5)) - pow(log(y), Interval(1.5))) +
                   x / 4.0 / sqrt(Q - y) *
                       (pow(log(th * U), Interval(1.5)) - pow(log(y), Interval(1.5))));
    Interval t3 = (cs.k2 / sqrt(2.0 * (1.0 - y / Q)) * (sqrt(log(V)) + sqrt(1.0 / log(V))) + cs.k9) *
                  x / sqrt(V);
    Interval t4 = cs.k2 * sqrt(2.0 * digamma_majorant(y.mid())) *
                  sqrt(log(th * U) / log(8.0 * th / 3.0)) * x / sqrt(U);
    Interval den = pow(x, Interval(5.0) / 6.0) * pow(log(x), Interval(1.5));
    return (t1 + t2 + t3 + t4) / den;
}

}  // namespace

SecondChoiceReport second_choice_totals(double xv) {
    const Constants& cs = Constants::table();
    SecondChoiceReport rep;
    Interval x(xv);
    Interval lx = log(x);
    Interval x13 = pow(x, Interval(1.0) / 3.0);
    Interval x23 = pow(x, Interval(2.0) / 3.0);
    Interval x56 = pow(x, Interval(5.0) / 6.0);
    Interval V = x13 / 3.0, U = 500.0 * sqrt(Interval(6.0)) * x13;
    Interval Q = x / U;
    Interval y = x13 / 6.0;
    Interval pi = pi_interval(), pi2 = square(pi);
    Interval e = euler_e_interval();
    Interval c1(1.0000028), c2 = cs.c2, c4(1.03884);

    // S_I1: (lavapie) instantiated; worst case q >= y (or the delta factor
    // already kills the x/q term at the same rate).
    Interval sI1 = x / y * ((Interval(2.0) / 3.0) * lx - log(500.0 * sqrt(Interval(6.0))) +
                            cs.c3I + cs.c4I * digamma_majorant(Q.mid())) +
                   (cs.c7I * log(Q / c2) + cs.c8I * lx * log(cs.c11I * square(Q) / x)) * Q +
                   cs.c10I * square(U) / (4.0 * x) * log(sqrt(e) * x23 / (500.0 * sqrt(Interval(6.0)))) +
                   cs.c10I / e +
                   (cs.c5I * log(1000.0 * sqrt(Interval(6.0)) * x13 / c2) +
                    cs.c6I * log(500.0 * sqrt(Interval(6.0)) * pow(x, Interval(4.0) / 3.0))) *
                       500.0 * sqrt(Interval(6.0)) * x13 +
                   cs.c9I * sqrt(x) * log(2.0 * x / c2);
    rep.sI1 = sI1;
    rep.printed_sI1 = (Interval(4.1982) * lx + Interval(0.001063) * square(lx)) * x23;

    // S_I2: (cupcake3) instantiated plus max of the two branch tails.
    Interval D = U * V;
    Interval common = x / (2.0 * y) * log(x13 * y / 3.0) +
                      cs.c0 * (Interval(0.25) - 1.0 / pi2) *
                          (square(D) * log(x13 / 3.0) / (2.0 * x) +
                           1.5 * c4 * 500.0 * sqrt(Interval(6.0)) / 9.0 +
                           square(500.0 * sqrt(Interval(6.0)) * x13 + 1.0) * x13 / (3.0 * x));
    Interval small_tail =
        2.0 * sqrt(cs.c0 * c1) / pi *
            (D * log(D / sqrt(e)) +
             Q * (sqrt(Interval(3.0)) * log(c2 * x / Q) + log(D) / 2.0 * log(D / (Q / 2.0)))) +
        1.5 * c1 * x / y * log(D) * logplus(D / (c2 * x / y)) +
        16.0 * log2_interval() / pi * Q *
            log(cs.c0 * pow(e, 3) * square(Q) / (4.0 * pi * 8.0 * log2_interval() * x)) *
            log(Q / 2.0) +
        1.5 * c1 / sqrt(2.0 * c2) * sqrt(x) * log(c2 * x / 2.0) +
        25.0 * cs.c0 / (4.0 * pi2) * pow(2.0 * c2, Interval(1.5)) * sqrt(x) * lx;
    Interval eps(0.01);
    Interval xdq = x / (y / (2.0 * c2));  // |delta q| > y/(2 c2)
    Interval large_tail =
        2.0 * sqrt(cs.c0 * c1) / pi * D * log(D / e) +
        (1.0 + eps) * 2.0 * sqrt(cs.c0 * c1) / pi * (xdq + 1.0) *
            ((sqrt(3.0 + 2.0 * eps) - 1.0) * log((xdq + 1.0) / sqrt(Interval(2.0))) +
             0.5 * log(D) * logplus(square(e) * D / xdq)) +
        (1.5 * c1 * (Interval(0.5) + 3.0 * (1.0 + eps) / (16.0 * eps) * lx) +
         20.0 * cs.c0 / (3.0 * pi2) * pow(2.0 * c2, Interval(1.5))) *
            sqrt(x) * lx;
    rep.sI2 = common + max(small_tail, large_tail);
    rep.printed_sI2 = (Interval(1213.15) * lx + Interval(0.0006406) * square(lx)) * x23;

    // S_II: the three cases.
    Interval sII_ratio = max(hust_ratio(xv, y.mid()),
                             max(vinland3_ratio(xv), vinlandsaga_ratio(xv)));
    rep.sII = sII_ratio * x56 * pow(lx, Interval(1.5));
    rep.printed_sII = Interval(0.272652) * x56 * pow(lx, Interval(1.5));

    rep.total = rep.sI1 + rep.sI2 + rep.sII;
    rep.printed_total = Interval(0.27266) * x56 * pow(lx, Interval(1.5)) +
                        Interval(1217.35) * x23 * lx;
    rep.sI1_dominated = rep.sI1.hi() <= rep.printed_sI1.lo();
    rep.sI2_dominated = rep.sI2.hi() <= rep.printed_sI2.lo();
    rep.sII_dominated = rep.sII.hi() <= rep.printed_sII.lo();
    Interval printed_sum = rep.printed_sI1 + rep.printed_sI2 + rep.printed_sII;
    rep.total_dominated = rep.total.hi() <= rep.printed_total.lo();
    rep.printed_sum_dominated = printed_sum.hi() <= rep.printed_total.lo();
    Interval rounded = Interval(0.2727) * x56 * pow(lx, Interval(1.5)) +
                       Interval(1218.0) * x23 * lx;
    rep.rounded_dominates = 0.2727 >= 0.27266 && 1218.0 >= 1217.35 &&
                            rounded.lo() >= rep.printed_total.hi();
    return rep;
}

}  // namespace minarc
