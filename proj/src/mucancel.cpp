// SPDX-License-Identifier: Apache-2.0

#include "minarc/mucancel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

#include "minarc/dd.hpp"
#include "minarc/sieve.hpp"

namespace minarc {

namespace {

// Smallest-prime-factor table for divisor enumeration.
std::vector<std::uint32_t> spf_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> spf(std::size_t(n) + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] == 0)
            for (std::uint64_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

}  // namespace

CancellationTable build_g_table(int v, std::uint32_t x_max) {
    if (v != 1 && v != 2) throw domain_error("build_g_table: v must be 1 or 2");
    if (x_max < 1) throw domain_error("build_g_table: empty range");
    auto mu = mu_up_to(x_max);
    auto sigma = sigma_up_to(x_max);
    auto spf = spf_up_to(x_max);

    // h[d] = sum_{r <= x/d, gcd(r, d v)=1} mu(r)/sigma(r) as double-double;
    // weights w_d = mu(d)/sigma(d)^2 for square-free d coprime to v.
    std::vector<DD> h(std::size_t(x_max) + 1);
    DD total(0.0);
    double err = 0.0;  // certified bound on |total - exact|
    const double kEps = 0x1.0p-102;

    CancellationTable out;
    out.v = v;
    out.x_max = x_max;
    out.g_lo.assign(std::size_t(x_max) + 1, 0.0);
    out.g_hi.assign(std::size_t(x_max) + 1, 0.0);

    std::uint32_t prime_factors[10];
    for (std::uint32_t x = 1; x <= x_max; ++x) {
        // distinct primes of x
        int np = 0;
        std::uint32_t t = x;
        while (t > 1) {
            std::uint32_t p = spf[t];
            prime_factors[np++] = p;
            while (t % p == 0) t /= p;
        }
        // square-free divisors d of x (all 2^np subsets)
        for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
            std::uint64_t d = 1;
            for (int b = 0; b < np; ++b)
                if (mask & (1u << b)) d *= prime_factors[b];
            if (v == 2 && (d & 1) == 0) continue;  // gcd(d, v) = 1
            std::uint32_t r = std::uint32_t(x / d);
            if (mu[r] == 0) continue;
            if (v == 2 && (r & 1) == 0) continue;  // gcd(r, v) = 1
            if (std::gcd(std::uint64_t(r), d) != 1) continue;
            // update: total += w_d (2 h_d delta + delta^2); h_d += delta
            DD delta = DD::from_div(double(mu[r]), double(sigma[r]));
            DD& hd = h[std::size_t(d)];
            DD upd = (hd + hd + delta) * delta;
            // w_d = mu(d)/sigma(d)^2
            double sd = double(sigma[std::size_t(d)]);
            int mud = (d == 1) ? 1 : mu[std::size_t(d)];
            DD wd = DD::from_div(double(mud), sd * sd);  // sd^2 < 2^53 for d <= 1e6? see below
            // sigma(d)^2 may exceed 2^53; compute in two steps instead.
            if (sd * sd > 9.007e15) {
                wd = DD::from_div(double(mud), sd) / DD(sd);
            }
            DD contrib = wd * upd;
            total = total + contrib;
            hd = hd + delta;
            err += kEps * (std::fabs(total.hi) + std::fabs(contrib.hi) + std::fabs(hd.hi) + 1.0);
        }
        out.g_lo[x] = detail::add_down(total.hi, total.lo - err);
        out.g_hi[x] = detail::add_up(total.hi, total.lo + err);
    }
    return out;
}

bool save_g_table(const CancellationTable& t, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    const char magic[8] = {'m', 'n', 'a', 'g', 't', 'b', 'v', '2'};
    f.write(magic, 8);
    std::uint32_t hdr[2] = {std::uint32_t(t.v), t.x_max};
    f.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
    f.write(reinterpret_cast<const char*>(t.g_lo.data()), std::streamsize(t.g_lo.size() * 8));
    f.write(reinterpret_cast<const char*>(t.g_hi.data()), std::streamsize(t.g_hi.size() * 8));
    return bool(f);
}

std::optional<CancellationTable> load_g_table(int v, std::uint32_t x_max,
                                              const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    char magic[8];
    f.read(magic, 8);
    if (!f || std::memcmp(magic, "mnagtbv2", 8) != 0) return std::nullopt;
    std::uint32_t hdr[2];
    f.read(reinterpret_cast<char*>(hdr), sizeof hdr);
    if (!f || int(hdr[0]) != v || hdr[1] != x_max) return std::nullopt;
    CancellationTable t;
    t.v = v;
    t.x_max = x_max;
    t.g_lo.resize(std::size_t(x_max) + 1);
    t.g_hi.resize(std::size_t(x_max) + 1);
    f.read(reinterpret_cast<char*>(t.g_lo.data()), std::streamsize(t.g_lo.size() * 8));
    f.read(reinterpret_cast<char*>(t.g_hi.data()), std::streamsize(t.g_hi.size() * 8));
    if (!f) return std::nullopt;
    return t;
}

Interval g_v_direct(int v, std::uint32_t x) {
    auto mu = mu_up_to(x);
    auto sigma = sigma_up_to(x);
    RunningSum s;
    for (std::uint32_t r1 = 1; r1 <= x; ++r1) {
        if (mu[r1] == 0 || (v == 2 && (r1 & 1) == 0)) continue;
        for (std::uint32_t r2 = 1; r2 <= x; ++r2) {
            if (mu[r2] == 0 || (v == 2 && (r2 & 1) == 0)) continue;
            if (std::gcd(r1, r2) != 1) continue;
            DD term = DD::from_div(double(mu[r1] * mu[r2]),
                                   double(sigma[r1]) * double(sigma[r2]));
            s.add(term, std::fabs(term.hi) * 0x1.0p-99);
        }
    }
    DD val = s.value();
    double e = s.certified_error();
    return Interval(detail::add_down(val.hi, val.lo - e), detail::add_up(val.hi, val.lo + e));
}

GBoundReport g_bound_check(const CancellationTable& t, std::uint32_t x_lo, std::uint32_t x_hi,
                           double c) {
    // |g(x)| <= c/x for real x: g is constant on [m, m+1), so the binding
    // weight on [x_lo, x_hi] is sup x = m+1 (m at the right endpoint).
    GBoundReport rep;
    double best_lo = 0.0, best_hi = 0.0;
    for (std::uint32_t m = x_lo; m <= x_hi && m <= t.x_max; ++m) {
        double w = m < x_hi ? double(m) + 1.0 : double(m);
        Interval g = t.g(m);
        Interval xg = w * abs(g);
        if (xg.hi() > best_hi) best_hi = xg.hi();
        if (xg.lo() > best_lo) { best_lo = xg.lo(); rep.argmax = m; }
        if (rep.ok && !(xg.hi() <= c)) {
            rep.ok = false;
            rep.first_failure = m;
        }
    }
    rep.max_x_abs_g = Interval(best_lo, best_hi);
    return rep;
}

namespace {

struct CurveAcc {
    DD k1, k2;
    double err1 = 0.0, err2 = 0.0;
    static constexpr double kEps = 0x1.0p-102;

    // k1 += w * num/den (num = +-1, den = s or 2s)
    void add1(const Interval& w, double num, double den) {
        DD term = DD::from_div(num, den);
        DD t2 = term * DD(w.mid());
        k1 = k1 + t2;
        err1 += kEps * (std::fabs(k1.hi) + std::fabs(t2.hi)) +
                std::fabs(term.hi) * w.width() * 0.5 + std::fabs(t2.hi) * 0x1.0p-99;
    }
    // k2 += w * coeff (coeff a small exact integer)
    void add2(const Interval& w, double coeff) {
        DD t2 = DD(w.mid()) * coeff;
        k2 = k2 + t2;
        err2 += kEps * (std::fabs(k2.hi) + std::fabs(t2.hi)) +
                std::fabs(coeff) * w.width() * 0.5 + std::fabs(t2.hi) * 0x1.0p-99;
    }
};

}  // namespace

GCurve build_g_curve(const CancellationTable& table, std::uint32_t s_max) {
    if (s_max > table.x_max)
        throw domain_error("build_g_curve: s_max beyond the g table");
    GCurve out;
    out.v = table.v;
    out.s_max = s_max;
    out.k1_lo.assign(std::size_t(s_max) + 1, 0.0);
    out.k1_hi.assign(std::size_t(s_max) + 1, 0.0);
    out.k2_lo.assign(std::size_t(s_max) + 1, 0.0);
    out.k2_hi.assign(std::size_t(s_max) + 1, 0.0);

    const int v = table.v;
    CurveAcc acc;
    // The pair (s, m), gcd(s,v)=1, m >= 1, contributes
    //   A: N in [s m, s(m+1)-1]:  k1 += g(m)/s,   k2 -= g(m) m
    //   B: N in [s(m+1), 2sm-1]:  k2 += g(m)
    //   C: N in [2sm, 2s(m+1)-1]: k1 -= g(m)/(2s), k2 += g(m)(m+1)
    // Events at N: products s*m = N (A-entry m, A-exit/B-entry m-1) and,
    // for N even, s*m = N/2 (B-exit/C-entry m, C-exit m-1).
    auto apply_products = [&](std::uint32_t prod, bool half_events) {
        for (std::uint32_t s = 1; std::uint64_t(s) * s <= prod; ++s) {
            if (prod % s != 0) continue;
            std::uint32_t m1 = prod / s;
            // both (s, m1) and (m1, s) orderings
            std::uint32_t pair[2][2] = {{s, m1}, {m1, s}};
            int reps = (s == m1) ? 1 : 2;
            for (int i = 0; i < reps; ++i) {
                std::uint32_t ss = pair[i][0], mm = pair[i][1];
                if (v == 2 && (ss & 1) == 0) continue;
                if (!half_events) {
                    // A-entry of (ss, mm): mm >= 1
                    if (mm >= 1 && mm <= table.x_max) {
                        Interval g = table.g(mm);
                        acc.add1(g, 1.0, double(ss));
                        acc.add2(g, -double(mm));
                    }
                    // A-exit / B-entry of (ss, mm-1)
                    if (mm >= 2 && mm - 1 <= table.x_max) {
                        Interval g = table.g(mm - 1);
                        acc.add1(g, -1.0, double(ss));
                        acc.add2(g, double(mm - 1));
                        acc.add2(g, 1.0);
                    }
                } else {
                    // B-exit / C-entry of (ss, mm)
                    if (mm >= 1 && mm <= table.x_max) {
                        Interval g = table.g(mm);
                        acc.add2(g, -1.0);
                        acc.add1(g, -1.0, 2.0 * double(ss));
                        acc.add2(g, double(mm + 1));
                    }
                    // C-exit of (ss, mm-1)
                    if (mm >= 2 && mm - 1 <= table.x_max) {
                        Interval g = table.g(mm - 1);
                        acc.add1(g, 1.0, 2.0 * double(ss));
                        acc.add2(g, -double(mm));
                    }
                }
            }
        }
    };

    for (std::uint32_t n = 1; n <= s_max; ++n) {
        apply_products(n, false);
        if ((n & 1) == 0) apply_products(n / 2, true);
        out.k1_lo[n] = acc.k1.hi + acc.k1.lo - acc.err1;
        out.k1_hi[n] = acc.k1.hi + acc.k1.lo + acc.err1;
        out.k2_lo[n] = acc.k2.hi + acc.k2.lo - acc.err2;
        out.k2_hi[n] = acc.k2.hi + acc.k2.lo + acc.err2;
    }
    return out;
}

Interval G_value(const GCurve& curve, double S) {
    if (S < 1.0) return Interval(0.0);
    std::uint32_t n = std::uint32_t(std::floor(S));
    if (n > curve.s_max) throw domain_error("G_value: S beyond curve");
    return curve.k1(n) + curve.k2(n) / Interval(S);
}

Interval triple_sum_direct(const CancellationTable& table, double S) {
    if (S < 1.0) return Interval(0.0);
    const int v = table.v;
    std::uint32_t N = std::uint32_t(std::floor(S));
    Interval total(0.0);
    Interval iS(S);
    for (std::uint32_t m = 1; m <= N; ++m) {
        Interval g = table.g(m);
        Interval w(0.0);
        // s in (S/(m+1), S/m]: 1/s - m/S
        for (std::uint32_t s = N / (m + 1) == 0 ? 1 : N / (m + 1); s * std::uint64_t(m) <= N; ++s) {
            if (std::uint64_t(s) * m > N || std::uint64_t(s) * (m + 1) < N + 1) continue;
            if (v == 2 && (s & 1) == 0) continue;
            w += Interval(1.0) / Interval(double(s)) - Interval(double(m)) / iS;
        }
        // s in (S/2m, S/(m+1)]: 1/S
        for (std::uint32_t s = 1; std::uint64_t(s) * (m + 1) <= N; ++s) {
            if (2 * std::uint64_t(s) * m < N + 1) continue;
            if (v == 2 && (s & 1) == 0) continue;
            w += Interval(1.0) / iS;
        }
        // s in (S/2(m+1), S/2m]: (m+1)/S - 1/(2s)
        for (std::uint32_t s = 1; 2 * std::uint64_t(s) * m <= N; ++s) {
            if (2 * std::uint64_t(s) * (m + 1) < N + 1) continue;
            if (v == 2 && (s & 1) == 0) continue;
            w += Interval(double(m + 1)) / iS - Interval(1.0) / Interval(2.0 * s);
        }
        total += g * w;
    }
    return total;
}

Interval H_value(const GCurve& curve, double S) {
    Interval pi2 = square(pi_interval());
    if (curve.v == 1) {
        if (S < 1.0) return Interval(0.0);
        if (S < 40.0) return Interval(6.0) / pi2 * G_value(curve, S);
        return Interval(0.22125);
    }
    if (S < 1.0) return Interval(0.0);
    if (S < 16.0) return Interval(4.0) / pi2 * G_value(curve, S);
    return Interval(0.15107);
}

namespace {

// int over [a, b] within one floor-segment n of (k1 + k2/S) dS/S
Interval segment_integral(const GCurve& curve, std::uint32_t n, double a, double b) {
    Interval k1 = curve.k1(n), k2 = curve.k2(n);
    return k1 * log(Interval(b) / Interval(a)) + k2 * (Interval(1.0) / a - Interval(1.0) / b);
}

}  // namespace

IntegralCheck g_integral_check(const GCurve& curve, double T_max, int N, double bound_coeff) {
    IntegralCheck rep;
    rep.worst_ratio = Interval(0.0);
    Interval acc(0.0);  // integral over [1, n_done]
    std::uint32_t n_done = 1;
    double worst = -1.0;
    // Grid T = 2, 2+1/N, ...: the integral to T+1/N is compared against
    // bound_coeff*log T, covering all real endpoints up to T_max.
    long steps = lround((T_max - 2.0) * N);
    for (long i = 0; i <= steps; ++i) {
        double T = 2.0 + double(i) / N;
        double Tp = std::min(T + 1.0 / N, double(curve.s_max));
        while (double(n_done + 1) <= Tp) {
            acc += segment_integral(curve, n_done, double(n_done), double(n_done + 1));
            ++n_done;
        }
        Interval upto = acc;
        if (Tp > double(n_done)) upto += segment_integral(curve, n_done, double(n_done), Tp);
        Interval ratio = upto / log(Interval(T));
        if (ratio.hi() > worst) {
            worst = ratio.hi();
            rep.worst_T = T;
            rep.worst_ratio = ratio;
        }
        if (!(upto.hi() <= (Interval(bound_coeff) * log(Interval(T))).lo())) {
            rep.ok = false;
        }
    }
    return rep;
}

IntegralCheck h_integral_check(const GCurve& curve, double T_max, int N, double bound_coeff) {
    // H = c G below the knee, constant beyond: integrate piecewise exactly.
    Interval pi2 = square(pi_interval());
    Interval scale = (curve.v == 1 ? Interval(6.0) : Interval(4.0)) / pi2;
    double knee = curve.v == 1 ? 40.0 : 16.0;
    Interval flat = curve.v == 1 ? Interval(0.22125) : Interval(0.15107);

    IntegralCheck rep;
    rep.worst_ratio = Interval(0.0);
    Interval acc(0.0);
    std::uint32_t n_done = 1;
    double worst = -1.0;
    long steps = lround((T_max - 2.0) * N);
    for (long i = 0; i <= steps; ++i) {
        double T = 2.0 + double(i) / N;
        double Tp = T + 1.0 / N;
        Interval upto;
        if (Tp <= knee) {
            while (double(n_done + 1) <= Tp) {
                acc += segment_integral(curve, n_done, double(n_done), double(n_done + 1));
                ++n_done;
            }
            upto = acc;
            if (Tp > double(n_done)) upto += segment_integral(curve, n_done, double(n_done), Tp);
            upto = scale * upto;
        } else {
            while (double(n_done + 1) <= knee) {
                acc += segment_integral(curve, n_done, double(n_done), double(n_done + 1));
                ++n_done;
            }
            Interval below = acc;
            if (knee > double(n_done)) below += segment_integral(curve, n_done, double(n_done), knee);
            upto = scale * below + flat * log(Interval(Tp) / Interval(knee));
        }
        Interval ratio = upto / log(Interval(T));
        if (ratio.hi() > worst) {
            worst = ratio.hi();
            rep.worst_T = T;
            rep.worst_ratio = ratio;
        }
        if (!(upto.hi() <= (Interval(bound_coeff) * log(Interval(T))).lo())) rep.ok = false;
    }
    return rep;
}

}  // namespace minarc
