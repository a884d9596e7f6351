// SPDX-License-Identifier: Apache-2.0
//
// The mu-cancellation machinery behind the type II main term:
//   g_v(x) = sum_{r1,r2<=x, (r1,r2)=1, (r1 r2, v)=1} mu(r1)mu(r2)/(sigma(r1)sigma(r2)),
// its reduced form g(x) = sum_d mu(d)/sigma(d)^2 (sum_{r<=x/d,(r,dv)=1} mu(r)/sigma(r))^2,
// the weight decomposition of the triple sum
//   sum_{s<=S,(s,v)=1} (1/s) int_{1/2}^1 g_v(uS/s) du = K_{v,1}(|S|) + K_{v,2}(|S|)/S,
// and the damping curves H_v with their integral bounds.
//
// The g table is built incrementally: per-divisor inner sums h_d gain the
// term r = x/d exactly when d | x, so the total work is O(X log X).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minarc/interval.hpp"

namespace minarc {

struct CancellationTable {
    int v = 2;  // 1 or 2
    std::uint32_t x_max = 0;
    std::vector<double> g_lo, g_hi;  // g_v(m) enclosure, index m

    Interval g(std::uint32_t x) const {
        if (x < 1 || x > x_max) throw domain_error("g_v: x outside table");
        return Interval(g_lo[x], g_hi[x]);
    }
};

CancellationTable build_g_table(int v, std::uint32_t x_max);

// Binary cache (versioned, keyed by (v, x_max)).
bool save_g_table(const CancellationTable& t, const std::string& path);
std::optional<CancellationTable> load_g_table(int v, std::uint32_t x_max, const std::string& path);

// Literal double sum over coprime pairs; O(x^2 log x), test oracle only.
Interval g_v_direct(int v, std::uint32_t x);

struct GBoundReport {
    bool ok = true;
    std::uint32_t first_failure = 0;
    Interval max_x_abs_g;        // max over the range of x |g_v(x)|
    std::uint32_t argmax = 0;
};
// Verifies |g_v(x)| <= c / x on [x_lo, x_hi] and reports max x |g_v(x)|.
GBoundReport g_bound_check(const CancellationTable& t, std::uint32_t x_lo, std::uint32_t x_hi,
                           double c);

// K1/K2 tables: G_v(S) = K1(floor S) + K2(floor S)/S equals the triple sum.
struct GCurve {
    int v = 2;
    std::uint32_t s_max = 0;
    std::vector<double> k1_lo, k1_hi, k2_lo, k2_hi;

    Interval k1(std::uint32_t n) const { return Interval(k1_lo[n], k1_hi[n]); }
    Interval k2(std::uint32_t n) const { return Interval(k2_lo[n], k2_hi[n]); }
};

GCurve build_g_curve(const CancellationTable& table, std::uint32_t s_max);

// G_v(S) via the K tables (S >= 0; exact 0 for S < 1).
Interval G_value(const GCurve& curve, double S);

// Direct evaluation of the triple sum via the explicit s-range weights;
// agrees with G_value (property-tested), used as the independent route.
Interval triple_sum_direct(const CancellationTable& table, double S);

// H_1 = (6/pi^2) G_1 for 1 <= S < 40 else 0.22125;
// H_2 = (4/pi^2) G_2 for 1 <= S < 16 else 0.15107.
Interval H_value(const GCurve& curve, double S);

struct IntegralCheck {
    bool ok = true;
    double worst_T = 0.0;
    Interval worst_ratio;  // sup over grid of integral / log T
};

// int_1^T G_v dS/S <= bound_coeff log T for T in [2, T_max] on the 1/N grid
// (checked against log of the left grid point, covering all real T).
IntegralCheck g_integral_check(const GCurve& curve, double T_max, int N, double bound_coeff);
// Same for int_1^T H_v dS/S.
IntegralCheck h_integral_check(const GCurve& curve, double T_max, int N, double bound_coeff);

}  // namespace minarc
