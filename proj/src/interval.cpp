// SPDX-License-Identifier: Apache-2.0

#include "minarc/interval.hpp"

#include <algorithm>

#include "minarc/dd.hpp"

namespace minarc {

namespace {

// pi/2, pi, 2pi as double-double; tail error of each is < 2^-107.
constexpr double kPio2Hi = 0x1.921fb54442d18p+0;
constexpr double kPio2Lo = 0x1.1a62633145c07p-54;
constexpr double kPiHi = 0x1.921fb54442d18p+1;
constexpr double kPiLo = 0x1.1a62633145c07p-53;
constexpr double kDdPiTail = 0x1.0p-105;  // conservative |pi_dd - pi| bound

// libm faithful-rounding slack for exp/log/sin/cos/asin/atan (glibc
// documents <= 2 ulp for these; we take 2 ulp everywhere).
constexpr int kLibmUlps = 2;

Interval widen_abs(const Interval& a, double eps) {
    return Interval(detail::add_down(a.lo(), -eps), detail::add_up(a.hi(), eps));
}

// sin at the double-double point r (|r| <= pi/2 + eps), abs_err covers
// unmodeled reduction error.
Interval sin_kernel(const DD& r, double abs_err) {
    double s = std::sin(r.hi);
    double c = std::cos(r.hi);
    // sin(r.hi + r.lo) = sin(r.hi) + r.lo cos(r.hi) + O(r.lo^2)
    double corr = r.lo * c;
    Interval out = Interval::with_ulps(s, kLibmUlps) + Interval::with_ulps(corr, 2);
    double quad = r.lo * r.lo;  // |O(r.lo^2)| <= r.lo^2/2, rounded up below
    out = widen_abs(out, abs_err + quad);
    return Interval(std::max(-1.0, out.lo()), std::min(1.0, out.hi()));
}

Interval cos_kernel(const DD& r, double abs_err) {
    double s = std::sin(r.hi);
    double c = std::cos(r.hi);
    double corr = -r.lo * s;
    Interval out = Interval::with_ulps(c, kLibmUlps) + Interval::with_ulps(corr, 2);
    double quad = r.lo * r.lo;
    out = widen_abs(out, abs_err + quad);
    return Interval(std::max(-1.0, out.lo()), std::min(1.0, out.hi()));
}

// x - k*(pi/2) in double-double, plus a bound on the neglected pi tail.
void reduce_pio2(double x, double& k_out, DD& r, double& err) {
    double k = std::nearbyint(x * (2.0 / kPiHi));
    DD kp = DD::from_prod(k, kPio2Hi);
    DD t = DD::from_sum(x, -kp.hi);
    t = t + (-kp.lo);
    t = t + (-k * kPio2Lo);
    // k * kPio2Lo is inexact by at most ulp of itself; fold in with pi tail.
    err = std::fabs(k) * (kDdPiTail + 0x1.0p-106);
    k_out = k;
    r = t;
}

// Point sin(x) for |x| within the supported reduction range (~1e8 is fine;
// the project needs ~1e4).
Interval sin_point(double x) {
    double k;
    DD r;
    double err;
    reduce_pio2(x, k, r, err);
    long long kk = static_cast<long long>(std::fmod(k, 4.0));
    if (kk < 0) kk += 4;
    switch (kk) {
        case 0: return sin_kernel(r, err);
        case 1: return cos_kernel(r, err);
        case 2: return -sin_kernel(r, err);
        default: return -cos_kernel(r, err);
    }
}

Interval cos_point(double x) {
    double k;
    DD r;
    double err;
    reduce_pio2(x, k, r, err);
    long long kk = static_cast<long long>(std::fmod(k, 4.0));
    if (kk < 0) kk += 4;
    switch (kk) {
        case 0: return cos_kernel(r, err);
        case 1: return -sin_kernel(r, err);
        case 2: return -cos_kernel(r, err);
        default: return sin_kernel(r, err);
    }
}

// sin(pi a) for a in [0, 1/2], a exact.
Interval sinpi_fold(double a) {
    DD r = DD::from_prod(a, kPiHi);
    r = r + a * kPiLo;
    return sin_kernel(r, std::fabs(a) * kDdPiTail);
}

// Point sinpi(u) for u in [-1, 1].
Interval sinpi_point(double u) {
    double s = 1.0;
    double a = u;
    if (a < 0) { s = -1.0; a = -a; }
    if (a > 0.5) a = 1.0 - a;  // exact for a in [1/2, 1]
    Interval v = sinpi_fold(a);
    return s < 0 ? -v : v;
}

Interval cospi_point(double u) {
    double a = std::fabs(u);
    if (a <= 0.5) {
        DD r = DD::from_prod(a, kPiHi);
        r = r + a * kPiLo;
        return cos_kernel(r, a * kDdPiTail);
    }
    double b = 1.0 - a;  // exact
    DD r = DD::from_prod(b, kPiHi);
    r = r + b * kPiLo;
    return -cos_kernel(r, b * kDdPiTail);
}

// u = x - 2k with k = nearbyint(x/2); exact for |x| < 2^52.
double reduce_mod2(double x, double& k) {
    k = std::nearbyint(x * 0.5);
    return x - 2.0 * k;
}

}  // namespace

Interval square(const Interval& a) {
    using namespace detail;
    if (a.lo() >= 0) return Interval(mul_down(a.lo(), a.lo()), mul_up(a.hi(), a.hi()));
    if (a.hi() <= 0) return Interval(mul_down(a.hi(), a.hi()), mul_up(a.lo(), a.lo()));
    return Interval(0.0, std::max(mul_up(a.lo(), a.lo()), mul_up(a.hi(), a.hi())));
}

Interval abs(const Interval& a) {
    if (a.lo() >= 0) return a;
    if (a.hi() <= 0) return -a;
    return Interval(0.0, std::max(-a.lo(), a.hi()));
}

Interval min(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval max(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval sqrt(const Interval& a) {
    if (a.lo() < 0) throw domain_error("sqrt of interval with negative lower endpoint");
    return Interval(detail::sqrt_down(a.lo()), detail::sqrt_up(a.hi()));
}

Interval log(const Interval& a) {
    if (a.lo() <= 0) throw domain_error("log of interval with non-positive endpoint");
    double lo = std::log(a.lo()), hi = std::log(a.hi());
    for (int i = 0; i < kLibmUlps; ++i) { lo = detail::next_down(lo); hi = detail::next_up(hi); }
    if (a.lo() == 1.0) lo = std::max(lo, 0.0);
    if (a.hi() == 1.0) hi = std::min(hi, 0.0);
    return Interval(lo, hi);
}

Interval exp(const Interval& a) {
    double lo = std::exp(a.lo()), hi = std::exp(a.hi());
    for (int i = 0; i < kLibmUlps; ++i) { lo = detail::next_down(lo); hi = detail::next_up(hi); }
    lo = std::max(lo, 0.0);
    if (!std::isfinite(hi)) throw domain_error("exp overflow");
    return Interval(lo, hi);
}

Interval asin(const Interval& a) {
    if (a.lo() < -1.0 || a.hi() > 1.0) throw domain_error("asin argument outside [-1,1]");
    double lo = std::asin(a.lo()), hi = std::asin(a.hi());
    for (int i = 0; i < kLibmUlps; ++i) { lo = detail::next_down(lo); hi = detail::next_up(hi); }
    return Interval(lo, hi);
}

Interval atan(const Interval& a) {
    double lo = std::atan(a.lo()), hi = std::atan(a.hi());
    for (int i = 0; i < kLibmUlps; ++i) { lo = detail::next_down(lo); hi = detail::next_up(hi); }
    return Interval(lo, hi);
}

Interval sin(const Interval& a) {
    const double two_pi_lo = 2.0 * 3.14159265358979;  // slightly below 2 pi
    if (a.width() >= two_pi_lo) return Interval(-1.0, 1.0);
    Interval out = Interval::hull(sin_point(a.lo()), sin_point(a.hi()));
    // Critical points x = (m + 1/2) pi inside [lo, hi].
    double m0 = std::floor(a.lo() / kPiHi - 0.5) - 1;
    for (double m = m0; m <= m0 + 4; ++m) {
        DD c = DD::from_prod(m + 0.5, kPiHi);
        c = c + (m + 0.5) * kPiLo;
        double slack = std::fabs(m + 0.5) * kDdPiTail + 0x1.0p-50;
        if (c.hi + c.lo >= a.lo() - slack && c.hi + c.lo <= a.hi() + slack) {
            long long mi = static_cast<long long>(m);
            if (((mi % 2) + 2) % 2 == 0) out = Interval::hull(out, Interval(1.0));
            else out = Interval::hull(out, Interval(-1.0));
        }
    }
    return Interval(std::max(out.lo(), -1.0), std::min(out.hi(), 1.0));
}

Interval cos(const Interval& a) {
    const double two_pi_lo = 2.0 * 3.14159265358979;
    if (a.width() >= two_pi_lo) return Interval(-1.0, 1.0);
    Interval out = Interval::hull(cos_point(a.lo()), cos_point(a.hi()));
    // Critical points x = m pi.
    double m0 = std::floor(a.lo() / kPiHi) - 1;
    for (double m = m0; m <= m0 + 4; ++m) {
        DD c = DD::from_prod(m, kPiHi);
        c = c + m * kPiLo;
        double slack = std::fabs(m) * kDdPiTail + 0x1.0p-50;
        if (c.hi + c.lo >= a.lo() - slack && c.hi + c.lo <= a.hi() + slack) {
            long long mi = static_cast<long long>(m);
            if (((mi % 2) + 2) % 2 == 0) out = Interval::hull(out, Interval(1.0));
            else out = Interval::hull(out, Interval(-1.0));
        }
    }
    return Interval(std::max(out.lo(), -1.0), std::min(out.hi(), 1.0));
}

Interval sinpi(const Interval& x) {
    if (x.width() >= 2.0) return Interval(-1.0, 1.0);
    double k;
    double u0 = reduce_mod2(x.lo(), k);
    double u1 = x.hi() - 2.0 * k;  // same k: exact, u1 in [u0, u0 + 2)
    Interval out = Interval::hull(sinpi_point(u0 <= 1.0 ? u0 : u0 - 2.0),
                                  sinpi_point(u1 <= 1.0 ? u1 : u1 - 2.0));
    for (double c : {-3.5, -1.5, 0.5, 2.5}) {  // sinpi = +1 at 0.5 mod 2
        if (c >= u0 && c <= u1) out = Interval::hull(out, Interval(1.0));
    }
    for (double c : {-2.5, -0.5, 1.5, 3.5}) {  // sinpi = -1
        if (c >= u0 && c <= u1) out = Interval::hull(out, Interval(-1.0));
    }
    return Interval(std::max(out.lo(), -1.0), std::min(out.hi(), 1.0));
}

Interval cospi(const Interval& x) {
    if (x.width() >= 2.0) return Interval(-1.0, 1.0);
    double k;
    double u0 = reduce_mod2(x.lo(), k);
    double u1 = x.hi() - 2.0 * k;
    Interval out = Interval::hull(cospi_point(u0 <= 1.0 ? u0 : u0 - 2.0),
                                  cospi_point(u1 <= 1.0 ? u1 : u1 - 2.0));
    for (double c : {-4.0, -2.0, 0.0, 2.0}) {  // cospi = +1 at 0 mod 2
        if (c >= u0 && c <= u1) out = Interval::hull(out, Interval(1.0));
    }
    for (double c : {-3.0, -1.0, 1.0, 3.0}) {  // cospi = -1
        if (c >= u0 && c <= u1) out = Interval::hull(out, Interval(-1.0));
    }
    return Interval(std::max(out.lo(), -1.0), std::min(out.hi(), 1.0));
}

Interval pow(const Interval& a, int k) {
    if (k < 0) return Interval(1.0) / pow(a, -k);
    if (k == 0) return Interval(1.0);
    Interval result(1.0);
    Interval base = a;
    bool first = true;
    int n = k;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n > 0) base = square(base);
    }
    return result;
}

Interval pow(const Interval& a, const Interval& y) {
    return exp(y * log(a));
}

Interval pi_interval() {
    return Interval(kPiHi, detail::next_up(kPiHi));
}

Interval log2_interval() {
    return Interval::with_ulps(0x1.62e42fefa39efp-1, 1);
}

Interval euler_e_interval() {
    return Interval::with_ulps(0x1.5bf0a8b145769p+1, 1);
}

ComplexInterval unit_phase(const Interval& t) {
    Interval two_t = t + t;
    return ComplexInterval(cospi(two_t), sinpi(two_t));
}

}  // namespace minarc
