// SPDX-License-Identifier: Apache-2.0
//
// Rigorous interval arithmetic with double endpoints.
//
// Containment contract: every operation returns an interval that contains
// the exact real result for all points of the operand intervals.
//
// Outward rounding is done by next-float adjustment after round-to-nearest
// ops, steered by the exact residual from TwoSum/TwoProd/fma. This keeps
// point results exact when the double op is exact (no fenv access, no
// global rounding state, safe under threads). See tools/bench_rounding.cpp
// for the measured cost against fesetround-based directed rounding.

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace minarc {

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// s = fl(a+b), err exact (Knuth).
inline double two_sum_err(double a, double b, double s) {
    double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

// Directed results of a+b without fenv.
inline double add_down(double a, double b) {
    double s = a + b;
    double e = two_sum_err(a, b, s);
    return e < 0 ? next_down(s) : s;
}
inline double add_up(double a, double b) {
    double s = a + b;
    double e = two_sum_err(a, b, s);
    return e > 0 ? next_up(s) : s;
}
inline double mul_down(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return e < 0 ? next_down(p) : p;
}
inline double mul_up(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return e > 0 ? next_up(p) : p;
}
// Residual sign of a/b: true quotient q* satisfies sign(q* - q) = sign(a - q*b)*sign(b).
inline double div_down(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return q;
    double r = -std::fma(q, b, -a);  // a - q*b, exact
    if ((r < 0) != (b < 0) && r != 0) return next_down(q);
    return q;
}
inline double div_up(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return q;
    double r = -std::fma(q, b, -a);
    if ((r > 0) != (b < 0) && r != 0) return next_up(q);
    return q;
}
inline double sqrt_down(double a) {
    double r = std::sqrt(a);
    double e = std::fma(r, r, -a);  // r^2 - a
    return e > 0 ? next_down(r) : r;
}
inline double sqrt_up(double a) {
    double r = std::sqrt(a);
    double e = std::fma(r, r, -a);
    return e < 0 ? next_up(r) : r;
}

}  // namespace detail

// Closed interval [lo, hi], finite endpoints, lo <= hi.
class Interval {
  public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(double point) : lo_(point), hi_(point) { check(); }
    Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

    static Interval point(double v) { return Interval(v); }
    // Smallest interval around v after widening by n ulps on each side.
    static Interval with_ulps(double v, int n) {
        double lo = v, hi = v;
        for (int i = 0; i < n; ++i) { lo = detail::next_down(lo); hi = detail::next_up(hi); }
        return Interval(lo, hi);
    }
    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    double width() const { return detail::add_up(hi_, -lo_); }
    double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
    // Smallest absolute value over the interval.
    double mig() const { return lo_ > 0 ? lo_ : hi_ < 0 ? -hi_ : 0; }

    bool contains(double v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    Interval operator-() const { return Interval(-hi_, -lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(detail::add_down(a.lo_, b.lo_), detail::add_up(a.hi_, b.hi_));
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(detail::add_down(a.lo_, -b.hi_), detail::add_up(a.hi_, -b.lo_));
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        using namespace detail;
        double lo, hi;
        if (a.lo_ >= 0) {
            if (b.lo_ >= 0)      { lo = mul_down(a.lo_, b.lo_); hi = mul_up(a.hi_, b.hi_); }
            else if (b.hi_ <= 0) { lo = mul_down(a.hi_, b.lo_); hi = mul_up(a.lo_, b.hi_); }
            else                 { lo = mul_down(a.hi_, b.lo_); hi = mul_up(a.hi_, b.hi_); }
        } else if (a.hi_ <= 0) {
            if (b.lo_ >= 0)      { lo = mul_down(a.lo_, b.hi_); hi = mul_up(a.hi_, b.lo_); }
            else if (b.hi_ <= 0) { lo = mul_down(a.hi_, b.hi_); hi = mul_up(a.lo_, b.lo_); }
            else                 { lo = mul_down(a.lo_, b.hi_); hi = mul_up(a.lo_, b.lo_); }
        } else {
            if (b.lo_ >= 0)      { lo = mul_down(a.lo_, b.hi_); hi = mul_up(a.hi_, b.hi_); }
            else if (b.hi_ <= 0) { lo = mul_down(a.hi_, b.lo_); hi = mul_up(a.lo_, b.lo_); }
            else {
                lo = std::min(mul_down(a.lo_, b.hi_), mul_down(a.hi_, b.lo_));
                hi = std::max(mul_up(a.lo_, b.lo_), mul_up(a.hi_, b.hi_));
            }
        }
        return Interval(lo, hi);
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        using namespace detail;
        if (b.contains_zero()) throw domain_error("interval division by interval containing 0");
        double lo, hi;
        if (b.lo_ > 0) {
            if (a.lo_ >= 0)      { lo = div_down(a.lo_, b.hi_); hi = div_up(a.hi_, b.lo_); }
            else if (a.hi_ <= 0) { lo = div_down(a.lo_, b.lo_); hi = div_up(a.hi_, b.hi_); }
            else                 { lo = div_down(a.lo_, b.lo_); hi = div_up(a.hi_, b.lo_); }
        } else {
            if (a.lo_ >= 0)      { lo = div_down(a.hi_, b.hi_); hi = div_up(a.lo_, b.lo_); }
            else if (a.hi_ <= 0) { lo = div_down(a.hi_, b.lo_); hi = div_up(a.lo_, b.hi_); }
            else                 { lo = div_down(a.hi_, b.hi_); hi = div_up(a.lo_, b.hi_); }
        }
        return Interval(lo, hi);
    }

    friend Interval operator+(const Interval& a, double b) { return a + Interval(b); }
    friend Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
    friend Interval operator-(const Interval& a, double b) { return a - Interval(b); }
    friend Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
    friend Interval operator*(const Interval& a, double b) { return a * Interval(b); }
    friend Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
    friend Interval operator/(const Interval& a, double b) { return a / Interval(b); }
    friend Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

    Interval& operator+=(const Interval& o) { *this = *this + o; return *this; }
    Interval& operator-=(const Interval& o) { *this = *this - o; return *this; }
    Interval& operator*=(const Interval& o) { *this = *this * o; return *this; }
    Interval& operator/=(const Interval& o) { *this = *this / o; return *this; }

    // Certainly-true comparisons (false means "not provable", not "false").
    bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
    bool certainly_le(const Interval& o) const { return hi_ <= o.lo_; }
    bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }
    bool certainly_ge(const Interval& o) const { return lo_ >= o.hi_; }

  private:
    double lo_, hi_;
    void check() const {
        assert(std::isfinite(lo_) && std::isfinite(hi_) && lo_ <= hi_);
    }
};

// x^2 as a single op (tighter than x*x when 0 is inside).
Interval square(const Interval& a);
Interval abs(const Interval& a);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);
Interval exp(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval asin(const Interval& a);
Interval atan(const Interval& a);
// sin(pi x), cos(pi x) with exact-period argument reduction (x mod 2 in
// double-double); preferred whenever the argument is naturally a multiple
// of pi, e.g. e(t) evaluations.
Interval sinpi(const Interval& x);
Interval cospi(const Interval& x);
// Integer power by repeated squaring; keeps even-power positivity.
Interval pow(const Interval& a, int k);
// Real power via exp(y log a); requires a.lo > 0.
Interval pow(const Interval& a, const Interval& y);

Interval pi_interval();
Interval log2_interval();    // log 2
Interval euler_e_interval(); // e

// Max over potential log(x)/atan rounding: libm faithful + documented slack.
// (glibc log/exp/sin/cos/atan are <= 1-2 ulp; we widen by 2 ulp.)

struct ComplexInterval {
    Interval re, im;

    ComplexInterval() = default;
    ComplexInterval(Interval r, Interval i) : re(r), im(i) {}
    static ComplexInterval point(double r, double i) {
        return ComplexInterval(Interval(r), Interval(i));
    }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator*(const Interval& s, const ComplexInterval& z) {
        return {s * z.re, s * z.im};
    }
    friend ComplexInterval operator*(double s, const ComplexInterval& z) {
        return Interval(s) * z;
    }
    ComplexInterval& operator+=(const ComplexInterval& o) { *this = *this + o; return *this; }
    ComplexInterval& operator-=(const ComplexInterval& o) { *this = *this - o; return *this; }

    ComplexInterval conj() const { return {re, -im}; }
    Interval norm2() const { return square(re) + square(im); }
    Interval abs() const { return minarc::sqrt(norm2()); }
    bool contains(double r, double i) const { return re.contains(r) && im.contains(i); }
};

// e(t) = e^{2 pi i t}.
ComplexInterval unit_phase(const Interval& t);

}  // namespace minarc
