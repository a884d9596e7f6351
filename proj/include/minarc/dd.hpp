// SPDX-License-Identifier: Apache-2.0
//
// Double-double arithmetic (~106-bit mantissa) plus an error-tracked
// accumulator for certified long sums.
//
// Error model used by RunningSum: one double-double renormalized add of a
// double-double term contributes at most 4 * 2^-105 * (|sum| + |term|)
// to the accumulated error (Joldes-Muller-Popescu, Algorithm 6 bound
// rounded up), and term construction errors are added explicitly by the
// caller. The tracked bound is itself accumulated upward in double.

#pragma once

#include <cmath>
#include <cstdint>

namespace minarc {

namespace ddops {

// Knuth TwoSum: a + b = s + e exactly.
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

// Fast TwoSum, requires |a| >= |b| or a == 0.
inline void fast_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}

// a * b = p + e exactly (needs fma).
inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

}  // namespace ddops

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    static DD from_sum(double a, double b) {
        DD r;
        ddops::two_sum(a, b, r.hi, r.lo);
        return r;
    }
    static DD from_prod(double a, double b) {
        DD r;
        ddops::two_prod(a, b, r.hi, r.lo);
        return r;
    }
    // a / b to full dd precision (two Newton-style corrections).
    static DD from_div(double a, double b) {
        double q1 = a / b;
        double p, e;
        ddops::two_prod(q1, b, p, e);
        double r = ((a - p) - e);
        double q2 = r / b;
        DD out;
        ddops::fast_two_sum(q1, q2, out.hi, out.lo);
        return out;
    }

    double to_double() const { return hi + lo; }

    friend DD operator-(const DD& a) { return DD(-a.hi, -a.lo); }

    friend DD operator+(const DD& a, const DD& b) {
        double s1, e1, s2, e2;
        ddops::two_sum(a.hi, b.hi, s1, e1);
        ddops::two_sum(a.lo, b.lo, s2, e2);
        e1 += s2;
        ddops::fast_two_sum(s1, e1, s1, e1);
        e1 += e2;
        DD r;
        ddops::fast_two_sum(s1, e1, r.hi, r.lo);
        return r;
    }
    friend DD operator+(const DD& a, double b) {
        double s, e;
        ddops::two_sum(a.hi, b, s, e);
        e += a.lo;
        DD r;
        ddops::fast_two_sum(s, e, r.hi, r.lo);
        return r;
    }
    friend DD operator-(const DD& a, const DD& b) { return a + (-b); }
    friend DD operator-(const DD& a, double b) { return a + (-b); }

    friend DD operator*(const DD& a, const DD& b) {
        double p, e;
        ddops::two_prod(a.hi, b.hi, p, e);
        e += a.hi * b.lo + a.lo * b.hi;
        DD r;
        ddops::fast_two_sum(p, e, r.hi, r.lo);
        return r;
    }
    friend DD operator*(const DD& a, double b) {
        double p, e;
        ddops::two_prod(a.hi, b, p, e);
        e += a.lo * b;
        DD r;
        ddops::fast_two_sum(p, e, r.hi, r.lo);
        return r;
    }
    friend DD operator/(const DD& a, const DD& b) {
        double q1 = a.hi / b.hi;
        DD p = b * q1;
        DD d = a - p;
        double q2 = d.hi / b.hi;
        p = b * q2;
        d = d - p;
        double q3 = d.hi / b.hi;
        DD q;
        ddops::fast_two_sum(q1, q2, q.hi, q.lo);
        return q + q3;
    }

    friend bool operator<(const DD& a, const DD& b) {
        return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
    }
    friend bool operator>(const DD& a, const DD& b) { return b < a; }

    DD abs() const { return (hi < 0 || (hi == 0 && lo < 0)) ? -*this : *this; }
};

// Long accumulator: value as DD, plus a certified upper bound on
// |value - exact sum|. n_terms kept for reporting.
class RunningSum {
  public:
    void add(const DD& term, double term_err = 0.0) {
        sum_ = sum_ + term;
        // 4 * 2^-105 * (|sum| + |term|) covers the renormalized dd add.
        err_ += kAddEps * (std::fabs(sum_.hi) + std::fabs(term.hi)) + term_err;
        ++n_;
    }
    void add_exact_double(double term) { add(DD(term), 0.0); }

    DD value() const { return sum_; }
    double certified_error() const { return err_; }
    std::uint64_t n_terms() const { return n_; }

    void set(const DD& v, double err, std::uint64_t n) {
        sum_ = v;
        err_ = err;
        n_ = n;
    }

  private:
    static constexpr double kAddEps = 4.0 * 0x1.0p-105;
    DD sum_{};
    double err_ = 0.0;
    std::uint64_t n_ = 0;
};

}  // namespace minarc
