// SPDX-License-Identifier: Apache-2.0

#include "minarc/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "minarc/certify.hpp"

namespace minarc {

SmoothingFn SmoothingFn::eta2_log_scaled(double y) {
    if (!(y >= 4.0)) throw domain_error("eta2_log_scaled requires y >= 4");
    return {SmoothingKind::eta2_log_scaled, y};
}

namespace {

// eta2 on (1/4,1/2]: 4 log(4t), on [1/2,1): -4 log t; 0 outside.
Interval eta2_eval(const Interval& t) {
    Interval out(0.0, 0.0);
    bool any = false;
    auto merge = [&](const Interval& piece) {
        out = any ? Interval::hull(out, piece) : piece;
        any = true;
    };
    if (t.lo() <= 0.25 || t.hi() >= 1.0) merge(Interval(0.0));
    double a1 = std::max(t.lo(), 0.25), b1 = std::min(t.hi(), 0.5);
    if (a1 <= b1) merge(4.0 * log(4.0 * Interval(a1, b1)));
    double a2 = std::max(t.lo(), 0.5), b2 = std::min(t.hi(), 1.0);
    if (a2 <= b2) merge(-4.0 * log(Interval(a2, b2)));
    if (!any) return Interval(0.0);
    double peak = (4.0 * log2_interval()).hi();
    return Interval(std::max(out.lo(), 0.0), std::min(out.hi(), peak));
}

Interval eta1_eval(const Interval& t) {
    bool inside = t.lo() > 0.5 && t.hi() <= 1.0;
    bool outside = t.hi() <= 0.5 || t.lo() > 1.0;
    if (inside) return Interval(2.0);
    if (outside) return Interval(0.0);
    return Interval(0.0, 2.0);
}

}  // namespace

Interval eval(const SmoothingFn& f, const Interval& t) {
    switch (f.kind) {
        case SmoothingKind::eta2:
            return eta2_eval(t);
        case SmoothingKind::eta1:
            return eta1_eval(t);
        case SmoothingKind::eta2_log_scaled: {
            if (t.hi() <= 0.25 || t.lo() >= 1.0) return Interval(0.0);
            Interval tt(std::max(t.lo(), 0.25), std::min(t.hi(), 1.0));
            Interval v = log(Interval(f.scale_y) * tt) * eta2_eval(tt);
            if (t.lo() <= 0.25 || t.hi() >= 1.0) v = Interval::hull(v, Interval(0.0));
            return v;
        }
        case SmoothingKind::log_times_eta2: {
            if (t.hi() <= 0.25 || t.lo() >= 1.0) return Interval(0.0);
            Interval tt(std::max(t.lo(), 0.25), std::min(t.hi(), 1.0));
            Interval v = log(tt) * eta2_eval(tt);
            if (t.lo() <= 0.25 || t.hi() >= 1.0) v = Interval::hull(v, Interval(0.0));
            return v;
        }
    }
    throw domain_error("unknown smoothing kind");
}

Interval norm(const SmoothingFn& f, NormKind which) {
    const Interval log2 = log2_interval();
    switch (f.kind) {
        case SmoothingKind::eta2:
            switch (which) {
                case NormKind::L1: return Interval(1.0);
                case NormKind::L1_of_derivative: return 8.0 * log2;
                case NormKind::L1_of_second_derivative: return Interval(48.0);
            }
            break;
        case SmoothingKind::log_times_eta2:
            switch (which) {
                case NormKind::L1: return Interval(2.0) - log(Interval(4.0));
                case NormKind::L1_of_second_derivative: return 96.0 * log2;
                default: break;
            }
            break;
        case SmoothingKind::eta2_log_scaled: {
            Interval ly = log(Interval(f.scale_y));
            switch (which) {
                case NormKind::L1: return Interval(0.0, ly.hi());
                case NormKind::L1_of_derivative:
                    // exact: 2 log(rho/2) eta2(1/2) = 8 log 2 log(rho/2)
                    return 8.0 * log2 * log(Interval(f.scale_y) / 2.0);
                case NormKind::L1_of_second_derivative:
                    return Interval(0.0, (48.0 * ly).hi());
            }
            break;
        }
        default:
            break;
    }
    throw not_available_error("no closed-form norm for this (function, norm) pair");
}

Interval convolution_check(const Interval& t, int quadrature_budget, double tol) {
    if (!(t.lo() > 0.0 && t.hi() < 2.0)) throw domain_error("convolution_check needs t inside (0,2)");
    // integrand = 4/u on u in (max(1/2,t), min(1,2t)); zero outside.
    Interval lo_b = max(Interval(0.5), t);
    Interval hi_b = min(Interval(1.0), 2.0 * t);
    if (hi_b.hi() <= lo_b.lo()) return Interval(0.0);
    // Certain inner piece plus boundary slack |4/u| <= 8 times endpoint widths.
    double a = lo_b.hi(), b = hi_b.lo();
    Interval inner(0.0);
    if (b > a) {
        int n = quadrature_budget + (quadrature_budget & 1);
        if (n < 2) n = 2;
        // |(4/u)''''| = 96/u^5 <= 96*32 on [1/2,1].
        Interval d4(0.0, 96.0 * 32.0);
        double remainder = std::pow(b - a, 5) * d4.hi() / (180.0 * std::pow(double(n), 4));
        if (remainder > tol) throw precision_error("convolution_check: quadrature budget too small");
        inner = simpson_certified([](const Interval& u) { return Interval(4.0) / u; }, a, b, n, d4);
    }
    double slack = detail::add_up(8.0 * lo_b.width(), 8.0 * hi_b.width());
    return Interval(detail::add_down(inner.lo(), -slack), detail::add_up(inner.hi(), slack));
}

}  // namespace minarc
