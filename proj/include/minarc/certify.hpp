// SPDX-License-Identifier: Apache-2.0
//
// Certified global maxima of smooth periodic functions by grid sampling
// plus a curvature bound, certified composite Simpson quadrature, and the
// Fourier-norm certificates for eta2'' and its log-scaled variant.
//
// Grid rule: on [a,b] with both endpoints sampled,
//   max |f| <= max(|f(a)|, |f(b)|) + (1/8)(b-a)^2 sup|f''|.

#pragma once

#include <functional>
#include <limits>
#include <string>

#include "minarc/interval.hpp"

namespace minarc {

struct MaxCertificate {
    std::string name;
    double grid_step = 0.0;
    Interval curvature_bound;   // upper bound on |f''| used
    Interval sampled_max;       // enclosure of the grid maximum of |f|
    Interval certified_upper;   // sampled_max + grid error (upper end binds)
    double witness_point = 0.0; // grid point whose |f| lower bound is max
    Interval quadrature_error;  // largest per-point quadrature remainder

    // The certified claim: max |f| <= certified_upper.hi everywhere.
};

// Composite Simpson with the classical remainder
// (b-a)^5 d4 / (180 n^4) folded into the result interval. n must be even.
// f receives a (tiny) enclosure of each exact uniform node and must return
// an enclosure of f over it.
Interval simpson_certified(const std::function<Interval(const Interval&)>& f, double a, double b,
                           int n, const Interval& d4_bound);

struct GridMaxOptions {
    double t_begin = 0.0;
    int threads = 1;
    // If > 0 and certified_upper - sampled_max exceeds this, throw
    // precision_error with a suggested step.
    double tolerance = 0.0;
};

// Certified max of |f| over the reals for f periodic with the given period.
// d2_bound must dominate |f''| on one period (caller-supplied analytic fact).
MaxCertificate grid_max(const std::function<ComplexInterval(double)>& f, double period,
                        const Interval& d2_bound, double step, const GridMaxOptions& opt = {});

// g(t) = 4 e(-t/4) - 4 e(-t/2) + e(-t); |g''| <= 9 pi^2.
ComplexInterval appendix_g(const Interval& t);
// k(t) = 2 e(-t/4) - e(-t/2).
ComplexInterval appendix_k(const Interval& t);

// Transform of the absolutely continuous part of eta2'':
// f(x) = -4/x^2 on [1/4,1/2), +4/x^2 on [1/2,1); fhat(t) = int f(x) e(-xt) dx.
// Evaluated by composite Simpson per piece with base_subdiv*max(1,floor(sqrt|t|))
// subdivisions, raised as needed so the remainder stays below simpson_budget.
struct OscOptions {
    int base_subdiv = 200;
    double simpson_budget = 1e-4;
    // For |t| >= parts_threshold the transform switches from composite
    // Simpson to the exact integration-by-parts expansion (boundary terms
    // plus the |phi^(K)|_1/(2 pi t)^K remainder), which is both tighter
    // and O(K) per evaluation. Set to infinity for pure Simpson.
    double parts_threshold = std::numeric_limits<double>::infinity();
    int parts_terms = 12;
};
ComplexInterval eta2pp_fhat(double t, const OscOptions& opt = {});
// Transform of the a.c. part of (log . eta2)'' beyond -16 log2 k(t):
// h(x) = (4/x^2)(2 - 2 log 2x) on [1/4,1/2), (4/x^2)(-2 + 2 log x) on [1/2,1).
ComplexInterval log_eta2pp_hhat(double t, const OscOptions& opt = {});

struct FourierCertOptions {
    double grid_step = 1e-3;  // proof samples at 0.001 Z
    double t_split = 655.0;   // tail bound 80/(pi t) takes over beyond
    OscOptions osc;
    int threads = 1;
};

// |(eta2'')^|_inf <= 31.521 with sampled max >= 31.52 (the proof finds
// 31.52065...). Throws precision_error rather than weakening the bound.
MaxCertificate certify_eta2pp_fourier_norm(const FourierCertOptions& opt = {});

struct LogScaledCertOptions {
    double arg_grid_step = 5e-3;  // proof samples at 0.005 Z on I
    double small_grid_step = 1e-3;
    OscOptions osc{200, 2e-3, 40.0, 12};  // parts expansion beyond t = 40
    int threads = 1;
};

// |(eta_(y)'')^|_inf < 31.521 log y for every y >= 4, via the two-part
// argument comparison on I = [0.3, 2252.21] \ [3.25, 3.65], the separate
// treatment of [0,0.3] u [3.25,3.65], and the tail bound.
// The returned certificate's certified_upper is 31.521 * log(y).hi with
// supporting maxima recorded; throws precision_error on failure.
struct LogScaledCertResult {
    MaxCertificate cert;
    Interval max_arg_gap;        // sampled max of |arg(z1/z2)| on I
    Interval arg_bound_final;    // sampled max + perturbation terms, < pi/3
    Interval excluded_region_max;  // max over [0,0.3] u [3.25,3.65] combo, < 29.1
    Interval phase_g_over_k;     // max |arg(g/k)| over [-2,2], < 0.7
};
LogScaledCertResult certify_log_scaled_norm(double y, const LogScaledCertOptions& opt = {});

// Versioned key:value text serialization with hex-float endpoints.
void write_certificate(const std::string& path, const MaxCertificate& cert);
MaxCertificate read_certificate(const std::string& path);
// Re-check a stored certificate's internal consistency (grid error rule).
bool check_certificate(const MaxCertificate& cert);

}  // namespace minarc
