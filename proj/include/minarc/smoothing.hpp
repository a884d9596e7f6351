// SPDX-License-Identifier: Apache-2.0
//
// The smoothing weights eta2(t) = 4 max(log 2 - |log 2t|, 0),
// eta1 = 2 * 1_(1/2,1], the log-scaled eta_{2,rho}(t) = log(rho t) eta2(t)
// and log * eta2, with their closed-form norms.
//
// Convention: eta2 is exactly 0 at t <= 1/4 and t >= 1 (closed-left
// support choice; the max(.,0) form makes the closure immaterial for
// every integral we use).

#pragma once

#include <stdexcept>

#include "minarc/interval.hpp"

namespace minarc {

struct not_available_error : std::runtime_error {
    explicit not_available_error(const std::string& what) : std::runtime_error(what) {}
};

enum class SmoothingKind { eta2, eta1, eta2_log_scaled, log_times_eta2 };

enum class NormKind { L1, L1_of_derivative, L1_of_second_derivative };

struct SmoothingFn {
    SmoothingKind kind = SmoothingKind::eta2;
    double scale_y = 0.0;  // rho for eta2_log_scaled, >= 4

    static SmoothingFn eta2() { return {SmoothingKind::eta2, 0.0}; }
    static SmoothingFn eta1() { return {SmoothingKind::eta1, 0.0}; }
    static SmoothingFn eta2_log_scaled(double y);
    static SmoothingFn log_times_eta2() { return {SmoothingKind::log_times_eta2, 0.0}; }
};

// Pointwise enclosure of f over the interval t; exact 0 outside support.
Interval eval(const SmoothingFn& f, const Interval& t);

// Closed-form norms the literature gives; unsupported pairs throw
// not_available_error. For eta2_log_scaled, L1 and the second-derivative
// norm are the stated upper bounds (returned as [0, bound]); the
// derivative norm is the exact 2 log(rho/2) eta2(1/2).
Interval norm(const SmoothingFn& f, NormKind which);

// Certified value of the multiplicative self-convolution
// int_0^inf eta1(u) eta1(t/u) du/u at t; contains eta2(t).
// quadrature_budget = Simpson subintervals; throws precision_error when the
// remainder bound cannot reach `tol`.
Interval convolution_check(const Interval& t, int quadrature_budget, double tol = 1e-9);

}  // namespace minarc
