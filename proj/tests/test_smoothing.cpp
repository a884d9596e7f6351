// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "minarc/smoothing.hpp"

using namespace minarc;

TEST_CASE("eta2 pointwise values") {
    SmoothingFn f = SmoothingFn::eta2();
    Interval peak = eval(f, Interval(0.5));
    CHECK(peak.contains(4 * std::log(2.0)));
    CHECK(peak.width() < 1e-14);
    Interval left = eval(f, Interval(0.25));
    CHECK(left.lo() == 0.0);
    CHECK(left.hi() == 0.0);
    Interval right = eval(f, Interval(1.0));
    CHECK(right.lo() == 0.0);
    CHECK(right.hi() == 0.0);
    // direct substitution: eta2(3/4) = 4 log(4/3)
    Interval v = eval(f, Interval(0.75));
    CHECK(v.contains(4 * std::log(4.0 / 3.0)));
    // wide interval spanning the peak
    Interval w = eval(f, Interval(0.3, 0.9));
    CHECK(w.hi() >= 4 * std::log(2.0) - 1e-12);
    CHECK(w.lo() <= 4 * std::log(4 * 0.3) + 1e-12);
}

TEST_CASE("eta2 piecewise monotonicity on sampled grids") {
    SmoothingFn f = SmoothingFn::eta2();
    double prev = -1;
    for (int i = 1; i <= 50; ++i) {
        double t = 0.25 + i * (0.25 / 51);
        double v = eval(f, Interval(t)).lo();
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
    prev = 1e9;
    for (int i = 1; i <= 50; ++i) {
        double t = 0.5 + i * (0.5 / 51);
        double v = eval(f, Interval(t)).hi();
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("closed-form norms") {
    CHECK(norm(SmoothingFn::eta2(), NormKind::L1).contains(1.0));
    CHECK(norm(SmoothingFn::eta2(), NormKind::L1).is_point());
    CHECK(norm(SmoothingFn::eta2(), NormKind::L1_of_derivative).contains(8 * std::log(2.0)));
    CHECK(norm(SmoothingFn::eta2(), NormKind::L1_of_second_derivative).contains(48.0));
    Interval lg = norm(SmoothingFn::log_times_eta2(), NormKind::L1);
    CHECK(lg.contains(2.0 - std::log(4.0)));
    CHECK(norm(SmoothingFn::log_times_eta2(), NormKind::L1_of_second_derivative)
              .contains(96 * std::log(2.0)));
    CHECK_THROWS_AS(norm(SmoothingFn::eta1(), NormKind::L1), not_available_error);
    CHECK_THROWS_AS(norm(SmoothingFn::log_times_eta2(), NormKind::L1_of_derivative),
                    not_available_error);
}

TEST_CASE("log-scaled norms obey eq (2.7) on sampled rho") {
    for (double rho : {4.0, 10.0, 1e3, 1e6}) {
        SmoothingFn f = SmoothingFn::eta2_log_scaled(rho);
        Interval d = norm(f, NormKind::L1_of_derivative);
        // exact value 8 log2 log(rho/2) < (8 log 2) log rho
        CHECK(d.contains(8 * std::log(2.0) * std::log(rho / 2.0)));
        CHECK(d.hi() < 8 * std::log(2.0) * std::log(rho));
        CHECK(norm(f, NormKind::L1).hi() <= std::log(rho) * (1 + 1e-12));
    }
    CHECK_THROWS_AS(SmoothingFn::eta2_log_scaled(2.0), domain_error);
}

TEST_CASE("scaled and log-weighted evaluations") {
    SmoothingFn fy = SmoothingFn::eta2_log_scaled(10.0);
    // eta_{2,rho}(1/2) = log(rho/2) * 4 log 2
    Interval v = eval(fy, Interval(0.5));
    CHECK(v.contains(std::log(5.0) * 4 * std::log(2.0)));
    CHECK(eval(fy, Interval(0.1)).is_point());
    CHECK(eval(fy, Interval(0.1)).contains(0.0));
    SmoothingFn lt = SmoothingFn::log_times_eta2();
    // (log . eta2)(1/2) = -log 2 * 4 log 2
    CHECK(eval(lt, Interval(0.5)).contains(-std::log(2.0) * 4 * std::log(2.0)));
    CHECK(eval(lt, Interval(2.0)).contains(0.0));
}

TEST_CASE("convolution of eta1 with itself reproduces eta2") {
    SmoothingFn f = SmoothingFn::eta2();
    // boundary cases
    CHECK(convolution_check(Interval(0.125), 64).contains(0.0));
    Interval at_half = convolution_check(Interval(0.5), 400);
    CHECK(at_half.contains(4 * std::log(2.0)));
    Interval at_07 = convolution_check(Interval(0.7), 400);
    CHECK(at_07.intersects(eval(f, Interval(0.7))));
    // 100 sample points with width < 1e-9 on both sides
    for (int i = 1; i <= 100; ++i) {
        double t = 0.25 + 0.75 * i / 101.0;
        Interval conv = convolution_check(Interval(t), 400);
        Interval direct = eval(f, Interval(t));
        CHECK(conv.intersects(direct));
        CHECK(conv.width() < 1e-9);
        CHECK(direct.width() < 1e-9);
    }
    CHECK_THROWS_AS(convolution_check(Interval(0.5), 2, 1e-12), precision_error);
}
