// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minarc/dd.hpp"
#include "minarc/interval.hpp"

using namespace minarc;

namespace {

// Higher-precision reference via double-double.
DD dd_mul(const DD& a, const DD& b) { return a * b; }

double ulp_of(double x) {
    return std::nextafter(std::fabs(x), 1e308) - std::fabs(x);
}

}  // namespace

TEST_CASE("endpoint arithmetic basics") {
    Interval a(1.0, 2.0), b(3.0, 4.0);
    Interval s = a + b;
    CHECK(s.lo() <= 4.0);
    CHECK(s.hi() >= 6.0);
    // identity case stays exact
    Interval z(0.0);
    Interval c(1.25, 2.5);
    Interval s2 = z + c;
    CHECK(s2.lo() == 1.25);
    CHECK(s2.hi() == 2.5);
}

TEST_CASE("division produces tight enclosures") {
    Interval third = Interval(1.0) / Interval(3.0);
    CHECK(third.contains(1.0 / 3.0));
    CHECK(third.width() <= 2 * ulp_of(1.0 / 3.0));
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), domain_error);
}

TEST_CASE("sqrt and log reference points") {
    Interval r = sqrt(Interval(2.0));
    CHECK(r.contains(1.4142135623730951));
    CHECK(r.width() <= 2 * ulp_of(std::sqrt(2.0)));
    Interval l = log(euler_e_interval());
    CHECK(l.contains(1.0));
    CHECK_THROWS_AS(log(Interval(0.0, 1.0)), domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-1.0, 1.0)), domain_error);
    CHECK_THROWS_AS(asin(Interval(0.5, 1.5)), domain_error);
}

TEST_CASE("sin over [0, pi] reaches the extremum") {
    Interval s = sin(Interval(0.0, 3.141592653589793));
    CHECK(s.hi() >= 1.0);
    CHECK(s.lo() <= 0.0);
    CHECK(s.lo() >= -1e-9);
    CHECK(s.hi() <= 1.0 + 1e-15);
}

TEST_CASE("unit phase at rational points") {
    ComplexInterval e0 = unit_phase(Interval(0.0));
    CHECK(e0.contains(1.0, 0.0));
    ComplexInterval e4 = unit_phase(Interval(0.25));
    CHECK(e4.contains(0.0, 1.0));
    ComplexInterval e3 = unit_phase(Interval(1.0) / 3.0);
    CHECK(e3.contains(-0.5, std::sqrt(3.0) / 2.0));
    CHECK(e3.re.width() < 1e-14);
}

TEST_CASE("containment under random operations") {
    std::mt19937_64 rng(987654321);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    const int kRounds = 100000;
    for (int i = 0; i < kRounds; ++i) {
        double a = u(rng), b = u(rng);
        DD ref;
        Interval r;
        switch (i % 4) {
            case 0: ref = DD::from_sum(a, b); r = Interval(a) + Interval(b); break;
            case 1: ref = DD::from_sum(a, -b); r = Interval(a) - Interval(b); break;
            case 2: ref = DD::from_prod(a, b); r = Interval(a) * Interval(b); break;
            default:
                if (std::fabs(b) < 1e-3) b = 1e-3;
                ref = DD::from_div(a, b);
                r = Interval(a) / Interval(b);
                break;
        }
        REQUIRE(r.lo() <= ref.hi + ref.lo);
        REQUIRE(r.hi() >= ref.hi + ref.lo);
    }
}

TEST_CASE("containment for elementary functions against long double") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(0.01, 50.0);
    for (int i = 0; i < 20000; ++i) {
        double a = u(rng);
        CHECK(log(Interval(a)).contains(double(std::log((long double)a))));
        CHECK(sqrt(Interval(a)).contains(double(std::sqrt((long double)a))));
        double t = u(rng) - 25.0;
        // the long-double references themselves carry ~1e-18 error, so the
        // containment check allows that slack (the intervals are tighter)
        auto near = [](const Interval& iv, long double ref, double tol) {
            return iv.lo() <= double(ref) + tol && iv.hi() >= double(ref) - tol;
        };
        CHECK(near(sin(Interval(t)), std::sin((long double)t), 1e-17));
        CHECK(near(cos(Interval(t)), std::cos((long double)t), 1e-17));
        long double red = std::fmod((long double)t, 2.0L);
        CHECK(near(sinpi(Interval(t)), std::sin(3.14159265358979323846L * red), 1e-17));
        CHECK(near(cospi(Interval(t)), std::cos(3.14159265358979323846L * red), 1e-17));
    }
}

TEST_CASE("width control for point inputs") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 2000; ++i) {
        double a = u(rng);
        Interval l = log(Interval(a));
        CHECK(l.width() <= 4 * ulp_of(l.mid()) + 1e-300);
        Interval e = exp(Interval(a * 0.1));
        CHECK(e.width() <= 4 * ulp_of(e.mid()));
        Interval s = sqrt(Interval(a));
        CHECK(s.width() <= 2 * ulp_of(s.mid()));
    }
}

TEST_CASE("algebraic containment of sums") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        Interval a(u(rng)), b(u(rng)), c(u(rng));
        Interval ab = a + b, ba = b + a;
        CHECK(ab.lo() == ba.lo());
        CHECK(ab.hi() == ba.hi());
        DD exact = DD::from_sum(a.lo(), b.lo()) + DD(c.lo());
        CHECK(((a + b) + c).contains(exact.hi + exact.lo));
        CHECK((a + (b + c)).contains(exact.hi + exact.lo));
    }
}

TEST_CASE("sin for large arguments stays contained") {
    for (double t : {1234.5678, 9876.54321, -10000.0, 31415.9}) {
        long double ref = std::sin((long double)t);  // itself ~|t| eps_L off
        Interval s = sin(Interval(t));
        CHECK(s.lo() <= double(ref) + 1e-14);
        CHECK(s.hi() >= double(ref) - 1e-14);
        CHECK(s.width() < 1e-13);
    }
}

TEST_CASE("pow integer and real") {
    Interval sq = pow(Interval(-2.0, 3.0), 2);
    CHECK(sq.lo() == 0.0);
    CHECK(sq.hi() >= 9.0);
    Interval p = pow(Interval(2.0), Interval(0.5));
    CHECK(p.contains(std::sqrt(2.0)));
}

TEST_CASE("double-double running sum error bound") {
    RunningSum s;
    for (int n = 1; n <= 100000; ++n) {
        DD term = DD::from_div(1.0, double(n));
        s.add(term, std::fabs(term.hi) * 0x1.0p-100);
    }
    // independent route: reverse-order double-double accumulation
    DD rev(0.0);
    for (int n = 100000; n >= 1; --n) rev = rev + DD::from_div(1.0, double(n));
    DD diff = s.value() - rev;
    CHECK(std::fabs(diff.hi + diff.lo) <= 2 * s.certified_error() + 1e-24);
    CHECK(s.certified_error() < 1e-15);
}
