// SPDX-License-Identifier: Apache-2.0
//
// Midpoint-radius complex enclosures. Iterated phase products wrap
// rectangular intervals (each multiply scales the box by |cos|+|sin|);
// discs are rotation-invariant, so the radius picks up only rounding
// slack per step. Conversions to and from box intervals are outward.

#pragma once

#include <cmath>

#include "minarc/interval.hpp"

namespace minarc {

struct Ball {
    double re = 0, im = 0, rad = 0;

    static Ball from(const ComplexInterval& z) {
        Ball b;
        b.re = z.re.mid();
        b.im = z.im.mid();
        b.rad = (z.re.width() + z.im.width()) * 0.5 + 1e-300;
        return b;
    }
    double mag_upper() const { return std::hypot(re, im) * (1 + 4e-16) + rad; }

    friend Ball operator*(const Ball& a, const Ball& b) {
        Ball c;
        c.re = a.re * b.re - a.im * b.im;
        c.im = a.re * b.im + a.im * b.re;
        double ma = std::hypot(a.re, a.im) * (1 + 4e-16);
        double mb = std::hypot(b.re, b.im) * (1 + 4e-16);
        c.rad = (a.rad * (mb + b.rad) + ma * b.rad +
                 4e-16 * (std::fabs(c.re) + std::fabs(c.im))) *
                (1 + 4e-16);
        return c;
    }

    ComplexInterval to_complex_interval() const {
        return ComplexInterval(Interval(detail::add_down(re, -rad), detail::add_up(re, rad)),
                               Interval(detail::add_down(im, -rad), detail::add_up(im, rad)));
    }
};

}  // namespace minarc
