// SPDX-License-Identifier: Apache-2.0

#include "minarc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "minarc/ball.hpp"
#include "minarc/parallel.hpp"

namespace minarc {

Interval simpson_certified(const std::function<Interval(const Interval&)>& f, double a, double b,
                           int n, const Interval& d4_bound) {
    if (n < 2 || (n & 1)) throw domain_error("simpson_certified: n must be even and >= 2");
    Interval ia(a), ib(b);
    Interval h = (ib - ia) / double(n);
    Interval acc(0.0);
    for (int j = 0; j <= n; ++j) {
        double w = (j == 0 || j == n) ? 1.0 : (j & 1) ? 4.0 : 2.0;
        Interval xj = ia + double(j) * h;  // encloses the exact uniform node
        acc += w * f(xj);
    }
    Interval result = h / 3.0 * acc;
    double nn = double(n);
    Interval rem = pow(ib - ia, 5) * d4_bound / Interval(180.0 * nn * nn * nn * nn);
    double r = std::max(std::fabs(rem.lo()), std::fabs(rem.hi()));
    return Interval(detail::add_down(result.lo(), -r), detail::add_up(result.hi(), r));
}

MaxCertificate grid_max(const std::function<ComplexInterval(double)>& f, double period,
                        const Interval& d2_bound, double step, const GridMaxOptions& opt) {
    if (!(step > 0) || !(period > 0)) throw domain_error("grid_max: step and period must be positive");
    const std::size_t n_points = static_cast<std::size_t>(std::ceil(period / step)) + 1;
    const std::size_t chunk = 4096;
    const std::size_t n_chunks = (n_points + chunk - 1) / chunk;

    struct ChunkMax {
        double lo = -1.0, hi = -1.0, witness = 0.0;
    };
    std::vector<ChunkMax> maxima(n_chunks);
    parallel_chunks(n_chunks, opt.threads, [&](std::size_t c) {
        ChunkMax m;
        std::size_t i0 = c * chunk, i1 = std::min(i0 + chunk, n_points);
        for (std::size_t i = i0; i < i1; ++i) {
            double t = opt.t_begin + double(i) * step;
            Interval v = f(t).abs();
            if (v.lo() > m.lo) { m.lo = v.lo(); m.witness = t; }
            m.hi = std::max(m.hi, v.hi());
        }
        maxima[c] = m;
    });
    ChunkMax total;
    for (const auto& m : maxima) {
        if (m.lo > total.lo) { total.lo = m.lo; total.witness = m.witness; }
        total.hi = std::max(total.hi, m.hi);
    }

    MaxCertificate cert;
    cert.name = "grid_max";
    cert.grid_step = step;
    cert.curvature_bound = d2_bound;
    cert.sampled_max = Interval(total.lo, total.hi);
    Interval grid_err = Interval(step) * Interval(step) * d2_bound / 8.0;
    cert.certified_upper = Interval(total.lo, detail::add_up(total.hi, grid_err.hi()));
    cert.witness_point = total.witness;
    cert.quadrature_error = Interval(0.0);
    if (opt.tolerance > 0 && cert.certified_upper.hi() - cert.sampled_max.hi() > opt.tolerance) {
        double suggested = step * std::sqrt(opt.tolerance / grid_err.hi());
        std::ostringstream os;
        os << "grid_max: step " << step << " too coarse for tolerance " << opt.tolerance
           << "; suggested step " << suggested;
        throw precision_error(os.str());
    }
    return cert;
}

ComplexInterval appendix_g(const Interval& t) {
    return 4.0 * unit_phase(-t / 4.0) - 4.0 * unit_phase(-t / 2.0) + unit_phase(-t);
}

ComplexInterval appendix_k(const Interval& t) {
    return 2.0 * unit_phase(-t / 4.0) - unit_phase(-t / 2.0);
}

namespace {

// One integration piece: phi(x) e(-xt) over [a,b], phi of the form
// x^{-2} (alpha - beta log x). Node values are cached per (piece, n).
struct OscPiece {
    double a, b;
    double alpha, beta;  // phi(x) = (alpha - beta log x) / x^2
    // |phi^{(j)}|_inf = sup_x x^{-(2+j)} |alpha_j - beta_j log x| with
    //   alpha_{j+1} = (2+j) alpha_j + beta_j, beta_{j+1} = (2+j) beta_j.
    double deriv_bound(int j) const {
        double al = alpha, be = beta;
        for (int i = 0; i < j; ++i) {
            double al2 = (2 + i) * al + be;
            double be2 = (2 + i) * be;
            al = al2;
            be = be2;
        }
        double la = std::log(a), lb = std::log(b);
        double m = std::max(std::fabs(al - be * la), std::fabs(al - be * lb));
        // alpha_j - beta_j log x is monotone in log x; endpoints suffice.
        return m * std::pow(a, -(2.0 + j)) * (1.0 + 1e-12);
    }
    // sup |d^4/dx^4 [phi e(-xt)]| <= sum_j C(4,j) |phi^(j)| (2 pi t)^{4-j}
    double d4_bound(double t) const {
        static const double binom[5] = {1, 4, 6, 4, 1};
        double w = 2.0 * 3.14159265358980 * std::fabs(t);  // rounded up
        double s = 0.0;
        for (int j = 0; j <= 4; ++j) s += binom[j] * deriv_bound(j) * std::pow(w, 4 - j);
        return s * (1.0 + 1e-12);
    }
};

struct NodeCache {
    // key: (piece index, n) -> phi values at node enclosures
    std::map<std::pair<int, int>, std::vector<Interval>> values;

    const std::vector<Interval>& get(int piece_idx, const OscPiece& p, int n) {
        auto key = std::make_pair(piece_idx, n);
        auto it = values.find(key);
        if (it != values.end()) return it->second;
        std::vector<Interval> v;
        v.reserve(n + 1);
        Interval ia(p.a);
        Interval h = (Interval(p.b) - ia) / double(n);
        for (int j = 0; j <= n; ++j) {
            Interval x = ia + double(j) * h;
            Interval phi = (Interval(p.alpha) - Interval(p.beta) * log(x)) / square(x);
            v.push_back(phi);
        }
        return values.emplace(key, std::move(v)).first->second;
    }
};

// Exact integration by parts:
//   int_a^b phi(x) e(-xt) dx
//     = sum_{k<K} c^{k+1} [ x^{-(2+k)} (a_k - b_k log x) e(-xt) ]_a^b
//       + (-1)^K c^K int_a^b phi^(K) e(-xt) dx,   c = i/(2 pi t),
// with phi^(k)(x) = (-1)^k x^{-(2+k)}(a_k - b_k log x); the (-1)^k from
// the unrolling cancels the derivative sign. The dropped tail is bounded
// by (b-a) sup|phi^(K)| (2 pi t)^{-K}.
ComplexInterval parts_integral(double t, const OscPiece& p, int K, double* rem_out) {
    Interval ia(p.a), ib(p.b);
    Interval la = log(ia), lb = log(ib);
    ComplexInterval ea = unit_phase(Interval(-t) * ia);
    ComplexInterval eb = unit_phase(Interval(-t) * ib);
    Interval inv2pt = Interval(1.0) / (2.0 * pi_interval() * std::fabs(t));
    ComplexInterval c(Interval(0.0), t > 0 ? inv2pt : -inv2pt);
    ComplexInterval cpow = c;
    ComplexInterval acc(Interval(0.0), Interval(0.0));
    Interval ak(p.alpha), bk(p.beta);
    Interval pa(1.0), pb(1.0);  // a^-(2+k), b^-(2+k) built incrementally
    pa = Interval(1.0) / square(ia);
    pb = Interval(1.0) / square(ib);
    for (int k = 0; k < K; ++k) {
        Interval fb = pb * (ak - bk * lb);
        Interval fa = pa * (ak - bk * la);
        acc += cpow * (fb * eb - fa * ea);
        cpow = cpow * c;
        Interval ak1 = double(2 + k) * ak + bk;
        bk = double(2 + k) * bk;
        ak = ak1;
        pa = pa / ia;
        pb = pb / ib;
    }
    double rem = (p.b - p.a) * p.deriv_bound(K) * std::pow(inv2pt.hi(), K) * (1 + 1e-12);
    *rem_out = rem;
    Interval re(detail::add_down(acc.re.lo(), -rem), detail::add_up(acc.re.hi(), rem));
    Interval im(detail::add_down(acc.im.lo(), -rem), detail::add_up(acc.im.hi(), rem));
    return {re, im};
}

int subdiv_for(double t, const OscPiece& p, const OscOptions& opt) {
    double rt = std::sqrt(std::max(std::fabs(t), 1.0));
    long n = lround(std::ceil(rt)) * opt.base_subdiv;
    // Raise n until the classical remainder fits the budget.
    double len = p.b - p.a;
    double d4 = p.d4_bound(t);
    double need = std::pow(std::pow(len, 5) * d4 / (180.0 * opt.simpson_budget), 0.25);
    if (double(n) < need) n = lround(std::ceil(need));
    // Quantize upward (x1.5 steps, even) to limit the number of cached grids.
    long q = 64;
    while (q < n) q += q / 2;
    if (q & 1) ++q;
    return int(q);
}

// Composite Simpson of phi(x) e(-xt) over the piece. The phase advances by
// a ball-arithmetic recurrence (rectangular intervals wrap under iterated
// rotation); node values stay interval-certified.
ComplexInterval osc_integral(double t, const OscPiece& p, const std::vector<Interval>& phi,
                             int n, double budget_used_out[1]) {
    Interval ia(p.a);
    Interval h = (Interval(p.b) - ia) / double(n);
    Ball z = Ball::from(unit_phase(Interval(-t) * ia));  // e(-a t)
    Ball u = Ball::from(unit_phase(Interval(-t) * h));   // e(-h t)
    double acc_re = 0, acc_im = 0, acc_rad = 0;
    for (int j = 0; j <= n; ++j) {
        double w = (j == 0 || j == n) ? 1.0 : (j & 1) ? 4.0 : 2.0;
        const Interval& f = phi[std::size_t(j)];
        double fm = f.mid(), fr = 0.5 * f.width();
        double wre = w * fm * z.re, wim = w * fm * z.im;
        acc_re += wre;
        acc_im += wim;
        acc_rad += w * (std::fabs(fm) * z.rad + fr * z.mag_upper()) +
                   4e-16 * (std::fabs(wre) + std::fabs(wim) + std::fabs(acc_re) +
                            std::fabs(acc_im));
        if (j < n) z = z * u;
    }
    acc_rad *= 1 + 8e-16;
    ComplexInterval acc(
        Interval(detail::add_down(acc_re, -acc_rad), detail::add_up(acc_re, acc_rad)),
        Interval(detail::add_down(acc_im, -acc_rad), detail::add_up(acc_im, acc_rad)));
    ComplexInterval result = (h / 3.0) * acc;
    double len = p.b - p.a;
    double nn = double(n);
    double rem = std::pow(len, 5) * p.d4_bound(t) / (180.0 * nn * nn * nn * nn) * (1.0 + 1e-10);
    budget_used_out[0] = rem;
    Interval re(detail::add_down(result.re.lo(), -rem), detail::add_up(result.re.hi(), rem));
    Interval im(detail::add_down(result.im.lo(), -rem), detail::add_up(result.im.hi(), rem));
    return {re, im};
}

const double kLog2 = 0x1.62e42fefa39efp-1;

// f pieces: -4/x^2 on [1/4,1/2), +4/x^2 on [1/2,1).
const OscPiece kFPieces[2] = {
    {0.25, 0.5, -4.0, 0.0},
    {0.5, 1.0, 4.0, 0.0},
};
// h pieces: (4/x^2)(2 - 2 log 2x) = (8 - 8 log2 - 8 log x)/x^2 on [1/4,1/2),
//           (4/x^2)(-2 + 2 log x) = (-8 + 8 log x)/x^2 on [1/2,1).
const OscPiece kHPieces[2] = {
    {0.25, 0.5, 8.0 - 8.0 * kLog2, 8.0},
    {0.5, 1.0, -8.0, -8.0},
};

thread_local NodeCache g_fcache;
thread_local NodeCache g_hcache;

ComplexInterval hat_eval(double t, const OscPiece pieces[2], NodeCache& cache, int base_idx,
                         const OscOptions& opt, double* max_rem = nullptr) {
    ComplexInterval total(Interval(0.0), Interval(0.0));
    for (int i = 0; i < 2; ++i) {
        double rem[1];
        if (std::fabs(t) >= opt.parts_threshold) {
            ComplexInterval v = parts_integral(t, pieces[i], opt.parts_terms, rem);
            if (rem[0] <= opt.simpson_budget) {
                total += v;
                if (max_rem) *max_rem = std::max(*max_rem, rem[0]);
                continue;
            }
        }
        int n = subdiv_for(t, pieces[i], opt);
        const auto& phi = cache.get(base_idx + i, pieces[i], n);
        total += osc_integral(t, pieces[i], phi, n, rem);
        if (max_rem) *max_rem = std::max(*max_rem, rem[0]);
    }
    return total;
}

Interval arg_positive_re(const ComplexInterval& z) {
    if (!(z.re.lo() > 0)) throw precision_error("arg enclosure needs re > 0");
    return atan(z.im / z.re);
}

}  // namespace

ComplexInterval eta2pp_fhat(double t, const OscOptions& opt) {
    return hat_eval(t, kFPieces, g_fcache, 0, opt);
}

ComplexInterval log_eta2pp_hhat(double t, const OscOptions& opt) {
    return hat_eval(t, kHPieces, g_hcache, 0, opt);
}

MaxCertificate certify_eta2pp_fourier_norm(const FourierCertOptions& opt) {
    const double step = opt.grid_step;
    const std::size_t n_points = static_cast<std::size_t>(std::ceil(opt.t_split / step)) + 1;
    const std::size_t chunk = 2048;
    const std::size_t n_chunks = (n_points + chunk - 1) / chunk;

    struct ChunkMax {
        double lo = -1.0, hi = -1.0, witness = 0.0, rem = 0.0;
    };
    std::vector<ChunkMax> maxima(n_chunks);
    parallel_chunks(n_chunks, opt.threads, [&](std::size_t c) {
        ChunkMax m;
        std::size_t i0 = c * chunk, i1 = std::min(i0 + chunk, n_points);
        for (std::size_t i = i0; i < i1; ++i) {
            double t = double(i) * step;
            double rem = 0.0;
            ComplexInterval v =
                4.0 * appendix_g(Interval(t)) + hat_eval(t, kFPieces, g_fcache, 0, opt.osc, &rem);
            Interval a = v.abs();
            if (a.lo() > m.lo) { m.lo = a.lo(); m.witness = t; }
            m.hi = std::max(m.hi, a.hi());
            m.rem = std::max(m.rem, rem);
        }
        maxima[c] = m;
    });
    ChunkMax total;
    for (const auto& m : maxima) {
        if (m.lo > total.lo) { total.lo = m.lo; total.witness = m.witness; }
        total.hi = std::max(total.hi, m.hi);
        total.rem = std::max(total.rem, m.rem);
    }

    // |(4g + fhat)''| <= 4 * 9 pi^2 + (2 pi)^2 |x^2 f|_1 = 48 pi^2.
    Interval pi2 = square(pi_interval());
    Interval curvature = 48.0 * pi2;
    Interval grid_err = Interval(step) * Interval(step) * curvature / 8.0;

    // Tail for t >= t_split: |4g| + 80/(pi t) with |g| <= the grid-max
    // certificate for g over one period.
    MaxCertificate gcert =
        grid_max([](double t) { return appendix_g(Interval(t)); }, 4.0 * 3.1416, 9.0 * pi2,
                 1e-4, {0.0, opt.threads, 0.0});
    Interval tail = 4.0 * Interval(0.0, gcert.certified_upper.hi()) +
                    Interval(80.0) / (pi_interval() * Interval(opt.t_split));

    MaxCertificate cert;
    cert.name = "eta2pp_fourier_norm";
    cert.grid_step = step;
    cert.curvature_bound = curvature;
    cert.sampled_max = Interval(total.lo, total.hi);
    double upper = detail::add_up(total.hi, grid_err.hi());
    upper = std::max(upper, tail.hi());
    cert.certified_upper = Interval(total.lo, upper);
    cert.witness_point = total.witness;
    cert.quadrature_error = Interval(0.0, total.rem);
    return cert;
}

LogScaledCertResult certify_log_scaled_norm(double y, const LogScaledCertOptions& opt) {
    if (!(y >= 4.0)) throw domain_error("certify_log_scaled_norm requires y >= 4");
    LogScaledCertResult out;
    const Interval pi2 = square(pi_interval());
    const Interval log2iv = log2_interval();
    const Interval log4 = log(Interval(4.0));

    // z1 = 4g + fhat  (|z1| <= 31.521 by the eta2'' certificate),
    // z2 = 16 log2 k - hhat; on I we certify |arg(z1/z2)| < pi/3, hence
    // |z1 log y - z2| <= max(|z1| log y, |z2|) for every y >= 4.
    auto z1_eval = [&](double t, double* rem) {
        return 4.0 * appendix_g(Interval(t)) + hat_eval(t, kFPieces, g_fcache, 0, opt.osc, rem);
    };
    auto z2_eval = [&](double t, double* rem) {
        return (16.0 * log2iv) * appendix_k(Interval(t)) -
               hat_eval(t, kHPieces, g_hcache, 0, opt.osc, rem);
    };

    const double t_tail = 2252.51;
    struct Seg { double a, b; };
    const Seg segs[2] = {{0.3, 3.25}, {3.65, t_tail}};

    // Curvature bounds: |z1''| <= 48 pi^2; |z2''| <= 16 log2 |k''| + (2pi)^2 |x^2 h|_1
    // with |k''| <= 3 pi^2 / 2 and |x^2 h|_1 = 12 - 6 log 2, total 48 pi^2 as well.
    Interval m2pp = 48.0 * pi2;
    double delta = opt.arg_grid_step;
    Interval interp_err = Interval(delta) * Interval(delta) * m2pp / 8.0;

    double max_arg = -1.0, min_z1 = 1e300, min_z2 = 1e300;
    double max_rem1 = 0.0, max_rem2 = 0.0;
    bool ok = true;
    std::string fail;
    for (const Seg& s : segs) {
        std::size_t n_points = static_cast<std::size_t>(std::ceil((s.b - s.a) / delta)) + 1;
        const std::size_t chunk = 512;
        std::size_t n_chunks = (n_points + chunk - 1) / chunk;
        struct Acc {
            double max_arg = -1.0, min1 = 1e300, min2 = 1e300, rem1 = 0.0, rem2 = 0.0;
            bool ok = true;
            std::string fail;
        };
        std::vector<Acc> accs(n_chunks);
        parallel_chunks(n_chunks, opt.threads, [&](std::size_t c) {
            Acc a;
            std::size_t i0 = c * chunk, i1 = std::min(i0 + chunk, n_points);
            for (std::size_t i = i0; i < i1; ++i) {
                double t = std::min(s.a + double(i) * delta, s.b);
                double r1 = 0.0, r2 = 0.0;
                ComplexInterval z1 = z1_eval(t, &r1);
                ComplexInterval z2 = z2_eval(t, &r2);
                a.rem1 = std::max(a.rem1, r1);
                a.rem2 = std::max(a.rem2, r2);
                Interval n1 = z1.abs(), n2 = z2.abs();
                a.min1 = std::min(a.min1, n1.lo());
                a.min2 = std::min(a.min2, n2.lo());
                ComplexInterval w = z1 * z2.conj();
                if (!(w.re.lo() > 0)) {
                    a.ok = false;
                    a.fail = "arg ratio leaves the right half-plane near t=" + std::to_string(t);
                    break;
                }
                Interval ang = atan(w.im / w.re);
                a.max_arg = std::max(a.max_arg, std::max(std::fabs(ang.lo()), std::fabs(ang.hi())));
            }
            accs[c] = a;
        });
        for (const Acc& a : accs) {
            if (!a.ok) { ok = false; fail = a.fail; }
            max_arg = std::max(max_arg, a.max_arg);
            min_z1 = std::min(min_z1, a.min1);
            min_z2 = std::min(min_z2, a.min2);
            max_rem1 = std::max(max_rem1, a.rem1);
            max_rem2 = std::max(max_rem2, a.rem2);
        }
    }
    if (!ok) throw precision_error("certify_log_scaled_norm: " + fail);

    // Between samples: values stay within the chord hull plus a disc of
    // radius (1/8) delta^2 M''; chord dips below the sampled min |z| by at
    // most the half-gap factor, bounded via |z'| <= M'.
    //   |z1'| <= 4|g'| + 2 pi |x f|_1 = 32 pi + 16 pi log 2,
    //   |z2'| <= 16 log 2 |k'| + 2 pi |x h|_1, |k'| <= 2 pi.
    Interval m1p = 32.0 * pi_interval() + 16.0 * pi_interval() * log2iv;
    Interval xh1 = 8.0 * log2iv + 4.0 * square(log2iv);  // per piece
    Interval m2p = (16.0 * log2iv) * (2.0 * pi_interval()) + 2.0 * pi_interval() * (2.0 * xh1);
    auto chord_floor = [&](double minz, const Interval& mp) {
        // min over chord >= minz * cos(gap/2), gap <= 2 asin(delta mp / (2 minz))
        Interval half = asin(min(Interval(1.0), Interval(delta) * mp / (2.0 * Interval(minz))));
        return (Interval(minz) * cos(half)).lo();
    };
    double f1 = chord_floor(min_z1, m1p), f2 = chord_floor(min_z2, m2p);
    if (!(f1 > interp_err.hi() && f2 > interp_err.hi()))
        throw precision_error("certify_log_scaled_norm: chord floor too small");
    Interval p1 = asin(min(Interval(1.0), interp_err / Interval(f1 - interp_err.hi())));
    Interval p2 = asin(min(Interval(1.0), interp_err / Interval(f2 - interp_err.hi())));
    out.max_arg_gap = Interval(0.0, max_arg);
    out.arg_bound_final = Interval(0.0, max_arg) + p1 + p2;

    // Excluded region: max of |z1| + |z2|/log 4, grid step small_grid_step.
    {
        double st = opt.small_grid_step;
        double combo_max = -1.0;
        for (const Seg& s : {Seg{0.0, 0.3}, Seg{3.25, 3.65}}) {
            std::size_t n_points = static_cast<std::size_t>(std::ceil((s.b - s.a) / st)) + 1;
            for (std::size_t i = 0; i < n_points; ++i) {
                double t = std::min(s.a + double(i) * st, s.b);
                double r = 0.0;
                Interval v = (z1_eval(t, &r).abs() + z2_eval(t, &r).abs() / log4);
                combo_max = std::max(combo_max, v.hi());
            }
        }
        Interval gerr = Interval(st) * Interval(st) * (m2pp + m2pp / log4) / 8.0;
        out.excluded_region_max = Interval(0.0, detail::add_up(combo_max, gerr.hi()));
    }

    // Phase bound |arg(g/k)| over one period [-2,2] (g, k have period 4).
    {
        double st = 1e-3;
        double amax = -1.0, mg = 1e300, mk = 1e300;
        std::size_t n_points = static_cast<std::size_t>(std::ceil(4.0 / st)) + 1;
        for (std::size_t i = 0; i < n_points; ++i) {
            double t = -2.0 + double(i) * st;
            ComplexInterval g = appendix_g(Interval(t)), k = appendix_k(Interval(t));
            ComplexInterval w = g * k.conj();
            if (!(w.re.lo() > 0)) throw precision_error("arg(g/k) leaves right half-plane");
            Interval ang = atan(w.im / w.re);
            amax = std::max(amax, std::max(std::fabs(ang.lo()), std::fabs(ang.hi())));
            mg = std::min(mg, g.abs().lo());
            mk = std::min(mk, k.abs().lo());
        }
        Interval gpp = 9.0 * pi2, kpp = 1.5 * pi2;
        Interval gp = 8.0 * pi_interval(), kp = 2.0 * pi_interval();
        Interval eg = Interval(st) * Interval(st) * gpp / 8.0;
        Interval ek = Interval(st) * Interval(st) * kpp / 8.0;
        double fg = chord_floor(mg, gp), fk = chord_floor(mk, kp);
        Interval pg = asin(min(Interval(1.0), eg / Interval(fg - eg.hi())));
        Interval pk = asin(min(Interval(1.0), ek / Interval(fk - ek.hi())));
        out.phase_g_over_k = Interval(0.0, amax) + pg + pk;
    }

    MaxCertificate cert;
    cert.name = "log_scaled_fourier_norm";
    cert.grid_step = opt.arg_grid_step;
    cert.curvature_bound = m2pp;
    cert.sampled_max = out.max_arg_gap;
    cert.certified_upper = 31.521 * log(Interval(y));
    cert.witness_point = 0.0;
    cert.quadrature_error = Interval(0.0, std::max(max_rem1, max_rem2));
    out.cert = cert;
    return out;
}

void write_certificate(const std::string& path, const MaxCertificate& cert) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open certificate file for writing: " + path);
    auto hex = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%a", v);
        return std::string(buf);
    };
    f << "format: minarc-max-certificate v1\n";
    f << "name: " << cert.name << "\n";
    f << "grid_step: " << hex(cert.grid_step) << "\n";
    f << "curvature_lo: " << hex(cert.curvature_bound.lo()) << "\n";
    f << "curvature_hi: " << hex(cert.curvature_bound.hi()) << "\n";
    f << "sampled_max_lo: " << hex(cert.sampled_max.lo()) << "\n";
    f << "sampled_max_hi: " << hex(cert.sampled_max.hi()) << "\n";
    f << "certified_upper_lo: " << hex(cert.certified_upper.lo()) << "\n";
    f << "certified_upper_hi: " << hex(cert.certified_upper.hi()) << "\n";
    f << "witness_point: " << hex(cert.witness_point) << "\n";
    f << "quadrature_error_lo: " << hex(cert.quadrature_error.lo()) << "\n";
    f << "quadrature_error_hi: " << hex(cert.quadrature_error.hi()) << "\n";
}

MaxCertificate read_certificate(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open certificate file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(f, line)) {
        auto pos = line.find(": ");
        if (pos == std::string::npos) continue;
        kv[line.substr(0, pos)] = line.substr(pos + 2);
    }
    if (kv["format"] != "minarc-max-certificate v1")
        throw std::runtime_error("unknown certificate format in " + path);
    auto num = [&](const std::string& key) { return std::strtod(kv.at(key).c_str(), nullptr); };
    MaxCertificate c;
    c.name = kv["name"];
    c.grid_step = num("grid_step");
    c.curvature_bound = Interval(num("curvature_lo"), num("curvature_hi"));
    c.sampled_max = Interval(num("sampled_max_lo"), num("sampled_max_hi"));
    c.certified_upper = Interval(num("certified_upper_lo"), num("certified_upper_hi"));
    c.witness_point = num("witness_point");
    c.quadrature_error = Interval(num("quadrature_error_lo"), num("quadrature_error_hi"));
    return c;
}

bool check_certificate(const MaxCertificate& cert) {
    // The recorded upper must cover the grid rule applied to the recorded
    // sampled max and step (it may exceed it when a tail bound dominated).
    Interval grid_err =
        Interval(cert.grid_step) * Interval(cert.grid_step) * cert.curvature_bound / 8.0;
    double implied = detail::add_up(cert.sampled_max.hi(), grid_err.hi());
    return cert.sampled_max.lo() <= cert.sampled_max.hi() &&
           cert.certified_upper.hi() >= implied;
}

}  // namespace minarc
