// SPDX-License-Identifier: Apache-2.0

#include "minarc/sieve.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace minarc {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(std::size_t(n) + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.push_back(std::uint32_t(i));
            for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

std::vector<std::int8_t> mu_up_to(std::uint32_t n) {
    std::vector<std::int8_t> mu(std::size_t(n) + 1, 1);
    std::vector<std::uint32_t> lpf(std::size_t(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    if (n >= 1) mu[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (lpf[i] == 0) {
            lpf[i] = i;
            mu[i] = -1;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = std::uint64_t(i) * p;
            if (p > lpf[i] || ip > n) break;
            lpf[ip] = p;
            mu[ip] = (p == lpf[i]) ? 0 : -mu[i];
        }
    }
    return mu;
}

std::vector<std::uint32_t> sigma_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> sigma(std::size_t(n) + 1, 0);
    for (std::uint32_t d = 1; d <= n; ++d)
        for (std::uint64_t m = d; m <= n; m += d) sigma[m] += d;
    return sigma;
}

std::vector<std::uint32_t> phi_up_to(std::uint32_t n) {
    std::vector<std::uint32_t> phi(std::size_t(n) + 1);
    for (std::uint32_t i = 0; i <= n; ++i) phi[i] = i;
    for (std::uint32_t i = 2; i <= n; ++i)
        if (phi[i] == i)  // prime
            for (std::uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    return phi;
}

namespace {

// Fixed-point log2 scale for the "prime factor > sqrt(hi) remains" test.
// A square-free n <= 1e10 has at most 10 distinct prime factors, so the
// accumulated floor() drift is < 11 and the exp2-threshold drift is < 2,
// while a missing prime factor >= 2 costs >= 512 units.
constexpr std::uint32_t kLogScale = 512;
constexpr std::uint32_t kLogSlack = 16;

std::uint16_t scaled_log(std::uint64_t p) {
    return std::uint16_t(std::floor(std::log2(double(p)) * kLogScale));
}

struct MuBlock {
    std::uint64_t lo, hi;
    std::vector<std::int8_t> mu;
};

// Exact mu over [lo, hi] given primes up to sqrt(hi).
void sieve_mu_block(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& primes,
                    std::vector<std::int8_t>& mu_out) {
    const std::size_t len = std::size_t(hi - lo + 1);
    static thread_local std::vector<std::uint16_t> logs;
    static thread_local std::vector<std::uint8_t> state;  // bit0: parity, bit1: square divides
    logs.assign(len, 0);
    state.assign(len, 0);
    for (std::uint32_t p : primes) {
        std::uint64_t p64 = p, pp = p64 * p64;
        if (pp > hi) break;
        std::uint16_t lp = scaled_log(p64);
        for (std::uint64_t m = ((lo + p64 - 1) / p64) * p64; m <= hi; m += p64) {
            std::size_t i = std::size_t(m - lo);
            state[i] ^= 1;
            logs[i] = std::uint16_t(logs[i] + lp);
        }
        for (std::uint64_t m = ((lo + pp - 1) / pp) * pp; m <= hi; m += pp)
            state[std::size_t(m - lo)] |= 2;
    }
    std::uint64_t n = lo;
    std::uint32_t cur = n <= 1 ? 0 : std::uint32_t(std::floor(std::log2(double(n)) * kLogScale));
    std::uint64_t next_bump =
        std::uint64_t(std::ceil(std::exp2(double(cur + 1) / kLogScale)));
    for (std::size_t i = 0; i < len; ++i, ++n) {
        while (n >= next_bump) {
            ++cur;
            next_bump = std::uint64_t(std::ceil(std::exp2(double(cur + 1) / kLogScale)));
        }
        if (state[i] & 2) {
            mu_out[i] = 0;
            continue;
        }
        bool large_prime = n > 1 && std::uint32_t(logs[i]) + kLogSlack < cur;
        int parity = (state[i] & 1) ^ (large_prime ? 1 : 0);
        mu_out[i] = parity ? -1 : 1;
    }
    if (lo == 1) mu_out[0] = 1;
}

}  // namespace

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg) {
    if (lo < 1 || hi < lo) throw domain_error("sieve_segment: need 1 <= lo <= hi");
    if (hi - lo + 1 > cfg.block_size)
        throw domain_error("sieve_segment: block larger than configured size");
    if (hi > cfg.global_cap) throw domain_error("sieve_segment: beyond configured global cap");
    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.mu.resize(std::size_t(hi - lo + 1));
    auto primes = primes_up_to(std::uint32_t(std::sqrt(double(hi))) + 2);
    sieve_mu_block(lo, hi, primes, seg.mu);

    // Lambda markers: mark proper multiples of small primes; anything >= 2
    // left unmarked is prime (a composite n <= hi has a factor <= sqrt(hi)).
    const std::size_t len = std::size_t(hi - lo + 1);
    std::vector<std::uint8_t> has_small(len, 0);
    for (std::uint32_t p : primes) {
        std::uint64_t p64 = p;
        if (p64 * p64 > hi) break;
        std::uint64_t start = std::max(((lo + p64 - 1) / p64) * p64, 2 * p64);
        for (std::uint64_t m = start; m <= hi; m += p64) has_small[std::size_t(m - lo)] = 1;
        long double pk = (long double)p64 * p64;
        int k = 2;
        while (pk <= (long double)hi) {
            std::uint64_t v = std::uint64_t(pk);
            if (v >= lo) seg.prime_powers.push_back({v, p64, k});
            pk *= p64;
            ++k;
        }
    }
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
        if (!has_small[std::size_t(n - lo)]) seg.prime_powers.push_back({n, n, 1});
    std::sort(seg.prime_powers.begin(), seg.prime_powers.end(),
              [](const SieveSegment::PrimePower& a, const SieveSegment::PrimePower& b) {
                  return a.n < b.n;
              });
    return seg;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi <= lo) return out;
    SieveConfig cfg;
    cfg.block_size = hi - lo + 2;
    cfg.global_cap = std::max(hi, cfg.global_cap);
    SieveSegment seg = sieve_segment(std::max<std::uint64_t>(lo + 1, 2), hi, cfg);
    for (const auto& pp : seg.prime_powers)
        if (pp.k == 1) out.push_back(pp.n);
    return out;
}

namespace {

std::string checkpoint_name(MertensEnvelope env, std::uint64_t n) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "mertens-%s-%020" PRIu64 ".ckpt",
                  env == MertensEnvelope::half_inv_sqrt ? "half" : "sqrt2", n);
    return buf;
}

}  // namespace

void write_checkpoint(const std::string& dir, MertensEnvelope env, const ScanCheckpoint& cp) {
    std::filesystem::create_directories(dir);
    std::string path = dir + "/" + checkpoint_name(env, cp.n);
    std::ofstream f(path);
    f << "format: minarc-mertens-checkpoint v1\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "n: %" PRIu64 "\nsum_hi: %a\nsum_lo: %a\nerr: %a\n", cp.n,
                  cp.sum.hi, cp.sum.lo, cp.certified_error);
    f << buf;
}

std::optional<ScanCheckpoint> latest_checkpoint(const std::string& dir, MertensEnvelope env,
                                                std::uint64_t limit) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) return std::nullopt;
    std::string best;
    std::uint64_t best_n = 0;
    std::string prefix = env == MertensEnvelope::half_inv_sqrt ? "mertens-half-" : "mertens-sqrt2-";
    for (const auto& e : fs::directory_iterator(dir)) {
        std::string name = e.path().filename().string();
        if (name.rfind(prefix, 0) != 0) continue;
        std::uint64_t n = std::strtoull(name.c_str() + prefix.size(), nullptr, 10);
        if (n > best_n && n <= limit) {
            best_n = n;
            best = e.path().string();
        }
    }
    if (best.empty()) return std::nullopt;
    std::ifstream f(best);
    ScanCheckpoint cp;
    std::string line;
    while (std::getline(f, line)) {
        auto pos = line.find(": ");
        if (pos == std::string::npos) continue;
        std::string key = line.substr(0, pos), val = line.substr(pos + 2);
        if (key == "n") cp.n = std::strtoull(val.c_str(), nullptr, 10);
        else if (key == "sum_hi") cp.sum.hi = std::strtod(val.c_str(), nullptr);
        else if (key == "sum_lo") cp.sum.lo = std::strtod(val.c_str(), nullptr);
        else if (key == "err") cp.certified_error = std::strtod(val.c_str(), nullptr);
    }
    return cp.n ? std::optional<ScanCheckpoint>(cp) : std::nullopt;
}

ScanReport mertens_scan(std::uint64_t limit, MertensEnvelope envelope,
                        const MertensScanOptions& opt) {
    if (limit > opt.sieve.global_cap)
        throw domain_error("mertens_scan: limit exceeds global cap (use --extended)");
    ScanReport report;
    report.limit = limit;
    report.envelope = envelope;

    RunningSum sum;
    std::uint64_t start_n = 1;  // first unprocessed integer
    if (opt.resume && !opt.checkpoint_dir.empty()) {
        if (auto cp = latest_checkpoint(opt.checkpoint_dir, envelope, limit)) {
            sum.set(cp->sum, cp->certified_error, cp->n);
            start_n = cp->n + 1;
            report.checkpoints.push_back(*cp);
        }
    }

    const std::uint64_t block = opt.sieve.block_size;
    const std::uint64_t first_block = (start_n - 1) / block;
    const std::uint64_t n_blocks = (limit + block - 1) / block;
    auto primes = primes_up_to(std::uint32_t(std::sqrt(double(limit))) + 2);

    // Pipeline: workers sieve blocks ahead, consumption strictly in order.
    const int workers = std::max(1, opt.sieve.threads);
    const std::uint64_t window = std::uint64_t(workers) + 2;
    std::mutex mtx;
    std::condition_variable cv;
    std::map<std::uint64_t, MuBlock> ready;
    std::uint64_t next_to_sieve = first_block;
    std::uint64_t next_to_consume = first_block;
    bool stop = false;

    auto sieve_worker = [&] {
        for (;;) {
            std::uint64_t b;
            {
                std::unique_lock<std::mutex> lk(mtx);
                cv.wait(lk, [&] {
                    return stop || (next_to_sieve < n_blocks &&
                                    next_to_sieve < next_to_consume + window);
                });
                if (stop || next_to_sieve >= n_blocks) return;
                b = next_to_sieve++;
            }
            MuBlock mb;
            mb.lo = b * block + 1;
            mb.hi = std::min(limit, (b + 1) * block);
            mb.mu.resize(std::size_t(mb.hi - mb.lo + 1));
            sieve_mu_block(mb.lo, mb.hi, primes, mb.mu);
            {
                std::lock_guard<std::mutex> lk(mtx);
                ready.emplace(b, std::move(mb));
            }
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(sieve_worker);

    // m(n) is constant between square-free points and the envelope
    // decreases, so each constant run [a, b] is checked against the
    // envelope at b + 1; on a hit the least violating n is recovered by a
    // per-n double-double pass over the run.
    const bool half = envelope == MertensEnvelope::half_inv_sqrt;
    auto inv_env_sq = [half](double n_next) { return half ? 4.0 * n_next : 0.5 * n_next; };

    double max_ratio_sq = 0.0;
    std::uint64_t run_start = start_n;

    auto check_run = [&](std::uint64_t run_lo, std::uint64_t run_hi,
                         bool find_exact) -> std::optional<std::uint64_t> {
        if (run_hi < 3 || run_lo > run_hi) return std::nullopt;
        DD m = sum.value();
        double inv = inv_env_sq(double(run_hi) + 1.0);
        double worst = m.hi * m.hi * inv;
        max_ratio_sq = std::max(max_ratio_sq, worst);
        double dm = std::fabs(m.lo) + sum.certified_error();
        if (dm > 1e-12 * std::fabs(m.hi) + 1e-15)
            throw precision_error("mertens_scan: running-sum error bound degenerated");
        if (worst < 1.0 - 1e-9) return std::nullopt;
        if (!find_exact) return run_hi;  // already past the first violation
        // Double-double refinement over the run.
        DD m2 = m * m;
        double err = sum.certified_error();
        for (std::uint64_t n = std::max<std::uint64_t>(run_lo, 3); n <= run_hi; ++n) {
            double invn = inv_env_sq(double(n) + 1.0);
            DD v = m2 * invn;
            double margin = (2.0 * (std::fabs(m.hi) + std::fabs(m.lo)) * err + err * err) * invn +
                            1e-26 * invn;
            if (v.hi + v.lo - margin > 1.0) return n;
            if (v.hi + v.lo + margin > 1.0)
                throw precision_error("mertens_scan: cannot separate sum from envelope at n=" +
                                      std::to_string(n));
        }
        return std::nullopt;
    };

    std::uint64_t next_checkpoint =
        ((start_n - 1) / opt.checkpoint_every + 1) * opt.checkpoint_every;
    bool done = false;
    for (std::uint64_t b = first_block; b < n_blocks && !done; ++b) {
        MuBlock mb;
        {
            std::unique_lock<std::mutex> lk(mtx);
            cv.wait(lk, [&] { return ready.count(b) != 0; });
            mb = std::move(ready[b]);
            ready.erase(b);
            ++next_to_consume;
        }
        cv.notify_all();
        std::uint64_t from = std::max(mb.lo, start_n);
        for (std::uint64_t n = from; n <= mb.hi; ++n) {
            std::int8_t mu = mb.mu[std::size_t(n - mb.lo)];
            if (mu != 0) {
                if (auto v = check_run(run_start, n - 1, !report.first_violation)) {
                    if (!report.first_violation) {
                        report.first_violation = v;
                        if (opt.stop_at_violation) { done = true; break; }
                    }
                }
                DD term = DD::from_div(double(mu), double(n));
                sum.add(term, std::fabs(term.hi) * 0x1.0p-100);
                run_start = n;
            }
            if (n == next_checkpoint) {
                // Close the partial run so a resumed scan misses nothing.
                if (auto v = check_run(run_start, n, !report.first_violation)) {
                    if (!report.first_violation) {
                        report.first_violation = v;
                        if (opt.stop_at_violation) { done = true; break; }
                    }
                }
                run_start = n + 1;
                ScanCheckpoint cp{n, sum.value(), sum.certified_error()};
                report.checkpoints.push_back(cp);
                if (!opt.checkpoint_dir.empty()) write_checkpoint(opt.checkpoint_dir, envelope, cp);
                next_checkpoint += opt.checkpoint_every;
            }
        }
    }
    {
        std::lock_guard<std::mutex> lk(mtx);
        stop = true;
    }
    cv.notify_all();
    for (auto& t : pool) t.join();

    if (!done) {
        if (auto v = check_run(run_start, limit, !report.first_violation))
            if (!report.first_violation) report.first_violation = v;
    }
    report.final_state = {limit, sum.value(), sum.certified_error()};
    double r = std::sqrt(std::max(max_ratio_sq, 0.0));
    report.max_ratio = Interval(std::max(0.0, r - 2e-9), r + 2e-9);
    return report;
}

std::vector<ChebyshevRow> chebyshev_checks(std::vector<std::uint64_t> y_samples,
                                           const SieveConfig& cfg) {
    std::sort(y_samples.begin(), y_samples.end());
    std::vector<ChebyshevRow> rows;
    if (y_samples.empty()) return rows;
    std::uint64_t y_max = y_samples.back();
    if (y_max > cfg.global_cap) throw domain_error("chebyshev_checks: sample beyond global cap");

    RunningSum s_over_n, s_psi, s_times_n;
    std::size_t next_sample = 0;

    std::uint64_t block = cfg.block_size;
    for (std::uint64_t lo = 1; lo <= y_max && next_sample < y_samples.size(); lo += block) {
        std::uint64_t hi = std::min(y_max, lo + block - 1);
        SieveSegment seg = sieve_segment(lo, hi, cfg);
        std::size_t idx = 0;
        for (;;) {
            std::uint64_t next_pp =
                idx < seg.prime_powers.size() ? seg.prime_powers[idx].n : ~std::uint64_t(0);
            std::uint64_t next_y =
                next_sample < y_samples.size() ? y_samples[next_sample] : ~std::uint64_t(0);
            if (next_y > hi && next_pp == ~std::uint64_t(0)) break;
            if (next_pp <= next_y) {
                const auto& pp = seg.prime_powers[idx++];
                DD lp(std::log(double(pp.p)));
                double lerr = std::fabs(lp.hi) * 0x1.0p-51;  // libm log is faithful
                s_psi.add(lp, lerr);
                s_over_n.add(lp / DD(double(pp.n)),
                             (lerr + std::fabs(lp.hi) * 0x1.0p-100) / double(pp.n));
                s_times_n.add(lp * double(pp.n), lerr * double(pp.n));
            } else {
                if (next_y > hi) break;
                ChebyshevRow row;
                row.y = next_y;
                auto iv = [](const RunningSum& s) {
                    DD v = s.value();
                    double e = s.certified_error();
                    return Interval(detail::add_down(v.hi, v.lo - e),
                                    detail::add_up(v.hi, v.lo + e));
                };
                row.lambda_over_n = iv(s_over_n);
                row.psi = iv(s_psi);
                row.lambda_times_n = iv(s_times_n);
                Interval y{double(row.y)};
                Interval logy = row.y >= 1 ? log(y) : Interval(0.0);
                row.ok_log_upper = row.lambda_over_n.hi() <= logy.lo() || row.y < 2;
                Interval lower = logy - log(Interval(3.0) / sqrt(Interval(2.0)));
                row.ok_log_lower = row.lambda_over_n.lo() >= lower.hi() || row.y < 2;
                row.ok_psi_103883 = row.psi.hi() < (Interval(1.03883) * y).lo();
                row.ok_psi_10004 = row.y < 2'000'000 || row.psi.hi() <= (Interval(1.0004) * y).lo();
                row.ok_lambda_n =
                    row.y <= 663 || row.lambda_times_n.hi() < (Interval(1.03884) * y * y / 2.0).lo();
                if (row.y >= 3) {
                    RunningSum t;
                    for (std::uint64_t p : primes_in(row.y / 2, row.y)) {
                        DD lp(std::log(double(p)));
                        t.add(lp * lp, 2.0 * lp.hi * lp.hi * 0x1.0p-51);
                    }
                    DD v = t.value();
                    row.logp_sq_upper = Interval(detail::add_down(v.hi, v.lo - t.certified_error()),
                                                 detail::add_up(v.hi, v.lo + t.certified_error()));
                    row.ok_logp_sq = row.y < 117 || row.logp_sq_upper.hi() <= (y * logy / 2.0).lo();
                } else {
                    row.logp_sq_upper = Interval(0.0);
                    row.ok_logp_sq = true;
                }
                row.all_ok = row.ok_log_upper && row.ok_log_lower && row.ok_psi_103883 &&
                             row.ok_psi_10004 && row.ok_lambda_n && row.ok_logp_sq;
                rows.push_back(row);
                ++next_sample;
            }
        }
    }
    return rows;
}

}  // namespace minarc
