// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include <filesystem>

#include "minarc/sieve.hpp"

using namespace minarc;

namespace {

// trial-division mu for the oracle
int mu_direct(std::uint64_t n) {
    int cnt = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            ++cnt;
            if (n % p == 0) return 0;
        }
    }
    if (n > 1) ++cnt;
    return cnt % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("mu on [1,10] matches the hand table") {
    SieveSegment seg = sieve_segment(1, 10);
    int expect[10] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    for (int i = 0; i < 10; ++i) CHECK(int(seg.mu[i]) == expect[i]);
}

TEST_CASE("lambda markers on [1,10]") {
    SieveSegment seg = sieve_segment(1, 10);
    std::vector<std::uint64_t> ns;
    for (auto& pp : seg.prime_powers) ns.push_back(pp.n);
    CHECK(ns == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
}

TEST_CASE("mu(510510) = -1 via trial factorization oracle") {
    SieveSegment seg = sieve_segment(510000, 511000);
    CHECK(int(seg.mu[510510 - 510000]) == -1);
    CHECK(mu_direct(510510) == -1);
    // segment consistency against the oracle on a random-ish block
    for (std::uint64_t n = 510000; n <= 510200; ++n)
        CHECK(int(seg.mu[n - 510000]) == mu_direct(n));
}

TEST_CASE("segment concatenation agrees with one big block") {
    SieveConfig small;
    small.block_size = 1000;
    std::vector<std::int8_t> merged;
    for (std::uint64_t lo = 1; lo <= 10000; lo += 1000) {
        SieveSegment seg = sieve_segment(lo, lo + 999, small);
        merged.insert(merged.end(), seg.mu.begin(), seg.mu.end());
    }
    SieveSegment big = sieve_segment(1, 10000);
    CHECK(std::equal(merged.begin(), merged.end(), big.mu.begin()));
}

TEST_CASE("segment concatenation at 1e7 scale") {
    SieveConfig mid;
    mid.block_size = 1 << 20;
    SieveConfig whole;
    whole.block_size = 10'000'000;
    SieveSegment big = sieve_segment(1, 10'000'000, whole);
    std::size_t off = 0;
    bool all_equal = true;
    for (std::uint64_t lo = 1; lo <= 10'000'000; lo += 1 << 20) {
        std::uint64_t hi = std::min<std::uint64_t>(10'000'000, lo + (1 << 20) - 1);
        SieveSegment seg = sieve_segment(lo, hi, mid);
        all_equal = all_equal &&
                    std::equal(seg.mu.begin(), seg.mu.end(), big.mu.begin() + long(off));
        off += seg.mu.size();
    }
    CHECK(all_equal);
}

TEST_CASE("block size and cap are enforced") {
    SieveConfig cfg;
    cfg.block_size = 100;
    CHECK_THROWS_AS(sieve_segment(1, 200, cfg), domain_error);
    cfg.block_size = 1 << 24;
    cfg.global_cap = 1000;
    CHECK_THROWS_AS(sieve_segment(1, 2000, cfg), domain_error);
}

TEST_CASE("mertens scan first values and checkpointing") {
    MertensScanOptions opt;
    opt.sieve.block_size = 1 << 16;
    opt.checkpoint_every = 40000;
    ScanReport rep = mertens_scan(100000, MertensEnvelope::half_inv_sqrt, opt);
    // m(1e5) against a direct computation
    auto mu = mu_up_to(100000);
    long double direct = 0;
    for (int n = 1; n <= 100000; ++n) direct += (long double)mu[n] / n;
    double got = rep.final_state.sum.hi + rep.final_state.sum.lo;
    CHECK(std::fabs(double(direct - got)) <= rep.final_state.certified_error + 1e-17);
    CHECK(!rep.first_violation.has_value());  // no violation below 7.7e9
    CHECK(rep.checkpoints.size() == 2);
    CHECK(rep.checkpoints[0].n == 40000);
}

TEST_CASE("mertens envelope boundary cases at small n") {
    // m(3) = 1/6; envelope check starts at n = 3 (the bound holds from 3 on)
    MertensScanOptions opt;
    opt.sieve.block_size = 1 << 16;
    ScanReport rep = mertens_scan(1000, MertensEnvelope::half_inv_sqrt, opt);
    CHECK(!rep.first_violation.has_value());
    ScanReport rep2 = mertens_scan(1000, MertensEnvelope::sqrt_two_over_x, opt);
    CHECK(!rep2.first_violation.has_value());
    CHECK(rep2.max_ratio.hi() <= 1.0);
}

TEST_CASE("mertens resume from checkpoint matches a fresh scan") {
    std::string dir = "mertens-ckpt-test.tmp";
    MertensScanOptions opt;
    opt.sieve.block_size = 1 << 16;
    opt.checkpoint_every = 50000;
    opt.checkpoint_dir = dir;
    ScanReport full = mertens_scan(200000, MertensEnvelope::half_inv_sqrt, opt);
    MertensScanOptions res = opt;
    res.resume = true;
    ScanReport resumed = mertens_scan(200000, MertensEnvelope::half_inv_sqrt, res);
    CHECK(resumed.final_state.sum.hi == full.final_state.sum.hi);
    CHECK(resumed.final_state.sum.lo == full.final_state.sum.lo);
    std::filesystem::remove_all(dir);
}

TEST_CASE("running sums re-verified with interval block sums") {
    // recompute a checkpoint with pairwise interval arithmetic
    MertensScanOptions opt;
    opt.sieve.block_size = 1 << 16;
    ScanReport rep = mertens_scan(50000, MertensEnvelope::half_inv_sqrt, opt);
    auto mu = mu_up_to(50000);
    Interval total(0.0);
    for (int n = 1; n <= 50000; ++n) {
        if (mu[n] == 0) continue;
        total += Interval(double(mu[n])) / double(n);
    }
    double v = rep.final_state.sum.hi + rep.final_state.sum.lo;
    CHECK(total.lo() - rep.final_state.certified_error <= v);
    CHECK(total.hi() + rep.final_state.certified_error >= v);
}

TEST_CASE("chebyshev checks at the reference sample points") {
    auto rows = chebyshev_checks({2, 10, 117, 663, 10000, 100000});
    REQUIRE(rows.size() == 6);
    for (auto& r : rows) {
        INFO("y = ", r.y);
        CHECK(r.all_ok);
    }
    // psi(10) = 3 log2 + 2 log3 + log5 + log7
    double psi10 = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
    CHECK(rows[1].psi.contains(psi10));
    CHECK(psi10 < 1.03883 * 10);
    // y = 2: sum Lambda(n)/n = log2/2 <= log 2
    CHECK(rows[0].lambda_over_n.contains(std::log(2.0) / 2));
    // y = 117 boundary: sum over (58.5, 117] of (log p)^2 <= y log y / 2
    double direct = 0;
    for (std::uint64_t p : primes_in(58, 117))
        if (2 * p > 117) direct += std::log(double(p)) * std::log(double(p));
    CHECK(rows[2].logp_sq_upper.contains(direct));
    CHECK(direct <= 117 * std::log(117.0) / 2);
}

TEST_CASE("primes_in matches a simple sieve") {
    auto ps = primes_in(10, 50);
    std::vector<std::uint64_t> expect = {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    CHECK(ps == expect);
}
