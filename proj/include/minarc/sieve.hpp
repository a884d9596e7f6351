// SPDX-License-Identifier: Apache-2.0
//
// Segmented sieves for mu(n) and Lambda(n) with extended-precision
// partial-sum tracking.
//
// mu is computed integer-exactly (least-prime-factor marking with
// square-divisor cancellation and a fixed-point log accumulator to detect
// the single possible prime factor > sqrt(hi)). Lambda is carried as
// (p, k) markers; log p is taken rigorously at accumulation time.
//
// Parallelism: segments sieve on worker threads; the prefix accumulation
// and envelope checks consume segments strictly in order (prefix sums are
// order-dependent), so reports are identical for any thread count.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minarc/dd.hpp"
#include "minarc/interval.hpp"

namespace minarc {

struct SieveConfig {
    std::uint64_t block_size = std::uint64_t(1) << 24;
    std::uint64_t global_cap = 10'000'000'000ull;  // desk-scale default
    int threads = 1;
};

struct SieveSegment {
    std::uint64_t lo = 1, hi = 0;   // inclusive
    std::vector<std::int8_t> mu;    // mu[n - lo] in {-1, 0, 1}
    struct PrimePower {
        std::uint64_t n;  // p^k
        std::uint64_t p;
        int k;
    };
    std::vector<PrimePower> prime_powers;  // ascending n; Lambda(n) = log p
};

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);
std::vector<std::int8_t> mu_up_to(std::uint32_t n);
std::vector<std::uint32_t> sigma_up_to(std::uint32_t n);  // sum of divisors
std::vector<std::uint32_t> phi_up_to(std::uint32_t n);

SieveSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg = {});

// Primes in (lo, hi], exact.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

enum class MertensEnvelope { half_inv_sqrt, sqrt_two_over_x };

struct ScanCheckpoint {
    std::uint64_t n = 0;
    DD sum;
    double certified_error = 0.0;
};

struct ScanReport {
    std::uint64_t limit = 0;
    MertensEnvelope envelope = MertensEnvelope::half_inv_sqrt;
    // Least n >= 3 with |m(n)| exceeding the infimum of the envelope over
    // [n, n+1), i.e. the envelope evaluated at n+1.
    std::optional<std::uint64_t> first_violation;
    Interval max_ratio;  // max over n of |m(n)| / envelope(n+1)
    std::vector<ScanCheckpoint> checkpoints;
    ScanCheckpoint final_state;
};

struct MertensScanOptions {
    SieveConfig sieve;
    std::uint64_t checkpoint_every = 100'000'000ull;
    std::string checkpoint_dir;  // empty: keep checkpoints in memory only
    bool resume = false;         // restart from the newest stored checkpoint
    // Stop at the first violation instead of scanning to the limit.
    bool stop_at_violation = false;
};

ScanReport mertens_scan(std::uint64_t limit, MertensEnvelope envelope,
                        const MertensScanOptions& opt = {});

void write_checkpoint(const std::string& dir, MertensEnvelope env, const ScanCheckpoint& cp);
std::optional<ScanCheckpoint> latest_checkpoint(const std::string& dir, MertensEnvelope env,
                                                std::uint64_t limit);

struct ChebyshevRow {
    std::uint64_t y = 0;
    Interval lambda_over_n;     // sum_{n<=y} Lambda(n)/n
    Interval psi;               // sum_{n<=y} Lambda(n)
    Interval lambda_times_n;    // sum_{n<=y} Lambda(n) n
    Interval logp_sq_upper;     // sum_{y/2<p<=y} (log p)^2
    bool ok_log_upper = false;        // lambda_over_n <= log y
    bool ok_log_lower = false;        // lambda_over_n >= log y - log(3/sqrt 2)
    bool ok_psi_103883 = false;       // psi < 1.03883 y
    bool ok_psi_10004 = false;        // psi <= 1.0004 y (only checked y >= 2e6)
    bool ok_lambda_n = false;         // Lambda*n < 1.03884 y^2/2 (only y > 663)
    bool ok_logp_sq = false;          // <= y log y / 2 (only y >= 117)
    bool all_ok = false;
};

std::vector<ChebyshevRow> chebyshev_checks(std::vector<std::uint64_t> y_samples,
                                           const SieveConfig& cfg = {});

}  // namespace minarc
