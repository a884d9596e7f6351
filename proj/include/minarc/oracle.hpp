// SPDX-License-Identifier: Apache-2.0
//
// Brute-force numerical oracles: every lemma-level inequality is tested at
// desk scale by literal term-by-term summation in interval arithmetic
// against the engine's right-hand sides.
//
// Verdicts use the sound direction: a VIOLATION requires lhs.lo > rhs.hi
// (certainly false), `holds` requires lhs.hi <= rhs.lo (certainly true);
// anything else is inconclusive, never a silent pass.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minarc/engine.hpp"
#include "minarc/interval.hpp"

namespace minarc {

enum class Verdict { holds, inconclusive, violation, skipped };

struct CheckResult {
    std::uint64_t id = 0;
    std::uint64_t seed = 0;
    std::string lemma;
    Interval lhs, rhs;
    Verdict verdict = Verdict::skipped;
    std::string note;
};

Verdict compare_sound(const Interval& lhs, const Interval& rhs);

// --------------------------------------------------------- trig sum checks

struct TrigInstance {
    std::int64_t a = 1;
    std::uint64_t q = 1;
    double beta = 0;  // |beta| <= 1, alpha = a/q + beta/(q Q)
    double Q = 1;
    double y1 = 0, y2 = 0;  // (y1, y2]; for the full-period lemma y2 = y1 + q
    double A = 0, C = 0, B = 0;
};

enum class TrigVariant { sum_over_full_period, q_excluded, b_over_sin };

CheckResult trig_lemma_check(const TrigInstance& inst, TrigVariant which);

// ----------------------------------------------------- quadratic decay check

// lhs = |sum_n eta2(n/N) e(alpha n)|, rhs = (1/4)(c0/N)/sin^2(pi alpha).
CheckResult quadratic_decay_check(double alpha, std::uint64_t N);
// direct lhs evaluation, exposed for the conjugation property test
ComplexInterval scaled_eta2_sum(double alpha, std::uint64_t N);

// -------------------------------------------------------- large sieve checks

struct SieveInstance {
    double x = 0;         // kraken only
    std::int64_t a = 1;
    std::uint64_t q = 1;
    double delta = 0;     // alpha (or 2 alpha) = a/q + delta/x
    double Q = 1;
    double W = 0, Wp = 0;  // primes in (Wp, W]
    double A0 = 0, A1 = 0; // m-range (A0, A1]
    double varrho = 0, rho = 0;
    bool odd_m = false;    // odd variants and kraken use 2 alpha = a/q + ...
};

enum class SieveVariant {
    pokor1, pokor2, zerom,
    pokor1_odd, pokor2_odd, zerom_odd,
    kraken_garn1b, kraken_garn1a, kraken_gargamel, kraken_procida2, kraken_procida3
};

CheckResult large_sieve_check(const SieveInstance& inst, SieveVariant which);

// --------------------------------------------------------- Vaughan identity

struct VaughanResult {
    ComplexInterval S_total, S_I1, S_I2, S_II, S_0inf, S_0v;
    ComplexInterval residual;  // S_total - (S_I1 - S_I2 + S_II + S_0inf + S_0v)
    bool residual_contains_zero = false;
    double residual_width = 0;
};

VaughanResult vaughan_decompose(double alpha, std::uint64_t x, double U, double V);

// --------------------------------------------------------- type I lemma checks

enum class TypeILemma { bosta1, bosta2, bostb1, bogus };

CheckResult type_I_lemma_check(const TypeILemmaInput& in, TypeILemma which);

// ------------------------------------------------------------------- suites

struct SuiteSummary {
    std::string name;
    std::uint64_t seed = 0;
    std::uint64_t total = 0, holds = 0, inconclusive = 0, violations = 0, skipped = 0;
    std::vector<CheckResult> results;  // full list, ids in generation order
    double inconclusive_rate() const {
        std::uint64_t effective = total - skipped;
        return effective == 0 ? 0.0 : double(inconclusive) / double(effective);
    }
};

SuiteSummary run_trig_suite(TrigVariant which, int count, std::uint64_t seed);
SuiteSummary run_large_sieve_suite(SieveVariant which, int count, std::uint64_t seed);
SuiteSummary run_type_I_suite(int count, std::uint64_t seed, double eps = 0.07);
SuiteSummary run_vaughan_suite(int count, std::uint64_t seed, double x_max,
                               double residual_tol_per_x = 1e-8);
SuiteSummary run_quadratic_decay_suite(int count, std::uint64_t seed);

// JSON-lines serialization of one result record.
std::string check_result_jsonl(const CheckResult& r);

}  // namespace minarc
