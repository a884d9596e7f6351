// SPDX-License-Identifier: Apache-2.0
//
// Evaluates the explicit bound formulas: the main minor-arc theorem, the
// type I / type II lemma bounds, the worst-case table, parameter
// selection, and the constants table with its startup audit. All
// evaluation is end-to-end interval arithmetic; reported bounds are upper
// endpoints.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minarc/interval.hpp"

namespace minarc {

// ---------------------------------------------------------------- constants

struct Constants {
    // base
    Interval c0;    // 31.521 >= |(eta2'')^|_inf (certified separately)
    Interval c1;    // 1.0000028 > 1 + 8 log2 / 2e6
    Interval c2;    // 6 pi / (5 sqrt c0)
    Interval c2_b1; // (3 pi / 5 sqrt c0)(1 + sqrt(13/3)), the unrestricted variant
    Interval c0p;   // 0.798437 > c0/(2pi)^2
    Interval c0pp;  // 1.685532 > 96 log2/(2pi)^2
    // S_I1 family
    Interval c3I, c4I, c5I, c6I, c7I, c8I, c9I, c10I, c11I;
    // S_I2 family
    Interval c4I2, c5I2, c6I2, c8I2, c9I2, c10I2, c12I2, c13I2, c14I2, c15I2, c16I2, c17I2, c18I2;
    // type II family
    Interval k0, k1, k2, k4, k6, k7, k9;

    static const Constants& table();
};

struct AuditLine {
    std::string name;
    bool ok;
    std::string detail;
};
// Verifies every defining strict inequality; all lines must pass.
std::vector<AuditLine> audit_constants();

// -------------------------------------------------------------- small tools

std::uint64_t phi_of(std::uint64_t q);                       // exact Euler phi
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// e^gamma log log q + 2.50637 / log log q  (majorant of q/phi(q)), q >= 3.
Interval digamma_majorant(double q);

// ------------------------------------------------------- main theorem pieces

// C_{x,t} = log(1 + log 4t / (2 log(9 x^{1/3} / (2.004 t)))), 0 < t < 9x^{1/3}/2.004.
Interval engine_C(const Interval& x, const Interval& t);
// R_{x,t} = 0.27125 C_{x,t} + 0.41415.
Interval engine_R(const Interval& x, const Interval& t);

struct ArcApprox {
    double x = 0;
    std::int64_t a = 0;
    std::uint64_t q = 1;
    double delta = 0;
    double Q = 0;       // (3/4) x^{2/3} for the main theorem
    double delta0 = 2;  // max(2, |delta|/4)

    static ArcApprox make(double x, std::int64_t a, std::uint64_t q, double delta);
};

struct BoundReport {
    enum class Branch { small_q, large_q };
    Branch branch = Branch::small_q;
    Interval total;  // literal interval sum of the components
    std::vector<std::pair<std::string, Interval>> components;
    double U = 0, V = 0, Qp = 0, theta = 0;
};

// Theorem-statement constants (0.5, 2.5) by default; the proof pair
// (0.49911, 2.491) behind proof_constants.
BoundReport main_theorem_bound(const ArcApprox& arc, bool proof_constants = false);

// ------------------------------------------------- worst case / Table 1 mode

// Worst-case bound ratio for q >= q0, |delta| <= delta_cap, under the
// documented primorial convention:
//  * q = q0 with q/phi(q) of the largest primorial <= q0, and
//  * the smallest primorial >= q0 with its exact ratio,
// evaluated with the first-choice assembly (the proof's S_I1 + S_I2 + S_II
// bounds before the final theorem-statement coarsening), taking the worse
// delta regime. Returns bound/x.
Interval worst_case_ratio(double x, double q0, double delta_cap);

struct Table1Row {
    double q0;
    Interval assembly_ratio;  // documented convention (matches the table)
    Interval theorem_ratio;   // eq-(1.2) statement at q = q0, primorial phi
};
std::vector<Table1Row> table1(double x, const std::vector<double>& q0_list, double delta_cap);

// ------------------------------------------------------- parameter selection

enum class ParameterChoice { first, second };

struct Parameters {
    Interval U, V, Q, y, theta;
    bool side_conditions_ok = true;
    std::vector<std::string> violations;
};
Parameters select_parameters(double x, double q, double delta, ParameterChoice choice);

// ----------------------------------------------------------------- conclusion

// The AM-GM anchor rho of the conclusion. The printed value 3.61407
// corresponds to the anchor t = 4 q0 = 8e5 (x1 = 1e25, q0 = 2e5); the
// coefficients 0.27125 / 0.41415 / 0.49911 of the final R correspond to
// the same expression at t = 2 q0. Both are exposed.
Interval optimal_rho();   // t = 4 q0: contains 3.61407
Interval balance_rho();   // t = 2 q0: contains 3.39796..

struct RhoConsequences {
    Interval coeff_C;      // 1/(2 sqrt rho)            -> 0.27125 covers it
    Interval coeff_log;    // 1/(4 sqrt rho) + sqrt(rho) 0.30214/2 (+ C-absorption)
    Interval coeff_const;  // (1/2)(log2/sqrt rho + (sqrt rho/2) 0.67506)
};
RhoConsequences rho_consequences(const Interval& rho);

// ------------------------------------------------ lemma right-hand sides

// Trigonometric-sum lemma bounds.
Interval trig_full_period_rhs(const Interval& A, const Interval& C, std::uint64_t q);
Interval trig_q_excluded_rhs(const Interval& A, const Interval& C, std::uint64_t q);
Interval trig_b_over_sin_rhs(const Interval& B, const Interval& C, std::uint64_t q);

// Quadratic-decay bound (1/4) c0norm / sin^2(pi alpha).
Interval quadratic_decay_rhs(const Interval& c0norm, const Interval& sin_pi_alpha);

// Large-sieve lemma bounds; sum_logp_sq = sum_{W'<p<=W} (log p)^2.
Interval ls_block_rhs(double A0, double A1, std::uint64_t q, double Q, double W, double Wp,
                      const Interval& sum_logp_sq, bool odd_m);
Interval ls_prime_support_rhs(double A0, double A1, std::uint64_t q, double W,
                              const Interval& sum_logp_sq, bool odd_m);
Interval ls_single_block_rhs(double varrho, double rho, std::uint64_t q, double W, double Wp,
                             const Interval& sum_logp_sq);
// Prop. bounds for S_2(U',W',W) with v=2.
Interval ls_kraken_garn1b_rhs(double x, double W, double Wp, std::uint64_t q, double rho,
                              const Interval& sum_logp_sq);
Interval ls_kraken_garn1a_rhs(double x, double W, double Wp, std::uint64_t q,
                              const Interval& sum_logp_sq);
Interval ls_kraken_gargamel_rhs(double x, double W, double Wp, std::uint64_t q,
                                const Interval& sum_logp_sq);
Interval ls_kraken_procida2_rhs(double x, double W, double Wp, std::uint64_t q, double delta,
                                const Interval& sum_logp_sq);
Interval ls_kraken_procida3_rhs(double x, double W, double Wp, std::uint64_t q, double delta,
                                double rho, double Qarc, const Interval& sum_logp_sq);

// Type I lemma bounds (the full right-hand sides, with the mu-sums
// evaluated exactly). M is fixed to min(Q0/2, D).
struct TypeILemmaInput {
    double x = 0;
    std::int64_t a = 1;
    std::uint64_t q = 1;
    double delta = 0;
    double Q0 = 16;
    double D = 1;
    double U = 0, V = 0;  // bogus only (D = UV)
    double eps = 0.07;
};
Interval bosta1_rhs(const TypeILemmaInput& in);
Interval bosta2_rhs(const TypeILemmaInput& in);
Interval bostb1_rhs(const TypeILemmaInput& in);
Interval bogus_rhs(const TypeILemmaInput& in);

// (guanaco): the UV coefficient, 4.39636 for small |delta|,
// 4.88963 + 1.31541 eps beyond |delta| > 1/(2 c2).
Interval guanaco_C0(double delta, double eps);
// (therwald): first-choice S_I1 bound as a function of (x, q, delta).
Interval typeI_SI1_bound(double x, std::uint64_t q, double delta);
// (cocot) Phi, with the empty-range case returning 0.
Interval typeII_Phi(double x, double q, double U, double V, double theta);

// ------------------------------------------- second choice of parameters

struct SecondChoiceReport {
    Interval sI1, sI2, sII;  // absolute bounds at x (honest re-evaluation)
    Interval total;
    // the printed coefficient forms evaluated at the same x
    Interval printed_sI1, printed_sI2, printed_sII, printed_total;
    bool sI1_dominated = false, sI2_dominated = false, sII_dominated = false;
    bool total_dominated = false;    // assembly <= 0.27266/1217.35 pair
    bool printed_sum_dominated = false;  // 4.1982+1213.15+0.272652 <= that pair
    bool rounded_dominates = false;  // 0.2727/1218 >= 0.27266/1217.35
};
SecondChoiceReport second_choice_totals(double x);

}  // namespace minarc
