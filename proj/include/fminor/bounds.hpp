#pragma once

/* Quantitative machinery: generalized Vandermonde values at the all-ones
 * point, the maxima gamma_n and Gamma_p driving the finite-characteristic
 * nonvanishing threshold q^r > Gamma_p^(p-1), the certification-chain
 * threshold p_{j+1} > (P_j/2)^(P_j phi(P_j)/4), the Hadamard norm bound
 * m^(m phi(N)/2), and the divisibility-lifting check for polynomials with
 * nonnegative coefficients.  Every fractional-exponent inequality is
 * restated as an equivalent integer-power comparison; verdicts never touch
 * floating point. */

#include "fminor/bigint.hpp"
#include "fminor/intpoly.hpp"
#include "fminor/numtheory.hpp"

#include <string>
#include <vector>

namespace fminor {

// prod_{i<j} (a_j - a_i) / prod_{i<j} (j - i) for a strictly increasing
// tuple; always a positive integer.
BigInt schur_at_one(const std::vector<unsigned>& a);

// max of schur_at_one over strictly increasing n-tuples in [0, p-1];
// requires 2 <= n <= p-1.  Branch-and-bound with the first coordinate
// pinned to 0 (the value is translation invariant), guarded by a node
// budget for infeasibly wide searches.
BigInt gamma_n(unsigned p, unsigned n);

// max over 2 <= n <= p-1 of gamma_n(p, n); requires p prime, 3 <= p <= 31.
BigInt gamma_max(unsigned p);

struct ThresholdReport {
    std::string description;
    BigInt lhs = 0; // exact integer comparison: holds iff lhs > rhs
    BigInt rhs = 0;
    bool holds = false;
    BigInt threshold = 0; // floor of the bound the candidate must exceed
    unsigned ord = 0;     // multiplicative order, where applicable
};

// q^r > Gamma_p^(p-1) with r = ord_p(q); the integer restatement of
// q > Gamma_p^((p-1)/r).  Requires distinct primes.
ThresholdReport zhang_threshold_holds(unsigned p, u64 q);

// p_next^4 * 2^(P phi(P)) > P^(P phi(P)) with P the product of the sorted
// prefix; the integer restatement of p_next > (P/2)^(P phi(P)/4).
ThresholdReport chain_threshold_holds(const std::vector<u64>& prefix, u64 p_next);

// m^(m phi(N)/2); m = 1 gives 1, N < 3 with m > 1 is rejected.
BigInt hadamard_char_bound(unsigned m, unsigned N);

struct LiftReport {
    std::vector<BigInt> residue_sums;  // r_i = sum of coefficients with index = i mod p
    bool congruent_mod_q = false;      // (i) all r_i equal mod q
    bool q_exceeds_value_at_one = false; // (ii) q > f(1)
    bool divisible_over_z = false;     // (iii) all r_i equal over Z
};

// Residue sums of f by index class mod p; the implication (i) and (ii)
// together force (iii), which is asserted.  f must have nonnegative
// coefficients and p != q, both prime.
LiftReport lift_divisibility(const IntPoly& f, unsigned p, const BigInt& q);

} // namespace fminor
