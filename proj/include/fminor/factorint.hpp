#pragma once

/* Factorization of arbitrary-precision integers: trial division, a
 * deterministic Miller-Rabin front end, and budgeted Pollard-Brent rho.
 * An exhausted budget leaves a composite cofactor in the result; it is
 * reported, never dropped. */

#include "fminor/bigint.hpp"
#include "fminor/numtheory.hpp"

#include <utility>
#include <vector>

namespace fminor {

// Deterministic for n < 3.3e24; fixed-base Miller-Rabin above that.
bool is_probable_prime(const BigInt& n);

struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> prime_powers; // sorted by prime
    BigInt cofactor{1};                                    // > 1 when the rho budget ran out

    bool complete() const { return cofactor == 1; }
    BigInt value() const;
};

// Factor n >= 1. rho_budget caps total Pollard-Brent iterations.
Factorization factor_integer(BigInt n, u64 rho_budget = 2000000);

} // namespace fminor
