#pragma once

/* Word-sized number theory: deterministic primality, factoring, totients,
 * unit groups, and modular arithmetic on 64-bit residues. */

#include <cstdint>
#include <utility>
#include <vector>

namespace fminor {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m); // requires gcd(a, m) = 1

bool is_prime_u64(u64 n); // deterministic Miller-Rabin

// Sorted (prime, exponent) pairs; n >= 1.
std::vector<std::pair<u64, unsigned>> factor_u64(u64 n);

unsigned totient(unsigned n);
std::vector<unsigned> divisors(unsigned n);       // sorted, includes 1 and n
std::vector<unsigned> prime_divisors(unsigned n); // sorted, distinct
bool is_squarefree(unsigned n);

// {k in [0, n) : gcd(k, n) = 1}; returns {0} for n = 1.
std::vector<unsigned> units_mod(unsigned n);

// Least f >= 1 with q^f = 1 (mod n); requires gcd(q, n) = 1.
unsigned mult_order(u64 q, unsigned n);

// Smallest prime p >= lo with p = res (mod mod); requires gcd(res, mod) = 1 or res = 0, mod = 1.
u64 next_prime_in_class(u64 lo, u64 mod, u64 res);

// Element of multiplicative order exactly n in F_ell; requires n | ell - 1.
u64 element_of_order(u64 ell, unsigned n);

} // namespace fminor
