#pragma once

/* Exact arithmetic in Z[omega_n], omega_n a primitive n-th root of unity.
 * Elements are kept in the canonical power basis 1, omega, ..., omega^(phi(n)-1)
 * by reduction mod Phi_n, so equality and zero tests are coefficient
 * comparisons.  Norms come from two independent backends: the subresultant
 * resultant over Z, and a multi-modular product of conjugate values
 * reconstructed by CRT against an explicit magnitude bound. */

#include "fminor/bigint.hpp"
#include "fminor/intpoly.hpp"
#include "fminor/numtheory.hpp"

#include <vector>

namespace fminor {

// Phi_n, computed by iterated exact division of X^n - 1 and memoized.
const IntPoly& cyclotomic_poly(unsigned n);

class CycElt {
public:
    explicit CycElt(unsigned order); // zero element
    static CycElt from_int(unsigned order, const BigInt& v);
    static CycElt root_power(unsigned order, long long k); // omega^k

    unsigned order() const { return order_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    IntPoly to_poly() const;

    CycElt operator-() const;
    CycElt& operator+=(const CycElt& o);
    CycElt& operator-=(const CycElt& o);
    CycElt& operator*=(const CycElt& o);
    friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
    friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
    friend CycElt operator*(CycElt a, const CycElt& b) { return a *= b; }
    friend bool operator==(const CycElt& a, const CycElt& b)
    {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    // Image under omega -> omega^k; requires gcd(k, order) = 1.
    CycElt galois(long long k) const;

    // Product of all phi(n) Galois conjugates, as the resultant of Phi_n
    // with the representing polynomial.
    BigInt norm() const;

    // Same integer via evaluation at primitive roots in F_ell for primes
    // ell = 1 (mod n), CRT-reconstructed.
    BigInt norm_modular() const;

    std::string to_string(const std::string& var = "w") const;

private:
    unsigned order_;
    std::vector<BigInt> c_;

    friend CycElt reduce(const IntPoly& p, unsigned n);
};

// p(omega_n): reduce first mod X^n - 1, then take the remainder mod Phi_n.
CycElt reduce(const IntPoly& p, unsigned n);

// N(Phi_N(omega_N^p)) over Q(omega_{N/p}); |value| = p^phi(N/p).
// Requires N square-free and p a prime divisor of N.
BigInt norm_of_cyclo_at_conjugate(unsigned N, unsigned p);

// Splitting of the rational prime q in Z[omega_n]: ramification index e,
// residue degree f, and the number r of primes above q; r*f = phi(n / q^a).
struct SplittingData {
    unsigned n;
    u64 q;
    unsigned e;
    unsigned f;
    unsigned r;
};
SplittingData splitting_data(unsigned n, u64 q);

} // namespace fminor
