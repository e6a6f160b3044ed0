#pragma once

/* Dense univariate polynomials over Z with arbitrary-precision coefficients.
 * Coefficient i is the coefficient of X^i; the zero polynomial is the empty
 * vector and the leading coefficient of anything else is nonzero. */

#include "fminor/bigint.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fminor {

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(const BigInt& constant);
    IntPoly(long constant) : IntPoly(BigInt(constant)) {}
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(const BigInt& a, unsigned k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;
    BigInt content() const; // gcd of coefficients, nonnegative; 0 for zero poly

    BigInt operator()(const BigInt& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "X") const;

private:
    std::vector<BigInt> c_;
    void trim();
};

// Quotient and remainder by a monic divisor; exact over Z.
void divmod_monic(const IntPoly& a, const IntPoly& d, IntPoly& q, IntPoly& r);

// a / b when b divides a exactly (both via monic or scalar path); throws otherwise.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

// lc(b)^(deg a - deg b + 1) * a mod b, the pseudo-remainder.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// Resultant over Z via the subresultant polynomial remainder sequence.
BigInt resultant(IntPoly a, IntPoly b);

} // namespace fminor
