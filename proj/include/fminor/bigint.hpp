#pragma once

#include <gmpxx.h>

#include <string>

namespace fminor {

using BigInt = mpz_class;

inline BigInt bpow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt babs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// Lowercase hex with sign, e.g. -1ab; "0" for zero.
inline std::string to_hex(const BigInt& a) { return a.get_str(16); }

inline BigInt from_hex(const std::string& s)
{
    BigInt r;
    if (r.set_str(s, 16) != 0) throw std::invalid_argument("from_hex: bad digit string");
    return r;
}

} // namespace fminor
