#include "fminor/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fminor {

u64 powmod(u64 a, u64 e, u64 m)
{
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m)
{
    // extended Euclid on signed 128-bit accumulators
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: arguments not coprime");
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

namespace {

bool miller_rabin(u64 n, u64 a)
{
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n)
{
    // n odd composite, not a prime power of interest; deterministic parameter sweep
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod(y, y, n) + c) % n;
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0)
                break; // cycle without factor, retry with next c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out)
{
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // this base set decides primality for all n < 3.3e24, in particular all u64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n)
{
    if (n == 0) throw std::invalid_argument("factor_u64: zero");
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    for (u64 p = 17; p * p <= n && p < 100000; p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

unsigned totient(unsigned n)
{
    if (n == 0) throw std::invalid_argument("totient: zero");
    unsigned result = n, m = n;
    for (unsigned p = 2; static_cast<u64>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 1; static_cast<u64>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    unsigned m = n;
    for (unsigned p = 2; static_cast<u64>(p) * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_squarefree(unsigned n)
{
    if (n == 0) return false;
    for (unsigned p = 2; static_cast<u64>(p) * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::vector<unsigned> units_mod(unsigned n)
{
    if (n == 0) throw std::invalid_argument("units_mod: zero");
    std::vector<unsigned> out;
    for (unsigned k = 0; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    if (out.empty()) out.push_back(0); // n = 1
    return out;
}

unsigned mult_order(u64 q, unsigned n)
{
    if (n == 0) throw std::invalid_argument("mult_order: modulus zero");
    if (std::gcd(q % n, static_cast<u64>(n)) != 1)
        throw std::invalid_argument("mult_order: arguments not coprime");
    if (n == 1) return 1;
    u64 x = q % n;
    unsigned f = 1;
    u64 y = x;
    while (y != 1) {
        y = mulmod(y, x, n);
        ++f;
        if (f > n) throw std::logic_error("mult_order: no order found");
    }
    return f;
}

u64 next_prime_in_class(u64 lo, u64 mod, u64 res)
{
    u64 p = lo + ((res + mod - lo % mod) % mod);
    for (;; p += mod) {
        if (p >= lo && is_prime_u64(p)) return p;
    }
}

u64 element_of_order(u64 ell, unsigned n)
{
    if (n == 1) return 1;
    if ((ell - 1) % n != 0) throw std::invalid_argument("element_of_order: n does not divide ell-1");
    const auto ps = prime_divisors(n);
    for (u64 x = 2; x < ell; ++x) {
        u64 y = powmod(x, (ell - 1) / n, ell);
        if (y == 1) continue;
        bool ok = true;
        for (unsigned p : ps) {
            if (powmod(y, n / p, ell) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return y;
    }
    throw std::logic_error("element_of_order: not found");
}

} // namespace fminor
