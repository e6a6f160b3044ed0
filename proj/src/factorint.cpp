#include "fminor/factorint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fminor {

namespace {

bool mr_witness(const BigInt& n, const BigInt& a)
{
    if (mpz_divisible_p(a.get_mpz_t(), n.get_mpz_t())) return true;
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// First 64 primes; fixed witness set keeps the verdict reproducible.
constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                   59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                                   127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                                   191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
                                   257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

const std::vector<u64>& small_primes()
{
    static const std::vector<u64> primes = [] {
        const u64 limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<u64> out;
        for (u64 p = 2; p <= limit; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (u64 q = p * p; q <= limit; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

// Returns a nontrivial factor of composite n, or 0 when the budget is spent.
BigInt pollard_brent(const BigInt& n, u64& budget)
{
    const u64 batch = 128;
    for (u64 c = 1; budget > 0; ++c) {
        BigInt y = 2, x, ys, q = 1, g = 1, diff;
        u64 r = 1;
        while (g == 1 && budget > 0) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
            for (u64 k = 0; k < r && g == 1 && budget > 0; k += batch) {
                ys = y;
                u64 steps = std::min<u64>({batch, r - k, budget});
                for (u64 i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    diff = babs(x - y);
                    q = q * diff % n;
                }
                budget = budget > steps ? budget - steps : 0;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            // the batch overshot a factor; redo it one gcd at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                diff = babs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

void factor_rec(BigInt n, u64& budget, std::map<BigInt, unsigned>& out, BigInt& cofactor)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    // perfect powers fall to rho slowly; peel them directly
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                for (unsigned long i = 0; i < k; ++i) factor_rec(root, budget, out, cofactor);
                return;
            }
        }
    }
    BigInt d = pollard_brent(n, budget);
    if (d == 0) {
        cofactor *= n;
        return;
    }
    factor_rec(d, budget, out, cofactor);
    factor_rec(n / d, budget, out, cofactor);
}

} // namespace

bool is_probable_prime(const BigInt& n)
{
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    for (unsigned p : kWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    // the first 13 witnesses are decisive below 3.3e24; the rest narrow the
    // error on larger inputs to < 4^-64
    for (unsigned a : kWitnesses) {
        if (!mr_witness(n, a)) return false;
    }
    return true;
}

BigInt Factorization::value() const
{
    BigInt v = cofactor;
    for (const auto& [p, e] : prime_powers) v *= bpow(p, e);
    return v;
}

Factorization factor_integer(BigInt n, u64 rho_budget)
{
    if (n < 1) throw std::invalid_argument("factor_integer: argument must be >= 1");
    Factorization result;
    if (n == 1) return result;
    std::map<BigInt, unsigned> found;
    for (u64 p : small_primes()) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        found[BigInt(p)] = e;
        if (n == 1) break;
    }
    if (n > 1) factor_rec(n, rho_budget, found, result.cofactor);
    result.prime_powers.assign(found.begin(), found.end());
    return result;
}

} // namespace fminor
