#include "fminor/bounds.hpp"

#include "fminor/factorint.hpp"

#include <sstream>
#include <stdexcept>

namespace fminor {

BigInt schur_at_one(const std::vector<unsigned>& a)
{
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("schur_at_one: empty tuple");
    for (std::size_t i = 1; i < n; ++i)
        if (a[i] <= a[i - 1]) throw std::invalid_argument("schur_at_one: tuple not strictly increasing");
    BigInt num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= a[j] - a[i];
            den *= j - i;
        }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("schur_at_one: quotient not integral");
    return q;
}

namespace {

// maximize prod_{i<j} (a_j - a_i) over 0 = a_1 < ... < a_n <= p-1
void gamma_search(unsigned p, unsigned n, std::vector<unsigned>& chosen, const BigInt& partial,
                  BigInt& best, u64& budget)
{
    if (budget-- == 0) throw std::invalid_argument("gamma_n: enumeration budget exhausted");
    const unsigned k = static_cast<unsigned>(chosen.size());
    if (k == n) {
        if (partial > best) best = partial;
        return;
    }
    // crude bound: every one of the remaining difference factors is < p
    const unsigned remaining_pairs = (n - k) * k + (n - k) * (n - k - 1) / 2;
    if (partial * bpow(BigInt(p - 1), remaining_pairs) <= best) return;
    for (unsigned next = chosen.back() + 1; next + (n - k - 1) <= p - 1; ++next) {
        BigInt ext = partial;
        for (unsigned c : chosen) ext *= next - c;
        chosen.push_back(next);
        gamma_search(p, n, chosen, ext, best, budget);
        chosen.pop_back();
    }
}

} // namespace

BigInt gamma_n(unsigned p, unsigned n)
{
    if (n < 2 || n > p - 1) throw std::invalid_argument("gamma_n: need 2 <= n <= p-1");
    BigInt best = 0;
    std::vector<unsigned> chosen{0}; // translation invariance pins a_1 = 0
    u64 budget = 200000000;
    gamma_search(p, n, chosen, BigInt(1), best, budget);
    BigInt den = 1;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) den *= j - i;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), best.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("gamma_n: maximum not divisible by the Vandermonde base");
    return q;
}

BigInt gamma_max(unsigned p)
{
    if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("gamma_max: p must be a prime >= 3");
    if (p > 31) throw std::invalid_argument("gamma_max: p beyond the full-sweep limit of 31");
    BigInt best = 0;
    for (unsigned n = 2; n <= p - 1; ++n) {
        BigInt g = gamma_n(p, n);
        if (g > best) best = g;
    }
    return best;
}

ThresholdReport zhang_threshold_holds(unsigned p, u64 q)
{
    if (!is_prime_u64(p) || !is_prime_u64(q)) throw std::invalid_argument("zhang_threshold: primes required");
    if (p == q) throw std::invalid_argument("zhang_threshold: p and q must be distinct");
    if (p < 3) throw std::invalid_argument("zhang_threshold: p must be at least 3");
    ThresholdReport rep;
    rep.ord = mult_order(q, p);
    const BigInt gp = gamma_max(p);
    rep.lhs = bpow(BigInt(static_cast<unsigned long>(q)), rep.ord);
    rep.rhs = bpow(gp, p - 1);
    rep.holds = rep.lhs > rep.rhs;
    // integer part of Gamma_p^((p-1)/r), the bound q itself must exceed
    BigInt th;
    mpz_root(th.get_mpz_t(), rep.rhs.get_mpz_t(), rep.ord);
    rep.threshold = th;
    std::ostringstream os;
    os << "q^r > Gamma_p^(p-1) with p=" << p << " q=" << q << " r=" << rep.ord
       << " Gamma_p=" << gp.get_str();
    rep.description = os.str();
    return rep;
}

ThresholdReport chain_threshold_holds(const std::vector<u64>& prefix, u64 p_next)
{
    if (prefix.empty()) throw std::invalid_argument("chain_threshold: empty prefix");
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (!is_prime_u64(prefix[i])) throw std::invalid_argument("chain_threshold: prefix must be prime");
        if (i > 0 && prefix[i] <= prefix[i - 1])
            throw std::invalid_argument("chain_threshold: prefix must be strictly increasing");
    }
    if (!is_prime_u64(p_next) || p_next <= prefix.back())
        throw std::invalid_argument("chain_threshold: candidate must be a prime above the prefix");
    BigInt P = 1, phi = 1;
    for (u64 p : prefix) {
        P *= static_cast<unsigned long>(p);
        phi *= static_cast<unsigned long>(p - 1);
    }
    const BigInt exponent = P * phi; // P phi(P)
    if (!exponent.fits_ulong_p())
        throw std::invalid_argument("chain_threshold: exponent too large to evaluate");
    const unsigned long e = exponent.get_ui();
    ThresholdReport rep;
    rep.lhs = bpow(BigInt(static_cast<unsigned long>(p_next)), 4) * bpow(BigInt(2), e);
    rep.rhs = bpow(P, e);
    rep.holds = rep.lhs > rep.rhs;
    // floor((P/2)^(P phi(P)/4)): divide by the power of two, then a 4th root
    BigInt scaled;
    mpz_fdiv_q_2exp(scaled.get_mpz_t(), rep.rhs.get_mpz_t(), e);
    BigInt th;
    mpz_root(th.get_mpz_t(), scaled.get_mpz_t(), 4);
    rep.threshold = th;
    std::ostringstream os;
    os << "p_next^4 * 2^(P*phi(P)) > P^(P*phi(P)) with P=" << P.get_str() << " phi(P)=" << phi.get_str()
       << " p_next=" << p_next;
    rep.description = os.str();
    return rep;
}

BigInt hadamard_char_bound(unsigned m, unsigned N)
{
    if (m == 0) throw std::invalid_argument("hadamard_char_bound: m must be positive");
    if (m == 1) return 1;
    if (N < 3) throw std::invalid_argument("hadamard_char_bound: N < 3 has odd phi(N)");
    const unsigned long e = static_cast<unsigned long>(m) * totient(N);
    if (e % 2 != 0) throw std::logic_error("hadamard_char_bound: odd exponent");
    return bpow(BigInt(m), e / 2);
}

LiftReport lift_divisibility(const IntPoly& f, unsigned p, const BigInt& q)
{
    if (!is_prime_u64(p) || !is_probable_prime(q))
        throw std::invalid_argument("lift_divisibility: p and q must be prime");
    if (q == p) throw std::invalid_argument("lift_divisibility: p and q must be distinct");
    for (const auto& c : f.coeffs())
        if (c < 0) throw std::invalid_argument("lift_divisibility: coefficients must be nonnegative");
    LiftReport rep;
    rep.residue_sums.assign(p, BigInt(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) rep.residue_sums[i % p] += f.coeff(i);
    rep.congruent_mod_q = true;
    rep.divisible_over_z = true;
    for (unsigned i = 1; i < p; ++i) {
        if (rep.residue_sums[i] != rep.residue_sums[0]) rep.divisible_over_z = false;
        if ((rep.residue_sums[i] - rep.residue_sums[0]) % q != 0) rep.congruent_mod_q = false;
    }
    rep.q_exceeds_value_at_one = q > f(BigInt(1));
    if (rep.congruent_mod_q && rep.q_exceeds_value_at_one && !rep.divisible_over_z)
        throw std::logic_error("lift_divisibility: implication violated");
    return rep;
}

} // namespace fminor
