#include "fminor/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fminor {

namespace {
std::mutex g_phi_mutex;
std::map<unsigned, IntPoly> g_phi_cache; // node-based: references stay valid
} // namespace

const IntPoly& cyclotomic_poly(unsigned n)
{
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    for (unsigned d : divisors(n)) {
        if (g_phi_cache.count(d)) continue;
        // X^d - 1 divided by Phi_e for all proper divisors e of d
        std::vector<BigInt> xs(d + 1, BigInt(0));
        xs[0] = -1;
        xs[d] = 1;
        IntPoly num{std::move(xs)};
        for (unsigned e : divisors(d)) {
            if (e == d) continue;
            IntPoly q, r;
            divmod_monic(num, g_phi_cache.at(e), q, r);
            if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
            num = std::move(q);
        }
        g_phi_cache.emplace(d, std::move(num));
    }
    return g_phi_cache.at(n);
}

CycElt::CycElt(unsigned order) : order_(order)
{
    if (order == 0) throw std::invalid_argument("CycElt: order must be positive");
    c_.assign(totient(order), BigInt(0));
}

CycElt CycElt::from_int(unsigned order, const BigInt& v)
{
    CycElt e(order);
    e.c_[0] = v;
    return e;
}

CycElt CycElt::root_power(unsigned order, long long k)
{
    long long m = k % static_cast<long long>(order);
    if (m < 0) m += order;
    return reduce(IntPoly::monomial(1, static_cast<unsigned>(m)), order);
}

bool CycElt::is_zero() const
{
    for (const auto& a : c_)
        if (a != 0) return false;
    return true;
}

bool CycElt::is_one() const
{
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

IntPoly CycElt::to_poly() const { return IntPoly(c_); }

CycElt CycElt::operator-() const
{
    CycElt r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

CycElt& CycElt::operator+=(const CycElt& o)
{
    if (order_ != o.order_) throw std::invalid_argument("CycElt: order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycElt& CycElt::operator-=(const CycElt& o)
{
    if (order_ != o.order_) throw std::invalid_argument("CycElt: order mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycElt& CycElt::operator*=(const CycElt& o)
{
    if (order_ != o.order_) throw std::invalid_argument("CycElt: order mismatch");
    *this = reduce(to_poly() * o.to_poly(), order_);
    return *this;
}

CycElt CycElt::galois(long long k) const
{
    const unsigned n = order_;
    long long m = k % static_cast<long long>(n);
    if (m < 0) m += n;
    if (std::gcd(static_cast<u64>(m), static_cast<u64>(n)) != 1)
        throw std::invalid_argument("galois: multiplier not coprime to order");
    std::vector<BigInt> folded(n, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) folded[(i * m) % n] += c_[i];
    return reduce(IntPoly(std::move(folded)), n);
}

BigInt CycElt::norm() const
{
    if (is_zero()) return 0;
    return resultant(cyclotomic_poly(order_), to_poly());
}

BigInt CycElt::norm_modular() const
{
    if (is_zero()) return 0;
    const unsigned n = order_;
    const unsigned phi = static_cast<unsigned>(c_.size());
    BigInt sum = 0;
    for (const auto& a : c_) sum += babs(a);
    const BigInt bound = bpow(sum, phi); // every conjugate has modulus <= sum
    const BigInt target = 2 * bound;
    const auto units = units_mod(n);

    BigInt value = 0, modulus = 1;
    u64 ell = (u64(1) << 62) + 1;
    while (modulus <= target) {
        ell = next_prime_in_class(ell, n, 1 % n);
        std::vector<u64> cm(phi);
        for (unsigned i = 0; i < phi; ++i) cm[i] = mpz_fdiv_ui(c_[i].get_mpz_t(), ell);
        const u64 g = element_of_order(ell, n);
        u64 prod = 1;
        for (unsigned k : units) {
            const u64 zk = powmod(g, k, ell);
            u64 v = 0;
            for (unsigned i = phi; i-- > 0;) v = (mulmod(v, zk, ell) + cm[i]) % ell;
            prod = mulmod(prod, v, ell);
        }
        // CRT: value' = value mod modulus, = prod mod ell
        const u64 mm = mpz_fdiv_ui(modulus.get_mpz_t(), ell);
        const u64 vm = mpz_fdiv_ui(value.get_mpz_t(), ell);
        const u64 delta = mulmod((prod + ell - vm) % ell, invmod(mm, ell), ell);
        value += modulus * delta;
        modulus *= ell;
        ell += 1;
    }
    if (2 * value > modulus) value -= modulus;
    return value;
}

std::string CycElt::to_string(const std::string& var) const { return to_poly().to_string(var); }

CycElt reduce(const IntPoly& p, unsigned n)
{
    if (n == 0) throw std::invalid_argument("reduce: order must be positive");
    std::vector<BigInt> folded(n, BigInt(0));
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) folded[i % n] += c[i];
    IntPoly q, r;
    divmod_monic(IntPoly(std::move(folded)), cyclotomic_poly(n), q, r);
    CycElt out(n);
    for (int i = 0; i <= r.degree(); ++i) out.c_[i] = r.coeff(i);
    return out;
}

BigInt norm_of_cyclo_at_conjugate(unsigned N, unsigned p)
{
    if (!is_squarefree(N)) throw std::invalid_argument("norm_of_cyclo_at_conjugate: N not square-free");
    if (!is_prime_u64(p) || N % p != 0)
        throw std::invalid_argument("norm_of_cyclo_at_conjugate: p must be a prime divisor of N");
    const unsigned nprime = N / p;
    const BigInt val = reduce(cyclotomic_poly(N), nprime).norm();
    if (babs(val) != bpow(BigInt(p), totient(nprime)))
        throw std::logic_error("norm_of_cyclo_at_conjugate: unexpected magnitude");
    return val;
}

SplittingData splitting_data(unsigned n, u64 q)
{
    if (n == 0) throw std::invalid_argument("splitting_data: order must be positive");
    if (!is_prime_u64(q)) throw std::invalid_argument("splitting_data: q must be prime");
    unsigned a = 0, qa = 1, m = n;
    while (m % q == 0) {
        m /= static_cast<unsigned>(q);
        qa *= static_cast<unsigned>(q);
        ++a;
    }
    const unsigned e = a == 0 ? 1 : totient(qa);
    const unsigned f = mult_order(q, m);
    const unsigned r = totient(m) / f;
    return SplittingData{n, q, e, f, r};
}

} // namespace fminor
