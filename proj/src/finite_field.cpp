#include "fminor/finite_field.hpp"

#include "fminor/cyclotomic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fminor {

namespace {

// dense polynomials over F_q as coefficient vectors, ascending, trimmed
using Fq = std::vector<u64>;

void pm_trim(Fq& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pm_deg(const Fq& a) { return static_cast<int>(a.size()) - 1; }

Fq pm_mul(const Fq& a, const Fq& b, u64 q)
{
    if (a.empty() || b.empty()) return {};
    Fq out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], q)) % q;
    }
    pm_trim(out);
    return out;
}

// a = quot*d + rem with deg rem < deg d; d nonzero
void pm_divrem(Fq a, const Fq& d, u64 q, Fq& quot, Fq& rem)
{
    quot.clear();
    if (pm_deg(a) >= pm_deg(d)) quot.assign(a.size() - d.size() + 1, 0);
    const u64 lcinv = invmod(d.back(), q);
    const int dd = pm_deg(d);
    for (int k = pm_deg(a); k >= dd; --k) {
        if (a[k] == 0) continue;
        const u64 c = mulmod(a[k], lcinv, q);
        quot[k - dd] = c;
        for (std::size_t j = 0; j < d.size(); ++j) {
            u64 sub = mulmod(c, d[j], q);
            a[k - dd + j] = (a[k - dd + j] + q - sub) % q;
        }
    }
    pm_trim(a);
    pm_trim(quot);
    rem = std::move(a);
}

Fq pm_rem(Fq a, const Fq& d, u64 q)
{
    Fq quot, rem;
    pm_divrem(std::move(a), d, q, quot, rem);
    return rem;
}

Fq pm_mulmod(const Fq& a, const Fq& b, const Fq& mod, u64 q)
{
    return pm_rem(pm_mul(a, b, q), mod, q);
}

Fq pm_powmod(Fq base, const BigInt& e, const Fq& mod, u64 q)
{
    Fq result{1};
    base = pm_rem(std::move(base), mod, q);
    const unsigned long bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (unsigned long i = bits; i-- > 0;) {
        result = pm_mulmod(result, result, mod, q);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = pm_mulmod(result, base, mod, q);
    }
    return result;
}

Fq pm_monic(Fq a, u64 q)
{
    if (a.empty()) return a;
    const u64 s = invmod(a.back(), q);
    for (auto& c : a) c = mulmod(c, s, q);
    return a;
}

Fq pm_gcd(Fq a, Fq b, u64 q)
{
    while (!b.empty()) {
        Fq r = pm_rem(std::move(a), b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return pm_monic(std::move(a), q);
}

Fq pm_sub(Fq a, const Fq& b, u64 q)
{
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + q - b[i]) % q;
    pm_trim(a);
    return a;
}

Fq random_poly(std::mt19937_64& rng, int below_deg, u64 q)
{
    Fq a(below_deg);
    for (auto& c : a) c = rng() % q;
    pm_trim(a);
    return a;
}

// equal-degree factorization: h square-free with all irreducible factors of degree f
void edf(const Fq& h, unsigned f, u64 q, std::mt19937_64& rng, std::vector<Fq>& out)
{
    if (pm_deg(h) == static_cast<int>(f)) {
        out.push_back(pm_monic(h, q));
        return;
    }
    for (;;) {
        Fq a = random_poly(rng, pm_deg(h), q);
        if (a.empty()) continue;
        Fq d;
        if (q == 2) {
            // trace map a + a^2 + ... + a^(2^(f-1)) splits over F_2
            Fq t = a, s = a;
            for (unsigned i = 1; i < f; ++i) {
                s = pm_mulmod(s, s, h, q);
                t = pm_sub(std::move(t), s, q); // subtraction = addition mod 2
            }
            d = pm_gcd(h, t, q);
        } else {
            BigInt e = (bpow(BigInt(static_cast<unsigned long>(q)), f) - 1) / 2;
            Fq b = pm_powmod(a, e, h, q);
            d = pm_gcd(h, pm_sub(std::move(b), Fq{1}, q), q);
        }
        if (pm_deg(d) > 0 && pm_deg(d) < pm_deg(h)) {
            edf(d, f, q, rng, out);
            Fq quot, rem;
            pm_divrem(h, d, q, quot, rem);
            if (!rem.empty()) throw std::logic_error("edf: split factor does not divide");
            edf(quot, f, q, rng, out);
            return;
        }
    }
}

Fq phi_mod_q(unsigned n, u64 q)
{
    const IntPoly& phi = cyclotomic_poly(n);
    Fq h(phi.coeffs().size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = mpz_fdiv_ui(phi.coeff(i).get_mpz_t(), q);
    pm_trim(h);
    return h;
}

} // namespace

FiniteFieldCtx::FiniteFieldCtx(unsigned n, u64 q, unsigned f, std::vector<u64> modulus)
    : q_(q), n_(n), f_(f), modulus_(std::move(modulus))
{
}

FiniteFieldCtx FiniteFieldCtx::build(unsigned n, u64 q)
{
    if (!is_prime_u64(q)) throw std::invalid_argument("build_field: q must be prime");
    if (n == 0) throw std::invalid_argument("build_field: order must be positive");
    if (n % q == 0) throw std::invalid_argument("build_field: q divides n");
    const unsigned f = mult_order(q, n);
    Fq h = phi_mod_q(n, q);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<u64>(n) << 32) ^ q);
    std::vector<Fq> factors;
    edf(h, f, q, rng, factors);
    std::sort(factors.begin(), factors.end());
    FiniteFieldCtx ctx(n, q, f, factors.front());
    ctx.validate();
    return ctx;
}

FiniteFieldCtx FiniteFieldCtx::with_modulus(unsigned n, u64 q, std::vector<u64> modulus)
{
    if (!is_prime_u64(q)) throw std::invalid_argument("with_modulus: q must be prime");
    if (n == 0 || n % q == 0) throw std::invalid_argument("with_modulus: q divides n");
    for (auto& c : modulus) c %= q;
    pm_trim(modulus);
    const unsigned f = mult_order(q, n);
    if (pm_deg(modulus) != static_cast<int>(f) || modulus.back() != 1)
        throw std::invalid_argument("with_modulus: modulus must be monic of degree ord_n(q)");
    FiniteFieldCtx ctx(n, q, f, std::move(modulus));
    ctx.validate();
    return ctx;
}

void FiniteFieldCtx::validate() const
{
    // modulus must divide Phi_n mod q, and zeta must have order exactly n
    Fq rem = pm_rem(phi_mod_q(n_, q_), modulus_, q_);
    if (!rem.empty()) throw std::invalid_argument("field modulus does not divide Phi_n mod q");
    FFElt z = zeta();
    if (!(ff_pow(z, static_cast<u64>(n_)) == one()))
        throw std::logic_error("zeta^n != 1");
    for (unsigned p : prime_divisors(n_)) {
        if (ff_pow(z, static_cast<u64>(n_ / p)) == one())
            throw std::logic_error("zeta has order smaller than n");
    }
}

FFElt FiniteFieldCtx::zero() const { return FFElt(this, std::vector<u64>(f_, 0)); }

FFElt FiniteFieldCtx::one() const { return from_int(1); }

FFElt FiniteFieldCtx::from_int(u64 v) const
{
    std::vector<u64> c(f_, 0);
    c[0] = v % q_;
    return FFElt(this, std::move(c));
}

FFElt FiniteFieldCtx::from_coeffs(std::vector<u64> c) const
{
    if (c.size() > f_) {
        Fq r = pm_rem(std::move(c), modulus_, q_);
        c = std::move(r);
    }
    c.resize(f_, 0);
    for (auto& x : c) x %= q_;
    return FFElt(this, std::move(c));
}

FFElt FiniteFieldCtx::zeta() const
{
    if (f_ == 1) {
        // X = root of the linear modulus: X - r has coefficients (q - r, 1)
        return FFElt(this, {(q_ - modulus_[0] % q_) % q_});
    }
    std::vector<u64> c(f_, 0);
    c[1] = 1;
    return FFElt(this, std::move(c));
}

FFElt FiniteFieldCtx::zeta_pow(long long e) const
{
    long long m = e % static_cast<long long>(n_);
    if (m < 0) m += n_;
    return ff_pow(zeta(), static_cast<u64>(m));
}

FFElt::FFElt(const FiniteFieldCtx* ctx, std::vector<u64> c) : ctx_(ctx), c_(std::move(c))
{
    if (!ctx_) throw std::invalid_argument("FFElt: null context");
    if (c_.size() != ctx_->f()) throw std::invalid_argument("FFElt: wrong coefficient count");
}

const FiniteFieldCtx& FFElt::ctx() const
{
    if (!ctx_) throw std::logic_error("FFElt: empty element");
    return *ctx_;
}

bool FFElt::is_zero() const
{
    for (u64 c : c_)
        if (c != 0) return false;
    return true;
}

namespace {
void require_same_ctx(const FFElt& a, const FFElt& b)
{
    if (&a.ctx() != &b.ctx() && !(a.ctx() == b.ctx()))
        throw std::invalid_argument("FFElt: context mismatch");
}
} // namespace

FFElt FFElt::operator-() const
{
    FFElt r = *this;
    const u64 q = ctx().q();
    for (auto& c : r.c_) c = (q - c) % q;
    return r;
}

FFElt& FFElt::operator+=(const FFElt& o)
{
    require_same_ctx(*this, o);
    const u64 q = ctx().q();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % q;
    return *this;
}

FFElt& FFElt::operator-=(const FFElt& o)
{
    require_same_ctx(*this, o);
    const u64 q = ctx().q();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + q - o.c_[i]) % q;
    return *this;
}

FFElt& FFElt::operator*=(const FFElt& o)
{
    require_same_ctx(*this, o);
    const u64 q = ctx().q();
    if (ctx().f() == 1) {
        c_[0] = mulmod(c_[0], o.c_[0], q);
        return *this;
    }
    Fq prod = pm_mulmod(c_, o.c_, ctx().modulus(), q);
    prod.resize(ctx().f(), 0);
    c_ = std::move(prod);
    return *this;
}

bool operator==(const FFElt& a, const FFElt& b)
{
    require_same_ctx(a, b);
    return a.coeffs() == b.coeffs();
}

FFElt ff_pow(FFElt base, const BigInt& e)
{
    if (e < 0) return ff_pow(ff_inv(base), BigInt(-e));
    FFElt r = base.ctx().one();
    const unsigned long bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (unsigned long i = bits; i-- > 0;) {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r *= base;
    }
    return r;
}

FFElt ff_pow(FFElt base, u64 e)
{
    FFElt r = base.ctx().one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

FFElt ff_inv(const FFElt& a)
{
    if (a.is_zero()) throw std::invalid_argument("ff_inv: zero is not invertible");
    const auto& ctx = a.ctx();
    const u64 q = ctx.q();
    if (ctx.f() == 1) return FFElt(&ctx, {invmod(a.coeffs()[0], q)});
    // extended Euclid in F_q[X] on (a, modulus)
    Fq r0 = ctx.modulus(), r1 = a.coeffs();
    pm_trim(r1);
    Fq s0{}, s1{1};
    while (!r1.empty()) {
        Fq qt, rem;
        pm_divrem(r0, r1, q, qt, rem);
        Fq s2 = pm_sub(std::move(s0), pm_mul(qt, s1, q), q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a constant, nonzero); scale s0 by its inverse
    if (pm_deg(r0) != 0) throw std::logic_error("ff_inv: gcd not constant");
    const u64 scale = invmod(r0[0], q);
    for (auto& c : s0) c = mulmod(c, scale, q);
    s0.resize(ctx.f(), 0);
    return FFElt(&ctx, std::move(s0));
}

FFElt ff_det(std::vector<std::vector<FFElt>> m, const FiniteFieldCtx& ctx)
{
    const std::size_t n = m.size();
    FFElt det = ctx.one();
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k].size() != n) throw std::invalid_argument("ff_det: matrix not square");
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return ctx.zero();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        FFElt inv = ff_inv(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            FFElt factor = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

} // namespace fminor
