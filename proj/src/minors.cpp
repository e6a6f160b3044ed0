#include "fminor/minors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fminor {

void MinorSpec::validate() const
{
    if (order == 0) throw std::invalid_argument("MinorSpec: order must be positive");
    if (rows.empty() || rows.size() != cols.size())
        throw std::invalid_argument("MinorSpec: row and column sets must be nonempty and equal in size");
    for (const auto* v : {&rows, &cols}) {
        for (std::size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] >= order) throw std::invalid_argument("MinorSpec: index out of range");
            if (i > 0 && (*v)[i] <= (*v)[i - 1])
                throw std::invalid_argument("MinorSpec: index sets must be strictly increasing");
        }
    }
}

CycElt cyc_divexact(const CycElt& u, const CycElt& v)
{
    const unsigned n = u.order();
    if (v.order() != n) throw std::invalid_argument("cyc_divexact: order mismatch");
    if (v.is_zero()) throw std::invalid_argument("cyc_divexact: division by zero");
    // u / v = u * prod_{sigma != id} sigma(v) / N(v)
    CycElt adj = CycElt::from_int(n, 1);
    const unsigned id = 1 % n;
    for (unsigned k : units_mod(n)) {
        if (k == id) continue;
        adj *= v.galois(k);
    }
    CycElt nv = v * adj;
    const auto& nc = nv.coeffs();
    for (std::size_t i = 1; i < nc.size(); ++i)
        if (nc[i] != 0) throw std::logic_error("cyc_divexact: conjugate product is not rational");
    const BigInt& norm = nc[0];
    CycElt t = u * adj;
    std::vector<BigInt> out;
    out.reserve(t.coeffs().size());
    for (const auto& c : t.coeffs()) {
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), norm.get_mpz_t());
        if (r != 0) throw std::logic_error("cyc_divexact: inexact division");
        out.push_back(q);
    }
    return reduce(IntPoly(std::move(out)), n);
}

namespace {

CycElt det_cofactor(const std::vector<std::vector<CycElt>>& m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    CycElt sum(m[0][0].order());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<CycElt>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<CycElt> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        CycElt term = m[0][j] * det_cofactor(sub);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

} // namespace

CycElt cyc_det(std::vector<std::vector<CycElt>> m)
{
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("cyc_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("cyc_det: matrix not square");
    const unsigned order = m[0][0].order();
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.order() != order) throw std::invalid_argument("cyc_det: mixed orders");
    if (n <= 4) return det_cofactor(m);

    int sign = 1;
    CycElt prev = CycElt::from_int(order, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return CycElt(order);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        const bool divide = k > 0;
        // conjugate product of the previous pivot, shared across the round
        CycElt adj = CycElt::from_int(order, 1);
        BigInt prev_norm = 1;
        if (divide) {
            const unsigned id = 1 % order;
            for (unsigned t : units_mod(order)) {
                if (t == id) continue;
                adj *= prev.galois(t);
            }
            CycElt nv = prev * adj;
            const auto& nc = nv.coeffs();
            for (std::size_t i = 1; i < nc.size(); ++i)
                if (nc[i] != 0) throw std::logic_error("cyc_det: pivot norm not rational");
            prev_norm = nc[0];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                CycElt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                if (divide) {
                    t *= adj;
                    std::vector<BigInt> out;
                    out.reserve(t.coeffs().size());
                    for (const auto& c : t.coeffs()) {
                        BigInt q, r;
                        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), prev_norm.get_mpz_t());
                        if (r != 0) throw std::logic_error("cyc_det: inexact Bareiss division");
                        out.push_back(q);
                    }
                    t = reduce(IntPoly(std::move(out)), order);
                }
                m[i][j] = std::move(t);
            }
            m[i][k] = CycElt(order);
        }
        prev = m[k][k];
    }
    CycElt det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

CycElt fourier_minor(const MinorSpec& spec)
{
    spec.validate();
    const unsigned N = spec.order;
    const unsigned m = spec.size();
    std::vector<CycElt> pow;
    pow.reserve(N);
    for (unsigned t = 0; t < N; ++t) pow.push_back(CycElt::root_power(N, t));
    std::vector<std::vector<CycElt>> mat(m);
    for (unsigned i = 0; i < m; ++i) {
        mat[i].reserve(m);
        for (unsigned j = 0; j < m; ++j)
            mat[i].push_back(pow[static_cast<u64>(spec.rows[i]) * spec.cols[j] % N]);
    }
    return cyc_det(std::move(mat));
}

namespace {

// determinant of a square matrix over F_ell; destroys its argument
u64 det_mod(std::vector<std::vector<u64>>& m, u64 ell)
{
    const std::size_t n = m.size();
    u64 det = 1;
    bool neg = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            neg = !neg;
        }
        det = mulmod(det, m[k][k], ell);
        const u64 inv = invmod(m[k][k], ell);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const u64 f = mulmod(m[i][k], inv, ell);
            for (std::size_t j = k; j < n; ++j) {
                u64 sub = mulmod(f, m[k][j], ell);
                m[i][j] = (m[i][j] + ell - sub) % ell;
            }
        }
    }
    return neg ? ell - det : det;
}

// evaluation primes ell = 1 (mod N) paired with an order-N element, cached
// per order so campaigns do not rediscover them for every orbit
struct RootPrime {
    u64 ell;
    u64 g;
};

std::mutex g_root_prime_mutex;
std::map<unsigned, std::vector<RootPrime>> g_root_primes;

RootPrime nth_root_prime(unsigned N, std::size_t i)
{
    std::lock_guard<std::mutex> lock(g_root_prime_mutex);
    auto& v = g_root_primes[N];
    while (v.size() <= i) {
        const u64 lo = v.empty() ? (u64(1) << 62) + 1 : v.back().ell + 1;
        const u64 ell = next_prime_in_class(lo, N, 1 % N);
        v.push_back({ell, element_of_order(ell, N)});
    }
    return v[i];
}

// N(D_{A,B}) mod ell for a prime ell = 1 (mod N): product over all phi(N)
// primitive roots of the determinant image.
u64 minor_norm_mod(const MinorSpec& spec, const RootPrime& rp, const std::vector<unsigned>& units)
{
    const unsigned N = spec.order;
    const unsigned m = spec.size();
    const u64 ell = rp.ell;
    const u64 g = rp.g;
    std::vector<u64> pow(N);
    pow[0] = 1;
    for (unsigned t = 1; t < N; ++t) pow[t] = mulmod(pow[t - 1], g, ell);
    u64 prod = 1;
    std::vector<std::vector<u64>> mat(m, std::vector<u64>(m));
    for (unsigned k : units) {
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j)
                mat[i][j] = pow[static_cast<u64>(k) * spec.rows[i] % N * spec.cols[j] % N];
        prod = mulmod(prod, det_mod(mat, ell), ell);
        if (prod == 0) break; // stays zero
    }
    return prod;
}

// 4 * (Hadamard bound)^2 = 4 * m^(m*phi(N)); CRT terminates when the squared
// modulus exceeds this, which avoids fractional exponents for odd m*phi(N).
BigInt four_bound_squared(const MinorSpec& spec)
{
    return 4 * bpow(BigInt(spec.size()), static_cast<unsigned long>(spec.size()) * totient(spec.order));
}

// Shared multi-modular engine.  When early_exit is set, returns a nonzero
// sentinel immediately after the first nonzero residue (zero-test mode);
// otherwise runs the CRT to completion and returns the exact signed norm.
BigInt minor_norm_crt(const MinorSpec& spec, bool early_exit, bool& is_zero)
{
    const unsigned N = spec.order;
    const auto units = units_mod(N);
    const BigInt target = four_bound_squared(spec);
    BigInt value = 0, modulus = 1;
    for (std::size_t i = 0; modulus * modulus <= target; ++i) {
        const RootPrime rp = nth_root_prime(N, i);
        const u64 ell = rp.ell;
        const u64 r = minor_norm_mod(spec, rp, units);
        if (r != 0 && early_exit) {
            is_zero = false;
            return 1;
        }
        const u64 mm = mpz_fdiv_ui(modulus.get_mpz_t(), ell);
        const u64 vm = mpz_fdiv_ui(value.get_mpz_t(), ell);
        const u64 delta = mulmod((r + ell - vm) % ell, invmod(mm, ell), ell);
        value += modulus * delta;
        modulus *= ell;
    }
    if (2 * value > modulus) value -= modulus;
    is_zero = value == 0;
    return value;
}

} // namespace

BigInt minor_norm_value(const MinorSpec& spec, NormBackend backend)
{
    spec.validate();
    if (backend == NormBackend::Subresultant) return fourier_minor(spec).norm();
    bool is_zero = false;
    return minor_norm_crt(spec, false, is_zero);
}

bool minor_is_zero(const MinorSpec& spec)
{
    spec.validate();
    bool is_zero = false;
    minor_norm_crt(spec, true, is_zero);
    return is_zero;
}

NormReport minor_norm(const MinorSpec& spec, NormBackend backend, u64 factor_budget)
{
    NormReport rep;
    rep.spec = spec;
    rep.norm = minor_norm_value(spec, backend);
    rep.backend = backend == NormBackend::Subresultant ? "subresultant" : "multimodular";
    if (rep.norm != 0 && babs(rep.norm) != 1)
        rep.factorization = factor_integer(babs(rep.norm), factor_budget);
    return rep;
}

MinorClassification classify(const MinorSpec& spec)
{
    spec.validate();
    MinorClassification out;
    out.principal = spec.principal();
    for (unsigned d : divisors(spec.order)) {
        std::vector<unsigned> ca(d, 0), cb(d, 0);
        for (unsigned a : spec.rows) ++ca[a % d];
        for (unsigned b : spec.cols) ++cb[b % d];
        out.d_principal[d] = ca == cb;
        std::optional<unsigned> multiplier;
        if (d == 1) {
            multiplier = 1;
        } else {
            for (unsigned s : units_mod(d)) {
                bool ok = true;
                for (unsigned i = 0; i < d && ok; ++i) ok = ca[i] == cb[static_cast<u64>(s) * i % d];
                if (ok) {
                    multiplier = s;
                    break;
                }
            }
        }
        out.d_galois[d] = multiplier;
    }
    return out;
}

FFElt ff_minor(const MinorSpec& spec, const FiniteFieldCtx& ctx)
{
    spec.validate();
    if (ctx.n() != spec.order) throw std::invalid_argument("ff_minor: context order mismatch");
    const unsigned N = spec.order;
    const unsigned m = spec.size();
    std::vector<FFElt> pow;
    pow.reserve(N);
    pow.push_back(ctx.one());
    for (unsigned t = 1; t < N; ++t) pow.push_back(pow.back() * ctx.zeta());
    std::vector<std::vector<FFElt>> mat(m);
    for (unsigned i = 0; i < m; ++i) {
        mat[i].reserve(m);
        for (unsigned j = 0; j < m; ++j)
            mat[i].push_back(pow[static_cast<u64>(spec.rows[i]) * spec.cols[j] % N]);
    }
    return ff_det(std::move(mat), ctx);
}

CharPrimeReport vanishing_char_primes(const MinorSpec& spec, u64 factor_budget)
{
    NormReport rep = minor_norm(spec, NormBackend::MultiModular, factor_budget);
    if (rep.norm == 0)
        throw std::invalid_argument("vanishing_char_primes: minor vanishes over C");
    CharPrimeReport out;
    for (const auto& [p, e] : rep.factorization.prime_powers) {
        (void)e;
        const bool divides_order = p.fits_ulong_p() && spec.order % p.get_ui() == 0;
        if (divides_order)
            out.ramified.push_back(p);
        else
            out.vanishing.push_back(p);
    }
    if (!rep.factorization.complete()) out.unfactored_cofactor = rep.factorization.cofactor;
    return out;
}

} // namespace fminor
