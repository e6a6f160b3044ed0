#include "fminor/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fminor {

namespace {
const BigInt kZero = 0;

BigInt divexact_int(const BigInt& a, const BigInt& b)
{
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("divexact_int: inexact division");
    return q;
}
} // namespace

IntPoly::IntPoly(const BigInt& constant)
{
    if (constant != 0) c_.push_back(constant);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& a, unsigned k)
{
    IntPoly p;
    if (a != 0) {
        p.c_.assign(k + 1, kZero);
        p.c_[k] = a;
    }
    return p;
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const BigInt& IntPoly::leading() const
{
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

BigInt IntPoly::content() const
{
    BigInt g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BigInt IntPoly::operator()(const BigInt& x) const
{
    BigInt v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

IntPoly& IntPoly::operator+=(const IntPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, kZero);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const
{
    IntPoly p = *this;
    for (auto& a : p.c_) a = -a;
    return p;
}

std::string IntPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& a = c_[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        BigInt m = babs(a);
        if (i == 0)
            os << m.get_str();
        else {
            if (m != 1) os << m.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void divmod_monic(const IntPoly& a, const IntPoly& d, IntPoly& q, IntPoly& r)
{
    if (d.is_zero() || d.leading() != 1) throw std::invalid_argument("divmod_monic: divisor not monic");
    std::vector<BigInt> rem(a.coeffs());
    const int dd = d.degree();
    const int da = a.degree();
    if (da < dd) {
        q = IntPoly();
        r = a;
        return;
    }
    std::vector<BigInt> quot(da - dd + 1, BigInt(0));
    for (int k = da; k >= dd; --k) {
        BigInt c = rem[k];
        if (c == 0) continue;
        quot[k - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d.coeff(j);
    }
    q = IntPoly(std::move(quot));
    r = IntPoly(std::move(rem));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::invalid_argument("divexact: division by zero");
    if (a.is_zero()) return IntPoly();
    if (b.degree() == 0) {
        std::vector<BigInt> out;
        out.reserve(a.coeffs().size());
        for (const auto& c : a.coeffs()) out.push_back(divexact_int(c, b.coeff(0)));
        return IntPoly(std::move(out));
    }
    // general case: scale to a monic division
    if (b.leading() == 1) {
        IntPoly q, r;
        divmod_monic(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("divexact: inexact polynomial division");
        return q;
    }
    // lc(b) != 1: perform fraction-free long division and check exactness per step
    std::vector<BigInt> rem(a.coeffs());
    const int dd = b.degree();
    int da = a.degree();
    if (da < dd) throw std::logic_error("divexact: inexact polynomial division");
    std::vector<BigInt> quot(da - dd + 1, BigInt(0));
    for (int k = da; k >= dd; --k) {
        if (rem[k] == 0) continue;
        BigInt c = divexact_int(rem[k], b.leading());
        quot[k - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * b.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("divexact: inexact polynomial division");
    return IntPoly(std::move(quot));
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero");
    IntPoly r = a;
    const BigInt& d = b.leading();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly lead = IntPoly::monomial(r.leading(), r.degree() - b.degree());
        r = IntPoly(d) * r - lead * b;
        --e;
    }
    if (e > 0) r = IntPoly(bpow(d, e)) * r;
    return r;
}

BigInt resultant(IntPoly a, IntPoly b)
{
    // subresultant PRS, following the classical integer-exact recurrences
    if (a.is_zero() || b.is_zero()) return 0;
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    BigInt ca = a.content(), cb = b.content();
    a = divexact(a, IntPoly(ca));
    b = divexact(b, IntPoly(cb));
    BigInt t = bpow(ca, b.degree()) * bpow(cb, a.degree()) * s;
    if (b.degree() == 0) return t * bpow(b.coeff(0), a.degree());
    BigInt g = 1, h = 1;
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) t = -t;
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return 0; // positive-degree common factor
        a = b;
        b = divexact(r, IntPoly(g * bpow(h, delta)));
        g = a.leading();
        if (delta > 0) h = divexact_int(bpow(g, delta), bpow(h, delta - 1));
        if (b.degree() == 0) {
            BigInt out = divexact_int(bpow(b.coeff(0), a.degree()), bpow(h, a.degree() - 1));
            return t * out;
        }
    }
}

} // namespace fminor
