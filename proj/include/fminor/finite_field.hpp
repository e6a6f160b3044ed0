#pragma once

/* F_{q^f} realized as F_q[X]/(g), where g is an irreducible degree-f factor
 * of Phi_n mod q and f is the multiplicative order of q mod n.  The residue
 * class of X is then a root of unity of order exactly n, the distinguished
 * zeta of the context.  Factor selection is deterministic: equal-degree
 * splitting collects all factors and the lexicographically smallest
 * coefficient vector wins, so zeta is reproducible across runs. */

#include "fminor/bigint.hpp"
#include "fminor/numtheory.hpp"

#include <vector>

namespace fminor {

class FFElt;

class FiniteFieldCtx {
public:
    // Requires q prime with q not dividing n.
    static FiniteFieldCtx build(unsigned n, u64 q);
    // Same, with a caller-chosen monic irreducible factor of Phi_n mod q.
    static FiniteFieldCtx with_modulus(unsigned n, u64 q, std::vector<u64> modulus);

    u64 q() const { return q_; }
    unsigned n() const { return n_; }
    unsigned f() const { return f_; }
    const std::vector<u64>& modulus() const { return modulus_; } // size f+1, monic

    FFElt zero() const;
    FFElt one() const;
    FFElt from_int(u64 v) const;
    FFElt from_coeffs(std::vector<u64> c) const;
    FFElt zeta() const;                 // residue class of X, order exactly n
    FFElt zeta_pow(long long e) const;  // zeta^(e mod n)

    friend bool operator==(const FiniteFieldCtx& a, const FiniteFieldCtx& b)
    {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
    }

private:
    FiniteFieldCtx(unsigned n, u64 q, unsigned f, std::vector<u64> modulus);
    void validate() const;

    u64 q_;
    unsigned n_, f_;
    std::vector<u64> modulus_;
};

// Alias for the context factory, under the operation's own name.
inline FiniteFieldCtx build_field(unsigned n, u64 q) { return FiniteFieldCtx::build(n, q); }

class FFElt {
public:
    FFElt() : ctx_(nullptr) {}
    FFElt(const FiniteFieldCtx* ctx, std::vector<u64> c);

    const FiniteFieldCtx& ctx() const;
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const;

    FFElt operator-() const;
    FFElt& operator+=(const FFElt& o);
    FFElt& operator-=(const FFElt& o);
    FFElt& operator*=(const FFElt& o);
    friend FFElt operator+(FFElt a, const FFElt& b) { return a += b; }
    friend FFElt operator-(FFElt a, const FFElt& b) { return a -= b; }
    friend FFElt operator*(FFElt a, const FFElt& b) { return a *= b; }
    friend bool operator==(const FFElt& a, const FFElt& b);

private:
    const FiniteFieldCtx* ctx_;
    std::vector<u64> c_; // size f, residues in [0, q)
};

FFElt ff_pow(FFElt base, const BigInt& e);
FFElt ff_pow(FFElt base, u64 e);
FFElt ff_inv(const FFElt& a); // throws on zero
inline bool ff_is_zero(const FFElt& a) { return a.is_zero(); }

// Exact determinant by Gaussian elimination with field inversion.
FFElt ff_det(std::vector<std::vector<FFElt>> m, const FiniteFieldCtx& ctx);

} // namespace fminor
