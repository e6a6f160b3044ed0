#pragma once

/* Minors of the Fourier matrix F_N = (omega^(ij)).  A MinorSpec selects rows
 * A and columns B, taken in increasing index order, so values and signs are
 * reproducible.  The exact value lives in Z[omega_N]; the norm is a rational
 * integer, zero exactly when the minor vanishes, computed either from the
 * subresultant backend or by a multi-modular product of conjugate
 * determinants reconstructed against the Hadamard bound m^(m*phi(N)/2). */

#include "fminor/cyclotomic.hpp"
#include "fminor/factorint.hpp"
#include "fminor/finite_field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fminor {

struct MinorSpec {
    unsigned order = 1;
    std::vector<unsigned> rows; // strictly increasing, values in [0, order)
    std::vector<unsigned> cols;

    unsigned size() const { return static_cast<unsigned>(rows.size()); }
    void validate() const;
    bool principal() const { return rows == cols; }
};

// Determinant over Z[omega]: cofactor expansion for size <= 4, fraction-free
// Bareiss elimination above, with exact division by the previous pivot done
// through multiplication by its remaining conjugates and integer division by
// its norm.  The matrix must be square and nonempty with a common order.
CycElt cyc_det(std::vector<std::vector<CycElt>> m);

// Exact quotient u / v for v a nonzero exact divisor of u in Z[omega].
CycElt cyc_divexact(const CycElt& u, const CycElt& v);

// det(omega^(ab)) for a in rows, b in cols, in Z[omega_N].
CycElt fourier_minor(const MinorSpec& spec);

enum class NormBackend { Subresultant, MultiModular };

// N(det F_N[A,B]) as an exact integer.
BigInt minor_norm_value(const MinorSpec& spec, NormBackend backend = NormBackend::MultiModular);

// Multi-modular zero test: the norm is reconstructed only far enough to
// decide norm = 0, with early exit on the first nonzero residue.
bool minor_is_zero(const MinorSpec& spec);

struct NormReport {
    MinorSpec spec;
    BigInt norm = 0;             // signed; 0 iff the minor vanishes
    Factorization factorization; // of |norm|; empty for norm 0 or +-1
    std::string backend;
};

NormReport minor_norm(const MinorSpec& spec, NormBackend backend = NormBackend::MultiModular,
                      u64 factor_budget = 2000000);

struct MinorClassification {
    bool principal = false;
    std::map<unsigned, bool> d_principal;                 // per divisor d of N
    std::map<unsigned, std::optional<unsigned>> d_galois; // smallest multiplier s, if any
};

// Residue-class counting per Definition of d-principal / d-Galois-principal
// submatrices: counts of A and B mod d agree classwise, possibly after the
// class permutation i -> s*i.
MinorClassification classify(const MinorSpec& spec);

// det(zeta^(ab)) over the context's field; requires ctx.n() = spec.order.
FFElt ff_minor(const MinorSpec& spec, const FiniteFieldCtx& ctx);

struct CharPrimeReport {
    std::vector<BigInt> vanishing; // primes q, q coprime to N, with q | N(D)
    std::vector<BigInt> ramified;  // prime divisors of N(D) that divide N
    std::optional<BigInt> unfactored_cofactor;
};

// Primes q coprime to N in whose characteristic some Galois conjugate of the
// minor vanishes; requires the minor nonzero over C.
CharPrimeReport vanishing_char_primes(const MinorSpec& spec, u64 factor_budget = 2000000);

} // namespace fminor
