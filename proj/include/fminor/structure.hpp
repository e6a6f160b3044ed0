#pragma once

/* Structural linear algebra: the block-determinant identity
 * det B = prod_k (det A_k)^(M_k - M_{k+1}) * prod_i det B_ii for matrices
 * whose (i,j) block is a_ij times the first M_j columns of B_i1, and the
 * CRT permutation pair (rho, tau) that rewrites F_mn as the block matrix
 * with (a,b) block zeta^(ab) F_n for coprime m, n. */

#include "fminor/cyclotomic.hpp"
#include "fminor/minors.hpp"

#include <vector>

namespace fminor {

struct BlockSpec {
    unsigned order = 1;                          // cyclotomic order of all entries
    std::vector<std::vector<CycElt>> scalar;     // n x n coefficients a_ij
    std::vector<unsigned> widths;                // M_1 >= ... >= M_n >= 0
    std::vector<std::vector<std::vector<CycElt>>> base; // base[i]: M_i x M_1 matrix B_i1

    unsigned block_count() const { return static_cast<unsigned>(widths.size()); }
    void validate() const;
};

// The assembled square matrix with (i,j) block a_ij * (first M_j columns of B_i1).
std::vector<std::vector<CycElt>> assemble_block_matrix(const BlockSpec& spec);

// Right-hand side of the block identity.  The elimination behind the
// identity pivots on the leading scalar minors, so det A_k = 0 for some
// k < n with later nonempty blocks is reported as an error rather than
// silently extended.
CycElt block_determinant(const BlockSpec& spec);

struct CrtMaps {
    unsigned m = 0, n = 0;
    std::vector<unsigned> rho; // position i*n+j -> CRT solution of (i mod m, j mod n)
    std::vector<unsigned> tau; // j -> (m+n)j mod mn
};

// Requires gcd(m, n) = 1 and m, n >= 2; gcd(m+n, mn) = 1 is asserted.
CrtMaps crt_maps(unsigned m, unsigned n);

// Entrywise identity, in exact cyclotomic arithmetic:
// omega^(tau(rho(k)) * rho(l)) = eta^(k2 l2) * zeta^(k1 l1) for all k, l.
bool verify_kron_equivalence(unsigned m, unsigned n);

struct KronTransfer {
    unsigned m = 0, n = 0;
    MinorSpec positions;        // row/column position sets in the block matrix
    long long galois_multiplier = 1; // block minor = +- sigma_multiplier(original)
};

// Transfer a minor of F_{mn} into block-matrix coordinates: rows pass
// through tau^-1 then rho^-1, columns through rho^-1, so the block minor at
// the returned positions equals the original minor up to sign.  Requires a
// coprime split order = m * (order/m).
KronTransfer kron_transfer(const MinorSpec& spec, unsigned m);

} // namespace fminor
