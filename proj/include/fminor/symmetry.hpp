#pragma once

/* Search-space reduction for minor campaigns.  Index sets are canonicalized
 * under the affine group x -> ax + b (a a unit mod N); principal families use
 * the simultaneous action on A = B, general families act independently on
 * rows and columns, which preserves norms and hence zero status.  Canonical
 * form is the lexicographically least sorted index list of the orbit.
 * Arithmetic-progression certificates settle nonvanishing without any
 * determinant work. */

#include "fminor/minors.hpp"

#include <optional>
#include <vector>

namespace fminor {

struct OrbitKey {
    unsigned order = 1;
    std::vector<unsigned> rows; // canonical; cols == rows for principal families
    std::vector<unsigned> cols;
    u64 orbit_size = 1;

    MinorSpec spec() const { return MinorSpec{order, rows, cols}; }
};

// (size, rows, cols) lexicographic; the enumeration order of campaigns.
bool orbit_key_less(const OrbitKey& a, const OrbitKey& b);

// Lexicographically least affine image of A; requires N >= 3 and A nonempty.
std::vector<unsigned> affine_canonical_set(unsigned N, const std::vector<unsigned>& A);

// Canonical set together with its orbit cardinality.
OrbitKey affine_canonical(unsigned N, const std::vector<unsigned>& A);

// Complementary spec when |A| exceeds floor(N/2) (zero status is preserved);
// the input otherwise.  Full-size specs are returned unchanged.
MinorSpec complement_reduce(const MinorSpec& spec);

struct APCertificate {
    bool on_rows = true; // which index set forms the progression
    unsigned start = 0;
    unsigned step = 1;
};

// A progression certificate: one side is an arithmetic progression of step d
// mod N (as a set) and d*(x - x') != 0 mod N for distinct x, x' on the other
// side.  A certified minor is nonzero in characteristic 0 and every
// characteristic q with q not dividing N.
std::optional<APCertificate> ap_certificate(const MinorSpec& spec);

enum class FamilyKind { Principal, DPrincipal, AllPairs };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Principal;
    unsigned d = 0; // divisor parameter for DPrincipal

    std::string label() const;
};

// All orbits of the family at one size, each exactly once, sorted by
// canonical key.  Orbit sizes partition the family members.  For general
// families each entry is a canonical (rows, cols) pair orbit.
std::vector<OrbitKey> enumerate_orbits(unsigned N, unsigned m, const FamilySpec& family);

// Canonical form of the residue-count vector of A mod d under the affine
// index action of Z_d; equal count classes characterize pair orbits meeting
// the d-principal family.
std::vector<unsigned> canonical_count_class(unsigned N, const std::vector<unsigned>& set, unsigned d);

} // namespace fminor
