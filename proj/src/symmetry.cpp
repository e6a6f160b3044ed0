#include "fminor/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fminor {

namespace {

// Masks encode subsets of Z_N, bit x = element x; N <= 62.
constexpr unsigned kMaxOrder = 62;

u64 full_mask(unsigned N) { return (u64(1) << N) - 1; }

u64 rotate_mask(u64 mask, unsigned b, unsigned N)
{
    if (b == 0) return mask;
    return ((mask << b) | (mask >> (N - b))) & full_mask(N);
}

// lexicographic order on the sorted index lists of equal-size sets: the
// lowest differing element decides, i.e. the lowest differing bit
bool mask_lex_less(u64 u, u64 v)
{
    const u64 d = u ^ v;
    if (d == 0) return false;
    return (d & (~d + 1) & u) != 0;
}

std::vector<unsigned> mask_to_set(u64 mask, unsigned N)
{
    std::vector<unsigned> out;
    for (unsigned x = 0; x < N; ++x)
        if (mask >> x & 1) out.push_back(x);
    return out;
}

u64 set_to_mask(const std::vector<unsigned>& s)
{
    u64 m = 0;
    for (unsigned x : s) m |= u64(1) << x;
    return m;
}

std::vector<std::vector<unsigned>> unit_mul_tables(unsigned N)
{
    std::vector<std::vector<unsigned>> tables;
    for (unsigned a : units_mod(N)) {
        std::vector<unsigned> t(N);
        for (unsigned x = 0; x < N; ++x) t[x] = static_cast<unsigned>(static_cast<u64>(a) * x % N);
        tables.push_back(std::move(t));
    }
    return tables;
}

// least affine image; the canonical set always contains 0, so only
// translations moving an element to 0 need inspection
u64 canonical_mask(u64 mask, unsigned N, const std::vector<std::vector<unsigned>>& tables)
{
    u64 best = 0;
    bool have = false;
    for (const auto& t : tables) {
        u64 img = 0;
        u64 rest = mask;
        while (rest) {
            const unsigned x = static_cast<unsigned>(__builtin_ctzll(rest));
            rest &= rest - 1;
            img |= u64(1) << t[x];
        }
        u64 pts = img;
        while (pts) {
            const unsigned y = static_cast<unsigned>(__builtin_ctzll(pts));
            pts &= pts - 1;
            const u64 cand = rotate_mask(img, (N - y) % N, N);
            if (!have || mask_lex_less(cand, best)) {
                best = cand;
                have = true;
            }
        }
    }
    return best;
}

void check_order(unsigned N)
{
    if (N > kMaxOrder) throw std::invalid_argument("order too large for orbit machinery");
}

} // namespace

bool orbit_key_less(const OrbitKey& a, const OrbitKey& b)
{
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
}

std::vector<unsigned> affine_canonical_set(unsigned N, const std::vector<unsigned>& A)
{
    if (N < 3) throw std::invalid_argument("affine_canonical: order must be at least 3");
    check_order(N);
    if (A.empty()) throw std::invalid_argument("affine_canonical: empty set");
    for (unsigned x : A)
        if (x >= N) throw std::invalid_argument("affine_canonical: index out of range");
    const auto tables = unit_mul_tables(N);
    return mask_to_set(canonical_mask(set_to_mask(A), N, tables), N);
}

OrbitKey affine_canonical(unsigned N, const std::vector<unsigned>& A)
{
    if (N < 3) throw std::invalid_argument("affine_canonical: order must be at least 3");
    check_order(N);
    const u64 mask = set_to_mask(A);
    const auto tables = unit_mul_tables(N);
    std::set<u64> images;
    for (const auto& t : tables) {
        u64 img = 0;
        for (unsigned x : A) img |= u64(1) << t[x];
        for (unsigned b = 0; b < N; ++b) images.insert(rotate_mask(img, b, N));
    }
    OrbitKey key;
    key.order = N;
    key.rows = mask_to_set(canonical_mask(mask, N, tables), N);
    key.cols = key.rows;
    key.orbit_size = images.size();
    return key;
}

MinorSpec complement_reduce(const MinorSpec& spec)
{
    spec.validate();
    const unsigned N = spec.order;
    if (spec.size() <= N / 2 || spec.size() == N) return spec;
    MinorSpec out;
    out.order = N;
    for (unsigned x = 0; x < N; ++x) {
        if (!std::binary_search(spec.rows.begin(), spec.rows.end(), x)) out.rows.push_back(x);
        if (!std::binary_search(spec.cols.begin(), spec.cols.end(), x)) out.cols.push_back(x);
    }
    return out;
}

namespace {

// all steps d such that the set is {start, start+d, ..., start+(m-1)d} mod N
std::vector<std::pair<unsigned, unsigned>> ap_presentations(unsigned N, const std::vector<unsigned>& set)
{
    std::vector<std::pair<unsigned, unsigned>> out; // (step, start)
    const unsigned m = static_cast<unsigned>(set.size());
    if (m == 1) {
        out.push_back({1, set[0]});
        return out;
    }
    const u64 mask = set_to_mask(set);
    for (unsigned d = 1; d < N; ++d) {
        for (unsigned start : set) {
            u64 built = 0;
            unsigned x = start;
            bool dup = false;
            for (unsigned j = 0; j < m; ++j) {
                if (built >> x & 1) {
                    dup = true;
                    break;
                }
                built |= u64(1) << x;
                x = (x + d) % N;
            }
            if (!dup && built == mask) out.push_back({d, start});
        }
    }
    return out;
}

bool step_separates(unsigned N, unsigned d, const std::vector<unsigned>& other)
{
    for (std::size_t i = 0; i < other.size(); ++i)
        for (std::size_t j = i + 1; j < other.size(); ++j) {
            const unsigned diff = (other[j] - other[i]) % N;
            if (static_cast<u64>(d) * diff % N == 0) return false;
        }
    return true;
}

} // namespace

std::optional<APCertificate> ap_certificate(const MinorSpec& spec)
{
    spec.validate();
    const unsigned N = spec.order;
    check_order(N);
    for (auto [d, start] : ap_presentations(N, spec.rows)) {
        if (step_separates(N, d, spec.cols)) return APCertificate{true, start, d};
    }
    for (auto [d, start] : ap_presentations(N, spec.cols)) {
        if (step_separates(N, d, spec.rows)) return APCertificate{false, start, d};
    }
    return std::nullopt;
}

std::string FamilySpec::label() const
{
    switch (kind) {
    case FamilyKind::Principal: return "principal";
    case FamilyKind::DPrincipal: return "d-principal(" + std::to_string(d) + ")";
    case FamilyKind::AllPairs: return "all-pairs";
    }
    return "?";
}

std::vector<unsigned> canonical_count_class(unsigned N, const std::vector<unsigned>& set, unsigned d)
{
    if (d == 0 || N % d != 0) throw std::invalid_argument("canonical_count_class: d must divide N");
    std::vector<unsigned> counts(d, 0);
    for (unsigned x : set) ++counts[x % d];
    if (d == 1) return counts;
    std::vector<unsigned> best = counts;
    std::vector<unsigned> img(d);
    for (unsigned a : units_mod(d)) {
        for (unsigned b = 0; b < d; ++b) {
            for (unsigned i = 0; i < d; ++i) img[(static_cast<u64>(a) * i + b) % d] = counts[i];
            if (img < best) best = img;
        }
    }
    return best;
}

namespace {

// canonical single-set orbits of one size; N >= 3 uses the affine action,
// N <= 2 treats every subset as its own orbit
std::vector<OrbitKey> single_orbits(unsigned N, unsigned m)
{
    check_order(N);
    if (m == 0 || m > N) throw std::invalid_argument("enumerate_orbits: bad size");
    std::map<u64, u64> orbit_count; // canonical mask -> members seen
    if (N < 3) {
        u64 mask = (u64(1) << m) - 1;
        const u64 limit = u64(1) << N;
        while (mask < limit) {
            orbit_count[mask] = 1;
            // Gosper's hack: next subset of the same popcount
            const u64 c = mask & (~mask + 1), r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    } else {
        const auto tables = unit_mul_tables(N);
        u64 mask = (u64(1) << m) - 1;
        const u64 limit = u64(1) << N;
        while (mask < limit) {
            ++orbit_count[canonical_mask(mask, N, tables)];
            const u64 c = mask & (~mask + 1), r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    std::vector<OrbitKey> out;
    out.reserve(orbit_count.size());
    for (const auto& [mask, count] : orbit_count) {
        OrbitKey key;
        key.order = N;
        key.rows = mask_to_set(mask, N);
        key.cols = key.rows;
        key.orbit_size = count;
        out.push_back(std::move(key));
    }
    std::sort(out.begin(), out.end(), orbit_key_less);
    return out;
}

} // namespace

std::vector<OrbitKey> enumerate_orbits(unsigned N, unsigned m, const FamilySpec& family)
{
    auto singles = single_orbits(N, m);
    if (family.kind == FamilyKind::Principal) return singles;

    const unsigned d = family.kind == FamilyKind::AllPairs ? 1 : family.d;
    if (d == 0 || N % d != 0)
        throw std::invalid_argument("enumerate_orbits: family divisor must divide N");

    // pair orbits under the independent action; a product orbit meets the
    // d-principal family exactly when the count classes mod d coincide
    std::vector<std::vector<unsigned>> klass;
    klass.reserve(singles.size());
    for (const auto& s : singles) klass.push_back(canonical_count_class(N, s.rows, d));

    std::vector<OrbitKey> out;
    for (std::size_t i = 0; i < singles.size(); ++i) {
        for (std::size_t j = 0; j < singles.size(); ++j) {
            if (d > 1 && klass[i] != klass[j]) continue;
            OrbitKey key;
            key.order = N;
            key.rows = singles[i].rows;
            key.cols = singles[j].rows;
            key.orbit_size = singles[i].orbit_size * singles[j].orbit_size;
            out.push_back(std::move(key));
        }
    }
    std::sort(out.begin(), out.end(), orbit_key_less);
    return out;
}

} // namespace fminor
