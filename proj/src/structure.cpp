#include "fminor/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fminor {

void BlockSpec::validate() const
{
    const unsigned n = block_count();
    if (n == 0) throw std::invalid_argument("BlockSpec: no blocks");
    if (scalar.size() != n) throw std::invalid_argument("BlockSpec: scalar matrix size mismatch");
    for (const auto& row : scalar)
        if (row.size() != n) throw std::invalid_argument("BlockSpec: scalar matrix not square");
    for (unsigned i = 1; i < n; ++i)
        if (widths[i] > widths[i - 1])
            throw std::invalid_argument("BlockSpec: widths must be weakly decreasing");
    if (base.size() != n) throw std::invalid_argument("BlockSpec: need one base block per row");
    for (unsigned i = 0; i < n; ++i) {
        if (base[i].size() != widths[i]) throw std::invalid_argument("BlockSpec: base block row count");
        for (const auto& row : base[i])
            if (row.size() != widths[0])
                throw std::invalid_argument("BlockSpec: base blocks must have M_1 columns");
    }
}

std::vector<std::vector<CycElt>> assemble_block_matrix(const BlockSpec& spec)
{
    spec.validate();
    const unsigned n = spec.block_count();
    unsigned total = 0;
    for (unsigned w : spec.widths) total += w;
    std::vector<std::vector<CycElt>> out(total, std::vector<CycElt>(total, CycElt(spec.order)));
    unsigned row0 = 0;
    for (unsigned i = 0; i < n; ++i) {
        unsigned col0 = 0;
        for (unsigned j = 0; j < n; ++j) {
            for (unsigned r = 0; r < spec.widths[i]; ++r)
                for (unsigned c = 0; c < spec.widths[j]; ++c)
                    out[row0 + r][col0 + c] = spec.scalar[i][j] * spec.base[i][r][c];
            col0 += spec.widths[j];
        }
        row0 += spec.widths[i];
    }
    return out;
}

CycElt block_determinant(const BlockSpec& spec)
{
    spec.validate();
    const unsigned n = spec.block_count();
    const unsigned order = spec.order;

    // leading scalar minors A_k
    std::vector<CycElt> lead;
    lead.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        std::vector<std::vector<CycElt>> a(k);
        for (unsigned i = 0; i < k; ++i)
            a[i].assign(spec.scalar[i].begin(), spec.scalar[i].begin() + k);
        lead.push_back(cyc_det(std::move(a)));
    }
    // elimination step k is only needed when a later block is nonempty
    for (unsigned k = 0; k + 1 < n; ++k) {
        bool later = false;
        for (unsigned j = k + 1; j < n; ++j) later = later || spec.widths[j] > 0;
        if (later && lead[k].is_zero())
            throw std::domain_error("block_determinant: zero leading minor blocks the elimination");
    }

    CycElt result = CycElt::from_int(order, 1);
    for (unsigned k = 0; k < n; ++k) {
        const unsigned exp = spec.widths[k] - (k + 1 < n ? spec.widths[k + 1] : 0);
        for (unsigned t = 0; t < exp; ++t) result *= lead[k];
        if (spec.widths[k] == 0) continue; // det of an empty diagonal block is 1
        std::vector<std::vector<CycElt>> bii(spec.widths[k]);
        for (unsigned r = 0; r < spec.widths[k]; ++r)
            bii[r].assign(spec.base[k][r].begin(), spec.base[k][r].begin() + spec.widths[k]);
        result *= cyc_det(std::move(bii));
    }
    return result;
}

CrtMaps crt_maps(unsigned m, unsigned n)
{
    if (m < 2 || n < 2) throw std::invalid_argument("crt_maps: factors must be at least 2");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("crt_maps: factors must be coprime");
    const unsigned N = m * n;
    if (std::gcd(m + n, N) != 1) throw std::logic_error("crt_maps: gcd(m+n, mn) != 1");
    CrtMaps maps;
    maps.m = m;
    maps.n = n;
    maps.rho.resize(N);
    maps.tau.resize(N);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < n; ++j) {
            unsigned x = 0;
            while (x % m != i || x % n != j) ++x; // N is small; direct CRT solve
            maps.rho[i * n + j] = x;
        }
    for (unsigned j = 0; j < N; ++j) maps.tau[j] = static_cast<u64>(m + n) * j % N;
    // both must be bijections
    for (const auto* perm : {&maps.rho, &maps.tau}) {
        std::vector<bool> seen(N, false);
        for (unsigned v : *perm) {
            if (v >= N || seen[v]) throw std::logic_error("crt_maps: map is not a permutation");
            seen[v] = true;
        }
    }
    return maps;
}

bool verify_kron_equivalence(unsigned m, unsigned n)
{
    const CrtMaps maps = crt_maps(m, n);
    const unsigned N = m * n;
    for (unsigned k = 0; k < N; ++k) {
        const unsigned k1 = k / n, k2 = k % n;
        for (unsigned l = 0; l < N; ++l) {
            const unsigned l1 = l / n, l2 = l % n;
            const u64 lhs_exp = static_cast<u64>(maps.tau[maps.rho[k]]) * maps.rho[l] % N;
            // eta = omega^m of order n, zeta = omega^n of order m
            const u64 rhs_exp =
                (static_cast<u64>(m) * k2 % N * l2 + static_cast<u64>(n) * k1 % N * l1) % N;
            const CycElt lhs = CycElt::root_power(N, static_cast<long long>(lhs_exp));
            const CycElt rhs = CycElt::root_power(N, static_cast<long long>(rhs_exp));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

KronTransfer kron_transfer(const MinorSpec& spec, unsigned m)
{
    spec.validate();
    const unsigned N = spec.order;
    if (m < 2 || N % m != 0) throw std::invalid_argument("kron_transfer: m must be a proper divisor");
    const unsigned n = N / m;
    if (n < 2) throw std::invalid_argument("kron_transfer: trivial cofactor");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("kron_transfer: factorization not coprime");
    const CrtMaps maps = crt_maps(m, n);
    std::vector<unsigned> rho_inv(N), tau_inv(N);
    for (unsigned i = 0; i < N; ++i) {
        rho_inv[maps.rho[i]] = i;
        tau_inv[maps.tau[i]] = i;
    }
    KronTransfer out;
    out.m = m;
    out.n = n;
    out.galois_multiplier = 1;
    out.positions.order = N;
    for (unsigned a : spec.rows) out.positions.rows.push_back(rho_inv[tau_inv[a]]);
    for (unsigned b : spec.cols) out.positions.cols.push_back(rho_inv[b]);
    std::sort(out.positions.rows.begin(), out.positions.rows.end());
    std::sort(out.positions.cols.begin(), out.positions.cols.end());
    return out;
}

} // namespace fminor
