#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fminor/structure.hpp"

#include "fminor/symmetry.hpp"

#include <random>

using namespace fminor;

namespace {

CycElt ci(unsigned order, long v) { return CycElt::from_int(order, v); }

// random integer-entry BlockSpec (entries as order-1 elements)
BlockSpec random_block_spec(std::mt19937& rng, unsigned order = 1)
{
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<unsigned> nblocks(1, 4);
    BlockSpec spec;
    spec.order = order;
    const unsigned n = nblocks(rng);
    std::uniform_int_distribution<unsigned> width(0, 4);
    spec.widths.resize(n);
    for (auto& w : spec.widths) w = width(rng);
    std::sort(spec.widths.rbegin(), spec.widths.rend());
    if (spec.widths[0] == 0) spec.widths[0] = 1;
    spec.scalar.assign(n, std::vector<CycElt>(n, CycElt(order)));
    for (auto& row : spec.scalar)
        for (auto& e : row) e = ci(order, entry(rng));
    spec.base.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        spec.base[i].assign(spec.widths[i], std::vector<CycElt>(spec.widths[0], CycElt(order)));
        for (auto& row : spec.base[i])
            for (auto& e : row) e = ci(order, entry(rng));
    }
    return spec;
}

bool pivots_ok(const BlockSpec& spec)
{
    const unsigned n = spec.block_count();
    for (unsigned k = 1; k < n; ++k) {
        bool later = false;
        for (unsigned j = k; j < n; ++j) later = later || spec.widths[j] > 0;
        if (!later) continue;
        std::vector<std::vector<CycElt>> a(k);
        for (unsigned i = 0; i < k; ++i)
            a[i].assign(spec.scalar[i].begin(), spec.scalar[i].begin() + k);
        if (cyc_det(std::move(a)).is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("single-block identity: det(aB) = a^M det B")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        BlockSpec spec = random_block_spec(rng);
        spec.widths.resize(1);
        spec.scalar = {{spec.scalar[0][0]}};
        spec.base.resize(1);
        const CycElt direct = cyc_det(assemble_block_matrix(spec));
        CHECK(block_determinant(spec) == direct);
    }
}

TEST_CASE("degenerate widths (2,0)")
{
    BlockSpec spec;
    spec.order = 1;
    spec.widths = {2, 0};
    spec.scalar = {{ci(1, 3), ci(1, 1)}, {ci(1, 4), ci(1, 5)}};
    spec.base.resize(2);
    spec.base[0] = {{ci(1, 1), ci(1, 2)}, {ci(1, 3), ci(1, 4)}};
    // expected a_11^2 * det B_11 = 9 * (4 - 6) = -18
    CHECK(block_determinant(spec) == ci(1, -18));
    CHECK(cyc_det(assemble_block_matrix(spec)) == ci(1, -18));
}

TEST_CASE("block identity against the direct determinant, 200 random specs")
{
    std::mt19937 rng(12);
    int done = 0;
    while (done < 200) {
        BlockSpec spec = random_block_spec(rng);
        if (!pivots_ok(spec)) continue;
        const CycElt direct = cyc_det(assemble_block_matrix(spec));
        CHECK(block_determinant(spec) == direct);
        ++done;
    }
}

TEST_CASE("block identity with cyclotomic scalars")
{
    std::mt19937 rng(13);
    int done = 0;
    while (done < 12) {
        BlockSpec spec = random_block_spec(rng, 6);
        std::uniform_int_distribution<int> e(0, 5);
        for (auto& row : spec.scalar)
            for (auto& x : row) x = x * CycElt::root_power(6, e(rng));
        if (!pivots_ok(spec)) continue;
        CHECK(block_determinant(spec) == cyc_det(assemble_block_matrix(spec)));
        ++done;
    }
}

TEST_CASE("zero pivot needed by the elimination is reported")
{
    BlockSpec spec;
    spec.order = 1;
    spec.widths = {1, 1};
    spec.scalar = {{ci(1, 0), ci(1, 1)}, {ci(1, 1), ci(1, 1)}};
    spec.base = {{{ci(1, 1)}}, {{ci(1, 1)}}};
    CHECK_THROWS_AS(block_determinant(spec), std::domain_error);
}

TEST_CASE("crt maps")
{
    auto maps = crt_maps(2, 3);
    CHECK(maps.rho[1] == 4); // position (0,1): x = 0 mod 2, 1 mod 3
    CHECK(maps.rho[0] == 0);
    // permutation property is validated inside; spot-check tau
    CHECK(maps.tau[1] == 5);
    CHECK_THROWS_AS(crt_maps(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(crt_maps(1, 5), std::invalid_argument);
    CHECK_NOTHROW(crt_maps(3, 5)); // gcd(8, 15) = 1 asserted inside
}

TEST_CASE("kronecker factorization identity for all coprime mn <= 30")
{
    for (unsigned m = 2; m <= 15; ++m)
        for (unsigned n = 2; n <= 15; ++n) {
            if (m * n > 30 || std::gcd(m, n) != 1) continue;
            CAPTURE(m);
            CAPTURE(n);
            CHECK(verify_kron_equivalence(m, n));
        }
}

TEST_CASE("kron transfer preserves norms (orders 6 and 10, up to half size)")
{
    for (unsigned N : {6u, 10u}) {
        const unsigned m = 2; // split N = 2 * (N/2), coprime for these orders
        for (unsigned size = 1; size <= N / 2; ++size) {
            std::vector<unsigned> idx(size);
            // enumerate subsets
            std::vector<std::vector<unsigned>> subsets;
            std::vector<unsigned> cur;
            auto rec = [&](auto&& self, unsigned next) -> void {
                if (cur.size() == size) {
                    subsets.push_back(cur);
                    return;
                }
                for (unsigned x = next; x < N; ++x) {
                    cur.push_back(x);
                    self(self, x + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
            const CrtMaps maps = crt_maps(m, N / m);
            for (const auto& A : subsets) {
                MinorSpec spec{N, A, A};
                KronTransfer tr = kron_transfer(spec, m);
                // block-matrix minor at the transferred positions, assembled
                // independently from the entry formula
                const unsigned sz = spec.size();
                std::vector<std::vector<CycElt>> sub(sz, std::vector<CycElt>(sz, CycElt(N)));
                for (unsigned i = 0; i < sz; ++i)
                    for (unsigned j = 0; j < sz; ++j) {
                        const unsigned k = tr.positions.rows[i], l = tr.positions.cols[j];
                        const u64 e = static_cast<u64>(maps.tau[maps.rho[k]]) * maps.rho[l] % N;
                        sub[i][j] = CycElt::root_power(N, static_cast<long long>(e));
                    }
                CHECK(babs(cyc_det(sub).norm()) == babs(minor_norm_value(spec)));
            }
        }
    }
}

TEST_CASE("kron transfer rejects non-coprime factorizations")
{
    CHECK_THROWS_AS(kron_transfer(MinorSpec{4, {0, 1}, {0, 1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(kron_transfer(MinorSpec{9, {0, 1}, {0, 1}}, 3), std::invalid_argument);
}

TEST_CASE("full-size transfer reproduces the full determinant norm")
{
    std::vector<unsigned> all{0, 1, 2, 3, 4, 5};
    MinorSpec spec{6, all, all};
    KronTransfer tr = kron_transfer(spec, 2);
    CHECK(tr.positions.rows == all);
    CHECK(tr.positions.cols == all);
}
