#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fminor/minors.hpp"

#include "fminor/bounds.hpp"
#include "fminor/symmetry.hpp"

#include <algorithm>
#include <random>

using namespace fminor;

namespace {

IntPoly poly(std::initializer_list<long> cs)
{
    std::vector<BigInt> v;
    for (long c : cs) v.push_back(c);
    return IntPoly(std::move(v));
}

MinorSpec random_spec(unsigned n, unsigned m, std::mt19937& rng)
{
    std::vector<unsigned> all(n);
    for (unsigned i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<unsigned> rows(all.begin(), all.begin() + m);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<unsigned> cols(all.begin(), all.begin() + m);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return MinorSpec{n, rows, cols};
}

// parity of the permutation sorting (v[0], v[1], ...) ascending
int sort_sign(std::vector<unsigned> v)
{
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) {
                std::swap(v[i], v[j]);
                sign = -sign;
            }
    return sign;
}

} // namespace

TEST_CASE("golden minors")
{
    // order 7, rows = cols = {0,1,3}
    MinorSpec s7{7, {0, 1, 3}, {0, 1, 3}};
    CHECK(fourier_minor(s7) == reduce(poly({0, -1, -1, 3, 0, 0, -1}), 7));
    // order 6, rows = cols = {0,1,3}: -2(1 + omega)
    MinorSpec s6{6, {0, 1, 3}, {0, 1, 3}};
    CHECK(fourier_minor(s6) == reduce(poly({-2, -2}), 6));
    // any singleton at index 0 is the 1x1 unit minor
    for (unsigned n : {2u, 5u, 9u}) {
        MinorSpec s{n, {0}, {0}};
        CHECK(fourier_minor(s) == CycElt::from_int(n, 1));
    }
}

TEST_CASE("golden norms with factorizations")
{
    NormReport r7 = minor_norm(MinorSpec{7, {0, 1, 3}, {0, 1, 3}});
    CHECK(r7.norm == 2744);
    REQUIRE(r7.factorization.prime_powers.size() == 2);
    CHECK(r7.factorization.prime_powers[0] == std::pair<BigInt, unsigned>{2, 3});
    CHECK(r7.factorization.prime_powers[1] == std::pair<BigInt, unsigned>{7, 3});

    NormReport r6 = minor_norm(MinorSpec{6, {0, 1, 3}, {0, 1, 3}});
    CHECK(r6.norm == 12);

    // singleton minors are roots of unity with norm +-1
    for (unsigned n : {2u, 3u, 6u, 7u, 12u})
        for (unsigned a = 0; a < n; ++a) {
            BigInt nm = minor_norm_value(MinorSpec{n, {a % n}, {(a * a + 1) % n}});
            CHECK(babs(nm) == 1);
        }
}

TEST_CASE("both norm backends agree and respect the Hadamard bound")
{
    std::mt19937 rng(2025);
    for (int t = 0; t < 60; ++t) {
        const unsigned n = 3 + rng() % 10; // orders 3..12
        const unsigned m = 1 + rng() % std::max(1u, n / 2);
        MinorSpec spec = random_spec(n, m, rng);
        const BigInt a = minor_norm_value(spec, NormBackend::Subresultant);
        const BigInt b = minor_norm_value(spec, NormBackend::MultiModular);
        CHECK(a == b);
        CHECK(babs(a) * babs(a) <= bpow(BigInt(m), static_cast<unsigned long>(m) * totient(n)));
        CHECK((a == 0) == minor_is_zero(spec));
        CHECK((a == 0) == fourier_minor(spec).is_zero());
    }
}

TEST_CASE("translation law, with the row-sorting sign")
{
    std::mt19937 rng(77);
    for (int t = 0; t < 40; ++t) {
        const unsigned n = 4 + rng() % 9;
        const unsigned m = 1 + rng() % (n / 2);
        MinorSpec spec = random_spec(n, m, rng);
        const unsigned shift = rng() % n;
        std::vector<unsigned> shifted;
        for (unsigned a : spec.rows) shifted.push_back((a + shift) % n);
        const int sign = sort_sign(shifted);
        std::sort(shifted.begin(), shifted.end());
        unsigned colsum = 0;
        for (unsigned b : spec.cols) colsum += b;
        CycElt lhs = fourier_minor(MinorSpec{n, shifted, spec.cols});
        CycElt rhs = CycElt::root_power(n, static_cast<long long>(shift) * colsum) * fourier_minor(spec);
        if (sign < 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("galois law on rows and columns, with sorting signs")
{
    std::mt19937 rng(78);
    for (int t = 0; t < 40; ++t) {
        const unsigned n = 4 + rng() % 9;
        const unsigned m = 1 + rng() % (n / 2);
        MinorSpec spec = random_spec(n, m, rng);
        const auto units = units_mod(n);
        const unsigned k = units[rng() % units.size()];
        std::vector<unsigned> krows;
        for (unsigned a : spec.rows) krows.push_back(static_cast<unsigned>(k) * a % n);
        const int sign = sort_sign(krows);
        std::sort(krows.begin(), krows.end());
        CycElt lhs = fourier_minor(MinorSpec{n, krows, spec.cols});
        CycElt rhs = fourier_minor(spec).galois(k);
        if (sign < 0) rhs = -rhs;
        CHECK(lhs == rhs);

        std::vector<unsigned> kcols;
        for (unsigned b : spec.cols) kcols.push_back(static_cast<unsigned>(k) * b % n);
        const int csign = sort_sign(kcols);
        std::sort(kcols.begin(), kcols.end());
        CycElt clhs = fourier_minor(MinorSpec{n, spec.rows, kcols});
        CycElt crhs = fourier_minor(spec).galois(k);
        if (csign < 0) crhs = -crhs;
        CHECK(clhs == crhs);
    }
}

TEST_CASE("affine maps on one side leave the norm unchanged")
{
    std::mt19937 rng(79);
    for (int t = 0; t < 30; ++t) {
        const unsigned n = 3 + rng() % 10;
        const unsigned m = 1 + rng() % std::max(1u, n / 2);
        MinorSpec spec = random_spec(n, m, rng);
        const auto units = units_mod(n);
        const unsigned a = units[rng() % units.size()];
        const unsigned b = rng() % n;
        std::vector<unsigned> mapped;
        for (unsigned x : spec.rows) mapped.push_back((static_cast<u64>(a) * x + b) % n);
        std::sort(mapped.begin(), mapped.end());
        CHECK(babs(minor_norm_value(spec)) ==
              babs(minor_norm_value(MinorSpec{n, mapped, spec.cols})));
    }
}

TEST_CASE("complementarity at order 4: both minors vanish")
{
    CHECK(fourier_minor(MinorSpec{4, {0, 2}, {0, 2}}).is_zero());
    CHECK(fourier_minor(MinorSpec{4, {1, 3}, {1, 3}}).is_zero());
}

TEST_CASE("norm of the full determinant squares to N^(N phi(N))")
{
    for (unsigned n = 2; n <= 8; ++n) {
        std::vector<unsigned> all(n);
        for (unsigned i = 0; i < n; ++i) all[i] = i;
        const BigInt nm = minor_norm_value(MinorSpec{n, all, all});
        CHECK(nm * nm == bpow(BigInt(n), static_cast<unsigned long>(n) * totient(n)));
    }
}

TEST_CASE("prime orders up to 13: no vanishing minor in any orbit pair")
{
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (unsigned m = 1; m <= p / 2; ++m) {
            for (const auto& key : enumerate_orbits(p, m, FamilySpec{FamilyKind::AllPairs, 0}))
                CHECK_FALSE(minor_is_zero(key.spec()));
        }
    }
}

TEST_CASE("classification")
{
    // principal implies d-principal for every divisor
    MinorSpec s{6, {0, 2, 5}, {0, 2, 5}};
    auto c = classify(s);
    CHECK(c.principal);
    for (unsigned d : divisors(6u)) {
        CHECK(c.d_principal.at(d));
        REQUIRE(c.d_galois.at(d).has_value());
        CHECK(*c.d_galois.at(d) == 1);
    }

    // order 6, d = 3: counts (1,1,0) on both sides
    auto c2 = classify(MinorSpec{6, {0, 1}, {3, 4}});
    CHECK(c2.d_principal.at(3));
    CHECK_FALSE(c2.principal);

    // order 5, d = 5: Galois-principal with multiplier 2, not principal
    auto c3 = classify(MinorSpec{5, {1, 2}, {2, 4}});
    CHECK_FALSE(c3.d_principal.at(5));
    REQUIRE(c3.d_galois.at(5).has_value());
    CHECK(*c3.d_galois.at(5) == 2);
}

TEST_CASE("ff_minor examples")
{
    for (u64 q : {3ull, 5ull}) {
        auto ctx = build_field(4, q);
        CHECK(ff_minor(MinorSpec{4, {0, 2}, {0, 2}}, ctx).is_zero());
    }
    auto ctx7 = build_field(7, 11);
    for (unsigned a = 0; a < 7; ++a)
        CHECK_FALSE(ff_minor(MinorSpec{7, {a}, {(a + 2) % 7}}, ctx7).is_zero());
}

TEST_CASE("vanishing characteristics")
{
    auto r7 = vanishing_char_primes(MinorSpec{7, {0, 1, 3}, {0, 1, 3}});
    REQUIRE(r7.vanishing.size() == 1);
    CHECK(r7.vanishing[0] == 2);
    REQUIRE(r7.ramified.size() == 1);
    CHECK(r7.ramified[0] == 7);

    auto r6 = vanishing_char_primes(MinorSpec{6, {0, 1, 3}, {0, 1, 3}});
    CHECK(r6.vanishing.empty()); // 12 = 2^2 * 3, both divide 6
    CHECK(r6.ramified.size() == 2);

    auto r1 = vanishing_char_primes(MinorSpec{9, {4}, {7}});
    CHECK(r1.vanishing.empty());
    CHECK(r1.ramified.empty());

    CHECK_THROWS_AS(vanishing_char_primes(MinorSpec{4, {0, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(MinorSpec{}.validate(), std::invalid_argument);
    CHECK_THROWS_AS((MinorSpec{5, {0, 2}, {1}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((MinorSpec{5, {2, 1}, {0, 1}}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((MinorSpec{5, {0, 5}, {0, 1}}.validate()), std::invalid_argument);
}

TEST_CASE("bareiss path agrees with cofactor expansion on larger fourier minors")
{
    std::mt19937 rng(404);
    for (int t = 0; t < 6; ++t) {
        const unsigned n = 11 + rng() % 3; // sizes 5..6 exercise the Bareiss path
        MinorSpec spec = random_spec(n, 5 + rng() % 2, rng);
        const BigInt nm = minor_norm_value(spec, NormBackend::Subresultant);
        CHECK(nm == minor_norm_value(spec, NormBackend::MultiModular));
    }
}
