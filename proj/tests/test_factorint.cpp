#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fminor/factorint.hpp"

using namespace fminor;

TEST_CASE("primality")
{
    CHECK(is_probable_prime(BigInt(2)));
    CHECK(is_probable_prime(BigInt(7919)));
    CHECK_FALSE(is_probable_prime(BigInt(1)));
    CHECK_FALSE(is_probable_prime(BigInt(7917)));
    // 2^89 - 1 is a Mersenne prime; 2^87 - 1 is not
    CHECK(is_probable_prime(bpow(BigInt(2), 89) - 1));
    CHECK_FALSE(is_probable_prime(bpow(BigInt(2), 87) - 1));
}

TEST_CASE("complete factorizations")
{
    auto f = factor_integer(BigInt(2744));
    REQUIRE(f.complete());
    REQUIRE(f.prime_powers.size() == 2);
    CHECK(f.prime_powers[0] == std::pair<BigInt, unsigned>{2, 3});
    CHECK(f.prime_powers[1] == std::pair<BigInt, unsigned>{7, 3});
    CHECK(f.value() == 2744);

    CHECK(factor_integer(BigInt(1)).prime_powers.empty());

    // a perfect power of a two-digit prime times a large prime
    BigInt n = bpow(BigInt(89), 5) * (bpow(BigInt(2), 61) - 1);
    auto g = factor_integer(n);
    REQUIRE(g.complete());
    CHECK(g.value() == n);

    // rho must split a product of two medium primes
    BigInt semi = BigInt("1000000007") * BigInt("1000000009");
    auto h = factor_integer(semi);
    REQUIRE(h.complete());
    CHECK(h.prime_powers.size() == 2);
}

TEST_CASE("exhausted budget reports the composite cofactor instead of guessing")
{
    // product of two 30-digit primes: far beyond a tiny rho budget
    BigInt p("100000000000000000000000000319");
    BigInt q("100000000000000000000000000379");
    REQUIRE(is_probable_prime(p));
    REQUIRE(is_probable_prime(q));
    auto f = factor_integer(p * q * 8, 50);
    CHECK_FALSE(f.complete());
    CHECK(f.cofactor == p * q);
    REQUIRE(f.prime_powers.size() == 1);
    CHECK(f.prime_powers[0] == std::pair<BigInt, unsigned>{2, 3});
    CHECK(f.value() == p * q * 8);
}

TEST_CASE("rejects nonpositive input")
{
    CHECK_THROWS_AS(factor_integer(BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(factor_integer(BigInt(-6)), std::invalid_argument);
}
