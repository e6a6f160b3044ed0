#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fminor/intpoly.hpp"

#include <random>

using namespace fminor;

namespace {

IntPoly poly(std::initializer_list<long> cs)
{
    std::vector<BigInt> v;
    for (long c : cs) v.push_back(c);
    return IntPoly(std::move(v));
}

// Independent oracle: resultant as the determinant of the Sylvester matrix,
// computed by fraction-free Bareiss elimination over Z.
BigInt sylvester_resultant(const IntPoly& a, const IntPoly& b)
{
    const int da = a.degree(), db = b.degree();
    REQUIRE(da >= 0);
    REQUIRE(db >= 0);
    const int n = da + db;
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = a.coeff(da - j);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.coeff(db - j);
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                BigInt q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                REQUIRE(r == 0);
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

TEST_CASE("polynomial arithmetic basics")
{
    IntPoly a = poly({1, 2, 3}); // 3X^2 + 2X + 1
    CHECK(a.degree() == 2);
    CHECK(a(BigInt(2)) == 17);
    CHECK((a - a).is_zero());
    CHECK((a * poly({0, 1})).degree() == 3);
    CHECK(poly({-4, 0, 1}).to_string() == "X^2 - 4");
}

TEST_CASE("monic division is exact")
{
    IntPoly d = poly({-1, 0, 0, 1}); // X^3 - 1
    IntPoly a = poly({5, -2, 7}) * d + poly({3, 1});
    IntPoly q, r;
    divmod_monic(a, d, q, r);
    CHECK(q == poly({5, -2, 7}));
    CHECK(r == poly({3, 1}));
    CHECK(divexact(poly({5, -2, 7}) * d, d) == poly({5, -2, 7}));
}

TEST_CASE("resultant: hand-checked values")
{
    CHECK(resultant(poly({1, 1}), poly({0, 1})) == -1);  // Res(X+1, X)
    CHECK(resultant(poly({1, 0, 1}), poly({0, 1})) == 1); // Res(X^2+1, X)
    CHECK(resultant(poly({1, 1}), poly({1, -1})) == 2);   // Res(X+1, 1-X)
    CHECK(resultant(poly({-1, 1}), poly({7})) == 7);      // constant second argument
    // shared root makes the resultant vanish
    CHECK(resultant(poly({-1, 1}) * poly({1, 1}), poly({-1, 1}) * poly({2, 1})) == 0);
}

TEST_CASE("resultant agrees with the Sylvester determinant on random inputs")
{
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<BigInt> ca(deg(rng) + 1), cb(deg(rng) + 1);
        for (auto& c : ca) c = coeff(rng);
        for (auto& c : cb) c = coeff(rng);
        IntPoly a{std::move(ca)}, b{std::move(cb)};
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
}
