#include <doctest.h>

#include <random>

#include "crystalk/exact_linalg.hpp"

using namespace crystalk;

namespace {

IntegerMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntegerMatrix::from_rows(conv);
}

IntegerMatrix random_matrix(std::mt19937& rng, long r, long c, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntegerMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

// independent oracle: the minor definition, one Bareiss determinant per entry
IntegerMatrix exterior_by_minors(const IntegerMatrix& a, long l) {
    auto subs = index_subsets(a.rows(), l);
    long dim = static_cast<long>(subs.size());
    IntegerMatrix out(dim, dim);
    for (long x = 0; x < dim; ++x)
        for (long y = 0; y < dim; ++y) {
            IntegerMatrix sub(l, l);
            for (long i = 0; i < l; ++i)
                for (long j = 0; j < l; ++j) sub(i, j) = a(subs[x][i], subs[y][j]);
            out(x, y) = determinant(sub);
        }
    return out;
}

}  // namespace

TEST_CASE("smith normal form on the spec examples") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        auto d = smith_normal_form(mat({{2, 0}, {0, 3}}));
        CHECK(d.verify(mat({{2, 0}, {0, 3}})));
        CHECK(d.invariant_factors() == std::vector<Int>{1, 6});
    }
    SUBCASE("identity stays identity") {
        auto d = smith_normal_form(IntegerMatrix::identity(3));
        CHECK(d.s == IntegerMatrix::identity(3));
        CHECK(d.verify(IntegerMatrix::identity(3)));
    }
    SUBCASE("[[1,2],[3,4]] -> diag(1,2)") {
        auto d = smith_normal_form(mat({{1, 2}, {3, 4}}));
        CHECK(d.verify(mat({{1, 2}, {3, 4}})));
        CHECK(d.invariant_factors() == std::vector<Int>{1, 2});
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        long r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntegerMatrix a = random_matrix(rng, r, c, 9);
        auto d = smith_normal_form(a);
        CAPTURE(a.to_string());
        CHECK(d.verify(a));
        CHECK(static_cast<long>(d.invariant_factors().size()) == rational_rank(a));
    }
}

TEST_CASE("smith transforms carry exact inverses") {
    std::mt19937 rng(999);
    for (int iter = 0; iter < 20; ++iter) {
        IntegerMatrix a = random_matrix(rng, 4, 4, 6);
        auto t = smith_with_inverses(a);
        CHECK(t.u * t.u_inv == IntegerMatrix::identity(4));
        CHECK(t.v * t.v_inv == IntegerMatrix::identity(4));
        CHECK(t.u * a * t.v == t.s);
    }
}

TEST_CASE("rational rank") {
    CHECK(rational_rank(IntegerMatrix(2, 2)) == 0);
    CHECK(rational_rank(IntegerMatrix::identity(4)) == 4);
    CHECK(rational_rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rational_rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("determinant") {
    CHECK(determinant(mat({{0, -1}, {1, -1}})) == 1);
    CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(IntegerMatrix(0, 0)) == 1);
}

TEST_CASE("exterior power basics") {
    IntegerMatrix a = mat({{1, -2}, {3, 5}});
    SUBCASE("top power is the determinant") {
        IntegerMatrix top = exterior_power(a, 2);
        CHECK(top.rows() == 1);
        CHECK(top(0, 0) == determinant(a));
    }
    SUBCASE("degree zero and one") {
        CHECK(exterior_power(a, 0)(0, 0) == 1);
        CHECK(exterior_power(a, 1) == a);
    }
    SUBCASE("cap is enforced") {
        CHECK_THROWS_AS(exterior_power(IntegerMatrix::identity(20), 10, 1000), DimensionOverflow);
    }
}

TEST_CASE("exterior power equals the minor definition") {
    std::mt19937 rng(777);
    for (long n = 2; n <= 5; ++n) {
        IntegerMatrix a = random_matrix(rng, n, n, 5);
        for (long l = 0; l <= n; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            CHECK(exterior_power(a, l) == exterior_by_minors(a, l));
        }
    }
}

TEST_CASE("Cauchy-Binet multiplicativity") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 10; ++iter) {
        long n = 3 + iter % 2;
        IntegerMatrix a = random_matrix(rng, n, n, 4);
        IntegerMatrix b = random_matrix(rng, n, n, 4);
        for (long l = 0; l <= n; ++l)
            CHECK(exterior_power(a * b, l) == exterior_power(a, l) * exterior_power(b, l));
    }
}

TEST_CASE("characteristic polynomial examples") {
    SUBCASE("identity") {
        CHECK(characteristic_polynomial(IntegerMatrix::identity(2)) == std::vector<Int>{1, -2, 1});
    }
    SUBCASE("companion of x^2+x+1 reproduces it") {
        CHECK(characteristic_polynomial(mat({{0, -1}, {1, -1}})) == std::vector<Int>{1, 1, 1});
    }
    SUBCASE("diag(2,3)") {
        CHECK(characteristic_polynomial(mat({{2, 0}, {0, 3}})) == std::vector<Int>{6, -5, 1});
    }
}

TEST_CASE("charpoly coefficients are signed traces of exterior powers") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 10; ++iter) {
        long n = 2 + iter % 4;
        IntegerMatrix a = random_matrix(rng, n, n, 6);
        std::vector<Int> chi = characteristic_polynomial(a);
        for (long l = 0; l <= n; ++l) {
            Int lhs = exterior_power(a, l).trace();
            Int rhs = (l % 2 == 0) ? chi[n - l] : Int(-chi[n - l]);
            CHECK(lhs == rhs);
        }
    }
}
