#include <doctest.h>

#include "crystalk/lattice.hpp"

using namespace crystalk;

namespace {

IntegerMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntegerMatrix::from_rows(conv);
}

}  // namespace

TEST_CASE("validate accepts the order-3 companion action") {
    CyclicLattice lattice = validate(3, mat({{0, -1}, {1, -1}}));
    CHECK(lattice.n == 2);
    CHECK(determinant(lattice.action - IntegerMatrix::identity(2)) == 3);
}

TEST_CASE("validate rejects bad inputs with the offending power") {
    SUBCASE("coordinate swap fixes (1,1)") {
        try {
            validate(2, mat({{0, 1}, {1, 0}}));
            FAIL("expected NotFreeOutsideOrigin");
        } catch (const NotFreeOutsideOrigin& e) {
            CHECK(e.power == 1);
        }
    }
    SUBCASE("-I has order 2, not 4") {
        try {
            validate(4, mat({{-1, 0}, {0, -1}}));
            FAIL("expected WrongOrder");
        } catch (const WrongOrder& e) {
            CHECK(e.power == 2);
        }
    }
    SUBCASE("order too large") {
        CHECK_THROWS_AS(validate(3, mat({{-1, 0}, {0, -1}})), WrongOrder);
    }
}

TEST_CASE("cyclotomic polynomial values") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic lattice construction") {
    SUBCASE("m=2, k=3 gives -I_3") {
        CyclicLattice lattice = cyclotomic_lattice(2, 3);
        CHECK(lattice.n == 3);
        IntegerMatrix minus = IntegerMatrix(3, 3) - IntegerMatrix::identity(3);
        CHECK(lattice.action == minus);
    }
    SUBCASE("m=4, k=1 is the rotation") {
        CHECK(cyclotomic_lattice(4, 1).action == mat({{0, -1}, {1, 0}}));
    }
    SUBCASE("m=3, k=1 has charpoly x^2+x+1") {
        CyclicLattice lattice = cyclotomic_lattice(3, 1);
        CHECK(lattice.action == mat({{0, -1}, {1, -1}}));
        CHECK(characteristic_polynomial(lattice.action) == std::vector<Int>{1, 1, 1});
    }
}

TEST_CASE("cyclotomic lattices validate across the small grid") {
    for (long m = 1; m <= 30; ++m) {
        for (long k = 1; k <= 3; ++k) {
            if (k * euler_phi(m) > 16) continue;  // keep the run quick
            CAPTURE(m);
            CAPTURE(k);
            CyclicLattice lattice = cyclotomic_lattice(m, k);
            CHECK(lattice.n == k * euler_phi(m));
            // free outside the origin restated as full rank of T^j - I
            for (long j = 1; j < m; ++j)
                CHECK(rational_rank(lattice.action.pow(j) - IntegerMatrix::identity(lattice.n)) ==
                      lattice.n);
            Int det = determinant(lattice.action);
            CHECK((det == 1 || det == -1));
            if (euler_phi(m) % 2 == 0) CHECK(det == 1);
        }
    }
}

TEST_CASE("sylow data") {
    SUBCASE("m=9: k=1, one prime") {
        SylowData data = sylow_data(cyclotomic_lattice(9, 1));
        CHECK(data.k == 1);
        CHECK(data.prime_powers == std::vector<std::pair<long, long>>{{3, 2}});
        CHECK(data.k_per_prime == std::vector<long>{1});
    }
    SUBCASE("m=6: per-prime multiplicities differ") {
        SylowData data = sylow_data(cyclotomic_lattice(6, 1));
        CHECK(data.k == 1);
        CHECK(data.k_per_prime == std::vector<long>{2, 1});
    }
    SUBCASE("m=2, k=5") {
        SylowData data = sylow_data(cyclotomic_lattice(2, 5));
        CHECK(data.k == 5);
    }
    SUBCASE("m=1 degenerate convention: k = n") {
        CyclicLattice lattice = validate(1, IntegerMatrix::identity(4));
        CHECK(sylow_data(lattice).k == 4);
    }
    SUBCASE("k round-trips on the grid") {
        for (long m = 2; m <= 12; ++m)
            for (long k = 1; k <= 2; ++k) {
                if (k * euler_phi(m) > 12) continue;
                CHECK(sylow_data(cyclotomic_lattice(m, k)).k == k);
            }
    }
}

TEST_CASE("subgroup generator") {
    CyclicLattice lattice = cyclotomic_lattice(4, 1);
    SUBCASE("order-2 subgroup of Z/4 acts by -I") {
        IntegerMatrix minus = IntegerMatrix(2, 2) - IntegerMatrix::identity(2);
        CHECK(subgroup_generator(lattice, 2) == minus);
    }
    SUBCASE("trivial and full subgroups") {
        CHECK(subgroup_generator(lattice, 1) == IntegerMatrix::identity(2));
        CHECK(subgroup_generator(lattice, 4) == lattice.action);
    }
    SUBCASE("non-divisor rejected") {
        CHECK_THROWS_AS(subgroup_generator(lattice, 3), NotADivisor);
    }
}
