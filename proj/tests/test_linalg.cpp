#include <doctest.h>

#include "dgmoduli/matrix.hpp"
#include "test_util.hpp"

using namespace dgm;

TEST_CASE("gauss: identity over F5") {
    Mat m = Mat::identity(Ring::fp(5), 2);
    GaussResult g = gauss_decompose(m);
    CHECK(g.rank == 2);
    CHECK(g.kernel.cols() == 0);
    CHECK(g.rref == m);
}

TEST_CASE("gauss: all-ones 2x2 over F2") {
    Mat m(Ring::fp(2), 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.set(i, j, 1);
    GaussResult g = gauss_decompose(m);
    // hand elimination: rref [[1,1],[0,0]], kernel spanned by (1,1)
    CHECK(g.rank == 1);
    REQUIRE(g.kernel.cols() == 1);
    CHECK(g.kernel.at(0, 0) == 1);
    CHECK(g.kernel.at(1, 0) == 1);
    CHECK((m * g.kernel).is_zero());
}

TEST_CASE("gauss: empty shapes") {
    Mat m(Ring::rationals(), 0, 3);
    GaussResult g = gauss_decompose(m);
    CHECK(g.rank == 0);
    CHECK(g.kernel.cols() == 3);
}

TEST_CASE("gauss rejects Z and mixed rings") {
    Mat z(Ring::integers(), 1, 1);
    CHECK_THROWS_AS(gauss_decompose(z), InputError);
    Mat a(Ring::fp(2), 1, 1), b(Ring::fp(3), 1, 1);
    CHECK_THROWS_AS(a * b, InputError);
}

TEST_CASE("solve: identity, underdetermined, inconsistent") {
    Ring f2 = Ring::fp(2);
    Mat id = Mat::identity(f2, 3);
    Mat b = Mat::col_vector(f2, {1, 0, 1});
    CHECK(*solve(id, b) == b);

    Mat row(f2, 1, 2);
    row.set(0, 0, 1);
    row.set(0, 1, 1);
    Mat one = Mat::col_vector(f2, {1});
    auto x = solve(row, one);
    REQUIRE(x.has_value());
    CHECK(row * *x == one);  // one of (1,0), (0,1)

    Mat zero(f2, 1, 1);
    CHECK(!solve(zero, one).has_value());
}

TEST_CASE("snf: hand examples") {
    Ring z = Ring::integers();
    SUBCASE("diag(2,3) -> diag(1,6)") {
        Mat m(z, 2, 2);
        m.set(0, 0, 2);
        m.set(1, 1, 3);
        SnfResult s = smith_normal_form(m);
        REQUIRE(s.divisors.size() == 2);
        CHECK(s.divisors[0] == 1);
        CHECK(s.divisors[1] == 6);
        CHECK(s.u * m * s.v == s.d);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);
    }
    SUBCASE("identity") {
        Mat m = Mat::identity(z, 3);
        SnfResult s = smith_normal_form(m);
        CHECK(s.d == m);
        CHECK(s.divisors == std::vector<mpz_class>{1, 1, 1});
    }
    SUBCASE("zero 1x1") {
        Mat m(z, 1, 1);
        SnfResult s = smith_normal_form(m);
        CHECK(s.divisors.empty());
        CHECK(s.d.is_zero());
    }
}

TEST_CASE("property: rank and kernel over small prime fields") {
    std::mt19937_64 rng(7);
    for (long p : {2L, 3L, 5L}) {
        for (int trial = 0; trial < 40; ++trial) {
            int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
            Mat m = testutil::random_mat(rng, Ring::fp(p), r, c, 0, p - 1);
            GaussResult g = gauss_decompose(m);
            CHECK(g.rank == rank_of(g.rref));
            CHECK(g.rank + g.kernel.cols() == c);
            CHECK((m * g.kernel).is_zero());
            CHECK(g.image.cols() == g.rank);
        }
    }
}

TEST_CASE("property: snf invariant under unimodular changes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        Mat m = testutil::random_mat(rng, Ring::integers(), r, c);
        SnfResult s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        for (size_t i = 0; i + 1 < s.divisors.size(); ++i) CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        CHECK(abs(det(s.u)) == 1);
        CHECK(abs(det(s.v)) == 1);

        Mat pre = testutil::random_unimodular(rng, r), post = testutil::random_unimodular(rng, c);
        SnfResult s2 = smith_normal_form(pre * m * post);
        CHECK(s2.divisors == s.divisors);
    }
}

TEST_CASE("property: solve agrees with gauss image membership") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        long p = (trial % 2) ? 3 : 5;
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        Mat m = testutil::random_mat(rng, Ring::fp(p), r, c, 0, p - 1);
        Mat x = testutil::random_mat(rng, Ring::fp(p), c, 1, 0, p - 1);
        Mat b = m * x;  // in the image by construction
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("integer kernel is a lattice basis") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        Mat m = testutil::random_mat(rng, Ring::integers(), r, c);
        Mat k = integer_kernel(m);
        CHECK((m * k).is_zero());
        // lattice rank matches the rational kernel dimension
        Mat mq(Ring::rationals(), r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) mq.set(i, j, m.at(i, j));
        CHECK(k.cols() == gauss_decompose(mq).kernel.cols());
    }
}

TEST_CASE("rationals are kept canonical") {
    Mat m(Ring::rationals(), 1, 1);
    m.set(0, 0, mpq_class(6, 4));
    CHECK(m.at(0, 0).get_num() == 3);
    CHECK(m.at(0, 0).get_den() == 2);
}

TEST_CASE("primality guard") {
    CHECK_THROWS_AS(Ring::fp(1), InputError);
    CHECK_THROWS_AS(Ring::fp(4), InputError);
    CHECK_NOTHROW(Ring::fp(2));
    CHECK_NOTHROW(Ring::fp(1000003));
}
