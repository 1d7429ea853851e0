#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "maxplus/linalg.hpp"
#include "maxplus/random.hpp"
#include "maxplus/rational.hpp"

using maxplus::Compare;
using maxplus::Dense;
using maxplus::Rational;
using maxplus::Rng;
using maxplus::ShapeError;
using maxplus::Tropical;
using maxplus::TropMatrix;

namespace {

using TR = Tropical<Rational>;
using M = TropMatrix<Rational>;

TR fin(std::int64_t v) { return TR(Rational(v)); }

M mat(std::initializer_list<std::initializer_list<TR>> rows) {
    return M::from_rows(rows);
}

M random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    M out(rows, cols);
    for (auto& cell : out.cells()) {
        std::uint64_t kind = rng.below(10);
        if (kind == 0)
            cell = TR::bottom();
        else if (kind == 1)
            cell = TR::top();
        else
            cell = TR(Rational(std::int64_t(rng.below(21)) - 10,
                               std::int64_t(rng.range(1, 5))));
    }
    return out;
}

const Compare<Rational> cmp{};

}  // namespace

TEST_CASE("entrywise max and min with their neutral matrices") {
    M a = mat({{fin(1), fin(2)}});
    M b = mat({{fin(3), fin(0)}});
    CHECK(oplus(a, b) == mat({{fin(3), fin(2)}}));
    CHECK(wedge(a, b) == mat({{fin(1), fin(0)}}));
    CHECK(oplus(a, a) == a);
    CHECK(wedge(a, a) == a);

    M bottoms(1, 2);  // default cells are bottom
    CHECK(oplus(a, bottoms) == a);
    M tops = mat({{TR::top(), TR::top()}});
    CHECK(wedge(a, tops) == a);

    CHECK_THROWS_AS(oplus(a, mat({{fin(1)}})), ShapeError);
    CHECK_THROWS_AS(wedge(a, M(2, 2)), ShapeError);
}

TEST_CASE("tropical product evaluates max-plus sums") {
    M a = mat({{TR::one(), fin(1)}, {TR::bottom(), fin(2)}});
    M ones = maxplus::trop_ones<Rational>(2, 1);
    CHECK(odot(a, ones) == mat({{fin(1)}, {fin(2)}}));

    M any = mat({{fin(3), fin(-1)}, {fin(0), fin(7)}});
    CHECK(odot(any, maxplus::trop_identity<Rational>(2)) == any);
    CHECK(odot(maxplus::trop_identity<Rational>(2), any) == any);
    CHECK(odot(any, M(2, 2)) == M(2, 2));

    CHECK_THROWS_AS(odot(a, M(3, 1)), ShapeError);
}

TEST_CASE("transpose is an involution and reverses products") {
    M a = mat({{fin(1), fin(2)}, {fin(3), fin(4)}});
    CHECK(transpose(a) == mat({{fin(1), fin(3)}, {fin(2), fin(4)}}));
    CHECK(transpose(transpose(a)) == a);

    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        M x = random_matrix(rng, 3, 3);
        M y = random_matrix(rng, 3, 3);
        CHECK(transpose(odot(x, y)) == odot(transpose(y), transpose(x)));
    }
}

TEST_CASE("left division by a column of units takes the column minimum") {
    M a = mat({{TR::one()}, {TR::one()}});
    M b = mat({{fin(3)}, {fin(5)}});
    CHECK(ldiv(a, b) == mat({{fin(3)}}));
    CHECK_THROWS_AS(ldiv(a, M(3, 1)), ShapeError);
}

TEST_CASE("dividing by the identity changes nothing") {
    Rng rng(23);
    M b = random_matrix(rng, 3, 4);
    CHECK(ldiv(maxplus::trop_identity<Rational>(3), b) == b);
    M d = random_matrix(rng, 4, 3);
    CHECK(rdiv(d, maxplus::trop_identity<Rational>(3)) == d);
}

TEST_CASE("right division subtracts a unit row") {
    M d = mat({{fin(3)}, {fin(5)}});
    M c = mat({{TR::one()}});
    CHECK(rdiv(d, c) == mat({{fin(3)}, {fin(5)}}));
    CHECK_THROWS_AS(rdiv(d, M(1, 2)), ShapeError);
}

TEST_CASE("entrywise order") {
    CHECK(le(mat({{TR::one(), fin(1)}}), mat({{TR::one(), fin(2)}}), cmp));
    CHECK(le(mat({{fin(1)}}), mat({{fin(1)}}), cmp));
    CHECK_FALSE(le(mat({{fin(1)}}), mat({{TR::one()}}), cmp));
    CHECK_THROWS_AS(le(mat({{fin(1)}}), M(2, 1), cmp), ShapeError);
}

TEST_CASE("division computes the greatest solution of the inequality") {
    Rng rng(31);
    for (int i = 0; i < 200; ++i) {
        std::size_t k = 1 + rng.below(4);
        std::size_t n = 1 + rng.below(4);
        std::size_t m = 1 + rng.below(4);
        M a = random_matrix(rng, k, n);
        M b = random_matrix(rng, k, m);
        M x = random_matrix(rng, n, m);

        // The quotient itself satisfies the inequality, and any candidate
        // satisfies it exactly when it is below the quotient.
        CHECK(le(odot(a, ldiv(a, b)), b, cmp));
        CHECK(le(odot(a, x), b, cmp) == le(x, ldiv(a, b), cmp));

        M c = random_matrix(rng, m, k);
        M d = random_matrix(rng, n, k);
        CHECK(le(odot(rdiv(d, c), c), d, cmp));
        CHECK(le(odot(x, c), d, cmp) == le(x, rdiv(d, c), cmp));
    }
}

TEST_CASE("products preserve the order") {
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        M a = random_matrix(rng, 3, 3);
        M b = random_matrix(rng, 3, 3);
        // Bump some entries upward to get comparable pairs.
        M a2 = oplus(a, random_matrix(rng, 3, 3));
        M b2 = oplus(b, random_matrix(rng, 3, 3));
        REQUIRE(le(a, a2, cmp));
        REQUIRE(le(b, b2, cmp));
        CHECK(le(odot(a, b), odot(a2, b2), cmp));
    }
}

TEST_CASE("the product is associative") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        M a = random_matrix(rng, 1 + rng.below(3), 1 + rng.below(3));
        M b = random_matrix(rng, a.cols(), 1 + rng.below(3));
        M c = random_matrix(rng, b.cols(), 1 + rng.below(3));
        CHECK(odot(odot(a, b), c) == odot(a, odot(b, c)));
    }
}

TEST_CASE("unconstrained coordinates stay at top in quotients") {
    // A bottom column in A places no constraint on the matching row of X.
    M a = mat({{TR::bottom()}, {TR::bottom()}});
    M b = mat({{fin(3)}, {fin(5)}});
    CHECK(ldiv(a, b) == mat({{TR::top()}}));

    M d = mat({{fin(2)}});
    M c = mat({{TR::bottom()}});
    CHECK(rdiv(d, c) == mat({{TR::top()}}));
}

TEST_CASE("round trip between plain and tropical matrices") {
    Dense<Rational> plain(2, 2);
    plain.at(0, 0) = Rational(1, 2);
    plain.at(1, 1) = Rational(-3);
    M lifted = maxplus::to_tropical(plain);
    CHECK(lifted.at(0, 0) == TR(Rational(1, 2)));
    CHECK(maxplus::from_tropical(lifted) == plain);
    CHECK_THROWS_AS(maxplus::from_tropical(mat({{TR::top()}})),
                    maxplus::DomainError);
}
