#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qbraid/matrix.hpp"

using namespace qbraid;
using oracle::M;
using oracle::S;

namespace {

ExactMatrix random_invertible(std::mt19937& g, std::size_t n) {
    for (;;) {
        ExactMatrix a = oracle::random_matrix(g, n, n);
        if (!oracle::permutation_det(a).is_zero()) return a;
    }
}

}  // namespace

TEST_CASE("involutions") {
    ExactMatrix a = M({{"1", "2"}, {"3", "4"}});
    CHECK(a.sharp() == M({{"4", "3"}, {"2", "1"}}));
    CHECK(a.transpose_t() == M({{"1", "3"}, {"2", "4"}}));
    CHECK(a.transpose_s() == M({{"4", "2"}, {"3", "1"}}));

    std::mt19937 g(3);
    ExactMatrix b = oracle::random_matrix(g, 4, 4);
    CHECK(b.transpose_t().transpose_s() == b.sharp());
    CHECK(b.transpose_s().transpose_t() == b.sharp());
    CHECK(b.sharp().sharp() == b);
    CHECK_THROWS_AS(ExactMatrix(2, 3, {}).sharp(), NonSquare);

    // S(q) Lambda = Lambda^# S(q) at n = 3
    FieldContext qc = FieldContext::make(1, true);
    ExactMatrix s = M({{"0", "0", "0", "1"}, {"0", "0", "-1", "0"}, {"0", "q^-1", "0", "0"}, {"-q^-3", "0", "0", "0"}}, qc);
    std::vector<Scalar> d;
    for (int k = 0; k < 4; ++k) d.push_back(Scalar::from_rational(oracle::random_rational(g, 9, true), qc));
    ExactMatrix lam = ExactMatrix::diagonal(d);
    CHECK(s * lam == lam.sharp() * s);
}

TEST_CASE("products") {
    ExactMatrix s1 = M({{"1", "1"}, {"0", "1"}});
    ExactMatrix s2 = M({{"1", "0"}, {"-1", "1"}});
    CHECK(s1 * ExactMatrix::identity(2, {}) == s1);
    CHECK(s1 * s2 * s1 == M({{"0", "1"}, {"-1", "0"}}));
    CHECK_THROWS_AS(s1 * ExactMatrix(3, 3, {}), ShapeMismatch);
    CHECK_THROWS_AS(s1 + ExactMatrix(3, 3, {}), ShapeMismatch);
    CHECK_THROWS_AS(s1 * M({{"q", "0"}, {"0", "1"}}), FieldMismatch);

    FieldContext qc = FieldContext::make(1, true);
    ExactMatrix a = M({{"1", "1+q", "1"}, {"0", "1", "1"}, {"0", "0", "1"}}, qc);
    ExactMatrix lam = M({{"1", "0", "0"}, {"0", "q^-1", "0"}, {"0", "0", "1"}}, qc);
    ExactMatrix b = M({{"1", "0", "0"}, {"-1", "1", "0"}, {"q^-1", "-1-q^-1", "1"}}, qc);
    CHECK(a * lam * b == M({{"0", "0", "1"}, {"0", "-1", "1"}, {"q^-1", "-1-q^-1", "1"}}, qc));
    CHECK(scalar_mul(S("2"), s1) == s1 + s1);
}

TEST_CASE("inverse") {
    CHECK(inverse(M({{"1", "2", "1"}, {"0", "1", "1"}, {"0", "0", "1"}})) ==
          M({{"1", "-2", "1"}, {"0", "1", "-1"}, {"0", "0", "1"}}));
    CHECK(inverse(ExactMatrix::identity(4, {})).is_identity());
    FieldContext qc = FieldContext::make(1, true);
    CHECK(inverse(M({{"1", "1+q", "1"}, {"0", "1", "1"}, {"0", "0", "1"}}, qc)) ==
          M({{"1", "-1-q", "q"}, {"0", "1", "-1"}, {"0", "0", "1"}}, qc));
    CHECK_THROWS_AS(inverse(M({{"1", "2"}, {"2", "4"}})), Singular);

    std::mt19937 g(5);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = random_invertible(g, 4), b = random_invertible(g, 4);
        CHECK(inverse(inverse(a)) == a);
        CHECK(inverse(a * b) == inverse(b) * inverse(a));
        CHECK((a * inverse(a)).is_identity());
    }
}

TEST_CASE("determinants, minors, cofactors") {
    FieldContext qc = FieldContext::make(1, true);
    ExactMatrix s = M({{"0", "0", "1"}, {"0", "-1", "0"}, {"q^-1", "0", "0"}}, qc);
    CHECK(determinant(s) == oracle::permutation_det(s));
    CHECK(determinant(s) == S("q^-1"));

    ExactMatrix u = M({{"2", "5", "7"}, {"0", "3", "1"}, {"0", "0", "-4"}});
    CHECK(determinant(u) == S("-24"));
    CHECK(determinant(ExactMatrix(0, 0, {})).is_one());
    CHECK(minor(u, {}, {}).is_one());
    CHECK(minor(u, {0, 1}, {1, 2}) == S("5-21"));
    CHECK_THROWS_AS(minor(u, {0}, {1, 2}), ShapeMismatch);

    // F^s_{0,2} at symbolic q with Lambda' = I
    ExactMatrix fs = M({{"1-q^-1", "1+q", "1"}, {"0", "1-q^-1", "1"}, {"0", "0", "0"}}, qc);
    CHECK(minor(fs, {0, 1}, {1, 2}) == S("q+q^-1"));
    CHECK(minor(fs, {0, 1}, {1, 2}) == oracle::permutation_det(fs.submatrix({0, 1}, {1, 2})));

    std::mt19937 g(9);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = oracle::random_matrix(g, 5, 5);
        CHECK(determinant(a) == oracle::permutation_det(a));
        Scalar lap = Scalar::from_int(0, {});
        for (std::size_t j = 0; j < 5; ++j) lap += a(0, j) * cofactor(a, {0}, {j});
        CHECK(lap == determinant(a));
    }
}

TEST_CASE("rank and nullspace") {
    CHECK(nullspace(ExactMatrix(3, 3, {})).size() == 3);

    ExactMatrix a = M({{"0", "-2", "1"}, {"0", "-1", "1"}, {"0", "0", "0"}});
    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Scalar>{S("1"), S("0"), S("0")});

    std::mt19937 g(13);
    for (int t = 0; t < 20; ++t) {
        std::size_t rows = 2 + g() % 4, cols = 2 + g() % 4;
        ExactMatrix m = oracle::random_matrix(g, rows, cols);
        // force some dependence
        if (rows > 2)
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) + m(1, j);
        std::size_t rk = rank(m);
        CHECK(rk == oracle::rank_oracle(m));
        auto basis = nullspace(m);
        CHECK(rk + basis.size() == cols);
        for (const auto& v : basis) {
            for (const Scalar& x : mat_vec(m, v)) CHECK(x.is_zero());
            std::size_t k = 0;
            while (v[k].is_zero()) ++k;
            CHECK(v[k].is_one());
        }
    }
    ExactMatrix full = random_invertible(g, 3);
    CHECK(nullspace(full).empty());
}

TEST_CASE("generalized characteristic polynomial") {
    auto r = generalized_charpoly(M({{"3"}}), {S("5")});
    CHECK(r.direct == S("8"));
    CHECK(r.agree);

    FieldContext qc = FieldContext::make(1, true);
    auto d2 = generalized_charpoly(M({{"2", "1"}, {"1", "1"}}, qc), {S("-1", qc), S("q", qc)});
    CHECK(d2.agree);
    CHECK(d2.direct == S("q"));

    std::mt19937 g(17);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix c = oracle::random_matrix(g, 4, 4);
        std::vector<Scalar> lam;
        for (int k = 0; k < 4; ++k) lam.push_back(Scalar::from_rational(oracle::random_rational(g), {}));
        auto res = generalized_charpoly(c, lam);
        ExactMatrix full = c + ExactMatrix::diagonal(lam);
        CHECK(res.agree);
        CHECK(res.direct == oracle::permutation_det(full));
        CHECK(res.expansion == oracle::permutation_det(full));
    }
}

TEST_CASE("superdiagonal components") {
    ExactMatrix d = ExactMatrix::diagonal({S("1"), S("2"), S("3")});
    CHECK(superdiagonal_component(d, 0) == d);
    ExactMatrix s1 = M({{"1", "3", "3", "1"}, {"0", "1", "2", "1"}, {"0", "0", "1", "1"}, {"0", "0", "0", "1"}});
    ExactMatrix beta = superdiagonal_component(s1 - ExactMatrix::identity(4, {}), 1);
    CHECK(beta == M({{"0", "3", "0", "0"}, {"0", "0", "2", "0"}, {"0", "0", "0", "1"}, {"0", "0", "0", "0"}}));
    CHECK(superdiagonal_component(s1, -1).is_zero());
    CHECK(subsets(4, 2).size() == 6);
    CHECK(subsets(4, 2).front() == IndexSubset{0, 1});
    CHECK(subsets(4, 2).back() == IndexSubset{2, 3});
}
