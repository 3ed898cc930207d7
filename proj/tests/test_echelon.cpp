#include "arch/echelon.hpp"
#include "arch/errors.hpp"
#include "arch/random_gen.hpp"
#include "arch/relations.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace arch;
using arch::testing::fe;
using arch::testing::mat;

namespace {
constexpr Backend Q = Backend::Q;
constexpr Backend Qt = Backend::Qt;

// Independent QR oracle: Q has orthogonal max-norm-1 columns, R is echelon
// with positive pivots and no zero rows, and the product reassembles A.
void check_qr_invariants(const Matrix& a, const QRPair& qr) {
    CHECK(qr.Q * qr.R == a);
    CHECK(is_row_echelon(qr.R));
    for (size_t i = 0; i < qr.R.rows(); ++i) {
        size_t p = qr.R.cols();
        for (size_t j = 0; j < qr.R.cols(); ++j)
            if (!qr.R.at(i, j).is_zero()) {
                p = j;
                break;
            }
        REQUIRE(p < qr.R.cols()); // no zero rows
        CHECK(qr.R.at(i, p).sign() > 0);
    }
    for (size_t i = 0; i < qr.Q.cols(); ++i) {
        Matrix ci(a.backend(), 1, qr.Q.rows());
        for (size_t k = 0; k < qr.Q.rows(); ++k) ci.at(0, k) = qr.Q.at(k, i);
        CHECK(max_norm(ci) == FieldElement::one(a.backend()));
        for (size_t j = i + 1; j < qr.Q.cols(); ++j) {
            Matrix cj(a.backend(), 1, qr.Q.rows());
            for (size_t k = 0; k < qr.Q.rows(); ++k) cj.at(0, k) = qr.Q.at(k, j);
            CHECK(dot(ci, cj).is_zero());
        }
    }
}

} // namespace

TEST_CASE("QR decomposition") {
    Matrix a = mat(Qt, {{"t", "1"}, {"0", "t^2"}});
    QRPair qr = qr_decompose(a);
    CHECK(qr.Q == Matrix::identity(Qt, 2));
    CHECK(qr.R == a);
    check_qr_invariants(a, qr);

    Matrix a2 = mat(Q, {{"0", "1"}, {"0", "0"}});
    QRPair qr2 = qr_decompose(a2);
    CHECK(qr2.Q == mat(Q, {{"1"}, {"0"}}));
    CHECK(qr2.R == mat(Q, {{"0", "1"}}));

    QRPair qr3 = qr_decompose(mat(Q, {{"3"}, {"4"}}));
    CHECK(qr3.Q == mat(Q, {{"3/4"}, {"1"}}));
    CHECK(qr3.R == mat(Q, {{"4"}}));
    check_qr_invariants(mat(Q, {{"3"}, {"4"}}), qr3);

    CHECK_THROWS_AS(qr_decompose(Matrix(Q, 2, 2)), ZeroMatrix);

    Matrix a4 = mat(Qt, {{"1", "t", "2"}, {"t", "1", "0"}, {"1", "1", "1"}});
    check_qr_invariants(a4, qr_decompose(a4));
}

TEST_CASE("shape and class descriptor") {
    Shape s = shape_of(Matrix::identity(Q, 2));
    CHECK(s.positions == std::set<std::pair<size_t, size_t>>{{0, 0}, {0, 1}, {1, 1}});
    Shape s2 = shape_of(mat(Q, {{"0", "1"}, {"0", "0"}}));
    CHECK(s2.positions == std::set<std::pair<size_t, size_t>>{{0, 1}});
    CHECK(shape_of(Matrix(Q, 2, 2)).empty());
    CHECK_THROWS_AS(shape_of(mat(Q, {{"0", "1"}, {"1", "0"}})), NotEchelon);
    CHECK(s2.subset_of(s));
    CHECK_FALSE(s.subset_of(s2));

    ClassDescriptor d = class_descriptor(mat(Qt, {{"t", "1"}, {"0", "t^2"}}));
    REQUIRE(d.pivot_valuations.size() == 2);
    CHECK(d.pivot_valuations[0] == Valuation(1));
    CHECK(d.pivot_valuations[1] == Valuation(2));
    CHECK(class_descriptor(Matrix(Q, 3, 3)) == ClassDescriptor{});

    // invariance oracle: left multiplication by a bibounded matrix
    RandomGen rng(42);
    for (int k = 0; k < 10; ++k) {
        Matrix m = rng.nonzero_matrix(Qt, 3, 2);
        CHECK(class_descriptor(rng.bibounded_square(Qt, 3) * m) == class_descriptor(m));
    }
}

TEST_CASE("bibounded gaussian elimination") {
    GaussResult g = bibounded_gauss(mat(Qt, {{"t", "0"}, {"1", "0"}}));
    CHECK(g.E == mat(Qt, {{"1", "0"}, {"0", "0"}}));
    for (const auto& op : g.ops) CHECK(op.is_bibounded());

    Matrix a = mat(Qt, {{"t", "1", "2"}, {"1", "t", "0"}, {"3", "1", "1"}});
    GaussResult g2 = bibounded_gauss(a);
    CHECK(is_row_echelon(g2.E));
    Matrix prod = Matrix::identity(Qt, 3);
    for (const auto& op : g2.ops) prod = op.to_matrix(Qt, 3) * prod;
    CHECK(prod * a == g2.E);
    for (const auto& op : g2.ops) CHECK(op.is_bibounded());
}

TEST_CASE("elementary factorization of bibounded matrices") {
    auto f = elementary_factorization(mat(Q, {{"0", "1"}, {"1", "0"}}));
    REQUIRE(f.size() == 1);
    CHECK(f[0].kind == ElementaryOp::Kind::Swap);
    CHECK(elementary_factorization(Matrix::identity(Q, 2)).empty());
    CHECK_THROWS_AS(elementary_factorization(mat(Qt, {{"1", "0"}, {"0", "t"}})), NotBibounded);
    CHECK_THROWS_AS(elementary_factorization(mat(Q, {{"1", "1"}, {"1", "1"}})), NotBibounded);

    // replay oracle: factors multiply back exactly and are all bibounded
    RandomGen rng(7);
    for (int k = 0; k < 10; ++k) {
        Matrix m = rng.bibounded_square(Qt, 3);
        auto fs = elementary_factorization(m);
        CHECK(elementary_product(fs, Qt, 3) == m);
        for (const auto& op : fs) CHECK(op.is_bibounded());
    }
}

TEST_CASE("succeq via gaussian elimination") {
    Matrix b = mat(Qt, {{"1", "t"}, {"0", "1"}});
    CHECK(succeq_via_gauss(b, b));
    CHECK(succeq_via_gauss(b.scaled(fe("t", Qt)), b));
    CHECK_FALSE(succeq_via_gauss(b, b.scaled(fe("t", Qt))));
    Matrix a = mat(Qt, {{"0", "1"}, {"0", "0"}});
    CHECK_FALSE(succeq_via_gauss(a.transpose(), a));
    CHECK_THROWS_AS(succeq_via_gauss(b, mat(Qt, {{"0", "1"}, {"1", "0"}})), NotEchelon);
}

TEST_CASE("archimedean canonical form") {
    CHECK(archimedean_canonical_form(mat(Qt, {{"t", "t^3"}, {"0", "t^2"}})) ==
          mat(Qt, {{"t", "0"}, {"0", "t^2"}}));
    CHECK(archimedean_canonical_form(mat(Qt, {{"2*t", "2"}, {"0", "3*t^2"}})) ==
          mat(Qt, {{"t", "1"}, {"0", "t^2"}}));
    CHECK(archimedean_canonical_form(Matrix::identity(Qt, 3)) == Matrix::identity(Qt, 3));
    CHECK_THROWS_AS(archimedean_canonical_form(Matrix(Qt, 2, 2)), ZeroMatrix);
    CHECK_THROWS_AS(archimedean_canonical_form(Matrix::identity(Q, 2)), BackendMismatch);

    // oracles: class preserved, syntactic normal-form conditions, idempotence
    RandomGen rng(11);
    for (int k = 0; k < 10; ++k) {
        Matrix m = rng.nonzero_matrix(Qt, 3, 3);
        Matrix c = archimedean_canonical_form(m);
        CHECK(sim(c, m).holds);
        CHECK(archimedean_canonical_form(c) == c);
        CHECK(is_row_echelon(c));
        for (size_t i = 0; i < c.rows(); ++i) {
            size_t p = 0;
            while (c.at(i, p).is_zero()) ++p;
            auto [unit, mi] = c.at(i, p).unit_decompose();
            CHECK(unit == FieldElement::one(Qt)); // pivot is exactly t^m
            for (size_t jj = 0; jj < i; ++jj)
                CHECK(c.at(jj, p) == c.at(jj, p).truncate_below(mi));
        }
    }
}
