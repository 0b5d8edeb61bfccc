#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dickson/linalg.hpp"

using namespace dickson;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = FieldValue::integer(f, static_cast<std::int64_t>(rng() % 7) - 3);
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    FieldSpec Q = FieldSpec::rationals();
    Matrix id = Matrix::identity(Q, 3);
    RrefResult r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.mat == id);

    Matrix zero(Q, 2, 4);
    CHECK(rref(zero).rank == 0);

    Matrix dep = Matrix::from_rows(
        Q, {{FieldValue::integer(Q, 1), FieldValue::integer(Q, 2)},
            {FieldValue::integer(Q, 2), FieldValue::integer(Q, 4)}});
    RrefResult rd = rref(dep);
    CHECK(rd.rank == 1);
    CHECK(rd.mat.at(0, 0).is_one());
    CHECK(rd.mat.at(0, 1) == FieldValue::integer(Q, 2));
    CHECK(rd.mat.rows() == 1);  // zero rows dropped
    CHECK(rd.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    std::mt19937_64 rng(7);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)})
        for (int trial = 0; trial < 25; ++trial) {
            Matrix m = random_matrix(f, 3 + rng() % 3, 3 + rng() % 3, rng);
            Matrix r = rref(m).mat;
            CHECK(rref(r).mat == r);
            CHECK(rank(m) == rank(m.transpose()));
        }
}

TEST_CASE("nullspace") {
    FieldSpec Q = FieldSpec::rationals();
    CHECK(nullspace(Matrix::identity(Q, 4)).dim() == 0);
    CHECK(nullspace(Matrix(Q, 1, 5)).dim() == 5);

    FieldSpec F2 = FieldSpec::prime_field(2);
    Matrix m = Matrix::from_rows(F2, {{FieldValue::integer(F2, 1), FieldValue::integer(F2, 1)}});
    Subspace s = nullspace(m);
    REQUIRE(s.dim() == 1);
    CHECK(s.basis.at(0, 0).is_one());
    CHECK(s.basis.at(0, 1).is_one());
}

TEST_CASE("nullspace vectors really lie in the kernel") {
    std::mt19937_64 rng(11);
    FieldSpec Q = FieldSpec::rationals();
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(Q, 4, 6, rng);
        Subspace s = nullspace(m);
        CHECK(s.dim() == 6 - rank(m));
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Vec img = m.apply(s.basis.row(r));
            for (const FieldValue& x : img) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("subspace membership") {
    FieldSpec Q = FieldSpec::rationals();
    Subspace s = row_space(Matrix::from_rows(
        Q, {{FieldValue::integer(Q, 1), FieldValue::integer(Q, 2)}}));
    CHECK(s.contains({FieldValue::integer(Q, 2), FieldValue::integer(Q, 4)}));
    CHECK(s.contains({FieldValue::integer(Q, 0), FieldValue::integer(Q, 0)}));
    CHECK_FALSE(s.contains({FieldValue::integer(Q, 0), FieldValue::integer(Q, 1)}));
    CHECK_THROWS_AS(s.contains({FieldValue::integer(Q, 1)}), DimensionMismatch);
}

TEST_CASE("solve") {
    FieldSpec Q = FieldSpec::rationals();
    Matrix m = Matrix::from_rows(Q, {{FieldValue::integer(Q, 1), FieldValue::integer(Q, 1)},
                                     {FieldValue::integer(Q, 1), FieldValue::integer(Q, -1)}});
    auto x = solve(m, {FieldValue::integer(Q, 3), FieldValue::integer(Q, 1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == FieldValue::integer(Q, 2));
    CHECK((*x)[1] == FieldValue::integer(Q, 1));

    Matrix sing = Matrix::from_rows(Q, {{FieldValue::integer(Q, 1), FieldValue::integer(Q, 1)},
                                        {FieldValue::integer(Q, 2), FieldValue::integer(Q, 2)}});
    CHECK_FALSE(solve(sing, {FieldValue::integer(Q, 0), FieldValue::integer(Q, 1)}).has_value());
}

TEST_CASE("intersection and annihilator") {
    FieldSpec Q = FieldSpec::rationals();
    auto fv = [&](std::int64_t n) { return FieldValue::integer(Q, n); };
    Subspace xy = row_space(Matrix::from_rows(Q, {{fv(1), fv(0), fv(0)}, {fv(0), fv(1), fv(0)}}));
    Subspace yz = row_space(Matrix::from_rows(Q, {{fv(0), fv(1), fv(0)}, {fv(0), fv(0), fv(1)}}));
    Subspace both = intersect(xy, yz);
    REQUIRE(both.dim() == 1);
    CHECK(both.contains({fv(0), fv(1), fv(0)}));

    Matrix ann = annihilator(xy);
    for (std::size_t i = 0; i < ann.rows(); ++i)
        for (std::size_t r = 0; r < xy.dim(); ++r) {
            Vec row = xy.basis.row(r);
            FieldValue dot = fv(0);
            for (std::size_t j = 0; j < 3; ++j) dot = dot + ann.at(i, j) * row[j];
            CHECK(dot.is_zero());
        }
}

TEST_CASE("span builder reaches a fixpoint") {
    FieldSpec Q = FieldSpec::rationals();
    auto fv = [&](std::int64_t n) { return FieldValue::integer(Q, n); };
    SpanBuilder b(Q, 3);
    CHECK(b.add({fv(1), fv(1), fv(0)}));
    CHECK_FALSE(b.add({fv(2), fv(2), fv(0)}));  // dependent
    CHECK(b.add({fv(0), fv(0), fv(5)}));
    CHECK(b.subspace().dim() == 2);
    CHECK(b.subspace().contains({fv(3), fv(3), fv(-1)}));
}
