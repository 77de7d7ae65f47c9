#include "doctest.h"

#include <random>

#include "defcat/matrix.hpp"

using namespace defcat;

namespace {

MatrixK make(const Field& f, int rows, int cols, std::initializer_list<std::int64_t> vals) {
    MatrixK m = MatrixK::zero(rows, cols, Scalar::zero(f));
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, *it++);
    return m;
}

}  // namespace

TEST_CASE("rank, kernel, image") {
    Field q = Field::rationals();
    auto r = rank_kernel_image(make(q, 2, 2, {1, 2, 2, 4}), q);
    CHECK(r.rank == 1);
    REQUIRE(r.kernel.size() == 1);
    CHECK(r.kernel[0][0] == Scalar::from_int(q, -2));
    CHECK(r.kernel[0][1] == Scalar::one(q));

    auto id3 = rank_kernel_image(MatrixK::identity(3, Scalar::zero(q)), q);
    CHECK(id3.rank == 3);
    CHECK(id3.kernel.empty());

    auto z = rank_kernel_image(MatrixK::zero(2, 3, Scalar::zero(q)), q);
    CHECK(z.rank == 0);
    CHECK(z.kernel.size() == 3);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(5);
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
        for (int trial = 0; trial < 30; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
            MatrixK m = MatrixK::zero(rows, cols, Scalar::zero(f));
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 7) - 3);
            auto r = rank_kernel_image(m, f);
            CHECK(r.rank + static_cast<int>(r.kernel.size()) == cols);
            CHECK(static_cast<int>(r.image.size()) == r.rank);
        }
    }
}

TEST_CASE("solve_linear") {
    Field q = Field::rationals();
    auto sol = solve_linear(MatrixK::identity(3, Scalar::zero(q)),
                            {Scalar::from_int(q, 4), Scalar::from_int(q, 5), Scalar::from_int(q, 6)}, q);
    REQUIRE(sol.x.has_value());
    CHECK((*sol.x)[2] == Scalar::from_int(q, 6));

    // underdetermined: x0 + x1 = 2, deterministic pivot puts weight on x0
    auto u = solve_linear(make(q, 1, 2, {1, 1}), {Scalar::from_int(q, 2)}, q);
    REQUIRE(u.x.has_value());
    CHECK((*u.x)[0] == Scalar::from_int(q, 2));
    CHECK((*u.x)[1].is_zero());

    // inconsistent with certificate
    auto n = solve_linear(make(q, 1, 1, {0}), {Scalar::one(q)}, q);
    CHECK(!n.x.has_value());
    REQUIRE(n.certificate.size() == 1);
    CHECK(!n.certificate[0].is_zero());
}

TEST_CASE("solve certificate is a genuine left-kernel witness") {
    std::mt19937_64 rng(17);
    Field f = Field::prime(7);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
        MatrixK m = MatrixK::zero(rows, cols, Scalar::zero(f));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 7));
        std::vector<Scalar> b;
        for (int i = 0; i < rows; ++i) b.push_back(Scalar::from_int(f, static_cast<std::int64_t>(rng() % 7)));
        auto sol = solve_linear(m, b, f);
        if (sol.x) continue;
        // y m = 0 and y b != 0
        Scalar yb = Scalar::zero(f);
        for (int i = 0; i < rows; ++i) yb += sol.certificate[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
        CHECK(!yb.is_zero());
        for (int j = 0; j < cols; ++j) {
            Scalar ym = Scalar::zero(f);
            for (int i = 0; i < rows; ++i) ym += sol.certificate[static_cast<size_t>(i)] * m.at(i, j);
            CHECK(ym.is_zero());
        }
    }
}

TEST_CASE("invert") {
    Field f = Field::prime(19);
    MatrixK fib = make(f, 2, 2, {4, 2, 2, 15});
    MatrixK inv = invert(fib, f);
    CHECK(fib * inv == MatrixK::identity(2, Scalar::zero(f)));
    CHECK_THROWS_AS(invert(make(f, 2, 2, {1, 2, 2, 4}), f), NotInvertible);
}

TEST_CASE("kron indexing") {
    Field q = Field::rationals();
    MatrixK a = make(q, 1, 2, {1, 2});
    MatrixK b = make(q, 2, 1, {3, 4});
    MatrixK k = a.kron(b);
    CHECK(k.rows() == 2);
    CHECK(k.cols() == 2);
    CHECK(k.at(0, 0) == Scalar::from_int(q, 3));
    CHECK(k.at(1, 1) == Scalar::from_int(q, 8));
}
