#include "doctest.h"

#include <random>

#include "defcat/scalar.hpp"

using namespace defcat;

TEST_CASE("rational arithmetic") {
    Field q = Field::rationals();
    Scalar half = Scalar::parse(q, "1/2");
    Scalar third = Scalar::parse(q, "1/3");
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(half.inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    Scalar a = Scalar::residue(3, 5), b = Scalar::residue(4, 5);
    CHECK((a * b).str() == "2");
    CHECK((a + b).str() == "2");
    CHECK(a.inverse().str() == "2");
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(a + Scalar::residue(1, 7), FieldMismatch);
    CHECK_THROWS_AS(a + Scalar::from_int(Field::rationals(), 1), FieldMismatch);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    auto rand_scalar = [&](const Field& f) {
        if (f.kind() == Field::Kind::prime) return Scalar::residue(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.p())), f.p());
        std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
        std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 9);
        return Scalar::rational(mpq_class(num, den));
    };
    for (const Field& f : {Field::rationals(), Field::prime(5), Field::prime(19)}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = rand_scalar(f), b = rand_scalar(f), c = rand_scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
        }
    }
}

TEST_CASE("series ring") {
    Field q = Field::rationals();
    Series one = Series::constant(Scalar::one(q), 1);
    Series eps = Series::eps(q, 1);
    CHECK((one + eps) * (one - eps) == one);  // eps^2 == 0 at N=1
    Series one2 = Series::constant(Scalar::one(q), 2);
    Series eps2 = Series::eps(q, 2);
    Series prod = (one2 + eps2) * (one2 - eps2);
    CHECK(prod.coeff(0).is_one());
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == -Scalar::one(q));
    CHECK((Series::eps(q, 1) * Series::eps(q, 1)).is_zero());
    CHECK_THROWS_AS(one + one2, OrderMismatch);
}

TEST_CASE("series inversion") {
    Field q = Field::rationals();
    Series a = Series::constant(Scalar::one(q), 2) + Series::eps(q, 2);
    Series inv = a.inverse();  // 1 - eps + eps^2
    CHECK(inv.coeff(0).is_one());
    CHECK(inv.coeff(1) == -Scalar::one(q));
    CHECK(inv.coeff(2).is_one());
    CHECK(a * inv == Series::constant(Scalar::one(q), 2));

    Series two = Series::constant(Scalar::from_int(q, 2), 0);
    CHECK(two.inverse().coeff(0).str() == "1/2");
    CHECK_THROWS_AS(Series::eps(q, 1).inverse(), NotInvertible);
}

TEST_CASE("series inverse property at all orders up to 8") {
    std::mt19937_64 rng(11);
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
        for (int order = 0; order <= 8; ++order) {
            for (int trial = 0; trial < 20; ++trial) {
                Series a(f, order);
                for (int i = 0; i <= order; ++i) {
                    std::int64_t v = static_cast<std::int64_t>(rng() % 13) - 6;
                    a.coeff(i) = Scalar::from_int(f, i == 0 ? (v == 0 ? 1 : v) : v);
                }
                CHECK(a.inverse() * a == Series::constant(Scalar::one(f), order));
            }
        }
    }
}

TEST_CASE("truncation consistency") {
    std::mt19937_64 rng(13);
    Field f = Field::prime(11);
    for (int trial = 0; trial < 50; ++trial) {
        Series a(f, 6), b(f, 6);
        for (int i = 0; i <= 6; ++i) {
            a.coeff(i) = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 11));
            b.coeff(i) = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 11));
        }
        for (int m = 0; m <= 6; ++m) {
            CHECK((a * b).truncate(m) == a.truncate(m) * b.truncate(m));
            CHECK((a + b).truncate(m) == a.truncate(m) + b.truncate(m));
        }
    }
}
