#include "doctest.h"

#include <random>

#include "defcat/functor.hpp"
#include "fixtures.hpp"

using namespace defcat;
using namespace defcat::fixtures;

namespace {

Algebra dual_numbers(const Field& f) {
    // k[x]/x^2 with basis (1, x)
    Algebra a;
    a.field = f;
    a.dim = 2;
    a.mtab.assign(8, Scalar::zero(f));
    auto set = [&](int i, int j, int k, std::int64_t v) { a.mtab[(static_cast<size_t>(i) * 2 + j) * 2 + k] = Scalar::from_int(f, v); };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    a.unit = {Scalar::one(f), Scalar::zero(f)};
    return a;
}

Algebra matrix_algebra2(const Field& f) {
    // 2x2 matrices, basis e11, e12, e21, e22
    Algebra a;
    a.field = f;
    a.dim = 4;
    a.mtab.assign(64, Scalar::zero(f));
    auto idx = [](int r, int c) { return r * 2 + c; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) a.mtab[(static_cast<size_t>(idx(i, j)) * 4 + idx(k, l)) * 4 + idx(i, l)] = Scalar::one(f);
    a.unit = {Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
    return a;
}

MonFunctor raw_algebra_functor(const Algebra& a, std::shared_ptr<FusionCat>& src, std::shared_ptr<FusionCat>& dst) {
    auto trivial = [&](const std::string& name) {
        FusionCat c;
        c.field = a.field;
        c.names = {name};
        c.unit = 0;
        c.Ntab = {1};
        c.Fmats = {MatrixK::identity(1, Scalar::zero(a.field))};
        c.lambda = {Scalar::one(a.field)};
        c.rho = {Scalar::one(a.field)};
        return c;
    };
    src = std::make_shared<FusionCat>(trivial("*"));
    dst = std::make_shared<FusionCat>(trivial("k"));
    MonFunctor f;
    f.src = src.get();
    f.dst = dst.get();
    f.objmap = {{a.dim}};
    MatrixK mult = MatrixK::zero(a.dim, a.dim * a.dim, Scalar::zero(a.field));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) mult.at(k, i * a.dim + j) = a.m(i, j, k);
    f.Ftilde = {{{mult}}};
    f.F0 = a.unit;
    return f;
}

}  // namespace

TEST_CASE("identity functor passes") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    MonFunctor f = identity_functor(c);
    CHECK(verify_functor(f).ok);
}

TEST_CASE("scaled identity functor: hexagon is c-balanced, squares need F0 = 1/c") {
    FusionCat c = vec_zmod(2, Field::rationals());
    Scalar two = Scalar::from_int(c.field, 2);
    MonFunctor good = scaled_identity_functor(c, two, two.inverse());
    CHECK(verify_functor(good).ok);

    MonFunctor bad = scaled_identity_functor(c, two, Scalar::one(c.field));
    CheckReport r = verify_functor(bad);
    CHECK(!r.ok);
    CHECK(r.failure.find("unit square") != std::string::npos);
}

TEST_CASE("identity functor on Fibonacci passes") {
    FusionCat fib = fibonacci_gf19();
    CHECK(verify_functor(identity_functor(fib)).ok);
}

TEST_CASE("algebra bridge") {
    Field q = Field::rationals();
    SUBCASE("base field k") {
        Algebra a;
        a.field = q;
        a.dim = 1;
        a.mtab = {Scalar::one(q)};
        a.unit = {Scalar::one(q)};
        AlgebraFunctor af = algebra_to_functor(a);
        CHECK(verify_functor(af.functor).ok);
    }
    SUBCASE("dual numbers are lax but not strong") {
        AlgebraFunctor af = algebra_to_functor(dual_numbers(q));
        CHECK(verify_functor(af.functor).ok);
        MonFunctor strong = af.functor;
        strong.strong = true;
        CHECK(!verify_functor(strong).ok);
    }
    SUBCASE("2x2 matrices over GF(3)") {
        AlgebraFunctor af = algebra_to_functor(matrix_algebra2(Field::prime(3)));
        CHECK(verify_functor(af.functor).ok);
    }
    SUBCASE("broken associativity is rejected") {
        // e12 e22 = 2 e12 makes (e12 e22) e22 != e12 (e22 e22)
        Algebra a = matrix_algebra2(q);
        a.mtab[(static_cast<size_t>(1) * 4 + 3) * 4 + 1] = Scalar::from_int(q, 2);
        CheckReport v = validate_algebra(a);
        CHECK(!v.ok);
        CHECK(v.failure.find("associativity") != std::string::npos);
        CHECK_THROWS_AS(algebra_to_functor(a), NotAssociative);
    }
    SUBCASE("broken unit is rejected") {
        Algebra a = dual_numbers(q);
        a.mtab[(0 * 2 + 1) * 2 + 1] = Scalar::zero(q);  // 1 * x = 0
        CHECK(!validate_algebra(a).ok);
        CHECK_THROWS_AS(algebra_to_functor(a), NotUnital);
    }
}

TEST_CASE("verify_functor passes iff the algebra is associative and unital") {
    std::mt19937_64 rng(31);
    Field f = Field::prime(5);
    for (int trial = 0; trial < 60; ++trial) {
        Algebra a = dual_numbers(f);
        if (trial % 3 != 0) {
            int i = static_cast<int>(rng() % 2), j = static_cast<int>(rng() % 2), k = static_cast<int>(rng() % 2);
            a.mtab[(static_cast<size_t>(i) * 2 + j) * 2 + k] += Scalar::from_int(f, 1 + static_cast<std::int64_t>(rng() % 4));
        }
        std::shared_ptr<FusionCat> src, dst;
        MonFunctor fun = raw_algebra_functor(a, src, dst);
        bool axioms = validate_algebra(a).ok;
        bool coherent = verify_functor(fun).ok;
        CHECK(axioms == coherent);
    }
}

TEST_CASE("regular bimodule of a coherent functor passes") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    MonFunctor f = identity_functor(c);
    CHECK(verify_bimodule(regular_bimodule(f)).ok);

    FusionCat fq = vec_z2_sign_q();
    MonFunctor g = identity_functor(fq);
    CHECK(verify_bimodule(regular_bimodule(g)).ok);

    AlgebraFunctor af = algebra_to_functor(dual_numbers(Field::rationals()));
    CHECK(verify_bimodule(regular_bimodule(af.functor)).ok);
}

TEST_CASE("scaled right action breaks the bimodule axioms") {
    AlgebraFunctor af = algebra_to_functor(dual_numbers(Field::rationals()));
    Bimodule m = regular_bimodule(af.functor);
    m.mur[0][0][0] = m.mur[0][0][0].scaled(Scalar::from_int(af.functor.dst->field, 2));
    CheckReport r = verify_bimodule(m);
    CHECK(!r.ok);
    CHECK(r.failure.find("hexagon") != std::string::npos);
}

TEST_CASE("bimodule along a monoidal natural transformation") {
    FusionCat c = vec_zmod(2, Field::rationals());
    MonFunctor f = identity_functor(c);
    Scalar model = Scalar::zero(c.field);
    std::vector<DecMorK> id_phi;
    for (int a = 0; a < c.count(); ++a) id_phi.push_back(dec_identity(f.obj(a), model));
    REQUIRE(nat_transformation_check(id_phi, f, f));
    Bimodule m = bimodule_along_nat(f, f, id_phi);
    CHECK(verify_bimodule(m).ok);

    std::vector<DecMorK> chi;
    for (int a = 0; a < c.count(); ++a) {
        DecMorK p = dec_identity(f.obj(a), model);
        if (a == 1) p.m[1] = p.m[1].scaled(-Scalar::one(c.field));
        chi.push_back(p);
    }
    CHECK(nat_transformation_check(chi, f, f));
    Bimodule m2 = bimodule_along_nat(f, f, chi);
    CHECK(verify_bimodule(m2).ok);

    std::vector<DecMorK> bad;
    for (int a = 0; a < c.count(); ++a) {
        DecMorK p = dec_identity(f.obj(a), model);
        if (a == 1) p.m[1] = p.m[1].scaled(Scalar::from_int(c.field, 2));
        bad.push_back(p);
    }
    CHECK(!nat_transformation_check(bad, f, f));
}

TEST_CASE("rescaled nat transformation passes only at c = 1 with the unit condition") {
    FusionCat c = vec_zmod(2, Field::prime(5));
    MonFunctor f = identity_functor(c);
    Scalar model = Scalar::zero(c.field);
    for (std::int64_t s = 1; s < 5; ++s) {
        std::vector<DecMorK> phi;
        for (int a = 0; a < c.count(); ++a) {
            DecMorK p = dec_identity(f.obj(a), model);
            for (auto& mm : p.m) mm = mm.scaled(Scalar::from_int(c.field, s));
            phi.push_back(p);
        }
        CHECK(nat_transformation_check(phi, f, f) == (s == 1));
    }
}
