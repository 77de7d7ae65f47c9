#include "doctest.h"

#include <random>

#include "defcat/deform.hpp"
#include "fixtures.hpp"

using namespace defcat;
using namespace defcat::fixtures;

namespace {

Cochain random_kernel_cochain(const CategoryComplex& cc, std::mt19937_64& rng) {
    // random element of ker(delta_3): a valid first-order coefficient
    const Field& f = cc.F->dst->field;
    auto ker = rank_kernel_image(cc.tower.complex.diff(3), f).kernel;
    std::vector<Scalar> v(static_cast<size_t>(cc.tower.complex.dim(3)), Scalar::zero(f));
    for (const auto& kv : ker) {
        Scalar coef = Scalar::from_int(f, static_cast<std::int64_t>(rng() % 5));
        for (size_t i = 0; i < v.size(); ++i) v[i] += coef * kv[i];
    }
    return unvec(cc.tower.spaces[3], v);
}

}  // namespace

TEST_CASE("trivial deformation passes the coherence oracle") {
    FusionCat c = fibonacci_gf19();
    CategoryComplex cc = build_category_tower(c, 4);
    DeformationState s;
    s.kind = DeformKind::category;
    s.cat = &c;
    s.order = 2;
    s.alphas = {zero_cochain(cc.tower.spaces[3]), zero_cochain(cc.tower.spaces[3])};
    CHECK(check_deformation(s).ok);
}

TEST_CASE("non-cocycle first-order coefficient fails at order 1") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    CategoryComplex cc = build_category_tower(c, 4);
    Cochain bad = zero_cochain(cc.tower.spaces[3]);
    bad.blocks[6][0].at(0, 0) = Scalar::one(c.field);  // f(g,g,1) = 1, not a cocycle
    CHECK(!cochain_is_zero(apply_delta(cc.tower, bad)));
    DeformationState s;
    s.kind = DeformKind::category;
    s.cat = &c;
    s.order = 1;
    s.alphas = {bad};
    DeformReport r = check_deformation(s);
    CHECK(!r.ok);
    CHECK(r.failed_order == 1);

    Cochain good = zero_cochain(cc.tower.spaces[3]);
    good.blocks[7][1].at(0, 0) = Scalar::one(c.field);  // the 3-cocycle
    s.alphas = {good};
    CHECK(check_deformation(s).ok);
}

TEST_CASE("dual route: series pentagon agrees with the defect cochains") {
    std::mt19937_64 rng(61);
    for (int which = 0; which < 2; ++which) {
        FusionCat c = which == 0 ? vec_zmod(2, Field::prime(2)) : vec_zmod(3, Field::prime(3));
        CategoryComplex cc = build_category_tower(c, 4);
        for (int trial = 0; trial < 8; ++trial) {
            DeformationState s;
            s.kind = DeformKind::category;
            s.cat = &c;
            s.order = 3;
            s.alphas = {random_kernel_cochain(cc, rng), random_kernel_cochain(cc, rng),
                        random_kernel_cochain(cc, rng)};
            bool series_ok = check_deformation(s).ok;
            bool defects_ok = true;
            for (int N = 1; N <= 3; ++N)
                defects_ok = defects_ok &&
                             cochain_is_zero(pentagon_defect(c, s.alphas, cc.tower.spaces[3], cc.tower.spaces[4], N));
            CHECK(series_ok == defects_ok);
        }
    }
}

TEST_CASE("extension of the trivial state appends zero") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    CategoryComplex cc = build_category_tower(c, 4);
    DeformationState s;
    s.kind = DeformKind::category;
    s.cat = &c;
    s.order = 0;
    ExtendResult r = extend_order(s, cc);
    CHECK(!r.obstructed);
    CHECK(r.next.order == 1);
    CHECK(cochain_is_zero(r.next.alphas[0]));
}

TEST_CASE("Vec_Z3 over Q: every valid first-order state extends") {
    FusionCat c = vec_zmod(3, Field::rationals());
    CategoryComplex cc = build_category_tower(c, 4);
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 5; ++trial) {
        DeformationState s;
        s.kind = DeformKind::category;
        s.cat = &c;
        s.order = 1;
        s.alphas = {random_kernel_cochain(cc, rng)};
        REQUIRE(check_deformation(s).ok);
        ExtendResult r = extend_order(s, cc);
        CHECK(!r.obstructed);
        CHECK(check_deformation(r.next).ok);
    }
}

TEST_CASE("Vec_Z2 over GF(2): the generator extends with a verified order-2 state") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    CategoryComplex cc = build_category_tower(c, 4);
    DeformationState s;
    s.kind = DeformKind::category;
    s.cat = &c;
    s.order = 1;
    Cochain gen = zero_cochain(cc.tower.spaces[3]);
    gen.blocks[7][1].at(0, 0) = Scalar::one(c.field);
    s.alphas = {gen};
    ExtendResult r = extend_order(s, cc);
    if (!r.obstructed) {
        CHECK(check_deformation(r.next).ok);
        ExtendResult r2 = extend_order(r.next, cc);
        if (!r2.obstructed) CHECK(check_deformation(r2.next).ok);
    } else {
        CHECK(!r.h4_class.empty());
        bool nonzero = false;
        for (const auto& x : r.h4_class) nonzero = nonzero || !x.is_zero();
        CHECK(nonzero);
    }
}

TEST_CASE("first-order classification dimensions") {
    CHECK(classify_category(vec_zmod(3, Field::rationals())).dimension == 0);
    CHECK(classify_category(vec_zmod(2, Field::rationals())).dimension == 0);
    CHECK(classify_category(vec_zmod(2, Field::prime(2))).dimension == 1);

    FusionCat c2 = vec_zmod(2, Field::prime(2));
    MonFunctor idf = identity_functor(c2);
    CHECK(classify_functor_purely(idf).dimension == 1);  // H^2(Z/2; GF(2))

    FusionCat c2q = vec_zmod(2, Field::rationals());
    MonFunctor idq = identity_functor(c2q);
    CHECK(classify_functor_purely(idq).dimension == 0);
}

TEST_CASE("fibred and total classification run on the identity functor") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    MonFunctor idf = identity_functor(c);
    Classification fib = classify_fibred(idf);
    CHECK(fib.degree == 3);
    Classification tot = classify_total(idf);
    CHECK(tot.degree == 3);
    // For F = Id the map ceil(F(-)) is an isomorphism of complexes, so the
    // fibred cone is exact.
    CHECK(fib.dimension == 0);
}

TEST_CASE("equivalence of first-order deformations") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    CategoryComplex cc = build_category_tower(c, 4);
    std::mt19937_64 rng(71);
    DeformationState s1;
    s1.kind = DeformKind::category;
    s1.cat = &c;
    s1.order = 1;
    s1.alphas = {random_kernel_cochain(cc, rng)};

    SUBCASE("a state is equivalent to itself with witness zero") {
        EquivalenceResult r = equivalence_check(s1, s1, cc);
        CHECK(r.equivalent);
        for (const auto& x : r.witness) CHECK(x.is_zero());
    }

    SUBCASE("shifting by a coboundary is equivalent and the witness verifies") {
        Cochain phi = zero_cochain(cc.tower.spaces[2]);
        phi.blocks[3][0].at(0, 0) = Scalar::one(c.field);
        phi.blocks[1][1].at(0, 0) = Scalar::one(c.field);
        Cochain shifted = cochain_add(s1.alphas[0], apply_delta(cc.tower, phi));
        DeformationState s2 = s1;
        s2.alphas = {shifted};
        REQUIRE(check_deformation(s2).ok);
        EquivalenceResult r = equivalence_check(s2, s1, cc);
        REQUIRE(r.equivalent);
        // dual route: 1 + phi' eps is a semigroupal functor between the
        // deformed categories (source s2, target s1)
        Cochain w = unvec(cc.tower.spaces[2], r.witness);
        MonFunctor idf = identity_functor(c);
        Bimodule reg = regular_bimodule(idf);
        CochainSpace sp2 = make_space(idf, reg, 2);
        Series model(c.field, 1);
        PairBlocks<Series> ft = [&](int a, int b, int x) {
            MatrixS m = promote(idf.Ftilde[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(x)],
                                c.field, 1);
            std::vector<int> tup{a, b};
            const MatrixK& blk = w.blocks[static_cast<size_t>(sp2.tuple_index(tup))][static_cast<size_t>(x)];
            for (int r2 = 0; r2 < m.rows(); ++r2)
                for (int c2 = 0; c2 < m.cols(); ++c2) m.at(r2, c2).coeff(1) += blk.at(r2, c2);
            return m;
        };
        auto src_assoc = deformed_assoc(c, s2.alphas, cc.tower.spaces[3], 1);
        auto dst_assoc = deformed_assoc(c, s1.alphas, cc.tower.spaces[3], 1);
        CHECK(check_functor_hexagons<Series>(idf, src_assoc, dst_assoc, ft, model).ok);
    }

    SUBCASE("the generator is not equivalent to the trivial deformation") {
        DeformationState triv = s1;
        triv.alphas = {zero_cochain(cc.tower.spaces[3])};
        DeformationState gen = s1;
        Cochain g = zero_cochain(cc.tower.spaces[3]);
        g.blocks[7][1].at(0, 0) = Scalar::one(c.field);
        gen.alphas = {g};
        EquivalenceResult r = equivalence_check(gen, triv, cc);
        CHECK(!r.equivalent);
        bool nonzero = false;
        for (const auto& x : r.certificate) nonzero = nonzero || !x.is_zero();
        CHECK(nonzero);
    }
}

TEST_CASE("unit transport") {
    SUBCASE("trivial deformation with zero gauge returns the base units") {
        FusionCat c = fibonacci_gf19();
        // uniform unit rescaling keeps the triangle intact
        c.lambda.assign(2, Scalar::residue(3, 19));
        c.rho.assign(2, Scalar::residue(3, 19));
        REQUIRE(verify_coherence(c).ok);
        CategoryComplex cc = build_category_tower(c, 4);
        DeformationState s;
        s.kind = DeformKind::category;
        s.cat = &c;
        s.order = 1;
        s.alphas = {zero_cochain(cc.tower.spaces[3])};
        UnitTransport u = unit_transport(s, cc);
        CHECK(u.report.ok);
        for (int a = 0; a < c.count(); ++a) {
            CHECK(u.lambda[static_cast<size_t>(a)].coeff(0) == c.lambda[static_cast<size_t>(a)]);
            CHECK(u.rho[static_cast<size_t>(a)].coeff(0) == c.rho[static_cast<size_t>(a)]);
            CHECK(u.lambda[static_cast<size_t>(a)].coeff(1).is_zero());
        }
    }

    SUBCASE("nonzero gauge still satisfies triangle and bigon") {
        FusionCat c = vec_zmod(2, Field::prime(2));
        CategoryComplex cc = build_category_tower(c, 4);
        DeformationState s;
        s.kind = DeformKind::category;
        s.cat = &c;
        s.order = 1;
        Cochain gen = zero_cochain(cc.tower.spaces[3]);
        gen.blocks[7][1].at(0, 0) = Scalar::one(c.field);
        s.alphas = {gen};
        s.nus = {Scalar::one(c.field)};  // nu^(1) = 1
        UnitTransport u = unit_transport(s, cc);
        CHECK(u.report.ok);
        CHECK(u.rho[0] == u.lambda[0]);
        CHECK(u.lambda[0].coeff(1) == Scalar::one(c.field));
    }
}

TEST_CASE("triangle fails for inconsistent hand-made units") {
    FusionCat c = vec_zmod(2, Field::prime(5));
    std::vector<Series> lam, rho;
    Series one = Series::constant(Scalar::one(c.field), 1);
    Series two = Series::constant(Scalar::from_int(c.field, 2), 1);
    lam = {one, one};
    rho = {one, two};  // breaks rho_a = F^{a1b} lambda_b with F = 1
    Series model(c.field, 1);
    CHECK(!check_triangles<Series>(c, base_assoc_series(c, 1), lam, rho, model).ok);
}

TEST_CASE("natural transformation deformations") {
    SUBCASE("identity on Vec_Z2: H^1 dimension matches group cohomology") {
        FusionCat c2 = vec_zmod(2, Field::prime(2));
        MonFunctor f = identity_functor(c2);
        std::vector<DecMorK> phi;
        for (int a = 0; a < c2.count(); ++a) phi.push_back(dec_identity(f.obj(a), Scalar::zero(c2.field)));
        NatTransfClassification r = nat_transf_first_order(f, f, phi);
        CHECK(r.dim_h1 == 1);

        FusionCat cq = vec_zmod(2, Field::rationals());
        MonFunctor fq = identity_functor(cq);
        std::vector<DecMorK> phiq;
        for (int a = 0; a < cq.count(); ++a) phiq.push_back(dec_identity(fq.obj(a), Scalar::zero(cq.field)));
        NatTransfClassification rq = nat_transf_first_order(fq, fq, phiq);
        CHECK(rq.dim_h1 == 0);
    }

    SUBCASE("dual numbers: H^1 = derivations mod inner, dimension 1") {
        Field q = Field::rationals();
        Algebra a;
        a.field = q;
        a.dim = 2;
        a.mtab.assign(8, Scalar::zero(q));
        a.mtab[0] = Scalar::one(q);
        a.mtab[(0 * 2 + 1) * 2 + 1] = Scalar::one(q);
        a.mtab[(1 * 2 + 0) * 2 + 1] = Scalar::one(q);
        a.unit = {Scalar::one(q), Scalar::zero(q)};
        AlgebraFunctor af = algebra_to_functor(a);
        std::vector<DecMorK> phi = {dec_identity(af.functor.obj(0), Scalar::zero(q))};
        NatTransfClassification r = nat_transf_first_order(af.functor, af.functor, phi);
        CHECK(r.dim_h1 == 1);
    }

    SUBCASE("non-monoidal transformation is rejected") {
        FusionCat c2 = vec_zmod(2, Field::prime(5));
        MonFunctor f = identity_functor(c2);
        std::vector<DecMorK> bad;
        for (int a = 0; a < c2.count(); ++a) {
            DecMorK p = dec_identity(f.obj(a), Scalar::zero(c2.field));
            if (a == 1) p.m[1] = p.m[1].scaled(Scalar::from_int(c2.field, 3));
            bad.push_back(p);
        }
        CHECK_THROWS_AS(nat_transf_first_order(f, f, bad), NotMonoidalTransformation);
    }
}
