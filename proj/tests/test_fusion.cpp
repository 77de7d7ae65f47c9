#include "doctest.h"

#include <random>

#include "fixtures.hpp"

using namespace defcat;
using namespace defcat::fixtures;

TEST_CASE("validate and verify Vec_Z2") {
    FusionCat c = vec_zmod(2, Field::prime(2));
    CHECK(validate_fusion(c).ok);
    CHECK(verify_coherence(c).ok);
}

TEST_CASE("singular F is rejected with location") {
    FusionCat c = vec_zmod(2, Field::rationals());
    c.F(1, 1, 1, 1).at(0, 0) = Scalar::zero(c.field);
    CheckReport r = validate_fusion(c);
    CHECK(!r.ok);
    CHECK(r.failure.find("singular F") != std::string::npos);
    CHECK(r.failure.find("g1,g1,g1,g1") != std::string::npos);
}

TEST_CASE("sign associator on Vec_Z2 over Q is coherent") {
    FusionCat c = vec_z2_sign_q();
    CHECK(validate_fusion(c).ok);
    CHECK(verify_coherence(c).ok);
}

TEST_CASE("corrupted associator fails the pentagon") {
    FusionCat c = vec_zmod(2, Field::rationals());
    c.F(1, 1, 1, 1).at(0, 0) = Scalar::from_int(c.field, 2);
    CHECK(validate_fusion(c).ok);  // still invertible
    CheckReport r = verify_coherence(c);
    CHECK(!r.ok);
    CHECK(r.failure.find("pentagon") != std::string::npos);
}

TEST_CASE("Vec_Z3 over Q and Fibonacci over GF(19) are coherent") {
    FusionCat z3 = vec_zmod(3, Field::rationals());
    CHECK(validate_fusion(z3).ok);
    CHECK(verify_coherence(z3).ok);
    FusionCat fib = fibonacci_gf19();
    CHECK(validate_fusion(fib).ok);
    CHECK(verify_coherence(fib).ok);
}

TEST_CASE("reassociate: src = dst gives the identity") {
    FusionCat fib = fibonacci_gf19();
    std::vector<Decomp> leaves(4, fib.simple_obj(1));
    PTree lc = PTree::left_comb(4);
    DecMorK r = tree_reassoc(fib, leaves, lc, lc);
    for (size_t z = 0; z < r.m.size(); ++z)
        CHECK(r.m[z] == MatrixK::identity(r.src[z], Scalar::zero(fib.field)));
}

TEST_CASE("reassociate on three leaves is the F-matrix") {
    FusionCat fib = fibonacci_gf19();
    std::vector<Decomp> leaves(3, fib.simple_obj(1));
    DecMorK r = tree_reassoc(fib, leaves, PTree::left_comb(3), PTree::right_comb(3));
    CHECK(r.m[1] == fib.F(1, 1, 1, 1));
    CHECK(r.m[0] == fib.F(1, 1, 1, 0));
}

TEST_CASE("path independence of reassociation routes") {
    FusionCat fib = fibonacci_gf19();
    std::vector<Decomp> leaves(4, fib.simple_obj(1));
    PTree lc = PTree::left_comb(4);
    Scalar model = Scalar::zero(fib.field);
    auto blocks = base_assoc(fib);
    // route 1: rotate at root twice
    DecMorK m1 = tree_move(fib, blocks, leaves, lc, {}, model);
    PTree t1 = apply_move(lc, {});
    DecMorK m2 = tree_move(fib, blocks, leaves, t1, {}, model);
    DecMorK routeA = dec_compose(m2, m1);
    // route 2: the three-step pentagon side
    DecMorK s1 = tree_move(fib, blocks, leaves, lc, {0}, model);
    PTree u1 = apply_move(lc, {0});
    DecMorK s2 = tree_move(fib, blocks, leaves, u1, {}, model);
    PTree u2 = apply_move(u1, {});
    DecMorK s3 = tree_move(fib, blocks, leaves, u2, {1}, model);
    PTree u3 = apply_move(u2, {1});
    CHECK(u3 == PTree::right_comb(4));
    DecMorK routeB = dec_compose(s3, dec_compose(s2, s1));
    CHECK(routeA == routeB);
}

TEST_CASE("reassociate inverse composes to the identity") {
    FusionCat fib = fibonacci_gf19();
    for (int n : {3, 4, 5}) {
        std::vector<Decomp> leaves(static_cast<size_t>(n), fib.simple_obj(1));
        PTree s = PTree::left_comb(n), t = PTree::right_comb(n);
        DecMorK fwd = tree_reassoc(fib, leaves, s, t);
        DecMorK bwd = tree_reassoc(fib, leaves, t, s);
        DecMorK prod = dec_compose(bwd, fwd);
        for (size_t z = 0; z < prod.m.size(); ++z)
            CHECK(prod.m[z] == MatrixK::identity(prod.src[z], Scalar::zero(fib.field)));
    }
}

TEST_CASE("deligne product of pointed categories") {
    FusionCat z2 = vec_zmod(2, Field::rationals());
    FusionCat p = deligne_product(z2, z2);
    CHECK(p.count() == 4);
    CHECK(p.unit == 0);
    CHECK(validate_fusion(p).ok);
    CHECK(verify_coherence(p).ok);
    // fusion is componentwise
    CHECK(p.N(1, 1, 0) == 1);
    CHECK(p.N(1, 2, 3) == 1);
    CHECK(p.N(1, 2, 0) == 0);
}

TEST_CASE("deligne product Fibonacci x Vec_Z2 over GF(19) is coherent") {
    FusionCat fib = fibonacci_gf19();
    FusionCat z2 = vec_zmod(2, Field::prime(19));
    FusionCat p = deligne_product(fib, z2);
    CHECK(validate_fusion(p).ok);
    CHECK(verify_coherence(p).ok);
}

TEST_CASE("tensor2 encode/decode round trip") {
    FusionCat fib = fibonacci_gf19();
    std::mt19937_64 rng(23);
    Decomp X = {2, 3}, Y = {1, 2};
    Decomp XY = tensor2(fib, X, Y);
    for (int z = 0; z < 2; ++z)
        for (int idx = 0; idx < XY[static_cast<size_t>(z)]; ++idx) {
            T2Idx t = t2_decode(fib, X, Y, z, idx);
            CHECK(t2_encode(fib, X, Y, z, t) == idx);
        }
    (void)rng;
}

TEST_CASE("series pentagon check sees a first-order violation") {
    // alpha^(1) = delta of nothing... use a non-cocycle: f(1,1,1)=1 only is a
    // cocycle over GF(2); instead take f(1,1,0)=1 which is not.
    FusionCat c = vec_zmod(2, Field::prime(2));
    int order = 1;
    Series model(c.field, order);
    auto blocks = [&](int a, int b, int cc, int d) {
        MatrixS m = promote(c.F(a, b, cc, d), c.field, order);
        if (a == 1 && b == 1 && cc == 0 && d == 0 && m.rows() == 1) m.at(0, 0).coeff(1) = Scalar::one(c.field);
        return m;
    };
    CheckReport rep = check_pentagons<Series>(c, blocks, model);
    CHECK(!rep.ok);

    // the nonzero 3-cocycle f(1,1,1)=1 does pass at order 1
    auto blocks2 = [&](int a, int b, int cc, int d) {
        MatrixS m = promote(c.F(a, b, cc, d), c.field, order);
        if (a == 1 && b == 1 && cc == 1 && d == 1) m.at(0, 0).coeff(1) = Scalar::one(c.field);
        return m;
    };
    CHECK(check_pentagons<Series>(c, blocks2, model).ok);
}
