#include "defcat/functor.hpp"

namespace defcat {

Decomp app_obj(const FusionCat& dst, const ObjMap& om, const Decomp& Y) {
    Decomp r(static_cast<size_t>(dst.count()), 0);
    for (int x = 0; x < dst.count(); ++x) {
        int s = 0;
        for (size_t b = 0; b < Y.size(); ++b) s += Y[b] * om[b][static_cast<size_t>(x)];
        r[static_cast<size_t>(x)] = s;
    }
    return r;
}

AppIdx app_decode(const ObjMap& om, const Decomp& Y, int x, int idx) {
    for (int b = 0; b < static_cast<int>(Y.size()); ++b) {
        int span = Y[static_cast<size_t>(b)] * om[static_cast<size_t>(b)][static_cast<size_t>(x)];
        if (idx < span) {
            int w = om[static_cast<size_t>(b)][static_cast<size_t>(x)];
            return {b, idx / w, idx % w};
        }
        idx -= span;
    }
    throw ShapeError("functor-image index out of range");
}

int app_encode(const ObjMap& om, const Decomp& Y, int x, const AppIdx& a) {
    int idx = 0;
    for (int b = 0; b < a.b; ++b) idx += Y[static_cast<size_t>(b)] * om[static_cast<size_t>(b)][static_cast<size_t>(x)];
    return idx + a.t * om[static_cast<size_t>(a.b)][static_cast<size_t>(x)] + a.i;
}

int pair_row_encode(const FusionCat& srcCat, const ObjMap& w, int a, int b, int x, int e, int mu, int i) {
    int pos = 0;
    for (int e2 = 0; e2 < e; ++e2) pos += srcCat.N(a, b, e2) * w[static_cast<size_t>(e2)][static_cast<size_t>(x)];
    return pos + mu * w[static_cast<size_t>(e)][static_cast<size_t>(x)] + i;
}

MonFunctor identity_functor(const FusionCat& cat) {
    return scaled_identity_functor(cat, Scalar::one(cat.field), Scalar::one(cat.field));
}

MonFunctor scaled_identity_functor(const FusionCat& cat, const Scalar& c, const Scalar& c0) {
    MonFunctor f;
    f.src = f.dst = &cat;
    int k = cat.count();
    f.objmap.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 0));
    for (int a = 0; a < k; ++a) f.objmap[static_cast<size_t>(a)][static_cast<size_t>(a)] = 1;
    f.Ftilde.resize(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) {
        f.Ftilde[static_cast<size_t>(a)].resize(static_cast<size_t>(k));
        for (int b = 0; b < k; ++b) {
            for (int x = 0; x < k; ++x) {
                int n = cat.N(a, b, x);
                f.Ftilde[static_cast<size_t>(a)][static_cast<size_t>(b)].push_back(
                    MatrixK::identity(n, Scalar::zero(cat.field)).scaled(c));
            }
        }
    }
    f.F0 = {c0};
    f.strong = !c.is_zero() && !c0.is_zero();
    return f;
}

DecMorK f0_mor(const MonFunctor& f) {
    const FusionCat& D = *f.dst;
    DecMorK r;
    r.src = D.unit_obj();
    r.dst = f.obj(f.src->unit);
    for (int x = 0; x < D.count(); ++x) {
        MatrixK m = MatrixK::zero(r.dst[static_cast<size_t>(x)], r.src[static_cast<size_t>(x)], Scalar::zero(D.field));
        if (x == D.unit)
            for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = f.F0[static_cast<size_t>(i)];
        r.m.push_back(std::move(m));
    }
    return r;
}

namespace {

CheckReport check_unit_squares(const MonFunctor& f) {
    CheckReport rep;
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    Scalar model = Scalar::zero(D.field);
    auto ft = ftilde_blocks<Scalar>(f, 0);
    for (int a = 0; a < C.count() && rep.ok; ++a) {
        Decomp A = C.simple_obj(a), FA = f.obj(a);
        // right square: F(rho_a) . Ftilde_{a,1} . (F(a) (x) F0) = rho_{F(a)}
        DecMorK lhs = dec_compose(
            app_mor(D, f.objmap, dec_runit(C, A), model),
            dec_compose(pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, ft, A, C.unit_obj(), model),
                        dec_tensor(D, dec_identity(FA, model), f0_mor(f), model)));
        if (!(lhs == dec_runit(D, FA))) {
            rep.fail("unit square violation at (" + C.names[static_cast<size_t>(a)] + ", right)");
            break;
        }
        // left square: F(lambda_a) . Ftilde_{1,a} . (F0 (x) F(a)) = lambda_{F(a)}
        DecMorK lhs2 = dec_compose(
            app_mor(D, f.objmap, dec_lunit(C, A), model),
            dec_compose(pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, ft, C.unit_obj(), A, model),
                        dec_tensor(D, f0_mor(f), dec_identity(FA, model), model)));
        if (!(lhs2 == dec_lunit(D, FA))) rep.fail("unit square violation at (" + C.names[static_cast<size_t>(a)] + ", left)");
    }
    return rep;
}

}  // namespace

CheckReport verify_functor(const MonFunctor& f) {
    CheckReport rep;
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    // shape validation
    for (int a = 0; a < C.count() && rep.ok; ++a)
        for (int b = 0; b < C.count() && rep.ok; ++b)
            for (int x = 0; x < D.count() && rep.ok; ++x) {
                const MatrixK& m = f.Ftilde[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(x)];
                Decomp pair = tensor2(D, f.obj(a), f.obj(b));
                int rows = 0;
                for (int e = 0; e < C.count(); ++e) rows += C.N(a, b, e) * f.objmap[static_cast<size_t>(e)][static_cast<size_t>(x)];
                if (m.rows() != rows || m.cols() != pair[static_cast<size_t>(x)])
                    rep.fail("Ftilde shape at (" + C.names[static_cast<size_t>(a)] + "," + C.names[static_cast<size_t>(b)] + ")");
                else if (f.strong && rows > 0) {
                    try {
                        invert(m, D.field);
                    } catch (const NotInvertible&) {
                        rep.fail("strong functor with singular Ftilde at (" + C.names[static_cast<size_t>(a)] + "," +
                                 C.names[static_cast<size_t>(b)] + ")");
                    }
                }
            }
    if (!rep.ok) return rep;
    Scalar model = Scalar::zero(D.field);
    rep = check_functor_hexagons<Scalar>(f, base_assoc(C), base_assoc(D), ftilde_blocks<Scalar>(f, 0), model);
    if (!rep.ok) return rep;
    return check_unit_squares(f);
}

Bimodule regular_bimodule(const MonFunctor& f) {
    Bimodule m;
    m.left = m.right = &f;
    m.objmap = f.objmap;
    m.mul = f.Ftilde;
    m.mur = f.Ftilde;
    return m;
}

Bimodule bimodule_along_nat(const MonFunctor& f, const MonFunctor& g, const std::vector<DecMorK>& phi) {
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    Scalar model = Scalar::zero(D.field);
    Bimodule m;
    m.left = &f;
    m.right = &f;
    m.objmap = g.objmap;
    auto gt = ftilde_blocks<Scalar>(g, 0);
    int k = C.count();
    m.mul.resize(static_cast<size_t>(k));
    m.mur.resize(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) {
        m.mul[static_cast<size_t>(a)].resize(static_cast<size_t>(k));
        m.mur[static_cast<size_t>(a)].resize(static_cast<size_t>(k));
    }
    for (int a = 0; a < k; ++a)
        for (int x = 0; x < k; ++x) {
            // mu_l = Gtilde . (phi_a (x) Id_{G(x)})
            DecMorK left = dec_compose(
                pairing_prolong(D, C, g.objmap, g.objmap, g.objmap, gt, C.simple_obj(a), C.simple_obj(x), model),
                dec_tensor(D, phi[static_cast<size_t>(a)], dec_identity(g.obj(x), model), model));
            // mu_r = Gtilde . (Id_{G(x)} (x) phi_b)
            DecMorK right = dec_compose(
                pairing_prolong(D, C, g.objmap, g.objmap, g.objmap, gt, C.simple_obj(x), C.simple_obj(a), model),
                dec_tensor(D, dec_identity(g.obj(x), model), phi[static_cast<size_t>(a)], model));
            for (int y = 0; y < D.count(); ++y) {
                m.mul[static_cast<size_t>(a)][static_cast<size_t>(x)].push_back(left.m[static_cast<size_t>(y)]);
                m.mur[static_cast<size_t>(x)][static_cast<size_t>(a)].push_back(right.m[static_cast<size_t>(y)]);
            }
        }
    return m;
}

CheckReport verify_bimodule(const Bimodule& mod) {
    CheckReport rep;
    const MonFunctor& F = *mod.left;
    const MonFunctor& G = *mod.right;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    auto fblocks = ftilde_blocks<Scalar>(F, 0);
    auto gblocks = ftilde_blocks<Scalar>(G, 0);
    PairBlocks<Scalar> mul = [&mod](int a, int x, int y) { return mod.mul[static_cast<size_t>(a)][static_cast<size_t>(x)][static_cast<size_t>(y)]; };
    PairBlocks<Scalar> mur = [&mod](int x, int b, int y) { return mod.mur[static_cast<size_t>(x)][static_cast<size_t>(b)][static_cast<size_t>(y)]; };
    auto A = base_assoc(D);

    auto mulp = [&](const Decomp& Y1, const Decomp& Y2) {
        return pairing_prolong(D, C, F.objmap, mod.objmap, mod.objmap, mul, Y1, Y2, model);
    };
    auto murp = [&](const Decomp& Y1, const Decomp& Y2) {
        return pairing_prolong(D, C, mod.objmap, G.objmap, mod.objmap, mur, Y1, Y2, model);
    };
    auto fhat = [&](const Decomp& Y1, const Decomp& Y2) {
        return pairing_prolong(D, C, F.objmap, F.objmap, F.objmap, fblocks, Y1, Y2, model);
    };
    auto ghat = [&](const Decomp& Y1, const Decomp& Y2) {
        return pairing_prolong(D, C, G.objmap, G.objmap, G.objmap, gblocks, Y1, Y2, model);
    };
    auto Mof = [&](const DecMorK& g) { return app_mor(D, mod.objmap, g, model); };

    int k = C.count();
    for (int a = 0; a < k && rep.ok; ++a)
        for (int b = 0; b < k && rep.ok; ++b)
            for (int x = 0; x < k && rep.ok; ++x) {
                Decomp As = C.simple_obj(a), Bs = C.simple_obj(b), Xs = C.simple_obj(x);
                Decomp FA = F.obj(a), FB = F.obj(b), MX = mod.obj(x), GA = G.obj(a), GB = G.obj(b);
                {  // left hexagon
                    DecMorK p1 = dec_compose(
                        mulp(As, tensor2(C, Bs, Xs)),
                        dec_compose(dec_tensor(D, dec_identity(FA, model), mulp(Bs, Xs), model),
                                    dec_assoc(D, A, FA, FB, MX, model)));
                    DecMorK p2 = dec_compose(
                        Mof(dec_assoc(C, base_assoc(C), As, Bs, Xs, model)),
                        dec_compose(mulp(tensor2(C, As, Bs), Xs),
                                    dec_tensor(D, fhat(As, Bs), dec_identity(MX, model), model)));
                    if (!(p1 == p2)) {
                        rep.fail("left hexagon violation at (" + C.names[static_cast<size_t>(a)] + "," + C.names[static_cast<size_t>(b)] +
                                 "," + C.names[static_cast<size_t>(x)] + ")");
                        break;
                    }
                }
                {  // right hexagon
                    DecMorK p1 = dec_compose(
                        murp(Xs, tensor2(C, As, Bs)),
                        dec_compose(dec_tensor(D, dec_identity(MX, model), ghat(As, Bs), model),
                                    dec_assoc(D, A, MX, GA, GB, model)));
                    DecMorK p2 = dec_compose(
                        Mof(dec_assoc(C, base_assoc(C), Xs, As, Bs, model)),
                        dec_compose(murp(tensor2(C, Xs, As), Bs),
                                    dec_tensor(D, murp(Xs, As), dec_identity(GB, model), model)));
                    if (!(p1 == p2)) {
                        rep.fail("right hexagon violation at (" + C.names[static_cast<size_t>(x)] + "," + C.names[static_cast<size_t>(a)] +
                                 "," + C.names[static_cast<size_t>(b)] + ")");
                        break;
                    }
                }
                {  // middle hexagon
                    DecMorK p1 = dec_compose(
                        mulp(As, tensor2(C, Xs, Bs)),
                        dec_compose(dec_tensor(D, dec_identity(FA, model), murp(Xs, Bs), model),
                                    dec_assoc(D, A, FA, MX, GB, model)));
                    DecMorK p2 = dec_compose(
                        Mof(dec_assoc(C, base_assoc(C), As, Xs, Bs, model)),
                        dec_compose(murp(tensor2(C, As, Xs), Bs),
                                    dec_tensor(D, mulp(As, Xs), dec_identity(GB, model), model)));
                    if (!(p1 == p2)) {
                        rep.fail("middle hexagon violation at (" + C.names[static_cast<size_t>(a)] + "," + C.names[static_cast<size_t>(x)] +
                                 "," + C.names[static_cast<size_t>(b)] + ")");
                        break;
                    }
                }
            }
    if (!rep.ok) return rep;
    // unit squares
    for (int x = 0; x < k && rep.ok; ++x) {
        Decomp Xs = C.simple_obj(x), MX = mod.obj(x);
        DecMorK lhs = dec_compose(Mof(dec_lunit(C, Xs)),
                                  dec_compose(mulp(C.unit_obj(), Xs),
                                              dec_tensor(D, f0_mor(*mod.left), dec_identity(MX, model), model)));
        if (!(lhs == dec_lunit(D, MX))) {
            rep.fail("unit violation at (" + C.names[static_cast<size_t>(x)] + ", left)");
            break;
        }
        DecMorK rhs = dec_compose(Mof(dec_runit(C, Xs)),
                                  dec_compose(murp(Xs, C.unit_obj()),
                                              dec_tensor(D, dec_identity(MX, model), f0_mor(*mod.right), model)));
        if (!(rhs == dec_runit(D, MX))) rep.fail("unit violation at (" + C.names[static_cast<size_t>(x)] + ", right)");
    }
    return rep;
}

bool nat_transformation_check(const std::vector<DecMorK>& phi, const MonFunctor& f, const MonFunctor& g) {
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    Scalar model = Scalar::zero(D.field);
    auto ft = ftilde_blocks<Scalar>(f, 0);
    auto gt = ftilde_blocks<Scalar>(g, 0);
    for (int a = 0; a < C.count(); ++a)
        for (int b = 0; b < C.count(); ++b) {
            Decomp As = C.simple_obj(a), Bs = C.simple_obj(b);
            DecMorK lhs = dec_compose(nat_prolong(D, f.objmap, g.objmap, phi, tensor2(C, As, Bs), model),
                                      pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, ft, As, Bs, model));
            DecMorK rhs = dec_compose(pairing_prolong(D, C, g.objmap, g.objmap, g.objmap, gt, As, Bs, model),
                                      dec_tensor(D, phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)], model));
            if (!(lhs == rhs)) return false;
        }
    DecMorK unit_lhs = dec_compose(phi[static_cast<size_t>(C.unit)], f0_mor(f));
    if (!(unit_lhs == f0_mor(g))) return false;
    return true;
}

CheckReport validate_algebra(const Algebra& a) {
    CheckReport rep;
    int d = a.dim;
    Field f = a.field;
    for (int i = 0; i < d && rep.ok; ++i)
        for (int j = 0; j < d && rep.ok; ++j)
            for (int k = 0; k < d && rep.ok; ++k)
                for (int q = 0; q < d; ++q) {
                    Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                    for (int p = 0; p < d; ++p) {
                        lhs += a.m(i, j, p) * a.m(p, k, q);
                        rhs += a.m(j, k, p) * a.m(i, p, q);
                    }
                    if (lhs != rhs) {
                        rep.fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
                        break;
                    }
                }
    if (!rep.ok) return rep;
    for (int i = 0; i < d && rep.ok; ++i)
        for (int q = 0; q < d; ++q) {
            Scalar lu = Scalar::zero(f), ru = Scalar::zero(f);
            for (int p = 0; p < d; ++p) {
                lu += a.unit[static_cast<size_t>(p)] * a.m(p, i, q);
                ru += a.unit[static_cast<size_t>(p)] * a.m(i, p, q);
            }
            Scalar want = q == i ? Scalar::one(f) : Scalar::zero(f);
            if (lu != want || ru != want) {
                rep.fail("unit fails on basis element " + std::to_string(i));
                break;
            }
        }
    return rep;
}

AlgebraFunctor algebra_to_functor(const Algebra& a) {
    CheckReport v = validate_algebra(a);
    if (!v.ok) {
        if (v.failure.find("associativity") != std::string::npos) throw NotAssociative();
        throw NotUnital();
    }
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
    AlgebraFunctor out;
    out.src = std::make_shared<FusionCat>(trivial("*"));
    out.dst = std::make_shared<FusionCat>(trivial("k"));
    MonFunctor& f = out.functor;
    f.src = out.src.get();
    f.dst = out.dst.get();
    f.objmap = {{a.dim}};
    MatrixK mult = MatrixK::zero(a.dim, a.dim * a.dim, Scalar::zero(a.field));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) mult.at(k, i * a.dim + j) = a.m(i, j, k);
    f.Ftilde = {{{mult}}};
    f.F0 = a.unit;
    f.strong = false;
    return out;
}

}  // namespace defcat
