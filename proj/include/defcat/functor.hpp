#ifndef DEFCAT_FUNCTOR_HPP
#define DEFCAT_FUNCTOR_HPP

#include <memory>

#include "defcat/fusion.hpp"

namespace defcat {

/// Object map of an additive functor: mult[a][x] = multiplicity of target
/// simple x in the image of source simple a.
using ObjMap = std::vector<std::vector<int>>;

/// Image of a decomposed source object under an object map. The x-sector
/// basis is (b, t, i) lexicographic: source simple b, index t into Y's
/// b-sector, index i < objmap[b][x].
Decomp app_obj(const FusionCat& dst, const ObjMap& om, const Decomp& Y);

struct AppIdx {
    int b, t, i;
};
AppIdx app_decode(const ObjMap& om, const Decomp& Y, int x, int idx);
int app_encode(const ObjMap& om, const Decomp& Y, int x, const AppIdx& a);

/// Functor applied to a source-category morphism.
template <class T>
DecMor<T> app_mor(const FusionCat& dst, const ObjMap& om, const DecMor<T>& g, const T& model) {
    DecMor<T> r;
    r.src = app_obj(dst, om, g.src);
    r.dst = app_obj(dst, om, g.dst);
    for (int x = 0; x < dst.count(); ++x) {
        Mat<T> m = Mat<T>::zero(r.dst[static_cast<size_t>(x)], r.src[static_cast<size_t>(x)], model);
        for (int col = 0; col < m.cols(); ++col) {
            AppIdx s = app_decode(om, g.src, x, col);
            for (int t2i = 0; t2i < g.dst[static_cast<size_t>(s.b)]; ++t2i) {
                const T& v = g.m[static_cast<size_t>(s.b)].at(t2i, s.t);
                if (v.is_zero()) continue;
                m.at(app_encode(om, g.dst, x, {s.b, t2i, s.i}), col) += v;
            }
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

/// Lax monoidal functor between skeletal categories.
///
/// Ftilde[a][b][x] has rows indexed by the basis of F(a (x) b), i.e. triples
/// (e, mu < N_src(a,b,e), i < objmap[e][x]) lexicographic, and columns by the
/// x-sector of F(a) (x) F(b) in the canonical pair basis.
struct MonFunctor {
    const FusionCat* src = nullptr;
    const FusionCat* dst = nullptr;
    ObjMap objmap;
    std::vector<std::vector<std::vector<MatrixK>>> Ftilde;  // [a][b][x]
    std::vector<Scalar> F0;  // coordinates of 1_dst in F(1_src), length objmap[unit][unit]
    bool strong = false;

    Decomp obj(int a) const {
        Decomp d(static_cast<size_t>(dst->count()), 0);
        for (int x = 0; x < dst->count(); ++x) d[static_cast<size_t>(x)] = objmap[static_cast<size_t>(a)][static_cast<size_t>(x)];
        return d;
    }
};

MonFunctor identity_functor(const FusionCat& cat);
/// Identity-carried functor with all Ftilde blocks scaled by c and F0 = c0.
MonFunctor scaled_identity_functor(const FusionCat& cat, const Scalar& c, const Scalar& c0);

/// Per-(a,b) per-sector structure blocks, e.g. a deformed Ftilde.
template <class T>
using PairBlocks = std::function<Mat<T>(int, int, int)>;  // (a, b, x)

/// Row position of (e, mu, i) in the F(a (x) b) basis.
int pair_row_encode(const FusionCat& srcCat, const ObjMap& w, int a, int b, int x, int e, int mu, int i);

/// Prolong pairwise structure blocks (rows over W(a (x) b), columns over
/// U(a) (x) V(b)) to compound arguments:
///   U(Y1) (x) V(Y2)  ->  W(Y1 (x) Y2).
template <class T>
DecMor<T> pairing_prolong(const FusionCat& dstCat, const FusionCat& srcCat, const ObjMap& U, const ObjMap& V,
                          const ObjMap& W, const PairBlocks<T>& blocks, const Decomp& Y1, const Decomp& Y2,
                          const T& model) {
    Decomp U1 = app_obj(dstCat, U, Y1), V2 = app_obj(dstCat, V, Y2);
    Decomp Y12 = tensor2(srcCat, Y1, Y2);
    DecMor<T> r;
    r.src = tensor2(dstCat, U1, V2);
    r.dst = app_obj(dstCat, W, Y12);
    auto row_decomp = [&dstCat](const ObjMap& om, int a) {
        Decomp d(static_cast<size_t>(dstCat.count()), 0);
        for (int xx = 0; xx < dstCat.count(); ++xx) d[static_cast<size_t>(xx)] = om[static_cast<size_t>(a)][static_cast<size_t>(xx)];
        return d;
    };
    for (int x = 0; x < dstCat.count(); ++x) {
        Mat<T> m = Mat<T>::zero(r.dst[static_cast<size_t>(x)], r.src[static_cast<size_t>(x)], model);
        for (int col = 0; col < m.cols(); ++col) {
            T2Idx p = t2_decode(dstCat, U1, V2, x, col);  // (x1, i1idx, x2, i2idx, k)
            AppIdx u = app_decode(U, Y1, p.x, p.i);       // (a, t1, i1)
            AppIdx v = app_decode(V, Y2, p.y, p.j);       // (b, t2, i2)
            const Mat<T> blk = blocks(u.b, v.b, x);
            int bcol = t2_encode(dstCat, row_decomp(U, u.b), row_decomp(V, v.b), x, {p.x, u.i, p.y, v.i, p.k});
            for (int e = 0; e < srcCat.count(); ++e)
                for (int mu = 0; mu < srcCat.N(u.b, v.b, e); ++mu)
                    for (int i = 0; i < W[static_cast<size_t>(e)][static_cast<size_t>(x)]; ++i) {
                        const T& val = blk.at(pair_row_encode(srcCat, W, u.b, v.b, x, e, mu, i), bcol);
                        if (val.is_zero()) continue;
                        int tidx = t2_encode(srcCat, Y1, Y2, e, {u.b, u.t, v.b, v.t, mu});
                        m.at(app_encode(W, Y12, x, {e, tidx, i}), col) += val;
                    }
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

template <class T>
PairBlocks<T> ftilde_blocks(const MonFunctor& f, int order);
template <>
inline PairBlocks<Scalar> ftilde_blocks<Scalar>(const MonFunctor& f, int) {
    return [&f](int a, int b, int x) { return f.Ftilde[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(x)]; };
}
template <>
inline PairBlocks<Series> ftilde_blocks<Series>(const MonFunctor& f, int order) {
    return [&f, order](int a, int b, int x) {
        return promote(f.Ftilde[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(x)], f.dst->field, order);
    };
}

/// Natural transformation components prolonged to a decomposed argument:
/// F(Y) -> G(Y), phi[a] : F(a) -> G(a).
template <class T>
DecMor<T> nat_prolong(const FusionCat& dst, const ObjMap& OF, const ObjMap& OG,
                      const std::vector<DecMor<T>>& phi, const Decomp& Y, const T& model) {
    DecMor<T> r;
    r.src = app_obj(dst, OF, Y);
    r.dst = app_obj(dst, OG, Y);
    for (int x = 0; x < dst.count(); ++x) {
        Mat<T> m = Mat<T>::zero(r.dst[static_cast<size_t>(x)], r.src[static_cast<size_t>(x)], model);
        for (int col = 0; col < m.cols(); ++col) {
            AppIdx s = app_decode(OF, Y, x, col);
            const Mat<T>& pm = phi[static_cast<size_t>(s.b)].m[static_cast<size_t>(x)];
            for (int i2 = 0; i2 < pm.rows(); ++i2) {
                const T& v = pm.at(i2, s.i);
                if (v.is_zero()) continue;
                m.at(app_encode(OG, Y, x, {s.b, s.t, i2}), col) += v;
            }
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

/// Hexagon instances for a lax monoidal functor, with pluggable (possibly
/// series-deformed) associators and structure blocks.
template <class T>
CheckReport check_functor_hexagons(const MonFunctor& f, const AssocProvider<T>& src_assoc,
                                   const AssocProvider<T>& dst_assoc, const PairBlocks<T>& ft, const T& model) {
    CheckReport rep;
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    for (int a = 0; a < C.count() && rep.ok; ++a)
        for (int b = 0; b < C.count() && rep.ok; ++b)
            for (int c = 0; c < C.count() && rep.ok; ++c) {
                Decomp A = C.simple_obj(a), B = C.simple_obj(b), Cc = C.simple_obj(c);
                Decomp FA = f.obj(a), FB = f.obj(b), FC = f.obj(c);
                auto fhat = [&](const Decomp& Y1, const Decomp& Y2) {
                    return pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, ft, Y1, Y2, model);
                };
                DecMor<T> lhs = dec_compose(
                    app_mor(D, f.objmap, dec_assoc(C, src_assoc, A, B, Cc, model), model),
                    dec_compose(fhat(tensor2(C, A, B), Cc),
                                dec_tensor(D, fhat(A, B), dec_identity(FC, model), model)));
                DecMor<T> rhs = dec_compose(
                    fhat(A, tensor2(C, B, Cc)),
                    dec_compose(dec_tensor(D, dec_identity(FA, model), fhat(B, Cc), model),
                                dec_assoc(D, dst_assoc, FA, FB, FC, model)));
                if (!(lhs == rhs))
                    rep.fail("hexagon violation at (" + C.names[static_cast<size_t>(a)] + "," + C.names[static_cast<size_t>(b)] + "," +
                             C.names[static_cast<size_t>(c)] + ")");
            }
    return rep;
}

CheckReport verify_functor(const MonFunctor& f);

/// F0 as a morphism 1_D -> F(1_C).
DecMorK f0_mor(const MonFunctor& f);

struct Bimodule {
    const MonFunctor* left = nullptr;   // F
    const MonFunctor* right = nullptr;  // G, same source and target
    ObjMap objmap;                      // M
    std::vector<std::vector<std::vector<MatrixK>>> mul;  // [a][x][sector]
    std::vector<std::vector<std::vector<MatrixK>>> mur;  // [x][b][sector]

    Decomp obj(int x) const {
        Decomp d(static_cast<size_t>(left->dst->count()), 0);
        for (int y = 0; y < left->dst->count(); ++y) d[static_cast<size_t>(y)] = objmap[static_cast<size_t>(x)][static_cast<size_t>(y)];
        return d;
    }
};

/// M = F with both actions Ftilde.
Bimodule regular_bimodule(const MonFunctor& f);
/// G as an F,F-bimodule along a monoidal natural transformation phi.
Bimodule bimodule_along_nat(const MonFunctor& f, const MonFunctor& g, const std::vector<DecMorK>& phi);

CheckReport verify_bimodule(const Bimodule& m);

bool nat_transformation_check(const std::vector<DecMorK>& phi, const MonFunctor& f, const MonFunctor& g);

struct NotAssociative : Error {
    NotAssociative() : Error("structure constants are not associative") {}
};
struct NotUnital : Error {
    NotUnital() : Error("unit vector is not a two-sided unit") {}
};

struct Algebra {
    Field field = Field::rationals();
    int dim = 0;
    std::vector<Scalar> mtab;  // mtab[(i*dim+j)*dim+k] = coefficient of e_k in e_i e_j
    std::vector<Scalar> unit;

    const Scalar& m(int i, int j, int k) const {
        return mtab[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
};

CheckReport validate_algebra(const Algebra& a);

/// One-object source category, Vec target, multiplication as Ftilde.
struct AlgebraFunctor {
    std::shared_ptr<FusionCat> src, dst;
    MonFunctor functor;
};
AlgebraFunctor algebra_to_functor(const Algebra& a);

}  // namespace defcat

#endif
