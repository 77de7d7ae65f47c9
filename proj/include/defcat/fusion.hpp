#ifndef DEFCAT_FUSION_HPP
#define DEFCAT_FUSION_HPP

#include <functional>
#include <string>
#include <vector>

#include "defcat/matrix.hpp"

namespace defcat {

struct ShapeError : Error {
    explicit ShapeError(const std::string& w) : Error("shape error: " + w) {}
};
struct SingularF : Error {
    explicit SingularF(const std::string& w) : Error("singular F-matrix at " + w) {}
};
struct UnitRuleViolation : Error {
    explicit UnitRuleViolation(const std::string& w) : Error("unit rule violation: " + w) {}
};

/// Multiplicity vector: entry per simple of the ambient category.
using Decomp = std::vector<int>;

/// Finite skeletal monoidal category presented by fusion data.
///
/// F^{abc}_d maps the left-tree basis (e, mu in N(a,b,e), nu in N(e,c,d)),
/// lexicographic, to the right-tree basis (f, mu' in N(b,c,f), nu' in
/// N(a,f,d)), lexicographic: rows are right-tree indices, columns left-tree.
/// Unit scalars lambda_a : I(x)a -> a and rho_a : a(x)I -> a.
struct FusionCat {
    Field field = Field::rationals();
    std::vector<std::string> names;
    int unit = 0;
    std::vector<int> Ntab;        // size k^3, index ((a*k)+b)*k+c
    std::vector<MatrixK> Fmats;   // size k^4
    std::vector<Scalar> lambda, rho;

    int count() const { return static_cast<int>(names.size()); }
    int N(int a, int b, int c) const {
        int k = count();
        return Ntab[(static_cast<size_t>(a) * k + b) * k + c];
    }
    const MatrixK& F(int a, int b, int c, int d) const {
        int k = count();
        return Fmats[((static_cast<size_t>(a) * k + b) * k + c) * k + d];
    }
    MatrixK& F(int a, int b, int c, int d) {
        int k = count();
        return Fmats[((static_cast<size_t>(a) * k + b) * k + c) * k + d];
    }

    Decomp simple_obj(int a) const {
        Decomp d(static_cast<size_t>(count()), 0);
        d[static_cast<size_t>(a)] = 1;
        return d;
    }
    Decomp unit_obj() const { return simple_obj(unit); }

    /// Expected shape of F^{abc}_d.
    int left_dim(int a, int b, int c, int d) const {
        int s = 0;
        for (int e = 0; e < count(); ++e) s += N(a, b, e) * N(e, c, d);
        return s;
    }
    int right_dim(int a, int b, int c, int d) const {
        int s = 0;
        for (int f = 0; f < count(); ++f) s += N(b, c, f) * N(a, f, d);
        return s;
    }
};

/// Canonical basis of the z-sector of X (x) Y:
/// (x, i, y, j, k) lexicographic with i < X[x], j < Y[y], k < N(x,y,z).
Decomp tensor2(const FusionCat& cat, const Decomp& X, const Decomp& Y);

struct T2Idx {
    int x, i, y, j, k;
};
T2Idx t2_decode(const FusionCat& cat, const Decomp& X, const Decomp& Y, int z, int idx);
int t2_encode(const FusionCat& cat, const Decomp& X, const Decomp& Y, int z, const T2Idx& t);

/// Morphism between decomposed objects: one matrix per simple sector.
template <class T>
struct DecMor {
    Decomp src, dst;
    std::vector<Mat<T>> m;  // per sector: dst[z] x src[z]

    bool is_zero() const {
        for (const auto& mm : m)
            if (!mm.is_zero()) return false;
        return true;
    }
    bool operator==(const DecMor& o) const { return src == o.src && dst == o.dst && m == o.m; }
    DecMor operator+(const DecMor& o) const {
        DecMor r = *this;
        for (size_t z = 0; z < m.size(); ++z) r.m[z] = r.m[z] + o.m[z];
        return r;
    }
    DecMor operator-(const DecMor& o) const {
        DecMor r = *this;
        for (size_t z = 0; z < m.size(); ++z) r.m[z] = r.m[z] - o.m[z];
        return r;
    }
    DecMor operator-() const {
        DecMor r = *this;
        for (auto& mm : r.m) mm = -mm;
        return r;
    }
    DecMor scaled(const T& s) const {
        DecMor r = *this;
        for (auto& mm : r.m) mm = mm.scaled(s);
        return r;
    }
};

using DecMorK = DecMor<Scalar>;
using DecMorS = DecMor<Series>;

template <class T>
DecMor<T> dec_identity(const Decomp& X, const T& model) {
    DecMor<T> r;
    r.src = r.dst = X;
    for (int d : X) r.m.push_back(Mat<T>::identity(d, model));
    return r;
}

template <class T>
DecMor<T> dec_zero(const Decomp& src, const Decomp& dst, const T& model) {
    DecMor<T> r;
    r.src = src;
    r.dst = dst;
    for (size_t z = 0; z < src.size(); ++z)
        r.m.push_back(Mat<T>::zero(dst[z], src[z], model));
    return r;
}

template <class T>
DecMor<T> dec_compose(const DecMor<T>& g, const DecMor<T>& f) {
    if (g.src != f.dst) throw ShapeError("composition of decomposed morphisms");
    DecMor<T> r;
    r.src = f.src;
    r.dst = g.dst;
    for (size_t z = 0; z < g.m.size(); ++z) r.m.push_back(g.m[z] * f.m[z]);
    return r;
}

/// f (x) g on the canonical pair bases.
template <class T>
DecMor<T> dec_tensor(const FusionCat& cat, const DecMor<T>& f, const DecMor<T>& g, const T& model) {
    DecMor<T> r;
    r.src = tensor2(cat, f.src, g.src);
    r.dst = tensor2(cat, f.dst, g.dst);
    int k = cat.count();
    for (int z = 0; z < k; ++z) {
        Mat<T> mz = Mat<T>::zero(r.dst[static_cast<size_t>(z)], r.src[static_cast<size_t>(z)], model);
        for (int col = 0; col < mz.cols(); ++col) {
            T2Idx s = t2_decode(cat, f.src, g.src, z, col);
            for (int fi = 0; fi < f.dst[static_cast<size_t>(s.x)]; ++fi) {
                const T& fv = f.m[static_cast<size_t>(s.x)].at(fi, s.i);
                if (fv.is_zero()) continue;
                for (int gj = 0; gj < g.dst[static_cast<size_t>(s.y)]; ++gj) {
                    const T& gv = g.m[static_cast<size_t>(s.y)].at(gj, s.j);
                    if (gv.is_zero()) continue;
                    int row = t2_encode(cat, f.dst, g.dst, z, {s.x, fi, s.y, gj, s.k});
                    mz.at(row, col) += fv * gv;
                }
            }
        }
        r.m.push_back(std::move(mz));
    }
    return r;
}

/// Associator-block provider: (a,b,c,d) -> matrix in the F-matrix convention.
template <class T>
using AssocProvider = std::function<Mat<T>(int, int, int, int)>;

AssocProvider<Scalar> base_assoc(const FusionCat& cat);
AssocProvider<Series> base_assoc_series(const FusionCat& cat, int order);

/// Structural rotation ((X Y) Z) -> (X (Y Z)) with the given blocks.
template <class T>
DecMor<T> dec_assoc(const FusionCat& cat, const AssocProvider<T>& blocks, const Decomp& X, const Decomp& Y,
                    const Decomp& Z, const T& model) {
    Decomp XY = tensor2(cat, X, Y);
    Decomp YZ = tensor2(cat, Y, Z);
    DecMor<T> r;
    r.src = tensor2(cat, XY, Z);
    r.dst = tensor2(cat, X, YZ);
    int k = cat.count();
    for (int d = 0; d < k; ++d) {
        Mat<T> md = Mat<T>::zero(r.dst[static_cast<size_t>(d)], r.src[static_cast<size_t>(d)], model);
        for (int col = 0; col < md.cols(); ++col) {
            T2Idx o = t2_decode(cat, XY, Z, d, col);  // (e, i in XY[e], z, j, nu)
            T2Idx in = t2_decode(cat, X, Y, o.x, o.i);  // (x, i, y, j, mu)
            // F^{x y z}_d couples (e,mu,nu) -> (f,mu',nu') for fixed leaf data
            const Mat<T> blk = blocks(in.x, in.y, o.y, d);
            int colLocal = 0;
            {  // position of (e, mu, nu) among left-tree triples for (x,y,z,d)
                for (int e = 0; e < o.x; ++e) colLocal += cat.N(in.x, in.y, e) * cat.N(e, o.y, d);
                colLocal += in.k * cat.N(o.x, o.y, d) + o.k;
            }
            int rowLocal = 0;
            for (int fsim = 0; fsim < k; ++fsim) {
                for (int mu2 = 0; mu2 < cat.N(in.y, o.y, fsim); ++mu2)
                    for (int nu2 = 0; nu2 < cat.N(in.x, fsim, d); ++nu2) {
                        const T& v = blk.at(rowLocal, colLocal);
                        ++rowLocal;
                        if (v.is_zero()) continue;
                        int jdx = t2_encode(cat, Y, Z, fsim, {in.y, in.j, o.y, o.j, mu2});
                        int row = t2_encode(cat, X, YZ, d, {in.x, in.i, fsim, jdx, nu2});
                        md.at(row, col) += v;
                    }
            }
        }
        r.m.push_back(std::move(md));
    }
    return r;
}

/// lambda prolongation: (I (x) X) -> X, sector z scaled by lambda_z.
DecMorK dec_lunit(const FusionCat& cat, const Decomp& X);
/// rho prolongation: (X (x) I) -> X, sector z scaled by rho_z.
DecMorK dec_runit(const FusionCat& cat, const Decomp& X);

DecMorK dec_invert(const FusionCat& cat, const DecMorK& f);

/// Full binary tree over leaf slots 0..n-1 (n >= 1).
struct PTree {
    int leaf = -1;
    std::vector<PTree> kid;  // empty or size 2

    bool is_leaf() const { return kid.empty(); }
    int leaves() const {
        if (is_leaf()) return 1;
        return kid[0].leaves() + kid[1].leaves();
    }
    static PTree leaf_node(int i) {
        PTree t;
        t.leaf = i;
        return t;
    }
    static PTree pair(PTree l, PTree r) {
        PTree t;
        t.leaf = -1;
        t.kid.push_back(std::move(l));
        t.kid.push_back(std::move(r));
        return t;
    }
    static PTree left_comb(int n, int first = 0);
    static PTree right_comb(int n, int first = 0);
    bool operator==(const PTree& o) const {
        if (is_leaf() != o.is_leaf()) return false;
        if (is_leaf()) return leaf == o.leaf;
        return kid[0] == o.kid[0] && kid[1] == o.kid[1];
    }
};

Decomp tree_obj(const FusionCat& cat, const std::vector<Decomp>& leaves, const PTree& t);

/// Tensor a morphism living at the subtree reached by `path` with identities
/// of the sibling subtrees along the way up.
template <class T>
DecMor<T> lift_at(const FusionCat& cat, const std::vector<Decomp>& leaves, const PTree& t,
                  const std::vector<int>& path, const DecMor<T>& inner, const T& model) {
    if (path.empty()) return inner;
    std::vector<int> rest(path.begin() + 1, path.end());
    DecMor<T> sub = lift_at(cat, leaves, t.kid[static_cast<size_t>(path.front())], rest, inner, model);
    DecMor<T> idm = dec_identity(tree_obj(cat, leaves, t.kid[static_cast<size_t>(1 - path.front())]), model);
    return path.front() == 0 ? dec_tensor(cat, sub, idm, model) : dec_tensor(cat, idm, sub, model);
}

/// One structural rotation at the node reached by `path` (0 = left child,
/// 1 = right child); that node's left child must be internal.
template <class T>
DecMor<T> tree_move(const FusionCat& cat, const AssocProvider<T>& blocks, const std::vector<Decomp>& leaves,
                    const PTree& t, const std::vector<int>& path, const T& model) {
    const PTree* node = &t;
    for (int step : path) node = &node->kid[static_cast<size_t>(step)];
    if (node->is_leaf() || node->kid[0].is_leaf())
        throw ShapeError("rotation position must have an internal left child");
    Decomp X = tree_obj(cat, leaves, node->kid[0].kid[0]);
    Decomp Y = tree_obj(cat, leaves, node->kid[0].kid[1]);
    Decomp Z = tree_obj(cat, leaves, node->kid[1]);
    return lift_at(cat, leaves, t, path, dec_assoc(cat, blocks, X, Y, Z, model), model);
}

PTree apply_move(const PTree& t, const std::vector<int>& path);
/// Replace the subtree at `path` by `sub`.
PTree replace_at(const PTree& t, const std::vector<int>& path, const PTree& sub);

/// Canonical rotation route taking t to the right comb.
std::vector<std::vector<int>> right_comb_route(PTree t);

/// Coherence isomorphism between two parenthesizations of the same leaves,
/// computed by normalizing both to the right comb (inverting the target leg).
DecMorK tree_reassoc(const FusionCat& cat, const std::vector<Decomp>& leaves, const PTree& src, const PTree& dst);

struct CheckReport {
    bool ok = true;
    std::string failure;  // first violation, with indices

    void fail(const std::string& what) {
        if (ok) {
            ok = false;
            failure = what;
        }
    }
};

CheckReport validate_fusion(const FusionCat& cat);

/// Pentagon and triangle instances with the supplied associator blocks and
/// unit scalars; shared by the base coherence check and the deformed
/// (series-coefficient) checks.
template <class T>
CheckReport check_pentagons(const FusionCat& cat, const AssocProvider<T>& blocks, const T& model) {
    CheckReport rep;
    int k = cat.count();
    for (int a = 0; a < k && rep.ok; ++a)
        for (int b = 0; b < k && rep.ok; ++b)
            for (int c = 0; c < k && rep.ok; ++c)
                for (int d = 0; d < k && rep.ok; ++d) {
                    Decomp A = cat.simple_obj(a), B = cat.simple_obj(b), C = cat.simple_obj(c), D = cat.simple_obj(d);
                    Decomp AB = tensor2(cat, A, B), CD = tensor2(cat, C, D), BC = tensor2(cat, B, C);
                    // ((ab)c)d -> (ab)(cd) -> a(b(cd))
                    DecMor<T> r1 = dec_assoc(cat, blocks, AB, C, D, model);
                    DecMor<T> r2 = dec_assoc(cat, blocks, A, B, CD, model);
                    DecMor<T> two = dec_compose(r2, r1);
                    // ((ab)c)d -> (a(bc))d -> a((bc)d) -> a(b(cd))
                    DecMor<T> s1 = dec_tensor(cat, dec_assoc(cat, blocks, A, B, C, model), dec_identity(D, model), model);
                    DecMor<T> s2 = dec_assoc(cat, blocks, A, BC, D, model);
                    DecMor<T> s3 = dec_tensor(cat, dec_identity(A, model), dec_assoc(cat, blocks, B, C, D, model), model);
                    DecMor<T> three = dec_compose(s3, dec_compose(s2, s1));
                    if (!(two == three))
                        rep.fail("pentagon violation at (" + cat.names[a] + "," + cat.names[b] + "," +
                                 cat.names[c] + "," + cat.names[d] + ")");
                }
    return rep;
}

template <class T>
CheckReport check_triangles(const FusionCat& cat, const AssocProvider<T>& blocks, const std::vector<T>& lam,
                            const std::vector<T>& rho, const T& model) {
    CheckReport rep;
    int k = cat.count();
    for (int a = 0; a < k && rep.ok; ++a)
        for (int b = 0; b < k && rep.ok; ++b) {
            for (int d = 0; d < k; ++d) {
                int m = cat.N(a, b, d);
                if (m == 0) continue;
                Mat<T> f = blocks(a, cat.unit, b, d);
                Mat<T> lhs = f.scaled(lam[static_cast<size_t>(b)]);
                Mat<T> rhs = Mat<T>::identity(m, model).scaled(rho[static_cast<size_t>(a)]);
                if (!(lhs == rhs)) {
                    rep.fail("triangle violation at (" + cat.names[a] + "," + cat.names[b] + ")");
                    break;
                }
            }
        }
    return rep;
}

CheckReport verify_coherence(const FusionCat& cat);

/// Deligne product: paired simples, componentwise fusion, blockwise products
/// of F-entries on the paired bases.
FusionCat deligne_product(const FusionCat& c1, const FusionCat& c2);

/// Position bookkeeping between a Deligne-product sector basis and the pair
/// of factor bases: index of the z=(z1,z2) sector element built from factor
/// elements (idx1 in sector z1 of X1 (x) Y1, idx2 in z2 of X2 (x) Y2).
struct ProductT2Basis {
    // kron[i] = idx1 * dim2 + idx2 for product basis position i
    std::vector<int> kron;
    int dim2 = 0;
};
ProductT2Basis product_t2_correspondence(const FusionCat& prod, const FusionCat& c1, const FusionCat& c2,
                                         const Decomp& X1, const Decomp& Y1, const Decomp& X2, const Decomp& Y2,
                                         int z1, int z2);

/// Index data of a basis element in an iterated (left or right) pair basis.
/// mid_sector[i] is the sector of the partial product after folding in the
/// i-th leaf; mu[i] is the pair-basis fusion index at that step.
struct FoldData {
    std::vector<int> leaf_sector, leaf_inner;
    std::vector<int> mid_sector;  // size n; mid_sector[0] (left) resp. mid_sector[n-1] (right) is a leaf sector
    std::vector<int> mu;          // size n; entry 0 (left) resp. n-1 (right) unused
};

Decomp fold_left_obj(const FusionCat& cat, const std::vector<Decomp>& leaves);
Decomp fold_right_obj(const FusionCat& cat, const std::vector<Decomp>& leaves);
FoldData fold_left_decode(const FusionCat& cat, const std::vector<Decomp>& leaves, int sector, int idx);
int fold_left_encode(const FusionCat& cat, const std::vector<Decomp>& leaves, const FoldData& fd);
FoldData fold_right_decode(const FusionCat& cat, const std::vector<Decomp>& leaves, int sector, int idx);
int fold_right_encode(const FusionCat& cat, const std::vector<Decomp>& leaves, const FoldData& fd);

}  // namespace defcat

#endif
