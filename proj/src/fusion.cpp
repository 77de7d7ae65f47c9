#include "defcat/fusion.hpp"

namespace defcat {

Decomp tensor2(const FusionCat& cat, const Decomp& X, const Decomp& Y) {
    int k = cat.count();
    Decomp out(static_cast<size_t>(k), 0);
    for (int z = 0; z < k; ++z) {
        int s = 0;
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y) s += X[static_cast<size_t>(x)] * Y[static_cast<size_t>(y)] * cat.N(x, y, z);
        out[static_cast<size_t>(z)] = s;
    }
    return out;
}

T2Idx t2_decode(const FusionCat& cat, const Decomp& X, const Decomp& Y, int z, int idx) {
    int k = cat.count();
    for (int x = 0; x < k; ++x) {
        for (int i = 0; i < X[static_cast<size_t>(x)]; ++i)
            for (int y = 0; y < k; ++y) {
                int span = Y[static_cast<size_t>(y)] * cat.N(x, y, z);
                if (idx < span) {
                    int n = cat.N(x, y, z);
                    return {x, i, y, idx / n, idx % n};
                }
                idx -= span;
            }
    }
    throw ShapeError("tensor index out of range");
}

int t2_encode(const FusionCat& cat, const Decomp& X, const Decomp& Y, int z, const T2Idx& t) {
    int k = cat.count();
    int idx = 0;
    for (int x = 0; x < k; ++x) {
        if (x == t.x) break;
        for (int y = 0; y < k; ++y) idx += X[static_cast<size_t>(x)] * Y[static_cast<size_t>(y)] * cat.N(x, y, z);
    }
    for (int i = 0; i < t.i; ++i)
        for (int y = 0; y < k; ++y) idx += Y[static_cast<size_t>(y)] * cat.N(t.x, y, z);
    for (int y = 0; y < t.y; ++y) idx += Y[static_cast<size_t>(y)] * cat.N(t.x, y, z);
    idx += t.j * cat.N(t.x, t.y, z) + t.k;
    return idx;
}

AssocProvider<Scalar> base_assoc(const FusionCat& cat) {
    return [&cat](int a, int b, int c, int d) { return cat.F(a, b, c, d); };
}

AssocProvider<Series> base_assoc_series(const FusionCat& cat, int order) {
    return [&cat, order](int a, int b, int c, int d) { return promote(cat.F(a, b, c, d), cat.field, order); };
}

DecMorK dec_lunit(const FusionCat& cat, const Decomp& X) {
    DecMorK r;
    r.src = tensor2(cat, cat.unit_obj(), X);
    r.dst = X;
    int k = cat.count();
    for (int z = 0; z < k; ++z) {
        // the z-sector of I(x)X is (unit, 0, z, j, 0) <-> j
        MatrixK m = MatrixK::zero(X[static_cast<size_t>(z)], r.src[static_cast<size_t>(z)], Scalar::zero(cat.field));
        for (int j = 0; j < X[static_cast<size_t>(z)]; ++j) {
            int col = t2_encode(cat, cat.unit_obj(), X, z, {cat.unit, 0, z, j, 0});
            m.at(j, col) = cat.lambda[static_cast<size_t>(z)];
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

DecMorK dec_runit(const FusionCat& cat, const Decomp& X) {
    DecMorK r;
    r.src = tensor2(cat, X, cat.unit_obj());
    r.dst = X;
    int k = cat.count();
    for (int z = 0; z < k; ++z) {
        MatrixK m = MatrixK::zero(X[static_cast<size_t>(z)], r.src[static_cast<size_t>(z)], Scalar::zero(cat.field));
        for (int j = 0; j < X[static_cast<size_t>(z)]; ++j) {
            int col = t2_encode(cat, X, cat.unit_obj(), z, {z, j, cat.unit, 0, 0});
            m.at(j, col) = cat.rho[static_cast<size_t>(z)];
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

DecMorK dec_invert(const FusionCat& cat, const DecMorK& f) {
    DecMorK r;
    r.src = f.dst;
    r.dst = f.src;
    for (const auto& m : f.m) r.m.push_back(invert(m, cat.field));
    return r;
}

PTree PTree::left_comb(int n, int first) {
    PTree t = PTree::leaf_node(first);
    for (int i = 1; i < n; ++i) t = PTree::pair(std::move(t), PTree::leaf_node(first + i));
    return t;
}

PTree PTree::right_comb(int n, int first) {
    PTree t = PTree::leaf_node(first + n - 1);
    for (int i = n - 2; i >= 0; --i) t = PTree::pair(PTree::leaf_node(first + i), std::move(t));
    return t;
}

Decomp tree_obj(const FusionCat& cat, const std::vector<Decomp>& leaves, const PTree& t) {
    if (t.is_leaf()) return leaves[static_cast<size_t>(t.leaf)];
    return tensor2(cat, tree_obj(cat, leaves, t.kid[0]), tree_obj(cat, leaves, t.kid[1]));
}

PTree apply_move(const PTree& t, const std::vector<int>& path) {
    if (path.empty()) {
        if (t.is_leaf() || t.kid[0].is_leaf()) throw ShapeError("bad rotation position");
        return PTree::pair(t.kid[0].kid[0], PTree::pair(t.kid[0].kid[1], t.kid[1]));
    }
    PTree r = t;
    std::vector<int> rest(path.begin() + 1, path.end());
    r.kid[static_cast<size_t>(path.front())] = apply_move(t.kid[static_cast<size_t>(path.front())], rest);
    return r;
}

PTree replace_at(const PTree& t, const std::vector<int>& path, const PTree& sub) {
    if (path.empty()) return sub;
    PTree r = t;
    std::vector<int> rest(path.begin() + 1, path.end());
    r.kid[static_cast<size_t>(path.front())] = replace_at(t.kid[static_cast<size_t>(path.front())], rest, sub);
    return r;
}

namespace {

// Pre-order search for the first node whose left child is internal.
bool find_rotation(const PTree& t, std::vector<int>& path) {
    if (t.is_leaf()) return false;
    if (!t.kid[0].is_leaf()) return true;
    path.push_back(1);
    if (find_rotation(t.kid[1], path)) return true;
    path.pop_back();
    return false;
}

}  // namespace

std::vector<std::vector<int>> right_comb_route(PTree t) {
    std::vector<std::vector<int>> route;
    for (;;) {
        std::vector<int> path;
        if (!find_rotation(t, path)) break;
        t = apply_move(t, path);
        route.push_back(path);
    }
    return route;
}

DecMorK tree_reassoc(const FusionCat& cat, const std::vector<Decomp>& leaves, const PTree& src, const PTree& dst) {
    if (src.leaves() != dst.leaves()) throw ShapeError("reassociation arity mismatch");
    Scalar model = Scalar::zero(cat.field);
    auto blocks = base_assoc(cat);
    auto normalize = [&](const PTree& t) {
        DecMorK acc = dec_identity(tree_obj(cat, leaves, t), model);
        PTree cur = t;
        for (const auto& path : right_comb_route(t)) {
            acc = dec_compose(tree_move(cat, blocks, leaves, cur, path, model), acc);
            cur = apply_move(cur, path);
        }
        return acc;
    };
    DecMorK up = normalize(src);
    DecMorK down = normalize(dst);
    return dec_compose(dec_invert(cat, down), up);
}

CheckReport validate_fusion(const FusionCat& cat) {
    CheckReport rep;
    int k = cat.count();
    if (k == 0) {
        rep.fail("no simple objects");
        return rep;
    }
    for (int a = 0; a < k && rep.ok; ++a)
        for (int b = 0; b < k && rep.ok; ++b) {
            if (cat.N(cat.unit, a, b) != (a == b ? 1 : 0))
                rep.fail("N(1," + cat.names[static_cast<size_t>(a)] + ") must be " + cat.names[static_cast<size_t>(a)]);
            else if (cat.N(a, cat.unit, b) != (a == b ? 1 : 0))
                rep.fail("N(" + cat.names[static_cast<size_t>(a)] + ",1) must be " + cat.names[static_cast<size_t>(a)]);
        }
    for (int a = 0; a < k && rep.ok; ++a) {
        if (cat.lambda[static_cast<size_t>(a)].is_zero()) rep.fail("lambda_" + cat.names[static_cast<size_t>(a)] + " is zero");
        if (cat.rho[static_cast<size_t>(a)].is_zero()) rep.fail("rho_" + cat.names[static_cast<size_t>(a)] + " is zero");
    }
    if (rep.ok && cat.rho[static_cast<size_t>(cat.unit)] != cat.lambda[static_cast<size_t>(cat.unit)])
        rep.fail("bigon rho_1 != lambda_1");
    for (int a = 0; a < k && rep.ok; ++a)
        for (int b = 0; b < k && rep.ok; ++b)
            for (int c = 0; c < k && rep.ok; ++c)
                for (int d = 0; d < k && rep.ok; ++d) {
                    const MatrixK& f = cat.F(a, b, c, d);
                    int ld = cat.left_dim(a, b, c, d), rd = cat.right_dim(a, b, c, d);
                    std::string where = "(" + cat.names[static_cast<size_t>(a)] + "," + cat.names[static_cast<size_t>(b)] +
                                        "," + cat.names[static_cast<size_t>(c)] + "," + cat.names[static_cast<size_t>(d)] + ")";
                    if (ld != rd)
                        rep.fail("fusion multiplicities not associative at " + where);
                    else if (f.rows() != rd || f.cols() != ld)
                        rep.fail("F-matrix shape at " + where);
                    else if (ld > 0) {
                        try {
                            invert(f, cat.field);
                        } catch (const NotInvertible&) {
                            rep.fail("singular F at " + where);
                        }
                    }
                }
    return rep;
}

CheckReport verify_coherence(const FusionCat& cat) {
    Scalar model = Scalar::zero(cat.field);
    CheckReport rep = check_pentagons<Scalar>(cat, base_assoc(cat), model);
    if (!rep.ok) return rep;
    return check_triangles<Scalar>(cat, base_assoc(cat), cat.lambda, cat.rho, model);
}

FusionCat deligne_product(const FusionCat& c1, const FusionCat& c2) {
    if (c1.field != c2.field) throw FieldMismatch();
    FusionCat p;
    p.field = c1.field;
    int k1 = c1.count(), k2 = c2.count();
    int k = k1 * k2;
    auto pid = [&](int a1, int a2) { return a1 * k2 + a2; };
    p.names.resize(static_cast<size_t>(k));
    p.lambda.resize(static_cast<size_t>(k), Scalar::zero(p.field));
    p.rho.resize(static_cast<size_t>(k), Scalar::zero(p.field));
    for (int a1 = 0; a1 < k1; ++a1)
        for (int a2 = 0; a2 < k2; ++a2) {
            p.names[static_cast<size_t>(pid(a1, a2))] = "(" + c1.names[static_cast<size_t>(a1)] + "," + c2.names[static_cast<size_t>(a2)] + ")";
            p.lambda[static_cast<size_t>(pid(a1, a2))] = c1.lambda[static_cast<size_t>(a1)] * c2.lambda[static_cast<size_t>(a2)];
            p.rho[static_cast<size_t>(pid(a1, a2))] = c1.rho[static_cast<size_t>(a1)] * c2.rho[static_cast<size_t>(a2)];
        }
    p.unit = pid(c1.unit, c2.unit);
    p.Ntab.assign(static_cast<size_t>(k) * k * k, 0);
    for (int a1 = 0; a1 < k1; ++a1)
        for (int a2 = 0; a2 < k2; ++a2)
            for (int b1 = 0; b1 < k1; ++b1)
                for (int b2 = 0; b2 < k2; ++b2)
                    for (int c1i = 0; c1i < k1; ++c1i)
                        for (int c2i = 0; c2i < k2; ++c2i)
                            p.Ntab[(static_cast<size_t>(pid(a1, a2)) * k + pid(b1, b2)) * k + pid(c1i, c2i)] =
                                c1.N(a1, b1, c1i) * c2.N(a2, b2, c2i);
    p.Fmats.resize(static_cast<size_t>(k) * k * k * k);

    // index decode within the (e, mu, nu) and (f, mu', nu') triple bases
    auto left_pos = [](const FusionCat& c, int a, int b, int cc, int d, int e, int mu, int nu) {
        int pos = 0;
        for (int e2 = 0; e2 < e; ++e2) pos += c.N(a, b, e2) * c.N(e2, cc, d);
        return pos + mu * c.N(e, cc, d) + nu;
    };
    auto right_pos = [](const FusionCat& c, int a, int b, int cc, int d, int f, int mu, int nu) {
        int pos = 0;
        for (int f2 = 0; f2 < f; ++f2) pos += c.N(b, cc, f2) * c.N(a, f2, d);
        return pos + mu * c.N(a, f, d) + nu;
    };

    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                for (int d = 0; d < k; ++d) {
                    int a1 = a / k2, a2 = a % k2, b1 = b / k2, b2 = b % k2;
                    int cc1 = c / k2, cc2 = c % k2, d1 = d / k2, d2 = d % k2;
                    int rows = p.right_dim(a, b, c, d), cols = p.left_dim(a, b, c, d);
                    MatrixK m = MatrixK::zero(rows, cols, Scalar::zero(p.field));
                    // enumerate column triples (e, mu, nu) of the product
                    int col = 0;
                    for (int e = 0; e < k; ++e) {
                        int e1 = e / k2, e2 = e % k2;
                        int nab = p.N(a, b, e), ncd = p.N(e, c, d);
                        for (int mu = 0; mu < nab; ++mu)
                            for (int nu = 0; nu < ncd; ++nu, ++col) {
                                int mu1 = mu / std::max(1, c2.N(a2, b2, e2)), mu2 = mu % std::max(1, c2.N(a2, b2, e2));
                                int nu1 = nu / std::max(1, c2.N(e2, cc2, d2)), nu2 = nu % std::max(1, c2.N(e2, cc2, d2));
                                int lc1 = left_pos(c1, a1, b1, cc1, d1, e1, mu1, nu1);
                                int lc2 = left_pos(c2, a2, b2, cc2, d2, e2, mu2, nu2);
                                int row = 0;
                                for (int f = 0; f < k; ++f) {
                                    int f1 = f / k2, f2 = f % k2;
                                    int nbc = p.N(b, c, f), nad = p.N(a, f, d);
                                    for (int mup = 0; mup < nbc; ++mup)
                                        for (int nup = 0; nup < nad; ++nup, ++row) {
                                            int mup1 = mup / std::max(1, c2.N(b2, cc2, f2)), mup2 = mup % std::max(1, c2.N(b2, cc2, f2));
                                            int nup1 = nup / std::max(1, c2.N(a2, f2, d2)), nup2 = nup % std::max(1, c2.N(a2, f2, d2));
                                            int rr1 = right_pos(c1, a1, b1, cc1, d1, f1, mup1, nup1);
                                            int rr2 = right_pos(c2, a2, b2, cc2, d2, f2, mup2, nup2);
                                            m.at(row, col) = c1.F(a1, b1, cc1, d1).at(rr1, lc1) * c2.F(a2, b2, cc2, d2).at(rr2, lc2);
                                        }
                                }
                            }
                    }
                    p.F(a, b, c, d) = std::move(m);
                }
    return p;
}

Decomp fold_left_obj(const FusionCat& cat, const std::vector<Decomp>& leaves) {
    if (leaves.empty()) return cat.unit_obj();
    Decomp acc = leaves.front();
    for (size_t i = 1; i < leaves.size(); ++i) acc = tensor2(cat, acc, leaves[i]);
    return acc;
}

Decomp fold_right_obj(const FusionCat& cat, const std::vector<Decomp>& leaves) {
    if (leaves.empty()) return cat.unit_obj();
    Decomp acc = leaves.back();
    for (size_t i = leaves.size() - 1; i-- > 0;) acc = tensor2(cat, leaves[i], acc);
    return acc;
}

FoldData fold_left_decode(const FusionCat& cat, const std::vector<Decomp>& leaves, int sector, int idx) {
    size_t n = leaves.size();
    FoldData fd;
    fd.leaf_sector.assign(n, -1);
    fd.leaf_inner.assign(n, 0);
    fd.mid_sector.assign(n, -1);
    fd.mu.assign(n, 0);
    std::vector<Decomp> partial(n);  // partial[i] = fold of leaves[0..i]
    partial[0] = leaves[0];
    for (size_t i = 1; i < n; ++i) partial[i] = tensor2(cat, partial[i - 1], leaves[i]);
    int cur_sector = sector, cur_idx = idx;
    for (size_t i = n; i-- > 1;) {
        T2Idx t = t2_decode(cat, partial[i - 1], leaves[i], cur_sector, cur_idx);
        fd.mid_sector[i] = cur_sector;
        fd.leaf_sector[i] = t.y;
        fd.leaf_inner[i] = t.j;
        fd.mu[i] = t.k;
        cur_sector = t.x;
        cur_idx = t.i;
    }
    fd.mid_sector[0] = cur_sector;
    fd.leaf_sector[0] = cur_sector;
    fd.leaf_inner[0] = cur_idx;
    return fd;
}

int fold_left_encode(const FusionCat& cat, const std::vector<Decomp>& leaves, const FoldData& fd) {
    size_t n = leaves.size();
    std::vector<Decomp> partial(n);
    partial[0] = leaves[0];
    for (size_t i = 1; i < n; ++i) partial[i] = tensor2(cat, partial[i - 1], leaves[i]);
    int idx = fd.leaf_inner[0];
    for (size_t i = 1; i < n; ++i)
        idx = t2_encode(cat, partial[i - 1], leaves[i], fd.mid_sector[i],
                        {fd.mid_sector[i - 1], idx, fd.leaf_sector[i], fd.leaf_inner[i], fd.mu[i]});
    return idx;
}

FoldData fold_right_decode(const FusionCat& cat, const std::vector<Decomp>& leaves, int sector, int idx) {
    size_t n = leaves.size();
    FoldData fd;
    fd.leaf_sector.assign(n, -1);
    fd.leaf_inner.assign(n, 0);
    fd.mid_sector.assign(n, -1);
    fd.mu.assign(n, 0);
    std::vector<Decomp> partial(n);  // partial[i] = fold of leaves[i..n-1]
    partial[n - 1] = leaves[n - 1];
    for (size_t i = n - 1; i-- > 0;) partial[i] = tensor2(cat, leaves[i], partial[i + 1]);
    int cur_sector = sector, cur_idx = idx;
    for (size_t i = 0; i + 1 < n; ++i) {
        T2Idx t = t2_decode(cat, leaves[i], partial[i + 1], cur_sector, cur_idx);
        fd.mid_sector[i] = cur_sector;
        fd.leaf_sector[i] = t.x;
        fd.leaf_inner[i] = t.i;
        fd.mu[i] = t.k;
        cur_sector = t.y;
        cur_idx = t.j;
    }
    fd.mid_sector[n - 1] = cur_sector;
    fd.leaf_sector[n - 1] = cur_sector;
    fd.leaf_inner[n - 1] = cur_idx;
    return fd;
}

int fold_right_encode(const FusionCat& cat, const std::vector<Decomp>& leaves, const FoldData& fd) {
    size_t n = leaves.size();
    std::vector<Decomp> partial(n);
    partial[n - 1] = leaves[n - 1];
    for (size_t i = n - 1; i-- > 0;) partial[i] = tensor2(cat, leaves[i], partial[i + 1]);
    int idx = fd.leaf_inner[n - 1];
    for (size_t i = n - 1; i-- > 0;)
        idx = t2_encode(cat, leaves[i], partial[i + 1], fd.mid_sector[i],
                        {fd.leaf_sector[i], fd.leaf_inner[i], fd.mid_sector[i + 1], idx, fd.mu[i]});
    return idx;
}

ProductT2Basis product_t2_correspondence(const FusionCat& prod, const FusionCat& c1, const FusionCat& c2,
                                         const Decomp& X1, const Decomp& Y1, const Decomp& X2, const Decomp& Y2,
                                         int z1, int z2) {
    int k2 = c2.count();
    // product decomps of the factor pairs
    auto pair_decomp = [&](const Decomp& A1, const Decomp& A2) {
        Decomp d(static_cast<size_t>(prod.count()), 0);
        for (int a1 = 0; a1 < c1.count(); ++a1)
            for (int a2 = 0; a2 < k2; ++a2)
                d[static_cast<size_t>(a1 * k2 + a2)] = A1[static_cast<size_t>(a1)] * A2[static_cast<size_t>(a2)];
        return d;
    };
    Decomp X = pair_decomp(X1, X2), Y = pair_decomp(Y1, Y2);
    int z = z1 * k2 + z2;
    Decomp XY = tensor2(prod, X, Y);
    ProductT2Basis out;
    out.dim2 = 0;
    {
        Decomp t2b = tensor2(c2, X2, Y2);
        out.dim2 = t2b[static_cast<size_t>(z2)];
    }
    int dim = XY[static_cast<size_t>(z)];
    out.kron.resize(static_cast<size_t>(dim));
    for (int idx = 0; idx < dim; ++idx) {
        T2Idx t = t2_decode(prod, X, Y, z, idx);
        int x1 = t.x / k2, x2 = t.x % k2, y1 = t.y / k2, y2 = t.y % k2;
        int i1 = t.i / std::max(1, X2[static_cast<size_t>(x2)]), i2 = t.i % std::max(1, X2[static_cast<size_t>(x2)]);
        int j1 = t.j / std::max(1, Y2[static_cast<size_t>(y2)]), j2 = t.j % std::max(1, Y2[static_cast<size_t>(y2)]);
        int n2 = c2.N(x2, y2, z2);
        int k1i = t.k / std::max(1, n2), k2i = t.k % std::max(1, n2);
        int idx1 = t2_encode(c1, X1, Y1, z1, {x1, i1, y1, j1, k1i});
        int idx2 = t2_encode(c2, X2, Y2, z2, {x2, i2, y2, j2, k2i});
        out.kron[static_cast<size_t>(idx)] = idx1 * out.dim2 + idx2;
    }
    return out;
}

}  // namespace defcat
