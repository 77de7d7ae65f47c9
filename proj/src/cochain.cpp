#include "defcat/cochain.hpp"

#include <atomic>
#include <map>
#include <thread>
#include <tuple>

namespace defcat {

namespace {

void par_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(threads, n);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) break;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

std::vector<Decomp> fobj_leaves(const MonFunctor& F, const std::vector<int>& tuple) {
    std::vector<Decomp> l;
    l.reserve(tuple.size());
    for (int a : tuple) l.push_back(F.obj(a));
    return l;
}

std::vector<Decomp> simple_leaves(const FusionCat& cat, const std::vector<int>& tuple) {
    std::vector<Decomp> l;
    l.reserve(tuple.size());
    for (int a : tuple) l.push_back(cat.simple_obj(a));
    return l;
}

PairBlocks<Scalar> mul_blocks(const Bimodule& M) {
    return [&M](int a, int x, int y) { return M.mul[static_cast<size_t>(a)][static_cast<size_t>(x)][static_cast<size_t>(y)]; };
}
PairBlocks<Scalar> mur_blocks(const Bimodule& M) {
    return [&M](int x, int b, int y) { return M.mur[static_cast<size_t>(x)][static_cast<size_t>(b)][static_cast<size_t>(y)]; };
}

ObjMap identity_objmap(const FusionCat& cat) {
    ObjMap id(static_cast<size_t>(cat.count()), std::vector<int>(static_cast<size_t>(cat.count()), 0));
    for (int z = 0; z < cat.count(); ++z) id[static_cast<size_t>(z)][static_cast<size_t>(z)] = 1;
    return id;
}

}  // namespace

int CochainSpace::tuple_index(const std::vector<int>& t) const {
    int k = F->src->count();
    int idx = 0;
    for (int a : t) idx = idx * k + a;
    return idx;
}

CochainSpace make_space(const MonFunctor& F, const Bimodule& M, int degree) {
    CochainSpace sp;
    sp.F = &F;
    sp.M = &M;
    sp.degree = degree;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    int k = C.count();
    int count = 1;
    for (int i = 0; i < degree; ++i) count *= k;
    sp.tuples.reserve(static_cast<size_t>(count));
    for (int t = 0; t < count; ++t) {
        std::vector<int> tup(static_cast<size_t>(degree));
        int v = t;
        for (int i = degree; i-- > 0;) {
            tup[static_cast<size_t>(i)] = v % k;
            v /= k;
        }
        sp.tuples.push_back(std::move(tup));
    }
    sp.total_dim = 0;
    for (const auto& tup : sp.tuples) {
        Decomp src = fold_left_obj(D, fobj_leaves(F, tup));
        Decomp cw = fold_right_obj(C, simple_leaves(C, tup));
        Decomp tgt = app_obj(D, M.objmap, cw);
        std::vector<int> offs(static_cast<size_t>(D.count()), 0);
        for (int x = 0; x < D.count(); ++x) {
            offs[static_cast<size_t>(x)] = sp.total_dim;
            sp.total_dim += src[static_cast<size_t>(x)] * tgt[static_cast<size_t>(x)];
        }
        sp.src_obj.push_back(std::move(src));
        sp.cword.push_back(std::move(cw));
        sp.tgt_obj.push_back(std::move(tgt));
        sp.offsets.push_back(std::move(offs));
    }
    return sp;
}

Cochain zero_cochain(const CochainSpace& sp) {
    Cochain c;
    c.degree = sp.degree;
    Scalar model = Scalar::zero(sp.F->dst->field);
    for (size_t t = 0; t < sp.tuples.size(); ++t) {
        std::vector<MatrixK> row;
        for (int x = 0; x < sp.F->dst->count(); ++x)
            row.push_back(MatrixK::zero(sp.tgt_obj[t][static_cast<size_t>(x)], sp.src_obj[t][static_cast<size_t>(x)], model));
        c.blocks.push_back(std::move(row));
    }
    return c;
}

std::vector<Scalar> vec(const CochainSpace& sp, const Cochain& c) {
    std::vector<Scalar> v(static_cast<size_t>(sp.total_dim), Scalar::zero(sp.F->dst->field));
    for (size_t t = 0; t < sp.tuples.size(); ++t)
        for (int x = 0; x < sp.F->dst->count(); ++x) {
            const MatrixK& m = c.blocks[t][static_cast<size_t>(x)];
            int off = sp.offsets[t][static_cast<size_t>(x)];
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) v[static_cast<size_t>(off + i * m.cols() + j)] = m.at(i, j);
        }
    return v;
}

Cochain unvec(const CochainSpace& sp, const std::vector<Scalar>& v) {
    Cochain c = zero_cochain(sp);
    for (size_t t = 0; t < sp.tuples.size(); ++t)
        for (int x = 0; x < sp.F->dst->count(); ++x) {
            MatrixK& m = c.blocks[t][static_cast<size_t>(x)];
            int off = sp.offsets[t][static_cast<size_t>(x)];
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m.at(i, j) = v[static_cast<size_t>(off + i * m.cols() + j)];
        }
    return c;
}

std::vector<BasisLabel> basis_labels(const CochainSpace& sp) {
    std::vector<BasisLabel> out;
    out.reserve(static_cast<size_t>(sp.total_dim));
    for (size_t t = 0; t < sp.tuples.size(); ++t)
        for (int x = 0; x < sp.F->dst->count(); ++x) {
            int rows = sp.tgt_obj[t][static_cast<size_t>(x)], cols = sp.src_obj[t][static_cast<size_t>(x)];
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) out.push_back({sp.tuples[t], x, i, j});
        }
    return out;
}

DecMorK eval_at_slot(const CochainSpace& sp, const Cochain& phi, const std::vector<int>& tuple, int pos,
                     const Decomp& Y) {
    const MonFunctor& F = *sp.F;
    const Bimodule& M = *sp.M;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    int n = sp.degree;

    std::vector<Decomp> dleaves = fobj_leaves(F, tuple);
    dleaves[static_cast<size_t>(pos)] = app_obj(D, F.objmap, Y);
    std::vector<Decomp> cleaves = simple_leaves(C, tuple);
    cleaves[static_cast<size_t>(pos)] = Y;

    DecMorK r;
    r.src = fold_left_obj(D, dleaves);
    Decomp cw = fold_right_obj(C, cleaves);
    r.dst = app_obj(D, M.objmap, cw);

    for (int x = 0; x < D.count(); ++x) {
        MatrixK m = MatrixK::zero(r.dst[static_cast<size_t>(x)], r.src[static_cast<size_t>(x)], model);
        for (int col = 0; col < m.cols(); ++col) {
            FoldData fd = fold_left_decode(D, dleaves, x, col);
            AppIdx slot = app_decode(F.objmap, Y, fd.leaf_sector[static_cast<size_t>(pos)],
                                     fd.leaf_inner[static_cast<size_t>(pos)]);
            int e = slot.b, t_in = slot.t;
            std::vector<int> tuple_e = tuple;
            tuple_e[static_cast<size_t>(pos)] = e;
            int tid = sp.tuple_index(tuple_e);
            const MatrixK& blk = phi.blocks[static_cast<size_t>(tid)][static_cast<size_t>(x)];
            if (blk.rows() == 0 || blk.cols() == 0) continue;
            FoldData fe = fd;
            fe.leaf_inner[static_cast<size_t>(pos)] = slot.i;
            int cprime = fold_left_encode(D, fobj_leaves(F, tuple_e), fe);
            Decomp cw_e = fold_right_obj(C, simple_leaves(C, tuple_e));
            for (int rprime = 0; rprime < blk.rows(); ++rprime) {
                const Scalar& v = blk.at(rprime, cprime);
                if (v.is_zero()) continue;
                AppIdx mrow = app_decode(M.objmap, cw_e, x, rprime);
                FoldData fr = fold_right_decode(C, simple_leaves(C, tuple_e), mrow.b, mrow.t);
                fr.leaf_inner[static_cast<size_t>(pos)] = t_in;
                int trc2 = fold_right_encode(C, cleaves, fr);
                int row = app_encode(M.objmap, cw, x, {mrow.b, trc2, mrow.i});
                m.at(row, col) += v;
            }
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Coboundary
// ---------------------------------------------------------------------------

namespace {

struct FaceContribution {
    int tuple_id = 0;
    int sector = 0;  // sector of the source block coupled through
    std::vector<std::vector<int>> row_of, col_of;  // [couple key][prime index]
};

struct FacePipeline {
    Scalar sign = Scalar();
    DecMorK pre;
    DecMorK post;
    std::vector<FaceContribution> contribs;
    std::vector<int> contrib_sector;  // ambient sector of each contribution
};

// Decode callback fills (tuple_id, block sector, couple key, prime index).
using DecodeFn = std::function<void(int, int, int&, int&, long&, int&)>;

void key_tables(const FusionCat& D, FacePipeline& fp, const Decomp& embed_src, const Decomp& embed_dst,
                const DecodeFn& col_decode, const DecodeFn& row_decode) {
    std::map<std::pair<long, int>, size_t> lookup;  // (tuple*K+sector, ambient x) -> contribution index
    std::map<std::pair<long, int>, std::map<long, int>> keymap;
    for (int x = 0; x < D.count(); ++x) {
        for (int col = 0; col < embed_src[static_cast<size_t>(x)]; ++col) {
            int tid, sec, cp;
            long key;
            col_decode(x, col, tid, sec, key, cp);
            std::pair<long, int> lk{static_cast<long>(tid) * D.count() + sec, x};
            if (!lookup.count(lk)) {
                lookup[lk] = fp.contribs.size();
                fp.contribs.push_back({tid, sec, {}, {}});
                fp.contrib_sector.push_back(x);
            }
            FaceContribution& fc = fp.contribs[lookup[lk]];
            auto& km = keymap[lk];
            if (!km.count(key)) {
                km[key] = static_cast<int>(km.size());
                fc.row_of.emplace_back();
                fc.col_of.emplace_back();
            }
            int dense = km[key];
            auto& cv = fc.col_of[static_cast<size_t>(dense)];
            if (static_cast<int>(cv.size()) <= cp) cv.resize(static_cast<size_t>(cp) + 1, -1);
            cv[static_cast<size_t>(cp)] = col;
        }
        for (int row = 0; row < embed_dst[static_cast<size_t>(x)]; ++row) {
            int tid, sec, rp;
            long key;
            row_decode(x, row, tid, sec, key, rp);
            std::pair<long, int> lk{static_cast<long>(tid) * D.count() + sec, x};
            auto it = lookup.find(lk);
            if (it == lookup.end()) continue;
            FaceContribution& fc = fp.contribs[it->second];
            auto& km = keymap[lk];
            auto kt = km.find(key);
            if (kt == km.end()) continue;
            auto& rv = fc.row_of[static_cast<size_t>(kt->second)];
            if (static_cast<int>(rv.size()) <= rp) rv.resize(static_cast<size_t>(rp) + 1, -1);
            rv[static_cast<size_t>(rp)] = row;
        }
    }
}

std::vector<FacePipeline> face_pipelines(const CochainSpace& sp, const std::vector<int>& btuple) {
    const MonFunctor& F = *sp.F;
    const Bimodule& M = *sp.M;
    const MonFunctor& G = *M.right;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    int n = sp.degree;
    std::vector<FacePipeline> out;

    std::vector<Decomp> dleaves = fobj_leaves(F, btuple);
    std::vector<Decomp> cleaves = simple_leaves(C, btuple);
    PTree lc = PTree::left_comb(n + 1);
    ObjMap idmapC = identity_objmap(C);
    (void)idmapC;

    // ---- face 0
    {
        FacePipeline fp;
        fp.sign = Scalar::one(D.field);
        std::vector<int> tail(btuple.begin() + 1, btuple.end());
        int tid = sp.tuple_index(tail);
        Decomp Fb0 = F.obj(btuple[0]);
        Decomp src_tail = fold_left_obj(D, std::vector<Decomp>(dleaves.begin() + 1, dleaves.end()));
        Decomp cw_tail = fold_right_obj(C, std::vector<Decomp>(cleaves.begin() + 1, cleaves.end()));
        Decomp tgt_tail = app_obj(D, M.objmap, cw_tail);
        if (n == 0) {
            fp.pre = dec_invert(D, dec_runit(D, Fb0));
        } else {
            PTree grouped = PTree::pair(PTree::leaf_node(0), PTree::left_comb(n, 1));
            fp.pre = tree_reassoc(D, dleaves, lc, grouped);
        }
        DecMorK post = pairing_prolong(D, C, F.objmap, M.objmap, M.objmap, mul_blocks(M),
                                       C.simple_obj(btuple[0]), cw_tail, model);
        if (n == 0) post = dec_compose(app_mor(D, M.objmap, dec_runit(C, C.simple_obj(btuple[0])), model), post);
        fp.post = std::move(post);
        Decomp embed_src = tensor2(D, Fb0, src_tail);
        Decomp embed_dst = tensor2(D, Fb0, tgt_tail);
        key_tables(
            D, fp, embed_src, embed_dst,
            [&](int x, int col, int& t, int& sec, long& key, int& cp) {
                T2Idx u = t2_decode(D, Fb0, src_tail, x, col);
                t = tid;
                sec = u.y;
                key = (static_cast<long>(u.x) * 100000 + u.i) * 1000 + u.k;
                cp = u.j;
            },
            [&](int x, int row, int& t, int& sec, long& key, int& rp) {
                T2Idx u = t2_decode(D, Fb0, tgt_tail, x, row);
                t = tid;
                sec = u.y;
                key = (static_cast<long>(u.x) * 100000 + u.i) * 1000 + u.k;
                rp = u.j;
            });
        out.push_back(std::move(fp));
    }

    // ---- middle faces
    for (int j = 1; j <= n; ++j) {
        FacePipeline fp;
        fp.sign = (j % 2 == 0) ? Scalar::one(D.field) : -Scalar::one(D.field);
        std::vector<PTree> slots;
        for (int i = 0; i <= n; ++i) {
            if (i == j - 1) {
                slots.push_back(PTree::pair(PTree::leaf_node(j - 1), PTree::leaf_node(j)));
                ++i;
            } else {
                slots.push_back(PTree::leaf_node(i));
            }
        }
        PTree grouped = slots[0];
        for (size_t i = 1; i < slots.size(); ++i) grouped = PTree::pair(grouped, slots[i]);
        DecMorK reasD = tree_reassoc(D, dleaves, lc, grouped);
        std::vector<int> path;
        int spos = j - 1;
        int slot_count = n;
        for (int step = 0; step < slot_count - 1 - spos; ++step) path.push_back(0);
        if (spos > 0) path.push_back(1);
        DecMorK fuse = pairing_prolong(D, C, F.objmap, F.objmap, F.objmap, ftilde_blocks<Scalar>(F, 0),
                                       C.simple_obj(btuple[static_cast<size_t>(j - 1)]),
                                       C.simple_obj(btuple[static_cast<size_t>(j)]), model);
        fp.pre = dec_compose(lift_at(D, dleaves, grouped, path, fuse, model), reasD);

        PTree cgrouped = slots.back();
        for (size_t i = slots.size() - 1; i-- > 0;) cgrouped = PTree::pair(slots[i], cgrouped);
        fp.post = app_mor(D, M.objmap, tree_reassoc(C, cleaves, cgrouped, PTree::right_comb(n + 1)), model);

        Decomp Y = tensor2(C, C.simple_obj(btuple[static_cast<size_t>(j - 1)]),
                           C.simple_obj(btuple[static_cast<size_t>(j)]));
        std::vector<int> base;
        for (int i = 0; i <= n; ++i)
            if (i != j) base.push_back(btuple[static_cast<size_t>(i)]);
        // slot position j-1 in `base` holds the fused pair
        std::vector<Decomp> edleaves, ecleaves;
        for (int i = 0; i < n; ++i) {
            if (i == j - 1) {
                edleaves.push_back(app_obj(D, F.objmap, Y));
                ecleaves.push_back(Y);
            } else {
                edleaves.push_back(F.obj(base[static_cast<size_t>(i)]));
                ecleaves.push_back(C.simple_obj(base[static_cast<size_t>(i)]));
            }
        }
        Decomp embed_src = fold_left_obj(D, edleaves);
        Decomp ecw = fold_right_obj(C, ecleaves);
        Decomp embed_dst = app_obj(D, M.objmap, ecw);
        key_tables(
            D, fp, embed_src, embed_dst,
            [&](int x, int col, int& t, int& sec, long& key, int& cp) {
                FoldData fd = fold_left_decode(D, edleaves, x, col);
                AppIdx slot = app_decode(F.objmap, Y, fd.leaf_sector[static_cast<size_t>(j - 1)],
                                         fd.leaf_inner[static_cast<size_t>(j - 1)]);
                std::vector<int> te = base;
                te[static_cast<size_t>(j - 1)] = slot.b;
                t = sp.tuple_index(te);
                sec = x;
                key = slot.t;
                FoldData fe = fd;
                fe.leaf_inner[static_cast<size_t>(j - 1)] = slot.i;
                cp = fold_left_encode(D, fobj_leaves(F, te), fe);
            },
            [&](int x, int row, int& t, int& sec, long& key, int& rp) {
                AppIdx mrow = app_decode(M.objmap, ecw, x, row);
                FoldData fr = fold_right_decode(C, ecleaves, mrow.b, mrow.t);
                int e = fr.leaf_sector[static_cast<size_t>(j - 1)];
                int t_in = fr.leaf_inner[static_cast<size_t>(j - 1)];
                std::vector<int> te = base;
                te[static_cast<size_t>(j - 1)] = e;
                t = sp.tuple_index(te);
                sec = x;
                key = t_in;
                FoldData fe = fr;
                fe.leaf_inner[static_cast<size_t>(j - 1)] = 0;
                Decomp cw_e = fold_right_obj(C, simple_leaves(C, te));
                int trc = fold_right_encode(C, simple_leaves(C, te), fe);
                rp = app_encode(M.objmap, cw_e, x, {mrow.b, trc, mrow.i});
            });
        out.push_back(std::move(fp));
    }

    // ---- face n+1
    {
        FacePipeline fp;
        fp.sign = ((n + 1) % 2 == 0) ? Scalar::one(D.field) : -Scalar::one(D.field);
        std::vector<int> front(btuple.begin(), btuple.end() - 1);
        int tid = sp.tuple_index(front);
        Decomp Fbn = F.obj(btuple[static_cast<size_t>(n)]);
        Decomp src_front = fold_left_obj(D, std::vector<Decomp>(dleaves.begin(), dleaves.end() - 1));
        Decomp cw_front = fold_right_obj(C, std::vector<Decomp>(cleaves.begin(), cleaves.end() - 1));
        Decomp tgt_front = app_obj(D, M.objmap, cw_front);
        if (n == 0) {
            fp.pre = dec_invert(D, dec_lunit(D, Fbn));
        } else {
            fp.pre = dec_identity(fold_left_obj(D, dleaves), model);
        }
        DecMorK post = pairing_prolong(D, C, M.objmap, G.objmap, M.objmap, mur_blocks(M), cw_front,
                                       C.simple_obj(btuple[static_cast<size_t>(n)]), model);
        if (n == 0) {
            post = dec_compose(app_mor(D, M.objmap, dec_lunit(C, C.simple_obj(btuple[0])), model), post);
        } else if (n >= 2) {
            PTree src_tree = PTree::pair(PTree::right_comb(n, 0), PTree::leaf_node(n));
            post = dec_compose(
                app_mor(D, M.objmap, tree_reassoc(C, cleaves, src_tree, PTree::right_comb(n + 1)), model), post);
        }
        fp.post = std::move(post);
        Decomp embed_src = tensor2(D, src_front, Fbn);
        Decomp embed_dst = tensor2(D, tgt_front, Fbn);
        key_tables(
            D, fp, embed_src, embed_dst,
            [&](int x, int col, int& t, int& sec, long& key, int& cp) {
                T2Idx u = t2_decode(D, src_front, Fbn, x, col);
                t = tid;
                sec = u.x;
                key = (static_cast<long>(u.y) * 100000 + u.j) * 1000 + u.k;
                cp = u.i;
            },
            [&](int x, int row, int& t, int& sec, long& key, int& rp) {
                T2Idx u = t2_decode(D, tgt_front, Fbn, x, row);
                t = tid;
                sec = u.x;
                key = (static_cast<long>(u.y) * 100000 + u.j) * 1000 + u.k;
                rp = u.i;
            });
        out.push_back(std::move(fp));
    }
    return out;
}

}  // namespace

MatrixK delta_matrix(const CochainSpace& sp_n, const CochainSpace& sp_n1, int threads) {
    const FusionCat& D = *sp_n.F->dst;
    Scalar model = Scalar::zero(D.field);
    MatrixK Dmat = MatrixK::zero(sp_n1.total_dim, sp_n.total_dim, model);
    int tuples = static_cast<int>(sp_n1.tuples.size());
    par_for(tuples, threads, [&](int tb) {
        const std::vector<int>& btuple = sp_n1.tuples[static_cast<size_t>(tb)];
        auto pipelines = face_pipelines(sp_n, btuple);
        for (const auto& fp : pipelines) {
            for (size_t ci = 0; ci < fp.contribs.size(); ++ci) {
                const FaceContribution& fc = fp.contribs[ci];
                int x = fp.contrib_sector[ci];
                const MatrixK& P = fp.post.m[static_cast<size_t>(x)];
                const MatrixK& Q = fp.pre.m[static_cast<size_t>(x)];
                int src_rows = sp_n.tgt_obj[static_cast<size_t>(fc.tuple_id)][static_cast<size_t>(fc.sector)];
                int src_cols = sp_n.src_obj[static_cast<size_t>(fc.tuple_id)][static_cast<size_t>(fc.sector)];
                int src_off = sp_n.offsets[static_cast<size_t>(fc.tuple_id)][static_cast<size_t>(fc.sector)];
                int tgt_off = sp_n1.offsets[static_cast<size_t>(tb)][static_cast<size_t>(x)];
                int tgt_cols = sp_n1.src_obj[static_cast<size_t>(tb)][static_cast<size_t>(x)];
                for (size_t key = 0; key < fc.row_of.size(); ++key) {
                    const auto& rows = fc.row_of[key];
                    const auto& cols = fc.col_of[key];
                    for (int rp = 0; rp < src_rows && rp < static_cast<int>(rows.size()); ++rp) {
                        int erow = rows[static_cast<size_t>(rp)];
                        if (erow < 0) continue;
                        for (int cp = 0; cp < src_cols && cp < static_cast<int>(cols.size()); ++cp) {
                            int ecol = cols[static_cast<size_t>(cp)];
                            if (ecol < 0) continue;
                            int coord = src_off + rp * src_cols + cp;
                            for (int i = 0; i < P.rows(); ++i) {
                                const Scalar& pv = P.at(i, erow);
                                if (pv.is_zero()) continue;
                                for (int jj = 0; jj < Q.cols(); ++jj) {
                                    const Scalar& qv = Q.at(ecol, jj);
                                    if (qv.is_zero()) continue;
                                    Dmat.at(tgt_off + i * tgt_cols + jj, coord) += fp.sign * pv * qv;
                                }
                            }
                        }
                    }
                }
            }
        }
    });
    return Dmat;
}

BuiltComplex build_tower(const MonFunctor& F, const Bimodule& M, int maxdeg, int threads) {
    BuiltComplex bc;
    std::vector<int> dims;
    for (int n = 0; n <= maxdeg; ++n) {
        bc.spaces.push_back(make_space(F, M, n));
        dims.push_back(bc.spaces.back().total_dim);
    }
    std::vector<MatrixK> diffs;
    for (int n = 0; n < maxdeg; ++n)
        diffs.push_back(delta_matrix(bc.spaces[static_cast<size_t>(n)], bc.spaces[static_cast<size_t>(n + 1)], threads));
    bc.complex = GradedComplex(F.dst->field, 0, dims, diffs);
    return bc;
}

Cochain apply_delta(const BuiltComplex& bc, const Cochain& c) {
    int n = c.degree;
    const MatrixK d = bc.complex.diff(n);
    auto v = vec(bc.spaces[static_cast<size_t>(n)], c);
    auto w = d.apply(v);
    return unvec(bc.spaces[static_cast<size_t>(n + 1)], w);
}

CategoryComplex build_category_tower(const FusionCat& cat, int maxdeg, int threads) {
    CategoryComplex cc;
    cc.F = std::make_shared<MonFunctor>(identity_functor(cat));
    cc.M = std::make_shared<Bimodule>(regular_bimodule(*cc.F));
    cc.tower = build_tower(*cc.F, *cc.M, maxdeg, threads);
    return cc;
}

}  // namespace defcat

// ---------------------------------------------------------------------------
// Products, chain maps, obstructions
// ---------------------------------------------------------------------------

namespace defcat {

namespace {

DecMorK cochain_block_mor(const CochainSpace& sp, const Cochain& c, int tid) {
    DecMorK r;
    r.src = sp.src_obj[static_cast<size_t>(tid)];
    r.dst = sp.tgt_obj[static_cast<size_t>(tid)];
    r.m = c.blocks[static_cast<size_t>(tid)];
    return r;
}

void require_regular(const CochainSpace& sp, const char* what) {
    if (sp.M->objmap != sp.F->objmap)
        throw KindMismatch(std::string(what) + " requires coefficients in the functor itself");
}

// Iterated structure maps along the left comb:
// F(a1) (x) ... (x) F(an)  ->  F(lc-word).
DecMorK fhat_left_chain(const MonFunctor& F, const std::vector<int>& tuple) {
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    if (tuple.empty()) return f0_mor(F);
    auto ft = ftilde_blocks<Scalar>(F, 0);
    DecMorK acc = dec_identity(F.obj(tuple[0]), model);
    Decomp partial = C.simple_obj(tuple[0]);
    for (size_t i = 1; i < tuple.size(); ++i) {
        DecMorK step = pairing_prolong(D, C, F.objmap, F.objmap, F.objmap, ft, partial, C.simple_obj(tuple[i]), model);
        acc = dec_compose(step, dec_tensor(D, acc, dec_identity(F.obj(tuple[i]), model), model));
        partial = tensor2(C, partial, C.simple_obj(tuple[i]));
    }
    return acc;
}

// Iterated structure maps along the right comb:
// fold-right of the F(a_i)  ->  F(rc-word).
DecMorK fhat_right_chain(const MonFunctor& F, const std::vector<int>& tuple) {
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    if (tuple.empty()) return f0_mor(F);
    auto ft = ftilde_blocks<Scalar>(F, 0);
    size_t n = tuple.size();
    DecMorK acc = dec_identity(F.obj(tuple[n - 1]), model);
    Decomp partial = C.simple_obj(tuple[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        DecMorK step = pairing_prolong(D, C, F.objmap, F.objmap, F.objmap, ft, C.simple_obj(tuple[i]), partial, model);
        acc = dec_compose(step, dec_tensor(D, dec_identity(F.obj(tuple[i]), model), acc, model));
        partial = tensor2(C, C.simple_obj(tuple[i]), partial);
    }
    return acc;
}

// Category cochain evaluated at a tuple of decomposed objects:
// fold-left(Ys) -> fold-right(Ys).
DecMorK eval_at_decomps(const CochainSpace& sp, const Cochain& psi, const std::vector<Decomp>& Ys) {
    const FusionCat& D = *sp.F->src;  // category complex: src == dst
    Scalar model = Scalar::zero(D.field);
    DecMorK r;
    if (Ys.empty()) {
        r.src = r.dst = D.unit_obj();
        r.m.clear();
        for (int x = 0; x < D.count(); ++x) {
            MatrixK m = MatrixK::zero(x == D.unit ? 1 : 0, x == D.unit ? 1 : 0, model);
            if (x == D.unit) m.at(0, 0) = psi.blocks[0][static_cast<size_t>(D.unit)].at(0, 0);
            r.m.push_back(std::move(m));
        }
        return r;
    }
    r.src = fold_left_obj(D, Ys);
    r.dst = fold_right_obj(D, Ys);
    size_t n = Ys.size();
    for (int x = 0; x < D.count(); ++x) {
        MatrixK m = MatrixK::zero(r.dst[static_cast<size_t>(x)], r.src[static_cast<size_t>(x)], model);
        for (int col = 0; col < m.cols(); ++col) {
            FoldData fd = fold_left_decode(D, Ys, x, col);
            std::vector<int> tup(fd.leaf_sector.begin(), fd.leaf_sector.end());
            int tid = sp.tuple_index(tup);
            const MatrixK& blk = psi.blocks[static_cast<size_t>(tid)][static_cast<size_t>(x)];
            if (blk.rows() == 0 || blk.cols() == 0) continue;
            FoldData fs = fd;
            for (size_t i = 0; i < n; ++i) fs.leaf_inner[i] = 0;
            int cp = fold_left_encode(D, simple_leaves(D, tup), fs);
            for (int rp = 0; rp < blk.rows(); ++rp) {
                const Scalar& v = blk.at(rp, cp);
                if (v.is_zero()) continue;
                FoldData fr = fold_right_decode(D, simple_leaves(D, tup), x, rp);
                for (size_t i = 0; i < n; ++i) fr.leaf_inner[i] = fd.leaf_inner[i];
                m.at(fold_right_encode(D, Ys, fr), col) += v;
            }
        }
        r.m.push_back(std::move(m));
    }
    return r;
}

Cochain from_block_fn(const CochainSpace& sp, const std::function<DecMorK(int)>& fn) {
    Cochain c = zero_cochain(sp);
    for (size_t t = 0; t < sp.tuples.size(); ++t) {
        DecMorK b = fn(static_cast<int>(t));
        c.blocks[t] = b.m;
    }
    return c;
}

AssocProvider<Scalar> cochain_assoc_provider(const CochainSpace& sp3, const Cochain& c) {
    return [&sp3, &c](int a, int b, int cc, int d) {
        std::vector<int> t{a, b, cc};
        return c.blocks[static_cast<size_t>(sp3.tuple_index(t))][static_cast<size_t>(d)];
    };
}

PairBlocks<Scalar> cochain_pair_blocks(const CochainSpace& sp2, const Cochain& c) {
    return [&sp2, &c](int a, int b, int x) {
        std::vector<int> t{a, b};
        return c.blocks[static_cast<size_t>(sp2.tuple_index(t))][static_cast<size_t>(x)];
    };
}

}  // namespace

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    Cochain r = a;
    for (size_t t = 0; t < r.blocks.size(); ++t)
        for (size_t x = 0; x < r.blocks[t].size(); ++x) r.blocks[t][x] = r.blocks[t][x] + b.blocks[t][x];
    return r;
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
    Cochain r = a;
    for (size_t t = 0; t < r.blocks.size(); ++t)
        for (size_t x = 0; x < r.blocks[t].size(); ++x) r.blocks[t][x] = r.blocks[t][x] - b.blocks[t][x];
    return r;
}

Cochain cochain_scale(const Cochain& a, const Scalar& s) {
    Cochain r = a;
    for (auto& row : r.blocks)
        for (auto& m : row) m = m.scaled(s);
    return r;
}

bool cochain_is_zero(const Cochain& a) {
    for (const auto& row : a.blocks)
        for (const auto& m : row)
            if (!m.is_zero()) return false;
    return true;
}

Cochain cup_product(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h) {
    if (spg.F != sph.F || spg.M != sph.M) throw KindMismatch("cup product needs matching complexes");
    require_regular(spg, "cup product");
    int n = spg.degree, m = sph.degree;
    if (n < 1 || m < 1) throw KindMismatch("cup product implemented for degrees >= 1");
    const MonFunctor& F = *spg.F;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    auto ft = ftilde_blocks<Scalar>(F, 0);
    CochainSpace out_sp = make_space(F, *spg.M, n + m);
    return from_block_fn(out_sp, [&](int tid) {
        const std::vector<int>& tup = out_sp.tuples[static_cast<size_t>(tid)];
        std::vector<int> front(tup.begin(), tup.begin() + n), back(tup.begin() + n, tup.end());
        std::vector<Decomp> dleaves = fobj_leaves(F, tup);
        std::vector<Decomp> cleaves = simple_leaves(C, tup);
        DecMorK pre = tree_reassoc(D, dleaves, PTree::left_comb(n + m),
                                   PTree::pair(PTree::left_comb(n, 0), PTree::left_comb(m, n)));
        DecMorK mid = dec_tensor(D, cochain_block_mor(spg, g, spg.tuple_index(front)),
                                 cochain_block_mor(sph, h, sph.tuple_index(back)), model);
        Decomp Y1 = fold_right_obj(C, std::vector<Decomp>(cleaves.begin(), cleaves.begin() + n));
        Decomp Y2 = fold_right_obj(C, std::vector<Decomp>(cleaves.begin() + n, cleaves.end()));
        DecMorK fuse = pairing_prolong(D, C, F.objmap, F.objmap, F.objmap, ft, Y1, Y2, model);
        DecMorK post = app_mor(D, F.objmap,
                               tree_reassoc(C, cleaves, PTree::pair(PTree::right_comb(n, 0), PTree::right_comb(m, n)),
                                            PTree::right_comb(n + m)),
                               model);
        return dec_compose(post, dec_compose(fuse, dec_compose(mid, pre)));
    });
}

Cochain prelie_component(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h,
                         int slot) {
    if (spg.F != sph.F || spg.M != sph.M) throw KindMismatch("composition product needs matching complexes");
    require_regular(spg, "composition product");
    int m = spg.degree, n = sph.degree;
    if (m < 1 || n < 1) throw KindMismatch("composition product implemented for degrees >= 1");
    if (slot < 0 || slot >= m) throw IndexOutOfRange();
    const MonFunctor& F = *spg.F;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    CochainSpace out_sp = make_space(F, *spg.M, m + n - 1);
    return from_block_fn(out_sp, [&](int tid) {
        const std::vector<int>& tup = out_sp.tuples[static_cast<size_t>(tid)];
        std::vector<int> block(tup.begin() + slot, tup.begin() + slot + n);
        std::vector<int> gtuple;
        for (int i = 0; i < slot; ++i) gtuple.push_back(tup[static_cast<size_t>(i)]);
        gtuple.push_back(0);  // slot placeholder
        for (int i = slot + n; i < m + n - 1; ++i) gtuple.push_back(tup[static_cast<size_t>(i)]);

        std::vector<Decomp> dleaves = fobj_leaves(F, tup);
        std::vector<Decomp> cleaves = simple_leaves(C, tup);
        // group the inserted block on the D side
        std::vector<PTree> slots;
        std::vector<PTree> cslots;
        for (int s = 0, leaf = 0; s < m; ++s) {
            if (s == slot) {
                slots.push_back(PTree::left_comb(n, leaf));
                cslots.push_back(PTree::right_comb(n, leaf));
                leaf += n;
            } else {
                slots.push_back(PTree::leaf_node(leaf));
                cslots.push_back(PTree::leaf_node(leaf));
                ++leaf;
            }
        }
        PTree T = slots[0];
        for (size_t s = 1; s < slots.size(); ++s) T = PTree::pair(T, slots[s]);
        PTree CT = cslots.back();
        for (size_t s = cslots.size() - 1; s-- > 0;) CT = PTree::pair(cslots[s], CT);

        DecMorK pre = tree_reassoc(D, dleaves, PTree::left_comb(m + n - 1), T);
        DecMorK hm = cochain_block_mor(sph, h, sph.tuple_index(block));
        DecMorK mid = slot == 0 ? hm : dec_identity(F.obj(gtuple[0]), model);
        for (int s = 1; s < m; ++s) {
            DecMorK piece = (s == slot) ? hm : dec_identity(F.obj(gtuple[static_cast<size_t>(s)]), model);
            mid = dec_tensor(D, mid, piece, model);
        }
        Decomp Y = fold_right_obj(C, std::vector<Decomp>(cleaves.begin() + slot, cleaves.begin() + slot + n));
        DecMorK geval = eval_at_slot(spg, g, gtuple, slot, Y);
        DecMorK post = app_mor(D, F.objmap, tree_reassoc(C, cleaves, CT, PTree::right_comb(m + n - 1)), model);
        return dec_compose(post, dec_compose(geval, dec_compose(mid, pre)));
    });
}

Cochain composition_product(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h) {
    int m = spg.degree, n = sph.degree;
    const Field& f = spg.F->dst->field;
    Cochain acc = prelie_component(spg, g, sph, h, 0);
    for (int i = 1; i < m; ++i) {
        Cochain c = prelie_component(spg, g, sph, h, i);
        bool neg = (n * i) % 2 == 1;
        acc = neg ? cochain_sub(acc, c) : cochain_add(acc, c);
    }
    (void)f;
    return acc;
}

Cochain bracket(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h) {
    int m = spg.degree, n = sph.degree;
    Cochain gh = composition_product(spg, g, sph, h);
    Cochain hg = composition_product(sph, h, spg, g);
    bool neg = ((m - 1) * (n - 1)) % 2 == 1;
    return neg ? cochain_add(gh, hg) : cochain_sub(gh, hg);
}

MatrixK chain_map_F_of(const CochainSpace& spc, const CochainSpace& spf) {
    const MonFunctor& F = *spf.F;
    const FusionCat& C = *F.src;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    if (spc.degree != spf.degree) throw KindMismatch("degree mismatch in ceil(F(-))");
    MatrixK out = MatrixK::zero(spf.total_dim, spc.total_dim, model);
    for (size_t t = 0; t < spc.tuples.size(); ++t) {
        const std::vector<int>& tup = spc.tuples[t];
        DecMorK chain = fhat_left_chain(F, tup);
        for (int x = 0; x < C.count(); ++x) {
            int rows = spc.tgt_obj[t][static_cast<size_t>(x)], cols = spc.src_obj[t][static_cast<size_t>(x)];
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) {
                    Cochain e;  // elementary block as a one-tuple morphism
                    DecMorK chi;
                    chi.src = spc.src_obj[t];
                    chi.dst = spc.tgt_obj[t];
                    for (int z = 0; z < C.count(); ++z)
                        chi.m.push_back(MatrixK::zero(spc.tgt_obj[t][static_cast<size_t>(z)],
                                                      spc.src_obj[t][static_cast<size_t>(z)], model));
                    chi.m[static_cast<size_t>(x)].at(i, j) = Scalar::one(C.field);
                    DecMorK img = dec_compose(app_mor(D, F.objmap, chi, model), chain);
                    int col_coord = spc.offsets[t][static_cast<size_t>(x)] + i * cols + j;
                    for (int y = 0; y < D.count(); ++y) {
                        const MatrixK& mm = img.m[static_cast<size_t>(y)];
                        int tcols = spf.src_obj[t][static_cast<size_t>(y)];
                        int toff = spf.offsets[t][static_cast<size_t>(y)];
                        for (int r = 0; r < mm.rows(); ++r)
                            for (int cc = 0; cc < mm.cols(); ++cc)
                                if (!mm.at(r, cc).is_zero()) out.at(toff + r * tcols + cc, col_coord) = mm.at(r, cc);
                    }
                }
        }
    }
    return out;
}

MatrixK chain_map_restriction(const CochainSpace& spd, const CochainSpace& spf) {
    const MonFunctor& F = *spf.F;
    const FusionCat& D = *F.dst;
    Scalar model = Scalar::zero(D.field);
    if (spd.degree != spf.degree) throw KindMismatch("degree mismatch in restriction");
    MatrixK out = MatrixK::zero(spf.total_dim, spd.total_dim, model);
    for (size_t t = 0; t < spf.tuples.size(); ++t) {
        const std::vector<int>& tup = spf.tuples[t];
        std::vector<Decomp> Ys = fobj_leaves(F, tup);
        DecMorK chain = fhat_right_chain(F, tup);
        // evaluate each elementary of X^n(D) at the decomposed tuple
        for (size_t s = 0; s < spd.tuples.size(); ++s)
            for (int x = 0; x < D.count(); ++x) {
                int rows = spd.tgt_obj[s][static_cast<size_t>(x)], cols = spd.src_obj[s][static_cast<size_t>(x)];
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) {
                        Cochain e = zero_cochain(spd);
                        e.blocks[s][static_cast<size_t>(x)].at(i, j) = Scalar::one(D.field);
                        DecMorK img = dec_compose(chain, eval_at_decomps(spd, e, Ys));
                        if (img.is_zero()) continue;
                        int col_coord = spd.offsets[s][static_cast<size_t>(x)] + i * cols + j;
                        for (int y = 0; y < D.count(); ++y) {
                            const MatrixK& mm = img.m[static_cast<size_t>(y)];
                            int tcols = spf.src_obj[t][static_cast<size_t>(y)];
                            int toff = spf.offsets[t][static_cast<size_t>(y)];
                            for (int r = 0; r < mm.rows(); ++r)
                                for (int cc = 0; cc < mm.cols(); ++cc)
                                    if (!mm.at(r, cc).is_zero())
                                        out.at(toff + r * tcols + cc, col_coord) += mm.at(r, cc);
                        }
                    }
            }
    }
    return out;
}

namespace {

// Split a Deligne-product fold index into factor fold data.
void split_fold(const FusionCat& prod, const FusionCat& c1, const FusionCat& c2, const FoldData& fd,
                FoldData& f1, FoldData& f2) {
    int k2 = c2.count();
    size_t n = fd.leaf_sector.size();
    f1 = f2 = fd;
    for (size_t i = 0; i < n; ++i) {
        f1.leaf_sector[i] = fd.leaf_sector[i] / k2;
        f2.leaf_sector[i] = fd.leaf_sector[i] % k2;
        f1.leaf_inner[i] = 0;
        f2.leaf_inner[i] = 0;
        f1.mid_sector[i] = fd.mid_sector[i] / k2;
        f2.mid_sector[i] = fd.mid_sector[i] % k2;
    }
    for (size_t i = 0; i < n; ++i) f1.mu[i] = f2.mu[i] = 0;
    (void)prod;
}

}  // namespace

MatrixK diagonal_matrix(const CochainSpace& spc, const FusionCat& cat, const FusionCat& prod,
                        const CochainSpace& spp) {
    int k2 = cat.count();
    Scalar model = Scalar::zero(cat.field);
    int n = spc.degree;
    MatrixK out = MatrixK::zero(spp.total_dim, spc.total_dim, model);
    // identity cochain blocks of the factor (lc -> rc reassociators)
    auto id_block = [&](const std::vector<int>& tup) {
        return tree_reassoc(cat, simple_leaves(cat, tup), PTree::left_comb(n), PTree::right_comb(n));
    };
    for (size_t pt = 0; pt < spp.tuples.size(); ++pt) {
        const std::vector<int>& ptup = spp.tuples[pt];
        std::vector<int> t1, t2v;
        for (int p : ptup) {
            t1.push_back(p / k2);
            t2v.push_back(p % k2);
        }
        DecMorK R2 = id_block(t2v);
        DecMorK R1 = id_block(t1);
        int tid1 = spc.tuple_index(t1), tid2 = spc.tuple_index(t2v);
        std::vector<Decomp> pleaves = simple_leaves(prod, ptup);
        std::vector<Decomp> l1 = simple_leaves(cat, t1), l2 = simple_leaves(cat, t2v);
        for (int s = 0; s < prod.count(); ++s) {
            int d = s / k2, e = s % k2;
            int rows = spp.tgt_obj[pt][static_cast<size_t>(s)], cols = spp.src_obj[pt][static_cast<size_t>(s)];
            for (int row = 0; row < rows; ++row) {
                FoldData fr = fold_right_decode(prod, pleaves, s, row);
                FoldData fr1, fr2;
                split_fold(prod, cat, cat, fr, fr1, fr2);
                // mu split for the right fold
                bool ok = true;
                for (size_t i = 0; i + 1 < fr.mu.size(); ++i) {
                    int n2 = cat.N(fr2.leaf_sector[i], fr2.mid_sector[i + 1], fr2.mid_sector[i]);
                    if (n2 == 0) {
                        ok = false;
                        break;
                    }
                    fr1.mu[i] = fr.mu[i] / n2;
                    fr2.mu[i] = fr.mu[i] % n2;
                }
                if (!ok) continue;
                int r1 = fold_right_encode(cat, l1, fr1);
                int r2 = fold_right_encode(cat, l2, fr2);
                for (int col = 0; col < cols; ++col) {
                    FoldData fc = fold_left_decode(prod, pleaves, s, col);
                    FoldData fc1, fc2;
                    split_fold(prod, cat, cat, fc, fc1, fc2);
                    bool ok2 = true;
                    for (size_t i = 1; i < fc.mu.size(); ++i) {
                        int n2 = cat.N(fc2.mid_sector[i - 1], fc2.leaf_sector[i], fc2.mid_sector[i]);
                        if (n2 == 0) {
                            ok2 = false;
                            break;
                        }
                        fc1.mu[i] = fc.mu[i] / n2;
                        fc2.mu[i] = fc.mu[i] % n2;
                    }
                    if (!ok2) continue;
                    int c1i = fold_left_encode(cat, l1, fc1);
                    int c2i = fold_left_encode(cat, l2, fc2);
                    int pcoord = spp.offsets[pt][static_cast<size_t>(s)] + row * cols + col;
                    // phi (x) ceil(Id): contribution through the first factor
                    const Scalar& rv = R2.m[static_cast<size_t>(e)].at(r2, c2i);
                    if (!rv.is_zero()) {
                        int ccols = spc.src_obj[static_cast<size_t>(tid1)][static_cast<size_t>(d)];
                        int coord = spc.offsets[static_cast<size_t>(tid1)][static_cast<size_t>(d)] + r1 * ccols + c1i;
                        out.at(pcoord, coord) += rv;
                    }
                    // ceil(Id) (x) phi: through the second factor
                    const Scalar& lv = R1.m[static_cast<size_t>(d)].at(r1, c1i);
                    if (!lv.is_zero()) {
                        int ccols = spc.src_obj[static_cast<size_t>(tid2)][static_cast<size_t>(e)];
                        int coord = spc.offsets[static_cast<size_t>(tid2)][static_cast<size_t>(e)] + r2 * ccols + c2i;
                        out.at(pcoord, coord) += lv;
                    }
                }
            }
        }
    }
    return out;
}

namespace {

AssocProvider<Scalar> order_provider(const FusionCat& cat, const CochainSpace& sp3,
                                     const std::vector<Cochain>& alphas, int i) {
    if (i == 0) return base_assoc(cat);
    return cochain_assoc_provider(sp3, alphas[static_cast<size_t>(i - 1)]);
}

}  // namespace

Cochain pentagon_defect(const FusionCat& cat, const std::vector<Cochain>& alphas, const CochainSpace& sp3,
                        const CochainSpace& sp4, int order) {
    Scalar model = Scalar::zero(cat.field);
    Cochain out = zero_cochain(sp4);
    for (size_t t = 0; t < sp4.tuples.size(); ++t) {
        const std::vector<int>& tup = sp4.tuples[t];
        Decomp A = cat.simple_obj(tup[0]), B = cat.simple_obj(tup[1]), Cc = cat.simple_obj(tup[2]),
               Dd = cat.simple_obj(tup[3]);
        Decomp AB = tensor2(cat, A, B), CD = tensor2(cat, Cc, Dd), BC = tensor2(cat, B, Cc);
        DecMorK acc = dec_zero(sp4.src_obj[t], sp4.tgt_obj[t], model);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j) {
                if (i + j != order) continue;
                auto Pi = order_provider(cat, sp3, alphas, i);
                auto Pj = order_provider(cat, sp3, alphas, j);
                DecMorK two = dec_compose(dec_assoc(cat, Pj, A, B, CD, model), dec_assoc(cat, Pi, AB, Cc, Dd, model));
                for (size_t z = 0; z < acc.m.size(); ++z) acc.m[z] = acc.m[z] + two.m[z];
            }
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j)
                for (int k = 0; k <= order; ++k) {
                    if (i + j + k != order) continue;
                    auto Pi = order_provider(cat, sp3, alphas, i);
                    auto Pj = order_provider(cat, sp3, alphas, j);
                    auto Pk = order_provider(cat, sp3, alphas, k);
                    DecMorK three = dec_compose(
                        dec_tensor(cat, dec_identity(A, model), dec_assoc(cat, Pk, B, Cc, Dd, model), model),
                        dec_compose(dec_assoc(cat, Pj, A, BC, Dd, model),
                                    dec_tensor(cat, dec_assoc(cat, Pi, A, B, Cc, model), dec_identity(Dd, model), model)));
                    for (size_t z = 0; z < acc.m.size(); ++z) acc.m[z] = acc.m[z] - three.m[z];
                }
        out.blocks[t] = acc.m;
    }
    out.degree = 4;
    return out;
}

Cochain obstruction_category(const FusionCat& cat, const std::vector<Cochain>& alphas, const CochainSpace& sp3,
                             const CochainSpace& sp4, int order) {
    // same sums as the pentagon defect with the pure order-`order` terms
    // (any index equal to `order`) removed
    Scalar model = Scalar::zero(cat.field);
    Cochain out = zero_cochain(sp4);
    for (size_t t = 0; t < sp4.tuples.size(); ++t) {
        const std::vector<int>& tup = sp4.tuples[t];
        Decomp A = cat.simple_obj(tup[0]), B = cat.simple_obj(tup[1]), Cc = cat.simple_obj(tup[2]),
               Dd = cat.simple_obj(tup[3]);
        Decomp AB = tensor2(cat, A, B), CD = tensor2(cat, Cc, Dd), BC = tensor2(cat, B, Cc);
        DecMorK acc = dec_zero(sp4.src_obj[t], sp4.tgt_obj[t], model);
        for (int i = 1; i < order; ++i) {
            int j = order - i;
            if (j < 1 || j >= order) continue;
            auto Pi = order_provider(cat, sp3, alphas, i);
            auto Pj = order_provider(cat, sp3, alphas, j);
            DecMorK two = dec_compose(dec_assoc(cat, Pj, A, B, CD, model), dec_assoc(cat, Pi, AB, Cc, Dd, model));
            for (size_t z = 0; z < acc.m.size(); ++z) acc.m[z] = acc.m[z] + two.m[z];
        }
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                for (int k = 0; k < order; ++k) {
                    if (i + j + k != order) continue;
                    auto Pi = order_provider(cat, sp3, alphas, i);
                    auto Pj = order_provider(cat, sp3, alphas, j);
                    auto Pk = order_provider(cat, sp3, alphas, k);
                    DecMorK three = dec_compose(
                        dec_tensor(cat, dec_identity(A, model), dec_assoc(cat, Pk, B, Cc, Dd, model), model),
                        dec_compose(dec_assoc(cat, Pj, A, BC, Dd, model),
                                    dec_tensor(cat, dec_assoc(cat, Pi, A, B, Cc, model), dec_identity(Dd, model), model)));
                    for (size_t z = 0; z < acc.m.size(); ++z) acc.m[z] = acc.m[z] - three.m[z];
                }
        out.blocks[t] = acc.m;
    }
    out.degree = 4;
    return out;
}

namespace {

PairBlocks<Scalar> order_pair_blocks(const MonFunctor& f, const CochainSpace& sp2,
                                     const std::vector<Cochain>& ftildes, int i) {
    if (i == 0) return ftilde_blocks<Scalar>(f, 0);
    return cochain_pair_blocks(sp2, ftildes[static_cast<size_t>(i - 1)]);
}

// One hexagon-route term at the given orders; lax direction.
DecMorK hexagon_term1(const MonFunctor& f, const CochainSpace& sp2, const std::vector<Cochain>& ftildes,
                      const std::vector<Cochain>& as, const CochainSpace& spd3, int i, int j, int k, int a, int b,
                      int c) {
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    Scalar model = Scalar::zero(D.field);
    auto PD = (i == 0) ? base_assoc(D) : cochain_assoc_provider(spd3, as[static_cast<size_t>(i - 1)]);
    auto Bj = order_pair_blocks(f, sp2, ftildes, j);
    auto Bk = order_pair_blocks(f, sp2, ftildes, k);
    Decomp A = C.simple_obj(a), Bs = C.simple_obj(b), Cc = C.simple_obj(c);
    return dec_compose(
        pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, Bk, A, tensor2(C, Bs, Cc), model),
        dec_compose(dec_tensor(D, dec_identity(f.obj(a), model),
                               pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, Bj, Bs, Cc, model), model),
                    dec_assoc(D, PD, f.obj(a), f.obj(b), f.obj(c), model)));
}

DecMorK hexagon_term2(const MonFunctor& f, const CochainSpace& sp2, const std::vector<Cochain>& ftildes,
                      const std::vector<Cochain>& alphas, const CochainSpace& spc3, int i, int j, int k, int a,
                      int b, int c) {
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    Scalar model = Scalar::zero(D.field);
    auto PC = (k == 0) ? base_assoc(C) : cochain_assoc_provider(spc3, alphas[static_cast<size_t>(k - 1)]);
    auto Bi = order_pair_blocks(f, sp2, ftildes, i);
    auto Bj = order_pair_blocks(f, sp2, ftildes, j);
    Decomp A = C.simple_obj(a), Bs = C.simple_obj(b), Cc = C.simple_obj(c);
    return dec_compose(
        app_mor(D, f.objmap, dec_assoc(C, PC, A, Bs, Cc, model), model),
        dec_compose(pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, Bj, tensor2(C, A, Bs), Cc, model),
                    dec_tensor(D, pairing_prolong(D, C, f.objmap, f.objmap, f.objmap, Bi, A, Bs, model),
                               dec_identity(f.obj(c), model), model)));
}

}  // namespace

Cochain hexagon_defect(const MonFunctor& f, const std::vector<Cochain>& ftildes, const std::vector<Cochain>& alphas,
                       const std::vector<Cochain>& as, int order, const CochainSpace& spf3) {
    const FusionCat& C = *f.src;
    Scalar model = Scalar::zero(f.dst->field);
    CochainSpace sp2 = make_space(f, *spf3.M, 2);
    MonFunctor idc = identity_functor(C);
    MonFunctor idd = identity_functor(*f.dst);
    Bimodule regc = regular_bimodule(idc);
    Bimodule regd = regular_bimodule(idd);
    CochainSpace spc3 = make_space(idc, regc, 3);
    CochainSpace spd3 = make_space(idd, regd, 3);
    Cochain out = zero_cochain(spf3);
    for (size_t t = 0; t < spf3.tuples.size(); ++t) {
        const std::vector<int>& tup = spf3.tuples[t];
        DecMorK acc = dec_zero(spf3.src_obj[t], spf3.tgt_obj[t], model);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; j <= order; ++j)
                for (int k = 0; k <= order; ++k) {
                    if (i + j + k != order) continue;
                    DecMorK t1 = hexagon_term1(f, sp2, ftildes, as, spd3, i, j, k, tup[0], tup[1], tup[2]);
                    DecMorK t2 = hexagon_term2(f, sp2, ftildes, alphas, spc3, i, j, k, tup[0], tup[1], tup[2]);
                    for (size_t z = 0; z < acc.m.size(); ++z) acc.m[z] = acc.m[z] + t1.m[z] - t2.m[z];
                }
        out.blocks[t] = acc.m;
    }
    out.degree = 3;
    return out;
}

TotalObstruction obstruction_total(const MonFunctor& f, const std::vector<Cochain>& ftildes,
                                   const std::vector<Cochain>& alphas, const std::vector<Cochain>& as, int order,
                                   const CochainSpace& spf2, const CochainSpace& spf3, const CochainSpace& spc3,
                                   const CochainSpace& spc4, const CochainSpace& spd3, const CochainSpace& spd4) {
    const FusionCat& C = *f.src;
    const FusionCat& D = *f.dst;
    Scalar model = Scalar::zero(D.field);
    TotalObstruction out{zero_cochain(spf3), zero_cochain(spc4), zero_cochain(spd4)};
    for (size_t t = 0; t < spf3.tuples.size(); ++t) {
        const std::vector<int>& tup = spf3.tuples[t];
        DecMorK acc = dec_zero(spf3.src_obj[t], spf3.tgt_obj[t], model);
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                for (int k = 0; k < order; ++k) {
                    if (i + j + k != order) continue;
                    DecMorK t1 = hexagon_term1(f, spf2, ftildes, as, spd3, i, j, k, tup[0], tup[1], tup[2]);
                    DecMorK t2 = hexagon_term2(f, spf2, ftildes, alphas, spc3, i, j, k, tup[0], tup[1], tup[2]);
                    for (size_t z = 0; z < acc.m.size(); ++z) acc.m[z] = acc.m[z] + t1.m[z] - t2.m[z];
                }
        out.Omega.blocks[t] = acc.m;
    }
    out.Omega.degree = 3;
    out.omega_src = obstruction_category(C, alphas, spc3, spc4, order);
    out.o_dst = obstruction_category(D, as, spd3, spd4, order);
    return out;
}

}  // namespace defcat
