#include "defcat/pad.hpp"

namespace defcat {

ObjectWord reduced_word(const FusionCat& cat, const ObjectWord& w) {
    ObjectWord r;
    for (int a : w)
        if (a != cat.unit) r.push_back(a);
    if (r.empty()) r.push_back(cat.unit);
    return r;
}

Reassociator reassociate(const FusionCat& cat, const ObjectWord& w, const PTree& src, const PTree& dst) {
    if (src.leaves() != static_cast<int>(w.size()) || dst.leaves() != static_cast<int>(w.size()))
        throw ArityMismatch();
    Reassociator r{w, src, dst, tree_reassoc(cat, word_leaves(cat, w), src, dst)};
    return r;
}

namespace {

// Path to the parent of the first unit leaf (searched top-down, left first).
bool find_unit_parent(const FusionCat& cat, const ObjectWord& w, const PTree& t, std::vector<int>& path,
                      int& side) {
    if (t.is_leaf()) return false;
    for (int s = 0; s < 2; ++s) {
        const PTree& k = t.kid[static_cast<size_t>(s)];
        if (k.is_leaf() && w[static_cast<size_t>(k.leaf)] == cat.unit) {
            side = s;
            return true;
        }
    }
    for (int s = 0; s < 2; ++s) {
        path.push_back(s);
        if (find_unit_parent(cat, w, t.kid[static_cast<size_t>(s)], path, side)) return true;
        path.pop_back();
    }
    return false;
}

PTree shift_leaves(const PTree& t, int removed) {
    if (t.is_leaf()) return PTree::leaf_node(t.leaf > removed ? t.leaf - 1 : t.leaf);
    return PTree::pair(shift_leaves(t.kid[0], removed), shift_leaves(t.kid[1], removed));
}

}  // namespace

DecMorK reduce_to_comb(const FusionCat& cat, const ObjectWord& w, const PTree& t, bool right_target) {
    if (t.leaves() != static_cast<int>(w.size())) throw ArityMismatch();
    Scalar model = Scalar::zero(cat.field);
    ObjectWord word = w;
    PTree tree = t;
    DecMorK acc = dec_identity(tree_obj(cat, word_leaves(cat, word), tree), model);
    while (word.size() > 1) {
        std::vector<int> path;
        int side = -1;
        if (!find_unit_parent(cat, word, tree, path, side)) break;
        const PTree* parent = &tree;
        for (int s : path) parent = &parent->kid[static_cast<size_t>(s)];
        const PTree& sib = parent->kid[static_cast<size_t>(1 - side)];
        int unit_leaf = parent->kid[static_cast<size_t>(side)].leaf;
        auto leaves = word_leaves(cat, word);
        Decomp sib_obj = tree_obj(cat, leaves, sib);
        DecMorK elim = side == 0 ? dec_lunit(cat, sib_obj) : dec_runit(cat, sib_obj);
        acc = dec_compose(lift_at(cat, leaves, tree, path, elim, model), acc);
        tree = shift_leaves(replace_at(tree, path, sib), unit_leaf);
        word.erase(word.begin() + unit_leaf);
    }
    int n = static_cast<int>(word.size());
    PTree comb = right_target ? PTree::right_comb(n) : PTree::left_comb(n);
    acc = dec_compose(tree_reassoc(cat, word_leaves(cat, word), tree, comb), acc);
    return acc;
}

BlockMorphism pad_compose(const FusionCat& cat, const std::vector<BlockMorphism>& parts) {
    if (parts.empty()) throw Error("pad_compose needs at least one part");
    ObjectWord red = reduced_word(cat, parts.front().src_word);
    ObjectWord red_dst = reduced_word(cat, parts.back().dst_word);

    DecMorK acc = dec_invert(cat, reduce_to_comb(cat, parts.front().src_word, parts.front().src_tree, false));
    for (size_t i = 0; i < parts.size(); ++i) {
        acc = dec_compose(parts[i].blocks, acc);
        if (i + 1 < parts.size()) {
            if (reduced_word(cat, parts[i].dst_word) != reduced_word(cat, parts[i + 1].src_word))
                throw ShapeChainBroken();
            DecMorK down = reduce_to_comb(cat, parts[i].dst_word, parts[i].dst_tree, false);
            DecMorK up = dec_invert(cat, reduce_to_comb(cat, parts[i + 1].src_word, parts[i + 1].src_tree, false));
            acc = dec_compose(up, dec_compose(down, acc));
        }
    }
    acc = dec_compose(reduce_to_comb(cat, parts.back().dst_word, parts.back().dst_tree, true), acc);

    BlockMorphism out;
    out.src_word = red;
    out.dst_word = red_dst;
    out.src_tree = PTree::left_comb(static_cast<int>(red.size()));
    out.dst_tree = PTree::right_comb(static_cast<int>(red_dst.size()));
    out.blocks = std::move(acc);
    return out;
}

bool unit_commuting_check(const FusionCat& cat, const AssocProvider<Scalar>& psi,
                          const AssocProvider<Scalar>& phi) {
    Scalar model = Scalar::zero(cat.field);
    int I = cat.unit;
    auto eval3 = [&](const AssocProvider<Scalar>& fam, int a, int b, int c) {
        return dec_assoc(cat, fam, cat.simple_obj(a), cat.simple_obj(b), cat.simple_obj(c), model);
    };
    for (int a = 0; a < cat.count(); ++a)
        for (int b = 0; b < cat.count(); ++b) {
            BlockMorphism phiB;
            phiB.src_word = {a, I, I, b};
            phiB.dst_word = {a, I, I, b};
            phiB.src_tree = PTree::pair(PTree::left_comb(3), PTree::leaf_node(3));
            phiB.dst_tree = PTree::pair(PTree::pair(PTree::leaf_node(0),
                                                    PTree::pair(PTree::leaf_node(1), PTree::leaf_node(2))),
                                        PTree::leaf_node(3));
            phiB.blocks = dec_tensor(cat, eval3(phi, a, I, I), dec_identity(cat.simple_obj(b), model), model);

            BlockMorphism psiM;
            psiM.src_word = {a, I, b};
            psiM.dst_word = {a, I, b};
            psiM.src_tree = PTree::left_comb(3);
            psiM.dst_tree = PTree::right_comb(3);
            psiM.blocks = eval3(psi, a, I, b);

            BlockMorphism lhs = pad_compose(cat, {phiB, psiM});
            BlockMorphism rhs = pad_compose(cat, {psiM, phiB});
            if (!(lhs.blocks == rhs.blocks)) return false;

            BlockMorphism Aphi;
            Aphi.src_word = {a, I, I, b};
            Aphi.dst_word = {a, I, I, b};
            Aphi.src_tree = PTree::pair(PTree::leaf_node(0), PTree::left_comb(3, 1));
            Aphi.dst_tree = PTree::pair(PTree::leaf_node(0),
                                        PTree::pair(PTree::leaf_node(1),
                                                    PTree::pair(PTree::leaf_node(2), PTree::leaf_node(3))));
            Aphi.blocks = dec_tensor(cat, dec_identity(cat.simple_obj(a), model), eval3(phi, I, I, b), model);

            BlockMorphism lhs2 = pad_compose(cat, {Aphi, psiM});
            BlockMorphism rhs2 = pad_compose(cat, {psiM, Aphi});
            if (!(lhs2.blocks == rhs2.blocks)) return false;
        }
    return true;
}

}  // namespace defcat
