#ifndef DEFCAT_PAD_HPP
#define DEFCAT_PAD_HPP

#include "defcat/fusion.hpp"

namespace defcat {

struct ArityMismatch : Error {
    ArityMismatch() : Error("tree leaf count differs from word length") {}
};
struct ShapeChainBroken : Error {
    ShapeChainBroken() : Error("adjacent parts are not linked by a coherence isomorphism") {}
};

/// Word of simple labels; the unit may occur (recorded as an ordinary letter).
using ObjectWord = std::vector<int>;

inline std::vector<Decomp> word_leaves(const FusionCat& cat, const ObjectWord& w) {
    std::vector<Decomp> l;
    l.reserve(w.size());
    for (int a : w) l.push_back(cat.simple_obj(a));
    return l;
}

/// The word with unit letters removed (a lone unit stays put).
ObjectWord reduced_word(const FusionCat& cat, const ObjectWord& w);

/// Coherence isomorphism of the spec's reassociate operation: same word,
/// two parenthesizations, composed along the canonical rotate-to-right-comb
/// routes.
struct Reassociator {
    ObjectWord word;
    PTree src, dst;
    DecMorK mor;
};
Reassociator reassociate(const FusionCat& cat, const ObjectWord& w, const PTree& src, const PTree& dst);

/// Morphism between two parenthesized (possibly unit-padded) words.
struct BlockMorphism {
    ObjectWord src_word, dst_word;
    PTree src_tree, dst_tree;
    DecMorK blocks;
};

/// Unit-elimination (lambda/rho prolongations) followed by tree moves:
/// V(word, tree) -> V(reduced word, left or right comb).
DecMorK reduce_to_comb(const FusionCat& cat, const ObjectWord& w, const PTree& t, bool right_target);

/// Padded composition: inserts coherence isomorphisms between the parts so
/// the whole runs from the reduced fully-left-parenthesized source to the
/// reduced fully-right-parenthesized target.
BlockMorphism pad_compose(const FusionCat& cat, const std::vector<BlockMorphism>& parts);

/// Degree-3 block family [A(x)B](x)C -> A(x)[B(x)C] presented as an
/// associator-style provider.
bool unit_commuting_check(const FusionCat& cat, const AssocProvider<Scalar>& psi,
                          const AssocProvider<Scalar>& phi);

}  // namespace defcat

#endif
