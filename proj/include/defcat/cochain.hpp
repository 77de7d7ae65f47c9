#ifndef DEFCAT_COCHAIN_HPP
#define DEFCAT_COCHAIN_HPP

#include "defcat/complex.hpp"
#include "defcat/functor.hpp"

namespace defcat {

struct KindMismatch : Error {
    explicit KindMismatch(const std::string& w) : Error(w) {}
};
struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("pre-Lie insertion slot out of range") {}
};
struct LowerOrderNotDeformation : Error {
    explicit LowerOrderNotDeformation(int order)
        : Error("deformation equation fails at order " + std::to_string(order)), order(order) {}
    int order;
};

/// X^n(F, M): one block per n-tuple of source simples and target sector.
/// The block at (tuple, x) maps the x-sector of the left-parenthesized
/// F(a_1) (x) ... (x) F(a_n) to the x-sector of M applied to the
/// right-parenthesized a_1 (x) ... (x) a_n.
struct CochainSpace {
    const MonFunctor* F = nullptr;
    const Bimodule* M = nullptr;
    int degree = 0;
    std::vector<std::vector<int>> tuples;
    std::vector<Decomp> src_obj, tgt_obj;     // per tuple
    std::vector<Decomp> cword;                // right-parenthesized source word object (over the source category)
    std::vector<std::vector<int>> offsets;    // [tuple][sector] -> global coordinate start
    int total_dim = 0;

    int tuple_index(const std::vector<int>& t) const;
};

CochainSpace make_space(const MonFunctor& F, const Bimodule& M, int degree);

struct Cochain {
    int degree = 0;
    std::vector<std::vector<MatrixK>> blocks;  // [tuple][sector]
};

Cochain zero_cochain(const CochainSpace& sp);
std::vector<Scalar> vec(const CochainSpace& sp, const Cochain& c);
Cochain unvec(const CochainSpace& sp, const std::vector<Scalar>& v);
Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);
Cochain cochain_scale(const Cochain& a, const Scalar& s);
bool cochain_is_zero(const Cochain& a);

/// Basis label of one coordinate, for deterministic reports.
struct BasisLabel {
    std::vector<int> tuple;
    int sector;
    int row, col;
};
std::vector<BasisLabel> basis_labels(const CochainSpace& sp);

/// The coboundary as an explicit matrix from sp_n to sp_n1 (degree + 1).
MatrixK delta_matrix(const CochainSpace& sp_n, const CochainSpace& sp_n1, int threads = 1);

/// A built tower X^0..X^maxdeg with its differentials (d^2 = 0 checked).
struct BuiltComplex {
    std::vector<CochainSpace> spaces;
    GradedComplex complex;
};
BuiltComplex build_tower(const MonFunctor& F, const Bimodule& M, int maxdeg, int threads = 1);

Cochain apply_delta(const BuiltComplex& bc, const Cochain& c);

/// X^bullet(C) = X^bullet(Id_C) with its owned identity functor.
struct CategoryComplex {
    std::shared_ptr<MonFunctor> F;
    std::shared_ptr<Bimodule> M;
    BuiltComplex tower;
};
CategoryComplex build_category_tower(const FusionCat& cat, int maxdeg, int threads = 1);

/// Evaluate a cochain at a tuple whose slot `pos` holds the decomposed
/// source object Y; all other entries are the simples of `tuple`.
DecMorK eval_at_slot(const CochainSpace& sp, const Cochain& phi, const std::vector<int>& tuple, int pos,
                     const Decomp& Y);

/// Cup product on X^bullet(F) (coefficients must be the regular bimodule).
Cochain cup_product(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h);

/// Pre-Lie insertion <G,H>^(i): H fills slot i of G across a block of
/// deg(H) consecutive arguments.
Cochain prelie_component(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h,
                         int slot);
/// Composition product sum_i (-1)^{deg(H) i} <G,H>^(i).
Cochain composition_product(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h);
/// Bracket [G,H] = <G,H> - (-1)^{(m-1)(n-1)} <H,G>.
Cochain bracket(const CochainSpace& spg, const Cochain& g, const CochainSpace& sph, const Cochain& h);

/// Chain map ceil(F(-)) : X^n(C) -> X^n(F) as a matrix (spc over Id_C).
MatrixK chain_map_F_of(const CochainSpace& spc, const CochainSpace& spf);
/// Chain map ceil((-)_{F^bullet}) : X^n(D) -> X^n(F) as a matrix.
MatrixK chain_map_restriction(const CochainSpace& spd, const CochainSpace& spf);
/// Diagonal map X^n(C) -> X^n(C boxtimes C) as a matrix.
MatrixK diagonal_matrix(const CochainSpace& spc, const FusionCat& cat, const FusionCat& prod,
                        const CochainSpace& spp);

/// Category obstruction: the paper's degree-4 cochain built from
/// alpha^(1)..alpha^(M-1) (alphas[i] is order i+1).
Cochain obstruction_category(const FusionCat& cat, const std::vector<Cochain>& alphas,
                             const CochainSpace& sp3, const CochainSpace& sp4, int order);

/// Pentagon defect at a given epsilon-order: all index combinations of the
/// two pentagon routes; zero iff the order-N deformation equation holds.
Cochain pentagon_defect(const FusionCat& cat, const std::vector<Cochain>& alphas, const CochainSpace& sp3,
                        const CochainSpace& sp4, int order);

/// Total-deformation obstruction coordinates (Omega^(n), omega^(n), o^(n)).
struct TotalObstruction {
    Cochain Omega;      // X^3(F)
    Cochain omega_src;  // X^4(C)
    Cochain o_dst;      // X^4(D)
};
TotalObstruction obstruction_total(const MonFunctor& f, const std::vector<Cochain>& ftildes,
                                   const std::vector<Cochain>& alphas, const std::vector<Cochain>& as, int order,
                                   const CochainSpace& spf2, const CochainSpace& spf3, const CochainSpace& spc3,
                                   const CochainSpace& spc4, const CochainSpace& spd3, const CochainSpace& spd4);

/// Hexagon defect of a functor deformation at a given order (all indices).
Cochain hexagon_defect(const MonFunctor& f, const std::vector<Cochain>& ftildes,
                       const std::vector<Cochain>& alphas, const std::vector<Cochain>& as, int order,
                       const CochainSpace& spf3);

}  // namespace defcat

#endif
