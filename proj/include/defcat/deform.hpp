#ifndef DEFCAT_DEFORM_HPP
#define DEFCAT_DEFORM_HPP

#include "defcat/cochain.hpp"
#include "defcat/pad.hpp"

namespace defcat {

enum class DeformKind { category, functor_purely, functor_fibred, functor_total };

struct DeformationState {
    DeformKind kind = DeformKind::category;
    const FusionCat* cat = nullptr;       // category kind
    const MonFunctor* functor = nullptr;  // functor kinds
    int order = 0;
    std::vector<Cochain> alphas;   // source-category degree-3 coefficients
    std::vector<Cochain> ftildes;  // X^2(F) coefficients (functor kinds)
    std::vector<Cochain> as;       // target-category degree-3 coefficients (total)
    std::vector<Scalar> nus;       // unit gauge nu^(i), i >= 1
};

struct DeformReport {
    bool ok = true;
    int failed_order = -1;
    std::string failure;
};

/// Independent oracle: re-verify the pentagon (and the functor hexagon for
/// functor kinds) with every structure entry promoted to k[eps]/eps^(M+1).
DeformReport check_deformation(const DeformationState& s);

/// Series-valued associator of a deformed category.
AssocProvider<Series> deformed_assoc(const FusionCat& cat, const std::vector<Cochain>& alphas,
                                     const CochainSpace& sp3, int order);

struct ExtendResult {
    bool obstructed = false;
    DeformationState next;              // populated when not obstructed
    Cochain obstruction;                // omega^(M)
    std::vector<Scalar> h4_class;       // coordinates of [omega] on the H^4 representative basis
};

/// Extend an order-(M-1) category deformation to order M by solving
/// delta(alpha^(M)) = omega^(M).
ExtendResult extend_order(const DeformationState& s, const CategoryComplex& cc);

struct Classification {
    int degree = 0;
    int dimension = 0;
    std::vector<std::vector<Scalar>> representatives;
};

Classification classify_category(const FusionCat& cat, int threads = 1);
Classification classify_functor_purely(const MonFunctor& f, int threads = 1);
Classification classify_fibred(const MonFunctor& f, int threads = 1);
Classification classify_total(const MonFunctor& f, int threads = 1);
Classification classify_coarse(const MonFunctor& multiplication, const FusionCat& base, const FusionCat& prod,
                               int threads = 1);

/// Cohomology of the complex selected by the kind at an arbitrary degree.
struct KindDegreeMismatch : Error {
    KindDegreeMismatch() : Error("degree not available for this complex kind") {}
};

struct EquivalenceResult {
    bool equivalent = false;
    std::vector<Scalar> witness;      // degree-2 cochain coordinates (category kind)
    std::vector<Scalar> witness_psi;  // X^1(F) part (fibred kind)
    std::vector<Scalar> certificate;  // class difference when not equivalent
};

EquivalenceResult equivalence_check(const DeformationState& s1, const DeformationState& s2,
                                    const CategoryComplex& cc);

struct UnitTransport {
    std::vector<Series> lambda, rho;
    CheckReport report;  // triangle and bigon over the series ring
};

/// Deformed units from the associator blocks at (I,I,b) and (a,I,I) with the
/// gauge series nu (nu^(0) is forced to lambda_I = rho_I).
UnitTransport unit_transport(const DeformationState& s, const CategoryComplex& cc);

struct NatTransfClassification {
    int dim_h1 = 0, dim_h2 = 0;
    std::vector<std::vector<Scalar>> h1_representatives;
};

struct NotMonoidalTransformation : Error {
    NotMonoidalTransformation() : Error("phi is not a monoidal natural transformation") {}
};

NatTransfClassification nat_transf_first_order(const MonFunctor& f, const MonFunctor& g,
                                               const std::vector<DecMorK>& phi, int threads = 1);

}  // namespace defcat

#endif
