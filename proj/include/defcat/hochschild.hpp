#ifndef DEFCAT_HOCHSCHILD_HPP
#define DEFCAT_HOCHSCHILD_HPP

#include "defcat/cochain.hpp"

namespace defcat {

struct NotBimodule : Error {
    NotBimodule() : Error("bimodule axioms fail") {}
};

/// Finite-dimensional bimodule over an algebra: left[(i,m),m'] is the
/// coefficient of f_{m'} in e_i . f_m, and right[(m,i),m'] likewise.
struct AlgBimodule {
    int dim = 0;
    std::vector<Scalar> left;   // (i*dim + m)*dim + m'
    std::vector<Scalar> right;  // (m*dim + i)*dim + m'

    const Scalar& l(int i, int m, int m2) const { return left[(static_cast<size_t>(i) * dim + m) * dim + m2]; }
    const Scalar& r(int m, int i, int m2) const { return right[(static_cast<size_t>(m) * dim + i) * dim + m2]; }
};

AlgBimodule regular_alg_bimodule(const Algebra& a);
CheckReport validate_alg_bimodule(const Algebra& a, const AlgBimodule& m);

/// Classical Hochschild complex C^n(A, M) = Hom(A^(x)n, M), degrees
/// 0..maxdeg, with coordinates ordered (output index major, argument tuple
/// row-major minor).
GradedComplex build_hochschild(const Algebra& a, const AlgBimodule& m, int maxdeg);

struct CompareReport {
    bool ok = true;
    int mismatch_degree = -1;
    std::vector<int> dims;        // per degree (both sides when ok)
    std::vector<int> cohomology;  // classical cohomology dims, degrees 0..maxdeg-1
};

/// Builds X^bullet(F_A, F_A) and the classical complex, compares dimensions
/// and checks that the label-matching isomorphism intertwines the
/// differentials.
CompareReport compare_with_categorical(const Algebra& a, int maxdeg, int threads = 1);

struct ResolutionReport {
    bool claim_a = true;          // every restricted 2-cochain is a cocycle
    bool claim_b = true;          // insert-unit preimages for restricted cocycles
    bool exact = true;            // restricted complex exact in the tested degrees
    std::vector<int> restricted_dims;  // dim K_n for n = 1..maxdeg
    std::string detail;
};

/// The bimodule-inducing subspace (outer-linearity conditions), the
/// restriction of the differential to it, and the insert-unit contracting
/// homotopy h(phi)(x_1,...,x_n) = phi(x_1, 1, x_2, ...).
ResolutionReport bimodule_subcomplex_exactness(const Algebra& a, const AlgBimodule& m, int maxdeg);

}  // namespace defcat

#endif
