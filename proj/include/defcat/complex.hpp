#ifndef DEFCAT_COMPLEX_HPP
#define DEFCAT_COMPLEX_HPP

#include <map>
#include <string>
#include <vector>

#include "defcat/matrix.hpp"

namespace defcat {

struct DegreeOutOfRange : Error {
    DegreeOutOfRange() : Error("degree outside complex range") {}
};

struct NotAChainMap : Error {
    NotAChainMap() : Error("matrices do not commute with the differentials") {}
};

/// Cochain complex of finite-dimensional spaces in degrees [lo, hi],
/// given by explicit differential matrices d_n : X^n -> X^{n+1}.
/// d_{n+1} d_n = 0 is checked at construction.
class GradedComplex {
  public:
    GradedComplex() : field_(Field::rationals()), lo_(0) {}
    GradedComplex(const Field& f, int lo, std::vector<int> dims, std::vector<MatrixK> diffs);

    const Field& field() const { return field_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int degree) const;
    /// d_n : X^n -> X^{n+1}; zero-shaped matrix outside the range.
    MatrixK diff(int degree) const;

    int euler_characteristic() const;

  private:
    Field field_;
    int lo_;
    std::vector<int> dims_;
    std::vector<MatrixK> diffs_;  // diffs_[i] : degree lo+i -> lo+i+1
};

struct CohomologyResult {
    int dimension = 0;
    std::vector<std::vector<Scalar>> representatives;  // kernel vectors reduced mod image
};

/// dim H^n = dim ker d_n - rank d_{n-1}; representatives are deterministic.
CohomologyResult cohomology(const GradedComplex& c, int degree);

/// Cochain map; commutation with the differentials is checked.
class ComplexMap {
  public:
    ComplexMap(const GradedComplex* src, const GradedComplex* dst, std::map<int, MatrixK> mats);

    const GradedComplex& src() const { return *src_; }
    const GradedComplex& dst() const { return *dst_; }
    /// Component in the given degree (zero-shaped outside the stored range).
    MatrixK at(int degree) const;

  private:
    const GradedComplex* src_;
    const GradedComplex* dst_;
    std::map<int, MatrixK> mats_;
};

/// Cone of u : A -> B, with C^n = B^n (+) A^{n+1} and the block differential
/// [[d_B, 0], [u, -d_A]] (row-vector convention; columns act as usual).
struct ConeComplex {
    GradedComplex complex;
    int lo;                       // cone degree range start
    std::vector<int> b_dims;      // dim B^n per cone degree
    std::vector<int> a_dims;      // dim A^{n+1} per cone degree
};

ConeComplex cone(const ComplexMap& u);

struct LesDegreeReport {
    int degree = 0;
    bool exact_at_cone = false;    // at H^n(C_u)
    bool exact_at_a = false;       // at H^{n+1}(A)
    bool exact_at_b = false;       // at H^{n+1}(B)
};

struct LesReport {
    bool ok = true;
    std::vector<LesDegreeReport> degrees;
};

/// Rank bookkeeping for the long exact sequence
/// H^n(B) -> H^n(C_u) -> H^{n+1}(A) -> H^{n+1}(B).
LesReport les_rank_check(const ComplexMap& u);

}  // namespace defcat

#endif
