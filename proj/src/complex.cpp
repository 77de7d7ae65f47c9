#include "defcat/complex.hpp"

namespace defcat {

GradedComplex::GradedComplex(const Field& f, int lo, std::vector<int> dims, std::vector<MatrixK> diffs)
    : field_(f), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (diffs_.size() + 1 != dims_.size() && !(dims_.empty() && diffs_.empty()))
        throw Error("differential count must be dims-1");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].rows() != dims_[i + 1] || diffs_[i].cols() != dims_[i])
            throw Error("differential shape mismatch at degree " + std::to_string(lo_ + static_cast<int>(i)));
        if (i > 0) {
            MatrixK sq = diffs_[i] * diffs_[i - 1];
            if (!sq.is_zero()) throw Error("d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(i) - 1));
        }
    }
}

int GradedComplex::dim(int degree) const {
    int i = degree - lo_;
    if (i < 0 || i >= static_cast<int>(dims_.size())) return 0;
    return dims_[static_cast<size_t>(i)];
}

MatrixK GradedComplex::diff(int degree) const {
    int i = degree - lo_;
    if (i < 0 || i >= static_cast<int>(diffs_.size()))
        return MatrixK::zero(dim(degree + 1), dim(degree), Scalar::zero(field_));
    return diffs_[static_cast<size_t>(i)];
}

int GradedComplex::euler_characteristic() const {
    int chi = 0, sign = (lo_ % 2 == 0) ? 1 : -1;
    for (int d : dims_) {
        chi += sign * d;
        sign = -sign;
    }
    return chi;
}

namespace {

// Reduce v against the row space of (already eliminated) rows with pivots.
void reduce_against(std::vector<Scalar>& v, const MatrixK& rref, const std::vector<int>& pivots) {
    for (size_t r = 0; r < pivots.size(); ++r) {
        int p = pivots[r];
        if (v[static_cast<size_t>(p)].is_zero()) continue;
        Scalar factor = v[static_cast<size_t>(p)];
        for (int j = 0; j < rref.cols(); ++j) v[static_cast<size_t>(j)] -= factor * rref.at(static_cast<int>(r), j);
    }
}

MatrixK rows_to_matrix(const std::vector<std::vector<Scalar>>& rows, int cols, const Field& f) {
    MatrixK m(static_cast<int>(rows.size()), cols, Scalar::zero(f));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return m;
}

}  // namespace

CohomologyResult cohomology(const GradedComplex& c, int degree) {
    if (degree < c.lo() || degree > c.hi()) throw DegreeOutOfRange();
    const Field& f = c.field();
    CohomologyResult out;
    int n = c.dim(degree);
    if (n == 0) return out;
    auto dn = rank_kernel_image(c.diff(degree), f);
    auto dprev = rank_kernel_image(c.diff(degree - 1), f);
    out.dimension = static_cast<int>(dn.kernel.size()) - dprev.rank;

    // Reduce kernel vectors against the image, keep an independent subset.
    MatrixK image_rows = rows_to_matrix(dprev.image, n, f);
    Echelon ie = eliminate(image_rows, f);
    std::vector<std::vector<Scalar>> chosen;
    MatrixK chosen_rref(0, n, Scalar::zero(f));
    std::vector<int> chosen_pivots;
    std::vector<std::vector<Scalar>> chosen_rref_rows;
    for (const auto& k : dn.kernel) {
        std::vector<Scalar> v = k;
        reduce_against(v, ie.rref, ie.pivot_cols);
        // reduce against already chosen representatives
        std::vector<Scalar> w = v;
        reduce_against(w, rows_to_matrix(chosen_rref_rows, n, f), chosen_pivots);
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (!w[static_cast<size_t>(j)].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) continue;
        Scalar inv = w[static_cast<size_t>(p)].inverse();
        for (auto& x : w) x *= inv;
        // keep chosen_rref rows fully reduced against each other
        for (size_t r = 0; r < chosen_rref_rows.size(); ++r) {
            Scalar factor = chosen_rref_rows[r][static_cast<size_t>(p)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < n; ++j)
                chosen_rref_rows[r][static_cast<size_t>(j)] -= factor * w[static_cast<size_t>(j)];
        }
        chosen_rref_rows.push_back(w);
        chosen_pivots.push_back(p);
        chosen.push_back(v);
        if (static_cast<int>(chosen.size()) == out.dimension) break;
    }
    if (static_cast<int>(chosen.size()) != out.dimension)
        throw Error("representative count mismatch (internal)");
    out.representatives = std::move(chosen);
    return out;
}

ComplexMap::ComplexMap(const GradedComplex* src, const GradedComplex* dst, std::map<int, MatrixK> mats)
    : src_(src), dst_(dst), mats_(std::move(mats)) {
    for (int n = src_->lo(); n <= src_->hi(); ++n) {
        // f_{n+1} d_src = d_dst f_n on the overlap
        MatrixK lhs = at(n + 1) * src_->diff(n);
        MatrixK rhs = dst_->diff(n) * at(n);
        if (lhs != rhs) throw NotAChainMap();
    }
}

MatrixK ComplexMap::at(int degree) const {
    auto it = mats_.find(degree);
    if (it != mats_.end()) {
        if (it->second.rows() != dst_->dim(degree) || it->second.cols() != src_->dim(degree))
            throw Error("chain map component shape mismatch");
        return it->second;
    }
    return MatrixK::zero(dst_->dim(degree), src_->dim(degree), Scalar::zero(src_->field()));
}

ConeComplex cone(const ComplexMap& u) {
    const GradedComplex& a = u.src();
    const GradedComplex& b = u.dst();
    const Field& f = a.field();
    int lo = std::min(b.lo(), a.lo() - 1);
    int hi = std::max(b.hi(), a.hi() - 1);
    std::vector<int> dims, bdims, adims;
    for (int n = lo; n <= hi; ++n) {
        bdims.push_back(b.dim(n));
        adims.push_back(a.dim(n + 1));
        dims.push_back(b.dim(n) + a.dim(n + 1));
    }
    std::vector<MatrixK> diffs;
    for (int n = lo; n < hi; ++n) {
        int rows = b.dim(n + 1) + a.dim(n + 2);
        int cols = b.dim(n) + a.dim(n + 1);
        MatrixK d = MatrixK::zero(rows, cols, Scalar::zero(f));
        MatrixK db = b.diff(n);
        MatrixK da = a.diff(n + 1);
        MatrixK un = u.at(n + 1);
        for (int i = 0; i < db.rows(); ++i)
            for (int j = 0; j < db.cols(); ++j) d.at(i, j) = db.at(i, j);
        for (int i = 0; i < un.rows(); ++i)
            for (int j = 0; j < un.cols(); ++j) d.at(i, b.dim(n) + j) = un.at(i, j);
        for (int i = 0; i < da.rows(); ++i)
            for (int j = 0; j < da.cols(); ++j) d.at(b.dim(n + 1) + i, b.dim(n) + j) = -da.at(i, j);
        diffs.push_back(std::move(d));
    }
    ConeComplex c{GradedComplex(f, lo, dims, std::move(diffs)), lo, std::move(bdims), std::move(adims)};
    return c;
}

namespace {

// Coordinates of the class of a cocycle v in terms of H-representatives:
// solve [reps | image] coeffs = v and return the reps part.
std::vector<Scalar> class_coordinates(const std::vector<Scalar>& v, const CohomologyResult& h,
                                      const std::vector<std::vector<Scalar>>& image, const Field& f) {
    int n = static_cast<int>(v.size());
    int cols = static_cast<int>(h.representatives.size() + image.size());
    MatrixK m(n, cols, Scalar::zero(f));
    for (size_t c = 0; c < h.representatives.size(); ++c)
        for (int r = 0; r < n; ++r) m.at(r, static_cast<int>(c)) = h.representatives[c][static_cast<size_t>(r)];
    for (size_t c = 0; c < image.size(); ++c)
        for (int r = 0; r < n; ++r) m.at(r, static_cast<int>(h.representatives.size() + c)) = image[c][static_cast<size_t>(r)];
    auto sol = solve_linear(m, v, f);
    if (!sol.x) throw Error("cocycle class not expressible (internal)");
    std::vector<Scalar> coords(sol.x->begin(), sol.x->begin() + static_cast<long>(h.representatives.size()));
    return coords;
}

MatrixK induced_on_cohomology(const MatrixK& comp, const CohomologyResult& hsrc, const CohomologyResult& hdst,
                              const std::vector<std::vector<Scalar>>& dst_image, const Field& f) {
    MatrixK m(static_cast<int>(hdst.representatives.size()), static_cast<int>(hsrc.representatives.size()),
              Scalar::zero(f));
    for (size_t c = 0; c < hsrc.representatives.size(); ++c) {
        auto img = comp.apply(hsrc.representatives[c]);
        auto coords = class_coordinates(img, hdst, dst_image, f);
        for (size_t r = 0; r < coords.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
    }
    return m;
}

bool exact_pair(const MatrixK& p, const MatrixK& q, int middle_dim, const Field& f) {
    // exact at the middle: q p = 0 and rank p + rank q = dim middle
    if (!(q * p).is_zero()) return false;
    int rp = rank_kernel_image(p, f).rank;
    int rq = rank_kernel_image(q, f).rank;
    return rp + rq == middle_dim;
}

}  // namespace

LesReport les_rank_check(const ComplexMap& u) {
    const GradedComplex& a = u.src();
    const GradedComplex& b = u.dst();
    const Field& f = a.field();
    ConeComplex cn = cone(u);
    const GradedComplex& c = cn.complex;

    // Cohomology at the top stored degree of a finite presentation is not
    // meaningful (the next differential is missing), so stop one short.
    auto genuine = [](const GradedComplex& x, int n) { return n < x.hi(); };
    auto h_of = [&](const GradedComplex& x, int n, std::map<int, CohomologyResult>& cache) -> const CohomologyResult& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        CohomologyResult r;
        if (n >= x.lo() && n <= x.hi()) r = cohomology(x, n);
        return cache.emplace(n, std::move(r)).first->second;
    };
    std::map<int, CohomologyResult> ha, hb, hc;
    std::map<int, std::vector<std::vector<Scalar>>> ia, ib, ic;
    auto im_of = [&](const GradedComplex& x, int n, std::map<int, std::vector<std::vector<Scalar>>>& cache)
        -> const std::vector<std::vector<Scalar>>& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        return cache.emplace(n, rank_kernel_image(x.diff(n - 1), f).image).first->second;
    };

    auto inclusion = [&](int n) {  // B^n -> C^n
        MatrixK m = MatrixK::zero(c.dim(n), b.dim(n), Scalar::zero(f));
        for (int i = 0; i < b.dim(n); ++i) m.at(i, i) = Scalar::one(f);
        return m;
    };
    auto projection = [&](int n) {  // C^n -> A^{n+1}
        MatrixK m = MatrixK::zero(a.dim(n + 1), c.dim(n), Scalar::zero(f));
        for (int i = 0; i < a.dim(n + 1); ++i) m.at(i, b.dim(n) + i) = Scalar::one(f);
        return m;
    };

    LesReport rep;
    for (int n = c.lo(); n < c.hi(); ++n) {
        bool can_cone = genuine(b, n) && genuine(c, n) && genuine(a, n + 1);
        bool can_a = genuine(c, n) && genuine(a, n + 1) && genuine(b, n + 1);
        bool can_b = genuine(a, n + 1) && genuine(b, n + 1) && genuine(c, n + 1);
        if (!can_cone && !can_a && !can_b) continue;
        LesDegreeReport dr;
        dr.degree = n;
        dr.exact_at_cone = dr.exact_at_a = dr.exact_at_b = true;
        if (can_cone) {
            MatrixK istar = induced_on_cohomology(inclusion(n), h_of(b, n, hb), h_of(c, n, hc), im_of(c, n, ic), f);
            MatrixK pstar = induced_on_cohomology(projection(n), h_of(c, n, hc), h_of(a, n + 1, ha), im_of(a, n + 1, ia), f);
            dr.exact_at_cone = exact_pair(istar, pstar, h_of(c, n, hc).dimension, f);
        }
        if (can_a) {
            MatrixK pstar = induced_on_cohomology(projection(n), h_of(c, n, hc), h_of(a, n + 1, ha), im_of(a, n + 1, ia), f);
            MatrixK ustar = induced_on_cohomology(u.at(n + 1), h_of(a, n + 1, ha), h_of(b, n + 1, hb), im_of(b, n + 1, ib), f);
            dr.exact_at_a = exact_pair(pstar, ustar, h_of(a, n + 1, ha).dimension, f);
        }
        if (can_b) {
            MatrixK ustar = induced_on_cohomology(u.at(n + 1), h_of(a, n + 1, ha), h_of(b, n + 1, hb), im_of(b, n + 1, ib), f);
            MatrixK istar2 = induced_on_cohomology(inclusion(n + 1), h_of(b, n + 1, hb), h_of(c, n + 1, hc), im_of(c, n + 1, ic), f);
            dr.exact_at_b = exact_pair(ustar, istar2, h_of(b, n + 1, hb).dimension, f);
        }
        rep.ok = rep.ok && dr.exact_at_cone && dr.exact_at_a && dr.exact_at_b;
        rep.degrees.push_back(dr);
    }
    return rep;
}

}  // namespace defcat
