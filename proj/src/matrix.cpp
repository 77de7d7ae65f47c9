#include "defcat/matrix.hpp"

namespace defcat {

MatrixS promote(const MatrixK& m, const Field& f, int order) {
    Series model(f, order);
    MatrixS r(m.rows(), m.cols(), model);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Series::constant(m.at(i, j), order);
    return r;
}

Echelon eliminate(const MatrixK& m, const Field& f) {
    Echelon e;
    Scalar model = Scalar::zero(f);
    MatrixK a = m;
    MatrixK ops = MatrixK::identity(m.rows(), model);
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
            for (int j = 0; j < ops.cols(); ++j) std::swap(ops.at(piv, j), ops.at(row, j));
        }
        Scalar inv = a.at(row, col).inverse();
        for (int j = 0; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (int j = 0; j < ops.cols(); ++j) ops.at(row, j) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col);
            for (int j = 0; j < a.cols(); ++j) a.at(r, j) -= factor * a.at(row, j);
            for (int j = 0; j < ops.cols(); ++j) ops.at(r, j) -= factor * ops.at(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rank = row;
    e.rref = std::move(a);
    e.ops = std::move(ops);
    return e;
}

RankKernelImage rank_kernel_image(const MatrixK& m, const Field& f) {
    RankKernelImage out;
    Echelon e = eliminate(m, f);
    out.rank = e.rank;
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Scalar> v(static_cast<size_t>(m.cols()), Scalar::zero(f));
        v[static_cast<size_t>(c)] = Scalar::one(f);
        for (int r = 0; r < e.rank; ++r)
            v[static_cast<size_t>(e.pivot_cols[static_cast<size_t>(r)])] = -e.rref.at(r, c);
        out.kernel.push_back(std::move(v));
    }
    if (static_cast<int>(out.kernel.size()) + out.rank != m.cols())
        throw Error("rank-nullity violated (internal)");
    for (const auto& v : out.kernel) {
        auto w = m.apply(v);
        for (const auto& x : w)
            if (!x.is_zero()) throw Error("kernel vector fails verification (internal)");
    }
    for (int c : e.pivot_cols) {
        std::vector<Scalar> v;
        v.reserve(static_cast<size_t>(m.rows()));
        for (int r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
        out.image.push_back(std::move(v));
    }
    return out;
}

LinearSolution solve_linear(const MatrixK& m, const std::vector<Scalar>& b, const Field& f) {
    if (static_cast<int>(b.size()) != m.rows()) throw Error("rhs length mismatch");
    LinearSolution sol;
    Echelon e = eliminate(m, f);
    std::vector<Scalar> rb(static_cast<size_t>(m.rows()), Scalar::zero(f));
    for (int i = 0; i < m.rows(); ++i) {
        Scalar acc = Scalar::zero(f);
        for (int j = 0; j < m.rows(); ++j) acc += e.ops.at(i, j) * b[static_cast<size_t>(j)];
        rb[static_cast<size_t>(i)] = acc;
    }
    for (int i = e.rank; i < m.rows(); ++i) {
        if (!rb[static_cast<size_t>(i)].is_zero()) {
            std::vector<Scalar> y;
            y.reserve(static_cast<size_t>(m.rows()));
            for (int j = 0; j < m.rows(); ++j) y.push_back(e.ops.at(i, j));
            sol.certificate = std::move(y);
            return sol;
        }
    }
    std::vector<Scalar> x(static_cast<size_t>(m.cols()), Scalar::zero(f));
    for (int r = 0; r < e.rank; ++r)
        x[static_cast<size_t>(e.pivot_cols[static_cast<size_t>(r)])] = rb[static_cast<size_t>(r)];
    auto w = m.apply(x);
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != b[i]) throw Error("linear solve verification failed (internal)");
    sol.x = std::move(x);
    return sol;
}

MatrixK invert(const MatrixK& m, const Field& f) {
    if (m.rows() != m.cols()) throw NotInvertible("non-square matrix");
    Echelon e = eliminate(m, f);
    if (e.rank != m.rows()) throw NotInvertible("singular matrix");
    return e.ops;
}

}  // namespace defcat
