#ifndef DEFCAT_MATRIX_HPP
#define DEFCAT_MATRIX_HPP

#include <optional>
#include <vector>

#include "defcat/scalar.hpp"

namespace defcat {

/// Dense row-major matrix over an exact ring (Scalar or Series).
/// A zero element of the ring is kept as a model so empty matrices
/// still know their ring.
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0), model_() {}
    Mat(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), model_(ring_zero(fill)), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat zero(int rows, int cols, const T& model) { return Mat(rows, cols, ring_zero(model)); }
    static Mat identity(int n, const T& model) {
        Mat m = zero(n, n, model);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_one(model);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const T& model() const { return model_; }

    T& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
        Mat r = zero(rows_, o.cols_, data_.empty() ? o.model_ : model_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }
    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& x : r.data_) x = x * s;
        return r;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
        std::vector<T> r(static_cast<size_t>(rows_), model_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return r;
    }

    /// Kronecker product; index of (i,j) is i*o.dim+j (left factor major).
    Mat kron(const Mat& o) const {
        Mat r = zero(rows_ * o.rows_, cols_ * o.cols_, data_.empty() ? o.model_ : model_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                for (int p = 0; p < o.rows_; ++p)
                    for (int q = 0; q < o.cols_; ++q)
                        r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
        return r;
    }

    Mat transpose() const {
        Mat r = zero(cols_, rows_, model_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

  private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }
    int rows_, cols_;
    T model_;
    std::vector<T> data_;
};

using MatrixK = Mat<Scalar>;
using MatrixS = Mat<Series>;

MatrixS promote(const MatrixK& m, const Field& f, int order);

/// Row echelon data from deterministic Gaussian elimination
/// (pivot = first nonzero entry scanning columns left to right, rows top down).
struct Echelon {
    int rank = 0;
    std::vector<int> pivot_cols;  // one per pivot row, increasing
    MatrixK rref;                 // reduced row echelon form
    MatrixK ops;                  // row-operation matrix: ops * input = rref
};

Echelon eliminate(const MatrixK& m, const Field& f);

struct RankKernelImage {
    int rank = 0;
    std::vector<std::vector<Scalar>> kernel;  // basis of the right kernel
    std::vector<std::vector<Scalar>> image;   // basis of the column space
};

/// Exact rank, kernel basis, image basis; kernel vectors are re-verified
/// against the input before returning.
RankKernelImage rank_kernel_image(const MatrixK& m, const Field& f);

struct LinearSolution {
    std::optional<std::vector<Scalar>> x;  // a solution when one exists
    std::vector<Scalar> certificate;       // left-kernel y with y.b != 0 otherwise
};

/// Solve m x = b; deterministic pivoting, free variables set to zero.
LinearSolution solve_linear(const MatrixK& m, const std::vector<Scalar>& b, const Field& f);

/// Matrix inverse over the field; throws NotInvertible for singular input.
MatrixK invert(const MatrixK& m, const Field& f);

}  // namespace defcat

#endif
