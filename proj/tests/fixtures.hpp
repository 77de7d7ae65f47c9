#ifndef DEFCAT_TEST_FIXTURES_HPP
#define DEFCAT_TEST_FIXTURES_HPP

#include "defcat/complex.hpp"
#include "defcat/fusion.hpp"

namespace defcat::fixtures {

/// Pointed category on Z/m: simples are group elements, fusion is addition,
/// associator entries omega(a,b,c) (trivial when omega is null).
inline FusionCat vec_zmod(int m, const Field& f,
                          const std::function<Scalar(int, int, int)>& omega = nullptr) {
    FusionCat c;
    c.field = f;
    c.unit = 0;
    for (int i = 0; i < m; ++i) c.names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
    c.Ntab.assign(static_cast<size_t>(m) * m * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) c.Ntab[(static_cast<size_t>(a) * m + b) * m + (a + b) % m] = 1;
    c.lambda.assign(static_cast<size_t>(m), Scalar::one(f));
    c.rho.assign(static_cast<size_t>(m), Scalar::one(f));
    c.Fmats.resize(static_cast<size_t>(m) * m * m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc)
                for (int d = 0; d < m; ++d) {
                    bool hit = d == (a + b + cc) % m;
                    MatrixK mat = MatrixK::zero(hit ? 1 : 0, hit ? 1 : 0, Scalar::zero(f));
                    if (hit) mat.at(0, 0) = omega ? omega(a, b, cc) : Scalar::one(f);
                    c.F(a, b, cc, d) = std::move(mat);
                }
    return c;
}

/// Z/2 with the sign associator omega(a,b,c) = (-1)^{abc} over Q.
inline FusionCat vec_z2_sign_q() {
    return vec_zmod(2, Field::rationals(), [](int a, int b, int c) {
        return (a * b * c) % 2 == 1 ? -Scalar::one(Field::rationals()) : Scalar::one(Field::rationals());
    });
}

/// Pointed category on Z/2 x Z/2 with trivial associator.
inline FusionCat vec_z2z2(const Field& f) {
    FusionCat c;
    c.field = f;
    c.unit = 0;
    c.names = {"00", "01", "10", "11"};
    int m = 4;
    auto add = [](int a, int b) { return (a ^ b); };
    c.Ntab.assign(static_cast<size_t>(m) * m * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) c.Ntab[(static_cast<size_t>(a) * m + b) * m + add(a, b)] = 1;
    c.lambda.assign(static_cast<size_t>(m), Scalar::one(f));
    c.rho.assign(static_cast<size_t>(m), Scalar::one(f));
    c.Fmats.resize(static_cast<size_t>(m) * m * m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int cc = 0; cc < m; ++cc)
                for (int d = 0; d < m; ++d) {
                    bool hit = d == add(add(a, b), cc);
                    MatrixK mat = MatrixK::zero(hit ? 1 : 0, hit ? 1 : 0, Scalar::zero(f));
                    if (hit) mat.at(0, 0) = Scalar::one(f);
                    c.F(a, b, cc, d) = std::move(mat);
                }
    return c;
}

/// Fibonacci fusion data over GF(19), where x^2 = x + 1 has the root 5.
inline FusionCat fibonacci_gf19() {
    Field f = Field::prime(19);
    FusionCat c;
    c.field = f;
    c.unit = 0;
    c.names = {"1", "t"};
    c.Ntab.assign(8, 0);
    auto setN = [&](int a, int b, int cc, int v) { c.Ntab[(static_cast<size_t>(a) * 2 + b) * 2 + cc] = v; };
    setN(0, 0, 0, 1);
    setN(0, 1, 1, 1);
    setN(1, 0, 1, 1);
    setN(1, 1, 0, 1);
    setN(1, 1, 1, 1);
    c.lambda.assign(2, Scalar::one(f));
    c.rho.assign(2, Scalar::one(f));
    c.Fmats.resize(16);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int cc = 0; cc < 2; ++cc)
                for (int d = 0; d < 2; ++d) {
                    int n = c.left_dim(a, b, cc, d);
                    c.F(a, b, cc, d) = MatrixK::identity(n, Scalar::zero(f));
                }
    // phi = 5, phi^{-1} = 4, phi^{-1/2} = 2 (2^2 = 4)
    MatrixK ftt = MatrixK::zero(2, 2, Scalar::zero(f));
    ftt.at(0, 0) = Scalar::residue(4, 19);
    ftt.at(0, 1) = Scalar::residue(2, 19);
    ftt.at(1, 0) = Scalar::residue(2, 19);
    ftt.at(1, 1) = Scalar::residue(-4, 19);
    c.F(1, 1, 1, 1) = std::move(ftt);
    return c;
}

/// Trivial-coefficient group cochain complex for a finite group given by its
/// multiplication table, degrees 0..maxdeg. Independent oracle for the
/// category complexes of pointed categories.
inline GradedComplex group_cochain_complex(const std::vector<std::vector<int>>& mult, int identity, const Field& f,
                                           int maxdeg) {
    int m = static_cast<int>(mult.size());
    (void)identity;
    std::vector<int> dims;
    for (int n = 0; n <= maxdeg; ++n) {
        int d = 1;
        for (int i = 0; i < n; ++i) d *= m;
        dims.push_back(d);
    }
    std::vector<MatrixK> diffs;
    for (int n = 0; n < maxdeg; ++n) {
        MatrixK d = MatrixK::zero(dims[static_cast<size_t>(n + 1)], dims[static_cast<size_t>(n)], Scalar::zero(f));
        for (int row = 0; row < d.rows(); ++row) {
            std::vector<int> a(static_cast<size_t>(n + 1));
            int t = row;
            for (int i = n; i >= 0; --i) {
                a[static_cast<size_t>(i)] = t % m;
                t /= m;
            }
            auto col_of = [&](const std::vector<int>& b) {
                int c = 0;
                for (int x : b) c = c * m + x;
                return c;
            };
            std::vector<int> b(a.begin() + 1, a.end());
            d.at(row, col_of(b)) += Scalar::one(f);
            for (int i = 1; i <= n; ++i) {
                std::vector<int> fused;
                for (int j = 0; j <= n; ++j) {
                    if (j == i - 1) {
                        fused.push_back(mult[static_cast<size_t>(a[static_cast<size_t>(j)])][static_cast<size_t>(a[static_cast<size_t>(j + 1)])]);
                        ++j;
                    } else {
                        fused.push_back(a[static_cast<size_t>(j)]);
                    }
                }
                d.at(row, col_of(fused)) += (i % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
            }
            std::vector<int> front(a.begin(), a.end() - 1);
            d.at(row, col_of(front)) += (n % 2 == 0) ? -Scalar::one(f) : Scalar::one(f);
        }
        diffs.push_back(std::move(d));
    }
    return GradedComplex(f, 0, dims, diffs);
}

inline std::vector<std::vector<int>> zmod_mult(int m) {
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % m;
    return t;
}

inline std::vector<std::vector<int>> z2z2_mult() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = a ^ b;
    return t;
}

}  // namespace defcat::fixtures

#endif
