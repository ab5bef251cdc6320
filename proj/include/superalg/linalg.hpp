#ifndef SUPERALG_LINALG_HPP
#define SUPERALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "superalg/errors.hpp"
#include "superalg/numeric.hpp"

namespace superalg {

// Dense exact linear algebra over the rationals.  Everything downstream
// (radicals, base change, cohomology ranks, diagram endomorphisms) reduces
// to row reduction of these matrices.

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Mat mat_zero(std::size_t r, std::size_t c) { return Mat(r, Vec(c, Rat(0))); }

inline Mat mat_identity(std::size_t n) {
    Mat m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    require(a.empty() || b.empty() || a[0].size() == b.size(), errc::shape_mismatch,
            "matrix product shape");
    if (a.empty() || b.empty()) return {};
    Mat r = mat_zero(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline Vec mat_apply(const Mat& a, const Vec& x) {
    require(a.empty() || a[0].size() == x.size(), errc::shape_mismatch, "matrix apply shape");
    Vec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) r[i] += a[i][j] * x[j];
    return r;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of the right nullspace {x : m x = 0}.
inline std::vector<Vec> nullspace(Mat m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of m x = b, if any.
inline std::optional<Vec> solve(Mat m, Vec b) {
    std::size_t rows = m.size();
    if (rows == 0) return Vec{};
    std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == cols) return std::nullopt;  // pivot in the augmented column
    Vec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
    return x;
}

inline std::optional<Mat> inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat work = a;
    for (std::size_t i = 0; i < n; ++i) {
        require(a[i].size() == n, errc::shape_mismatch, "inverse of non-square matrix");
        for (std::size_t j = 0; j < n; ++j) work[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    auto pivots = rref(work);
    if (pivots.size() != n) return std::nullopt;
    Mat inv = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

inline Rat det(Mat m) {
    std::size_t n = m.size();
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            d = -d;
        }
        d *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return d;
}

/// Row space of the given vectors as an rref basis (zero rows dropped).
inline std::vector<Vec> span_basis(std::vector<Vec> rows) {
    if (rows.empty()) return {};
    Mat m(rows.begin(), rows.end());
    auto pivots = rref(m);
    m.resize(pivots.size());
    return {m.begin(), m.end()};
}

/// Is v in the row space spanned by `basis` (assumed rref)?
inline bool in_span(const std::vector<Vec>& rows, const Vec& v) {
    Mat m(rows.begin(), rows.end());
    std::size_t r0 = rank(m);
    m.push_back(v);
    return rank(m) == r0;
}

} // namespace superalg

#endif
