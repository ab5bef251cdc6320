#ifndef SUPERALG_SUPERMATRIX_HPP
#define SUPERALG_SUPERMATRIX_HPP

#include <cstddef>
#include <vector>

#include "superalg/errors.hpp"
#include "superalg/grassmann.hpp"

namespace superalg {

using GrassmannMat = std::vector<std::vector<Grassmann>>;

inline GrassmannMat gmat_zero(std::size_t r, std::size_t c, int k) {
    return GrassmannMat(r, std::vector<Grassmann>(c, Grassmann(k)));
}

inline GrassmannMat gmat_identity(std::size_t n, int k) {
    GrassmannMat m = gmat_zero(n, n, k);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Grassmann(k, Rat(1));
    return m;
}

inline GrassmannMat gmat_mul(const GrassmannMat& a, const GrassmannMat& b) {
    if (a.empty() || b.empty()) return {};
    require(a[0].size() == b.size(), errc::rank_mismatch, "block product shape");
    GrassmannMat r(a.size(), std::vector<Grassmann>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            Grassmann acc;
            for (std::size_t l = 0; l < b.size(); ++l) acc += a[i][l] * b[l][j];
            r[i][j] = acc;
        }
    return r;
}

inline GrassmannMat gmat_add(const GrassmannMat& a, const GrassmannMat& b, int sign = 1) {
    GrassmannMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            r[i][j] = sign > 0 ? r[i][j] + b[i][j] : r[i][j] - b[i][j];
    return r;
}

/// Determinant of a matrix with commuting (even) entries.  Division-free
/// Laplace expansion with memoization over column subsets; fine for the
/// desk-scale ranks this kernel handles.
inline Grassmann det_even(const GrassmannMat& m) {
    std::size_t n = m.size();
    for (const auto& row : m) {
        require(row.size() == n, errc::rank_mismatch, "determinant of non-square block");
        for (const auto& e : row)
            require(e.is_even(), errc::odd_parity_violation, "determinant block must be even");
    }
    if (n == 0) return Grassmann(0, Rat(1));
    require(n <= 16, errc::rank_mismatch, "determinant rank cap exceeded");
    // minor over rows [n - popcount(mask) .. n) and the column subset `mask`
    std::vector<Grassmann> memo(std::size_t(1) << n);
    memo[0] = Grassmann(0, Rat(1));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t sz = std::popcount(mask);
        std::size_t row = n - sz;
        Grassmann acc;
        int sign = 1;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int col = std::countr_zero(rest);
            const Grassmann& e = m[row][col];
            if (!e.is_zero()) {
                Grassmann term = e * memo[mask & ~(1u << col)];
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo[mask] = acc;
    }
    return memo[(1u << n) - 1];
}

/// Adjugate-based inverse over the commutative even part: A^-1 = adj(A) det(A)^-1.
inline GrassmannMat gmat_inverse_even(const GrassmannMat& m) {
    std::size_t n = m.size();
    Grassmann d = det_even(m);
    require(d.body() != 0, errc::non_invertible_block, "even block with non-unit determinant");
    Grassmann dinv = d.inverse();
    GrassmannMat inv(n, std::vector<Grassmann>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GrassmannMat minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Grassmann> row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Grassmann cof = det_even(minor);
            if ((i + j) & 1) cof = -cof;
            inv[i][j] = cof * dinv;
        }
    return inv;
}

/// Parity-blocked matrix acting on a free module of rank p|q.  An even
/// supermatrix has even entries in A, D and odd entries in B, C.
struct SuperMatrix {
    int p = 0;
    int q = 0;
    GrassmannMat a, b, c, d;

    SuperMatrix() = default;
    SuperMatrix(int p_, int q_, GrassmannMat a_, GrassmannMat b_, GrassmannMat c_, GrassmannMat d_)
        : p(p_), q(q_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        check_shape();
    }

    static SuperMatrix identity(int p, int q, int k) {
        return SuperMatrix(p, q, gmat_identity(p, k), gmat_zero(p, q, k), gmat_zero(q, p, k),
                           gmat_identity(q, k));
    }

    void check_shape() const {
        auto dims_ok = [](const GrassmannMat& m, int r, int c) {
            if ((int)m.size() != r) return false;
            for (const auto& row : m)
                if ((int)row.size() != c) return false;
            return true;
        };
        require(dims_ok(a, p, p) && dims_ok(b, p, q) && dims_ok(c, q, p) && dims_ok(d, q, q),
                errc::rank_mismatch, "block shapes do not match ranks");
    }

    bool is_even() const {
        for (const auto& row : a)
            for (const auto& e : row)
                if (!e.is_even()) return false;
        for (const auto& row : d)
            for (const auto& e : row)
                if (!e.is_even()) return false;
        for (const auto& row : b)
            for (const auto& e : row)
                if (!e.is_odd()) return false;
        for (const auto& row : c)
            for (const auto& e : row)
                if (!e.is_odd()) return false;
        return true;
    }
};

inline SuperMatrix supermatrix_mul(const SuperMatrix& m, const SuperMatrix& n) {
    require(m.p == n.p && m.q == n.q, errc::rank_mismatch, "supermatrix product rank mismatch");
    return SuperMatrix(m.p, m.q,
                       gmat_add(gmat_mul(m.a, n.a), gmat_mul(m.b, n.c)),
                       gmat_add(gmat_mul(m.a, n.b), gmat_mul(m.b, n.d)),
                       gmat_add(gmat_mul(m.c, n.a), gmat_mul(m.d, n.c)),
                       gmat_add(gmat_mul(m.c, n.b), gmat_mul(m.d, n.d)));
}

/// ber(M) = det(A - B D^-1 C) det(D)^-1 for an even supermatrix with
/// invertible D and invertible Schur complement.
inline Grassmann berezinian(const SuperMatrix& m) {
    require(m.is_even(), errc::odd_parity_violation, "berezinian of a non-even supermatrix");
    if (m.q == 0) return det_even(m.a);
    Grassmann dd = det_even(m.d);
    require(dd.body() != 0, errc::non_invertible_block, "odd-odd block not invertible");
    if (m.p == 0) return dd.inverse();
    GrassmannMat dinv = gmat_inverse_even(m.d);
    GrassmannMat schur = gmat_add(m.a, gmat_mul(gmat_mul(m.b, dinv), m.c), -1);
    Grassmann ds = det_even(schur);
    require(ds.body() != 0, errc::non_invertible_block, "Schur complement not invertible");
    return ds * dd.inverse();
}

} // namespace superalg

#endif
