#ifndef SUPERALG_ARTIN_HPP
#define SUPERALG_ARTIN_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "superalg/linalg.hpp"
#include "superalg/z2.hpp"

namespace superalg {

/// Finite-dimensional supercommutative Q-algebra given by structure
/// constants on a homogeneous basis: e_i e_j = sum_k mult[i][j][k] e_k.
/// Construction does not validate; call validate() or use checked().
struct FiniteSuperAlgebra {
    std::vector<std::string> names;
    std::vector<int> parity;              // 0 even, 1 odd, per basis element
    std::vector<std::vector<Vec>> mult;   // mult[i][j] = coordinates of e_i e_j
    Vec unit;                             // coordinates of 1

    std::size_t dim() const { return names.size(); }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec r(dim(), Rat(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j] == 0) continue;
                Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (mult[i][j][k] != 0) r[k] += f * mult[i][j][k];
            }
        }
        return r;
    }

    /// Matrix of left multiplication by x.
    Mat mult_operator(const Vec& x) const {
        Mat m = mat_zero(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec ej(dim(), Rat(0));
            ej[j] = 1;
            Vec col = mul(x, ej);
            for (std::size_t i = 0; i < dim(); ++i) m[i][j] = col[i];
        }
        return m;
    }

    Vec basis_vec(std::size_t i) const {
        Vec v(dim(), Rat(0));
        v[i] = 1;
        return v;
    }

    /// Parity of a homogeneous vector; -1 when mixed or zero.
    int parity_of(const Vec& v) const {
        int p = -1;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (v[i] == 0) continue;
            if (p == -1) p = parity[i];
            else if (p != parity[i]) return -1;
        }
        return p;
    }

    void validate() const {
        require(names.size() == parity.size() && mult.size() == dim() && unit.size() == dim(),
                errc::not_an_algebra, "inconsistent presentation sizes");
        for (const auto& row : mult) {
            require(row.size() == dim(), errc::not_an_algebra, "structure constant shape");
            for (const auto& v : row)
                require(v.size() == dim(), errc::not_an_algebra, "structure constant shape");
        }
        // parity homogeneity of the products
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k)
                    require(mult[i][j][k] == 0 || parity[k] == ((parity[i] + parity[j]) & 1),
                            errc::not_an_algebra, "product not parity homogeneous");
        // supercommutativity on basis pairs
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                int sign = (parity[i] == 1 && parity[j] == 1) ? -1 : 1;
                for (std::size_t k = 0; k < dim(); ++k)
                    require(mult[i][j][k] == Rat(sign) * mult[j][i][k], errc::not_an_algebra,
                            "not supercommutative");
            }
        // associativity on basis triples
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                Vec eij = mult[i][j];
                for (std::size_t k = 0; k < dim(); ++k) {
                    Vec left = mul(eij, basis_vec(k));
                    Vec right = mul(basis_vec(i), mult[j][k]);
                    require(left == right, errc::not_an_algebra, "not associative");
                }
            }
        // unit
        require(parity_of(unit) == 0, errc::not_an_algebra, "unit not even");
        for (std::size_t i = 0; i < dim(); ++i) {
            require(mul(unit, basis_vec(i)) == basis_vec(i), errc::not_an_algebra,
                    "unit fails on the left");
        }
    }

    FiniteSuperAlgebra checked() const {
        validate();
        return *this;
    }
};

/// Graded module over a FiniteSuperAlgebra, presented by action constants
/// m_i . e_j = sum_k act[i][j][k] m_k (the algebra acts on the right).
struct GradedModule {
    std::vector<std::string> names;
    std::vector<int> parity;
    std::vector<std::vector<Vec>> act;  // act[module index][algebra index]

    std::size_t dim() const { return names.size(); }

    Vec apply(const Vec& m, const Vec& a) const {
        Vec r(dim(), Rat(0));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (m[i] == 0) continue;
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (a[j] == 0) continue;
                Rat f = m[i] * a[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (act[i][j][k] != 0) r[k] += f * act[i][j][k];
            }
        }
        return r;
    }

    Vec basis_vec(std::size_t i) const {
        Vec v(dim(), Rat(0));
        v[i] = 1;
        return v;
    }

    void validate(const FiniteSuperAlgebra& a) const {
        require(names.size() == parity.size() && act.size() == dim(), errc::not_a_module,
                "inconsistent module sizes");
        for (const auto& row : act) {
            require(row.size() == a.dim(), errc::not_a_module, "action shape");
            for (const auto& v : row)
                require(v.size() == dim(), errc::not_a_module, "action shape");
        }
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k)
                    require(act[i][j][k] == 0 || parity[k] == ((parity[i] + a.parity[j]) & 1),
                            errc::not_a_module, "action not parity homogeneous");
        for (std::size_t i = 0; i < dim(); ++i)
            require(apply(basis_vec(i), a.unit) == basis_vec(i), errc::not_a_module,
                    "unit does not act as identity");
        // (m e_j) e_k = m (e_j e_k)
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    Vec left = apply(act[i][j], a.basis_vec(k));
                    Vec right = apply(basis_vec(i), a.mult[j][k]);
                    require(left == right, errc::not_a_module, "action not associative");
                }
    }
};

/// The algebra as a right module over itself.
inline GradedModule algebra_as_module(const FiniteSuperAlgebra& a) {
    GradedModule m;
    m.names = a.names;
    m.parity = a.parity;
    m.act.resize(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m.act[i].resize(a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) m.act[i][j] = a.mult[i][j];
    }
    return m;
}

inline GradedModule parity_shift(const GradedModule& m) {
    GradedModule s = m;
    for (auto& p : s.parity) p ^= 1;
    for (auto& n : s.names) n = "P" + n;
    return s;
}

inline GradedModule module_direct_sum(const GradedModule& a, const GradedModule& b) {
    GradedModule s;
    std::size_t da = a.dim(), db = b.dim();
    for (std::size_t i = 0; i < da; ++i) {
        s.names.push_back(a.names[i] + ".l");
        s.parity.push_back(a.parity[i]);
    }
    for (std::size_t i = 0; i < db; ++i) {
        s.names.push_back(b.names[i] + ".r");
        s.parity.push_back(b.parity[i]);
    }
    std::size_t n = da + db;
    std::size_t algebra_dim = a.dim() ? a.act[0].size() : (b.dim() ? b.act[0].size() : 0);
    s.act.assign(n, std::vector<Vec>(algebra_dim, Vec(n, Rat(0))));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < algebra_dim; ++j)
            for (std::size_t k = 0; k < da; ++k) s.act[i][j][k] = a.act[i][j][k];
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < algebra_dim; ++j)
            for (std::size_t k = 0; k < db; ++k) s.act[da + i][j][da + k] = b.act[i][j][k];
    return s;
}

// ---------------------------------------------------------------------------
// Builders for the desk corpus
// ---------------------------------------------------------------------------

/// Q[x]/(x^n), x even.
inline FiniteSuperAlgebra truncated_polynomial_algebra(int n, const std::string& var = "x") {
    FiniteSuperAlgebra a;
    for (int i = 0; i < n; ++i) {
        a.names.push_back(i == 0 ? "1" : (i == 1 ? var : var + "^" + std::to_string(i)));
        a.parity.push_back(0);
    }
    a.mult.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) a.mult[i][j][std::size_t(i + j)] = 1;
    a.unit = Vec(n, Rat(0));
    a.unit[0] = 1;
    return a;
}

/// Exterior algebra Q<th_1..th_k>, generators odd.
inline FiniteSuperAlgebra exterior_algebra(int k) {
    std::size_t n = std::size_t(1) << k;
    FiniteSuperAlgebra a;
    a.names.resize(n);
    a.parity.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        std::string nm;
        for (int i = 0; i < k; ++i)
            if (m & (std::size_t(1) << i)) nm += (nm.empty() ? "" : "*") + ("th" + std::to_string(i + 1));
        a.names[m] = nm.empty() ? "1" : nm;
        a.parity[m] = std::popcount(m) & 1;
    }
    a.mult.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x & y) continue;
            int t = 0;
            for (std::size_t my = y; my; my &= my - 1) {
                int j = std::countr_zero(my);
                t += std::popcount(x >> (j + 1));
            }
            a.mult[x][y][x | y] = (t & 1) ? Rat(-1) : Rat(1);
        }
    a.unit = Vec(n, Rat(0));
    a.unit[0] = 1;
    return a;
}

/// Graded tensor product with the Koszul sign:
/// (a (x) c)(a' (x) c') = (-1)^{|c||a'|} (a a') (x) (c c').
inline FiniteSuperAlgebra tensor_product(const FiniteSuperAlgebra& a, const FiniteSuperAlgebra& b) {
    std::size_t da = a.dim(), db = b.dim(), n = da * db;
    FiniteSuperAlgebra t;
    t.names.resize(n);
    t.parity.resize(n);
    auto id = [&](std::size_t i, std::size_t j) { return i * db + j; };
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            t.names[id(i, j)] = a.names[i] + "(x)" + b.names[j];
            t.parity[id(i, j)] = (a.parity[i] + b.parity[j]) & 1;
        }
    t.mult.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t i2 = 0; i2 < da; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                    int sign = (b.parity[j] == 1 && a.parity[i2] == 1) ? -1 : 1;
                    for (std::size_t k = 0; k < da; ++k) {
                        if (a.mult[i][i2][k] == 0) continue;
                        for (std::size_t l = 0; l < db; ++l) {
                            if (b.mult[j][j2][l] == 0) continue;
                            t.mult[id(i, j)][id(i2, j2)][id(k, l)] +=
                                Rat(sign) * a.mult[i][i2][k] * b.mult[j][j2][l];
                        }
                    }
                }
    t.unit = Vec(n, Rat(0));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            if (a.unit[i] != 0 && b.unit[j] != 0) t.unit[id(i, j)] = a.unit[i] * b.unit[j];
    return t;
}

// ---------------------------------------------------------------------------
// Radical, quotient, length
// ---------------------------------------------------------------------------

/// Homogeneous basis of the largest graded nilpotent ideal: the span of
/// the odd part together with the preimage of the nilradical of the even
/// quotient A_+/(A_- A_-).  Nilradical of the commutative piece through
/// the trace form (characteristic zero).
inline std::vector<Vec> radical(const FiniteSuperAlgebra& a) {
    a.validate();
    std::size_t n = a.dim();
    std::vector<std::size_t> even_idx, odd_idx;
    for (std::size_t i = 0; i < n; ++i) (a.parity[i] == 0 ? even_idx : odd_idx).push_back(i);

    // span of products of odd basis elements inside A_+
    std::vector<Vec> odd_products;
    for (auto i : odd_idx)
        for (auto j : odd_idx) odd_products.push_back(a.mult[i][j]);
    std::vector<Vec> w_basis = span_basis(odd_products);

    // coordinates on A_+ modulo W: complement basis of W inside the even span
    // Treat A_+ as vectors over the even indices.
    auto restrict_even = [&](const Vec& v) {
        Vec r(even_idx.size(), Rat(0));
        for (std::size_t i = 0; i < even_idx.size(); ++i) r[i] = v[even_idx[i]];
        return r;
    };
    std::vector<Vec> w_even;
    for (const auto& v : w_basis) w_even.push_back(restrict_even(v));
    w_even = span_basis(w_even);

    // quotient basis: even basis vectors whose classes extend W to a basis
    Mat staging(w_even.begin(), w_even.end());
    std::vector<std::size_t> q_reps;  // indices into even_idx
    for (std::size_t i = 0; i < even_idx.size(); ++i) {
        Vec cand(even_idx.size(), Rat(0));
        cand[i] = 1;
        Mat trial = staging;
        trial.push_back(cand);
        if (rank(trial) > staging.size()) {
            staging.push_back(cand);
            rref(staging);
            q_reps.push_back(i);
        }
    }
    std::size_t qd = q_reps.size();

    // structure constants of the even quotient via reduction mod W
    Mat w_red(w_even.begin(), w_even.end());
    rref(w_red);
    auto reduce_mod_w = [&](Vec v) {
        // subtract W components using rref pivots
        for (const auto& row : w_red) {
            std::size_t piv = 0;
            while (piv < row.size() && row[piv] == 0) ++piv;
            if (piv == row.size()) continue;
            if (v[piv] != 0) {
                Rat f = v[piv];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
            }
        }
        return v;
    };
    // express reduced vector in quotient coordinates
    Mat q_mat = mat_zero(even_idx.size(), qd);
    for (std::size_t c = 0; c < qd; ++c) {
        Vec col(even_idx.size(), Rat(0));
        col[q_reps[c]] = 1;
        col = reduce_mod_w(col);
        for (std::size_t r = 0; r < even_idx.size(); ++r) q_mat[r][c] = col[r];
    }
    auto to_quotient = [&](const Vec& full) {
        Vec v = reduce_mod_w(restrict_even(full));
        auto sol = solve(q_mat, v);
        require(sol.has_value(), errc::not_an_algebra, "quotient coordinates failed");
        return *sol;
    };

    // multiplication operators on the quotient
    std::vector<Mat> q_ops(qd);
    for (std::size_t i = 0; i < qd; ++i) {
        Mat op = mat_zero(qd, qd);
        for (std::size_t j = 0; j < qd; ++j) {
            Vec prod = a.mult[even_idx[q_reps[i]]][even_idx[q_reps[j]]];
            Vec qc = to_quotient(prod);
            for (std::size_t r = 0; r < qd; ++r) op[r][j] = qc[r];
        }
        q_ops[i] = std::move(op);
    }
    auto trace = [](const Mat& m) {
        Rat t(0);
        for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
        return t;
    };
    // Gram matrix of (x,y) -> Tr(L_x L_y); its nullspace is the nilradical
    Mat gram = mat_zero(qd, qd);
    for (std::size_t i = 0; i < qd; ++i)
        for (std::size_t j = 0; j < qd; ++j) gram[i][j] = trace(mat_mul(q_ops[i], q_ops[j]));
    std::vector<Vec> nil_q = nullspace(gram);

    // assemble: odd span + W + preimage of the nilradical
    std::vector<Vec> rad;
    for (auto i : odd_idx) rad.push_back(a.basis_vec(i));
    for (const auto& w : w_even) {
        Vec full(n, Rat(0));
        for (std::size_t i = 0; i < even_idx.size(); ++i) full[even_idx[i]] = w[i];
        rad.push_back(full);
    }
    for (const auto& nq : nil_q) {
        Vec full(n, Rat(0));
        for (std::size_t c = 0; c < qd; ++c)
            if (nq[c] != 0) full[even_idx[q_reps[c]]] += nq[c];
        rad.push_back(full);
    }
    return span_basis(rad);
}

/// Quotient by a graded two-sided ideal given by spanning vectors.
inline FiniteSuperAlgebra quotient_algebra(const FiniteSuperAlgebra& a,
                                           const std::vector<Vec>& ideal) {
    std::size_t n = a.dim();
    std::vector<Vec> ideal_basis = span_basis(ideal);
    Mat red(ideal_basis.begin(), ideal_basis.end());
    rref(red);
    auto reduce = [&](Vec v) {
        for (const auto& row : red) {
            std::size_t piv = 0;
            while (piv < row.size() && row[piv] == 0) ++piv;
            if (piv == row.size()) continue;
            if (v[piv] != 0) {
                Rat f = v[piv];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
            }
        }
        return v;
    };
    std::vector<std::size_t> reps;
    Mat staging = red;
    for (std::size_t i = 0; i < n; ++i) {
        Mat trial = staging;
        trial.push_back(a.basis_vec(i));
        if (rank(trial) > staging.size()) {
            staging.push_back(a.basis_vec(i));
            rref(staging);
            reps.push_back(i);
        }
    }
    std::size_t qd = reps.size();
    Mat coord = mat_zero(n, qd);
    for (std::size_t c = 0; c < qd; ++c) {
        Vec col = reduce(a.basis_vec(reps[c]));
        for (std::size_t r = 0; r < n; ++r) coord[r][c] = col[r];
    }
    auto to_q = [&](const Vec& v) {
        auto sol = solve(coord, reduce(v));
        require(sol.has_value(), errc::not_an_algebra, "ideal is not an ideal");
        return *sol;
    };
    FiniteSuperAlgebra q;
    for (auto r : reps) {
        q.names.push_back(a.names[r]);
        q.parity.push_back(a.parity[r]);
    }
    q.mult.assign(qd, std::vector<Vec>(qd, Vec(qd, Rat(0))));
    for (std::size_t i = 0; i < qd; ++i)
        for (std::size_t j = 0; j < qd; ++j) q.mult[i][j] = to_q(a.mult[reps[i]][reps[j]]);
    q.unit = to_q(a.unit);
    return q;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> graded_dims(const GradedModule& m,
                                                       const std::vector<Vec>& subspace) {
    // subspace assumed homogeneous-spannable: split by parity components
    std::vector<Vec> evens, odds;
    for (const auto& v : subspace) {
        Vec e(v.size(), Rat(0)), o(v.size(), Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i) (m.parity[i] == 0 ? e[i] : o[i]) = v[i];
        if (!is_zero_vec(e)) evens.push_back(e);
        if (!is_zero_vec(o)) odds.push_back(o);
    }
    return {span_basis(evens).size(), span_basis(odds).size()};
}

} // namespace detail

/// Super length of M over a local algebra with residue field Q: counts
/// even/odd composition factors through the radical filtration
/// M > rad M > rad^2 M > ... > 0.
inline Z2 super_length(const FiniteSuperAlgebra& a, const GradedModule& m) {
    m.validate(a);
    std::vector<Vec> rad = radical(a);
    require(a.dim() - rad.size() == 1, errc::not_local,
            "algebra is not local with residue field Q");
    // current = spanning set of rad^i M
    std::vector<Vec> current;
    for (std::size_t i = 0; i < m.dim(); ++i) current.push_back(m.basis_vec(i));
    Z2 total;
    std::size_t guard = m.dim() + 1;
    while (!current.empty() && guard-- > 0) {
        std::vector<Vec> next;
        for (const auto& v : current)
            for (const auto& r : rad) {
                Vec w = m.apply(v, r);
                if (!is_zero_vec(w)) next.push_back(w);
            }
        next = span_basis(next);
        auto [e0, o0] = detail::graded_dims(m, current);
        auto [e1, o1] = detail::graded_dims(m, next);
        total += Z2(Int(e0 - e1), Int(o0 - o1));
        current = std::move(next);
    }
    require(current.empty(), errc::not_a_module, "radical filtration failed to terminate");
    return total;
}

/// Unit-preserving homogeneous algebra morphism A -> B given by the images
/// of the A-basis in B-coordinates.
struct AlgebraMorphism {
    std::vector<Vec> images;

    void validate(const FiniteSuperAlgebra& a, const FiniteSuperAlgebra& b) const {
        require(images.size() == a.dim(), errc::not_a_morphism, "morphism size");
        for (const auto& v : images)
            require(v.size() == b.dim(), errc::not_a_morphism, "morphism codomain size");
        Vec unit_image(b.dim(), Rat(0));
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (a.unit[i] != 0)
                for (std::size_t k = 0; k < b.dim(); ++k) unit_image[k] += a.unit[i] * images[i][k];
        require(unit_image == b.unit, errc::not_a_morphism, "unit not preserved");
        for (std::size_t i = 0; i < a.dim(); ++i) {
            int pa = a.parity[i], pb = b.parity_of(images[i]);
            require(is_zero_vec(images[i]) || pb == pa, errc::not_a_morphism,
                    "parity not preserved");
        }
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                Vec lhs = b.mul(images[i], images[j]);
                Vec rhs(b.dim(), Rat(0));
                for (std::size_t k = 0; k < a.dim(); ++k)
                    if (a.mult[i][j][k] != 0)
                        for (std::size_t l = 0; l < b.dim(); ++l)
                            rhs[l] += a.mult[i][j][k] * images[k][l];
                require(lhs == rhs, errc::not_a_morphism, "multiplicativity fails");
            }
    }

    static AlgebraMorphism identity(const FiniteSuperAlgebra& a) {
        AlgebraMorphism f;
        for (std::size_t i = 0; i < a.dim(); ++i) f.images.push_back(a.basis_vec(i));
        return f;
    }
};

/// M (x)_A B computed by linear algebra over Q: start from M (x)_Q B and
/// divide by the relations (m.a)(x)b - m(x)(f(a)b).
inline GradedModule base_change_module(const FiniteSuperAlgebra& a, const GradedModule& m,
                                       const FiniteSuperAlgebra& b, const AlgebraMorphism& f) {
    m.validate(a);
    f.validate(a, b);
    std::size_t dm = m.dim(), db = b.dim(), n = dm * db;
    auto id = [&](std::size_t i, std::size_t j) { return i * db + j; };

    std::vector<Vec> relations;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t s = 0; s < a.dim(); ++s)
            for (std::size_t j = 0; j < db; ++j) {
                Vec rel(n, Rat(0));
                const Vec& ma = m.act[i][s];  // m_i . a_s in M
                for (std::size_t k = 0; k < dm; ++k)
                    if (ma[k] != 0) rel[id(k, j)] += ma[k];
                Vec fb = b.mul(f.images[s], b.basis_vec(j));  // f(a_s) b_j in B
                for (std::size_t l = 0; l < db; ++l)
                    if (fb[l] != 0) rel[id(i, l)] -= fb[l];
                if (!is_zero_vec(rel)) relations.push_back(std::move(rel));
            }
    std::vector<Vec> rel_basis = span_basis(relations);
    Mat red(rel_basis.begin(), rel_basis.end());
    rref(red);
    auto reduce = [&](Vec v) {
        for (const auto& row : red) {
            std::size_t piv = 0;
            while (piv < row.size() && row[piv] == 0) ++piv;
            if (piv == row.size()) continue;
            if (v[piv] != 0) {
                Rat fct = v[piv];
                for (std::size_t jj = 0; jj < v.size(); ++jj) v[jj] -= fct * row[jj];
            }
        }
        return v;
    };
    std::vector<std::size_t> reps;
    Mat staging = red;
    for (std::size_t x = 0; x < n; ++x) {
        Vec cand(n, Rat(0));
        cand[x] = 1;
        Mat trial = staging;
        trial.push_back(cand);
        if (rank(trial) > staging.size()) {
            staging.push_back(cand);
            rref(staging);
            reps.push_back(x);
        }
    }
    std::size_t qd = reps.size();
    Mat coord = mat_zero(n, qd);
    for (std::size_t c = 0; c < qd; ++c) {
        Vec col(n, Rat(0));
        col[reps[c]] = 1;
        col = reduce(col);
        for (std::size_t r = 0; r < n; ++r) coord[r][c] = col[r];
    }
    auto to_q = [&](const Vec& v) {
        auto sol = solve(coord, reduce(v));
        require(sol.has_value(), errc::not_a_module, "tensor coordinates failed");
        return *sol;
    };

    GradedModule t;
    for (auto r : reps) {
        std::size_t i = r / db, j = r % db;
        t.names.push_back(m.names[i] + "(x)" + b.names[j]);
        t.parity.push_back((m.parity[i] + b.parity[j]) & 1);
    }
    t.act.assign(qd, std::vector<Vec>(b.dim(), Vec(qd, Rat(0))));
    for (std::size_t c = 0; c < qd; ++c) {
        std::size_t i = reps[c] / db, j = reps[c] % db;
        for (std::size_t s = 0; s < db; ++s) {
            // (m_i (x) b_j) . b_s = m_i (x) (b_j b_s)
            Vec prod = b.mul(b.basis_vec(j), b.basis_vec(s));
            Vec full(n, Rat(0));
            for (std::size_t l = 0; l < db; ++l)
                if (prod[l] != 0) full[id(i, l)] += prod[l];
            t.act[c][s] = to_q(full);
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Semilocal decomposition (rational-eigenvalue splitting)
// ---------------------------------------------------------------------------

/// Splits a (possibly semilocal) algebra into direct factors along
/// rational eigenvalues of multiplication operators, iterated to a fixed
/// point.  Factors whose residue fields are proper extensions of Q are
/// returned whole.  Each entry carries the projection of the module.
struct LocalFactor {
    FiniteSuperAlgebra algebra;
    GradedModule module;
};

std::vector<LocalFactor> local_factors(const FiniteSuperAlgebra& a, const GradedModule& m);

/// Super length over a semilocal algebra: sum of the lengths over the
/// local factors.
inline Z2 super_length_semilocal(const FiniteSuperAlgebra& a, const GradedModule& m) {
    Z2 total;
    for (const auto& f : local_factors(a, m)) total += super_length(f.algebra, f.module);
    return total;
}

} // namespace superalg

#include "superalg/artin_split.hpp"

#endif
