#ifndef SUPERALG_ARTIN_SPLIT_HPP
#define SUPERALG_ARTIN_SPLIT_HPP

// Decomposition of semilocal algebras into local factors through
// orthogonal idempotents of the semisimple quotient.  Splitting directions
// are found by factoring minimal polynomials of quotient elements; factors
// whose residue fields stay irrational are returned whole.

#include "superalg/artin.hpp"
#include "superalg/factor.hpp"

namespace superalg {

namespace detail {

/// Minimal polynomial of x inside the commutative algebra S (given by its
/// multiplication), by Krylov iteration on the powers of x.
inline QPoly minimal_polynomial(const FiniteSuperAlgebra& s, const Vec& x) {
    std::vector<Vec> powers;
    Vec cur = s.unit;
    for (std::size_t step = 0; step <= s.dim(); ++step) {
        Mat m(powers.begin(), powers.end());
        // transpose into columns for solving
        Mat cols = mat_zero(s.dim(), powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (std::size_t r = 0; r < s.dim(); ++r) cols[r][c] = powers[c][r];
        auto sol = solve(cols, cur);
        if (sol.has_value()) {
            std::vector<Rat> coeffs(powers.size() + 1, Rat(0));
            for (std::size_t i = 0; i < sol->size(); ++i) coeffs[i] = -(*sol)[i];
            coeffs[powers.size()] = 1;
            return QPoly(std::move(coeffs));
        }
        powers.push_back(cur);
        cur = s.mul(cur, x);
    }
    fail(errc::not_an_algebra, "minimal polynomial search exceeded dimension");
}

struct SubAlgebra {
    FiniteSuperAlgebra algebra;
    std::vector<Vec> basis;  // in ambient coordinates
};

inline Vec coords_in_basis(const std::vector<Vec>& basis, const Vec& v, errc code,
                           const char* what) {
    Mat cols = mat_zero(v.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < v.size(); ++r) cols[r][c] = basis[c][r];
    auto sol = solve(cols, v);
    require(sol.has_value(), code, what);
    return *sol;
}

/// The unital subalgebra e A for an even idempotent e.
inline SubAlgebra corner_algebra(const FiniteSuperAlgebra& a, const Vec& e) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec v = a.mul(e, a.basis_vec(i));
        if (!is_zero_vec(v)) gens.push_back(v);
    }
    SubAlgebra sub;
    sub.basis = span_basis(gens);
    std::size_t r = sub.basis.size();
    FiniteSuperAlgebra& q = sub.algebra;
    for (std::size_t i = 0; i < r; ++i) {
        int p = a.parity_of(sub.basis[i]);
        require(p >= 0, errc::not_an_algebra, "corner basis not homogeneous");
        q.names.push_back("c" + std::to_string(i));
        q.parity.push_back(p);
    }
    q.mult.assign(r, std::vector<Vec>(r, Vec(r, Rat(0))));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            q.mult[i][j] = coords_in_basis(sub.basis, a.mul(sub.basis[i], sub.basis[j]),
                                           errc::not_an_algebra, "corner not closed");
    q.unit = coords_in_basis(sub.basis, e, errc::not_an_algebra, "idempotent outside corner");
    return sub;
}

inline GradedModule corner_module(const GradedModule& m, const SubAlgebra& sub, const Vec& e) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Vec v = m.apply(m.basis_vec(i), e);
        if (!is_zero_vec(v)) gens.push_back(v);
    }
    std::vector<Vec> basis = span_basis(gens);
    GradedModule q;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int p = -1;
        for (std::size_t c = 0; c < basis[i].size(); ++c)
            if (basis[i][c] != 0) {
                p = m.parity[c];
                break;
            }
        q.names.push_back("u" + std::to_string(i));
        q.parity.push_back(p < 0 ? 0 : p);
    }
    q.act.assign(basis.size(), std::vector<Vec>(sub.basis.size(), Vec(basis.size(), Rat(0))));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < sub.basis.size(); ++j)
            q.act[i][j] = coords_in_basis(basis, m.apply(basis[i], sub.basis[j]),
                                          errc::not_a_module, "corner module not closed");
    return q;
}

/// Lifts an idempotent of A/rad to an exact idempotent of A by Newton
/// iteration e <- 3e^2 - 2e^3; terminates because the defect is nilpotent.
inline Vec lift_idempotent(const FiniteSuperAlgebra& a, Vec e) {
    for (int iter = 0; iter < 64; ++iter) {
        Vec e2 = a.mul(e, e);
        if (e2 == e) return e;
        Vec e3 = a.mul(e2, e);
        Vec next(a.dim(), Rat(0));
        for (std::size_t i = 0; i < a.dim(); ++i) next[i] = 3 * e2[i] - 2 * e3[i];
        e = std::move(next);
    }
    fail(errc::not_an_algebra, "idempotent lifting did not converge");
}

} // namespace detail

inline std::vector<LocalFactor> local_factors(const FiniteSuperAlgebra& a, const GradedModule& m) {
    m.validate(a);
    std::vector<LocalFactor> out;
    std::vector<LocalFactor> queue{LocalFactor{a, m}};
    while (!queue.empty()) {
        LocalFactor item = std::move(queue.back());
        queue.pop_back();
        std::vector<Vec> rad = radical(item.algebra);
        if (item.algebra.dim() - rad.size() <= 1) {
            out.push_back(std::move(item));
            continue;
        }
        // semisimple quotient and its coordinates inside the algebra
        const FiniteSuperAlgebra& alg = item.algebra;
        std::vector<Vec> rad_basis = span_basis(rad);
        Mat red(rad_basis.begin(), rad_basis.end());
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
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            Mat trial = staging;
            trial.push_back(alg.basis_vec(i));
            if (rank(trial) > staging.size()) {
                staging.push_back(alg.basis_vec(i));
                rref(staging);
                reps.push_back(i);
            }
        }
        std::size_t qd = reps.size();
        Mat coord = mat_zero(alg.dim(), qd);
        for (std::size_t c = 0; c < qd; ++c) {
            Vec col = reduce(alg.basis_vec(reps[c]));
            for (std::size_t r = 0; r < alg.dim(); ++r) coord[r][c] = col[r];
        }
        auto to_q = [&](const Vec& v) {
            auto sol = solve(coord, reduce(v));
            require(sol.has_value(), errc::not_an_algebra, "semisimple coordinates failed");
            return *sol;
        };
        FiniteSuperAlgebra bar;
        for (auto r : reps) {
            bar.names.push_back(alg.names[r]);
            bar.parity.push_back(alg.parity[r]);
        }
        bar.mult.assign(qd, std::vector<Vec>(qd, Vec(qd, Rat(0))));
        for (std::size_t i = 0; i < qd; ++i)
            for (std::size_t j = 0; j < qd; ++j) bar.mult[i][j] = to_q(alg.mult[reps[i]][reps[j]]);
        bar.unit = to_q(alg.unit);

        // search a splitting element: basis classes, then pairwise sums
        std::vector<Vec> candidates;
        for (std::size_t i = 0; i < qd; ++i) candidates.push_back(bar.basis_vec(i));
        for (std::size_t i = 0; i < qd; ++i)
            for (std::size_t j = i + 1; j < qd; ++j) {
                Vec v = bar.basis_vec(i);
                for (std::size_t k = 0; k < qd; ++k) v[k] += bar.basis_vec(j)[k];
                candidates.push_back(std::move(v));
            }
        bool split_done = false;
        for (const auto& x : candidates) {
            QPoly mu = detail::minimal_polynomial(bar, x);
            auto fac = factor_rational(mu);
            if (fac.factors.size() < 2) continue;
            QPoly p1 = fac.factors[0].first;
            for (int e = 1; e < fac.factors[0].second; ++e) p1 *= fac.factors[0].first;
            QPoly p2 = mu / p1;
            QPoly u, v;
            QPoly g = extended_gcd(p1, p2, u, v);
            require(g.degree() == 0, errc::not_an_algebra, "inseparable semisimple quotient");
            // ebar = (v p2)(x): 1 on the p1 part, 0 on the p2 part
            QPoly vp2 = v * p2;
            Vec ebar(qd, Rat(0));
            Vec power = bar.unit;
            for (int i = 0; i <= vp2.degree(); ++i) {
                Rat ci = vp2.coeff(i);
                if (ci != 0)
                    for (std::size_t k = 0; k < qd; ++k) ebar[k] += ci * power[k];
                power = bar.mul(power, x);
            }
            // preimage in the algebra, then exact lift
            Vec e0(alg.dim(), Rat(0));
            for (std::size_t c = 0; c < qd; ++c)
                if (ebar[c] != 0) e0[reps[c]] += ebar[c];
            Vec e = detail::lift_idempotent(alg, e0);
            Vec ec(alg.dim(), Rat(0));
            for (std::size_t i = 0; i < alg.dim(); ++i) ec[i] = alg.unit[i] - e[i];
            if (is_zero_vec(e) || is_zero_vec(ec)) continue;
            auto sub1 = detail::corner_algebra(alg, e);
            auto sub2 = detail::corner_algebra(alg, ec);
            queue.push_back({sub1.algebra, detail::corner_module(item.module, sub1, e)});
            queue.push_back({sub2.algebra, detail::corner_module(item.module, sub2, ec)});
            split_done = true;
            break;
        }
        if (!split_done) out.push_back(std::move(item));  // irrational residue field
    }
    return out;
}

} // namespace superalg

#endif
