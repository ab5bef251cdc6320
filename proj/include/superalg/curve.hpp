#ifndef SUPERALG_CURVE_HPP
#define SUPERALG_CURVE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superalg/factor.hpp"
#include "superalg/linalg.hpp"
#include "superalg/ratfunc.hpp"
#include "superalg/z2.hpp"

namespace superalg {

/// Closed point of the affine or projective line over Q: a monic
/// irreducible polynomial in t, or the point at infinity.
struct CurvePoint {
    bool at_infinity = false;
    QPoly poly;  // monic irreducible when finite

    CurvePoint() = default;
    static CurvePoint infinity() {
        CurvePoint p;
        p.at_infinity = true;
        return p;
    }
    static CurvePoint finite(QPoly f) {
        require(f.degree() >= 1, errc::unknown_point, "point must have positive degree");
        f = f.monic();
        require(is_irreducible(f), errc::unknown_point,
                "point polynomial is not irreducible: " + poly_str(f));
        CurvePoint p;
        p.poly = std::move(f);
        return p;
    }
    static CurvePoint rational(const Rat& a) {
        CurvePoint p;
        p.poly = QPoly(std::vector<Rat>{-a, Rat(1)});
        return p;
    }

    /// Residue field degree over Q.
    int degree() const { return at_infinity ? 1 : poly.degree(); }

    std::string str() const { return at_infinity ? "inf" : poly_str(poly); }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        return a.at_infinity == b.at_infinity && a.poly == b.poly;
    }
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
        if (a.at_infinity != b.at_infinity) return b.at_infinity;  // finite points first
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.c < b.poly.c;
    }
};

/// Split model of a superdomain of even dimension one over the affine or
/// projective line: structure sheaf O + Pi L with L generically of rank
/// `odd_rank` (0 or 1), twisted by a divisor and extended by torsion
/// entries (point, exponent).  For odd_rank 0 the model is an ordinary
/// curve and every odd contribution vanishes.
struct SuperCurveModel {
    bool projective = false;
    int odd_rank = 1;
    std::vector<std::pair<CurvePoint, Int>> twist;     // divisor of L
    std::vector<std::pair<CurvePoint, int>> torsion;   // torsion summands of L

    void validate() const {
        require(odd_rank == 0 || odd_rank == 1, errc::malformed_input,
                "odd rank must be 0 or 1");
        require(odd_rank == 1 || (twist.empty() && torsion.empty()), errc::malformed_input,
                "twist/torsion require an odd line");
        for (const auto& [p, e] : torsion) {
            require(e >= 1, errc::malformed_input, "torsion exponent must be >= 1");
            require(!p.at_infinity || projective, errc::unknown_point,
                    "torsion at infinity on an affine model");
        }
        for (const auto& [p, d] : twist)
            require(!p.at_infinity || projective, errc::unknown_point,
                    "twist at infinity on an affine model");
    }

    bool has_point(const CurvePoint& p) const { return !p.at_infinity || projective; }

    Int twist_degree() const {
        Int d = 0;
        for (const auto& [p, e] : twist) d += Int(p.degree()) * e;
        return d;
    }

    static SuperCurveModel affine_split() {
        SuperCurveModel m;
        return m;
    }
    static SuperCurveModel projective_split() {
        SuperCurveModel m;
        m.projective = true;
        return m;
    }
};

namespace detail {

inline Int torsion_correction(const SuperCurveModel& model, const CurvePoint& p, const Int& v) {
    Int tau = 0;
    for (const auto& [tp, e] : model.torsion)
        if (tp == p) tau += v < e ? v : Int(e);
    return tau;
}

/// Super length of B_p/(b) for a polynomial b with valuation v at p:
/// (v, v*rank + torsion correction).
inline Z2 local_length(const SuperCurveModel& model, const CurvePoint& p, const Int& v) {
    if (v == 0 && model.torsion.empty()) return Z2();
    Int odd = v * model.odd_rank + (model.odd_rank ? torsion_correction(model, p, v) : Int(0));
    return Z2(v, odd);
}

inline Int valuation_at(const CurvePoint& p, const RatFunc& g) {
    return p.at_infinity ? g.valuation_at_infinity() : valuation(g, p.poly);
}

} // namespace detail

/// Z^2-valued order of the even rational function g at the point p:
/// length of B_p/(b1) minus length of B_p/(b0) for the reduced local
/// representation g = b1/b0 (b1 = u^max(v,0), b0 = u^max(-v,0) up to units,
/// u the local uniformizer, v the valuation of g at p).
inline Z2 ord_at(const SuperCurveModel& model, const CurvePoint& p, const RatFunc& g) {
    model.validate();
    require(!g.is_zero(), errc::zero_function, "order of the zero function");
    require(model.has_point(p), errc::unknown_point, "point not on this model: " + p.str());
    Int v = detail::valuation_at(p, g);
    Int vpos = v > 0 ? v : Int(0);
    Int vneg = v < 0 ? Int(-v) : Int(0);
    return detail::local_length(model, p, vpos) - detail::local_length(model, p, vneg);
}

/// Divisor of g on the model: the formal sum of ord_p(g)[p] over the
/// finitely many points with nonzero order (factors of the numerator or
/// denominator, plus infinity on the projective model).
struct PointDivisor {
    std::vector<std::pair<CurvePoint, Z2>> terms;  // sorted by point

    Z2 coefficient(const CurvePoint& p) const {
        for (const auto& [q, c] : terms)
            if (q == p) return c;
        return Z2();
    }
    friend bool operator==(const PointDivisor& a, const PointDivisor& b) {
        return a.terms == b.terms;
    }
};

inline PointDivisor div_model(const SuperCurveModel& model, const RatFunc& g) {
    model.validate();
    require(!g.is_zero(), errc::zero_function, "divisor of the zero function");
    std::map<CurvePoint, Z2> coeffs;
    auto add_point = [&](const CurvePoint& p) {
        if (!coeffs.count(p)) coeffs[p] = ord_at(model, p, g);
    };
    for (const auto& [f, mult] : factor_rational(g.num).factors) add_point(CurvePoint::finite(f));
    for (const auto& [f, mult] : factor_rational(g.den).factors) add_point(CurvePoint::finite(f));
    if (model.projective) add_point(CurvePoint::infinity());
    PointDivisor d;
    for (auto& [p, c] : coeffs)
        if (!c.is_zero()) d.terms.emplace_back(p, c);
    return d;
}

/// Degree-weighted total of a divisor: sum of [kappa(p):Q] * coefficient.
/// Vanishes componentwise for principal divisors on the projective model
/// without torsion.
inline Z2 divisor_degree(const PointDivisor& d) {
    Z2 total;
    for (const auto& [p, c] : d.terms) total += z2_scale(Int(p.degree()), c);
    return total;
}

// ---------------------------------------------------------------------------
// Superlattices
// ---------------------------------------------------------------------------

using PolyMat = std::vector<std::vector<QPoly>>;

/// Pair of full-rank lattices over the local ring at a point, one for the
/// even block and one for the odd block; columns are generators.
struct SuperLattice {
    CurvePoint point;
    PolyMat even_gens;
    PolyMat odd_gens;

    void validate() const {
        auto check_block = [&](const PolyMat& m) {
            std::size_t n = m.size();
            for (const auto& row : m)
                require(row.size() == n, errc::rank_mismatch, "lattice block must be square");
        };
        check_block(even_gens);
        check_block(odd_gens);
        require(!point.at_infinity, errc::unknown_point, "lattices live at finite points");
    }
};

namespace detail {

inline RatFunc rf_det(std::vector<std::vector<RatFunc>> m) {
    std::size_t n = m.size();
    RatFunc d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col].is_zero()) ++sel;
        if (sel == n) return RatFunc(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            d = RatFunc(-1) * d;
        }
        d = d * m[col][col];
        RatFunc inv = RatFunc(1) / m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            RatFunc f = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return d;
}

inline std::vector<std::vector<RatFunc>> to_ratfunc(const PolyMat& m) {
    std::vector<std::vector<RatFunc>> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& p : m[i]) r[i].emplace_back(p);
    return r;
}

/// Elementary divisor exponents of the change-of-basis matrix between two
/// lattice blocks at p, via valuations of minor gcds (Smith form over the
/// localized ring).
inline std::vector<Int> elementary_exponents(const PolyMat& a, const PolyMat& b, const QPoly& p) {
    require(a.size() == b.size(), errc::rank_mismatch, "lattice rank mismatch");
    std::size_t n = a.size();
    if (n == 0) return {};
    auto ar = to_ratfunc(a), br = to_ratfunc(b);
    RatFunc da = rf_det(ar);
    require(!da.is_zero(), errc::rank_mismatch, "lattice generators are singular");
    // c = a^-1 b by solving a * c = b column by column (Gaussian elimination
    // over the rational function field)
    std::vector<std::vector<RatFunc>> aug(n, std::vector<RatFunc>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = ar[i][j];
        for (std::size_t j = 0; j < n; ++j) aug[i][n + j] = br[i][j];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && aug[sel][col].is_zero()) ++sel;
        require(sel < n, errc::rank_mismatch, "singular lattice block");
        std::swap(aug[sel], aug[col]);
        RatFunc inv = RatFunc(1) / aug[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) aug[col][j] = inv * aug[col][j];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            RatFunc f = aug[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) aug[i][j] = aug[i][j] - f * aug[col][j];
        }
    }
    std::vector<std::vector<RatFunc>> c(n, std::vector<RatFunc>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = aug[i][n + j];
    // valuation of the gcd of all k x k minors, k = 1..n
    std::vector<Int> dvals(n + 1);
    dvals[0] = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::optional<Int> best;
        std::vector<std::size_t> ridx(k);
        for (std::size_t i = 0; i < k; ++i) ridx[i] = i;
        auto next_subset = [&](std::vector<std::size_t>& s) {
            std::size_t i = k;
            while (i-- > 0) {
                if (s[i] + (k - i) <= n - 1 + 0) {
                    ++s[i];
                    for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        std::vector<std::size_t> rs = ridx;
        do {
            std::vector<std::size_t> cs = ridx;
            do {
                std::vector<std::vector<RatFunc>> minor(k, std::vector<RatFunc>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor[i][j] = c[rs[i]][cs[j]];
                RatFunc dm = rf_det(minor);
                if (!dm.is_zero()) {
                    Int v = valuation(dm, p);
                    if (!best || v < *best) best = v;
                }
            } while (next_subset(cs));
        } while (next_subset(rs));
        require(best.has_value(), errc::rank_mismatch, "rank-deficient change of basis");
        dvals[k] = *best;
    }
    std::vector<Int> exps(n);
    for (std::size_t k = 1; k <= n; ++k) exps[k - 1] = dvals[k] - dvals[k - 1];
    return exps;
}

} // namespace detail

/// d(M, M') = l(M / M cap M') - l(M' / M cap M'), computed parity-blockwise;
/// even-block elementary divisors land in the even component, odd-block in
/// the odd component.
inline Z2 lattice_distance(const SuperLattice& m, const SuperLattice& m2) {
    m.validate();
    m2.validate();
    require(m.point == m2.point, errc::rank_mismatch, "lattices live at different points");
    require(m.even_gens.size() == m2.even_gens.size() &&
                m.odd_gens.size() == m2.odd_gens.size(),
            errc::rank_mismatch, "ambient ranks differ");
    Int even = 0, odd = 0;
    for (const auto& e : detail::elementary_exponents(m.even_gens, m2.even_gens, m.point.poly))
        even += e;
    for (const auto& e : detail::elementary_exponents(m.odd_gens, m2.odd_gens, m.point.poly))
        odd += e;
    return Z2(even, odd);
}

/// Order function of the purely even one-dimensional base ring at p, the
/// value ring in which lattice distances are measured: ord(g) = (v_p(g), 0).
inline Z2 ord_even_base(const CurvePoint& p, const RatFunc& g) {
    require(!g.is_zero(), errc::zero_function, "order of zero");
    require(!p.at_infinity, errc::unknown_point, "even base orders live at finite points");
    return Z2(valuation(g, p.poly), 0);
}

// ---------------------------------------------------------------------------
// Finite covers and the berezinian of multiplication
// ---------------------------------------------------------------------------

/// Finite flat cover of split models along t = phi(s), with the odd line
/// transported by theta -> c(s) eta.  The powers 1, s, .., s^{n-1} are a
/// free even basis of the total-fraction module; the certificate checks
/// the data actually provides one (c nonzero, models split and
/// torsion-free).
struct CoverData {
    QPoly phi;            // t = phi(s), degree n >= 1
    QPoly odd_transport;  // c(s)
    SuperCurveModel source = SuperCurveModel::affine_split();
    SuperCurveModel target = SuperCurveModel::affine_split();

    int rank() const { return phi.degree(); }

    void validate() const {
        source.validate();
        target.validate();
        require(phi.degree() >= 1, errc::no_even_basis, "cover map must be nonconstant");
        require(!odd_transport.is_zero(), errc::no_even_basis,
                "odd transport vanishes, no free even basis");
        require(source.torsion.empty() && target.torsion.empty(), errc::no_even_basis,
                "torsion breaks the free even basis certificate");
        require(source.odd_rank == 1 && target.odd_rank == 1, errc::no_even_basis,
                "covers are between split models of odd rank one");
    }
};

/// The bundled reference cover: t = s^2, theta -> s eta.
inline CoverData builtin_double_cover() {
    CoverData c;
    c.phi = QPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    c.odd_transport = QPoly::x();
    return c;
}

/// Berezinian (here: determinant on the free even basis) of multiplication
/// by g in the total-fraction module of the cover.  For the double cover
/// and g = u(t) + s v(t) this is u^2 - t v^2.
inline RatFunc ber_of_multiplication(const CoverData& cover, const RatFunc& g) {
    cover.validate();
    require(!g.is_zero(), errc::zero_function, "berezinian of multiplication by zero");
    using SPoly = Poly<RatFunc>;
    int n = cover.rank();
    // modulus phi(s) - t in Q(t)[s]
    std::vector<RatFunc> mod_coeffs(std::size_t(n) + 1);
    for (int i = 0; i <= cover.phi.degree(); ++i) mod_coeffs[std::size_t(i)] = RatFunc(cover.phi.coeff(i));
    mod_coeffs[0] = mod_coeffs[0] - RatFunc::t();
    SPoly modulus{std::move(mod_coeffs)};

    auto lift = [&](const QPoly& f) {
        std::vector<RatFunc> c(f.c.size());
        for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = RatFunc(QPoly::constant(f.c[i]));
        return SPoly{std::move(c)} % modulus;
    };
    SPoly num = lift(g.num);
    SPoly den = lift(g.den);
    require(!den.is_zero(), errc::zero_function, "denominator vanishes on the cover");
    SPoly u, v;
    SPoly gg = extended_gcd(den, modulus, u, v);
    require(gg.degree() == 0, errc::no_even_basis, "denominator not invertible on the cover");
    SPoly inv = (RatFunc(1) / gg.coeff(0)) * u;
    SPoly rep = (num * inv) % modulus;

    // multiplication matrix on the basis 1, s, .., s^{n-1}
    auto sz = static_cast<std::size_t>(n);
    std::vector<std::vector<RatFunc>> mat(sz, std::vector<RatFunc>(sz));
    SPoly spow = SPoly::constant(RatFunc(1));
    for (int j = 0; j < n; ++j) {
        SPoly col = (rep * spow) % modulus;
        for (int i = 0; i < n; ++i) mat[std::size_t(i)][std::size_t(j)] = col.coeff(i);
        spow = (spow * SPoly::x()) % modulus;
    }
    return detail::rf_det(mat);
}

/// Image of a source point under the cover: the minimal polynomial of
/// multiplication by phi(s) on Q[s]/(p).
inline CurvePoint image_point(const CoverData& cover, const CurvePoint& p) {
    require(!p.at_infinity, errc::unknown_point, "cover images of finite points only");
    int d = p.poly.degree();
    // matrix of multiplication by phi(s) mod p
    QPoly phibar = cover.phi % p.poly;
    Mat op = mat_zero(std::size_t(d), std::size_t(d));
    QPoly spow = QPoly::constant(Rat(1));
    for (int j = 0; j < d; ++j) {
        QPoly col = (phibar * spow) % p.poly;
        for (int i = 0; i < d; ++i) op[std::size_t(i)][std::size_t(j)] = col.coeff(i);
        spow = (spow * QPoly::x()) % p.poly;
    }
    // Krylov on the vector 1: smallest monic q with q(op) 1 = 0, which is
    // the minimal polynomial of phi(s) in the field Q[s]/(p)
    std::vector<Vec> powers;
    Vec cur(std::size_t(d), Rat(0));
    cur[0] = 1;
    for (int step = 0; step <= d; ++step) {
        Mat cols = mat_zero(std::size_t(d), powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (int r = 0; r < d; ++r) cols[std::size_t(r)][c] = powers[c][std::size_t(r)];
        auto sol = solve(cols, cur);
        if (sol.has_value()) {
            std::vector<Rat> q(powers.size() + 1, Rat(0));
            for (std::size_t i = 0; i < sol->size(); ++i) q[i] = -(*sol)[i];
            q[powers.size()] = 1;
            return CurvePoint::finite(QPoly(std::move(q)));
        }
        powers.push_back(cur);
        cur = mat_apply(op, cur);
    }
    fail(errc::unknown_point, "image point computation failed");
}

/// Fibre of the cover over a finite target point: irreducible factors of
/// q(phi(s)) with their residue degrees over the target point.
struct FiberPoint {
    CurvePoint point;
    int residue_degree;  // [kappa(x) : kappa(y)]
};

inline std::vector<FiberPoint> fiber_points(const CoverData& cover, const CurvePoint& q) {
    require(!q.at_infinity, errc::unknown_point, "fibres over finite points only");
    QPoly pulled = compose(q.poly, cover.phi);
    std::vector<FiberPoint> fibre;
    for (const auto& [f, mult] : factor_rational(pulled).factors) {
        require(f.degree() % q.poly.degree() == 0, errc::unknown_point,
                "residue degree bookkeeping failed");
        fibre.push_back({CurvePoint::finite(f), f.degree() / q.poly.degree()});
    }
    return fibre;
}

} // namespace superalg

#endif
