#ifndef SUPERALG_COHOMOLOGY_HPP
#define SUPERALG_COHOMOLOGY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superalg/linalg.hpp"
#include "superalg/z2.hpp"

namespace superalg {

/// Dimension pair of a Z_2-graded vector space.
struct SuperDim {
    Int even{0};
    Int odd{0};
    friend bool operator==(const SuperDim& a, const SuperDim& b) {
        return a.even == b.even && a.odd == b.odd;
    }
    friend bool operator!=(const SuperDim& a, const SuperDim& b) { return !(a == b); }
    Int total() const { return even + odd; }
};

inline std::string to_string(const SuperDim& d) {
    return "(" + to_string(d.even) + "|" + to_string(d.odd) + ")";
}

// ---------------------------------------------------------------------------
// Line bundle cohomology bookkeeping
// ---------------------------------------------------------------------------

/// Descriptor of a line bundle on a smooth projective curve of genus g.
/// `generic` refuses the ambiguous special range 0 <= d < g for g >= 2.
struct LineBundle {
    enum class Kind { trivial, canonical, generic, explicit_ };
    Kind kind = Kind::trivial;
    Int degree{0};  // used by generic and explicit_
    Int h0{0};      // used by explicit_

    static LineBundle trivial() { return {}; }
    static LineBundle canonical() {
        LineBundle l;
        l.kind = Kind::canonical;
        return l;
    }
    static LineBundle generic(Int d) {
        LineBundle l;
        l.kind = Kind::generic;
        l.degree = std::move(d);
        return l;
    }
    static LineBundle explicit_data(Int d, Int h0) {
        LineBundle l;
        l.kind = Kind::explicit_;
        l.degree = std::move(d);
        l.h0 = std::move(h0);
        return l;
    }

    Int degree_on(const Int& g) const {
        switch (kind) {
            case Kind::trivial: return 0;
            case Kind::canonical: return 2 * g - 2;
            default: return degree;
        }
    }
};

/// (h^0, h^1) of the descriptor; h0 - h1 = d - g + 1 always.
inline std::pair<Int, Int> line_cohomology(const Int& g, const LineBundle& l) {
    require(g >= 0, errc::inconsistent_descriptor, "negative genus");
    switch (l.kind) {
        case LineBundle::Kind::trivial: return {Int(1), g};
        case LineBundle::Kind::canonical: return {g, Int(1)};
        case LineBundle::Kind::generic: {
            const Int& d = l.degree;
            require(d >= g || d < 0 || g <= 1, errc::ambiguous_genericity,
                    "generic descriptor in the special range 0 <= d < g");
            Int chi = d - g + 1;
            Int h0 = chi > 0 ? chi : Int(0);
            return {h0, h0 - chi};
        }
        case LineBundle::Kind::explicit_: {
            Int chi = l.degree - g + 1;
            Int h1 = l.h0 - chi;
            require(l.h0 >= 0 && h1 >= 0, errc::inconsistent_descriptor,
                    "explicit descriptor violates h0 >= max(0, d-g+1)");
            return {l.h0, h1};
        }
    }
    fail(errc::inconsistent_descriptor, "unknown descriptor kind");
}

/// Hodge numbers h^{p,q} for p,q in {0,1} of the split supercurve with odd
/// line L, together with the line-bundle constituents they were assembled
/// from.  The structure sheaf contributes (h^q(O) | h^q(L)) in bidegree
/// (0,q); the one-forms split as (Omega + L^2) + Pi(L Omega + L).
struct HodgeTable {
    Int genus{0};
    SuperDim h[2][2];
    Int betti[3] = {Int(1), Int(0), Int(1)};
    // constituents, first h^0 then h^1
    std::pair<Int, Int> hO, hL, hOmega, hL2, hLOmega;
};

inline HodgeTable hodge_table(const Int& g, const LineBundle& l,
                              std::optional<LineBundle> l2 = std::nullopt,
                              std::optional<LineBundle> lomega = std::nullopt) {
    HodgeTable t;
    t.genus = g;
    t.betti[1] = 2 * g;
    Int d = l.degree_on(g);
    if (l.kind == LineBundle::Kind::trivial) {
        if (!l2) l2 = LineBundle::trivial();
        if (!lomega) lomega = LineBundle::canonical();
    } else if (l.kind == LineBundle::Kind::generic) {
        if (!l2) l2 = LineBundle::generic(2 * d);
        if (!lomega) lomega = LineBundle::generic(d + 2 * g - 2);
    }
    require(l2.has_value() && lomega.has_value(), errc::inconsistent_descriptor,
            "descriptors for L^2 and L(x)Omega are required");
    require(l2->degree_on(g) == 2 * d, errc::inconsistent_descriptor,
            "L^2 descriptor has the wrong degree");
    require(lomega->degree_on(g) == d + 2 * g - 2, errc::inconsistent_descriptor,
            "L(x)Omega descriptor has the wrong degree");

    t.hO = line_cohomology(g, LineBundle::trivial());
    t.hL = line_cohomology(g, l);
    t.hOmega = line_cohomology(g, LineBundle::canonical());
    t.hL2 = line_cohomology(g, *l2);
    t.hLOmega = line_cohomology(g, *lomega);

    auto pick = [](const std::pair<Int, Int>& h, int q) { return q == 0 ? h.first : h.second; };
    for (int q = 0; q < 2; ++q) {
        t.h[0][q] = SuperDim{pick(t.hO, q), pick(t.hL, q)};
        t.h[1][q] = SuperDim{pick(t.hOmega, q) + pick(t.hL2, q),
                             pick(t.hLOmega, q) + pick(t.hL, q)};
    }
    return t;
}

/// Degeneracy bookkeeping for the Hodge-to-de-Rham spectral sequence in
/// total degrees 0 and 1.  The even-part counts follow the curve
/// decomposition H^{0,1}_+ = h^1(O) + h^1(L), H^{1,0}_+ = h^0(Omega) +
/// h^0(L^2); degeneration at the first page is compatible with the Betti
/// numbers iff both L-contributions vanish.
struct FrolicherReport {
    struct Row {
        int n;
        Int betti;
        Int plus_sum;    // sum over p+q = n of the even-part counts
        Int strict_even; // sum of the table's even entries
        Int full;        // sum of total superdimensions
        bool compatible;
        std::vector<std::pair<std::string, Int>> contributions;  // per (p,q)
    };
    std::vector<Row> rows;
    bool degenerate_compatible = true;

    Int plus_count(const std::string& pq) const {
        for (const auto& row : rows)
            for (const auto& [key, v] : row.contributions)
                if (key == pq) return v;
        fail(errc::malformed_input, "no contribution entry " + pq);
    }

    std::string verdict() const {
        return degenerate_compatible ? "degenerate-at-E1-compatible" : "incompatible";
    }
};

inline FrolicherReport frolicher_report(const HodgeTable& t) {
    FrolicherReport r;
    {
        FrolicherReport::Row row;
        row.n = 0;
        row.betti = t.betti[0];
        row.contributions = {{"0,0", t.hO.first}};  // h^0(O)
        row.plus_sum = t.hO.first;
        row.strict_even = t.h[0][0].even;
        row.full = t.h[0][0].total();
        row.compatible = row.plus_sum == row.betti;
        r.rows.push_back(row);
    }
    {
        FrolicherReport::Row row;
        row.n = 1;
        row.betti = t.betti[1];
        Int h01 = t.hO.second + t.hL.second;      // h^1(O) + h^1(L)
        Int h10 = t.hOmega.first + t.hL2.first;   // h^0(Omega) + h^0(L^2)
        row.contributions = {{"0,1", h01}, {"1,0", h10}};
        row.plus_sum = h01 + h10;
        row.strict_even = t.h[0][1].even + t.h[1][0].even;
        row.full = t.h[0][1].total() + t.h[1][0].total();
        row.compatible = row.plus_sum == row.betti;
        r.rows.push_back(row);
    }
    for (const auto& row : r.rows) r.degenerate_compatible &= row.compatible;
    return r;
}

/// Hypercohomology table of the integral-form complexes as the dual of
/// the Hodge table: the entry at (p, -q) is h^{p,q} with superdimensions
/// preserved.  The parity convention of the dualization is left open;
/// only dimensions are asserted.
struct IntegralFormsTable {
    std::map<std::pair<int, int>, SuperDim> entries;  // key (p, -q)
    std::string parity_note =
        "superdimensions preserved under duality; parity convention unresolved";
};

inline IntegralFormsTable integral_forms_table(const HodgeTable& t) {
    IntegralFormsTable out;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) out.entries[{p, -q}] = t.h[p][q];
    return out;
}

// ---------------------------------------------------------------------------
// Truncated Koszul / de Rham complexes
// ---------------------------------------------------------------------------

namespace derham {

/// Monomial t^a th_J dt_K dth^b in canonical order; J, K are bitmasks,
/// a and b are exponent vectors.
struct Monomial {
    std::vector<int> a;
    std::uint32_t j_mask = 0;
    std::uint32_t k_mask = 0;
    std::vector<int> b;

    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.j_mask != y.j_mask) return x.j_mask < y.j_mask;
        if (x.k_mask != y.k_mask) return x.k_mask < y.k_mask;
        return x.b < y.b;
    }
    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.a == y.a && x.j_mask == y.j_mask && x.k_mask == y.k_mask && x.b == y.b;
    }

    int form_degree() const { return std::popcount(k_mask) + sum(b); }
    int weight() const { return sum(a) + std::popcount(j_mask) + std::popcount(k_mask) + sum(b); }

    static int sum(const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s += x;
        return s;
    }
};

/// d as an odd left derivation: dt_i and dth_j are closed, t and th map to
/// their differentials; signs come from moving the produced one-form into
/// canonical position.
inline std::vector<std::pair<Monomial, Rat>> differential(const Monomial& mono) {
    std::vector<std::pair<Monomial, Rat>> out;
    int m = (int)mono.a.size();
    // t-part: a_i t^{a-e_i} dt_i, sign from passing th_J and earlier dt's
    for (int i = 0; i < m; ++i) {
        if (mono.a[std::size_t(i)] == 0) continue;
        if (mono.k_mask & (1u << i)) continue;  // dt_i^2 = 0
        Monomial next = mono;
        next.a[std::size_t(i)] -= 1;
        next.k_mask |= 1u << i;
        int swaps = std::popcount(mono.j_mask) +
                    std::popcount(mono.k_mask & ((1u << i) - 1));
        Rat coeff(mono.a[std::size_t(i)]);
        if (swaps & 1) coeff = -coeff;
        out.emplace_back(std::move(next), coeff);
    }
    // th-part: remove the l-th generator of J, add dth; sign (-1)^{l-1}
    int l = 0;
    for (std::uint32_t rest = mono.j_mask; rest; rest &= rest - 1, ++l) {
        int j = std::countr_zero(rest);
        Monomial next = mono;
        next.j_mask &= ~(1u << j);
        next.b[std::size_t(j)] += 1;
        out.emplace_back(std::move(next), (l & 1) ? Rat(-1) : Rat(1));
    }
    return out;
}

/// All monomials of the given weight and form degree for m even and n odd
/// coordinates.
inline std::vector<Monomial> basis(int m, int n, int weight, int degree) {
    std::vector<Monomial> out;
    auto exponents = [](int vars, int total) {
        std::vector<std::vector<int>> res;
        std::vector<int> cur(std::size_t(vars), 0);
        auto rec = [&](auto&& self, int pos, int rest) -> void {
            if (pos == vars) {
                if (rest == 0) res.push_back(cur);
                return;
            }
            for (int v = 0; v <= rest; ++v) {
                cur[std::size_t(pos)] = v;
                self(self, pos + 1, rest - v);
            }
            cur[std::size_t(pos)] = 0;
        };
        if (vars == 0) {
            if (total == 0) res.push_back({});
            return res;
        }
        rec(rec, 0, total);
        return res;
    };
    for (std::uint32_t jm = 0; jm < (1u << n); ++jm)
        for (std::uint32_t km = 0; km < (1u << m); ++km) {
            int jc = std::popcount(jm), kc = std::popcount(km);
            int bsum = degree - kc;
            int asum = weight - jc - kc - bsum;
            if (bsum < 0 || asum < 0) continue;
            for (auto& b : exponents(n, bsum))
                for (auto& a : exponents(m, asum)) {
                    Monomial mono;
                    mono.a = a;
                    mono.j_mask = jm;
                    mono.k_mask = km;
                    mono.b = b;
                    out.push_back(std::move(mono));
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Cohomology dimensions of the weight-w strand of the de Rham complex of
/// Q[t_1..t_m]<th_1..th_n>, indexed by form degree.
inline std::vector<Int> strand_cohomology(int m, int n, int weight) {
    int max_degree = weight;
    std::vector<std::vector<Monomial>> bases;
    for (int p = 0; p <= max_degree + 1; ++p) bases.push_back(basis(m, n, weight, p));
    // rank of d_p: C^p -> C^{p+1}
    std::vector<std::size_t> ranks(std::size_t(max_degree) + 2, 0);
    for (int p = 0; p <= max_degree; ++p) {
        const auto& dom = bases[std::size_t(p)];
        const auto& cod = bases[std::size_t(p) + 1];
        if (dom.empty() || cod.empty()) {
            ranks[std::size_t(p)] = 0;
            continue;
        }
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < cod.size(); ++i) index[cod[i]] = i;
        Mat mat = mat_zero(cod.size(), dom.size());
        for (std::size_t c = 0; c < dom.size(); ++c)
            for (auto& [mono, coeff] : differential(dom[c])) {
                auto it = index.find(mono);
                require(it != index.end(), errc::cutoff_too_large,
                        "differential left the strand");
                mat[it->second][c] += coeff;
            }
        ranks[std::size_t(p)] = rank(mat);
    }
    std::vector<Int> h(std::size_t(max_degree) + 1);
    for (int p = 0; p <= max_degree; ++p) {
        std::size_t dim_p = bases[std::size_t(p)].size();
        std::size_t rank_in = p > 0 ? ranks[std::size_t(p) - 1] : 0;
        h[std::size_t(p)] = Int(dim_p) - Int(ranks[std::size_t(p)]) - Int(rank_in);
    }
    return h;
}

} // namespace derham

/// Truncated acyclicity check for the de Rham complex of a purely odd
/// affine superspace (the dual Koszul complex): H^0 = Q and H^p = 0 for
/// p >= 1, verified strand by strand up to the weight cutoff.
struct KoszulVerdict {
    int n;
    int wmax;
    bool acyclic = true;
    // rows (weight, degree, dim H)
    std::vector<std::tuple<int, int, Int>> nonzero;
};

inline KoszulVerdict koszul_acyclicity(int n, int wmax) {
    require(n >= 1 && n <= 3, errc::cutoff_too_large, "odd variable count must be 1..3");
    require(wmax >= 0 && wmax <= 8, errc::cutoff_too_large, "weight cutoff must be <= 8");
    KoszulVerdict v{n, wmax};
    for (int w = 0; w <= wmax; ++w) {
        auto h = derham::strand_cohomology(0, n, w);
        for (int p = 0; p < (int)h.size(); ++p) {
            Int dim = h[std::size_t(p)];
            if (dim == 0) continue;
            v.nonzero.emplace_back(w, p, dim);
            if (!(w == 0 && p == 0 && dim == 1)) v.acyclic = false;
        }
    }
    // H^0 in weight zero must be exactly Q
    bool found_unit = false;
    for (auto& [w, p, dim] : v.nonzero)
        if (w == 0 && p == 0 && dim == 1) found_unit = true;
    if (!found_unit) v.acyclic = false;
    return v;
}

/// Degreewise comparison of the truncated de Rham cohomology of
/// Q[t_1..t_m]<th_1..th_n> with that of its bosonic reduction.
struct PoincareVerdict {
    int m, n, cutoff;
    bool equal = true;
    // rows (weight, degree, super dim, bosonic dim)
    std::vector<std::tuple<int, int, Int, Int>> table;
};

inline PoincareVerdict affine_super_poincare(int m, int n, int cutoff) {
    require(m >= 0 && m <= 2 && n >= 0 && n <= 2, errc::cutoff_too_large,
            "variable counts must be <= 2");
    require(cutoff >= 0 && cutoff <= 6, errc::cutoff_too_large, "cutoff must be <= 6");
    PoincareVerdict v{m, n, cutoff};
    for (int w = 0; w <= cutoff; ++w) {
        auto hs = derham::strand_cohomology(m, n, w);
        auto hb = derham::strand_cohomology(m, 0, w);
        std::size_t len = std::max(hs.size(), hb.size());
        for (std::size_t p = 0; p < len; ++p) {
            Int ds = p < hs.size() ? hs[p] : Int(0);
            Int db = p < hb.size() ? hb[p] : Int(0);
            if (ds != 0 || db != 0) v.table.emplace_back(w, (int)p, ds, db);
            if (ds != db) v.equal = false;
        }
    }
    return v;
}

} // namespace superalg

#endif
