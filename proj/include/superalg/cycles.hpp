#ifndef SUPERALG_CYCLES_HPP
#define SUPERALG_CYCLES_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "superalg/artin.hpp"
#include "superalg/curve.hpp"
#include "superalg/z2.hpp"

namespace superalg {

/// Named subvarieties with their dimensions.  Geometry enters the cycle
/// calculus only through data attached to these names.
struct AmbientSpace {
    std::map<std::string, int> dims;

    void validate() const {
        for (const auto& [name, d] : dims)
            require(d >= 0, errc::malformed_input, "negative dimension for " + name);
    }
    bool contains(const std::string& name, int dim) const {
        auto it = dims.find(name);
        return it != dims.end() && it->second == dim;
    }
};

/// Finite Z^2-combination of named subvarieties of one dimension.
struct SuperCycle {
    int dim = 0;
    std::map<std::string, Z2> terms;  // zero coefficients dropped

    SuperCycle() = default;
    explicit SuperCycle(int h) : dim(h) {}

    bool is_zero() const { return terms.empty(); }

    void add(const std::string& name, const Z2& c) {
        if (c.is_zero()) return;
        auto it = terms.find(name);
        if (it == terms.end()) {
            terms.emplace(name, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Z2 coefficient(const std::string& name) const {
        auto it = terms.find(name);
        return it == terms.end() ? Z2() : it->second;
    }

    friend SuperCycle operator+(const SuperCycle& a, const SuperCycle& b) {
        require(a.dim == b.dim || a.is_zero() || b.is_zero(), errc::rank_mismatch,
                "cycle dimensions differ");
        SuperCycle r(a.is_zero() ? b.dim : a.dim);
        r.terms = a.terms;
        for (const auto& [n, c] : b.terms) r.add(n, c);
        return r;
    }
    friend SuperCycle operator-(const SuperCycle& a, const SuperCycle& b) {
        SuperCycle neg(b.dim);
        for (const auto& [n, c] : b.terms) neg.add(n, -c);
        return a + neg;
    }
    friend SuperCycle operator*(const Z2& s, const SuperCycle& a) {
        SuperCycle r(a.dim);
        for (const auto& [n, c] : a.terms) r.add(n, z2_mul(s, c));
        return r;
    }
    friend bool operator==(const SuperCycle& a, const SuperCycle& b) {
        return a.terms == b.terms && (a.is_zero() || b.is_zero() || a.dim == b.dim);
    }
    friend bool operator!=(const SuperCycle& a, const SuperCycle& b) { return !(a == b); }

    void validate(const AmbientSpace& ambient) const {
        for (const auto& [name, c] : terms)
            require(ambient.contains(name, dim), errc::unknown_point,
                    "cycle names a subvariety of the wrong dimension: " + name);
    }
};

// ---------------------------------------------------------------------------
// Proper push-forward
// ---------------------------------------------------------------------------

/// Per-subvariety data of a proper map: image name and the extension
/// degree deg(Z/f(Z)); degree 0 encodes a dimension drop.
struct ProperMapData {
    struct Entry {
        std::string image;
        Int degree;
    };
    std::map<std::string, Entry> maps;

    /// Image dimensions never exceed source dimensions, and degree 0
    /// exactly when the dimension strictly drops.
    void validate(const AmbientSpace& source, const AmbientSpace& target) const {
        for (const auto& [name, e] : maps) {
            auto sit = source.dims.find(name);
            auto tit = target.dims.find(e.image);
            require(sit != source.dims.end(), errc::missing_map_data,
                    "unknown source subvariety " + name);
            require(tit != target.dims.end(), errc::missing_map_data,
                    "unknown image subvariety " + e.image);
            require(tit->second <= sit->second, errc::malformed_input,
                    "image dimension exceeds source dimension for " + name);
            bool drops = tit->second < sit->second;
            require(drops == (e.degree == 0), errc::malformed_input,
                    "degree must be 0 exactly for dimension drops: " + name);
        }
    }
};

inline SuperCycle pushforward(const SuperCycle& alpha, const ProperMapData& f) {
    SuperCycle out(alpha.dim);
    for (const auto& [name, coeff] : alpha.terms) {
        auto it = f.maps.find(name);
        require(it != f.maps.end(), errc::missing_map_data, "no map data for " + name);
        if (it->second.degree == 0) continue;  // contracted
        out.add(it->second.image, z2_scale(it->second.degree, coeff));
    }
    return out;
}

/// Composite map data (h after f): images compose and degrees multiply;
/// a contraction anywhere contracts the composite.
inline ProperMapData compose_maps(const ProperMapData& f, const ProperMapData& h) {
    ProperMapData c;
    for (const auto& [name, e] : f.maps) {
        if (e.degree == 0) {
            c.maps[name] = {e.image, Int(0)};
            continue;
        }
        auto it = h.maps.find(e.image);
        require(it != h.maps.end(), errc::missing_map_data,
                "no map data for intermediate " + e.image);
        c.maps[name] = {it->second.image, e.degree * it->second.degree};
    }
    return c;
}

// ---------------------------------------------------------------------------
// Flat pullback
// ---------------------------------------------------------------------------

/// Fibre component of a flat pullback: the multiplicity is the super
/// length of the generic-point local algebra, either attached explicitly
/// or supplied as a precomputed pair.
struct PullbackComponent {
    std::string name;
    std::variant<Z2, FiniteSuperAlgebra> multiplicity;

    Z2 resolve() const {
        if (std::holds_alternative<Z2>(multiplicity)) return std::get<Z2>(multiplicity);
        const auto& alg = std::get<FiniteSuperAlgebra>(multiplicity);
        return super_length(alg, algebra_as_module(alg));
    }
};

struct FlatPullbackData {
    int relative_dim = 0;  // m
    std::map<std::string, std::vector<PullbackComponent>> pullbacks;

    /// Component dimensions equal the base dimension raised by m.
    void validate(const AmbientSpace& target, const AmbientSpace& source) const {
        for (const auto& [name, comps] : pullbacks) {
            auto tit = target.dims.find(name);
            require(tit != target.dims.end(), errc::missing_pullback_data,
                    "unknown base subvariety " + name);
            for (const auto& c : comps) {
                auto sit = source.dims.find(c.name);
                require(sit != source.dims.end(), errc::missing_pullback_data,
                        "unknown fibre component " + c.name);
                require(sit->second == tit->second + relative_dim, errc::malformed_input,
                        "fibre component dimension mismatch at " + c.name);
            }
        }
    }
};

inline SuperCycle flat_pullback(const SuperCycle& alpha, const FlatPullbackData& d) {
    SuperCycle out(alpha.dim + d.relative_dim);
    for (const auto& [name, coeff] : alpha.terms) {
        auto it = d.pullbacks.find(name);
        require(it != d.pullbacks.end(), errc::missing_pullback_data,
                "no pullback data for " + name);
        for (const auto& comp : it->second) out.add(comp.name, z2_mul(coeff, comp.resolve()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Divisor cycles and rational equivalence
// ---------------------------------------------------------------------------

/// Closed embedding of a curve model into the ambient space: model points
/// mapped to subvariety names of one fixed dimension.
struct ModelEmbedding {
    int dim = 0;  // dimension of the image subvarieties
    std::vector<std::pair<CurvePoint, std::string>> points;

    const std::string& name_of(const CurvePoint& p) const {
        for (const auto& [q, n] : points)
            if (q == p) return n;
        fail(errc::unknown_point, "embedding does not cover the point " + p.str());
    }
};

inline SuperCycle divisor_cycle(const ModelEmbedding& embedding, const SuperCurveModel& model,
                                const RatFunc& g) {
    PointDivisor d = div_model(model, g);
    SuperCycle out(embedding.dim);
    for (const auto& [p, c] : d.terms) out.add(embedding.name_of(p), c);
    return out;
}

/// One rational-equivalence witness: an embedded curve model of pure odd
/// dimension 0 or 1 together with an even rational function on it.
struct RationalWitness {
    ModelEmbedding embedding;
    SuperCurveModel model;
    RatFunc g;
};

/// True iff alpha equals the sum of the witnesses' divisor cycles exactly.
inline bool verify_rational_equivalence(const SuperCycle& alpha,
                                        const std::vector<RationalWitness>& witnesses) {
    SuperCycle sum(alpha.dim);
    for (const auto& w : witnesses) {
        w.model.validate();  // odd rank 0 or 1 enforced by the model type
        sum = sum + divisor_cycle(w.embedding, w.model, w.g);
    }
    return sum == alpha;
}

// ---------------------------------------------------------------------------
// Bundled reference data
// ---------------------------------------------------------------------------

/// Pullback/pushforward pair for the locally free double cover t = s^2
/// with the odd line pulled back from the base.  Target names: branch
/// point "P0" (t=0), split point "P4" (t=4), inert point "Pm1" (t=-1).
/// The pair satisfies pushforward(pullback(alpha)) = (2,0) alpha.
struct DoubleCoverDatum {
    AmbientSpace target;
    AmbientSpace source;
    FlatPullbackData pullback;
    ProperMapData pushforward;
    Z2 rank{2, 0};
};

inline DoubleCoverDatum builtin_double_cover_datum() {
    DoubleCoverDatum d;
    d.target.dims = {{"P0", 0}, {"P4", 0}, {"Pm1", 0}};
    d.source.dims = {{"s0", 0}, {"s2", 0}, {"s-2", 0}, {"si", 0}};
    d.pullback.relative_dim = 0;
    // branch point: fibre algebra Q[s]/(s^2), length (2,0)
    d.pullback.pullbacks["P0"] = {
        PullbackComponent{"s0", truncated_polynomial_algebra(2, "s")}};
    // split point: two reduced rational points
    d.pullback.pullbacks["P4"] = {PullbackComponent{"s2", Z2(1, 0)},
                                  PullbackComponent{"s-2", Z2(1, 0)}};
    // inert point: one reduced point with residue degree two
    d.pullback.pullbacks["Pm1"] = {PullbackComponent{"si", Z2(1, 0)}};
    d.pushforward.maps["s0"] = {"P0", Int(1)};
    d.pushforward.maps["s2"] = {"P4", Int(1)};
    d.pushforward.maps["s-2"] = {"P4", Int(1)};
    d.pushforward.maps["si"] = {"Pm1", Int(2)};
    return d;
}

/// Flat-by-proper test square: points of Y pulled back along the
/// projection from the superline Y x A^{1|1}, against a finite cover
/// X -> Y with a split and an inert point.
struct BaseChangeSquare {
    FlatPullbackData phi;        // Y' -> Y
    FlatPullbackData phi_prime;  // X' -> X
    ProperMapData f;             // X  -> Y
    ProperMapData f_prime;       // X' -> Y'
};

inline BaseChangeSquare builtin_base_change_square() {
    BaseChangeSquare s;
    s.phi.relative_dim = 1;
    s.phi.pullbacks["p"] = {PullbackComponent{"pL", Z2(1, 1)}};
    s.phi.pullbacks["q"] = {PullbackComponent{"qL", Z2(1, 1)}};
    s.phi_prime.relative_dim = 1;
    s.phi_prime.pullbacks["a1"] = {PullbackComponent{"a1L", Z2(1, 1)}};
    s.phi_prime.pullbacks["a2"] = {PullbackComponent{"a2L", Z2(1, 1)}};
    s.phi_prime.pullbacks["b"] = {PullbackComponent{"bL", Z2(1, 1)}};
    s.f.maps["a1"] = {"p", Int(1)};
    s.f.maps["a2"] = {"p", Int(1)};
    s.f.maps["b"] = {"q", Int(2)};
    s.f_prime.maps["a1L"] = {"pL", Int(1)};
    s.f_prime.maps["a2L"] = {"pL", Int(1)};
    s.f_prime.maps["bL"] = {"qL", Int(2)};
    return s;
}

} // namespace superalg

#endif
