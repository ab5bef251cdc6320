#ifndef SUPERALG_NORI_HPP
#define SUPERALG_NORI_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superalg/cohomology.hpp"
#include "superalg/linalg.hpp"

namespace superalg {

/// Graph in the diagram formalism: flags, vertices, a boundary map and an
/// involution with j^2 = Id.  Edges are the involution orbits; a fixed
/// flag is a degenerate edge.
struct NoriGraph {
    std::vector<std::string> flags;
    std::vector<std::string> vertices;
    std::map<std::string, std::string> boundary;    // flag -> vertex
    std::map<std::string, std::string> involution;  // flag -> flag
    std::map<std::string, std::string> labels;      // flag -> edge label (source flag carries it)

    struct Edge {
        std::string source_flag, target_flag;
        std::string source, target;  // boundary vertices
        bool degenerate = false;
        std::string label;
    };

    /// Orbit pairs in first-listed-flag order; the earlier flag is the
    /// source end.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        std::set<std::string> used;
        for (const auto& f : flags) {
            if (used.count(f)) continue;
            auto jt = involution.find(f);
            require(jt != involution.end(), errc::malformed_input, "involution undefined on " + f);
            const std::string& g = jt->second;
            used.insert(f);
            used.insert(g);
            Edge e;
            e.source_flag = f;
            e.target_flag = g;
            e.source = boundary.at(f);
            e.target = boundary.at(g);
            e.degenerate = (f == g);
            auto lt = labels.find(f);
            if (lt != labels.end()) e.label = lt->second;
            out.push_back(std::move(e));
        }
        return out;
    }
};

struct GraphVerdict {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Checks totality of the boundary and the involution and j^2 = Id.
inline GraphVerdict check_graph(const NoriGraph& g) {
    GraphVerdict v;
    std::set<std::string> flagset(g.flags.begin(), g.flags.end());
    std::set<std::string> vertexset(g.vertices.begin(), g.vertices.end());
    auto complain = [&](const std::string& msg) {
        v.valid = false;
        v.violations.push_back(msg);
    };
    for (const auto& f : g.flags) {
        auto bt = g.boundary.find(f);
        if (bt == g.boundary.end())
            complain("boundary undefined on flag " + f);
        else if (!vertexset.count(bt->second))
            complain("boundary of " + f + " is not a vertex: " + bt->second);
        auto jt = g.involution.find(f);
        if (jt == g.involution.end()) {
            complain("involution undefined on flag " + f);
            continue;
        }
        if (!flagset.count(jt->second)) {
            complain("involution image of " + f + " is not a flag: " + jt->second);
            continue;
        }
        auto jjt = g.involution.find(jt->second);
        if (jjt == g.involution.end() || jjt->second != f)
            complain("involution not self-inverse at flag " + f);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Diagram of a finite category
// ---------------------------------------------------------------------------

/// Finite category presentation: objects, named morphisms, designated
/// identities, and a total composition table `compose[{f,g}] = g after f`.
struct CategoryPresentation {
    struct Morphism {
        std::string name, source, target;
    };
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::map<std::string, std::string> identities;               // object -> morphism name
    std::map<std::pair<std::string, std::string>, std::string> compose;

    const Morphism& morphism(const std::string& name) const {
        for (const auto& m : morphisms)
            if (m.name == name) return m;
        fail(errc::malformed_input, "unknown morphism " + name);
    }

    void validate() const {
        std::set<std::string> objset(objects.begin(), objects.end());
        std::set<std::string> seen;
        for (const auto& m : morphisms) {
            require(objset.count(m.source) && objset.count(m.target), errc::malformed_input,
                    "morphism endpoints missing for " + m.name);
            require(seen.insert(m.name).second, errc::malformed_input,
                    "duplicate morphism " + m.name);
        }
        for (const auto& o : objects) {
            auto it = identities.find(o);
            require(it != identities.end(), errc::malformed_input, "no identity for " + o);
            const auto& id = morphism(it->second);
            require(id.source == o && id.target == o, errc::malformed_input,
                    "identity of " + o + " is not an endomorphism");
        }
        for (const auto& f : morphisms)
            for (const auto& g : morphisms) {
                if (f.target != g.source) continue;
                auto it = compose.find({f.name, g.name});
                require(it != compose.end(), errc::incomplete_composition_table,
                        "missing composite " + g.name + " after " + f.name);
                const auto& h = morphism(it->second);
                require(h.source == f.source && h.target == g.target, errc::malformed_input,
                        "composite " + it->second + " has wrong endpoints");
            }
    }
};

/// Vertices are the objects; every composable decomposition X -> Z -> Y
/// contributes an edge from X to Y labeled by the pair.  The identity
/// decompositions become degenerate edges.
inline NoriGraph category_diagram(const CategoryPresentation& c) {
    c.validate();
    NoriGraph g;
    g.vertices = c.objects;
    std::set<std::string> idnames;
    for (const auto& [o, id] : c.identities) idnames.insert(id);
    int counter = 0;
    for (const auto& f : c.morphisms)
        for (const auto& h : c.morphisms) {
            if (f.target != h.source) continue;
            std::string label = h.name + "o" + f.name;
            if (idnames.count(f.name) && idnames.count(h.name)) {
                if (f.name != h.name) continue;  // identities of different objects never compose
                std::string flag = "e" + std::to_string(counter++);
                g.flags.push_back(flag);
                g.boundary[flag] = f.source;
                g.involution[flag] = flag;  // degenerate
                g.labels[flag] = label;
                continue;
            }
            std::string fs = "e" + std::to_string(counter) + ".s";
            std::string ft = "e" + std::to_string(counter) + ".t";
            ++counter;
            g.flags.push_back(fs);
            g.flags.push_back(ft);
            g.boundary[fs] = f.source;
            g.boundary[ft] = h.target;
            g.involution[fs] = ft;
            g.involution[ft] = fs;
            g.labels[fs] = label;
        }
    return g;
}

// ---------------------------------------------------------------------------
// Effective-pairs diagrams over an embedding poset
// ---------------------------------------------------------------------------

/// Strict partial order on named elements, with a goodness predicate.
/// Relations are closed transitively on construction; antisymmetry is
/// validated.
struct EmbeddingPoset {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;  // (smaller, larger)
    std::set<std::string> good;

    std::set<std::pair<std::string, std::string>> closure() const {
        std::set<std::string> elems(elements.begin(), elements.end());
        std::set<std::pair<std::string, std::string>> rel;
        for (const auto& [a, b] : relations) {
            require(elems.count(a) && elems.count(b), errc::malformed_input,
                    "relation references unknown element");
            rel.insert({a, b});
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::pair<std::string, std::string>> add;
            for (const auto& [a, b] : rel)
                for (const auto& [c, d] : rel)
                    if (b == c && !rel.count({a, d})) add.emplace_back(a, d);
            for (auto& p : add) changed |= rel.insert(p).second;
        }
        for (const auto& [a, b] : rel) {
            require(a != b, errc::malformed_input, "order is not irreflexive at " + a);
            require(!rel.count({b, a}), errc::malformed_input,
                    "order is not antisymmetric on " + a + "," + b);
        }
        for (const auto& gname : good)
            require(elems.count(gname), errc::malformed_input, "good element unknown: " + gname);
        return rel;
    }
};

inline std::string pair_vertex_name(const std::string& s1, const std::string& s2, int i) {
    return "(" + s1 + "," + s2 + "," + std::to_string(i) + ")";
}

/// Vertices (S1, S2, i) for good pairs S2 < S1 and 0 <= i <= imax;
/// restriction edges between order-compatible pairs in the same level and
/// boundary edges (S2,S3,i) -> (S1,S2,i+1) along chains S3 < S2 < S1.
inline NoriGraph effective_pairs_diagram(const EmbeddingPoset& p, int imax) {
    require(imax >= 0, errc::malformed_input, "imax must be nonnegative");
    auto rel = p.closure();
    auto less = [&](const std::string& a, const std::string& b) { return rel.count({a, b}) > 0; };
    auto leq = [&](const std::string& a, const std::string& b) { return a == b || less(a, b); };

    std::vector<std::pair<std::string, std::string>> pairs;  // (S1, S2) with S2 < S1
    for (const auto& s1 : p.elements)
        for (const auto& s2 : p.elements)
            if (p.good.count(s1) && p.good.count(s2) && less(s2, s1)) pairs.emplace_back(s1, s2);

    NoriGraph g;
    for (int i = 0; i <= imax; ++i)
        for (const auto& [s1, s2] : pairs) g.vertices.push_back(pair_vertex_name(s1, s2, i));

    int counter = 0;
    auto add_edge = [&](const std::string& from, const std::string& to, const std::string& label) {
        std::string fs = "f" + std::to_string(counter) + ".s";
        std::string ft = "f" + std::to_string(counter) + ".t";
        ++counter;
        g.flags.push_back(fs);
        g.flags.push_back(ft);
        g.boundary[fs] = from;
        g.boundary[ft] = to;
        g.involution[fs] = ft;
        g.involution[ft] = fs;
        g.labels[fs] = label;
    };
    for (int i = 0; i <= imax; ++i)
        for (const auto& [s1, s2] : pairs)
            for (const auto& [t1, t2] : pairs) {
                if (s1 == t1 && s2 == t2) continue;
                if (leq(t1, s1) && leq(t2, s2))
                    add_edge(pair_vertex_name(s1, s2, i), pair_vertex_name(t1, t2, i),
                             "h*:" + t1 + "<" + s1);
            }
    for (int i = 0; i + 1 <= imax; ++i)
        for (const auto& s1 : p.elements)
            for (const auto& s2 : p.elements)
                for (const auto& s3 : p.elements) {
                    if (!(p.good.count(s1) && p.good.count(s2) && p.good.count(s3))) continue;
                    if (less(s3, s2) && less(s2, s1))
                        add_edge(pair_vertex_name(s2, s3, i), pair_vertex_name(s1, s2, i + 1),
                                 "d:" + s3 + "<" + s2 + "<" + s1);
                }
    return g;
}

// ---------------------------------------------------------------------------
// Diagram representations and their endomorphism algebras
// ---------------------------------------------------------------------------

/// Representation of a graph in graded rational vector spaces: a dimension
/// pair per vertex and an even (parity-block) matrix per edge.  Degenerate
/// edges always carry the identity.
struct DiagramRep {
    struct EvenMatrix {
        Mat plus;   // target_plus x source_plus
        Mat minus;  // target_minus x source_minus
    };
    std::map<std::string, std::pair<int, int>> dims;  // vertex -> (even dim, odd dim)
    std::map<std::string, EvenMatrix> edges;          // keyed by source flag name

    std::pair<int, int> dim_of(const std::string& vertex) const {
        auto it = dims.find(vertex);
        require(it != dims.end(), errc::shape_mismatch, "no dimensions for vertex " + vertex);
        return it->second;
    }
};

namespace detail {

inline void check_shape(const Mat& m, int rows, int cols, const std::string& what) {
    require((int)m.size() == rows, errc::shape_mismatch, what + ": row count");
    for (const auto& r : m)
        require((int)r.size() == cols, errc::shape_mismatch, what + ": column count");
}

inline bool is_identity(const Mat& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != (i == j ? Rat(1) : Rat(0))) return false;
    return true;
}

} // namespace detail

/// Solution of the intertwining system: one matrix pair per vertex.  For
/// parity 0 the pair is (A_+, A_-); for parity 1 it is (P: V_+ -> V_-,
/// Q: V_- -> V_+).
struct EndoSolution {
    int parity = 0;
    std::map<std::string, std::pair<Mat, Mat>> blocks;
};

struct EndAlgebra {
    SuperDim dimension;
    std::vector<EndoSolution> basis;
};

/// Endomorphisms of the representation: tuples (A_v) with
/// A_target e = e A_source for every edge, split into parity-preserving
/// and parity-reversing solutions.
inline EndAlgebra end_algebra(const NoriGraph& g, const DiagramRep& rep) {
    auto verdict = check_graph(g);
    require(verdict.valid, errc::malformed_input, "graph fails validation");
    auto edges = g.edges();
    // validate shapes and degenerate-edge identities
    for (const auto& e : edges) {
        auto [sp, sm] = rep.dim_of(e.source);
        auto [tp, tm] = rep.dim_of(e.target);
        auto it = rep.edges.find(e.source_flag);
        if (e.degenerate) {
            if (it != rep.edges.end()) {
                detail::check_shape(it->second.plus, tp, sp, "degenerate edge " + e.source_flag);
                detail::check_shape(it->second.minus, tm, sm, "degenerate edge " + e.source_flag);
                require(detail::is_identity(it->second.plus) && detail::is_identity(it->second.minus),
                        errc::shape_mismatch, "degenerate edges carry identity matrices");
            }
            continue;
        }
        require(it != rep.edges.end(), errc::shape_mismatch,
                "no matrix for edge at flag " + e.source_flag);
        detail::check_shape(it->second.plus, tp, sp, "edge " + e.source_flag);
        detail::check_shape(it->second.minus, tm, sm, "edge " + e.source_flag);
    }

    // unknown layout per parity sector
    struct Layout {
        std::map<std::string, std::size_t> offset;
        std::size_t total = 0;
    };
    auto make_layout = [&](bool even_sector) {
        Layout l;
        for (const auto& v : g.vertices) {
            auto [dp, dm] = rep.dim_of(v);
            std::size_t size = even_sector ? std::size_t(dp) * dp + std::size_t(dm) * dm
                                           : 2 * std::size_t(dp) * dm;
            l.offset[v] = l.total;
            l.total += size;
        }
        return l;
    };

    auto solve_sector = [&](bool even_sector) {
        Layout layout = make_layout(even_sector);
        std::vector<Vec> rows;
        auto emit = [&](std::map<std::size_t, Rat>&& entries) {
            Vec row(layout.total, Rat(0));
            bool nonzero = false;
            for (auto& [i, c] : entries) {
                row[i] = c;
                nonzero |= (c != 0);
            }
            if (nonzero) rows.push_back(std::move(row));
        };
        for (const auto& e : edges) {
            if (e.degenerate) continue;
            auto [sp, sm] = rep.dim_of(e.source);
            auto [tp, tm] = rep.dim_of(e.target);
            const auto& mat = rep.edges.at(e.source_flag);
            std::size_t so = layout.offset[e.source], to = layout.offset[e.target];
            if (even_sector) {
                // A+_t e+ - e+ A+_s = 0
                for (int i = 0; i < tp; ++i)
                    for (int j = 0; j < sp; ++j) {
                        std::map<std::size_t, Rat> row;
                        for (int k = 0; k < tp; ++k)
                            row[to + std::size_t(i) * tp + k] += mat.plus[std::size_t(k)][std::size_t(j)];
                        for (int k = 0; k < sp; ++k)
                            row[so + std::size_t(k) * sp + j] -= mat.plus[std::size_t(i)][std::size_t(k)];
                        emit(std::move(row));
                    }
                // A-_t e- - e- A-_s = 0
                std::size_t sq = std::size_t(sp) * sp, tq = std::size_t(tp) * tp;
                for (int i = 0; i < tm; ++i)
                    for (int j = 0; j < sm; ++j) {
                        std::map<std::size_t, Rat> row;
                        for (int k = 0; k < tm; ++k)
                            row[to + tq + std::size_t(i) * tm + k] +=
                                mat.minus[std::size_t(k)][std::size_t(j)];
                        for (int k = 0; k < sm; ++k)
                            row[so + sq + std::size_t(k) * sm + j] -=
                                mat.minus[std::size_t(i)][std::size_t(k)];
                        emit(std::move(row));
                    }
            } else {
                // P_t e+ - e- P_s = 0   (P: V+ -> V-)
                for (int i = 0; i < tm; ++i)
                    for (int j = 0; j < sp; ++j) {
                        std::map<std::size_t, Rat> row;
                        for (int k = 0; k < tp; ++k)
                            row[to + std::size_t(i) * tp + k] += mat.plus[std::size_t(k)][std::size_t(j)];
                        for (int k = 0; k < sm; ++k)
                            row[so + std::size_t(k) * sp + j] -= mat.minus[std::size_t(i)][std::size_t(k)];
                        emit(std::move(row));
                    }
                // Q_t e- - e+ Q_s = 0   (Q: V- -> V+)
                std::size_t sq = std::size_t(sm) * sp, tq = std::size_t(tm) * tp;
                for (int i = 0; i < tp; ++i)
                    for (int j = 0; j < sm; ++j) {
                        std::map<std::size_t, Rat> row;
                        for (int k = 0; k < tm; ++k)
                            row[to + tq + std::size_t(i) * tm + k] +=
                                mat.minus[std::size_t(k)][std::size_t(j)];
                        for (int k = 0; k < sp; ++k)
                            row[so + sq + std::size_t(k) * sm + j] -=
                                mat.plus[std::size_t(i)][std::size_t(k)];
                        emit(std::move(row));
                    }
            }
        }
        if (rows.empty()) rows.push_back(Vec(layout.total, Rat(0)));
        Mat system(rows.begin(), rows.end());
        return std::make_pair(layout, nullspace(system));
    };

    EndAlgebra result;
    for (int parity = 0; parity <= 1; ++parity) {
        bool even_sector = parity == 0;
        auto [layout, null] = solve_sector(even_sector);
        if (even_sector)
            result.dimension.even = Int(null.size());
        else
            result.dimension.odd = Int(null.size());
        for (const auto& sol : null) {
            EndoSolution s;
            s.parity = parity;
            for (const auto& v : g.vertices) {
                auto [dp, dm] = rep.dim_of(v);
                std::size_t off = layout.offset[v];
                Mat first, second;
                if (even_sector) {
                    first = mat_zero(std::size_t(dp), std::size_t(dp));
                    second = mat_zero(std::size_t(dm), std::size_t(dm));
                    for (int i = 0; i < dp; ++i)
                        for (int j = 0; j < dp; ++j)
                            first[std::size_t(i)][std::size_t(j)] = sol[off + std::size_t(i) * dp + j];
                    std::size_t q = std::size_t(dp) * dp;
                    for (int i = 0; i < dm; ++i)
                        for (int j = 0; j < dm; ++j)
                            second[std::size_t(i)][std::size_t(j)] =
                                sol[off + q + std::size_t(i) * dm + j];
                } else {
                    first = mat_zero(std::size_t(dm), std::size_t(dp));   // P
                    second = mat_zero(std::size_t(dp), std::size_t(dm));  // Q
                    for (int i = 0; i < dm; ++i)
                        for (int j = 0; j < dp; ++j)
                            first[std::size_t(i)][std::size_t(j)] = sol[off + std::size_t(i) * dp + j];
                    std::size_t q = std::size_t(dm) * dp;
                    for (int i = 0; i < dp; ++i)
                        for (int j = 0; j < dm; ++j)
                            second[std::size_t(i)][std::size_t(j)] =
                                sol[off + q + std::size_t(i) * dm + j];
                }
                s.blocks[v] = {std::move(first), std::move(second)};
            }
            result.basis.push_back(std::move(s));
        }
    }
    return result;
}

/// Composition of two endomorphism solutions (a after b), parity additive.
inline EndoSolution compose_solutions(const EndoSolution& a, const EndoSolution& b) {
    EndoSolution r;
    r.parity = (a.parity + b.parity) & 1;
    for (const auto& [v, bpair] : b.blocks) {
        const auto& apair = a.blocks.at(v);
        Mat first, second;
        if (a.parity == 0 && b.parity == 0) {
            first = mat_mul(apair.first, bpair.first);    // A+ B+
            second = mat_mul(apair.second, bpair.second); // A- B-
        } else if (a.parity == 0 && b.parity == 1) {
            first = mat_mul(apair.second, bpair.first);   // P' = A- P
            second = mat_mul(apair.first, bpair.second);  // Q' = A+ Q
        } else if (a.parity == 1 && b.parity == 0) {
            first = mat_mul(apair.first, bpair.first);    // P' = P B+
            second = mat_mul(apair.second, bpair.second); // Q' = Q B-
        } else {
            first = mat_mul(apair.second, bpair.first);   // A+ = Q_a P_b
            second = mat_mul(apair.first, bpair.second);  // A- = P_a Q_b
        }
        r.blocks[v] = {std::move(first), std::move(second)};
    }
    return r;
}

} // namespace superalg

#endif
