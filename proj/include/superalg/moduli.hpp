#ifndef SUPERALG_MODULI_HPP
#define SUPERALG_MODULI_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "superalg/cycles.hpp"
#include "superalg/z2.hpp"

namespace superalg {

/// Combinatorial skeleton of a punctured nodal curve: components with
/// genera, nodes as unordered pairs (self-pairs allowed), and two kinds of
/// markings.  NS markings are sections, RR markings degree-one divisor
/// labels; both count as special points.
struct DualGraph {
    std::vector<std::pair<std::string, Int>> components;       // (name, genus)
    std::vector<std::pair<std::string, std::string>> nodes;    // unordered pairs
    std::vector<std::pair<std::string, std::string>> ns;       // (component, label)
    std::vector<std::pair<std::string, std::string>> rr;       // (component, label)

    bool has_component(const std::string& name) const {
        for (const auto& [n, g] : components)
            if (n == name) return true;
        return false;
    }

    Int genus_of(const std::string& name) const {
        for (const auto& [n, g] : components)
            if (n == name) return g;
        fail(errc::malformed_input, "unknown component " + name);
    }

    void validate() const {
        std::set<std::string> seen;
        for (const auto& [n, g] : components) {
            require(g >= 0, errc::malformed_input, "negative genus on " + n);
            require(seen.insert(n).second, errc::malformed_input, "duplicate component " + n);
        }
        for (const auto& [a, b] : nodes)
            require(has_component(a) && has_component(b), errc::malformed_input,
                    "node endpoint missing");
        std::set<std::string> labels;
        for (const auto& lists : {ns, rr})
            for (const auto& [c, l] : lists) {
                require(has_component(c), errc::malformed_input, "marking on missing component");
                require(labels.insert(l).second, errc::malformed_input,
                        "duplicate marking label " + l);
            }
    }

    bool connected() const {
        if (components.empty()) return true;
        std::map<std::string, std::string> parent;
        for (const auto& [n, g] : components) parent[n] = n;
        auto find = [&](std::string x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        for (const auto& [a, b] : nodes) parent[find(a)] = find(b);
        std::string root = find(components[0].first);
        for (const auto& [n, g] : components)
            if (find(n) != root) return false;
        return true;
    }

    /// Node branches on a component; self-nodes count twice.
    int node_branches(const std::string& name) const {
        int count = 0;
        for (const auto& [a, b] : nodes) {
            if (a == name) ++count;
            if (b == name) ++count;
        }
        return count;
    }

    int marking_count(const std::string& name) const {
        int count = 0;
        for (const auto& [c, l] : ns)
            if (c == name) ++count;
        for (const auto& [c, l] : rr)
            if (c == name) ++count;
        return count;
    }

    int rr_count(const std::string& name) const {
        int count = 0;
        for (const auto& [c, l] : rr)
            if (c == name) ++count;
        return count;
    }

    /// Special points on a component: markings plus node branches.
    int special_points(const std::string& name) const {
        return marking_count(name) + node_branches(name);
    }
};

/// Arithmetic genus of the connected nodal curve: sum of the component
/// genera plus nodes minus components plus one.
inline Int arithmetic_genus(const DualGraph& g) {
    g.validate();
    require(g.connected(), errc::disconnected, "dual graph is not connected");
    Int total = 0;
    for (const auto& [n, gi] : g.components) total += gi;
    return total + Int(g.nodes.size()) - Int(g.components.size()) + 1;
}

/// Well-formed connected graph; the prestable check carries no numerical
/// condition.
inline bool is_prestable(const DualGraph& g) {
    g.validate();
    require(g.connected(), errc::disconnected, "dual graph is not connected");
    return true;
}

struct StabilityReport {
    bool stable = true;
    std::vector<std::string> violations;
};

/// 2 g_i - 2 + n_i > 0 on every component, n_i counting markings and node
/// branches.
inline StabilityReport stability_report(const DualGraph& g) {
    is_prestable(g);
    StabilityReport r;
    for (const auto& [name, gi] : g.components) {
        Int n_i = g.special_points(name);
        Int slack = 2 * gi - 2 + n_i;
        if (slack <= 0) {
            r.stable = false;
            r.violations.push_back("component " + name + ": 2*" + to_string(gi) + "-2+" +
                                   to_string(n_i) + " = " + to_string(slack) + " <= 0");
        }
    }
    return r;
}

inline bool is_stable(const DualGraph& g) { return stability_report(g).stable; }

struct SusyReport {
    bool holds = true;
    std::vector<std::string> lines;  // one equation per component
};

/// Per-component degree condition for a square root of the log dualizing
/// sheaf twisted by the RR divisor: 2 deg L_i = 2 g_i - 2 + #branches_i +
/// #RR_i.  Summed over components this forces 2 deg L = 2g - 2 + n_R.
inline SusyReport susy_degree_report(const DualGraph& g, const std::map<std::string, Int>& degL) {
    is_prestable(g);
    SusyReport r;
    for (const auto& [name, gi] : g.components) {
        auto it = degL.find(name);
        require(it != degL.end(), errc::malformed_input, "missing degree for " + name);
        Int rhs = 2 * gi - 2 + Int(g.node_branches(name)) + Int(g.rr_count(name));
        Int lhs = 2 * it->second;
        bool ok = lhs == rhs;
        r.holds &= ok;
        r.lines.push_back("component " + name + ": 2*deg L = " + to_string(lhs) +
                          (ok ? " == " : " != ") + to_string(rhs) +
                          " = 2g-2+branches+rr");
    }
    return r;
}

inline bool susy_degree_check(const DualGraph& g, const std::map<std::string, Int>& degL) {
    return susy_degree_report(g, degL).holds;
}

// ---------------------------------------------------------------------------
// Stable supermaps
// ---------------------------------------------------------------------------

/// Per-component mapping data of one fibre of a supermap: contracted
/// components carry no image; others map onto a generator of the target
/// curve classes with a degree and a fibre multiplicity (default (1,1),
/// the class of a split supercurve component).
struct SuperMapFiberData {
    struct ComponentMap {
        bool contracted = false;
        std::string image;   // generator name in the target's curve classes
        Int degree{1};
        Z2 multiplicity{1, 1};
    };
    DualGraph graph;
    std::map<std::string, ComponentMap> maps;

    void validate() const {
        graph.validate();
        for (const auto& [name, gi] : graph.components) {
            auto it = maps.find(name);
            require(it != maps.end(), errc::missing_image, "no map data for component " + name);
            if (!it->second.contracted) {
                require(!it->second.image.empty(), errc::missing_image,
                        "missing image for component " + name);
                require(it->second.degree >= 1, errc::missing_image,
                        "map degree must be >= 1 on " + name);
            }
        }
    }
};

/// Push-forward class of the fibre: degree-weighted multiplicities on the
/// image generators; contracted components contribute nothing.
inline SuperCycle fiber_class(const SuperMapFiberData& d) {
    d.validate();
    SuperCycle out(1);
    for (const auto& [name, cm] : d.maps) {
        if (cm.contracted) continue;
        if (!d.graph.has_component(name)) continue;
        out.add(cm.image, z2_scale(cm.degree, cm.multiplicity));
    }
    return out;
}

struct StableMapReport {
    bool stable = true;
    std::vector<std::string> violations;
};

/// Every fibre prestable, every fibre class equal to beta, and the
/// numerical bounds on contracted components: rational ones carry at
/// least three special points, genus-one ones at least one.
inline StableMapReport stable_supermap_report(const std::vector<SuperMapFiberData>& fibers,
                                              const SuperCycle& beta) {
    StableMapReport r;
    int index = 0;
    for (const auto& fib : fibers) {
        std::string tag = "fiber " + std::to_string(index++);
        fib.validate();
        if (!fib.graph.connected()) {
            r.stable = false;
            r.violations.push_back(tag + ": disconnected");
            continue;
        }
        SuperCycle cls = fiber_class(fib);
        if (!(cls == beta)) {
            r.stable = false;
            r.violations.push_back(tag + ": class mismatch");
        }
        for (const auto& [name, cm] : fib.maps) {
            if (!cm.contracted) continue;
            Int gi = fib.graph.genus_of(name);
            int special = fib.graph.special_points(name);
            if (gi == 0 && special < 3) {
                r.stable = false;
                r.violations.push_back(tag + ": contracted rational component " + name +
                                       " has " + std::to_string(special) + " special points");
            } else if (gi == 1 && special < 1) {
                r.stable = false;
                r.violations.push_back(tag + ": contracted genus-1 component " + name +
                                       " has no special point");
            }
        }
    }
    return r;
}

inline bool is_stable_supermap(const std::vector<SuperMapFiberData>& fibers,
                               const SuperCycle& beta) {
    return stable_supermap_report(fibers, beta).stable;
}

/// Labels of the family members whose fibres form a stable supermap of
/// class beta.
inline std::vector<std::string> beta_good_filter(
    const std::vector<std::pair<std::string, std::vector<SuperMapFiberData>>>& family,
    const SuperCycle& beta) {
    std::vector<std::string> good;
    for (const auto& [label, fibers] : family)
        if (is_stable_supermap(fibers, beta)) good.push_back(label);
    return good;
}

} // namespace superalg

#endif
