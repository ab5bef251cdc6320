#ifndef SUPERALG_IO_HPP
#define SUPERALG_IO_HPP

// JSON (de)serialization of the kernel types.  All numbers travel as
// decimal strings ("p/q" for rationals) so records are exact and
// byte-for-byte reproducible; containers are emitted in sorted or input
// order only.

#include <json.hpp>

#include <string>
#include <vector>

#include "superalg/cohomology.hpp"
#include "superalg/curve.hpp"
#include "superalg/cycles.hpp"
#include "superalg/moduli.hpp"
#include "superalg/nori.hpp"
#include "superalg/supermatrix.hpp"

namespace superalg {

using Json = nlohmann::ordered_json;

namespace io {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
    fail(errc::malformed_input, where + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) bad(where, "missing field '" + key + "'");
    return j.at(key);
}

inline std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

inline Int get_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    bad(where, "expected an integer (as number or decimal string)");
}

inline Rat get_rat(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad(where, "expected a rational (as number or 'p/q' string)");
}

inline int get_small_int(const Json& j, const std::string& where) {
    Int v = get_int(j, where);
    require(v >= -1000000 && v <= 1000000, errc::malformed_input, where + ": value out of range");
    return (int)v.convert_to<long>();
}

// --- Z2 ---------------------------------------------------------------

inline Json to_json(const Z2& v) { return Json::array({to_string(v.even), to_string(v.odd)}); }

inline Z2 z2_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) bad(where, "expected [even, odd]");
    return Z2(get_int(j[0], where), get_int(j[1], where));
}

inline Json to_json(const SuperDim& v) {
    return Json::array({to_string(v.even), to_string(v.odd)});
}

// --- Grassmann scalars and supermatrices -------------------------------

inline Json to_json(const Grassmann& g) {
    Json terms = Json::array();
    for (const auto& [mask, c] : g.terms()) {
        Json gens = Json::array();
        for (int i = 0; i < g.generators(); ++i)
            if (mask & (1u << i)) gens.push_back(i + 1);
        terms.push_back(Json::array({gens, to_string(c)}));
    }
    return Json{{"k", g.generators()}, {"terms", terms}};
}

inline Grassmann grassmann_from_json(const Json& j, const std::string& where) {
    int k = get_small_int(field(j, "k", where), where + ".k");
    Grassmann g(k);
    const Json& terms = field(j, "terms", where);
    if (!terms.is_array()) bad(where, "'terms' must be an array");
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) bad(where, "term must be [[indices], coeff]");
        std::uint32_t mask = 0;
        for (const auto& idx : t[0]) {
            int i = get_small_int(idx, where + ".index");
            if (i < 1 || i > k) bad(where, "generator index out of range");
            if (mask & (1u << (i - 1))) bad(where, "repeated generator index");
            mask |= 1u << (i - 1);
        }
        Rat c = get_rat(t[1], where + ".coeff");
        g.set(mask, g.coeff(mask) + c);
    }
    return g;
}

inline Json to_json(const SuperMatrix& m) {
    auto block = [](const GrassmannMat& b) {
        Json rows = Json::array();
        for (const auto& row : b) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(to_json(e));
            rows.push_back(r);
        }
        return rows;
    };
    return Json{{"p", m.p},
                {"q", m.q},
                {"blocks",
                 Json{{"A", block(m.a)}, {"B", block(m.b)}, {"C", block(m.c)}, {"D", block(m.d)}}}};
}

inline SuperMatrix supermatrix_from_json(const Json& j, const std::string& where) {
    int p = get_small_int(field(j, "p", where), where + ".p");
    int q = get_small_int(field(j, "q", where), where + ".q");
    const Json& blocks = field(j, "blocks", where);
    auto block = [&](const std::string& name, int rows, int cols) {
        const Json& b = field(blocks, name, where + ".blocks");
        if (!b.is_array() || (int)b.size() != rows) bad(where, "block " + name + " shape");
        GrassmannMat m;
        for (const auto& row : b) {
            if (!row.is_array() || (int)row.size() != cols) bad(where, "block " + name + " shape");
            std::vector<Grassmann> r;
            for (const auto& e : row) r.push_back(grassmann_from_json(e, where + "." + name));
            m.push_back(std::move(r));
        }
        return m;
    };
    return SuperMatrix(p, q, block("A", p, p), block("B", p, q), block("C", q, p),
                       block("D", q, q));
}

// --- Algebras and modules ----------------------------------------------

inline Json to_json(const FiniteSuperAlgebra& a) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        basis.push_back(Json::array({a.names[i], a.parity[i]}));
    Json mult = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.mult[i][j][k] != 0)
                    mult.push_back(Json::array(
                        {a.names[i], a.names[j], a.names[k], to_string(a.mult[i][j][k])}));
    Json unit = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.unit[i] != 0) unit.push_back(Json::array({a.names[i], to_string(a.unit[i])}));
    return Json{{"basis", basis}, {"mult", mult}, {"unit", unit}};
}

inline FiniteSuperAlgebra algebra_from_json(const Json& j, const std::string& where) {
    FiniteSuperAlgebra a;
    const Json& basis = field(j, "basis", where);
    if (!basis.is_array() || basis.empty()) bad(where, "'basis' must be a nonempty array");
    for (const auto& b : basis) {
        if (!b.is_array() || b.size() != 2) bad(where, "basis entry must be [name, parity]");
        a.names.push_back(get_string(b[0], where + ".basis"));
        int par = get_small_int(b[1], where + ".parity");
        if (par != 0 && par != 1) bad(where, "parity must be 0 or 1");
        a.parity.push_back(par);
    }
    auto index_of = [&](const std::string& n) {
        for (std::size_t i = 0; i < a.names.size(); ++i)
            if (a.names[i] == n) return i;
        bad(where, "unknown basis name '" + n + "'");
    };
    std::size_t n = a.names.size();
    a.mult.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
    for (const auto& t : field(j, "mult", where)) {
        if (!t.is_array() || t.size() != 4) bad(where, "mult entry must be [i, j, k, coeff]");
        std::size_t i = index_of(get_string(t[0], where));
        std::size_t jj = index_of(get_string(t[1], where));
        std::size_t k = index_of(get_string(t[2], where));
        a.mult[i][jj][k] += get_rat(t[3], where + ".mult");
    }
    a.unit = Vec(n, Rat(0));
    for (const auto& u : field(j, "unit", where)) {
        if (!u.is_array() || u.size() != 2) bad(where, "unit entry must be [name, coeff]");
        a.unit[index_of(get_string(u[0], where))] += get_rat(u[1], where + ".unit");
    }
    a.validate();
    return a;
}

inline GradedModule module_from_json(const Json& j, const FiniteSuperAlgebra& alg,
                                     const std::string& where) {
    GradedModule m;
    const Json& basis = field(j, "basis", where);
    if (!basis.is_array() || basis.empty()) bad(where, "'basis' must be a nonempty array");
    for (const auto& b : basis) {
        if (!b.is_array() || b.size() != 2) bad(where, "basis entry must be [name, parity]");
        m.names.push_back(get_string(b[0], where + ".basis"));
        int par = get_small_int(b[1], where + ".parity");
        if (par != 0 && par != 1) bad(where, "parity must be 0 or 1");
        m.parity.push_back(par);
    }
    auto mod_index = [&](const std::string& nm) {
        for (std::size_t i = 0; i < m.names.size(); ++i)
            if (m.names[i] == nm) return i;
        bad(where, "unknown module basis name '" + nm + "'");
    };
    auto alg_index = [&](const std::string& nm) {
        for (std::size_t i = 0; i < alg.names.size(); ++i)
            if (alg.names[i] == nm) return i;
        bad(where, "unknown algebra basis name '" + nm + "'");
    };
    m.act.assign(m.names.size(), std::vector<Vec>(alg.dim(), Vec(m.names.size(), Rat(0))));
    for (const auto& t : field(j, "action", where)) {
        if (!t.is_array() || t.size() != 4) bad(where, "action entry must be [m, a, m, coeff]");
        std::size_t i = mod_index(get_string(t[0], where));
        std::size_t jj = alg_index(get_string(t[1], where));
        std::size_t k = mod_index(get_string(t[2], where));
        m.act[i][jj][k] += get_rat(t[3], where + ".action");
    }
    m.validate(alg);
    return m;
}

// --- Curve models -------------------------------------------------------

inline Json to_json(const CurvePoint& p) {
    if (p.at_infinity) return Json("inf");
    Json coeffs = Json::array();
    for (const auto& c : p.poly.c) coeffs.push_back(to_string(c));
    return coeffs;
}

inline CurvePoint point_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return CurvePoint::infinity();
        bad(where, "point must be 'inf' or a coefficient array");
    }
    if (!j.is_array() || j.size() < 2) bad(where, "point needs at least two coefficients");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(get_rat(e, where));
    return CurvePoint::finite(QPoly(std::move(c)));
}

inline Json to_json(const SuperCurveModel& m) {
    Json twist = Json::array();
    for (const auto& [p, d] : m.twist) twist.push_back(Json::array({to_json(p), to_string(d)}));
    Json torsion = Json::array();
    for (const auto& [p, e] : m.torsion) torsion.push_back(Json::array({to_json(p), e}));
    return Json{{"base", m.projective ? "P1" : "A1"},
                {"odd_rank", m.odd_rank},
                {"twist", twist},
                {"torsion", torsion}};
}

inline SuperCurveModel model_from_json(const Json& j, const std::string& where) {
    SuperCurveModel m;
    std::string base = get_string(field(j, "base", where), where + ".base");
    if (base == "P1")
        m.projective = true;
    else if (base != "A1")
        bad(where, "base must be 'A1' or 'P1'");
    if (j.contains("odd_rank")) m.odd_rank = get_small_int(j.at("odd_rank"), where + ".odd_rank");
    if (j.contains("twist"))
        for (const auto& t : j.at("twist")) {
            if (!t.is_array() || t.size() != 2) bad(where, "twist entry must be [point, degree]");
            m.twist.emplace_back(point_from_json(t[0], where + ".twist"),
                                 get_int(t[1], where + ".twist"));
        }
    if (j.contains("torsion"))
        for (const auto& t : j.at("torsion")) {
            if (!t.is_array() || t.size() != 2)
                bad(where, "torsion entry must be [point, exponent]");
            m.torsion.emplace_back(point_from_json(t[0], where + ".torsion"),
                                   get_small_int(t[1], where + ".torsion"));
        }
    m.validate();
    return m;
}

inline QPoly poly_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "polynomial must be a coefficient array");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(get_rat(e, where));
    return QPoly(std::move(c));
}

inline Json to_json(const QPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.c) coeffs.push_back(to_string(c));
    return coeffs;
}

inline RatFunc function_from_json(const Json& j, const std::string& where) {
    QPoly num = poly_from_json(field(j, "num", where), where + ".num");
    QPoly den = j.contains("den") ? poly_from_json(j.at("den"), where + ".den")
                                  : QPoly::constant(Rat(1));
    require(!den.is_zero(), errc::malformed_input, where + ": zero denominator");
    return RatFunc(num, den);
}

inline Json to_json(const RatFunc& f) {
    return Json{{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

inline Json to_json(const PointDivisor& d) {
    Json terms = Json::array();
    for (const auto& [p, c] : d.terms) terms.push_back(Json::array({p.str(), to_json(c)}));
    return Json{{"dim", 0}, {"terms", terms}};
}

// --- Cycles and attached data -------------------------------------------

inline Json to_json(const SuperCycle& c) {
    Json terms = Json::array();
    for (const auto& [n, v] : c.terms) terms.push_back(Json::array({n, to_json(v)}));
    return Json{{"dim", c.dim}, {"terms", terms}};
}

inline SuperCycle cycle_from_json(const Json& j, const std::string& where) {
    SuperCycle c(get_small_int(field(j, "dim", where), where + ".dim"));
    for (const auto& t : field(j, "terms", where)) {
        if (!t.is_array() || t.size() != 2) bad(where, "term must be [name, [even, odd]]");
        c.add(get_string(t[0], where), z2_from_json(t[1], where));
    }
    return c;
}

inline ProperMapData mapdata_from_json(const Json& j, const std::string& where) {
    ProperMapData d;
    for (const auto& t : field(j, "maps", where)) {
        if (!t.is_array() || t.size() != 3) bad(where, "map entry must be [name, image, degree]");
        std::string name = get_string(t[0], where);
        Int deg = get_int(t[2], where + ".degree");
        require(deg >= 0, errc::malformed_input, where + ": negative degree");
        d.maps[name] = {get_string(t[1], where), deg};
    }
    return d;
}

inline Json to_json(const ProperMapData& d) {
    Json maps = Json::array();
    for (const auto& [n, e] : d.maps)
        maps.push_back(Json::array({n, e.image, to_string(e.degree)}));
    return Json{{"maps", maps}};
}

inline FlatPullbackData pullbackdata_from_json(const Json& j, const std::string& where) {
    FlatPullbackData d;
    d.relative_dim = get_small_int(field(j, "m", where), where + ".m");
    for (const auto& t : field(j, "pullbacks", where)) {
        if (!t.is_array() || t.size() != 2)
            bad(where, "pullback entry must be [name, [components]]");
        std::string name = get_string(t[0], where);
        std::vector<PullbackComponent> comps;
        for (const auto& cj : t[1]) {
            PullbackComponent comp;
            comp.name = get_string(field(cj, "name", where), where + ".component");
            if (cj.contains("length"))
                comp.multiplicity = z2_from_json(cj.at("length"), where + ".length");
            else if (cj.contains("algebra"))
                comp.multiplicity = algebra_from_json(cj.at("algebra"), where + ".algebra");
            else
                bad(where, "component needs 'length' or 'algebra'");
            comps.push_back(std::move(comp));
        }
        d.pullbacks[name] = std::move(comps);
    }
    return d;
}

inline RationalWitness witness_from_json(const Json& j, const std::string& where) {
    RationalWitness w;
    w.embedding.dim = get_small_int(field(j, "dim", where), where + ".dim");
    for (const auto& t : field(j, "embedding", where)) {
        if (!t.is_array() || t.size() != 2) bad(where, "embedding entry must be [point, name]");
        w.embedding.points.emplace_back(point_from_json(t[0], where + ".embedding"),
                                        get_string(t[1], where));
    }
    w.model = model_from_json(field(j, "model", where), where + ".model");
    w.g = function_from_json(field(j, "g", where), where + ".g");
    return w;
}

// --- Dual graphs and supermap data ---------------------------------------

inline DualGraph graph_from_json(const Json& j, const std::string& where) {
    DualGraph g;
    for (const auto& c : field(j, "components", where)) {
        if (!c.is_array() || c.size() != 2) bad(where, "component must be [name, genus]");
        g.components.emplace_back(get_string(c[0], where), get_int(c[1], where + ".genus"));
    }
    auto pairs = [&](const char* key, auto& out) {
        if (!j.contains(key)) return;
        for (const auto& p : j.at(key)) {
            if (!p.is_array() || p.size() != 2) bad(where, std::string(key) + " entry shape");
            out.emplace_back(get_string(p[0], where), get_string(p[1], where));
        }
    };
    pairs("nodes", g.nodes);
    pairs("ns", g.ns);
    pairs("rr", g.rr);
    g.validate();
    return g;
}

inline Json to_json(const DualGraph& g) {
    Json comps = Json::array();
    for (const auto& [n, genus] : g.components) comps.push_back(Json::array({n, to_string(genus)}));
    auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
        Json out = Json::array();
        for (const auto& [a, b] : v) out.push_back(Json::array({a, b}));
        return out;
    };
    return Json{{"components", comps},
                {"nodes", pairs(g.nodes)},
                {"ns", pairs(g.ns)},
                {"rr", pairs(g.rr)}};
}

inline SuperMapFiberData fiberdata_from_json(const Json& j, const std::string& where) {
    SuperMapFiberData d;
    d.graph = graph_from_json(field(j, "graph", where), where + ".graph");
    for (const auto& t : field(j, "maps", where)) {
        if (!t.is_array() || t.size() != 2) bad(where, "map entry must be [component, record]");
        std::string comp = get_string(t[0], where);
        const Json& rec = t[1];
        SuperMapFiberData::ComponentMap cm;
        if (rec.contains("contracted") && rec.at("contracted").is_boolean())
            cm.contracted = rec.at("contracted").get<bool>();
        if (!cm.contracted) {
            cm.image = get_string(field(rec, "image", where), where + ".image");
            cm.degree = get_int(field(rec, "degree", where), where + ".degree");
        }
        if (rec.contains("multiplicity"))
            cm.multiplicity = z2_from_json(rec.at("multiplicity"), where + ".multiplicity");
        d.maps[comp] = std::move(cm);
    }
    d.validate();
    return d;
}

// --- Nori graphs, posets, representations --------------------------------

inline NoriGraph norigraph_from_json(const Json& j, const std::string& where) {
    NoriGraph g;
    for (const auto& f : field(j, "flags", where)) g.flags.push_back(get_string(f, where));
    for (const auto& v : field(j, "vertices", where)) g.vertices.push_back(get_string(v, where));
    for (const auto& b : field(j, "boundary", where)) {
        if (!b.is_array() || b.size() != 2) bad(where, "boundary entry must be [flag, vertex]");
        g.boundary[get_string(b[0], where)] = get_string(b[1], where);
    }
    for (const auto& i : field(j, "involution", where)) {
        if (!i.is_array() || i.size() != 2) bad(where, "involution entry must be [flag, flag]");
        g.involution[get_string(i[0], where)] = get_string(i[1], where);
    }
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) {
            if (!l.is_array() || l.size() != 2) bad(where, "label entry must be [flag, label]");
            g.labels[get_string(l[0], where)] = get_string(l[1], where);
        }
    return g;
}

inline Json to_json(const NoriGraph& g) {
    Json flags = Json::array(), vertices = Json::array(), boundary = Json::array(),
         involution = Json::array(), labels = Json::array();
    for (const auto& f : g.flags) flags.push_back(f);
    for (const auto& v : g.vertices) vertices.push_back(v);
    for (const auto& [f, v] : g.boundary) boundary.push_back(Json::array({f, v}));
    for (const auto& [f, t] : g.involution) involution.push_back(Json::array({f, t}));
    for (const auto& [f, l] : g.labels) labels.push_back(Json::array({f, l}));
    return Json{{"flags", flags},
                {"vertices", vertices},
                {"boundary", boundary},
                {"involution", involution},
                {"labels", labels}};
}

inline EmbeddingPoset poset_from_json(const Json& j, const std::string& where) {
    EmbeddingPoset p;
    for (const auto& e : field(j, "elements", where)) p.elements.push_back(get_string(e, where));
    for (const auto& r : field(j, "relations", where)) {
        if (!r.is_array() || r.size() != 2)
            bad(where, "relation must be [smaller, larger]");
        p.relations.emplace_back(get_string(r[0], where), get_string(r[1], where));
    }
    for (const auto& g : field(j, "good", where)) p.good.insert(get_string(g, where));
    return p;
}

inline Mat mat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "matrix must be an array of rows");
    Mat m;
    for (const auto& row : j) {
        if (!row.is_array()) bad(where, "matrix row must be an array");
        Vec r;
        for (const auto& e : row) r.push_back(get_rat(e, where));
        m.push_back(std::move(r));
    }
    return m;
}

inline Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(to_string(e));
        rows.push_back(r);
    }
    return rows;
}

inline DiagramRep rep_from_json(const Json& j, const std::string& where) {
    DiagramRep rep;
    for (const auto& d : field(j, "dims", where)) {
        if (!d.is_array() || d.size() != 2) bad(where, "dims entry must be [vertex, [even, odd]]");
        const Json& pairj = d[1];
        if (!pairj.is_array() || pairj.size() != 2) bad(where, "dimension pair shape");
        rep.dims[get_string(d[0], where)] = {get_small_int(pairj[0], where),
                                             get_small_int(pairj[1], where)};
    }
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) bad(where, "edge entry must be [flag, matrices]");
            const Json& mj = e[1];
            rep.edges[get_string(e[0], where)] = {
                mat_from_json(field(mj, "plus", where), where + ".plus"),
                mat_from_json(field(mj, "minus", where), where + ".minus")};
        }
    return rep;
}

// --- Cohomology tables ----------------------------------------------------

inline Json to_json(const HodgeTable& t) {
    Json hpq = Json::object();
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
            hpq[std::to_string(p) + "," + std::to_string(q)] = to_json(t.h[p][q]);
    auto pair_json = [](const std::pair<Int, Int>& h) {
        return Json::array({to_string(h.first), to_string(h.second)});
    };
    return Json{{"genus", to_string(t.genus)},
                {"hpq", hpq},
                {"betti", Json::array({to_string(t.betti[0]), to_string(t.betti[1]),
                                       to_string(t.betti[2])})},
                {"constituents",
                 Json{{"O", pair_json(t.hO)},
                      {"L", pair_json(t.hL)},
                      {"Omega", pair_json(t.hOmega)},
                      {"L2", pair_json(t.hL2)},
                      {"LOmega", pair_json(t.hLOmega)}}}};
}

inline HodgeTable hodge_from_json(const Json& j, const std::string& where) {
    HodgeTable t;
    t.genus = get_int(field(j, "genus", where), where + ".genus");
    const Json& hpq = field(j, "hpq", where);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            std::string key = std::to_string(p) + "," + std::to_string(q);
            Z2 v = z2_from_json(field(hpq, key, where), where + ".hpq");
            t.h[p][q] = SuperDim{v.even, v.odd};
        }
    const Json& betti = field(j, "betti", where);
    if (!betti.is_array() || betti.size() != 3) bad(where, "betti must have three entries");
    for (int i = 0; i < 3; ++i) t.betti[i] = get_int(betti[std::size_t(i)], where + ".betti");
    const Json& cons = field(j, "constituents", where);
    auto pair_of = [&](const char* key) {
        const Json& pj = field(cons, key, where + ".constituents");
        if (!pj.is_array() || pj.size() != 2) bad(where, "constituent pair shape");
        return std::pair<Int, Int>(get_int(pj[0], where), get_int(pj[1], where));
    };
    t.hO = pair_of("O");
    t.hL = pair_of("L");
    t.hOmega = pair_of("Omega");
    t.hL2 = pair_of("L2");
    t.hLOmega = pair_of("LOmega");
    return t;
}

inline Json to_json(const FrolicherReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json contributions = Json::object();
        for (const auto& [pq, v] : row.contributions) contributions[pq] = to_string(v);
        rows.push_back(Json{{"n", row.n},
                            {"betti", to_string(row.betti)},
                            {"plus", contributions},
                            {"plus_sum", to_string(row.plus_sum)},
                            {"strict_even", to_string(row.strict_even)},
                            {"full", to_string(row.full)},
                            {"compatible", row.compatible}});
    }
    return Json{{"rows", rows}, {"verdict", r.verdict()}};
}

inline Json to_json(const IntegralFormsTable& t) {
    Json entries = Json::object();
    for (const auto& [pq, d] : t.entries)
        entries[std::to_string(pq.first) + "," + std::to_string(pq.second)] = to_json(d);
    return Json{{"entries", entries}, {"parity_note", t.parity_note}};
}

} // namespace io

} // namespace superalg

#endif
