#ifndef SUPERALG_CLI_HPP
#define SUPERALG_CLI_HPP

// Batch command-line front end.  Every operation is exposed as a
// subcommand with JSON input/output; numbers travel as decimal strings
// and output is deterministic byte-for-byte.  Exit codes: 0 ok,
// 1 domain error, 2 malformed input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "superalg/io.hpp"
#include "superalg/selftest.hpp"

namespace superalg::cli {

struct CommandResult {
    std::string status;  // "ok" or "error"
    Json payload;
    std::vector<std::string> diagnostics;
    int exit_code = 0;

    Json to_json() const {
        Json d = Json::array();
        for (const auto& x : diagnostics) d.push_back(x);
        return Json{{"status", status}, {"payload", payload}, {"diagnostics", d}};
    }
};

namespace detail {

inline CommandResult ok(Json payload) { return {"ok", std::move(payload), {}, 0}; }

inline CommandResult error_result(const kernel_error& e) {
    int code = e.code() == errc::malformed_input ? 2 : 1;
    return {"error", Json::object(), {e.what()}, code};
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::malformed_input, "cannot open input file " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::malformed_input, "parse failure in " + path + ": " + e.what());
    }
    return j;
}

/// Runs `handler` on every input file; several files become a result
/// array evaluated in parallel when jobs > 1, collected in input order.
inline CommandResult run_on_files(const std::vector<std::string>& files, int jobs,
                                  const std::function<Json(const Json&)>& handler) {
    auto run_one = [&](const std::string& path) -> CommandResult {
        try {
            return ok(handler(read_json_file(path)));
        } catch (const kernel_error& e) {
            return error_result(e);
        }
    };
    if (files.size() == 1) return run_one(files[0]);
    std::vector<CommandResult> results(files.size());
    if (jobs > 1) {
        std::vector<std::future<CommandResult>> futures;
        for (const auto& f : files)
            futures.push_back(std::async(std::launch::async, run_one, f));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < files.size(); ++i) results[i] = run_one(files[i]);
    }
    CommandResult combined;
    combined.status = "ok";
    combined.payload = Json::array();
    for (const auto& r : results) {
        combined.payload.push_back(r.to_json());
        combined.exit_code = std::max(combined.exit_code, r.exit_code);
        if (r.exit_code != 0) combined.status = "error";
    }
    if (combined.status == "error") combined.diagnostics.push_back("some inputs failed");
    return combined;
}

inline LineBundle parse_bundle(const std::string& spec) {
    if (spec == "trivial") return LineBundle::trivial();
    if (spec == "canonical") return LineBundle::canonical();
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i)
            if (i == s.size() || s[i] == sep) {
                out.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        return out;
    };
    auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "generic") return LineBundle::generic(parse_int(parts[1]));
    if (parts.size() == 3 && parts[0] == "explicit")
        return LineBundle::explicit_data(parse_int(parts[1]), parse_int(parts[2]));
    fail(errc::malformed_input,
         "bundle spec must be trivial | canonical | generic:<deg> | explicit:<deg>:<h0>, got '" +
             spec + "'");
}

inline std::string hodge_text(const HodgeTable& t, const FrolicherReport& r) {
    std::ostringstream os;
    os << "Hodge table, genus " << to_string(t.genus) << "\n";
    os << "         q=0          q=1\n";
    for (int p = 0; p < 2; ++p) {
        os << "  p=" << p << "  ";
        for (int q = 0; q < 2; ++q) os << std::setw(10) << to_string(t.h[p][q]) << "  ";
        os << "\n";
    }
    os << "Betti: " << to_string(t.betti[0]) << " " << to_string(t.betti[1]) << " "
       << to_string(t.betti[2]) << "\n";
    for (const auto& row : r.rows) {
        os << "n=" << row.n << ": b_n = " << to_string(row.betti) << ", even count ";
        for (std::size_t i = 0; i < row.contributions.size(); ++i) {
            if (i) os << " + ";
            os << "h^{" << row.contributions[i].first << "}_+ = "
               << to_string(row.contributions[i].second);
        }
        os << " -> " << (row.compatible ? "compatible" : "incompatible") << "\n";
    }
    os << "verdict: " << r.verdict() << "\n";
    return os.str();
}

// ---- per-command handlers ------------------------------------------------

inline Json handle_ber(const Json& in) {
    SuperMatrix m = io::supermatrix_from_json(in, "ber");
    return Json{{"berezinian", io::to_json(berezinian(m))}};
}

inline Json handle_length(const Json& in) {
    FiniteSuperAlgebra a = io::algebra_from_json(io::field(in, "algebra", "length"), "algebra");
    GradedModule m = in.contains("module")
                         ? io::module_from_json(in.at("module"), a, "module")
                         : algebra_as_module(a);
    return Json{{"length", io::to_json(super_length(a, m))}};
}

inline Json handle_order(const Json& in) {
    SuperCurveModel model = io::model_from_json(io::field(in, "model", "order"), "model");
    CurvePoint p = io::point_from_json(io::field(in, "point", "order"), "point");
    RatFunc g = io::function_from_json(io::field(in, "g", "order"), "g");
    return Json{{"ord", io::to_json(ord_at(model, p, g))}};
}

inline Json handle_div(const Json& in) {
    SuperCurveModel model = io::model_from_json(io::field(in, "model", "div"), "model");
    RatFunc g = io::function_from_json(io::field(in, "g", "div"), "g");
    PointDivisor d = div_model(model, g);
    return Json{{"divisor", io::to_json(d)}, {"degree_total", io::to_json(divisor_degree(d))}};
}

inline Json handle_pushforward(const Json& in) {
    SuperCycle c = io::cycle_from_json(io::field(in, "cycle", "pushforward"), "cycle");
    ProperMapData f = io::mapdata_from_json(io::field(in, "map", "pushforward"), "map");
    return Json{{"cycle", io::to_json(pushforward(c, f))}};
}

inline Json handle_pullback(const Json& in) {
    SuperCycle c = io::cycle_from_json(io::field(in, "cycle", "pullback"), "cycle");
    FlatPullbackData d = io::pullbackdata_from_json(io::field(in, "data", "pullback"), "data");
    return Json{{"cycle", io::to_json(flat_pullback(c, d))}};
}

inline Json handle_rateq(const Json& in) {
    SuperCycle c = io::cycle_from_json(io::field(in, "cycle", "rateq"), "cycle");
    std::vector<RationalWitness> witnesses;
    for (const auto& w : io::field(in, "witnesses", "rateq"))
        witnesses.push_back(io::witness_from_json(w, "witness"));
    return Json{{"equal", verify_rational_equivalence(c, witnesses)}};
}

inline Json handle_stability(const Json& in) {
    DualGraph g = io::graph_from_json(in, "stability");
    StabilityReport r = stability_report(g);
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(v);
    return Json{{"prestable", is_prestable(g)},
                {"stable", r.stable},
                {"genus", to_string(arithmetic_genus(g))},
                {"violations", violations}};
}

inline Json handle_susy(const Json& in) {
    DualGraph g = io::graph_from_json(io::field(in, "graph", "susy"), "graph");
    std::map<std::string, Int> degrees;
    for (const auto& d : io::field(in, "degrees", "susy")) {
        if (!d.is_array() || d.size() != 2)
            io::bad("susy", "degree entry must be [component, degree]");
        degrees[io::get_string(d[0], "susy")] = io::get_int(d[1], "susy.degree");
    }
    SusyReport r = susy_degree_report(g, degrees);
    Json lines = Json::array();
    for (const auto& l : r.lines) lines.push_back(l);
    return Json{{"holds", r.holds}, {"lines", lines}};
}

inline Json handle_stablemap(const Json& in) {
    SuperCycle beta = io::cycle_from_json(io::field(in, "beta", "stablemap"), "beta");
    std::vector<SuperMapFiberData> fibers;
    for (const auto& f : io::field(in, "fibers", "stablemap"))
        fibers.push_back(io::fiberdata_from_json(f, "fiber"));
    StableMapReport r = stable_supermap_report(fibers, beta);
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(v);
    return Json{{"stable", r.stable}, {"violations", violations}};
}

inline Json handle_betagood(const Json& in) {
    SuperCycle beta = io::cycle_from_json(io::field(in, "beta", "betagood"), "beta");
    std::vector<std::pair<std::string, std::vector<SuperMapFiberData>>> family;
    for (const auto& entry : io::field(in, "family", "betagood")) {
        if (!entry.is_array() || entry.size() != 2)
            io::bad("betagood", "family entry must be [label, [fibers]]");
        std::vector<SuperMapFiberData> fibers;
        for (const auto& f : entry[1]) fibers.push_back(io::fiberdata_from_json(f, "fiber"));
        family.emplace_back(io::get_string(entry[0], "betagood"), std::move(fibers));
    }
    Json good = Json::array();
    for (const auto& label : beta_good_filter(family, beta)) good.push_back(label);
    return Json{{"good", good}};
}

inline Json handle_nori_build(const Json& in, const std::string& type, int imax) {
    if (type == "pairs") {
        EmbeddingPoset p = io::poset_from_json(in, "nori-build");
        return Json{{"graph", io::to_json(effective_pairs_diagram(p, imax))}};
    }
    if (type == "category") {
        CategoryPresentation c;
        for (const auto& o : io::field(in, "objects", "nori-build"))
            c.objects.push_back(io::get_string(o, "objects"));
        for (const auto& m : io::field(in, "morphisms", "nori-build")) {
            if (!m.is_array() || m.size() != 3)
                io::bad("nori-build", "morphism must be [name, source, target]");
            c.morphisms.push_back({io::get_string(m[0], "morphism"),
                                   io::get_string(m[1], "morphism"),
                                   io::get_string(m[2], "morphism")});
        }
        for (const auto& i : io::field(in, "identities", "nori-build")) {
            if (!i.is_array() || i.size() != 2)
                io::bad("nori-build", "identity must be [object, morphism]");
            c.identities[io::get_string(i[0], "identity")] = io::get_string(i[1], "identity");
        }
        for (const auto& t : io::field(in, "compose", "nori-build")) {
            if (!t.is_array() || t.size() != 3)
                io::bad("nori-build", "compose entry must be [f, g, g_after_f]");
            c.compose[{io::get_string(t[0], "compose"), io::get_string(t[1], "compose")}] =
                io::get_string(t[2], "compose");
        }
        return Json{{"graph", io::to_json(category_diagram(c))}};
    }
    fail(errc::malformed_input, "nori-build type must be 'category' or 'pairs'");
}

inline Json handle_nori_end(const Json& in) {
    NoriGraph g = io::norigraph_from_json(io::field(in, "graph", "nori-end"), "graph");
    auto verdict = check_graph(g);
    require(verdict.valid, errc::malformed_input, "graph fails validation: " +
            (verdict.violations.empty() ? std::string("unknown") : verdict.violations[0]));
    DiagramRep rep = io::rep_from_json(io::field(in, "rep", "nori-end"), "rep");
    EndAlgebra e = end_algebra(g, rep);
    Json basis = Json::array();
    for (const auto& s : e.basis) {
        Json blocks = Json::array();
        for (const auto& [v, pair] : s.blocks)
            blocks.push_back(Json::array(
                {v, Json{{"first", io::to_json(pair.first)}, {"second", io::to_json(pair.second)}}}));
        basis.push_back(Json{{"parity", s.parity}, {"blocks", blocks}});
    }
    return Json{{"dimension", io::to_json(e.dimension)}, {"basis", basis}};
}

inline Json handle_check_graph(const Json& in) {
    NoriGraph g = io::norigraph_from_json(in, "nori-check");
    auto verdict = check_graph(g);
    Json violations = Json::array();
    for (const auto& v : verdict.violations) violations.push_back(v);
    return Json{{"valid", verdict.valid}, {"violations", violations}};
}

} // namespace detail

/// Full CLI dispatch; writes one result record (or plain text where asked)
/// to `out` and returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer-algebra kernel for Z2-graded (super) commutative structures"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    int jobs = 1;
    std::function<Json(const Json&)> handler;

    auto add_file_command = [&](const std::string& name, const std::string& desc,
                                Json (*fn)(const Json&)) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("inputs", inputs, "input JSON file(s)")->required()->expected(-1);
        cmd->add_option("--jobs", jobs, "parallel workers for batch inputs");
        cmd->callback([&handler, fn] { handler = fn; });
        return cmd;
    };

    add_file_command("ber", "berezinian of an even supermatrix", detail::handle_ber);
    add_file_command("length", "super length of a graded module over an Artin superalgebra",
                     detail::handle_length);
    add_file_command("order", "order of an even rational function at a point",
                     detail::handle_order);
    add_file_command("div", "divisor of an even rational function on a curve model",
                     detail::handle_div);
    add_file_command("pushforward", "proper push-forward of a supercycle",
                     detail::handle_pushforward);
    add_file_command("pullback", "flat pullback of a supercycle", detail::handle_pullback);
    add_file_command("rateq", "verify rational equivalence against witnesses",
                     detail::handle_rateq);
    add_file_command("stability", "stability report for a punctured dual graph",
                     detail::handle_stability);
    add_file_command("susy", "per-component degree condition for a SUSY structure",
                     detail::handle_susy);
    add_file_command("stablemap", "stable supermap verdict for fibre data",
                     detail::handle_stablemap);
    add_file_command("betagood", "filter a family for stable supermaps of a fixed class",
                     detail::handle_betagood);
    add_file_command("nori-end", "endomorphism algebra of a diagram representation",
                     detail::handle_nori_end);
    add_file_command("nori-check", "validate a diagram graph", detail::handle_check_graph);

    // nori-build carries extra flags
    std::string build_type = "pairs";
    int imax = 0;
    {
        CLI::App* cmd = app.add_subcommand("nori-build", "build a diagram graph");
        cmd->add_option("inputs", inputs, "input JSON file(s)")->required()->expected(-1);
        cmd->add_option("--type", build_type, "category | pairs");
        cmd->add_option("--imax", imax, "maximal twist index for effective pairs");
        cmd->add_option("--jobs", jobs, "parallel workers for batch inputs");
        cmd->callback([&] {
            handler = [&build_type, &imax](const Json& in) {
                return detail::handle_nori_build(in, build_type, imax);
            };
        });
    }

    // hodge and frolicher
    std::string genus_str = "0", bundle_spec = "trivial", bundle2_spec, bundle_omega_spec;
    std::string format = "json";
    bool ran_inline = false;
    int inline_code = 0;
    {
        CLI::App* cmd = app.add_subcommand("hodge", "Hodge table of a split supercurve");
        cmd->add_option("--genus", genus_str, "genus of the underlying curve")->required();
        cmd->add_option("--bundle", bundle_spec,
                        "odd line: trivial | canonical | generic:<d> | explicit:<d>:<h0>");
        cmd->add_option("--bundle2", bundle2_spec, "descriptor for L^2 (when not derivable)");
        cmd->add_option("--bundle-omega", bundle_omega_spec,
                        "descriptor for L(x)Omega (when not derivable)");
        cmd->add_option("--format", format, "json | text");
        cmd->callback([&] {
            ran_inline = true;
            try {
                Int g = parse_int(genus_str);
                LineBundle l = detail::parse_bundle(bundle_spec);
                std::optional<LineBundle> l2, lo;
                if (!bundle2_spec.empty()) l2 = detail::parse_bundle(bundle2_spec);
                if (!bundle_omega_spec.empty()) lo = detail::parse_bundle(bundle_omega_spec);
                HodgeTable t = hodge_table(g, l, l2, lo);
                FrolicherReport r = frolicher_report(t);
                if (format == "text") {
                    out << detail::hodge_text(t, r);
                } else {
                    Json payload = io::to_json(t);
                    payload["frolicher"] = io::to_json(r);
                    payload["integral_forms"] = io::to_json(integral_forms_table(t));
                    out << detail::ok(payload).to_json().dump(2) << "\n";
                }
            } catch (const kernel_error& e) {
                auto res = detail::error_result(e);
                out << res.to_json().dump(2) << "\n";
                inline_code = res.exit_code;
            }
        });
    }
    {
        CLI::App* cmd = app.add_subcommand("frolicher", "degeneracy report for a Hodge table");
        cmd->add_option("inputs", inputs, "input JSON file(s): a hodge payload")->required()
            ->expected(-1);
        cmd->add_option("--jobs", jobs, "parallel workers for batch inputs");
        cmd->callback([&handler] {
            handler = [](const Json& in) {
                HodgeTable t = io::hodge_from_json(in, "frolicher");
                return Json{{"frolicher", io::to_json(frolicher_report(t))},
                            {"integral_forms", io::to_json(integral_forms_table(t))}};
            };
        });
    }

    // koszul / poincare
    int odd_vars = 1, weight = 4, even_vars = -1;
    {
        CLI::App* cmd = app.add_subcommand(
            "koszul", "truncated acyclicity / super Poincare comparison");
        cmd->add_option("--odd", odd_vars, "number of odd variables")->required();
        cmd->add_option("--weight", weight, "weight cutoff");
        cmd->add_option("--even", even_vars,
                        "number of even variables (runs the de Rham comparison)");
        cmd->callback([&] {
            ran_inline = true;
            try {
                Json payload;
                if (even_vars >= 0) {
                    PoincareVerdict v = affine_super_poincare(even_vars, odd_vars, weight);
                    Json table = Json::array();
                    for (auto& [w, p, ds, db] : v.table)
                        table.push_back(Json{{"weight", w},
                                             {"degree", p},
                                             {"super", to_string(ds)},
                                             {"bosonic", to_string(db)}});
                    payload = Json{{"mode", "poincare"}, {"even", v.m},   {"odd", v.n},
                                   {"cutoff", v.cutoff}, {"equal", v.equal}, {"table", table}};
                } else {
                    KoszulVerdict v = koszul_acyclicity(odd_vars, weight);
                    Json table = Json::array();
                    for (auto& [w, p, dim] : v.nonzero)
                        table.push_back(
                            Json{{"weight", w}, {"degree", p}, {"dim", to_string(dim)}});
                    payload = Json{{"mode", "koszul"},
                                   {"odd", v.n},
                                   {"cutoff", v.wmax},
                                   {"acyclic", v.acyclic},
                                   {"nonzero", table}};
                }
                out << detail::ok(payload).to_json().dump(2) << "\n";
            } catch (const kernel_error& e) {
                auto res = detail::error_result(e);
                out << res.to_json().dump(2) << "\n";
                inline_code = res.exit_code;
            }
        });
    }

    // selftest
    std::string selftest_format = "text";
    {
        CLI::App* cmd = app.add_subcommand("selftest", "run the built-in verification suite");
        cmd->add_option("--format", selftest_format, "text | json");
        cmd->callback([&] {
            ran_inline = true;
            auto results = selftest::run_acceptance();
            bool all_pass = true;
            for (const auto& r : results) all_pass &= r.pass;
            if (selftest_format == "json") {
                Json rows = Json::array();
                for (const auto& r : results)
                    rows.push_back(Json{{"id", r.id},
                                        {"name", r.name},
                                        {"pass", r.pass},
                                        {"detail", r.detail}});
                Json payload{{"pass", all_pass}, {"criteria", rows}};
                CommandResult res = detail::ok(payload);
                if (!all_pass) {
                    res.status = "error";
                    res.diagnostics.push_back("some criteria failed");
                }
                out << res.to_json().dump(2) << "\n";
            } else {
                for (const auto& r : results)
                    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " — "
                        << r.detail << "\n";
                out << (all_pass ? "all criteria passed" : "FAILURES present") << "\n";
            }
            inline_code = all_pass ? 0 : 1;
        });
    }

    std::vector<const char*> argv;
    std::string prog = "superalg";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (ran_inline) return inline_code;
    if (!handler) {
        err << "no command selected\n";
        return 2;
    }
    CommandResult result = detail::run_on_files(inputs, jobs, handler);
    out << result.to_json().dump(2) << "\n";
    return result.exit_code;
}

} // namespace superalg::cli

#endif
