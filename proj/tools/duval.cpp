// duval: command-line front end.
//
// Exit status: 0 on success, 1 on bad input or an exhausted budget,
// 2 when a verification suite fails.

#include <duval/duval.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace duval;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    bool json_alias = false;

    std::string type;
    std::string subset;
    std::optional<int> from;
    std::string direction = "fwd";

    std::string exponents;
    int extra_vars = 1;
    std::string setting = "global";
    int curves = 0;
    std::string weights;

    std::string builtin_name;
    int n = 0;
    std::string file;
    std::string action = "linear";
    std::optional<std::size_t> budget;

    std::string suite = "all";
    std::vector<std::string> files;
};

std::string format_of(const Options& o) { return o.json_alias ? "json" : o.format; }

json group_json(const FinAbGroup& g) {
    json t = json::array();
    for (const auto& d : g.invariant_factors()) {
        if (d.fits_slong_p()) t.push_back(d.get_si());
        else t.push_back(d.get_str());
    }
    return {{"rank", g.free_rank()}, {"torsion", t}};
}

json envelope(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

std::vector<long> parse_long_list(const std::string& s, const std::string& what) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": '" + tok + "' is not an integer");
        }
        if (pos != tok.size()) throw std::invalid_argument(what + ": '" + tok + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument(what + ": empty list");
    return out;
}

VertexSubset parse_subset(const std::string& s) {
    std::vector<int> m;
    for (long v : parse_long_list(s, "--subset")) m.push_back(static_cast<int>(v));
    if (std::find(m.begin(), m.end(), 0) == m.end()) {
        std::cerr << "warning: vertex 0 added to the subset\n";
        m.push_back(0);
    }
    return VertexSubset(m);
}

std::size_t effective_budget(const Options& o) { return o.budget.value_or(budget_from_env()); }

// Budget given on the command line or through the environment.
std::optional<std::size_t> explicit_budget(const Options& o) {
    if (o.budget) return o.budget;
    if (std::getenv("DUVAL_BUDGET")) return budget_from_env();
    return std::nullopt;
}

MatrixGroup load_group(const Options& o) {
    bool has_builtin = !o.builtin_name.empty(), has_file = !o.file.empty();
    if (has_builtin == has_file) throw std::invalid_argument("give exactly one of --builtin and --file");
    if (has_file) return load_group_file(o.file, effective_budget(o)).group;
    return builtin(o.builtin_name, o.n, effective_budget(o));
}

json arrows_json(const GammaQuiver& g) {
    json a = json::array();
    for (const auto& [key, c] : g.counts) a.push_back({{"from", key.first}, {"to", key.second}, {"count", c}});
    return a;
}

int run_knit(const Options& o) {
    auto t = DynkinType::parse(o.type);
    auto s = parse_subset(o.subset);
    s.check_in(t);
    Direction dir;
    if (o.direction == "fwd") dir = Direction::forward;
    else if (o.direction == "bwd") dir = Direction::backward;
    else throw std::invalid_argument("--direction must be fwd or bwd");
    std::string fmt = format_of(o);

    if (!o.from) {
        auto g = gamma_quiver(t, s);
        if (fmt == "json") {
            auto j = envelope("knit");
            j["type"] = t.name();
            j["subset"] = s.members();
            j["arrows"] = arrows_json(g);
            print_json(j);
        } else if (fmt == "dot") {
            std::cout << g.to_dot();
        } else {
            std::cout << t.name() << " " << s.to_string() << "\n" << g.to_text();
        }
        return 0;
    }

    int j0 = *o.from;
    auto tab = knit(t, s, j0, dir);
    GammaQuiver partial{s, {}};
    for (int i : s.members()) {
        int c = tab.sum_at(i);
        if (c <= 0) continue;
        if (dir == Direction::forward) partial.counts[{j0, i}] = c;
        else partial.counts[{i, j0}] = c;
    }
    if (fmt == "json") {
        auto j = envelope("knit");
        j["type"] = t.name();
        j["subset"] = s.members();
        j["from"] = j0;
        j["direction"] = o.direction;
        j["stop_step"] = tab.stop_step();
        j["arrows"] = arrows_json(partial);
        print_json(j);
    } else if (fmt == "dot") {
        std::cout << partial.to_dot();
    } else {
        std::cout << tab.render_text();
        for (int i : s.members()) {
            int a = dir == Direction::forward ? j0 : i, b = dir == Direction::forward ? i : j0;
            std::cout << "r(" << a << "," << b << ") = " << tab.sum_at(i) << "\n";
        }
    }
    return 0;
}

int run_quiver(const Options& o) {
    auto t = DynkinType::parse(o.type);
    std::string fmt = format_of(o);
    if (!o.subset.empty()) {
        auto s = parse_subset(o.subset);
        s.check_in(t);
        auto g = gamma_quiver(t, s);
        auto bad = gamma_violations(t, g);
        if (fmt == "json") {
            auto j = envelope("quiver");
            j["type"] = t.name();
            j["subset"] = s.members();
            j["arrows"] = arrows_json(g);
            j["symmetric"] = g.symmetric();
            j["violations"] = bad;
            print_json(j);
        } else if (fmt == "dot") {
            std::cout << g.to_dot();
        } else {
            std::cout << t.name() << " " << s.to_string() << "\n" << g.to_text();
            for (const auto& b : bad) std::cout << "violation: " << b << "\n";
        }
        return 0;
    }
    if (fmt == "dot") {
        std::cout << double_quiver_dot(t);
        return 0;
    }
    auto edges = dynkin_edges(t);
    auto delta = dimension_vector(t).delta;
    if (fmt == "json") {
        auto j = envelope("quiver");
        j["type"] = t.name();
        j["vertices"] = t.vertex_count();
        json e = json::array();
        for (auto [a, b] : edges) e.push_back({a, b});
        j["edges"] = e;
        j["delta"] = delta;
        print_json(j);
    } else {
        std::cout << "extended " << t.name() << ", " << t.vertex_count() << " vertices\n";
        std::cout << "delta:";
        for (int d : delta) std::cout << " " << d;
        std::cout << "\nedges:";
        for (auto [a, b] : edges) std::cout << " " << a << "-" << b;
        std::cout << "\n";
    }
    return 0;
}

int run_viehweg(const Options& o) {
    ViehwegData d(parse_long_list(o.exponents, "--exponents"), o.extra_vars);
    Setting s;
    if (o.setting == "global") s = Setting::global;
    else if (o.setting == "local") s = Setting::complete_local;
    else throw std::invalid_argument("--setting must be global or local");
    auto r = viehweg_report(d, s);
    bool z_plus_cl = r.g0 == direct_sum(FinAbGroup::free(1), r.cl);
    if (format_of(o) == "json") {
        auto j = envelope("viehweg");
        j["exponents"] = d.exponents;
        j["krull_dimension"] = d.krull_dimension();
        j["setting"] = to_string(s);
        j["cl"] = group_json(r.cl);
        j["k0_stable_cm"] = group_json(r.k0_stable);
        j["g0"] = group_json(r.g0);
        j["g0_equals_z_plus_cl"] = z_plus_cl;
        print_json(j);
    } else {
        std::cout << "krull dimension " << d.krull_dimension() << ", " << to_string(s) << "\n";
        std::cout << "Cl = " << r.cl.to_string() << "\n";
        std::cout << "K0(stable CM) = " << r.k0_stable.to_string() << "\n";
        std::cout << "G0 = " << r.g0.to_string() << "\n";
    }
    return 0;
}

int run_cdv(const Options& o) {
    auto r = cdv_report(o.curves);
    if (format_of(o) == "json") {
        auto j = envelope("cdv");
        j["curves"] = r.curve_count;
        j["g0"] = group_json(r.g0);
        j["cl"] = group_json(r.cl);
        j["k0_singularity_category"] = group_json(r.k0_sg);
        j["g0_equals_z_plus_cl"] = r.g0_equals_z_plus_cl;
        print_json(j);
    } else {
        std::cout << r.curve_count << " exceptional curves\n";
        std::cout << "G0 = " << r.g0.to_string() << "\n";
        std::cout << "Cl = " << r.cl.to_string() << "\n";
        std::cout << "K0(singularity category) = " << r.k0_sg.to_string() << "\n";
    }
    return 0;
}

int run_preproj(const Options& o) {
    auto w = WeightVector::parse(o.weights);
    auto r = preproj_report(w);
    if (format_of(o) == "json") {
        auto j = envelope("preproj");
        j["n"] = w.n;
        json roots = json::array();
        for (const auto& q : r.centre.roots) roots.push_back(q.get_str());
        j["roots"] = roots;
        j["exponents"] = r.centre.exponents;
        j["cl"] = group_json(r.cl);
        j["g0_centre"] = group_json(r.g0_centre);
        j["admissible"] = r.admissible;
        if (r.admissible) {
            j["g0_cbh"] = group_json(r.g0_cbh);
            j["consistent"] = r.consistent;
        }
        print_json(j);
    } else {
        std::cout << "roots:";
        for (const auto& q : r.centre.roots) std::cout << " " << q.get_str();
        std::cout << "\nmultiplicities:";
        for (long e : r.centre.exponents) std::cout << " " << e;
        std::cout << "\nCl = " << r.cl.to_string() << "\n";
        std::cout << "Z + Cl = " << r.g0_centre.to_string() << "\n";
        if (r.admissible)
            std::cout << "G0 (from the quiver) = " << r.g0_cbh.to_string() << (r.consistent ? "" : "  MISMATCH") << "\n";
        else
            std::cout << "weights negative off vertex 0; quiver computation skipped\n";
    }
    return 0;
}

int run_invariant_ring(const Options& o) {
    auto g = load_group(o);
    auto a = parse_action(o.action);
    auto r = invariant_ring_report(g, a, effective_budget(o));
    if (format_of(o) == "json") {
        auto j = envelope("invariant-ring");
        j["group"] = r.group;
        j["action"] = to_string(a);
        j["order"] = r.order;
        j["classes"] = r.classes;
        j["pseudoreflections"] = r.pseudoreflections;
        j["subgroup_classes"] = r.subgroup_classes;
        j["g0"] = group_json(r.g0);
        j["reduced_g0"] = group_json(r.reduced_g0);
        j["cl"] = group_json(r.cl);
        j["g0_equals_z_plus_cl"] = r.g0_equals_z_plus_cl;
        print_json(j);
    } else {
        std::cout << r.group << " (" << to_string(a) << "), order " << r.order << ", " << r.classes << " classes\n";
        std::cout << "G0 = " << r.g0.to_string() << "\n";
        std::cout << "reduced G0 = " << r.reduced_g0.to_string() << "\n";
        std::cout << "Cl = " << r.cl.to_string() << "\n";
    }
    return 0;
}

int run_mckay(const Options& o) {
    auto g = load_group(o);
    auto a = parse_action(o.action);
    GroupAnalysis an(g, a);
    auto m = an.mckay_quiver();
    const auto& irr = an.table();
    int k = irr.count();
    std::string fmt = format_of(o);
    if (fmt == "json") {
        auto j = envelope("mckay");
        j["group"] = g.name;
        j["action"] = to_string(a);
        json deg = json::array(), rows = json::array();
        for (int i = 0; i < k; ++i) deg.push_back(irr[i].degree().get_si());
        for (int i = 0; i < k; ++i) {
            json row = json::array();
            for (int c = 0; c < k; ++c) row.push_back(m(i, c).get_si());
            rows.push_back(row);
        }
        j["degrees"] = deg;
        j["matrix"] = rows;
        print_json(j);
    } else if (fmt == "dot") {
        std::cout << "digraph mckay {\n";
        for (int i = 0; i < k; ++i) std::cout << "  " << i << " [label=\"" << i << " (" << irr[i].degree() << ")\"];\n";
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < k; ++c)
                for (long e = 0; e < m(i, c).get_si(); ++e) std::cout << "  " << c << " -> " << i << ";\n";
        std::cout << "}\n";
    } else {
        std::cout << g.name << " (" << to_string(a) << "), " << k << " irreducibles\ndegrees:";
        for (int i = 0; i < k; ++i) std::cout << " " << irr[i].degree();
        std::cout << "\n";
        for (int i = 0; i < k; ++i) {
            for (int c = 0; c < k; ++c) std::cout << (c ? " " : "") << m(i, c);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const Options& o) {
    verify::SuiteOptions opt;
    opt.group_files = o.files;
    if (!o.file.empty()) opt.group_files.push_back(o.file);
    opt.budget = explicit_budget(o);
    auto results = verify::run_suite(o.suite, opt);
    bool ok = true;
    if (format_of(o) == "json") {
        auto j = envelope("verify");
        j["suite"] = o.suite;
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures},
                           {"notes", r.notes}});
            ok = ok && r.passed();
        }
        j["results"] = arr;
        j["passed"] = ok;
        print_json(j);
    } else {
        for (const auto& r : results) {
            std::cout << verify::format_result(r, false) << "\n";
            std::cerr << r.name << ": " << r.seconds << " s\n";
            ok = ok && r.passed();
        }
        std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Du Val singularities: knitting, K-theory and invariant rings"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
        c->add_flag("--json", o.json_alias, "same as --format json");
    };
    auto add_group = [&](CLI::App* c) {
        c->add_option("--builtin", o.builtin_name, "builtin group")->check(CLI::IsMember(builtin_names()));
        c->add_option("--n", o.n, "parameter of the builtin group");
        c->add_option("--file", o.file, "generator file (JSON)");
        c->add_option("--action", o.action, "linear or symplectic")->check(CLI::IsMember({"linear", "symplectic"}));
        c->add_option("--budget", o.budget, "largest group order to enumerate")->check(CLI::PositiveNumber);
    };

    auto* knit = app.add_subcommand("knit", "knit one start vertex, or the whole quiver without --from");
    knit->add_option("--type", o.type, "A<n>, D<n>, E6, E7 or E8")->required();
    knit->add_option("--subset", o.subset, "comma-separated vertices")->required();
    knit->add_option("--from", o.from, "start vertex");
    knit->add_option("--direction", o.direction, "fwd or bwd")->check(CLI::IsMember({"fwd", "bwd"}));
    add_format(knit, {"text", "json", "dot"});

    auto* quiver = app.add_subcommand("quiver", "extended diagram, or the quiver of a vertex subset");
    quiver->add_option("--type", o.type, "A<n>, D<n>, E6, E7 or E8")->required();
    quiver->add_option("--subset", o.subset, "comma-separated vertices");
    add_format(quiver, {"text", "json", "dot"});

    auto* viehweg = app.add_subcommand("viehweg", "class group and G0 of uv = f1^a1 ... ft^at");
    viehweg->add_option("--exponents", o.exponents, "a1,...,at")->required();
    viehweg->add_option("--extra-vars", o.extra_vars, "number of x variables besides u, v (1 gives a surface)");
    viehweg->add_option("--setting", o.setting, "global or local")->check(CLI::IsMember({"global", "local"}));
    add_format(viehweg, {"text", "json"});

    auto* cdv = app.add_subcommand("cdv", "type A compound Du Val singularity with t exceptional curves");
    cdv->add_option("--curves", o.curves, "number of exceptional curves")->required()->check(CLI::NonNegativeNumber);
    add_format(cdv, {"text", "json"});

    auto* preproj = app.add_subcommand("preproj", "deformed preprojective algebra of extended A_n");
    preproj->add_option("--weights", o.weights, "lambda_0,...,lambda_n summing to 0")->required();
    add_format(preproj, {"text", "json"});

    auto* inv = app.add_subcommand("invariant-ring", "G0 and Cl of an invariant ring");
    add_group(inv);
    add_format(inv, {"text", "json"});

    auto* mckay = app.add_subcommand("mckay", "McKay quiver of a finite group");
    add_group(mckay);
    add_format(mckay, {"text", "json", "dot"});

    auto* ver = app.add_subcommand("verify", "replay fixtures and property checks");
    ver->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(verify::suite_names()));
    ver->add_option("--file", o.files, "generator files or directories for the reflection table")->take_all();
    ver->add_option("--budget", o.budget, "group order budget; admits larger symmetric groups")
        ->check(CLI::PositiveNumber);
    add_format(ver, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*knit) return run_knit(o);
        if (*quiver) return run_quiver(o);
        if (*viehweg) return run_viehweg(o);
        if (*cdv) return run_cdv(o);
        if (*preproj) return run_preproj(o);
        if (*inv) return run_invariant_ring(o);
        if (*mckay) return run_mckay(o);
        if (*ver) return run_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
