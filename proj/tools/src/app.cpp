#include "coverlab/cli/app.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coverlab/betti.hpp"
#include "coverlab/cli/report.hpp"
#include "coverlab/cli/verify.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/hilbert.hpp"
#include "coverlab/powers.hpp"

namespace coverlab::cli {

namespace {

using Json = nlohmann::ordered_json;

// A usage problem discovered after parsing (bad ranges, conflicting flags).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FormatFlags {
    bool json = false;
    bool csv = false;
    bool text = false;

    OutputFormat resolve() const {
        if (int(json) + int(csv) + int(text) > 1) throw UsageError("choose at most one of --json, --csv, --text");
        return json ? OutputFormat::Json : csv ? OutputFormat::Csv : OutputFormat::Text;
    }
};

void add_format_flags(CLI::App* app, FormatFlags& f) {
    app->add_flag("--json", f.json, "JSON output");
    app->add_flag("--csv", f.csv, "CSV output");
    app->add_flag("--text", f.text, "plain text output (default)");
}

struct GraphSelect {
    std::optional<std::size_t> crown;
    std::vector<std::size_t> multipartite;
    std::optional<std::size_t> complete;
    std::string edge_file;
    std::string graph_spec;
};

void add_graph_options(CLI::App* app, GraphSelect& g) {
    app->add_option("--crown", g.crown, "crown graph C_{n,n}");
    app->add_option("--multipartite", g.multipartite, "complete multipartite graph, parts like 2,1,1")->delimiter(',');
    app->add_option("--complete", g.complete, "complete graph K_n");
    app->add_option("--edge-file", g.edge_file, "edge-list file");
    app->add_option("--graph", g.graph_spec, "graph spec: triangle, crown:N, complete:N, multipartite:P1,P2,...");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SimpleGraph resolve_graph(const GraphSelect& g) {
    const int chosen = int(g.crown.has_value()) + int(!g.multipartite.empty()) + int(g.complete.has_value()) +
                       int(!g.edge_file.empty()) + int(!g.graph_spec.empty());
    if (chosen != 1)
        throw UsageError("give exactly one of --crown, --multipartite, --complete, --edge-file, --graph");
    if (g.crown) return crown(*g.crown);
    if (!g.multipartite.empty()) return complete_multipartite(g.multipartite);
    if (g.complete) return complete_graph(*g.complete);
    if (!g.graph_spec.empty()) return graph_from_spec(g.graph_spec);
    return from_edge_list(read_file(g.edge_file));
}

enum class PowerKind { Ordinary, Bracket, Symbolic };

struct IdealSelect {
    GraphSelect graph;
    bool edge = false;
    bool symbolic = false;
    bool bracket = false;
    std::optional<int> s;

    PowerKind kind() const {
        if (symbolic && bracket) throw UsageError("--symbolic and --bracket are exclusive");
        return symbolic ? PowerKind::Symbolic : bracket ? PowerKind::Bracket : PowerKind::Ordinary;
    }
};

void add_ideal_options(CLI::App* app, IdealSelect& sel, bool with_power_kind) {
    add_graph_options(app, sel.graph);
    app->add_flag("--edge", sel.edge, "use the edge ideal instead of the cover ideal");
    app->add_option("--s", sel.s, "power exponent");
    if (with_power_kind) {
        app->add_flag("--symbolic", sel.symbolic, "symbolic power");
        app->add_flag("--bracket", sel.bracket, "bracket power");
    }
}

MonomialIdeal base_ideal(const SimpleGraph& g, bool edge) {
    return edge ? edge_ideal(g) : cover_ideal(g).ideal;
}

MonomialIdeal apply_power(const MonomialIdeal& I, PowerKind kind, int s) {
    switch (kind) {
    case PowerKind::Ordinary: return power(I, s);
    case PowerKind::Bracket: return bracket_power(I, s);
    case PowerKind::Symbolic: return symbolic_power(I, s);
    }
    return I;
}

// ----- rendering -------------------------------------------------------------

std::string render_generators(const std::vector<Monomial>& gens, const std::vector<std::string>& labels,
                              std::size_t ambient, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: {
        if (gens.empty()) return "0\n";
        std::string out;
        for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_string(gens[i], labels);
        return out + "\n";
    }
    case OutputFormat::Csv: {
        std::string out = "generator,degree\n";
        for (const auto& g : gens) out += csv_field(to_string(g, labels)) + "," + std::to_string(g.degree()) + "\n";
        return out;
    }
    case OutputFormat::Json: {
        Json doc;
        doc["ambient"] = ambient;
        doc["variables"] = labels;
        Json list = Json::array();
        for (const auto& g : gens) list.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
        doc["generators"] = std::move(list);
        return doc.dump() + "\n";
    }
    }
    return {};
}

std::string render_ideal(const MonomialIdeal& I, const std::vector<std::string>& labels, OutputFormat format) {
    return render_generators({I.generators().begin(), I.generators().end()}, labels, I.ambient(), format);
}

std::string render_graph(const SimpleGraph& g, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: return to_edge_list(g);
    case OutputFormat::Csv: {
        std::string out = "u,v\n";
        for (auto [u, v] : g.edges()) out += csv_field(g.labels()[u]) + "," + csv_field(g.labels()[v]) + "\n";
        return out;
    }
    case OutputFormat::Json: {
        Json doc;
        doc["vertices"] = g.labels();
        Json edges = Json::array();
        for (auto [u, v] : g.edges()) edges.push_back({g.labels()[u], g.labels()[v]});
        doc["edges"] = std::move(edges);
        return doc.dump() + "\n";
    }
    }
    return {};
}

Json integers_json(const std::vector<Integer>& coeffs) {
    Json arr = Json::array();
    // Coefficients outside int64 are emitted as strings.
    for (const auto& c : coeffs) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back(static_cast<long long>(c));
        else
            arr.push_back(c.str());
    }
    return arr;
}

std::string render_series(const IntPolynomial& num, std::size_t den_pow, const std::optional<Integer>& mult,
                          OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: {
        std::string out = "(" + to_string(num) + ") / (1 - t)^" + std::to_string(den_pow) + "\n";
        if (mult) out += "dim " + std::to_string(den_pow) + "\nmultiplicity " + mult->str() + "\n";
        return out;
    }
    case OutputFormat::Csv: {
        std::string out = "degree,coeff\n";
        for (std::size_t k = 0; k < num.coefficients().size(); ++k)
            out += std::to_string(k) + "," + num.coefficients()[k].str() + "\n";
        return out;
    }
    case OutputFormat::Json: {
        Json doc;
        doc["coeffs"] = integers_json(num.coefficients());
        doc["den_pow"] = den_pow;
        if (mult) doc["multiplicity"] = integers_json({*mult})[0];
        return doc.dump() + "\n";
    }
    }
    return {};
}

std::string render_betti(const BettiTable& table, const std::vector<std::string>& labels, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text: {
        std::string out = "i\tdeg\trank\n";
        for (const auto& [key, rank] : table.coarse())
            out += std::to_string(key.first) + "\t" + std::to_string(key.second) + "\t" + std::to_string(rank) + "\n";
        out += "reg " + std::to_string(table.regularity()) + "\n";
        out += "pd " + std::to_string(table.quotient_projective_dimension()) + "\n";
        return out;
    }
    case OutputFormat::Csv: {
        std::string out = "i,b,rank\n";
        for (const auto& e : table.entries())
            out += std::to_string(e.i) + "," + csv_field(to_string(e.b, labels)) + "," + std::to_string(e.rank) + "\n";
        return out;
    }
    case OutputFormat::Json: {
        Json entries = Json::array();
        for (const auto& e : table.entries()) {
            Json rec;
            rec["i"] = e.i;
            rec["b"] = std::vector<Exponent>(e.b.exponents().begin(), e.b.exponents().end());
            rec["rank"] = e.rank;
            entries.push_back(std::move(rec));
        }
        Json doc;
        doc["entries"] = std::move(entries);
        doc["reg"] = table.regularity();
        doc["pd"] = table.quotient_projective_dimension();
        return doc.dump() + "\n";
    }
    }
    return {};
}

std::string render_pairs(const std::vector<std::pair<std::string, Json>>& fields, OutputFormat format) {
    std::string out;
    switch (format) {
    case OutputFormat::Text:
        for (const auto& [k, v] : fields) out += k + " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        return out;
    case OutputFormat::Csv: {
        std::string header, row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            header += (i ? "," : "") + fields[i].first;
            const auto& v = fields[i].second;
            row += (i ? "," : "") + csv_field(v.is_string() ? v.get<std::string>() : v.dump());
        }
        return header + "\n" + row + "\n";
    }
    case OutputFormat::Json: {
        Json doc = Json::object();
        for (const auto& [k, v] : fields) doc[k] = v;
        return doc.dump() + "\n";
    }
    }
    return out;
}

int require_s(const IdealSelect& sel, int fallback) {
    const int s = sel.s.value_or(fallback);
    if (s < 1) throw UsageError("--s must be >= 1");
    return s;
}

// ----- command bodies --------------------------------------------------------

struct Options {
    FormatFlags format;
    std::string out_path;

    std::string graph_kind;
    std::string graph_path;
    std::optional<std::size_t> n;
    std::vector<std::size_t> parts;

    IdealSelect ideal;
    bool reduced = false;
    std::size_t threads = 0;

    std::string scope;
    std::optional<int> s_max;
    std::vector<std::string> graphs;
    bool force = false;
    bool no_timing = false;
};

std::string cmd_graph(const Options& o) {
    const auto fmt = o.format.resolve();
    if (o.graph_kind == "crown") {
        if (!o.n) throw UsageError("graph crown needs --n");
        return render_graph(crown(*o.n), fmt);
    }
    if (o.graph_kind == "complete") {
        if (!o.n) throw UsageError("graph complete needs --n");
        return render_graph(complete_graph(*o.n), fmt);
    }
    if (o.graph_kind == "multipartite") {
        if (o.parts.empty()) throw UsageError("graph multipartite needs --parts");
        return render_graph(complete_multipartite(o.parts), fmt);
    }
    if (o.graph_path.empty()) throw UsageError("graph from-file needs a file path");
    return render_graph(from_edge_list(read_file(o.graph_path)), fmt);
}

std::string cmd_cover_ideal(const Options& o) {
    const auto fmt = o.format.resolve();
    const auto g = resolve_graph(o.ideal.graph);
    // Family cover ideals are listed in notation order; everything else canonically.
    if (g.family()) {
        const auto* c = std::get_if<CrownFamily>(&*g.family());
        if (!c || c->n >= 3) {
            const auto cf = closed_form_cover_generators(*g.family());
            if (cf.ideal == cover_ideal(g).ideal)
                return render_generators(cf.notation_order, g.labels(), g.vertex_count(), fmt);
        }
    }
    return render_ideal(cover_ideal(g).ideal, g.labels(), fmt);
}

std::string cmd_edge_ideal(const Options& o) {
    const auto g = resolve_graph(o.ideal.graph);
    return render_ideal(edge_ideal(g), g.labels(), o.format.resolve());
}

std::string cmd_power(const Options& o, PowerKind kind) {
    const auto fmt = o.format.resolve();
    if (!o.ideal.s) throw UsageError("--s is required");
    const auto g = resolve_graph(o.ideal.graph);
    const int s = *o.ideal.s;
    if (s < (kind == PowerKind::Bracket ? 1 : 0)) throw UsageError("--s out of range");
    return render_ideal(apply_power(base_ideal(g, o.ideal.edge), kind, s), g.labels(), fmt);
}

std::string cmd_hilbert(const Options& o) {
    const auto fmt = o.format.resolve();
    const auto g = resolve_graph(o.ideal.graph);
    const auto I = apply_power(base_ideal(g, o.ideal.edge), o.ideal.kind(), require_s(o.ideal, 1));
    const auto hs = numerator(I);
    if (!o.reduced) return render_series(hs.numerator, hs.den_pow, std::nullopt, fmt);
    const auto r = reduce(hs);
    return render_series(r.h, r.dim, r.multiplicity, fmt);
}

MonomialIdeal nonzero_proper(MonomialIdeal I) {
    if (I.is_zero() || I.is_unit()) throw UsageError("the selected ideal is zero or the unit ideal");
    return I;
}

std::string cmd_betti(const Options& o) {
    const auto fmt = o.format.resolve();
    const auto g = resolve_graph(o.ideal.graph);
    const auto I = nonzero_proper(apply_power(base_ideal(g, o.ideal.edge), o.ideal.kind(), require_s(o.ideal, 1)));
    return render_betti(betti_table(I, {o.threads}), g.labels(), fmt);
}

/// Closed-form regularity for family cover ideals, when one applies.
std::optional<long> closed_form_regularity(const SimpleGraph& g, const IdealSelect& sel, PowerKind kind, int s) {
    if (sel.edge || !g.family()) return std::nullopt;
    if (const auto* c = std::get_if<CrownFamily>(&*g.family())) {
        if (c->n < 3) throw UsageError("--crown: regularity formula needs n>=3 (got n=" + std::to_string(c->n) + ")");
        // bipartite: ordinary and symbolic powers agree
        if (kind == PowerKind::Bracket && s > 1) return std::nullopt;
        return crown_power_regularity(c->n, s);
    }
    const auto& parts = std::get<MultipartiteFamily>(*g.family()).parts;
    if (kind == PowerKind::Symbolic || s == 1) return multipartite_symbolic_regularity(parts, s);
    return std::nullopt;
}

std::string cmd_reg(const Options& o) {
    const auto fmt = o.format.resolve();
    const auto g = resolve_graph(o.ideal.graph);
    const auto kind = o.ideal.kind();
    const int s = require_s(o.ideal, 1);
    const auto expected = closed_form_regularity(g, o.ideal, kind, s);
    const auto I = nonzero_proper(apply_power(base_ideal(g, o.ideal.edge), kind, s));
    std::vector<std::pair<std::string, Json>> fields{{"reg", regularity(I, {o.threads})}};
    if (expected) fields.emplace_back("closed_form", *expected);
    return render_pairs(fields, fmt);
}

std::string cmd_mult(const Options& o) {
    const auto fmt = o.format.resolve();
    const auto g = resolve_graph(o.ideal.graph);
    const int s = require_s(o.ideal, 1);
    const auto kind = o.ideal.edge ? IdealKind::Edge : IdealKind::Cover;
    const auto computed = reduce(numerator(symbolic_power(base_ideal(g, o.ideal.edge), s))).multiplicity;
    const auto formula = symbolic_multiplicity(g, kind, s);
    return render_pairs({{"multiplicity", integers_json({computed})[0]}, {"formula", integers_json({formula})[0]}}, fmt);
}

VerifyScope parse_scope(const std::string& scope) {
    if (scope == "crown") return VerifyScope::Crown;
    if (scope == "multipartite") return VerifyScope::Multipartite;
    if (scope == "multiplicity") return VerifyScope::Multiplicity;
    if (scope == "all" || scope.empty()) return VerifyScope::All;
    throw UsageError("unknown verify scope '" + scope + "'");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coverlab: cover ideals, symbolic powers, Hilbert series and regularity"};
    app.name("coverlab");
    app.require_subcommand(1);
    Options o;

    auto* graph = app.add_subcommand("graph", "build a graph and print its edge list");
    graph->add_option("kind", o.graph_kind, "crown | multipartite | complete | from-file")
        ->required()
        ->check(CLI::IsMember({"crown", "multipartite", "complete", "from-file"}));
    graph->add_option("path", o.graph_path, "edge-list file for from-file");
    graph->add_option("--n", o.n, "vertex parameter n");
    graph->add_option("--parts", o.parts, "part sizes, e.g. 2,1,1")->delimiter(',');

    struct Sub {
        CLI::App* app;
        std::function<std::string()> body;
    };
    std::vector<Sub> subs;
    subs.push_back({graph, [&] { return cmd_graph(o); }});

    auto ideal_cmd = [&](const char* name, const char* help, bool power_kind, std::function<std::string()> body) {
        auto* sub = app.add_subcommand(name, help);
        add_ideal_options(sub, o.ideal, power_kind);
        subs.push_back({sub, std::move(body)});
        return sub;
    };
    ideal_cmd("cover-ideal", "minimal generators of the cover ideal J(G)", false, [&] { return cmd_cover_ideal(o); });
    ideal_cmd("edge-ideal", "minimal generators of the edge ideal I(G)", false, [&] { return cmd_edge_ideal(o); });
    ideal_cmd("power", "ordinary power I^s", false, [&] { return cmd_power(o, PowerKind::Ordinary); });
    ideal_cmd("bracket-power", "bracket power I^[s]", false, [&] { return cmd_power(o, PowerKind::Bracket); });
    ideal_cmd("symbolic-power", "symbolic power I^(s)", false, [&] { return cmd_power(o, PowerKind::Symbolic); });
    ideal_cmd("hilbert", "Hilbert series of S/I", true, [&] { return cmd_hilbert(o); })
        ->add_flag("--reduced", o.reduced, "cancel (1 - t) factors; report dimension and multiplicity");
    ideal_cmd("betti", "multigraded Betti numbers of I", true, [&] { return cmd_betti(o); })
        ->add_option("--threads", o.threads, "worker threads (0: default)");
    ideal_cmd("reg", "Castelnuovo-Mumford regularity of I", true, [&] { return cmd_reg(o); })
        ->add_option("--threads", o.threads, "worker threads (0: default)");
    ideal_cmd("mult", "multiplicity of S/I^(s) and its combinatorial formula", false, [&] { return cmd_mult(o); });

    auto* verify = app.add_subcommand("verify", "run the closed-form verification suite");
    verify->add_option("scope", o.scope, "crown | multipartite | multiplicity | all")
        ->check(CLI::IsMember({"crown", "multipartite", "multiplicity", "all"}));
    verify->add_option("--n", o.n, "crown size");
    verify->add_option("--s-max", o.s_max, "largest exponent");
    verify->add_option("--parts", o.parts, "one multipartite family, e.g. 2,1")->delimiter(',');
    verify->add_option("--graph", o.graphs, "graph spec for multiplicity checks (repeatable)");
    verify->add_flag("--force", o.force, "lift the desk-scale range guards");
    verify->add_flag("--no-timing", o.no_timing, "omit elapsed times");
    bool verify_failed = false;
    subs.push_back({verify, [&] {
                        VerifyOptions vo;
                        vo.scope = parse_scope(o.scope);
                        vo.n = o.n;
                        vo.s_max = o.s_max;
                        if (!o.parts.empty()) vo.parts = o.parts;
                        vo.graphs = o.graphs;
                        vo.force = o.force;
                        vo.timing = !o.no_timing;
                        const auto fmt = o.format.resolve();
                        const auto report = verify_suite(vo);
                        verify_failed = !report.ok();
                        return report_emit(report, fmt);
                    }});

    for (auto& sub : subs) {
        add_format_flags(sub.app, o.format);
        sub.app->add_option("--out", o.out_path, "write output to this file");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "coverlab: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text;
    try {
        for (auto& sub : subs)
            if (sub.app->parsed()) text = sub.body();
    } catch (const UsageError& e) {
        err << "coverlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerifyRangeError& e) {
        err << "coverlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "coverlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EdgeListError& e) {
        err << "coverlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "coverlab: " << e.what() << "\n";
        return kExitComputation;
    }

    if (o.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_path);
        if (!file) {
            err << "coverlab: cannot write '" << o.out_path << "'\n";
            return kExitComputation;
        }
        file << text;
    }
    return verify_failed ? kExitComputation : kExitOk;
}

} // namespace coverlab::cli
