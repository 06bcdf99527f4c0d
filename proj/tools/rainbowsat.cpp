// rainbowsat — command-line front end for the rainbow-cycle coloring engine.
//
// Every library operation is exposed as a subcommand with machine-readable
// output.  Exit codes: 0 for a definitive result (whatever it is), 2 when a
// budget ran out and the answer is UNKNOWN, 1 for usage or input errors.
#include <CLI11.hpp>

#include <rainbow/cnf.hpp>
#include <rainbow/constructions.hpp>
#include <rainbow/interval.hpp>
#include <rainbow/maxfree.hpp>
#include <rainbow/patterns.hpp>
#include <rainbow/peeling.hpp>
#include <rainbow/report.hpp>
#include <rainbow/sat_search.hpp>
#include <rainbow/saturation.hpp>
#include <rainbow/search.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using rainbow::Json;

// ---------------------------------------------------------------------------
// shared option bundles

struct GraphInput {
    std::string fixture;  // core, core+T1, H, F
    std::string graph6;
    std::string path;    // file whose first non-blank line is graph6
    std::string target;  // c4, c5, c6 (constructions; needs n)
    int n = 0;

    // The resolved graph, plus the full construction record when the graph
    // came from a builder (fixture or target) and so has a witness coloring.
    rainbow::Graph graph;
    std::optional<rainbow::ConstructionResult> built;

    void add_options(CLI::App* cmd, bool allow_target = true)
    {
        cmd->add_option("--fixture", fixture,
                        "named fixture: core, core+T1, H, F");
        cmd->add_option("--graph6", graph6, "graph as a graph6 string");
        cmd->add_option("--input", path, "file containing a graph6 line");
        if (allow_target) {
            cmd->add_option("--target", target,
                            "construction family: c4, c5, c6 (with --n)");
            cmd->add_option("--n", n, "vertex count for --target");
        }
    }

    void resolve()
    {
        const int sources = !fixture.empty() + !graph6.empty() + !path.empty() +
                            !target.empty();
        if (sources != 1)
            throw CLI::ValidationError(
                "graph input",
                "need exactly one of --fixture, --graph6, --input, --target");
        if (!fixture.empty()) {
            built = rainbow::build_named_fixture(fixture);
            graph = built->graph;
        } else if (!graph6.empty()) {
            graph = rainbow::parse_graph6(graph6);
        } else if (!path.empty()) {
            std::ifstream in(path);
            if (!in)
                throw CLI::ValidationError("--input", "cannot open " + path);
            std::string line;
            while (std::getline(in, line) && line.empty()) {
            }
            graph = rainbow::parse_graph6(line);
        } else {
            if (n <= 0)
                throw CLI::ValidationError("--target", "requires --n");
            if (target == "c4")
                built = rainbow::build_c4_construction(n);
            else if (target == "c5")
                built = rainbow::build_c5_construction(n);
            else if (target == "c6")
                built = rainbow::build_c6_construction(n);
            else
                throw CLI::ValidationError("--target",
                                           "expected c4, c5, or c6");
            graph = built->graph;
        }
    }
};

struct BudgetInput {
    std::uint64_t max_nodes = rainbow::SearchBudget{}.max_nodes;
    double max_seconds = rainbow::SearchBudget{}.max_seconds;

    void add_options(CLI::App* cmd)
    {
        cmd->add_option("--max-nodes", max_nodes,
                        "search node / conflict cap per decision")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-seconds", max_seconds,
                        "wall-time cap per decision, seconds")
            ->check(CLI::PositiveNumber);
    }

    rainbow::SearchBudget budget() const { return {max_nodes, max_seconds}; }
};

struct EngineInput {
    std::string engine = "clauses";

    void add_options(CLI::App* cmd)
    {
        cmd->add_option("--engine", engine,
                        "decision engine: clauses (compiled SAT) or backtracking")
            ->check(CLI::IsMember({"clauses", "backtracking"}));
    }

    rainbow::DecisionEngine value() const
    {
        return engine == "backtracking" ? rainbow::DecisionEngine::BACKTRACKING
                                        : rainbow::DecisionEngine::CLAUSES;
    }
};

struct OutputSink {
    std::string path;
    bool deterministic = false;

    void add_options(CLI::App* cmd)
    {
        cmd->add_option("--output,-o", path, "write result here instead of stdout");
        cmd->add_flag("--deterministic", deterministic,
                      "omit timing fields so identical runs emit identical bytes");
    }

    rainbow::ReportOptions report_options() const { return {deterministic}; }

    void write(const std::string& text) const
    {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw CLI::ValidationError("--output", "cannot open " + path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }

    void write_json(const Json& j) const { write(j.dump(2)); }
};

// Exit code for a run whose verdict may be budget-limited.
constexpr int kExitDefinitive = 0;
constexpr int kExitUnknown = 2;

int definitive_unless(bool unknown)
{
    return unknown ? kExitUnknown : kExitDefinitive;
}

// Reads a coloring from a file or inline string: accepts a JSON array, a JSON
// object with a "colors" array, or whitespace-separated integers.
rainbow::EdgeColoring parse_coloring_text(const std::string& text)
{
    rainbow::EdgeColoring coloring;
    const auto parsed = Json::parse(text, nullptr, false);
    if (!parsed.is_discarded()) {
        const Json* array = nullptr;
        if (parsed.is_array())
            array = &parsed;
        else if (parsed.is_object() && parsed.contains("colors"))
            array = &parsed.at("colors");
        if (array == nullptr || !array->is_array())
            throw CLI::ValidationError("--coloring",
                                       "JSON must be an array or {\"colors\": [...]}");
        for (const auto& v : *array) coloring.colors.push_back(v.get<int>());
        return coloring;
    }
    std::istringstream in(text);
    int c = 0;
    while (in >> c) coloring.colors.push_back(c);
    if (!in.eof())
        throw CLI::ValidationError("--coloring", "expected integers or JSON");
    return coloring;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("file", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ---------------------------------------------------------------------------
// subcommand bodies (each returns the process exit code)

int run_construct(GraphInput& gi, const OutputSink& sink, const std::string& format)
{
    gi.resolve();
    if (!gi.built)
        throw CLI::ValidationError("construct",
                                   "needs --target or --fixture (not a raw graph)");
    if (format == "graph6") {
        sink.write(rainbow::to_graph6(gi.graph));
    } else if (format == "dot") {
        sink.write(rainbow::to_dot(gi.graph));
    } else {
        sink.write_json(rainbow::to_json(*gi.built, sink.report_options()));
    }
    return kExitDefinitive;
}

int run_verify_coloring(GraphInput& gi, const OutputSink& sink, int k,
                        const std::string& coloring_file,
                        const std::string& coloring_inline, bool use_builtin)
{
    gi.resolve();
    rainbow::EdgeColoring coloring;
    if (use_builtin) {
        if (!gi.built || !gi.built->witness)
            throw CLI::ValidationError("--builtin-witness",
                                       "this graph has no built-in coloring");
        coloring = *gi.built->witness;
    } else if (!coloring_file.empty()) {
        coloring = parse_coloring_text(slurp(coloring_file));
    } else if (!coloring_inline.empty()) {
        coloring = parse_coloring_text(coloring_inline);
    } else {
        throw CLI::ValidationError(
            "verify-coloring",
            "need --coloring FILE, --coloring-json STR, or --builtin-witness");
    }
    if (static_cast<int>(coloring.colors.size()) != gi.graph.edge_count())
        throw CLI::ValidationError(
            "verify-coloring",
            "coloring has " + std::to_string(coloring.colors.size()) +
                " entries for " + std::to_string(gi.graph.edge_count()) + " edges");

    const auto improper = rainbow::improper_pairs(gi.graph, coloring);
    const auto check = rainbow::is_rainbow_free(gi.graph, coloring, k);
    Json j;
    j["k"] = k;
    j["proper"] = improper.empty();
    Json bad = Json::array();
    for (const auto& [e, f] : improper)
        bad.push_back(Json::array({rainbow::to_json(e), rainbow::to_json(f)}));
    j["improper_pairs"] = bad;
    j["rainbow_free"] = check.rainbow_free;
    j["rainbow_violations"] = rainbow::to_json(check)["rainbow_cycles"];
    j["verified"] = improper.empty() && check.rainbow_free;
    sink.write_json(j);
    return kExitDefinitive;
}

int run_color(GraphInput& gi, const OutputSink& sink, const BudgetInput& bi,
              const EngineInput& ei, int k, int palette, int exact_colors,
              bool peel)
{
    gi.resolve();
    rainbow::FeasibilityVerdict verdict;
    Json extra;
    if (exact_colors > 0) {
        verdict = rainbow::sat_exactly_colors(gi.graph, k, exact_colors,
                                              bi.budget());
        extra["exact_colors"] = exact_colors;
    } else {
        int cap = palette > 0 ? palette : gi.graph.edge_count();
        if (peel) {
            const auto ceiling = rainbow::palette_ceiling_by_peeling(gi.graph, k);
            cap = std::min(cap, ceiling.bound);
            extra["palette_ceiling"] = rainbow::to_json(ceiling);
        }
        int max_degree = 0;
        for (int v = 0; v < gi.graph.vertex_count(); ++v)
            max_degree = std::max(max_degree, gi.graph.degree(v));
        cap = std::max(cap, max_degree);
        if (ei.value() == rainbow::DecisionEngine::BACKTRACKING)
            verdict = rainbow::find_rainbow_free_coloring(gi.graph, k, bi.budget());
        else
            verdict = rainbow::sat_rainbow_free(gi.graph, k, cap, bi.budget());
        extra["palette"] = cap;
    }
    Json j = rainbow::to_json(verdict, sink.report_options());
    j["k"] = k;
    for (auto& [key, value] : extra.items()) j[key] = value;
    sink.write_json(j);
    return definitive_unless(verdict.status == rainbow::Feasibility::UNKNOWN);
}

int run_color_interval(GraphInput& gi, const OutputSink& sink,
                       const BudgetInput& bi, const EngineInput& ei, int k,
                       int c_max, int threads)
{
    gi.resolve();
    if (c_max <= 0) c_max = gi.graph.edge_count();
    const auto result = rainbow::color_interval(gi.graph, k, c_max, bi.budget(),
                                                ei.value(), threads);
    sink.write_json(rainbow::to_json(result, sink.report_options()));
    return definitive_unless(!result.unknown().empty());
}

int run_check_saturated(GraphInput& gi, const OutputSink& sink,
                        const BudgetInput& bi, const EngineInput& ei, int k,
                        int threads, bool peel, bool no_shortcut)
{
    gi.resolve();
    rainbow::SaturationOptions options;
    options.engine = ei.value();
    options.pattern_shortcut = !no_shortcut;
    options.palette_policy = peel ? rainbow::PalettePolicy::PEELING
                                  : rainbow::PalettePolicy::EDGE_COUNT;
    options.threads = threads;
    const auto report =
        rainbow::check_rainbow_saturated(gi.graph, k, bi.budget(), options);
    sink.write_json(rainbow::to_json(report, sink.report_options()));
    return definitive_unless(report.status() ==
                             rainbow::SaturationStatus::UNDECIDED);
}

int run_sat_star(const OutputSink& sink, const BudgetInput& bi,
                 const EngineInput& ei, int n, int k, int threads)
{
    rainbow::SaturationOptions options;
    options.engine = ei.value();
    options.threads = threads;
    const auto result = rainbow::sat_star(n, k, bi.budget(), options);
    sink.write_json(rainbow::to_json(result, sink.report_options()));
    return definitive_unless(!result.value_certain || !result.witness_list_complete);
}

int run_patterns(GraphInput& gi, const OutputSink& sink, int apex)
{
    gi.resolve();
    Json j;
    j["probes"] = rainbow::to_json(rainbow::structure_probes(gi.graph));
    Json per_apex = Json::array();
    const int lo = apex >= 0 ? apex : 0;
    const int hi = apex >= 0 ? apex + 1 : gi.graph.vertex_count();
    for (int v = lo; v < hi; ++v) {
        const auto hits = rainbow::detect_forbidden_patterns(gi.graph, v);
        Json entry;
        entry["apex"] = v;
        Json list = Json::array();
        for (const auto& hit : hits) list.push_back(rainbow::to_json(hit));
        entry["hits"] = list;
        per_apex.push_back(entry);
    }
    j["apexes"] = per_apex;
    sink.write_json(j);
    return kExitDefinitive;
}

int run_max_free(GraphInput& gi, const OutputSink& sink, int k,
                 const std::string& format)
{
    gi.resolve();
    const auto result = rainbow::max_cycle_free_subgraph(gi.graph, k);
    if (format == "graph6") {
        sink.write(rainbow::to_graph6(result.witness));
    } else if (format == "dot") {
        sink.write(rainbow::to_dot(result.witness));
    } else {
        sink.write_json(rainbow::to_json(result));
    }
    return kExitDefinitive;
}

int run_export_cnf(GraphInput& gi, const OutputSink& sink, int k, int colors,
                   bool exact, const std::string& var_map_path)
{
    gi.resolve();
    if (colors <= 0)
        throw CLI::ValidationError("--colors", "must be at least 1");
    const rainbow::CnfFormula formula =
        exact ? rainbow::encode_exact_colors(gi.graph, k, colors)
              : rainbow::encode_feasibility(gi.graph, k, colors);
    sink.write(rainbow::write_dimacs(formula));
    if (!var_map_path.empty()) {
        std::ofstream out(var_map_path);
        if (!out)
            throw CLI::ValidationError("--var-map",
                                       "cannot open " + var_map_path);
        out << rainbow::variable_map_json(gi.graph, formula).dump(2) << '\n';
    }
    return kExitDefinitive;
}

int run_decode_model(GraphInput& gi, const OutputSink& sink, int k, int colors,
                     bool exact, const std::string& model_path)
{
    gi.resolve();
    if (colors <= 0)
        throw CLI::ValidationError("--colors", "must be at least 1");
    const rainbow::CnfFormula formula =
        exact ? rainbow::encode_exact_colors(gi.graph, k, colors)
              : rainbow::encode_feasibility(gi.graph, k, colors);
    const auto literals = rainbow::parse_model_literals(slurp(model_path));
    const auto coloring = rainbow::decode_assignment(formula, literals);

    const auto improper = rainbow::improper_pairs(gi.graph, coloring);
    const auto check = rainbow::is_rainbow_free(gi.graph, coloring, k);
    Json j;
    j["k"] = k;
    j["colors"] = colors;
    j["exact"] = exact;
    j["coloring"] = rainbow::to_json(coloring);
    j["proper"] = improper.empty();
    j["rainbow_free"] = check.rainbow_free;
    j["verified"] = improper.empty() && check.rainbow_free;
    sink.write_json(j);
    return kExitDefinitive;
}

int run_audit(GraphInput& gi, const OutputSink& sink)
{
    gi.resolve();
    const auto audit = rainbow::audit_structural_conditions(gi.graph);
    Json j = rainbow::to_json(audit);
    j["probes"] = rainbow::to_json(rainbow::structure_probes(gi.graph));
    sink.write_json(j);
    return kExitDefinitive;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "rainbow-cycle coloring engine: constructions, feasibility, saturation"};
    app.require_subcommand(1);

    // construct ------------------------------------------------------------
    auto* construct = app.add_subcommand(
        "construct", "build an extremal construction or named fixture");
    GraphInput construct_gi;
    OutputSink construct_sink;
    std::string construct_format = "json";
    construct_gi.add_options(construct);
    construct_sink.add_options(construct);
    construct->add_option("--format", construct_format, "json, graph6, or dot")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));

    // verify-coloring --------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify-coloring", "check a proper coloring for rainbow k-cycles");
    GraphInput verify_gi;
    OutputSink verify_sink;
    int verify_k = 6;
    std::string verify_file, verify_inline;
    bool verify_builtin = false;
    verify_gi.add_options(verify);
    verify_sink.add_options(verify);
    verify->add_option("--k", verify_k, "cycle length")->required();
    verify->add_option("--coloring", verify_file,
                       "file with edge colors (JSON array or integers)");
    verify->add_option("--coloring-json", verify_inline,
                       "inline edge colors (JSON array or integers)");
    verify->add_flag("--builtin-witness", verify_builtin,
                     "verify the construction's own emitted coloring");

    // color ------------------------------------------------------------------
    auto* color = app.add_subcommand(
        "color", "decide whether a rainbow-free proper coloring exists");
    GraphInput color_gi;
    OutputSink color_sink;
    BudgetInput color_bi;
    EngineInput color_ei;
    int color_k = 6, color_palette = 0, color_exact = 0;
    bool color_peel = false;
    color_gi.add_options(color);
    color_sink.add_options(color);
    color_bi.add_options(color);
    color_ei.add_options(color);
    color->add_option("--k", color_k, "cycle length")->required();
    color->add_option("--palette", color_palette,
                      "palette size cap (default: edge count)")
        ->check(CLI::PositiveNumber);
    color->add_option("--colors", color_exact,
                      "require exactly this many colors, all used")
        ->check(CLI::PositiveNumber);
    color->add_flag("--peel", color_peel,
                    "cap the palette by the cycle-free-subgraph ceiling");

    // color-interval -----------------------------------------------------------
    auto* interval = app.add_subcommand(
        "color-interval", "classify every color count in [max degree, c-max]");
    GraphInput interval_gi;
    OutputSink interval_sink;
    BudgetInput interval_bi;
    EngineInput interval_ei;
    int interval_k = 6, interval_cmax = 0, interval_threads = 1;
    interval_gi.add_options(interval);
    interval_sink.add_options(interval);
    interval_bi.add_options(interval);
    interval_ei.add_options(interval);
    interval->add_option("--k", interval_k, "cycle length")->required();
    interval->add_option("--c-max", interval_cmax,
                         "largest color count to test (default: edge count)");
    interval->add_option("--threads", interval_threads, "worker threads")
        ->check(CLI::PositiveNumber);

    // check-saturated ----------------------------------------------------------
    auto* saturated = app.add_subcommand(
        "check-saturated", "decide rainbow saturation (base + every non-edge)");
    GraphInput saturated_gi;
    OutputSink saturated_sink;
    BudgetInput saturated_bi;
    EngineInput saturated_ei;
    int saturated_k = 6, saturated_threads = 1;
    bool saturated_peel = false, saturated_no_shortcut = false;
    saturated_gi.add_options(saturated);
    saturated_sink.add_options(saturated);
    saturated_bi.add_options(saturated);
    saturated_ei.add_options(saturated);
    saturated->add_option("--k", saturated_k, "cycle length")->required();
    saturated->add_option("--threads", saturated_threads, "worker threads")
        ->check(CLI::PositiveNumber);
    saturated->add_flag("--peel", saturated_peel,
                        "use the peeling palette ceiling per instance");
    saturated->add_flag("--no-pattern-shortcut", saturated_no_shortcut,
                        "disable the k=4 forbidden-pattern fast path");

    // sat-star -----------------------------------------------------------------
    auto* star = app.add_subcommand(
        "sat-star", "exact minimum saturated edge count over all n-vertex graphs");
    OutputSink star_sink;
    BudgetInput star_bi;
    EngineInput star_ei;
    int star_n = 0, star_k = 4, star_threads = 1;
    star_sink.add_options(star);
    star_bi.add_options(star);
    star_ei.add_options(star);
    star->add_option("--n", star_n, "vertex count (1..8)")->required();
    star->add_option("--k", star_k, "cycle length")->required();
    star->add_option("--threads", star_threads, "worker threads")
        ->check(CLI::PositiveNumber);

    // patterns -------------------------------------------------------------
    auto* patterns = app.add_subcommand(
        "patterns", "scan vertex neighborhoods for the forbidden configurations");
    GraphInput patterns_gi;
    OutputSink patterns_sink;
    int patterns_apex = -1;
    patterns_gi.add_options(patterns);
    patterns_sink.add_options(patterns);
    patterns->add_option("--apex", patterns_apex,
                         "restrict the scan to this vertex");

    // max-free -------------------------------------------------------------
    auto* maxfree = app.add_subcommand(
        "max-free", "maximum k-cycle-free subgraph by branch and bound");
    GraphInput maxfree_gi;
    OutputSink maxfree_sink;
    int maxfree_k = 6;
    std::string maxfree_format = "json";
    maxfree_gi.add_options(maxfree);
    maxfree_sink.add_options(maxfree);
    maxfree->add_option("--k", maxfree_k, "cycle length")->required();
    maxfree->add_option("--format", maxfree_format,
                        "json, graph6, or dot (witness subgraph)")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));

    // export-cnf -------------------------------------------------------------
    auto* exportcnf = app.add_subcommand(
        "export-cnf", "write the coloring instance as DIMACS CNF");
    GraphInput exportcnf_gi;
    OutputSink exportcnf_sink;
    int exportcnf_k = 6, exportcnf_colors = 0;
    bool exportcnf_exact = false;
    std::string exportcnf_varmap;
    exportcnf_gi.add_options(exportcnf);
    exportcnf_sink.add_options(exportcnf);
    exportcnf->add_option("--k", exportcnf_k, "cycle length")->required();
    exportcnf->add_option("--colors", exportcnf_colors, "palette size")
        ->required();
    exportcnf->add_flag("--exact", exportcnf_exact,
                        "exact color count (adds surjectivity + at-most-one)");
    exportcnf->add_option("--var-map", exportcnf_varmap,
                          "also write a JSON variable-to-(edge,color) map here");

    // decode-model -----------------------------------------------------------
    auto* decode = app.add_subcommand(
        "decode-model", "turn a SAT solver model back into a verified coloring");
    GraphInput decode_gi;
    OutputSink decode_sink;
    int decode_k = 6, decode_colors = 0;
    bool decode_exact = false;
    std::string decode_model_path;
    decode_gi.add_options(decode);
    decode_sink.add_options(decode);
    decode->add_option("--k", decode_k, "cycle length")->required();
    decode->add_option("--colors", decode_colors,
                       "palette size the formula was built with")
        ->required();
    decode->add_flag("--exact", decode_exact,
                     "formula was the exact-color-count encoding");
    decode->add_option("--model", decode_model_path,
                       "solver output: 'v' lines or bare literals")
        ->required();

    // audit ------------------------------------------------------------------
    auto* audit = app.add_subcommand(
        "audit", "structural necessary conditions for saturated graphs");
    GraphInput audit_gi;
    OutputSink audit_sink;
    audit_gi.add_options(audit);
    audit_sink.add_options(audit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help / the error message
        return code == 0 ? 0 : 1;
    }

    try {
        if (construct->parsed())
            return run_construct(construct_gi, construct_sink, construct_format);
        if (verify->parsed())
            return run_verify_coloring(verify_gi, verify_sink, verify_k,
                                       verify_file, verify_inline,
                                       verify_builtin);
        if (color->parsed())
            return run_color(color_gi, color_sink, color_bi, color_ei, color_k,
                             color_palette, color_exact, color_peel);
        if (interval->parsed())
            return run_color_interval(interval_gi, interval_sink, interval_bi,
                                      interval_ei, interval_k, interval_cmax,
                                      interval_threads);
        if (saturated->parsed())
            return run_check_saturated(saturated_gi, saturated_sink,
                                       saturated_bi, saturated_ei, saturated_k,
                                       saturated_threads, saturated_peel,
                                       saturated_no_shortcut);
        if (star->parsed())
            return run_sat_star(star_sink, star_bi, star_ei, star_n, star_k,
                                star_threads);
        if (patterns->parsed())
            return run_patterns(patterns_gi, patterns_sink, patterns_apex);
        if (maxfree->parsed())
            return run_max_free(maxfree_gi, maxfree_sink, maxfree_k,
                                maxfree_format);
        if (exportcnf->parsed())
            return run_export_cnf(exportcnf_gi, exportcnf_sink, exportcnf_k,
                                  exportcnf_colors, exportcnf_exact,
                                  exportcnf_varmap);
        if (decode->parsed())
            return run_decode_model(decode_gi, decode_sink, decode_k,
                                    decode_colors, decode_exact,
                                    decode_model_path);
        if (audit->parsed()) return run_audit(audit_gi, audit_sink);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
