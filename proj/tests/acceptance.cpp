// Acceptance suite: one pass/fail line per pinned criterion, exit status 0
// only if every criterion holds.  Each criterion re-derives its numbers from
// the library at run time and compares against the frozen reference values;
// independent brute-force oracles double-check every witness that matters.
#include <rainbow/cnf.hpp>
#include <rainbow/coloring.hpp>
#include <rainbow/constructions.hpp>
#include <rainbow/cycles.hpp>
#include <rainbow/generate.hpp>
#include <rainbow/graph.hpp>
#include <rainbow/interval.hpp>
#include <rainbow/maxfree.hpp>
#include <rainbow/sat_search.hpp>
#include <rainbow/sat_solver.hpp>
#include <rainbow/saturation.hpp>
#include <rainbow/search.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rainbow;

namespace {

struct CriterionLine {
    int id = 0;
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string edge_list(const std::vector<Edge>& edges)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            out << ",";
        out << edges[i].first << "-" << edges[i].second;
    }
    return out.str();
}

// Library verification plus the independent direct check from the oracles.
bool witness_verifies_twice(const Graph& g, const EdgeColoring& coloring, int k)
{
    return verifies(g, coloring, k) && oracle::coloring_ok(g, coloring, k);
}

// --------------------------------------------------------------------------
// 1. Emitted witness colorings verify, fast.

CriterionLine criterion_witnesses()
{
    CriterionLine line{1, true, ""};
    const auto start = std::chrono::steady_clock::now();
    int verified = 0;
    auto take = [&](const ConstructionResult& result, int k) {
        if (!result.witness.has_value() ||
            !witness_verifies_twice(result.graph, *result.witness, k))
            line.pass = false;
        else
            ++verified;
    };
    for (int n = 7; n <= 13; ++n)
        take(build_c4_construction(n), 4);
    for (int n = 8; n <= 13; ++n)
        take(build_c5_construction(n), 5);
    take(build_c6_construction(14), 6);
    const double secs = seconds_since(start);
    if (secs >= 1.0)
        line.pass = false;
    std::ostringstream out;
    out << verified << "/14 emitted colorings proper and rainbow-free (4-cycle n=7..13, "
        << "5-cycle n=8..13, 6-cycle n=14) in " << secs << "s (tolerance < 1 s)";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 2. Closed-form edge counts.

CriterionLine criterion_edge_formulas()
{
    CriterionLine line{2, true, ""};
    int checked = 0;
    for (int n = 8; n <= 60; ++n) {
        if (build_c5_construction(n).graph.edge_count() != 5 * n / 2 - 4)
            line.pass = false;
        ++checked;
    }
    for (int n = 7; n <= 60; ++n) {
        const int m = build_c4_construction(n).graph.edge_count();
        if (m != 2 * (n - 1) - (n - 1) / 6)
            line.pass = false;
        if (6 * m > 11 * n + 12)  // m <= (11/6)n + 2
            line.pass = false;
        ++checked;
    }
    for (int n = 14; n <= 59; n += 3) {
        if (build_c6_construction(n).graph.edge_count() != 24 + 7 * (n - 8) / 3)
            line.pass = false;
        ++checked;
    }
    std::ostringstream out;
    out << checked
        << " sizes match exactly: 5-cycle floor(5n/2)-4 on [8,60], 4-cycle "
           "2(n-1)-floor((n-1)/6) within (11/6)n+2 on [7,60], 6-cycle 24+7(n-8)/3 "
           "for n = 2 mod 3 on [14,59]";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 3. The constructions are saturated at desk scale, no unknowns allowed.

CriterionLine criterion_construction_saturation()
{
    CriterionLine line{3, true, ""};
    int saturated = 0;
    int pattern_certified = 0;
    int engine_decided = 0;
    auto sweep = [&](const Graph& g, int k) {
        const auto report = check_rainbow_saturated(g, k);
        if (report.status() != SaturationStatus::SATURATED ||
            !report.unknown_non_edges().empty()) {
            line.pass = false;
            return;
        }
        ++saturated;
        for (const auto& ne : report.non_edges)
            ne.certificate.has_value() ? ++pattern_certified : ++engine_decided;
    };
    for (int n = 7; n <= 12; ++n)
        sweep(build_c4_construction(n).graph, 4);
    for (int n = 9; n <= 12; ++n)
        sweep(build_c5_construction(n).graph, 5);
    std::ostringstream out;
    out << saturated << "/10 graphs saturated (4-cycle n=7..12, 5-cycle n=9..12); "
        << "blocked non-edges: " << pattern_certified << " pattern-certified, "
        << engine_decided << " exhausted, 0 unknown";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 4. The four forbidden-configuration traps, by two complete engines.

CriterionLine criterion_traps()
{
    CriterionLine line{4, true, ""};
    SaturationOptions direct;
    direct.engine = DecisionEngine::BACKTRACKING;
    int confirmed = 0;
    for (const auto& options : {SaturationOptions{}, direct}) {
        for (const auto& check : verify_pattern_traps({}, options)) {
            if (check.confirmed())
                ++confirmed;
            else
                line.pass = false;
        }
    }
    std::ostringstream out;
    out << confirmed
        << "/8 trap fixtures confirmed (4 configurations x clause-learning and "
           "backtracking engines): whole graph uncolorable, every single-edge "
           "removal colorable";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 5. Exact color-count intervals on the three fixtures.

CriterionLine criterion_intervals()
{
    CriterionLine line{5, true, ""};
    const auto core = color_interval(build_named_fixture("core").graph, 6, 15);
    const bool core_ok = core.feasible() == std::vector<int>{6, 7} &&
                         core.unknown().empty() && core.palette_floor == 6;

    const auto extended =
        color_interval(build_named_fixture("core+T1").graph, 6, 14);
    const bool extended_ok = extended.max_feasible().has_value() &&
                             *extended.max_feasible() == 9 &&
                             extended.unknown().empty();

    const auto h = color_interval(build_named_fixture("H").graph, 6, 13);
    const bool h_ok = h.feasible() == std::vector<int>{10, 11, 12} &&
                      h.infeasible() == std::vector<int>{13} && h.unknown().empty();

    line.pass = core_ok && extended_ok && h_ok;
    std::ostringstream out;
    out << "core usable color counts {6,7} up to 15 "
        << (core_ok ? "confirmed" : "WRONG") << "; core+T1 maximum 9 up to 14 "
        << (extended_ok ? "confirmed" : "WRONG") << "; H supports {10,11,12} and "
        << "not 13 " << (h_ok ? "confirmed" : "WRONG");
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 6. Maximum 6-cycle-free subgraph of the core.

CriterionLine criterion_max_free()
{
    CriterionLine line{6, true, ""};
    const Graph core = build_named_fixture("core").graph;
    const auto result = max_cycle_free_subgraph(core, 6);
    bool witness_ok = result.witness.edge_count() == result.best_count &&
                      enumerate_cycles(result.witness, 6).empty() &&
                      oracle::cycles(result.witness, 6).empty();
    const std::set<Edge> host(core.edges().begin(), core.edges().end());
    for (const Edge& e : result.witness.edges())
        witness_ok &= host.count(e) == 1;
    line.pass = result.best_count == 15 && witness_ok;
    std::ostringstream out;
    out << "largest 6-cycle-free subgraph of the core has " << result.best_count
        << " of 24 edges (reference 15), witness re-verified by two cycle "
           "enumerators";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 7. Edge additions to H and F.

CriterionLine criterion_edge_additions()
{
    CriterionLine line{7, true, ""};

    auto sweep = [&](const Graph& g, std::vector<Edge>& feasible,
                     std::vector<Edge>& unknown, bool& witnesses_ok) {
        int infeasible = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                if (g.adjacent(u, v))
                    continue;
                const Graph augmented = g.with_edge(u, v);
                const auto verdict =
                    sat_rainbow_free(augmented, 6, augmented.edge_count());
                if (verdict.status == Feasibility::FEASIBLE) {
                    feasible.push_back({u, v});
                    witnesses_ok &= verdict.witness.has_value() &&
                                    witness_verifies_twice(augmented,
                                                           *verdict.witness, 6);
                } else if (verdict.status == Feasibility::UNKNOWN) {
                    unknown.push_back({u, v});
                } else {
                    ++infeasible;
                }
            }
        return infeasible;
    };

    std::vector<Edge> h_feasible, h_unknown, f_feasible, f_unknown;
    bool witnesses_ok = true;
    const int h_infeasible =
        sweep(build_named_fixture("H").graph, h_feasible, h_unknown, witnesses_ok);
    const int f_infeasible =
        sweep(build_named_fixture("F").graph, f_feasible, f_unknown, witnesses_ok);

    const std::vector<Edge> expected_f{{1, 7}, {3, 5}, {4, 6}};
    const bool h_ok = h_infeasible == 53 && h_feasible.empty() && h_unknown.empty();
    const bool f_ok = f_infeasible == 30 && f_feasible == expected_f &&
                      f_unknown.empty() && witnesses_ok;
    line.pass = h_ok && f_ok;

    std::ostringstream out;
    out << "H: " << h_infeasible << "/53 additions uncolorable";
    if (!h_feasible.empty())
        out << " (UNEXPECTED colorable: " << edge_list(h_feasible) << ")";
    if (!h_unknown.empty())
        out << " (unknown: " << edge_list(h_unknown) << ")";
    out << "; F: " << f_infeasible << "/33 uncolorable, colorable additions {"
        << edge_list(f_feasible)
        << "} with doubly-verified witnesses (reference: exactly 1-7,3-5,4-6)";
    if (!f_unknown.empty())
        out << " (unknown: " << edge_list(f_unknown) << ")";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 8. Exact minimum saturated sizes on small vertex counts.

CriterionLine criterion_sat_star()
{
    CriterionLine line{8, true, ""};

    // Independent ground truth at n = 4: all 64 labeled graphs, saturation
    // decided purely by the enumeration oracle.
    int brute_minimum = 1 << 10;
    int brute_minimum_count = 0;
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        std::vector<Edge> edges;
        int id = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++id)
                if (bits >> id & 1)
                    edges.push_back({u, v});
        const Graph g(4, edges);
        if (!oracle::rainbow_free_exists(g, 4))
            continue;
        bool blocked_everywhere = true;
        for (int u = 0; u < 4 && blocked_everywhere; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (!g.adjacent(u, v) &&
                    oracle::rainbow_free_exists(g.with_edge(u, v), 4)) {
                    blocked_everywhere = false;
                    break;
                }
        if (!blocked_everywhere)
            continue;
        const int m = g.edge_count();
        if (m < brute_minimum) {
            brute_minimum = m;
            brute_minimum_count = 1;
        } else if (m == brute_minimum) {
            ++brute_minimum_count;
        }
    }

    const auto r4 = sat_star(4, 4);
    const bool four_ok = r4.value.has_value() && *r4.value == 6 &&
                         brute_minimum == 6 && brute_minimum_count == 1 &&
                         r4.value_certain && r4.witness_list_complete &&
                         r4.witnesses.size() == 1 &&
                         isomorphic(r4.witnesses.front(), parse_graph6("C~"));

    const auto r5 = sat_star(5, 4);
    const auto r6 = sat_star(6, 4);
    const bool five_ok = r5.value.has_value() && *r5.value >= 5 && *r5.value <= 8 &&
                         r5.value_certain;
    const bool six_ok = r6.value.has_value() && *r6.value >= 6 && *r6.value <= 10 &&
                        r6.value_certain;

    bool audits_ok = true;
    for (const auto* result : {&r4, &r5, &r6})
        for (const Graph& w : result->witnesses)
            audits_ok &= audit_structural_conditions(w).passed();

    line.pass = four_ok && five_ok && six_ok && audits_ok;
    std::ostringstream out;
    out << "minimum saturated size: n=4 -> " << (r4.value ? *r4.value : -1)
        << " with unique witness K4 (independent 64-graph brute force agrees: "
        << "min " << brute_minimum << ", " << brute_minimum_count
        << " labeled witness); n=5 -> " << (r5.value ? *r5.value : -1)
        << ", n=6 -> " << (r6.value ? *r6.value : -1)
        << " (both inside [n, 2n-2]); all "
        << r4.witnesses.size() + r5.witnesses.size() + r6.witnesses.size()
        << " extremal witnesses pass the structural audit";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 9. Cross-engine equivalence corpus.

CriterionLine criterion_cross_engine()
{
    CriterionLine line{9, true, ""};
    std::mt19937 rng(20260819u);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g(0, {});
        if (trial % 2 == 0) {
            std::uniform_int_distribution<int> nd(4, 8);
            const int n = nd(rng);
            std::uniform_int_distribution<int> md(0, std::min(8, n * (n - 1) / 2));
            g = oracle::random_graph(rng, n, md(rng));
        } else {
            std::uniform_int_distribution<int> nd(4, 5);
            const int n = nd(rng);
            std::uniform_int_distribution<int> md(6, std::min(8, n * (n - 1) / 2));
            g = oracle::random_graph(rng, n, md(rng));
        }
        const int k = 4 + trial % 3;

        const bool expected = oracle::rainbow_free_exists(g, k);

        const auto direct = find_rainbow_free_coloring(g, k);
        bool agree = direct.status != Feasibility::UNKNOWN &&
                     (direct.status == Feasibility::FEASIBLE) == expected;
        if (expected && agree)
            agree = witness_verifies_twice(g, *direct.witness, k);

        // DIMACS path: encode, serialize, re-parse, solve, decode, verify.
        const auto formula = encode_feasibility(g, k, g.edge_count());
        auto reparsed = parse_dimacs(write_dimacs(formula));
        reparsed.edge_count = formula.edge_count;
        reparsed.palette = formula.palette;
        const auto outcome = sat::solve_clauses(reparsed.num_vars, reparsed.clauses);
        if (outcome.status == sat::SolveStatus::UNKNOWN ||
            (outcome.status == sat::SolveStatus::SAT) != expected)
            agree = false;
        if (agree && outcome.status == sat::SolveStatus::SAT) {
            const auto coloring = decode_assignment(reparsed, outcome.model);
            agree = witness_verifies_twice(g, coloring, k);
        }

        if (!agree) {
            line.pass = false;
            line.detail = "disagreement on graph " + to_graph6(g) +
                          " with k=" + std::to_string(k);
            return line;
        }
        expected ? ++feasible : ++infeasible;
    }
    std::ostringstream out;
    out << "200/200 random graphs (<= 8 edges, k in {4,5,6}): backtracking = "
           "DIMACS round trip = proper-coloring enumeration (" << feasible
        << " colorable, " << infeasible << " not)";
    line.detail = out.str();
    return line;
}

// --------------------------------------------------------------------------
// 10. Asymptotic statements, covered by the finite-size criteria.

CriterionLine criterion_asymptotics_note()
{
    CriterionLine line{10, true,
                       "asymptotic growth claims have no finite test; their "
                       "finite-n consequences are pinned by criteria 2, 3, and 8"};
    return line;
}

}  // namespace

int main()
{
    CriterionLine (*const criteria[])() = {
        criterion_witnesses,    criterion_edge_formulas,
        criterion_construction_saturation, criterion_traps,
        criterion_intervals,    criterion_max_free,
        criterion_edge_additions, criterion_sat_star,
        criterion_cross_engine, criterion_asymptotics_note,
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const CriterionLine line = criterion();
        if (!line.pass)
            ++failures;
        std::printf("criterion %2d: %s  %s  [%.1fs]\n", line.id,
                    line.pass ? "PASS" : "FAIL", line.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    if (failures > 0)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
