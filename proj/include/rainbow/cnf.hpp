// cnf.hpp
// CNF encodings of "proper edge-coloring with no rainbow k-cycle" in the
// exact shape of the published formulas: variable x_e^c (id = e*C + c + 1)
// says edge e has color c; the rainbow block forbids, per cycle, every
// ordered assignment of k distinct colors to its k edges.  DIMACS output is
// byte-deterministic; decoding validates models back into edge colorings.

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    // Variable layout metadata: edge e with color c is variable e*palette+c+1.
    int edge_count = 0;
    int palette = 0;

    int var(int edge, int color) const { return edge * palette + color + 1; }

    // Inverse of var(); valid for ids in [1, edge_count*palette].
    std::pair<int, int> edge_color_of(int id) const
    {
        return {(id - 1) / palette, (id - 1) % palette};
    }
};

namespace detail {

// Unordered pairs of distinct edges sharing an endpoint, lexicographic by
// edge index — the properness constraint set.
inline std::vector<std::pair<int, int>> incident_edge_pairs(const Graph& g)
{
    std::vector<std::pair<int, int>> out;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
}

// Emits, for one cycle (edge indices in traversal order), a clause per
// ordered injective tuple of k colors: ¬x_{e1}^{c1} ∨ ... ∨ ¬x_{ek}^{ck}.
inline void emit_rainbow_block(CnfFormula& f, const std::vector<int>& cycle_edges)
{
    const int k = static_cast<int>(cycle_edges.size());
    std::vector<int> tuple(static_cast<std::size_t>(k), -1);
    std::vector<bool> taken(static_cast<std::size_t>(f.palette), false);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            std::vector<int> clause;
            clause.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                clause.push_back(-f.var(cycle_edges[static_cast<std::size_t>(i)],
                                        tuple[static_cast<std::size_t>(i)]));
            f.clauses.push_back(std::move(clause));
            return;
        }
        for (int c = 0; c < f.palette; ++c) {
            if (taken[static_cast<std::size_t>(c)])
                continue;
            taken[static_cast<std::size_t>(c)] = true;
            tuple[static_cast<std::size_t>(pos)] = c;
            self(self, pos + 1);
            taken[static_cast<std::size_t>(c)] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// Feasibility formula: every edge has a color; incident edges differ in every
// color; no k-cycle is rainbow.  Clause count |E| + |incident pairs|*c +
// |C_k copies| * c(c-1)...(c-k+1).
inline CnfFormula encode_feasibility(const Graph& g, int k, int c)
{
    if (c < 1 && g.edge_count() > 0)
        throw std::invalid_argument("encode_feasibility: palette size 0 with nonempty edge set");
    CnfFormula f;
    f.edge_count = g.edge_count();
    f.palette = c;
    f.num_vars = f.edge_count * c;

    for (int e = 0; e < f.edge_count; ++e) {
        std::vector<int> clause;
        for (int col = 0; col < c; ++col)
            clause.push_back(f.var(e, col));
        f.clauses.push_back(std::move(clause));
    }
    for (auto [i, j] : detail::incident_edge_pairs(g))
        for (int col = 0; col < c; ++col)
            f.clauses.push_back({-f.var(i, col), -f.var(j, col)});
    if (k >= 3 && k <= g.vertex_count())
        for (const auto& cyc : enumerate_cycles(g, k)) {
            std::vector<int> cycle_edges;
            for (auto [u, v] : cyc.edges())
                cycle_edges.push_back(g.edge_index(u, v));
            detail::emit_rainbow_block(f, cycle_edges);
        }
    return f;
}

// Exact-color-count formula: feasibility plus surjectivity (every color on
// some edge) and at-most-one color per edge.  Adds c + |E|*(c choose 2)
// clauses.
inline CnfFormula encode_exact_colors(const Graph& g, int k, int c)
{
    CnfFormula f = encode_feasibility(g, k, c);
    for (int col = 0; col < c; ++col) {
        std::vector<int> clause;
        for (int e = 0; e < f.edge_count; ++e)
            clause.push_back(f.var(e, col));
        f.clauses.push_back(std::move(clause));
    }
    for (int e = 0; e < f.edge_count; ++e)
        for (int c1 = 0; c1 < c; ++c1)
            for (int c2 = c1 + 1; c2 < c; ++c2)
                f.clauses.push_back({-f.var(e, c1), -f.var(e, c2)});
    return f;
}

inline std::string write_dimacs(const CnfFormula& f)
{
    std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                      std::to_string(f.clauses.size()) + "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) {
            out += std::to_string(lit);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

// Reference DIMACS reader (accepts 'c' comment lines; clauses may span
// lines).  Used by the round-trip property tests and the standalone solver.
inline CnfFormula parse_dimacs(const std::string& text)
{
    CnfFormula f;
    std::istringstream in(text);
    std::string tok;
    bool have_header = false;
    std::size_t expected_clauses = 0;
    std::vector<int> current;
    while (in >> tok) {
        if (tok == "c") {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        if (tok == "p") {
            std::string kind;
            if (!(in >> kind >> f.num_vars >> expected_clauses) || kind != "cnf")
                throw std::invalid_argument("dimacs: malformed problem line");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw std::invalid_argument("dimacs: clause before problem line");
        int lit = 0;
        try {
            lit = std::stoi(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("dimacs: bad token '" + tok + "'");
        }
        if (lit == 0) {
            f.clauses.push_back(current);
            current.clear();
        } else {
            if (std::abs(lit) > f.num_vars)
                throw std::invalid_argument("dimacs: literal out of range: " + tok);
            current.push_back(lit);
        }
    }
    if (!have_header)
        throw std::invalid_argument("dimacs: missing problem line");
    if (!current.empty())
        throw std::invalid_argument("dimacs: unterminated clause");
    if (f.clauses.size() != expected_clauses)
        throw std::invalid_argument("dimacs: clause count mismatch (header says " +
                                    std::to_string(expected_clauses) + ", found " +
                                    std::to_string(f.clauses.size()) + ")");
    return f;
}

// Parses solver model text: signed integers in any line arrangement,
// optional 'v' prefixes and a terminating 0, as printed by DIMACS solvers.
inline std::vector<int> parse_model_literals(const std::string& text)
{
    std::vector<int> lits;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "v" || tok == "V")
            continue;
        try {
            int lit = std::stoi(tok);
            if (lit != 0)
                lits.push_back(lit);
        } catch (const std::exception&) {
            throw std::invalid_argument("model: bad token '" + tok + "'");
        }
    }
    return lits;
}

// Reads an edge coloring off a model: per edge, the set of true colors; the
// lowest true color is taken (under the exact encoding it is unique — the
// caller re-verifies either way).  An edge with no true color, a literal out
// of range, or an unassigned variable is an invalid model.
inline EdgeColoring decode_assignment(const CnfFormula& f, const std::vector<int>& model)
{
    std::vector<signed char> value(static_cast<std::size_t>(f.num_vars) + 1, -1);
    for (int lit : model) {
        const int v = std::abs(lit);
        if (v == 0 || v > f.num_vars)
            throw std::invalid_argument("model: literal out of range: " + std::to_string(lit));
        value[static_cast<std::size_t>(v)] = lit > 0 ? 1 : 0;
    }
    for (int v = 1; v <= f.edge_count * f.palette; ++v)
        if (value[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("model: variable " + std::to_string(v) + " unassigned");
    EdgeColoring out;
    out.colors.assign(static_cast<std::size_t>(f.edge_count), -1);
    for (int e = 0; e < f.edge_count; ++e) {
        for (int c = 0; c < f.palette; ++c)
            if (value[static_cast<std::size_t>(f.var(e, c))] == 1) {
                out.colors[static_cast<std::size_t>(e)] = c;
                break;
            }
        if (out.colors[static_cast<std::size_t>(e)] < 0)
            throw std::invalid_argument("model: edge " + std::to_string(e) +
                                        " has no true color (invalid model)");
    }
    return out;
}

}  // namespace rainbow
