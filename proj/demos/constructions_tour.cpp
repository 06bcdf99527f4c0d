// Tour of the three extremal constructions: build a few sizes of each,
// re-verify the emitted witness colorings, and show the edge-count formulas
// landing exactly where they should.
#include <rainbow/constructions.hpp>

#include <cstdio>

using namespace rainbow;

int main()
{
    std::printf("4-cycle family: n, edges, 2(n-1) - floor((n-1)/6), witness\n");
    for (int n = 7; n <= 13; ++n) {
        const auto r = build_c4_construction(n);
        const int formula = 2 * (n - 1) - (n - 1) / 6;
        std::printf("  n=%2d  m=%2d  formula=%2d  witness %s\n", n,
                    r.graph.edge_count(), formula,
                    verifies(r.graph, *r.witness, 4) ? "ok" : "BAD");
    }

    std::printf("\n5-cycle family: n, edges, floor(5n/2) - 4, witness\n");
    for (int n = 8; n <= 13; ++n) {
        const auto r = build_c5_construction(n);
        const int formula = 5 * n / 2 - 4;
        std::printf("  n=%2d  m=%2d  formula=%2d  witness %s\n", n,
                    r.graph.edge_count(), formula,
                    verifies(r.graph, *r.witness, 5) ? "ok" : "BAD");
    }

    std::printf("\n6-cycle family and its fixtures:\n");
    for (int n = 14; n <= 20; ++n) {
        const auto r = build_c6_construction(n);
        std::printf("  n=%2d  m=%2d  witness %s\n", n, r.graph.edge_count(),
                    verifies(r.graph, *r.witness, 6) ? "ok" : "BAD");
    }
    for (const char* name : {"core", "core+T1", "H", "F"}) {
        const auto r = build_named_fixture(name);
        std::printf("  %-8s n=%2d  m=%2d  graph6 %s\n", name,
                    r.graph.vertex_count(), r.graph.edge_count(),
                    to_graph6(r.graph).c_str());
    }
    return 0;
}
