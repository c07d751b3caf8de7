#ifndef KECORE_TESTS_SUPPORT_HPP
#define KECORE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kecore/generator.hpp"
#include "kecore/graph.hpp"

namespace kecore::tests {

inline Graph load_fixture(const std::string& name) {
    return load_graph_file(std::string(KECORE_FIXTURE_DIR) + "/" + name + ".edges");
}

/// Canonical fixture facts. Cores are stated per the fixture docs; mu and
/// alpha are the published quantities the suites pin down exactly.
struct FixtureInfo {
    const char* name;
    int n;
    int m;
    bool ke;
    int mu;
    std::vector<int> core; // meaningful only when ke
    bool bipartite;
    bool perfect_matching;
};

inline const std::vector<FixtureInfo>& fixtures() {
    static const std::vector<FixtureInfo> table = {
        {"fig1_h1", 4, 4, true, 2, {0}, false, true},
        {"fig1_h3", 5, 5, false, 2, {}, false, false},
        {"fig3_g1", 7, 7, true, 3, {3, 6}, true, false},
        {"fig3_g2", 6, 9, true, 3, {3, 4, 5}, false, true},
        {"fig4_g1", 7, 7, true, 3, {4, 5, 6}, false, false},
        {"fig4_g2", 7, 7, true, 3, {5, 6}, true, false},
        {"fig111_h1", 6, 6, true, 3, {0}, false, true},
        {"fig111_h2", 6, 7, true, 3, {0, 4}, false, true},
        {"fig5_g1", 6, 6, true, 3, {0, 2}, false, true},
        {"fig5_g2", 6, 6, true, 3, {}, true, true},
    };
    return table;
}

/// Mixed-flavor corpus recipe shared by the unit, property, and acceptance
/// suites: seed k yields one KE graph with n <= max_n.
inline GenSpec corpus_spec(std::uint64_t seed, int max_n = 14) {
    SplitMix64 rng(seed);
    int n = 2 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n - 1));
    GenSpec spec;
    spec.seed = seed;
    spec.flavor = static_cast<GenFlavor>(seed % 3);
    if (spec.flavor == GenFlavor::PerfectMatchingKe) {
        n -= n % 2;
        spec.n = n;
        spec.mu = n / 2;
    } else {
        spec.n = n;
        spec.mu = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n / 2 + 1));
    }
    spec.extra_edge_prob = rng.next_unit();
    return spec;
}

inline bool is_independent(const Graph& g, const std::vector<int>& set) {
    for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j)
            if (g.has_edge(set[i], set[j])) return false;
    return true;
}

/// Relabels g by the permutation perm (old id -> new id).
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), std::move(edges));
}

} // namespace kecore::tests

#endif
