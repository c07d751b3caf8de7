#include "kecore/generator.hpp"

#include <sstream>
#include <stdexcept>

namespace kecore {

const char* to_string(GenFlavor f) {
    switch (f) {
        case GenFlavor::Ke: return "ke";
        case GenFlavor::BipartiteKe: return "bipartite-ke";
        case GenFlavor::PerfectMatchingKe: return "perfect-matching-ke";
    }
    return "?";
}

GenFlavor gen_flavor_from_string(const std::string& s) {
    if (s == "ke") return GenFlavor::Ke;
    if (s == "bipartite-ke") return GenFlavor::BipartiteKe;
    if (s == "perfect-matching-ke") return GenFlavor::PerfectMatchingKe;
    throw std::invalid_argument("unknown flavor '" + s + "'");
}

void GenSpec::validate() const {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (mu < 0 || 2 * mu > n)
        throw std::invalid_argument("mu must satisfy 0 <= 2*mu <= n");
    if (!(extra_edge_prob >= 0.0 && extra_edge_prob <= 1.0))
        throw std::invalid_argument("extra_edge_prob must lie in [0, 1]");
    if (flavor == GenFlavor::PerfectMatchingKe && 2 * mu != n)
        throw std::invalid_argument("perfect-matching-ke requires 2*mu = n");
}

Graph gen_ke(const GenSpec& spec) {
    spec.validate();
    const int independent = spec.n - spec.mu; // |S|
    const int d0 = independent;               // first vertex of D

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.mu; ++i) edges.emplace_back(i, d0 + i);

    SplitMix64 rng(spec.seed);
    if (spec.flavor != GenFlavor::BipartiteKe) {
        for (int a = d0; a < spec.n; ++a)
            for (int b = a + 1; b < spec.n; ++b)
                if (rng.next_unit() < spec.extra_edge_prob) edges.emplace_back(a, b);
    }
    for (int a = d0; a < spec.n; ++a) {
        for (int b = 0; b < independent; ++b) {
            if (a - d0 == b) continue; // mandatory pair, already present
            if (rng.next_unit() < spec.extra_edge_prob) edges.emplace_back(b, a);
        }
    }
    return Graph(spec.n, std::move(edges));
}

std::string gen_edge_list(const GenSpec& spec) {
    Graph g = gen_ke(spec);
    std::ostringstream header;
    header << "generated: flavor=" << to_string(spec.flavor) << " n=" << spec.n
           << " mu=" << spec.mu << " p=" << spec.extra_edge_prob << " seed=" << spec.seed;
    return to_edge_list(g, {header.str()});
}

} // namespace kecore
