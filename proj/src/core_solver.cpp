#include "kecore/core_solver.hpp"

#include <omp.h>

#include <stdexcept>

#include "kecore/errors.hpp"
#include "kecore/ke_test.hpp"
#include "kecore/matching.hpp"

namespace kecore {

const char* to_string(CoreAlgorithm a) {
    switch (a) {
        case CoreAlgorithm::General: return "general";
        case CoreAlgorithm::Bipartite: return "bipartite";
        case CoreAlgorithm::PerfectMatching: return "perfect-matching";
    }
    return "?";
}

namespace {

struct VertexBits {
    std::uint8_t c = 0;
    std::int8_t ke = -1;
};

// One vertex of the per-vertex map. Reads only immutable inputs.
VertexBits classify_vertex(const Graph& g, const Matching& m, int mu, CoreAlgorithm algo, int v) {
    VertexBits bits;
    if (algo == CoreAlgorithm::PerfectMatching) {
        // mu(G-v) = mu - 1 always holds here, and dropping v's pair from a
        // perfect matching leaves a maximum matching of G-v, so the KE test
        // needs no augmenting search.
        Graph gv = induced_delete(g, v);
        Matching mv(gv.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u) {
            int w = m.mate[u];
            if (u == v || w == v || w < u) continue;
            int a = u > v ? u - 1 : u;
            int b = w > v ? w - 1 : w;
            mv.mate[a] = b;
            mv.mate[b] = a;
        }
        bool ke = ke_given_matching(gv, mv).is_ke;
        bits.ke = ke ? 1 : 0;
        bits.c = ke ? 0 : 1;
        return bits;
    }

    DeletionAnalysis del = analyze_delete(g, m, v);
    if (del.mu == mu) {
        bits.c = 1;
        return bits;
    }
    if (algo == CoreAlgorithm::Bipartite) {
        bits.c = 0;
        return bits;
    }
    // general: mu dropped, so membership is decided by KE-ness of G-v,
    // reusing the maximum matching the deletion analysis already holds.
    bool ke = ke_given_matching(del.graph, del.matching).is_ke;
    bits.ke = ke ? 1 : 0;
    bits.c = ke ? 0 : 1;
    return bits;
}

struct Prepared {
    Matching matching;
    int mu = 0;
    CoreAlgorithm algorithm = CoreAlgorithm::General;
};

Prepared prepare(const Graph& g, CoreMode mode) {
    Prepared p;
    p.matching = maximum_matching(g);
    p.mu = p.matching.size();

    const bool bip = bipartition(g).is_bipartite();
    const bool perfect = has_perfect_matching(g, p.matching);
    if (mode == CoreMode::Bipartite && !bip) throw NotBipartiteError();
    if (!ke_given_matching(g, p.matching).is_ke) throw NotKEError();
    if (mode == CoreMode::Perfect && !perfect) throw NoPerfectMatchingError();

    switch (mode) {
        case CoreMode::Auto:
            p.algorithm = bip       ? CoreAlgorithm::Bipartite
                          : perfect ? CoreAlgorithm::PerfectMatching
                                    : CoreAlgorithm::General;
            break;
        case CoreMode::General: p.algorithm = CoreAlgorithm::General; break;
        case CoreMode::Bipartite: p.algorithm = CoreAlgorithm::Bipartite; break;
        case CoreMode::Perfect: p.algorithm = CoreAlgorithm::PerfectMatching; break;
    }
    return p;
}

CoreResult assemble(const Graph& g, const Prepared& p, const std::vector<VertexBits>& bits) {
    const int n = g.vertex_count();
    CoreResult result;
    result.algorithm = p.algorithm;
    result.mu = p.mu;
    result.alpha = n - p.mu;
    result.core = VertexSet(n);
    result.c.resize(n);
    result.ke.resize(n);
    for (int v = 0; v < n; ++v) {
        result.c[v] = bits[v].c;
        result.ke[v] = bits[v].ke;
        if (bits[v].c) result.core.add(v);
    }
    return result;
}

} // namespace

CoreResult compute_core(const Graph& g, CoreMode mode, int workers) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    Prepared p = prepare(g, mode);
    const int n = g.vertex_count();
    std::vector<VertexBits> bits(n);

    const Graph* gp = &g;
    const Prepared* pp = &p;
    VertexBits* slots = bits.data();
#pragma omp parallel for num_threads(workers) schedule(dynamic)
    for (int v = 0; v < n; ++v)
        slots[v] = classify_vertex(*gp, pp->matching, pp->mu, pp->algorithm, v);

    return assemble(g, p, bits);
}

CoreResult compute_core_serial(const Graph& g, CoreMode mode) {
    Prepared p = prepare(g, mode);
    std::vector<VertexBits> bits(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        bits[v] = classify_vertex(g, p.matching, p.mu, p.algorithm, v);
    return assemble(g, p, bits);
}

CoreResult core_general(const Graph& g, int workers) {
    return compute_core(g, CoreMode::General, workers);
}

CoreResult core_bipartite(const Graph& g, int workers) {
    return compute_core(g, CoreMode::Bipartite, workers);
}

CoreResult core_perfect_matching(const Graph& g, int workers) {
    return compute_core(g, CoreMode::Perfect, workers);
}

int alpha_ke(const Graph& g) {
    Matching m = maximum_matching(g);
    if (!ke_given_matching(g, m).is_ke) throw NotKEError();
    return g.vertex_count() - m.size();
}

UniqueMISResult unique_mis(const Graph& g, int workers) {
    CoreResult core = compute_core(g, CoreMode::Auto, workers);
    UniqueMISResult result;
    result.unique = closed_neighborhood(g, core.core).size() == g.vertex_count();
    if (result.unique) result.mis = core.core;
    return result;
}

} // namespace kecore
