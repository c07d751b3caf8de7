#ifndef KECORE_CORE_SOLVER_HPP
#define KECORE_CORE_SOLVER_HPP

#include <cstdint>
#include <string>

#include "kecore/graph.hpp"

namespace kecore {

enum class CoreMode { Auto, General, Bipartite, Perfect };

enum class CoreAlgorithm { General, Bipartite, PerfectMatching };

const char* to_string(CoreAlgorithm a);

/// core(G), the intersection of all maximum independent sets, for a KE
/// graph, plus the per-vertex classification bits behind it.
struct CoreResult {
    VertexSet core;
    std::vector<std::uint8_t> c; // 1 iff v in core
    std::vector<std::int8_t> ke; // KE-ness of G-v where computed, else -1
    CoreAlgorithm algorithm = CoreAlgorithm::General;
    int mu = 0;
    int alpha = 0;

    bool ke_defined(int v) const { return ke[v] >= 0; }
};

/// Computes core(G) by classifying every vertex v independently:
///   - general:  v is in the core when mu(G-v) = mu(G); when mu drops,
///     v is in the core exactly when G-v stops being KE (ke bit recorded).
///   - bipartite: v is in the core exactly when mu(G-v) = mu(G).
///   - perfect matching: mu always drops, so only the KE test on G-v runs.
/// Auto prefers bipartite, then perfect matching, then general.
///
/// The input must be KE (verified up front in every mode; NotKEError
/// otherwise); explicit bipartite/perfect modes additionally verify their
/// gate (NotBipartiteError / NoPerfectMatchingError).
///
/// The per-vertex loop is an OpenMP parallel map over the immutable graph:
/// each task writes only its own slot, so the result is byte-identical for
/// every worker count. workers must be >= 1.
CoreResult compute_core(const Graph& g, CoreMode mode = CoreMode::Auto, int workers = 1);

/// Plain-loop reference implementation of the same map, kept for testing
/// the OpenMP kernel against; must agree with compute_core exactly.
CoreResult compute_core_serial(const Graph& g, CoreMode mode = CoreMode::Auto);

CoreResult core_general(const Graph& g, int workers = 1);
CoreResult core_bipartite(const Graph& g, int workers = 1);
CoreResult core_perfect_matching(const Graph& g, int workers = 1);

/// alpha(G) = n - mu(G) for KE graphs. NotKEError otherwise.
int alpha_ke(const Graph& g);

/// A KE graph has a unique maximum independent set iff its core cannot be
/// enlarged by any vertex, i.e. the closed neighborhood of the core is V.
struct UniqueMISResult {
    bool unique = false;
    VertexSet mis; // the unique maximum independent set (= core) when unique
};

UniqueMISResult unique_mis(const Graph& g, int workers = 1);

} // namespace kecore

#endif
