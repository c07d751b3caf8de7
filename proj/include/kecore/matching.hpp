#ifndef KECORE_MATCHING_HPP
#define KECORE_MATCHING_HPP

#include <utility>
#include <vector>

#include "kecore/graph.hpp"

namespace kecore {

/// Set of pairwise vertex-disjoint edges, kept as a mate map.
struct Matching {
    std::vector<int> mate; // -1 when unmatched

    Matching() = default;
    explicit Matching(int n) : mate(n, -1) {}

    int size() const;
    bool is_matched(int v) const { return mate[v] >= 0; }

    /// Matched pairs (u, mate(u)) with u < mate(u), ascending by u.
    std::vector<std::pair<int, int>> pairs() const;

    /// Checks the mate map is an involution over edges of g.
    /// Throws PreconditionError with a diagnostic otherwise.
    void validate(const Graph& g) const;
};

/// Maximum-cardinality matching. Bipartite graphs take an augmenting-path
/// phase algorithm; general graphs take blossom contraction. The result is
/// deterministic: greedy seeding pairs the lowest-id free vertex with its
/// lowest-id free neighbor, and searches scan neighbors in ascending order.
Matching maximum_matching(const Graph& g);

/// mu(G - v), given a maximum matching of G. Never rebuilds the matching
/// from scratch: if v is unmatched the size is unchanged; otherwise the
/// answer hinges on one augmenting-path search from v's widowed mate.
int mu_after_delete(const Graph& g, const Matching& matching, int v);

/// Same fast path as mu_after_delete but keeps the byproducts: the deleted
/// graph (ids renumbered per induced_delete) and a maximum matching of it.
struct DeletionAnalysis {
    Graph graph;
    Matching matching;
    int mu = 0;
};

DeletionAnalysis analyze_delete(const Graph& g, const Matching& matching, int v);

/// True iff the matching covers every vertex.
bool has_perfect_matching(const Graph& g, const Matching& matching);

} // namespace kecore

#endif
