#ifndef KECORE_KE_TEST_HPP
#define KECORE_KE_TEST_HPP

#include <string>

#include "kecore/graph.hpp"
#include "kecore/matching.hpp"

namespace kecore {

/// Outcome of the Konig-Egervary test. A graph is KE when its independence
/// and matching numbers sum to the vertex count; equivalently, when some
/// independent set contains every unmatched vertex and exactly one endpoint
/// of every matched edge. `witness` is such a set (present iff is_ke).
struct KEVerdict {
    bool is_ke = false;
    VertexSet witness;
    int conflict_var = -1; // matched-edge index whose two selections collide, or -1
    std::string reason;    // diagnostic for the negative case
};

/// O(n + m) test given a maximum matching. An independent set of size
/// n - mu must take all unmatched vertices plus one endpoint per matched
/// edge, so each matched edge becomes a boolean selector and each graph
/// edge a constraint; satisfiability of the resulting 2-SAT instance (via
/// implication-graph SCCs) decides KE-ness and yields the witness.
///
/// The matching is checked for well-formedness (involution over edges);
/// maximality is a trusted precondition.
KEVerdict ke_given_matching(const Graph& g, const Matching& matching);

/// maximum_matching composed with ke_given_matching.
KEVerdict is_ke(const Graph& g);

} // namespace kecore

#endif
