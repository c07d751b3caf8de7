#ifndef KECORE_ORACLE_HPP
#define KECORE_ORACLE_HPP

#include <string>
#include <vector>

#include "kecore/graph.hpp"

namespace kecore::oracle {

/// Hard size guard for the exhaustive searches.
inline constexpr int kMaxOracleVertices = 24;

/// Every maximum independent set, canonicalized: each set is a sorted id
/// list and the family is sorted lexicographically.
struct MISFamily {
    int alpha = 0;
    std::vector<std::vector<int>> sets;

    int count() const { return static_cast<int>(sets.size()); }
};

/// Exact enumeration by branch and bound over include/exclude decisions,
/// pivoting on ascending vertex ids. Throws TooLargeError above the guard.
MISFamily enumerate_mis(const Graph& g);

/// Intersection of all maximum independent sets.
VertexSet brute_core(const Graph& g);

/// Exact matching number by exhaustive search: recurse on the lowest-id
/// uncovered vertex, either skipping it or matching it to each free neighbor.
int brute_mu(const Graph& g);

/// Per-vertex deletion dichotomy check against brute-force quantities.
/// Case 1 (mu unchanged): G-v must stay KE and v must lie in the core.
/// Case 2 (mu drops by one): G-v is KE exactly when v is outside the core.
struct VertexDichotomyReport {
    int vertex = -1;
    int which_case = 0; // 1 or 2
    int mu = 0;
    int mu_after_delete = 0;
    bool deleted_graph_ke = false;
    bool in_core = false;
    bool pass = false;
};

VertexDichotomyReport verify_theorem_th(const Graph& g, int v);

/// One structural fact evaluated against brute-force quantities.
struct StructureCheck {
    std::string name;
    bool applicable = false;
    bool pass = true;
};

struct StructureReport {
    std::vector<StructureCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

/// Evaluates the structural biconditionals/implications whose hypotheses
/// hold for g (connectivity, bipartiteness, order, isolated vertices are
/// detected, not assumed):
///   - bipartite_core_ge2_iff_alpha_gt_half   (connected bipartite, n >= 2)
///   - bipartite_core_empty_iff_alpha_eq_half (connected bipartite, n >= 2;
///     also requires both parts to be maximum independent sets)
///   - ke_core_gt_boundary_iff_alpha_gt_half  (connected KE, n >= 2:
///     alpha > n/2 iff |core| > |N(core)| >= 1)
///   - ke_perfect_matching_iff_alpha_eq_half  (connected KE, n >= 2)
///   - core_exceeds_alpha_minus_mu            (no isolated vertices, alpha > mu)
///   - core_ge2_when_3mu_lt_n                 (connected, 3*mu < n)
StructureReport validate_structure(const Graph& g);

} // namespace kecore::oracle

#endif
