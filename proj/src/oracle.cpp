#include "kecore/oracle.hpp"

#include <algorithm>

#include "kecore/errors.hpp"

namespace kecore::oracle {

namespace {

void guard_size(const Graph& g) {
    if (g.vertex_count() > kMaxOracleVertices)
        throw TooLargeError("oracle accepts at most " + std::to_string(kMaxOracleVertices) +
                            " vertices, got " + std::to_string(g.vertex_count()));
}

struct MISSearch {
    const Graph& g;
    std::vector<int> blocked; // chosen-neighbor count per vertex
    std::vector<int> chosen;
    int best = 0;
    std::vector<std::vector<int>> sets;

    explicit MISSearch(const Graph& graph) : g(graph), blocked(graph.vertex_count(), 0) {}

    void run(int v) {
        const int n = g.vertex_count();
        if (v == n) {
            int size = static_cast<int>(chosen.size());
            if (size > best) {
                best = size;
                sets.clear();
            }
            if (size == best) sets.push_back(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) + (n - v) < best) return;
        if (blocked[v] == 0) {
            chosen.push_back(v);
            for (int w : g.neighbors(v)) ++blocked[w];
            run(v + 1);
            for (int w : g.neighbors(v)) --blocked[w];
            chosen.pop_back();
        }
        run(v + 1);
    }
};

struct MatchingSearch {
    const Graph& g;
    std::vector<bool> covered;
    int size = 0;
    int best = 0;

    explicit MatchingSearch(const Graph& graph) : g(graph), covered(graph.vertex_count(), false) {}

    void run(int from) {
        const int n = g.vertex_count();
        int v = from;
        while (v < n && covered[v]) ++v;
        if (v == n) {
            best = std::max(best, size);
            return;
        }
        int free_left = 0;
        for (int u = v; u < n; ++u)
            if (!covered[u]) ++free_left;
        if (size + free_left / 2 <= best) return; // cannot improve on the incumbent
        run(v + 1); // leave v unmatched
        for (int w : g.neighbors(v)) {
            if (w < v || covered[w]) continue;
            covered[v] = covered[w] = true;
            ++size;
            run(v + 1);
            --size;
            covered[v] = covered[w] = false;
        }
    }
};

bool connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool is_mis(const MISFamily& family, const std::vector<int>& set) {
    return std::binary_search(family.sets.begin(), family.sets.end(), set);
}

} // namespace

MISFamily enumerate_mis(const Graph& g) {
    guard_size(g);
    MISSearch search(g);
    search.run(0);
    std::sort(search.sets.begin(), search.sets.end());
    return MISFamily{search.best, std::move(search.sets)};
}

VertexSet brute_core(const Graph& g) {
    MISFamily family = enumerate_mis(g);
    VertexSet core = VertexSet::full(g.vertex_count());
    for (const auto& set : family.sets) {
        VertexSet s(g.vertex_count());
        for (int v : set) s.add(v);
        core.intersect_with(s);
    }
    return core;
}

int brute_mu(const Graph& g) {
    guard_size(g);
    MatchingSearch search(g);
    search.run(0);
    return search.best;
}

VertexDichotomyReport verify_theorem_th(const Graph& g, int v) {
    guard_size(g);
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");

    const int mu = brute_mu(g);
    const int alpha = enumerate_mis(g).alpha;
    if (alpha + mu != n) throw NotKEError();

    Graph gv = induced_delete(g, v);
    const int mu_v = brute_mu(gv);
    const int alpha_v = enumerate_mis(gv).alpha;
    const bool gv_ke = alpha_v + mu_v == n - 1;
    const bool in_core = brute_core(g).contains(v);

    VertexDichotomyReport report;
    report.vertex = v;
    report.mu = mu;
    report.mu_after_delete = mu_v;
    report.deleted_graph_ke = gv_ke;
    report.in_core = in_core;
    if (mu_v == mu) {
        report.which_case = 1;
        report.pass = gv_ke && in_core;
    } else if (mu_v == mu - 1) {
        report.which_case = 2;
        report.pass = gv_ke == !in_core;
    } else {
        report.which_case = 0;
        report.pass = false; // mu may drop by at most one
    }
    return report;
}

StructureReport validate_structure(const Graph& g) {
    guard_size(g);
    const int n = g.vertex_count();

    const MISFamily family = enumerate_mis(g);
    const int alpha = family.alpha;
    const int mu = brute_mu(g);
    const VertexSet core = brute_core(g);
    const int core_size = core.size();

    const bool conn = connected(g);
    const BipartitionResult parts = bipartition(g);
    const bool ke = alpha + mu == n;

    StructureReport report;
    auto check = [&report](std::string name, bool applicable, bool pass) {
        report.checks.push_back({std::move(name), applicable, !applicable || pass});
    };

    const bool conn_bip = conn && parts.is_bipartite() && n >= 2;
    check("bipartite_core_ge2_iff_alpha_gt_half", conn_bip, (2 * alpha > n) == (core_size >= 2));

    bool parts_are_mis = false;
    if (conn_bip) {
        const auto& coloring = *parts.coloring;
        parts_are_mis = is_mis(family, coloring.part(0).members()) &&
                        is_mis(family, coloring.part(1).members());
    }
    check("bipartite_core_empty_iff_alpha_eq_half", conn_bip,
          (2 * alpha == n) == (core_size == 0 && parts_are_mis));

    const bool conn_ke = conn && ke && n >= 2;
    const int boundary = closed_neighborhood(g, core).size() - core_size;
    check("ke_core_gt_boundary_iff_alpha_gt_half", conn_ke,
          (2 * alpha > n) == (core_size > boundary && boundary >= 1));
    check("ke_perfect_matching_iff_alpha_eq_half", conn_ke, (2 * alpha == n) == (2 * mu == n));

    check("core_exceeds_alpha_minus_mu", !has_isolated_vertex(g) && n >= 1 && alpha > mu,
          core_size > alpha - mu);
    check("core_ge2_when_3mu_lt_n", conn && 3 * mu < n && n >= 1, core_size >= 2);

    return report;
}

} // namespace kecore::oracle
