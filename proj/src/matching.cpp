#include "kecore/matching.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kecore/errors.hpp"

namespace kecore {

int Matching::size() const {
    int matched = 0;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] >= 0) ++matched;
    return matched / 2;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) out.emplace_back(v, mate[v]);
    return out;
}

void Matching::validate(const Graph& g) const {
    if (static_cast<int>(mate.size()) != g.vertex_count())
        throw PreconditionError("matching has wrong vertex count");
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = mate[v];
        if (w < 0) continue;
        if (w >= g.vertex_count())
            throw PreconditionError("mate of " + std::to_string(v) + " out of range");
        if (mate[w] != v)
            throw PreconditionError("mate map is not an involution at " + std::to_string(v));
        if (!g.has_edge(v, w))
            throw PreconditionError("matched pair " + std::to_string(v) + "-" + std::to_string(w) +
                                    " is not an edge");
    }
}

namespace {

void greedy_seed(const Graph& g, Matching& m) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (m.mate[v] >= 0) continue;
        for (int w : g.neighbors(v)) {
            if (m.mate[w] < 0) {
                m.mate[v] = w;
                m.mate[w] = v;
                break;
            }
        }
    }
}

// ---- bipartite: Hopcroft-Karp ------------------------------------------

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
    const Graph& g;
    const std::vector<int>& left; // side-A vertices, ascending
    Matching& m;
    std::vector<int> dist;

    HopcroftKarp(const Graph& graph, const std::vector<int>& side_a, Matching& matching)
        : g(graph), left(side_a), m(matching), dist(graph.vertex_count(), kInf) {}

    bool bfs() {
        std::deque<int> queue;
        std::fill(dist.begin(), dist.end(), kInf);
        for (int u : left) {
            if (m.mate[u] < 0) {
                dist[u] = 0;
                queue.push_back(u);
            }
        }
        bool reachable_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                int next = m.mate[w];
                if (next < 0) {
                    reachable_free = true;
                } else if (dist[next] == kInf) {
                    dist[next] = dist[u] + 1;
                    queue.push_back(next);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int w : g.neighbors(u)) {
            int next = m.mate[w];
            if (next < 0 || (dist[next] == dist[u] + 1 && dfs(next))) {
                m.mate[u] = w;
                m.mate[w] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    void run() {
        while (bfs()) {
            for (int u : left)
                if (m.mate[u] < 0) dfs(u);
        }
    }
};

Matching bipartite_matching(const Graph& g, const TwoColoring& coloring) {
    Matching m(g.vertex_count());
    greedy_seed(g, m);
    std::vector<int> left;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (coloring.side[v] == 0) left.push_back(v);
    HopcroftKarp(g, left, m).run();
    return m;
}

// ---- general: blossom contraction ---------------------------------------

// One phase of the blossom algorithm: look for an augmenting path starting
// at the exposed vertex `root` and flip it into `mate` if found. Blossoms
// are handled by contracting the odd cycle and re-running the search on the
// contracted graph; a successful contracted matching is expanded back by
// rematching the cycle around the vertex its external edge attaches to.
bool augment_from(const Graph& g, std::vector<int>& mate, int root);

std::vector<int> path_to_root(const std::vector<int>& parent, int from) {
    std::vector<int> path;
    for (int x = from; x != -1; x = parent[x]) path.push_back(x);
    return path;
}

void flip_path(std::vector<int>& mate, const std::vector<int>& path) {
    assert(path.size() % 2 == 0);
    for (size_t i = 0; i + 1 < path.size(); i += 2) {
        mate[path[i]] = path[i + 1];
        mate[path[i + 1]] = path[i];
    }
}

// Odd cycle closed by a tree edge between two even vertices, listed in
// cycle order starting from the base (deepest common ancestor):
// [base, ..., u, v, ..., child-of-base].
std::vector<int> blossom_cycle(const std::vector<int>& parent, int u, int v) {
    std::vector<int> up_u = path_to_root(parent, u); // [u, ..., root]
    std::vector<int> up_v = path_to_root(parent, v); // [v, ..., root]
    std::vector<bool> on_u(parent.size(), false);
    for (int x : up_u) on_u[x] = true;
    size_t v_cut = 0;
    while (!on_u[up_v[v_cut]]) ++v_cut;
    const int base = up_v[v_cut];
    size_t u_cut = 0;
    while (up_u[u_cut] != base) ++u_cut;

    std::vector<int> cycle;
    cycle.reserve(u_cut + v_cut + 1);
    for (size_t i = u_cut + 1; i-- > 0;) cycle.push_back(up_u[i]); // base, ..., u
    for (size_t i = 0; i < v_cut; ++i) cycle.push_back(up_v[i]);   // v, ..., child of base
    assert(cycle.size() % 2 == 1);
    return cycle;
}

bool contract_and_recurse(const Graph& g, std::vector<int>& mate, int root,
                          const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    const int base = cycle[0];
    std::vector<bool> in_cycle(n, false);
    for (int x : cycle) in_cycle[x] = true;

    // Vertices outside the cycle keep relative order; the contracted vertex
    // goes last.
    std::vector<int> old_to_new(n, -1);
    std::vector<int> new_to_old;
    for (int v = 0; v < n; ++v) {
        if (!in_cycle[v]) {
            old_to_new[v] = static_cast<int>(new_to_old.size());
            new_to_old.push_back(v);
        }
    }
    const int contracted = static_cast<int>(new_to_old.size());
    for (int x : cycle) old_to_new[x] = contracted;

    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    seen.reserve(g.edge_count() * 2);
    for (auto [a, b] : g.edges()) {
        int x = old_to_new[a], y = old_to_new[b];
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        if (!seen.insert(static_cast<long long>(x) * (contracted + 1) + y).second) continue;
        edges.emplace_back(x, y);
    }
    Graph contracted_graph(contracted + 1, std::move(edges));

    std::vector<int> contracted_mate(contracted + 1, -1);
    for (int v = 0; v < n; ++v) {
        int w = mate[v];
        if (w < 0 || w < v) continue;
        bool v_in = in_cycle[v], w_in = in_cycle[w];
        if (v_in && w_in) continue; // interior cycle edge, drops out
        if (v_in || w_in) {
            assert((v_in ? v : w) == base); // only the base may be matched outward
            int outside = v_in ? w : v;
            contracted_mate[contracted] = old_to_new[outside];
            contracted_mate[old_to_new[outside]] = contracted;
        } else {
            contracted_mate[old_to_new[v]] = old_to_new[w];
            contracted_mate[old_to_new[w]] = old_to_new[v];
        }
    }

    int new_root = in_cycle[root] ? contracted : old_to_new[root];
    if (!augment_from(contracted_graph, contracted_mate, new_root)) return false;

    // Expand: copy the contracted pairs back, then rematch the cycle so the
    // vertex carrying the external matched edge (or the base) stays exposed
    // to the cycle-internal pairs.
    std::vector<int> expanded(n, -1);
    int attach = base;
    for (int p = 0; p <= contracted; ++p) {
        int q = contracted_mate[p];
        if (q < 0 || q < p) continue;
        if (p == contracted || q == contracted) {
            int outside = new_to_old[p == contracted ? q : p];
            int w = -1;
            for (int x : cycle) {
                if (g.has_edge(x, outside) && (w < 0 || x < w)) w = x;
            }
            assert(w >= 0);
            expanded[w] = outside;
            expanded[outside] = w;
            attach = w;
        } else {
            int a = new_to_old[p], b = new_to_old[q];
            expanded[a] = b;
            expanded[b] = a;
        }
    }
    const int len = static_cast<int>(cycle.size());
    int j = 0;
    while (cycle[j] != attach) ++j;
    for (int t = 1; t < len; t += 2) {
        int a = cycle[(j + t) % len];
        int b = cycle[(j + t + 1) % len];
        expanded[a] = b;
        expanded[b] = a;
    }
    mate = std::move(expanded);
    return true;
}

bool augment_from(const Graph& g, std::vector<int>& mate, int root) {
    const int n = g.vertex_count();
    enum : std::int8_t { kUnlabeled = 0, kEven = 1, kOdd = 2 };
    std::vector<std::int8_t> label(n, kUnlabeled);
    std::vector<int> parent(n, -1);
    label[root] = kEven;
    std::deque<int> queue{root};

    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (w == mate[u]) continue;
            if (label[w] == kEven) {
                std::vector<int> cycle = blossom_cycle(parent, u, w);
                return contract_and_recurse(g, mate, root, cycle);
            }
            if (label[w] == kOdd) continue;
            if (mate[w] < 0) {
                std::vector<int> path{w};
                std::vector<int> stem = path_to_root(parent, u);
                path.insert(path.end(), stem.begin(), stem.end());
                flip_path(mate, path);
                return true;
            }
            label[w] = kOdd;
            parent[w] = u;
            int next = mate[w];
            label[next] = kEven;
            parent[next] = w;
            queue.push_back(next);
        }
    }
    return false;
}

Matching general_matching(const Graph& g) {
    Matching m(g.vertex_count());
    greedy_seed(g, m);
    for (int r = 0; r < g.vertex_count(); ++r) {
        if (m.mate[r] < 0 && g.degree(r) > 0) augment_from(g, m.mate, r);
    }
    return m;
}

// Translates g's mate map onto G - v: the pair covering v (if any) is
// dissolved, remaining ids shift per the deletion renumbering.
Matching translate_minus_vertex(const Matching& m, int n, int v) {
    Matching out(n - 1);
    for (int u = 0; u < n; ++u) {
        int w = m.mate[u];
        if (u == v || w < 0 || w == v || w < u) continue;
        int a = u > v ? u - 1 : u;
        int b = w > v ? w - 1 : w;
        out.mate[a] = b;
        out.mate[b] = a;
    }
    return out;
}

} // namespace

Matching maximum_matching(const Graph& g) {
    BipartitionResult parts = bipartition(g);
    if (parts.is_bipartite()) return bipartite_matching(g, *parts.coloring);
    return general_matching(g);
}

DeletionAnalysis analyze_delete(const Graph& g, const Matching& matching, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    const int mu = matching.size();

    DeletionAnalysis result;
    result.graph = induced_delete(g, v);
    result.matching = translate_minus_vertex(matching, n, v);

    if (matching.mate[v] < 0) {
        result.mu = mu; // matching untouched, still maximum
    } else {
        int widowed = matching.mate[v];
        int w = widowed > v ? widowed - 1 : widowed;
        bool augmented = augment_from(result.graph, result.matching.mate, w);
        result.mu = augmented ? mu : mu - 1;
    }
    assert(result.mu == mu || result.mu == mu - 1);
    return result;
}

int mu_after_delete(const Graph& g, const Matching& matching, int v) {
    return analyze_delete(g, matching, v).mu;
}

bool has_perfect_matching(const Graph& g, const Matching& matching) {
    return 2 * matching.size() == g.vertex_count();
}

} // namespace kecore
