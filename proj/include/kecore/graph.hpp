#ifndef KECORE_GRAPH_HPP
#define KECORE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kecore {

/// Set of vertices over 0..n-1 with bitset semantics.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(universe, false) {}

    int universe() const { return static_cast<int>(bits_.size()); }
    bool contains(int v) const { return bits_[v]; }

    void add(int v) {
        if (!bits_[v]) {
            bits_[v] = true;
            ++count_;
        }
    }
    void remove(int v) {
        if (bits_[v]) {
            bits_[v] = false;
            --count_;
        }
    }

    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    /// Members in ascending order.
    std::vector<int> members() const;

    void intersect_with(const VertexSet& other);

    bool operator==(const VertexSet& other) const {
        return bits_ == other.bits_;
    }

    static VertexSet of(int universe, std::initializer_list<int> ids);
    static VertexSet full(int universe);

private:
    std::vector<bool> bits_;
    int count_ = 0;
};

/// Proper 2-coloring of a bipartite graph; side is 0 (A) or 1 (B).
struct TwoColoring {
    std::vector<std::uint8_t> side;

    VertexSet part(std::uint8_t which) const;
};

/// Either a valid coloring or an odd closed walk disproving bipartiteness.
/// The walk is a vertex sequence whose consecutive pairs are edges, with
/// first == last and an odd number of edges.
struct BipartitionResult {
    std::optional<TwoColoring> coloring;
    std::vector<int> odd_closed_walk;

    bool is_bipartite() const { return coloring.has_value(); }
};

/// Immutable simple undirected graph with contiguous 0-based vertex ids.
///
/// Edges are stored normalized (u < v) in construction order; adjacency
/// lists are sorted ascending. Construction validates: no self-loops, no
/// duplicate edges, endpoints in range. Once built, a Graph is safe for
/// unlimited concurrent readers.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Parses the edge-list format: '#' comment lines, a "n m" header line,
/// then exactly m lines "u v". Throws ParseError naming the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);

/// Serializes a graph in the edge-list format; `header_comments` lines are
/// emitted first, each prefixed with "# ".
std::string to_edge_list(const Graph& g, const std::vector<std::string>& header_comments = {});

/// Returns G - v. Remaining ids are renumbered by the stable scheme:
/// identity below v, id-1 above v. Throws std::out_of_range on bad v.
Graph induced_delete(const Graph& g, int v);

/// N[s] = s together with every neighbor of a member of s.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// BFS 2-coloring per component (components rooted at ascending ids,
/// root colored A). Produces an odd closed walk when no coloring exists.
BipartitionResult bipartition(const Graph& g);

} // namespace kecore

#endif
