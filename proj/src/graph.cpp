#include "kecore/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "kecore/errors.hpp"

namespace kecore {

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < universe(); ++v)
        if (bits_[v]) out.push_back(v);
    return out;
}

void VertexSet::intersect_with(const VertexSet& other) {
    if (other.universe() != universe())
        throw std::invalid_argument("vertex sets over different universes");
    count_ = 0;
    for (int v = 0; v < universe(); ++v) {
        bits_[v] = bits_[v] && other.bits_[v];
        if (bits_[v]) ++count_;
    }
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int v : ids) s.add(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
}

VertexSet TwoColoring::part(std::uint8_t which) const {
    VertexSet s(static_cast<int>(side.size()));
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == which) s.add(v);
    return s;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate edge");
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

namespace {

bool data_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false; // blank
}

void parse_two_ints(const std::string& line, int lineno, const char* what, long& a, long& b) {
    std::istringstream iss(line);
    std::string extra;
    if (!(iss >> a >> b))
        throw ParseError(lineno, std::string("malformed ") + what + ": '" + line + "'");
    if (iss >> extra)
        throw ParseError(lineno, std::string("trailing tokens after ") + what + ": '" + line + "'");
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        parse_two_ints(line, lineno, "header (expected 'n m')", n, m);
        if (n < 0 || m < 0)
            throw ParseError(lineno, "header counts must be non-negative");
        break;
    }
    if (n < 0) throw ParseError(lineno, "missing 'n m' header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    std::unordered_set<long long> seen;
    seen.reserve(static_cast<size_t>(m) * 2);

    while (static_cast<long>(edges.size()) < m && std::getline(in, line)) {
        ++lineno;
        if (!data_line(line)) continue;
        long u, v;
        parse_two_ints(line, lineno, "edge (expected 'u v')", u, v);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert(static_cast<long long>(lo) * n + hi).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(lo) + " " + std::to_string(hi));
        edges.emplace_back(lo, hi);
    }
    if (static_cast<long>(edges.size()) < m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(edges.size()));

    while (std::getline(in, line)) {
        ++lineno;
        if (data_line(line))
            throw ParseError(lineno, "unexpected data after " + std::to_string(m) + " edges");
    }

    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream iss(text);
    return parse_graph(iss);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_graph(in);
}

std::string to_edge_list(const Graph& g, const std::vector<std::string>& header_comments) {
    std::ostringstream out;
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph induced_delete(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(n - 1, std::move(edges));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    VertexSet out = s;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!s.contains(v)) continue;
        for (int w : g.neighbors(v)) out.add(w);
    }
    return out;
}

BipartitionResult bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> depth(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<std::uint8_t> side(n, 0);

    for (int root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    side[w] = static_cast<std::uint8_t>(depth[w] % 2);
                    queue.push_back(w);
                } else if (depth[w] % 2 == depth[u] % 2) {
                    // Odd closed walk: u up to the root, root down to w, w back to u.
                    std::vector<int> walk;
                    for (int x = u; x != -1; x = parent[x]) walk.push_back(x);
                    std::vector<int> down;
                    for (int x = w; x != -1; x = parent[x]) down.push_back(x);
                    std::reverse(down.begin(), down.end());
                    walk.insert(walk.end(), down.begin() + 1, down.end()); // skip repeated root
                    walk.push_back(u);
                    return BipartitionResult{std::nullopt, std::move(walk)};
                }
            }
        }
    }
    return BipartitionResult{TwoColoring{std::move(side)}, {}};
}

} // namespace kecore
