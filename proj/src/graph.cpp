#include "toric/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

Graph::Graph(std::vector<std::string> labels,
             std::vector<std::pair<int, int>> edge_list)
    : labels_(std::move(labels)) {
    const int n = vertex_count();
    for (auto& [u, v] : edge_list) {
        if (u == v) throw argument_error("loop edge at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw argument_error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    auto intern = [&](const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(s);
        index.emplace(s, id);
        return id;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ls >> b))
            throw parse_error("missing second vertex at line " + std::to_string(lineno));
        if (ls >> extra)
            throw parse_error("trailing token at line " + std::to_string(lineno));
        if (a == b)
            throw parse_error("loop at line " + std::to_string(lineno));
        int ia = intern(a);
        int ib = intern(b);
        edges.emplace_back(ia, ib);
    }
    return Graph(std::move(labels), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    std::vector<int> keep(w);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> pos(g.vertex_count(), -1);
    std::vector<std::string> labels;
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count())
            throw argument_error("induced_subgraph: vertex index out of range");
        pos[v] = static_cast<int>(labels.size());
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    return Graph(std::move(labels), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::set<int>& w) {
    return induced_subgraph(g, std::vector<int>(w.begin(), w.end()));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members;
        std::deque<int> queue{s};
        comp[s] = static_cast<int>(out.size());
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            members.push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    queue.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.labels(), std::move(edges));
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    Bipartition bp;
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? bp.left : bp.right).push_back(v);
    return bp;
}

namespace {

// Maximum cardinality search producing a candidate elimination order
// (reversed MCS visit order).
std::vector<int> mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0), visit;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = true;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!done[u]) ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

// Shortest u--w path in g avoiding `blocked`; empty when none exists.
std::vector<int> shortest_path_avoiding(const Graph& g, int u, int w,
                                        const std::vector<bool>& blocked) {
    const int n = g.vertex_count();
    std::vector<int> prev(n, -2);
    std::deque<int> queue{u};
    prev[u] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == w) break;
        for (int x : g.neighbors(v)) {
            if (blocked[x] || prev[x] != -2) continue;
            prev[x] = v;
            queue.push_back(x);
        }
    }
    if (prev[w] == -2) return {};
    std::vector<int> path;
    for (int v = w; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Chordless cycle through two nonadjacent neighbors u, w of v: v plus a
// shortest u--w path dodging the rest of N[v].
CycleCertificate cycle_from_failure(const Graph& g, int v, int u, int w) {
    std::vector<bool> blocked(g.vertex_count(), false);
    blocked[v] = true;
    for (int x : g.neighbors(v))
        if (x != u && x != w) blocked[x] = true;
    std::vector<int> path = shortest_path_avoiding(g, u, w, blocked);
    if (path.empty()) return {};
    CycleCertificate cycle{v};
    cycle.insert(cycle.end(), path.begin(), path.end());
    if (!verify_induced_cycle(g, cycle)) return {};
    return cycle;
}

} // namespace

bool verify_elimination_order(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.vertex_count()) return false;
    std::vector<int> rank(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        if (order[i] < 0 || order[i] >= g.vertex_count() || rank[order[i]] >= 0)
            return false;
        rank[order[i]] = i;
    }
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (rank[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

bool verify_induced_cycle(const Graph& g, const CycleCertificate& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    std::set<int> seen(cycle.begin(), cycle.end());
    if (static_cast<int>(seen.size()) != k) return false;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            if (g.has_edge(cycle[a], cycle[b]) != consecutive) return false;
        }
    }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult res;
    std::vector<int> order = mcs_order(g);
    if (verify_elimination_order(g, order)) {
        res.chordal = true;
        res.elimination_order = std::move(order);
        return res;
    }
    // Extract a certificate from a failing triple of the replay.
    std::vector<int> rank(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        int v = order[i];
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (rank[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a) {
            for (size_t b = a + 1; b < later.size(); ++b) {
                if (g.has_edge(later[a], later[b])) continue;
                CycleCertificate c = cycle_from_failure(g, v, later[a], later[b]);
                if (!c.empty()) {
                    res.cycle = std::move(c);
                    return res;
                }
            }
        }
    }
    throw invariant_error("is_chordal: MCS replay failed but no cycle certificate found");
}

std::vector<CycleCertificate> induced_cycles(const Graph& g, int min_len) {
    // DFS over induced paths rooted at the cycle's smallest vertex.  Interior
    // path vertices are kept non-adjacent to the root, so a root-adjacent
    // extension closes a chordless cycle and is never recursed into.
    std::vector<CycleCertificate> out;
    const int n = g.vertex_count();
    std::vector<int> path;
    std::vector<bool> in_path(n, false);
    std::function<void(int)> dfs = [&](int v) {
        for (int u : g.neighbors(v)) {
            if (in_path[u] || u < path.front()) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(path[i], u)) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path.size() == 1) {
                path.push_back(u);
                in_path[u] = true;
                dfs(u);
                in_path[u] = false;
                path.pop_back();
            } else if (g.has_edge(u, path.front())) {
                if (static_cast<int>(path.size()) + 1 >= min_len && path[1] < u) {
                    path.push_back(u);
                    out.push_back(path);
                    path.pop_back();
                }
            } else {
                path.push_back(u);
                in_path[u] = true;
                dfs(u);
                in_path[u] = false;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        std::fill(in_path.begin(), in_path.end(), false);
        in_path[s] = true;
        dfs(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ChordalBipartiteResult is_chordal_bipartite(const Graph& g, int vertex_cap) {
    ChordalBipartiteResult res;
    if (g.vertex_count() > vertex_cap)
        throw capability_error(
            "is_chordal_bipartite: vertex count above cap; use the gamma-free route");
    auto bp = bipartition_of(g);
    if (!bp) {
        res.reason = "not bipartite";
        return res;
    }
    auto cycles = induced_cycles(g, 6);
    if (!cycles.empty()) {
        res.cycle = cycles.front();
        res.reason = "induced cycle of length >= 6";
        return res;
    }
    res.chordal_bipartite = true;
    res.bipartition = std::move(*bp);
    return res;
}

Graph complete_bipartite(int n, int m) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (int j = 1; j <= m; ++j) labels.push_back("y" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) edges.emplace_back(i, n + j);
    return Graph(std::move(labels), std::move(edges));
}

Graph cycle_graph(int len) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) {
        labels.push_back("v" + std::to_string(i + 1));
        edges.emplace_back(i, (i + 1) % len);
    }
    return Graph(std::move(labels), std::move(edges));
}

Graph path_graph(int len) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) labels.push_back("v" + std::to_string(i + 1));
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(labels), std::move(edges));
}

} // namespace toric
