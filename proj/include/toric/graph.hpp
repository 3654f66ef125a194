#ifndef TORIC_GRAPH_HPP
#define TORIC_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace toric {

/// A finite simple graph.  Vertices are identified by position; labels are
/// display-only.  Edges are stored as sorted index pairs, deduplicated.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels,
          std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }

    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;  // sorted pairs, sorted list
};

struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;
};

// One induced cycle, listed in cyclic vertex order.
using CycleCertificate = std::vector<int>;

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // perfect elimination order when chordal
    CycleCertificate cycle;              // induced cycle of length >= 4 otherwise
};

struct ChordalBipartiteResult {
    bool chordal_bipartite = false;
    std::optional<Bipartition> bipartition;
    CycleCertificate cycle;  // induced cycle of length >= 6, or an odd cycle
    std::string reason;
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

Graph induced_subgraph(const Graph& g, const std::vector<int>& w);
Graph induced_subgraph(const Graph& g, const std::set<int>& w);

// Components as vertex sets, ordered by smallest contained index.
std::vector<std::vector<int>> connected_components(const Graph& g);

Graph complement(const Graph& g);

// Bipartition with side assignment canonicalized per component (smallest
// vertex of each component goes left); nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition_of(const Graph& g);

ChordalityResult is_chordal(const Graph& g);

// Replays an elimination order; true iff every vertex is simplicial at its turn.
bool verify_elimination_order(const Graph& g, const std::vector<int>& order);

// True iff the listed vertices form an induced cycle (chordless, length >= 4).
bool verify_induced_cycle(const Graph& g, const CycleCertificate& cycle);

// Brute-force recognition at desk scale; graphs above `vertex_cap` are refused.
ChordalBipartiteResult is_chordal_bipartite(const Graph& g, int vertex_cap = 16);

// All induced (chordless) cycles of length >= min_len, for oracle use.
std::vector<CycleCertificate> induced_cycles(const Graph& g, int min_len);

// Convenience constructors for the graphs used throughout.
Graph complete_bipartite(int n, int m);  // labels x1..xn, y1..ym
Graph cycle_graph(int len);
Graph path_graph(int len);

} // namespace toric

#endif
