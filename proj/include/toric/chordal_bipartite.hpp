#ifndef TORIC_CHORDAL_BIPARTITE_HPP
#define TORIC_CHORDAL_BIPARTITE_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/graph.hpp"
#include "toric/toric_ideal.hpp"

namespace toric {

/// 0/1 biadjacency matrix of a bipartite graph, with the row/column
/// permutations that produced it from the caller's labels.
struct BiadjacencyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entries;  // entries[i][j] in {0, 1}
    std::vector<int> row_perm;  // row i came from original vertex row_perm[i]
    std::vector<int> col_perm;

    bool at(int i, int j) const { return entries[i][j] != 0; }
};

// A [[1,1],[1,0]] pattern witness: rows i < j, columns k < l.
struct GammaWitness {
    int row_i = -1, row_j = -1, col_k = -1, col_l = -1;
};

// Exhaustive scan; nullopt when the matrix is Gamma-free.
std::optional<GammaWitness> find_gamma_pattern(const BiadjacencyMatrix& a);

// Biadjacency matrix of g with the given explicit row/column vertex
// orders (each listing one side of a bipartition of g).
BiadjacencyMatrix biadjacency_matrix(const Graph& g,
                                     const std::vector<int>& row_order,
                                     const std::vector<int>& col_order);

struct GammaFreeResult {
    bool success = false;
    BiadjacencyMatrix matrix;       // Gamma-free ordering when success
    std::optional<GammaWitness> witness;  // a pattern surviving all orderings
};

// Row/column reordering of the biadjacency matrix with no [[1,1],[1,0]]
// submatrix.  Iterative re-sorting first, exhaustive permutation search as
// fallback (matrices up to perm_cap x perm_cap).  Failure certifies the
// graph is not chordal bipartite.
GammaFreeResult gamma_free_order(const Graph& g, int perm_cap = 7);

/// Vertex e_{i,j} of the initial-ideal graph H sits at matrix position
/// (i, j), 0-based here.
struct InitialIdealGraph {
    BiadjacencyMatrix matrix;
    std::vector<std::pair<int, int>> vertices;  // positions with a 1
    // edges as index pairs into `vertices`; each joins the anti-diagonal of
    // an all-ones 2x2 submatrix, upper-right endpoint first
    std::vector<std::pair<int, int>> edges;

    int vertex_id(int i, int j) const;
    std::string vertex_label(int k) const;
    Graph as_graph() const;
};

InitialIdealGraph initial_ideal_graph(const BiadjacencyMatrix& a);

// The quadratic Groebner binomials e_{a,d}e_{b,c} - e_{a,b}e_{c,d}, one per
// all-ones 2x2 submatrix, rendered as text.
std::vector<std::string> groebner_binomials(const InitialIdealGraph& h);

struct CochordalCover {
    // subgraph_edges[i] = edges of H_{i+1} (indices into h.edges is not kept;
    // these are vertex-id pairs of h)
    std::vector<std::vector<std::pair<int, int>>> subgraph_edges;
    std::vector<Graph> subgraphs;  // each on the vertex set {e_{a,b} : a >= i}
};

// Partition of E_H by the row of each edge's upper-right endpoint; every
// part is verified co-chordal (invariant error otherwise).
CochordalCover cochordal_cover(const InitialIdealGraph& h);

struct UpperBoundResult {
    int bound = 0;               // min{n - r, m - s}
    int fully_pruned_bound = 0;  // same formula after iterated leaf pruning
    int cover_size = 0;
    bool zero_ideal = false;     // pruning left a forest; regularity undefined
    Bipartition bipartition;
    std::string status;
};

// Theorem-backed upper bound for a chordal bipartite graph.
UpperBoundResult regularity_upper_bound(const Graph& g);

// Combined lower/upper/exact bounds; `table_cap` is the toric-table cutoff
// used to try to certify exactness (0 disables the table).
RegularityBounds regularity_bounds(const Graph& g, int search_cap,
                                   int table_cap, const FieldSpec& field);

} // namespace toric

#endif
