#include "toric/chordal_bipartite.hpp"

#include <algorithm>
#include <numeric>

#include "toric/errors.hpp"

namespace toric {

std::optional<GammaWitness> find_gamma_pattern(const BiadjacencyMatrix& a) {
    for (int i = 0; i < a.rows; ++i)
        for (int j = i + 1; j < a.rows; ++j)
            for (int k = 0; k < a.cols; ++k)
                for (int l = k + 1; l < a.cols; ++l)
                    if (a.at(i, k) && a.at(i, l) && a.at(j, k) && !a.at(j, l))
                        return GammaWitness{i, j, k, l};
    return std::nullopt;
}

BiadjacencyMatrix biadjacency_matrix(const Graph& g,
                                     const std::vector<int>& row_order,
                                     const std::vector<int>& col_order) {
    for (const auto& [u, v] : g.edges()) {
        bool ur = std::find(row_order.begin(), row_order.end(), u) != row_order.end();
        bool vr = std::find(row_order.begin(), row_order.end(), v) != row_order.end();
        if (ur == vr)
            throw argument_error(
                "biadjacency_matrix: orders do not split a bipartition");
    }
    BiadjacencyMatrix a;
    a.rows = static_cast<int>(row_order.size());
    a.cols = static_cast<int>(col_order.size());
    a.row_perm = row_order;
    a.col_perm = col_order;
    a.entries.assign(a.rows, std::vector<int>(a.cols, 0));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            a.entries[i][j] = g.has_edge(row_order[i], col_order[j]) ? 1 : 0;
    return a;
}

namespace {

BiadjacencyMatrix build_matrix(const Graph& g, const Bipartition& bp) {
    return biadjacency_matrix(g, bp.left, bp.right);
}

BiadjacencyMatrix apply_perms(const BiadjacencyMatrix& a,
                              const std::vector<int>& rp,
                              const std::vector<int>& cp) {
    BiadjacencyMatrix out;
    out.rows = a.rows;
    out.cols = a.cols;
    out.entries.assign(a.rows, std::vector<int>(a.cols, 0));
    out.row_perm.resize(a.rows);
    out.col_perm.resize(a.cols);
    for (int i = 0; i < a.rows; ++i) {
        out.row_perm[i] = a.row_perm[rp[i]];
        for (int j = 0; j < a.cols; ++j) out.entries[i][j] = a.entries[rp[i]][cp[j]];
    }
    for (int j = 0; j < a.cols; ++j) out.col_perm[j] = a.col_perm[cp[j]];
    return out;
}

// 0/1-vector heuristic order: u before v when the last differing coordinate
// has u = 1.  Only the verified postcondition matters, not this convention.
bool vec_before(const std::vector<int>& u, const std::vector<int>& v) {
    for (int k = static_cast<int>(u.size()) - 1; k >= 0; --k)
        if (u[k] != v[k]) return u[k] == 1;
    return false;
}

BiadjacencyMatrix sort_to_fixpoint(BiadjacencyMatrix a) {
    const int max_iter = 2 * (a.rows + a.cols);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        std::vector<int> rp(a.rows);
        std::iota(rp.begin(), rp.end(), 0);
        std::stable_sort(rp.begin(), rp.end(), [&](int x, int y) {
            return vec_before(a.entries[x], a.entries[y]);
        });
        for (int i = 0; i < a.rows; ++i) changed |= rp[i] != i;

        std::vector<std::vector<int>> cols(a.cols, std::vector<int>(a.rows));
        for (int j = 0; j < a.cols; ++j)
            for (int i = 0; i < a.rows; ++i) cols[j][i] = a.entries[rp[i]][j];
        std::vector<int> cp(a.cols);
        std::iota(cp.begin(), cp.end(), 0);
        std::stable_sort(cp.begin(), cp.end(), [&](int x, int y) {
            return vec_before(cols[x], cols[y]);
        });
        for (int j = 0; j < a.cols; ++j) changed |= cp[j] != j;

        a = apply_perms(a, rp, cp);
        if (!changed) break;
    }
    return a;
}

} // namespace

GammaFreeResult gamma_free_order(const Graph& g, int perm_cap) {
    auto bp = bipartition_of(g);
    if (!bp) throw argument_error("gamma_free_order: graph is not bipartite");
    GammaFreeResult res;
    BiadjacencyMatrix base = build_matrix(g, *bp);

    BiadjacencyMatrix sorted = sort_to_fixpoint(base);
    if (!find_gamma_pattern(sorted)) {
        res.success = true;
        res.matrix = std::move(sorted);
        return res;
    }

    if (base.rows > perm_cap || base.cols > perm_cap)
        throw capability_error(
            "gamma_free_order: sort heuristic failed and matrix exceeds the "
            "permutation-search cap");

    std::vector<int> rp(base.rows), cp(base.cols);
    std::iota(rp.begin(), rp.end(), 0);
    do {
        std::iota(cp.begin(), cp.end(), 0);
        do {
            BiadjacencyMatrix cand = apply_perms(base, rp, cp);
            if (!find_gamma_pattern(cand)) {
                res.success = true;
                res.matrix = std::move(cand);
                return res;
            }
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));

    // no ordering works: g is not chordal bipartite
    res.matrix = base;
    res.witness = find_gamma_pattern(base);
    return res;
}

int InitialIdealGraph::vertex_id(int i, int j) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(),
                               std::make_pair(i, j));
    if (it == vertices.end() || *it != std::make_pair(i, j))
        throw argument_error("InitialIdealGraph: no vertex at that position");
    return static_cast<int>(it - vertices.begin());
}

std::string InitialIdealGraph::vertex_label(int k) const {
    return "e_{" + std::to_string(vertices[k].first + 1) + "," +
           std::to_string(vertices[k].second + 1) + "}";
}

Graph InitialIdealGraph::as_graph() const {
    std::vector<std::string> labels;
    for (int k = 0; k < static_cast<int>(vertices.size()); ++k)
        labels.push_back(vertex_label(k));
    return Graph(std::move(labels), edges);
}

InitialIdealGraph initial_ideal_graph(const BiadjacencyMatrix& a) {
    if (find_gamma_pattern(a))
        throw argument_error("initial_ideal_graph: matrix is not Gamma-free");
    InitialIdealGraph h;
    h.matrix = a;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j)) h.vertices.emplace_back(i, j);
    for (int i = 0; i < a.rows; ++i)
        for (int k = i + 1; k < a.rows; ++k)
            for (int j = 0; j < a.cols; ++j)
                for (int l = j + 1; l < a.cols; ++l)
                    if (a.at(i, j) && a.at(i, l) && a.at(k, j) && a.at(k, l))
                        h.edges.emplace_back(h.vertex_id(i, l), h.vertex_id(k, j));
    return h;
}

std::vector<std::string> groebner_binomials(const InitialIdealGraph& h) {
    std::vector<std::string> out;
    for (const auto& [ur, ll] : h.edges) {
        auto [a, d] = h.vertices[ur];
        auto [c, b] = h.vertices[ll];
        auto var = [](int i, int j) {
            return "e_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
        };
        out.push_back(var(a, d) + "*" + var(c, b) + " - " + var(a, b) + "*" +
                      var(c, d));
    }
    return out;
}

CochordalCover cochordal_cover(const InitialIdealGraph& h) {
    CochordalCover cover;
    const int n_rows = h.matrix.rows;
    for (int i = 0; i + 1 < n_rows; ++i) {
        // H_{i+1}: edges whose upper-right endpoint sits on row i,
        // over the vertex set of all positions on rows >= i
        std::vector<int> keep;
        for (int k = 0; k < static_cast<int>(h.vertices.size()); ++k)
            if (h.vertices[k].first >= i) keep.push_back(k);
        std::vector<int> local(h.vertices.size(), -1);
        std::vector<std::string> labels;
        for (int k : keep) {
            local[k] = static_cast<int>(labels.size());
            labels.push_back(h.vertex_label(k));
        }
        std::vector<std::pair<int, int>> edges, orig_edges;
        for (const auto& [ur, ll] : h.edges)
            if (h.vertices[ur].first == i) {
                edges.emplace_back(local[ur], local[ll]);
                orig_edges.emplace_back(ur, ll);
            }
        Graph sub(std::move(labels), std::move(edges));
        ChordalityResult chord = is_chordal(complement(sub));
        if (!chord.chordal)
            throw invariant_error(
                "cochordal_cover: subgraph H_" + std::to_string(i + 1) +
                " has a non-chordal complement (implementation falsified)");
        cover.subgraph_edges.push_back(std::move(orig_edges));
        cover.subgraphs.push_back(std::move(sub));
    }
    // soundness: the parts partition E_H
    size_t covered = 0;
    for (const auto& part : cover.subgraph_edges) covered += part.size();
    if (covered != h.edges.size())
        throw invariant_error("cochordal_cover: parts do not partition E_H");
    return cover;
}

namespace {

Graph prune_leaves(const Graph& g, bool iterate) {
    Graph cur = g;
    for (;;) {
        std::vector<int> keep;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (cur.degree(v) != 1) keep.push_back(v);
        if (static_cast<int>(keep.size()) == cur.vertex_count()) break;
        cur = induced_subgraph(cur, keep);
        if (!iterate) break;
    }
    return cur;
}

int side_bound(const Graph& g, const std::vector<int>& side) {
    int deg_one = 0;
    for (int v : side)
        if (g.degree(v) == 1) ++deg_one;
    return static_cast<int>(side.size()) - deg_one;
}

} // namespace

UpperBoundResult regularity_upper_bound(const Graph& g) {
    GammaFreeResult gf = gamma_free_order(g);
    if (!gf.success)
        throw argument_error(
            "regularity_upper_bound: graph is not chordal bipartite (a "
            "Gamma pattern survives every ordering)");
    UpperBoundResult res;
    auto bp = bipartition_of(g);
    res.bipartition = *bp;
    res.bound = std::min(side_bound(g, bp->left), side_bound(g, bp->right));

    Graph pruned = prune_leaves(g, true);
    if (pruned.edge_count() == 0 || is_zero_toric_ideal(pruned)) {
        res.zero_ideal = true;
        res.fully_pruned_bound = 0;
        res.status = "zero toric ideal (regularity undefined)";
        return res;
    }
    auto pruned_bp = bipartition_of(pruned);
    res.fully_pruned_bound =
        std::min(side_bound(pruned, pruned_bp->left),
                 side_bound(pruned, pruned_bp->right));

    // certificate: co-chordal cover of the pruned graph's H, rows on the
    // smaller side so the cover has at most min - 1 parts
    GammaFreeResult pf = gamma_free_order(pruned);
    if (!pf.success)
        throw invariant_error("regularity_upper_bound: pruning broke chordal bipartiteness");
    BiadjacencyMatrix m = pf.matrix;
    if (m.rows > m.cols) {
        BiadjacencyMatrix t;
        t.rows = m.cols;
        t.cols = m.rows;
        t.row_perm = m.col_perm;
        t.col_perm = m.row_perm;
        t.entries.assign(t.rows, std::vector<int>(t.cols, 0));
        for (int i = 0; i < t.rows; ++i)
            for (int j = 0; j < t.cols; ++j) t.entries[i][j] = m.entries[j][i];
        m = std::move(t);
    }
    CochordalCover cover = cochordal_cover(initial_ideal_graph(m));
    res.cover_size = static_cast<int>(cover.subgraphs.size());
    if (res.cover_size + 1 > res.bound)
        throw invariant_error("regularity_upper_bound: cover larger than the bound");
    res.status = "ok";
    return res;
}

RegularityBounds regularity_bounds(const Graph& g, int search_cap,
                                   int table_cap, const FieldSpec& field) {
    RegularityBounds out;
    if (is_zero_toric_ideal(g)) {
        out.zero_ideal = true;
        out.status = "zero toric ideal (regularity undefined)";
        return out;
    }
    BicliqueCertificate cert = search_biclique_certificate(g, search_cap);
    if (!cert.empty()) {
        out.lower = lower_bound_from_certificate(g, cert);
        out.lower_certificate = std::move(cert);
    }
    if (bipartition_of(g)) {
        GammaFreeResult gf = gamma_free_order(g);
        if (gf.success) {
            UpperBoundResult ub = regularity_upper_bound(g);
            if (!ub.zero_ideal) out.upper = ub.bound;
        }
    }
    if (out.lower && out.upper && *out.lower == *out.upper) {
        out.exact = *out.upper;
        out.status = "exact (bounds agree)";
        return out;
    }
    if (out.upper && table_cap >= 1) {
        ToricTable tt = toric_betti_table(g, table_cap, field);
        auto reg = regularity_from_table(tt.table);
        if (reg) {
            if (*reg > out.lower.value_or(0)) out.lower = *reg;
            if (*reg == *out.upper) {
                out.exact = *out.upper;
                out.status = "exact (truncated table attains the upper bound)";
                return out;
            }
        }
    }
    out.status = "bounds only";
    return out;
}

} // namespace toric
