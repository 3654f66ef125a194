#include "toric/toric_ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toric/errors.hpp"

namespace toric {

std::vector<long long> toric_betti_multigraded(const Graph& g,
                                               const VertexMonomial& alpha,
                                               const FieldSpec& field,
                                               const ToricCaps& caps) {
    SimplicialComplex gamma = gamma_complex(g, alpha, caps.fibre_cap);
    if (gamma.is_void()) return {};
    HomologyDims h = reduced_homology_dims(gamma, field, caps.face_cap);
    std::vector<long long> out;
    for (int i = 0; i <= std::max(h.max_dim, 0); ++i) out.push_back(h.dim(i));
    return out;
}

bool is_zero_toric_ideal(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() > sub.vertex_count()) return false;
        if (sub.edge_count() == sub.vertex_count() && bipartition_of(sub))
            return false;  // the unique cycle is even
    }
    return true;
}

namespace {

// All exponent vectors over `verts` with the given total, written into a
// full-length vector; filtered by the callback.
void enumerate_exponents(const std::vector<int>& verts, int total,
                         std::vector<int>& alpha, size_t idx,
                         const std::function<void()>& emit) {
    if (idx + 1 == verts.size()) {
        alpha[verts[idx]] = total;
        emit();
        alpha[verts[idx]] = 0;
        return;
    }
    for (int c = 0; c <= total; ++c) {
        alpha[verts[idx]] = c;
        enumerate_exponents(verts, total - c, alpha, idx + 1, emit);
    }
    alpha[verts[idx]] = 0;
}

// Necessary condition for a nonempty fibre: each exponent is coverable by
// the neighbors' exponents.
bool degree_feasible(const Graph& g, const std::vector<int>& alpha) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (alpha[v] == 0) continue;
        int nb = 0;
        for (int u : g.neighbors(v)) nb += alpha[u];
        if (nb < alpha[v]) return false;
    }
    return true;
}

} // namespace

ToricTable toric_betti_table(const Graph& g, int max_degree,
                             const FieldSpec& field, const ToricCaps& caps) {
    if (max_degree < 1)
        throw argument_error("toric_betti_table: max_degree must be >= 1");
    ToricTable result;
    result.table.truncated_at = max_degree;
    result.zero_ideal = is_zero_toric_ideal(g);
    if (result.zero_ideal) return result;

    auto process_alpha = [&](const std::vector<int>& exps, int j) {
        if (!degree_feasible(g, exps)) return;
        VertexMonomial alpha{exps};
        SimplicialComplex gamma = gamma_complex(g, alpha, caps.fibre_cap);
        if (gamma.is_void() || gamma.is_cone()) return;
        if (gamma.facets().size() == 1) return;  // simplex: trivial homology
        HomologyDims h = reduced_homology_dims(gamma, field, caps.face_cap);
        for (int d = 0; d <= h.max_dim; ++d)
            if (h.dim(d) > 0) result.table.add(d, j, h.dim(d));
    };

    auto bp = bipartition_of(g);
    std::vector<int> alpha(g.vertex_count(), 0);
    for (int j = 1; j <= max_degree; ++j) {
        if (bp && !bp->left.empty() && !bp->right.empty()) {
            // part degree sums are equal on both sides of a bipartition
            enumerate_exponents(bp->left, j, alpha, 0, [&] {
                enumerate_exponents(bp->right, j, alpha, 0,
                                    [&] { process_alpha(alpha, j); });
            });
        } else {
            std::vector<int> verts(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) verts[v] = v;
            if (!verts.empty())
                enumerate_exponents(verts, 2 * j, alpha, 0,
                                    [&] { process_alpha(alpha, j); });
        }
    }
    return result;
}

std::optional<int> regularity_from_table(const BettiTable& t) {
    if (t.empty()) return std::nullopt;
    return t.regularity();
}

namespace {

// n for an induced K_{n,n} with n >= 2, or 0.
int balanced_biclique_order(const Graph& sub) {
    auto bp = bipartition_of(sub);
    if (!bp) return 0;
    const int n = static_cast<int>(bp->left.size());
    if (n < 2 || bp->right.size() != static_cast<size_t>(n)) return 0;
    if (sub.edge_count() != n * n) return 0;
    if (connected_components(sub).size() != 1) return 0;
    return n;
}

} // namespace

int lower_bound_from_certificate(const Graph& g, const BicliqueCertificate& parts) {
    if (parts.empty())
        throw argument_error("certificate invalid: no parts given");
    std::set<int> all;
    for (const auto& part : parts) {
        for (int v : part) {
            if (v < 0 || v >= g.vertex_count())
                throw argument_error("certificate invalid: vertex out of range");
            if (!all.insert(v).second)
                throw argument_error("certificate invalid: parts are not disjoint");
        }
    }
    // induced graph on the union must split as the disjoint union of parts
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t t = 0; t < parts.size(); ++t)
        for (int v : parts[t]) owner[v] = static_cast<int>(t);
    for (const auto& [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
            throw argument_error(
                "certificate invalid: edge between distinct parts");
    int sum = 0;
    for (const auto& part : parts) {
        int n = balanced_biclique_order(induced_subgraph(g, part));
        if (n < 2)
            throw argument_error(
                "certificate invalid: a part is not an induced K_{n,n} with n >= 2");
        sum += n;
    }
    return sum - static_cast<int>(parts.size() - 1);
}

BicliqueCertificate search_biclique_certificate(const Graph& g, int size_cap) {
    const int n = g.vertex_count();
    if (n > 24)
        throw capability_error("search_biclique_certificate: graph too large");
    // candidate subsets inducing balanced bicliques, as (mask, order n_i)
    std::vector<std::pair<Face, int>> candidates;
    const int max_size = std::min(size_cap, n);
    for (Face mask = 1; mask < (Face(1) << n); ++mask) {
        int sz = face_size(mask);
        if (sz < 4 || sz > max_size || sz % 2 != 0) continue;
        int order = balanced_biclique_order(induced_subgraph(g, face_vertices(mask)));
        if (order >= 2) candidates.emplace_back(mask, order);
    }
    // cross_free[mask] only matters pairwise: two parts are compatible when
    // disjoint and with no g-edge between them
    std::vector<Face> closed(n, 0);
    for (int v = 0; v < n; ++v) {
        closed[v] = Face(1) << v;
        for (int u : g.neighbors(v)) closed[v] |= Face(1) << u;
    }
    auto forbidden = [&](Face mask) {
        Face f = 0;
        for (int v : face_vertices(mask)) f |= closed[v];
        return f;
    };
    std::vector<Face> taboo(candidates.size());
    for (size_t i = 0; i < candidates.size(); ++i)
        taboo[i] = forbidden(candidates[i].first);

    BicliqueCertificate best;
    int best_value = 0;
    std::vector<size_t> chosen;
    std::function<void(size_t, Face, int)> rec = [&](size_t from, Face used,
                                                     int sum) {
        int value = sum - static_cast<int>(chosen.size()) + 1;
        if (!chosen.empty() && value > best_value) {
            best_value = value;
            best.clear();
            for (size_t c : chosen)
                best.push_back(face_vertices(candidates[c].first));
        }
        for (size_t i = from; i < candidates.size(); ++i) {
            if (taboo[i] & used) continue;
            chosen.push_back(i);
            rec(i + 1, used | candidates[i].first, sum + candidates[i].second);
            chosen.pop_back();
        }
    };
    rec(0, 0, 0);
    return best;
}

DominanceResult initial_ideal_betti_dominance(const BettiTable& toric_table,
                                              const BettiTable& monomial_table) {
    if (toric_table.truncated_at >= 0 && monomial_table.truncated_at >= 0 &&
        toric_table.truncated_at != monomial_table.truncated_at)
        throw argument_error("initial_ideal_betti_dominance: degree ranges differ");
    int shared = std::max(toric_table.truncated_at, monomial_table.truncated_at);
    DominanceResult res;
    res.dominated = true;
    for (const auto& [key, value] : toric_table.entries()) {
        if (shared >= 0 && key.second > shared) continue;
        long long other = monomial_table.get(key.first, key.second);
        if (value > other) {
            res.dominated = false;
            res.violations.emplace_back(key.first, key.second, value, other);
        }
    }
    return res;
}

} // namespace toric
