#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/complex.hpp"
#include "toric/graph.hpp"
#include "toric/monomial.hpp"

namespace testhelp {

// The 4x5 chordal bipartite graph used throughout: x1, x2 see y1..y3 and
// x3, x4 see y2..y5.
inline const char* kExample45 =
    "x1 y1\nx1 y2\nx1 y3\n"
    "x2 y1\nx2 y2\nx2 y3\n"
    "x3 y2\nx3 y3\nx3 y4\nx3 y5\n"
    "x4 y2\nx4 y3\nx4 y4\nx4 y5\n";

inline toric::Graph example45() {
    return toric::parse_edge_list(std::string(kExample45));
}

// Independent fibre oracle: enumerate all degree-(|alpha|/2) multisets of
// edges by combinations with repetition and keep those mapping to alpha.
inline std::vector<toric::EdgeMonomial> oracle_fibre(
    const toric::Graph& g, const toric::VertexMonomial& alpha) {
    std::vector<toric::EdgeMonomial> out;
    int deg = alpha.total_degree();
    if (deg % 2 != 0) return out;
    int k = deg / 2;
    std::vector<int> expo(g.edge_count(), 0);
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            toric::EdgeMonomial w{expo};
            if (toric::apply_pi(g, w) == alpha) out.push_back(w);
            return;
        }
        for (int e = from; e < g.edge_count(); ++e) {
            ++expo[e];
            self(self, e, left - 1);
            --expo[e];
        }
    };
    rec(rec, 0, k);
    return out;
}

// Chordality oracle: no induced cycle of length >= 4.
inline bool oracle_chordal(const toric::Graph& g) {
    return toric::induced_cycles(g, 4).empty();
}

// Erdos-Renyi-ish random graph on n labelled vertices.
inline toric::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return toric::Graph(std::move(labels), std::move(edges));
}

// Random bipartite graph with sides of size a and b.
inline toric::Graph random_bipartite(std::mt19937& rng, int a, int b, double p) {
    std::vector<std::string> labels;
    for (int v = 0; v < a; ++v) labels.push_back("x" + std::to_string(v + 1));
    for (int v = 0; v < b; ++v) labels.push_back("y" + std::to_string(v + 1));
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (coin(rng)) edges.emplace_back(u, a + v);
    return toric::Graph(std::move(labels), std::move(edges));
}

// pi applied to a uniformly random edge multiset of size k (a guaranteed
// nonempty fibre).
inline toric::VertexMonomial random_realizable_alpha(std::mt19937& rng,
                                                     const toric::Graph& g,
                                                     int k) {
    toric::EdgeMonomial w{std::vector<int>(g.edge_count(), 0)};
    std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
    for (int t = 0; t < k; ++t) ++w.exponents[pick(rng)];
    return toric::apply_pi(g, w);
}

inline std::set<toric::Face> facet_set(const toric::SimplicialComplex& c) {
    return std::set<toric::Face>(c.facets().begin(), c.facets().end());
}

} // namespace testhelp

#endif
