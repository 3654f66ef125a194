#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "toric/chordal_bipartite.hpp"
#include "toric/errors.hpp"
#include "toric/homology.hpp"
#include "toric/toric_ideal.hpp"

using namespace toric;

static const FieldSpec kQ = FieldSpec::rationals();

namespace {

// the reference ordering of the 4x5 matrix: rows x1..x4, columns y1..y5
BiadjacencyMatrix example45_matrix() {
    Graph g = testhelp::example45();
    return biadjacency_matrix(g, {0, 4, 5, 8}, {1, 2, 3, 6, 7});
}

std::set<std::pair<std::string, std::string>> edge_labels(
    const InitialIdealGraph& h) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : h.edges)
        out.emplace(h.vertex_label(a), h.vertex_label(b));
    return out;
}

} // namespace

TEST_CASE("gamma pattern scan") {
    BiadjacencyMatrix a;
    a.rows = 2;
    a.cols = 2;
    a.entries = {{1, 1}, {1, 0}};
    auto w = find_gamma_pattern(a);
    REQUIRE(w.has_value());
    CHECK(w->row_i == 0);
    CHECK(w->row_j == 1);

    a.entries = {{1, 1}, {0, 1}};
    CHECK_FALSE(find_gamma_pattern(a).has_value());
}

TEST_CASE("explicit biadjacency construction") {
    Graph g = testhelp::example45();
    auto m = example45_matrix();
    CHECK(m.rows == 4);
    CHECK(m.cols == 5);
    CHECK(m.entries ==
          std::vector<std::vector<int>>{{1, 1, 1, 0, 0},
                                        {1, 1, 1, 0, 0},
                                        {0, 1, 1, 1, 1},
                                        {0, 1, 1, 1, 1}});
    CHECK_FALSE(find_gamma_pattern(m).has_value());

    // mixed sides rejected
    CHECK_THROWS_AS(biadjacency_matrix(g, {0, 1}, {2, 3}), argument_error);
}

TEST_CASE("gamma-free ordering") {
    auto gf = gamma_free_order(testhelp::example45());
    REQUIRE(gf.success);
    CHECK_FALSE(find_gamma_pattern(gf.matrix).has_value());

    // all-ones matrices are trivially gamma-free
    auto kf = gamma_free_order(complete_bipartite(3, 4));
    REQUIRE(kf.success);
    CHECK(kf.matrix.rows == 3);

    // C_6 has no gamma-free ordering
    auto c6 = gamma_free_order(cycle_graph(6));
    CHECK_FALSE(c6.success);
    REQUIRE(c6.witness.has_value());

    CHECK_THROWS_AS(gamma_free_order(cycle_graph(5)), argument_error);
}

TEST_CASE("initial-ideal graph of the 4x5 example") {
    auto h = initial_ideal_graph(example45_matrix());
    CHECK(h.vertices.size() == 14);
    CHECK(h.edges.size() == 13);
    CHECK(edge_labels(h) ==
          std::set<std::pair<std::string, std::string>>{
              {"e_{1,2}", "e_{2,1}"},
              {"e_{1,3}", "e_{2,1}"},
              {"e_{1,3}", "e_{2,2}"},
              {"e_{1,3}", "e_{3,2}"},
              {"e_{1,3}", "e_{4,2}"},
              {"e_{2,3}", "e_{3,2}"},
              {"e_{2,3}", "e_{4,2}"},
              {"e_{3,3}", "e_{4,2}"},
              {"e_{3,4}", "e_{4,2}"},
              {"e_{3,4}", "e_{4,3}"},
              {"e_{3,5}", "e_{4,2}"},
              {"e_{3,5}", "e_{4,3}"},
              {"e_{3,5}", "e_{4,4}"}});

    auto binomials = groebner_binomials(h);
    CHECK(binomials.size() == 13);
    CHECK(std::find(binomials.begin(), binomials.end(),
                    "e_{1,2}*e_{2,1} - e_{1,1}*e_{2,2}") != binomials.end());
}

TEST_CASE("initial-ideal graph edge cases") {
    auto gf = gamma_free_order(complete_bipartite(2, 2));
    auto h = initial_ideal_graph(gf.matrix);
    REQUIRE(h.edges.size() == 1);
    CHECK(h.vertex_label(h.edges[0].first) == "e_{1,2}");
    CHECK(h.vertex_label(h.edges[0].second) == "e_{2,1}");

    // no all-ones 2x2 block: edgeless H
    Graph match = parse_edge_list(std::string("x1 y1\nx2 y2\n"));
    auto mf = gamma_free_order(match);
    REQUIRE(mf.success);
    CHECK(initial_ideal_graph(mf.matrix).edges.empty());

    BiadjacencyMatrix bad;
    bad.rows = bad.cols = 2;
    bad.entries = {{1, 1}, {1, 0}};
    CHECK_THROWS_AS(initial_ideal_graph(bad), argument_error);
}

TEST_CASE("H for K_{2,d} has d(d-1)/2 edges") {
    for (int d = 2; d <= 7; ++d) {
        auto gf = gamma_free_order(complete_bipartite(2, d));
        auto h = initial_ideal_graph(gf.matrix);
        CHECK(static_cast<int>(h.edges.size()) == d * (d - 1) / 2);
    }
}

TEST_CASE("co-chordal cover of the 4x5 example") {
    auto h = initial_ideal_graph(example45_matrix());
    auto cover = cochordal_cover(h);
    REQUIRE(cover.subgraph_edges.size() == 3);
    CHECK(cover.subgraph_edges[0].size() == 5);
    CHECK(cover.subgraph_edges[1].size() == 2);
    CHECK(cover.subgraph_edges[2].size() == 6);

    // soundness re-checked here: parts partition E_H, complements chordal
    std::set<std::pair<int, int>> all;
    for (size_t k = 0; k < cover.subgraph_edges.size(); ++k) {
        for (const auto& e : cover.subgraph_edges[k]) CHECK(all.insert(e).second);
        CHECK(is_chordal(complement(cover.subgraphs[k])).chordal);
    }
    CHECK(all.size() == h.edges.size());
}

TEST_CASE("co-chordal cover edge cases") {
    auto k22 = initial_ideal_graph(gamma_free_order(complete_bipartite(2, 2)).matrix);
    auto cover = cochordal_cover(k22);
    REQUIRE(cover.subgraph_edges.size() == 1);
    CHECK(cover.subgraph_edges[0].size() == 1);

    Graph match = parse_edge_list(std::string("x1 y1\nx2 y2\n"));
    auto hm = initial_ideal_graph(gamma_free_order(match).matrix);
    for (const auto& part : cochordal_cover(hm).subgraph_edges)
        CHECK(part.empty());
}

TEST_CASE("regularity upper bound") {
    auto ex = regularity_upper_bound(testhelp::example45());
    CHECK(ex.bound == 4);
    CHECK_FALSE(ex.zero_ideal);

    CHECK(regularity_upper_bound(complete_bipartite(2, 4)).bound == 2);
    CHECK(regularity_upper_bound(complete_bipartite(3, 3)).bound == 3);
    CHECK(regularity_upper_bound(complete_bipartite(4, 2)).bound == 2);

    // a star prunes away entirely: zero toric ideal
    CHECK(regularity_upper_bound(complete_bipartite(1, 5)).zero_ideal);

    CHECK_THROWS_AS(regularity_upper_bound(cycle_graph(6)), argument_error);
}

TEST_CASE("upper bound is isomorphism invariant") {
    Graph base = testhelp::example45();
    std::mt19937 rng(31);
    for (int t = 0; t < 25; ++t) {
        std::vector<int> perm(base.vertex_count());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> labels(base.vertex_count());
        for (int v = 0; v < base.vertex_count(); ++v)
            labels[perm[v]] = base.label(v);
        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : base.edges())
            edges.emplace_back(perm[u], perm[v]);
        Graph g(std::move(labels), std::move(edges));
        CHECK(regularity_upper_bound(g).bound == 4);
    }
}

TEST_CASE("combined bounds") {
    auto k33 = regularity_bounds(complete_bipartite(3, 3), 6, 0, kQ);
    CHECK(*k33.lower == 3);
    CHECK(*k33.upper == 3);
    CHECK(*k33.exact == 3);

    auto k23 = regularity_bounds(complete_bipartite(2, 3), 5, 0, kQ);
    CHECK(*k23.lower == 2);
    CHECK(*k23.upper == 2);
    CHECK(*k23.exact == 2);

    // without a toric table the 4x5 example stays a strict interval
    auto ex = regularity_bounds(testhelp::example45(), 9, 0, kQ);
    CHECK(*ex.lower == 2);
    CHECK(*ex.upper == 4);
    CHECK_FALSE(ex.exact.has_value());

    auto zero = regularity_bounds(path_graph(4), 4, 4, kQ);
    CHECK(zero.zero_ideal);
}
