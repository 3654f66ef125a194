// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Each check is exact; no tolerances anywhere.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "property_suites.hpp"
#include "toric/chordal_bipartite.hpp"
#include "toric/k2d.hpp"
#include "toric/knn.hpp"
#include "toric/toric_ideal.hpp"

using namespace toric;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
int g_failures = 0;

struct Criterion {
    std::string name;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start;

    explicit Criterion(std::string n)
        : name(std::move(n)), start(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    template <typename T, typename U>
    void expect_eq(const T& got, const U& want, const std::string& what) {
        if (!(got == static_cast<T>(want))) {
            std::ostringstream msg;
            msg << what << ": got " << got << ", want " << want;
            problems.push_back(msg.str());
        }
    }
    ~Criterion() {
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        std::ostringstream line;
        line << (problems.empty() ? "PASS" : "FAIL") << " " << name << " ("
             << static_cast<int>(secs * 10) / 10.0 << "s)";
        std::cout << line.str() << "\n";
        for (const auto& p : problems) std::cout << "      - " << p << "\n";
        if (!problems.empty()) ++g_failures;
    }
};

void criterion1() {
    Criterion c("1: K_{3,3} Stanley-Reisner Betti table of the fibre complex");
    KnnInstance inst(3);
    auto table = hochster_betti(gamma_complex(inst.graph, inst.alpha), kQ);
    c.expect_eq(table.get(0, 3), 6, "beta_{0,3}");
    c.expect_eq(table.get(1, 5), 9, "beta_{1,5}");
    c.expect_eq(table.get(1, 6), 6, "beta_{1,6}");
    c.expect_eq(table.get(2, 7), 18, "beta_{2,7}");
    c.expect_eq(table.get(3, 8), 9, "beta_{3,8}");
    c.expect_eq(table.get(4, 9), 1, "beta_{4,9}");
    c.expect_eq(table.entries().size(), size_t{6}, "number of nonzero entries");
}

void criterion2() {
    Criterion c("2: K_{3,3} toric Betti table to degree 6");
    auto t = toric_betti_table(complete_bipartite(3, 3), 6, kQ);
    c.expect_eq(t.table.get(0, 2), 9, "beta_{0,2}");
    c.expect_eq(t.table.get(1, 3), 16, "beta_{1,3}");
    c.expect_eq(t.table.get(2, 4), 9, "beta_{2,4}");
    c.expect_eq(t.table.get(3, 6), 1, "beta_{3,6}");
    c.expect_eq(t.table.entries().size(), size_t{4}, "number of nonzero entries");
    auto reg = regularity_from_table(t.table);
    c.expect(reg.has_value(), "regularity defined");
    if (reg) c.expect_eq(*reg, 3, "regularity");
}

void criterion3() {
    Criterion c("3: K_{n,n} nonvanishing certificates (n = 2, 3, 4)");
    for (int n = 2; n <= 3; ++n) {
        auto rep = verify_nonvanishing(KnnInstance(n), kQ);
        std::string tag = "n=" + std::to_string(n) + " ";
        c.expect(rep.shelling_verified, tag + "shelling order verified");
        c.expect_eq(rep.checks.size(), size_t{3}, tag + "all three checks run");
        for (const auto& chk : rep.checks)
            c.expect(chk.holds, tag + chk.name + " nonzero");
        c.expect(rep.all_hold, tag + "chain holds");
        c.expect_eq(rep.regularity_lower_bound, n, tag + "regularity bound");
    }
    auto rep4 = verify_nonvanishing(KnnInstance(4), kQ);
    c.expect(rep4.shelling_verified, "n=4 shelling order verified");
    c.expect(!rep4.checks.empty() && rep4.checks[0].holds,
             "n=4 restricted-Taylor homology nonzero");
    c.expect_eq(rep4.checks.size(), size_t{1},
                "n=4 Hochster-route checks skipped");
}

void criterion4() {
    Criterion c("4: 4x5 example pipeline");
    Graph g = testhelp::example45();

    auto gf = gamma_free_order(g);
    c.expect(gf.success, "gamma-free ordering found");
    c.expect(!find_gamma_pattern(gf.matrix).has_value(),
             "ordering passes the exhaustive pattern scan");

    // the reference ordering: rows x1..x4, columns y1..y5
    auto matrix = biadjacency_matrix(g, {0, 4, 5, 8}, {1, 2, 3, 6, 7});
    c.expect(!find_gamma_pattern(matrix).has_value(),
             "reference ordering verifies gamma-free");
    auto h = initial_ideal_graph(matrix);
    c.expect_eq(h.edges.size(), size_t{13}, "H edge count");

    auto cover = cochordal_cover(h);  // co-chordality asserted inside
    c.expect_eq(cover.subgraph_edges.size(), size_t{3}, "cover part count");
    if (cover.subgraph_edges.size() == 3) {
        c.expect_eq(cover.subgraph_edges[0].size(), size_t{5}, "H_1 size");
        c.expect_eq(cover.subgraph_edges[1].size(), size_t{2}, "H_2 size");
        c.expect_eq(cover.subgraph_edges[2].size(), size_t{6}, "H_3 size");
        for (size_t k = 0; k < 3; ++k)
            c.expect(is_chordal(complement(cover.subgraphs[k])).chordal,
                     "H_" + std::to_string(k + 1) + " complement chordal");
    }

    c.expect_eq(regularity_upper_bound(g).bound, 4, "upper bound");

    auto cert = search_biclique_certificate(g, g.vertex_count());
    int lower = cert.empty() ? 0 : lower_bound_from_certificate(g, cert);
    // The required value 3 needs two induced K_{2,2}'s with no cross edges;
    // exhaustive search shows every pair in this graph is cross-connected,
    // so the best verifiable certificate is a single K_{2,2}.
    c.expect_eq(lower, 3, "biclique-search lower bound");

    auto table = toric_betti_table(g, 8, kQ);
    auto reg = regularity_from_table(table.table);
    c.expect(reg.has_value(), "toric table nonempty at cutoff 8");
    if (reg) c.expect_eq(*reg, 4, "regularity from the truncated toric table");
}

void criterion5() {
    Criterion c("5: exact regularity of complete bipartite graphs");
    const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {2, 4}, {3, 3}};
    for (auto [n, m] : shapes) {
        std::string tag = "K_{" + std::to_string(n) + "," + std::to_string(m) + "} ";
        auto b = regularity_bounds(complete_bipartite(n, m), n + m, 0, kQ);
        c.expect(b.lower && b.upper && b.exact, tag + "all bounds present");
        if (b.exact) c.expect_eq(*b.exact, std::min(n, m), tag + "exact value");
        if (b.lower) c.expect_eq(*b.lower, std::min(n, m), tag + "lower bound");
        c.expect(!b.lower_certificate.empty(), tag + "lower certificate present");
        int verified = lower_bound_from_certificate(complete_bipartite(n, m),
                                                    b.lower_certificate);
        c.expect_eq(verified, std::min(n, m), tag + "certificate re-verifies");
    }
}

void criterion6() {
    Criterion c("6: K_{2,d} oracle equivalence for d = 2..7");
    for (int d = 2; d <= 7; ++d) {
        std::string tag = "d=" + std::to_string(d) + " ";
        auto rep = k2d_report(d, kQ);
        c.expect(rep.linear_resolution, tag + "no off-strand Hochster entries");
        for (const auto& row : rep.rows) {
            c.expect(row.strand == row.hochster,
                     tag + "strand = Hochster at i=" + std::to_string(row.i));
            c.expect(row.strand == row.corrected,
                     tag + "corrected formula at i=" + std::to_string(row.i));
        }
        c.expect(rep.all_agree, tag + "report agrees");
    }
    // the printed variant really does disagree, and is reported, not hidden
    auto r3 = k2d_report(3, kQ);
    c.expect_eq(r3.rows[0].verbatim, 2, "verbatim value at (3,0)");
    c.expect_eq(r3.rows[0].corrected, 3, "corrected value at (3,0)");
    c.expect(r3.to_json().find("\"verbatim\"") != std::string::npos,
             "verbatim values surfaced in the report");
}

void criterion7() {
    Criterion c("7: randomized property suites (200 cases each, fixed seed)");
    const unsigned seed = 424243;
    auto run = [&](const char* name, testhelp::SuiteResult r) {
        c.expect_eq(r.failures, 0,
                    std::string(name) + " (" + std::to_string(r.cases) +
                        " cases): " + r.first_failure);
    };
    run("join/Kunneth", testhelp::suite_join_kunneth(200, seed));
    run("fibre round-trip", testhelp::suite_fibre_roundtrip(200, seed + 1));
    run("Hochster top-degree identity", testhelp::suite_hochster_top(200, seed + 2));
    run("initial-ideal dominance",
        testhelp::suite_initial_ideal_dominance(200, seed + 3));
    run("gamma-free verifier", testhelp::suite_gamma_free(200, seed + 4));
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (g_failures > 0)
        std::cout << g_failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return g_failures;
}
