#include "toric/k2d.hpp"

#include <algorithm>

#include "json.hpp"
#include "toric/complex.hpp"
#include "toric/errors.hpp"
#include "toric/homology.hpp"

namespace toric {

K2dInstance::K2dInstance(int d_) : d(d_) {
    if (d < 2) throw argument_error("K2dInstance: d must be >= 2");
    std::vector<std::string> labels;
    for (int i = 2; i <= d; ++i) labels.push_back("e" + std::to_string(i));
    for (int j = 1; j <= d - 1; ++j) labels.push_back("f" + std::to_string(j));
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= d; ++i)
        for (int j = 1; j < i; ++j)
            edges.emplace_back(i - 2, (d - 1) + (j - 1));
    h = Graph(std::move(labels), std::move(edges));
}

long long linear_strand_betti(const Graph& g, int i, int subset_cap) {
    if (i < 0) throw argument_error("linear_strand_betti: i must be >= 0");
    const int n = g.vertex_count();
    if (n > subset_cap)
        throw capability_error("linear_strand_betti: vertex count above cap");
    const int k = i + 2;
    if (k > n) return 0;
    long long total = 0;
    // iterate k-subsets as bitmasks
    for (Face s = (Face(1) << k) - 1; s < (Face(1) << n);) {
        Graph comp = complement(induced_subgraph(g, face_vertices(s)));
        total += static_cast<long long>(connected_components(comp).size()) - 1;
        // next k-subset (Gosper's hack)
        Face c = s & -s, r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return total;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long out = 1;
    for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
    return out;
}

} // namespace

long long k2d_closed_formula(int d, int i, K2dFormulaVariant variant) {
    if (d < 2 || i < 0) throw argument_error("k2d_closed_formula: bad arguments");
    const int inner_shift = variant == K2dFormulaVariant::kVerbatim ? 2 : 1;
    long long total = 0;
    for (int l = 1; l <= i + 1; ++l)
        for (int r = 0; r <= d - inner_shift - l; ++r)
            total += binomial(l - 1 + r, l - 1) * binomial(d - l - r, i + 2 - l);
    return total;
}

std::string K2dReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows)
        rows_json.push_back({{"i", r.i},
                             {"strand", r.strand},
                             {"hochster", r.hochster},
                             {"verbatim", r.verbatim},
                             {"corrected", r.corrected},
                             {"agree", r.agree}});
    nlohmann::json out{{"schema", 1},
                       {"d", d},
                       {"field", field},
                       {"rows", rows_json},
                       {"linear_resolution", linear_resolution},
                       {"all_agree", all_agree}};
    return out.dump();
}

K2dReport k2d_report(int d, const FieldSpec& field, int hochster_cap,
                     int strand_cap) {
    if (d > hochster_cap || d > strand_cap)
        throw capability_error("k2d_report: d above the route caps");
    K2dInstance inst(d);
    K2dReport rep;
    rep.d = d;
    rep.field = field.describe();

    BettiTable hoch = hochster_betti(independence_complex(inst.h), field);
    rep.linear_resolution = true;
    for (const auto& [key, value] : hoch.entries())
        if (key.second != key.first + 2) rep.linear_resolution = false;

    const int max_i = inst.h.vertex_count() - 2;  // |S| = i + 2 <= |V|
    rep.all_agree = true;
    for (int i = 0; i <= std::max(max_i, 0); ++i) {
        K2dRow row;
        row.i = i;
        row.strand = linear_strand_betti(inst.h, i);
        row.hochster = hoch.get(i, i + 2);
        row.verbatim = k2d_closed_formula(d, i, K2dFormulaVariant::kVerbatim);
        row.corrected = k2d_closed_formula(d, i, K2dFormulaVariant::kCorrected);
        row.agree = row.strand == row.hochster && row.hochster == row.corrected;
        rep.all_agree = rep.all_agree && row.agree;
        rep.rows.push_back(row);
    }
    rep.all_agree = rep.all_agree && rep.linear_resolution;
    return rep;
}

} // namespace toric
