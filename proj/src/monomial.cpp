#include "toric/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

int VertexMonomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool VertexMonomial::is_zero() const { return total_degree() == 0; }

std::vector<int> VertexMonomial::support() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(exponents.size()); ++v)
        if (exponents[v] > 0) out.push_back(v);
    return out;
}

VertexMonomial VertexMonomial::operator*(const VertexMonomial& o) const {
    if (exponents.size() != o.exponents.size())
        throw argument_error("VertexMonomial: size mismatch");
    VertexMonomial out{exponents};
    for (size_t i = 0; i < exponents.size(); ++i)
        out.exponents[i] += o.exponents[i];
    return out;
}

int EdgeMonomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Face EdgeMonomial::support() const {
    Face f = 0;
    for (int e = 0; e < static_cast<int>(exponents.size()); ++e)
        if (exponents[e] > 0) f |= Face(1) << e;
    return f;
}

VertexMonomial parse_vertex_monomial(const Graph& g, const std::string& text) {
    std::map<std::string, int> index;
    for (int v = 0; v < g.vertex_count(); ++v) index[g.label(v)] = v;
    VertexMonomial alpha{std::vector<int>(g.vertex_count(), 0)};
    if (text.empty()) throw parse_error("empty monomial string");
    std::stringstream ss(text);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty()) throw parse_error("empty factor in monomial: " + text);
        std::string label = factor;
        int exp = 1;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
            label = factor.substr(0, caret);
            try {
                exp = std::stoi(factor.substr(caret + 1));
            } catch (const std::exception&) {
                throw parse_error("bad exponent in factor: " + factor);
            }
            if (exp < 0) throw parse_error("negative exponent in factor: " + factor);
        }
        auto it = index.find(label);
        if (it == index.end())
            throw parse_error("unknown vertex label in monomial: " + label);
        alpha.exponents[it->second] += exp;
    }
    return alpha;
}

std::string format_vertex_monomial(const Graph& g, const VertexMonomial& alpha) {
    std::string out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (alpha.exponents[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += g.label(v);
        if (alpha.exponents[v] > 1) out += "^" + std::to_string(alpha.exponents[v]);
    }
    return out.empty() ? "1" : out;
}

VertexMonomial apply_pi(const Graph& g, const EdgeMonomial& w) {
    if (static_cast<int>(w.exponents.size()) != g.edge_count())
        throw argument_error("apply_pi: edge monomial size mismatch");
    VertexMonomial alpha{std::vector<int>(g.vertex_count(), 0)};
    for (int e = 0; e < g.edge_count(); ++e) {
        alpha.exponents[g.edge(e).first] += w.exponents[e];
        alpha.exponents[g.edge(e).second] += w.exponents[e];
    }
    return alpha;
}

std::vector<EdgeMonomial> enumerate_fibre(const Graph& g,
                                          const VertexMonomial& alpha,
                                          std::int64_t cap) {
    if (static_cast<int>(alpha.exponents.size()) != g.vertex_count())
        throw argument_error("enumerate_fibre: vertex monomial size mismatch");
    for (int e : alpha.exponents)
        if (e < 0) throw argument_error("enumerate_fibre: negative exponent");
    std::vector<EdgeMonomial> out;
    if (alpha.total_degree() % 2 != 0) return out;

    const int ne = g.edge_count();
    const int nv = g.vertex_count();
    // incident[v] lists edges at v in index order
    std::vector<std::vector<int>> incident(nv);
    for (int e = 0; e < ne; ++e) {
        incident[g.edge(e).first].push_back(e);
        incident[g.edge(e).second].push_back(e);
    }
    std::vector<int> residual = alpha.exponents;
    std::vector<int> w(ne, 0);

    // residual degree at each vertex must stay coverable by unprocessed edges
    auto feasible = [&](int next_edge) {
        for (int v = 0; v < nv; ++v) {
            if (residual[v] == 0) continue;
            std::int64_t capv = 0;
            for (int e : incident[v]) {
                if (e < next_edge) continue;
                int u = g.edge(e).first == v ? g.edge(e).second : g.edge(e).first;
                capv += std::min(residual[v], residual[u]);
                if (capv >= residual[v]) break;
            }
            if (capv < residual[v]) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int e) {
        if (e == ne) {
            // all residuals zero is guaranteed by feasibility at the leaf
            out.push_back(EdgeMonomial{w});
            if (static_cast<std::int64_t>(out.size()) > cap)
                throw capability_error("enumerate_fibre: fibre larger than cap");
            return;
        }
        const auto [u, v] = g.edge(e);
        const int max_exp = std::min(residual[u], residual[v]);
        for (int c = 0; c <= max_exp; ++c) {
            w[e] = c;
            residual[u] -= c;
            residual[v] -= c;
            if (feasible(e + 1)) rec(e + 1);
            residual[u] += c;
            residual[v] += c;
        }
        w[e] = 0;
    };
    if (feasible(0)) rec(0);
    return out;
}

SimplicialComplex gamma_complex(const Graph& g, const VertexMonomial& alpha,
                                std::int64_t cap) {
    if (g.edge_count() > 63)
        throw capability_error("gamma_complex: more than 63 edges");
    std::vector<Face> supports;
    for (const EdgeMonomial& w : enumerate_fibre(g, alpha, cap))
        supports.push_back(w.support());
    return SimplicialComplex(g.edge_count(), std::move(supports));
}

} // namespace toric
