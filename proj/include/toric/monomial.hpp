#ifndef TORIC_MONOMIAL_HPP
#define TORIC_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toric/complex.hpp"
#include "toric/graph.hpp"

namespace toric {

/// Exponent vector over the vertex variables of a fixed graph.
struct VertexMonomial {
    std::vector<int> exponents;

    int total_degree() const;
    bool is_zero() const;  // the monomial 1 (all exponents zero)
    std::vector<int> support() const;
    VertexMonomial operator*(const VertexMonomial& o) const;
    bool operator==(const VertexMonomial& o) const { return exponents == o.exponents; }
};

/// Exponent vector over the edge variables of a fixed graph.
struct EdgeMonomial {
    std::vector<int> exponents;

    int total_degree() const;
    Face support() const;  // edge-index bitmask
    bool operator==(const EdgeMonomial& o) const { return exponents == o.exponents; }
};

// Parse a monomial string like "x1^2*y1*y2" against g's vertex labels.
VertexMonomial parse_vertex_monomial(const Graph& g, const std::string& text);
std::string format_vertex_monomial(const Graph& g, const VertexMonomial& alpha);

// The degree map: each edge contributes its exponent to both endpoints.
VertexMonomial apply_pi(const Graph& g, const EdgeMonomial& w);

// All edge monomials w with pi(w) = alpha, in lexicographic-by-edge-index
// order.  Aborts with a capability error past `cap` elements.
std::vector<EdgeMonomial> enumerate_fibre(const Graph& g,
                                          const VertexMonomial& alpha,
                                          std::int64_t cap = 1000000);

// The fibre complex: generated by supports of fibre elements; void when the
// fibre is empty.  Ground set is the edge index set of g.
SimplicialComplex gamma_complex(const Graph& g, const VertexMonomial& alpha,
                                std::int64_t cap = 1000000);

} // namespace toric

#endif
