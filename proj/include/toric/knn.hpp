#ifndef TORIC_KNN_HPP
#define TORIC_KNN_HPP

#include <string>
#include <vector>

#include "toric/complex.hpp"
#include "toric/graph.hpp"
#include "toric/homology.hpp"
#include "toric/monomial.hpp"

namespace toric {

/// The K_{n,n} setup: alpha = (x_1...x_n y_1...y_n)^{n-1} and w the product
/// of all n^2 edge variables.  Edge e_{i,j} = {x_i, y_j} has index n*(i-1)+(j-1).
struct KnnInstance {
    explicit KnnInstance(int n);

    int n;
    Graph graph;
    VertexMonomial alpha;
    EdgeMonomial w;

    int edge_index(int i, int j) const { return n * (i - 1) + (j - 1); }
};

// The 2n row/column products: {e_{i,1},...,e_{i,n}} then {e_{1,j},...,e_{n,j}},
// as edge-index sets.
std::vector<Face> srideal_generators(const KnnInstance& inst);

/// The restricted Taylor complex on the 2n generator indices (rows 0..n-1,
/// columns n..2n-1) together with its facets sigma_{i,j} = all but {i-1, n+j-1}.
struct TaylorRestricted {
    SimplicialComplex complex;               // generated by the n^2 facets
    std::vector<std::pair<int, int>> index;  // facet position -> (i, j), 1-based
};

TaylorRestricted taylor_restricted_facets(const KnnInstance& inst);

// Facet positions in the order sigma_{1,n+1}, ..., sigma_{n,n+1},
// sigma_{1,n+2}, ..., sigma_{n,2n}.
std::vector<int> shelling_order(const KnnInstance& inst);

struct NonvanishingCheck {
    std::string name;
    bool holds = false;
    long long computed_dimension = 0;
};

struct NonvanishingReport {
    int n = 0;
    std::string field;
    bool shelling_verified = false;
    std::vector<NonvanishingCheck> checks;
    int regularity_lower_bound = 0;
    bool all_hold = false;
    std::string to_json() const;
};

// Direct computation of the nonvanishing chain: Delta_{<w} homology in
// dimension 2n-3, beta_{2n-2, n^2} of I(Gamma(alpha)) via Hochster, and
// beta_{n^2-2n, alpha}(I_{K_{n,n}}).  The Hochster step is skipped above
// hochster_cap (ground set n^2).
NonvanishingReport verify_nonvanishing(const KnnInstance& inst,
                                       const FieldSpec& field,
                                       int hochster_cap = 3);

} // namespace toric

#endif
