#ifndef TORIC_TORIC_IDEAL_HPP
#define TORIC_TORIC_IDEAL_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "toric/graph.hpp"
#include "toric/homology.hpp"
#include "toric/monomial.hpp"

namespace toric {

struct ToricCaps {
    std::int64_t fibre_cap = 1000000;
    std::int64_t face_cap = 1000000;
};

// beta_{i,alpha}(I_G) = dim H~_i(Gamma(alpha)) for i = 0..dim; empty fibre
// gives an empty vector.
std::vector<long long> toric_betti_multigraded(const Graph& g,
                                               const VertexMonomial& alpha,
                                               const FieldSpec& field,
                                               const ToricCaps& caps = {});

struct ToricTable {
    BettiTable table;        // truncated_at is always set
    bool zero_ideal = false; // the toric ideal is zero (table trivially empty)
};

// Graded table up to internal degree max_degree, summing multigraded Betti
// numbers over all alpha with |alpha| = 2j.
ToricTable toric_betti_table(const Graph& g, int max_degree,
                             const FieldSpec& field, const ToricCaps& caps = {});

// max j - i over the table; nullopt for an empty table.
std::optional<int> regularity_from_table(const BettiTable& t);

// The toric ideal of g is zero iff every component has at most one cycle
// and that cycle is odd.
bool is_zero_toric_ideal(const Graph& g);

/// A disjoint family of vertex sets, each inducing a balanced biclique.
using BicliqueCertificate = std::vector<std::vector<int>>;

// Verifies the certificate and returns sum(n_i) - (t - 1).
int lower_bound_from_certificate(const Graph& g, const BicliqueCertificate& parts);

// Exhaustive search for the best disjoint induced balanced biclique family;
// subsets of size up to size_cap are examined.  Empty result when no
// induced K_{n,n} with n >= 2 exists.
BicliqueCertificate search_biclique_certificate(const Graph& g, int size_cap);

struct DominanceResult {
    bool dominated = false;
    // (i, j, toric value, monomial value) for each violated entry
    std::vector<std::tuple<int, int, long long, long long>> violations;
};

// Entrywise check toric(i,j) <= monomial(i,j) on the shared degree range.
DominanceResult initial_ideal_betti_dominance(const BettiTable& toric_table,
                                              const BettiTable& monomial_table);

struct RegularityBounds {
    std::optional<int> lower;
    BicliqueCertificate lower_certificate;
    std::optional<int> upper;
    std::optional<int> exact;
    bool zero_ideal = false;
    std::string status;
};

} // namespace toric

#endif
