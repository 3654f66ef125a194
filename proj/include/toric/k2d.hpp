#ifndef TORIC_K2D_HPP
#define TORIC_K2D_HPP

#include <string>
#include <vector>

#include "toric/field.hpp"
#include "toric/graph.hpp"

namespace toric {

/// The initial-ideal graph of K_{2,d}: vertices e_2..e_d and f_1..f_{d-1},
/// edges {e_i, f_j} for j < i.  e_i has index i-2, f_j index (d-1) + (j-1).
struct K2dInstance {
    explicit K2dInstance(int d);

    int d;
    Graph h;
};

// Linear-strand Betti number of an edge ideal:
// beta_{i,i+2}(I(g)) = sum over (i+2)-subsets S of (#comp(complement(g_S)) - 1).
long long linear_strand_betti(const Graph& g, int i, int subset_cap = 22);

enum class K2dFormulaVariant {
    kVerbatim,   // inner sum bound d - 2 - l, as printed
    kCorrected,  // inner sum bound d - 1 - l, matching the oracles
};

long long k2d_closed_formula(int d, int i,
                             K2dFormulaVariant variant = K2dFormulaVariant::kCorrected);

struct K2dRow {
    int i = 0;
    long long strand = 0;     // linear_strand_betti on H
    long long hochster = 0;   // Hochster entry beta_{i,i+2}(I(H))
    long long verbatim = 0;
    long long corrected = 0;
    bool agree = false;       // strand == hochster == corrected
};

struct K2dReport {
    int d = 0;
    std::string field;
    std::vector<K2dRow> rows;
    bool linear_resolution = false;  // no Hochster entry off j = i + 2
    bool all_agree = false;
    std::string to_json() const;
};

K2dReport k2d_report(int d, const FieldSpec& field, int hochster_cap = 7,
                     int strand_cap = 10);

} // namespace toric

#endif
