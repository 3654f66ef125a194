#ifndef TORIC_HOMOLOGY_HPP
#define TORIC_HOMOLOGY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric/complex.hpp"
#include "toric/field.hpp"

namespace toric {

/// Reduced homology dimensions of a complex, indexed from dimension -1.
struct HomologyDims {
    int max_dim = -2;                  // dimension of the complex; -2 for void
    std::vector<long long> dims;       // dims[d + 1] = dim H~_d; empty for void

    long long dim(int d) const {
        int idx = d + 1;
        if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
        return dims[idx];
    }
    long long total() const;
};

HomologyDims reduced_homology_dims(const SimplicialComplex& c,
                                   const FieldSpec& field,
                                   std::int64_t face_cap = 1000000);

/// Graded Betti numbers: (homological index i, internal degree j) -> count.
/// Absent keys read as zero; stored counts are strictly positive.
class BettiTable {
public:
    void add(int i, int j, long long value);
    long long get(int i, int j) const;
    bool empty() const { return entries_.empty(); }
    const std::map<std::pair<int, int>, long long>& entries() const {
        return entries_;
    }

    // max j - i over nonzero entries; requires a nonempty table
    int regularity() const;

    // -1 when the table is complete; otherwise the largest computed j
    int truncated_at = -1;

    std::string to_json() const;
    std::string to_text() const;  // columns = i, rows = j - i, '-' for zero

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

private:
    std::map<std::pair<int, int>, long long> entries_;
};

// Hochster's formula: graded Betti table of the Stanley-Reisner ideal of c,
// by summing restricted-homology dimensions over all vertex subsets.
BettiTable hochster_betti(const SimplicialComplex& c, const FieldSpec& field,
                          int ground_cap = 20);

} // namespace toric

#endif
