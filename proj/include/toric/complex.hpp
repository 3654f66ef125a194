#ifndef TORIC_COMPLEX_HPP
#define TORIC_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

/// Faces as vertex bitmasks over a ground set of at most 63 elements.
using Face = std::uint64_t;

int face_size(Face f);
std::vector<int> face_vertices(Face f);
Face face_from(const std::vector<int>& vertices);

/// A simplicial complex stored by its facets (inclusion-maximal faces).
/// Conventions: the void complex has no facets at all; the complex {∅}
/// has the single facet 0.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(int ground_size, std::vector<Face> generating_faces);

    static SimplicialComplex void_complex(int ground_size);
    static SimplicialComplex empty_face_complex(int ground_size);
    static SimplicialComplex simplex(int ground_size);  // full simplex

    int ground_size() const { return ground_size_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    int dim() const;  // -2 for void, -1 for {∅}
    bool contains(Face f) const;
    // Some ground vertex lies in every facet (trivial reduced homology).
    bool is_cone() const;

    bool operator==(const SimplicialComplex& o) const {
        return ground_size_ == o.ground_size_ && facets_ == o.facets_;
    }

private:
    int ground_size_ = 0;
    std::vector<Face> facets_;  // sorted, deduplicated, mutually incomparable
};

// All d-dimensional faces (cardinality d+1), sorted; d >= -1.
std::vector<Face> faces_of_dim(const SimplicialComplex& c, int d);

// Faces of c contained in w, re-indexed onto ground set {0..|w|-1} in the
// order of w's vertices.
SimplicialComplex restrict_complex(const SimplicialComplex& c, Face w);

// Join of two complexes sharing a ground set with disjoint supports.
SimplicialComplex join(const SimplicialComplex& c1, const SimplicialComplex& c2);

// Inclusion-minimal non-faces; the input must be nonvoid.
std::vector<Face> stanley_reisner_generators(const SimplicialComplex& c);

// Complex whose faces are the independent sets of g; its Stanley-Reisner
// ideal is the edge ideal of g.
SimplicialComplex independence_complex(const Graph& g);

struct ShellingResult {
    bool shellable = false;
    std::pair<int, int> violation{-1, -1};  // failing (i, l) facet positions
};

ShellingResult is_shelling(const SimplicialComplex& c,
                           const std::vector<int>& order);

} // namespace toric

#endif
