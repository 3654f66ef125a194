#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "toric/complex.hpp"
#include "toric/errors.hpp"

using namespace toric;

TEST_CASE("face helpers") {
    Face f = face_from({0, 2, 5});
    CHECK(face_size(f) == 3);
    CHECK(face_vertices(f) == std::vector<int>{0, 2, 5});
    CHECK(face_size(0) == 0);
}

TEST_CASE("facet normalization and conventions") {
    // non-maximal and duplicate generators collapse
    SimplicialComplex c(3, {face_from({0}), face_from({0, 1}), face_from({0, 1})});
    CHECK(c.facets() == std::vector<Face>{face_from({0, 1})});
    CHECK(c.dim() == 1);
    CHECK(c.contains(face_from({1})));
    CHECK(c.contains(0));
    CHECK_FALSE(c.contains(face_from({1, 2})));

    SimplicialComplex v = SimplicialComplex::void_complex(3);
    CHECK(v.is_void());
    CHECK(v.dim() == -2);
    CHECK_FALSE(v.contains(0));

    SimplicialComplex e = SimplicialComplex::empty_face_complex(3);
    CHECK(e.dim() == -1);
    CHECK(e.contains(0));
    CHECK(faces_of_dim(e, -1) == std::vector<Face>{0});

    CHECK(SimplicialComplex::simplex(4).dim() == 3);
}

TEST_CASE("face enumeration") {
    SimplicialComplex tri(3, {face_from({0, 1, 2})});
    CHECK(faces_of_dim(tri, -1).size() == 1);
    CHECK(faces_of_dim(tri, 0).size() == 3);
    CHECK(faces_of_dim(tri, 1).size() == 3);
    CHECK(faces_of_dim(tri, 2).size() == 1);
    CHECK(faces_of_dim(tri, 3).empty());
}

TEST_CASE("cones") {
    CHECK(SimplicialComplex(3, {face_from({0, 1}), face_from({0, 2})}).is_cone());
    CHECK_FALSE(
        SimplicialComplex(4, {face_from({0, 1}), face_from({2, 3})}).is_cone());
    CHECK(SimplicialComplex::simplex(3).is_cone());
}

TEST_CASE("restriction") {
    SimplicialComplex c(4, {face_from({0, 1}), face_from({2, 3})});
    SimplicialComplex r = restrict_complex(c, face_from({0, 1, 2}));
    CHECK(r.ground_size() == 3);
    CHECK(testhelp::facet_set(r) ==
          std::set<Face>{face_from({0, 1}), face_from({2})});

    // restriction missing every facet vertex leaves {∅}
    SimplicialComplex iso(3, {face_from({0, 1})});
    CHECK(restrict_complex(iso, face_from({2})).dim() == -1);
}

TEST_CASE("join") {
    SimplicialComplex a(4, {face_from({0}), face_from({1})});
    SimplicialComplex b(4, {face_from({2}), face_from({3})});
    SimplicialComplex j = join(a, b);
    CHECK(j.facets().size() == 4);
    CHECK(j.contains(face_from({0, 3})));
    CHECK_FALSE(j.contains(face_from({0, 1})));

    CHECK(join(SimplicialComplex::void_complex(4), b).is_void());
    CHECK(join(SimplicialComplex::empty_face_complex(4), b) == b);
    CHECK_THROWS_AS(join(a, a), argument_error);
}

TEST_CASE("Stanley-Reisner generators") {
    // boundary of the triangle: single minimal non-face, the full set
    SimplicialComplex bd(3, {face_from({0, 1}), face_from({1, 2}),
                             face_from({0, 2})});
    CHECK(stanley_reisner_generators(bd) ==
          std::vector<Face>{face_from({0, 1, 2})});

    // two disjoint edges: the four mixed pairs (a 4-cycle edge ideal)
    SimplicialComplex two(4, {face_from({0, 1}), face_from({2, 3})});
    CHECK(stanley_reisner_generators(two).size() == 4);

    // full simplex: no non-faces
    CHECK(stanley_reisner_generators(SimplicialComplex::simplex(3)).empty());
}

TEST_CASE("independence complex") {
    SimplicialComplex ind = independence_complex(cycle_graph(4));
    CHECK(testhelp::facet_set(ind) ==
          std::set<Face>{face_from({0, 2}), face_from({1, 3})});
    CHECK(independence_complex(complete_bipartite(2, 2)).facets().size() == 2);
}

TEST_CASE("shelling checker") {
    // the full boundary of the tetrahedron is shellable in any order
    SimplicialComplex bd(4, {face_from({0, 1, 2}), face_from({0, 1, 3}),
                             face_from({0, 2, 3}), face_from({1, 2, 3})});
    CHECK(is_shelling(bd, {0, 1, 2, 3}).shellable);
    CHECK(is_shelling(bd, {3, 1, 0, 2}).shellable);

    // two disjoint edges admit no shelling order
    SimplicialComplex two(4, {face_from({0, 1}), face_from({2, 3})});
    auto res = is_shelling(two, {0, 1});
    CHECK_FALSE(res.shellable);
    CHECK(res.violation == std::pair<int, int>{0, 1});
}
