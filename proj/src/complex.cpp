#include "toric/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "toric/errors.hpp"

namespace toric {

int face_size(Face f) { return std::popcount(f); }

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    for (int v = 0; f; ++v, f >>= 1)
        if (f & 1) out.push_back(v);
    return out;
}

Face face_from(const std::vector<int>& vertices) {
    Face f = 0;
    for (int v : vertices) f |= Face(1) << v;
    return f;
}

SimplicialComplex::SimplicialComplex(int ground_size,
                                     std::vector<Face> generating_faces)
    : ground_size_(ground_size) {
    if (ground_size < 0 || ground_size > 63)
        throw argument_error("SimplicialComplex: ground size must be in [0, 63]");
    std::sort(generating_faces.begin(), generating_faces.end());
    generating_faces.erase(
        std::unique(generating_faces.begin(), generating_faces.end()),
        generating_faces.end());
    for (Face f : generating_faces) {
        if (ground_size < 63 && (f >> ground_size) != 0)
            throw argument_error("SimplicialComplex: face outside ground set");
        bool maximal = true;
        for (Face g : generating_faces)
            if (g != f && (f & g) == f) {
                maximal = false;
                break;
            }
        if (maximal) facets_.push_back(f);
    }
}

SimplicialComplex SimplicialComplex::void_complex(int ground_size) {
    return SimplicialComplex(ground_size, {});
}

SimplicialComplex SimplicialComplex::empty_face_complex(int ground_size) {
    return SimplicialComplex(ground_size, {Face(0)});
}

SimplicialComplex SimplicialComplex::simplex(int ground_size) {
    Face all = ground_size == 0 ? 0 : ((Face(1) << ground_size) - 1);
    return SimplicialComplex(ground_size, {all});
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (Face f : facets_) d = std::max(d, face_size(f) - 1);
    return d;
}

bool SimplicialComplex::contains(Face f) const {
    for (Face g : facets_)
        if ((f & g) == f) return true;
    return false;
}

bool SimplicialComplex::is_cone() const {
    if (facets_.empty()) return false;
    Face common = facets_.front();
    for (Face f : facets_) common &= f;
    return common != 0;
}

std::vector<Face> faces_of_dim(const SimplicialComplex& c, int d) {
    if (d < -1) throw argument_error("faces_of_dim: dimension below -1");
    if (c.is_void()) return {};
    if (d == -1) return {Face(0)};
    std::set<Face> out;
    const int k = d + 1;
    // enumerate k-subsets of each facet
    std::function<void(Face, std::vector<int>&, int, int)> rec =
        [&](Face acc, std::vector<int>& verts, int idx, int left) {
            if (left == 0) {
                out.insert(acc);
                return;
            }
            for (int i = idx; i + left <= static_cast<int>(verts.size()); ++i)
                rec(acc | (Face(1) << verts[i]), verts, i + 1, left - 1);
        };
    for (Face f : c.facets()) {
        if (face_size(f) < k) continue;
        std::vector<int> verts = face_vertices(f);
        rec(0, verts, 0, k);
    }
    return std::vector<Face>(out.begin(), out.end());
}

SimplicialComplex restrict_complex(const SimplicialComplex& c, Face w) {
    if (c.ground_size() < 63 && (w >> c.ground_size()) != 0)
        throw argument_error("restrict_complex: w outside ground set");
    if (c.is_void()) return SimplicialComplex::void_complex(face_size(w));
    std::vector<int> verts = face_vertices(w);
    std::vector<int> pos(c.ground_size(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) pos[verts[i]] = i;
    std::vector<Face> gens;
    for (Face f : c.facets()) {
        Face inside = f & w;
        Face mapped = 0;
        for (int v : face_vertices(inside)) mapped |= Face(1) << pos[v];
        gens.push_back(mapped);
    }
    return SimplicialComplex(static_cast<int>(verts.size()), std::move(gens));
}

SimplicialComplex join(const SimplicialComplex& c1, const SimplicialComplex& c2) {
    if (c1.ground_size() != c2.ground_size())
        throw argument_error("join: ground sizes differ");
    if (c1.is_void() || c2.is_void())
        return SimplicialComplex::void_complex(c1.ground_size());
    Face support1 = 0, support2 = 0;
    for (Face f : c1.facets()) support1 |= f;
    for (Face f : c2.facets()) support2 |= f;
    if (support1 & support2)
        throw argument_error("join: overlapping supports");
    std::vector<Face> gens;
    for (Face f1 : c1.facets())
        for (Face f2 : c2.facets()) gens.push_back(f1 | f2);
    return SimplicialComplex(c1.ground_size(), std::move(gens));
}

std::vector<Face> stanley_reisner_generators(const SimplicialComplex& c) {
    if (c.is_void())
        throw argument_error("stanley_reisner_generators: void complex");
    // BFS up the subset lattice: a minimal non-face has all proper subsets
    // faces, so grow candidate faces one vertex at a time.
    std::vector<Face> out;
    std::set<Face> faces{Face(0)};
    std::set<Face> frontier{Face(0)};
    const int n = c.ground_size();
    while (!frontier.empty()) {
        std::set<Face> next;
        for (Face f : frontier) {
            for (int v = 0; v < n; ++v) {
                Face g = f | (Face(1) << v);
                if (g == f) continue;
                // all subsets of size |g|-1 must be faces
                bool all_sub_faces = true;
                for (int u : face_vertices(g))
                    if (!faces.count(g & ~(Face(1) << u))) {
                        all_sub_faces = false;
                        break;
                    }
                if (!all_sub_faces) continue;
                if (c.contains(g)) {
                    if (next.insert(g).second) faces.insert(g);
                } else {
                    out.push_back(g);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialComplex independence_complex(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 63)
        throw capability_error("independence_complex: more than 63 vertices");
    // maximal independent sets via pivotless Bron-Kerbosch on the complement
    std::vector<Face> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= Face(1) << v;
        adj[v] |= Face(1) << u;
    }
    std::vector<Face> gens;
    std::function<void(Face, Face, Face)> bk = [&](Face r, Face p, Face x) {
        if (p == 0 && x == 0) {
            gens.push_back(r);
            return;
        }
        Face candidates = p;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            Face nonadj = ~adj[v];  // independence: extend by non-neighbors
            Face bit = Face(1) << v;
            bk(r | bit, p & nonadj & ~bit, x & nonadj);
            p &= ~bit;
            x |= bit;
        }
    };
    if (n == 0) return SimplicialComplex::empty_face_complex(0);
    bk(0, (Face(1) << n) - 1, 0);
    return SimplicialComplex(n, std::move(gens));
}

ShellingResult is_shelling(const SimplicialComplex& c,
                           const std::vector<int>& order) {
    const auto& facets = c.facets();
    if (order.size() != facets.size())
        throw argument_error("is_shelling: order size mismatch");
    std::vector<bool> seen(facets.size(), false);
    for (int idx : order) {
        if (idx < 0 || idx >= static_cast<int>(facets.size()) || seen[idx])
            throw argument_error("is_shelling: order is not a permutation");
        seen[idx] = true;
    }
    ShellingResult res;
    for (size_t l = 1; l < order.size(); ++l) {
        Face fl = facets[order[l]];
        for (size_t i = 0; i < l; ++i) {
            Face inter = facets[order[i]] & fl;
            bool covered = false;
            for (size_t j = 0; j < l && !covered; ++j) {
                Face cap = facets[order[j]] & fl;
                Face diff = fl & ~cap;
                if (face_size(diff) == 1 && (inter & cap) == inter)
                    covered = true;
            }
            if (!covered) {
                res.violation = {static_cast<int>(i), static_cast<int>(l)};
                return res;
            }
        }
    }
    res.shellable = true;
    return res;
}

} // namespace toric
