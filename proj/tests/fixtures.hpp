#pragma once

#include <array>
#include <vector>

#include "tptri/embedded_graph.hpp"
#include "tptri/graph.hpp"

namespace tptri::fixtures {

/// K6 on the projective plane (antipodal quotient of the icosahedron).
inline EmbeddedGraph k6_projective() {
    std::vector<std::array<int, 3>> faces = {
        {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
        {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5},
    };
    return EmbeddedGraph::from_triangles(6, faces);
}

/// Tetrahedron with all-zero signatures: a sphere embedding (chi = 2).
inline EmbeddedGraph tetrahedron_sphere() {
    std::vector<std::vector<HalfEdge>> rot = {
        {{1, 0}, {2, 0}, {3, 0}},
        {{0, 0}, {3, 0}, {2, 0}},
        {{0, 0}, {1, 0}, {3, 0}},
        {{0, 0}, {2, 0}, {1, 0}},
    };
    return EmbeddedGraph::from_rotations(4, std::move(rot));
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

/// Wheel W_p: rim 0..p-1, hub p.
inline Graph wheel(int p) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < p; ++i) {
        es.emplace_back(i, (i + 1) % p);
        es.emplace_back(i, p);
    }
    return Graph::from_edges(p + 1, es);
}

inline Graph c7_complement() { return cycle_graph(7).complement(); }

/// The 7-vertex irreducible Eulerian triangulation (vertex roles: 0 apex,
/// 1/2/3/4 the outer square, 5 and 6 the two remaining degree-4 vertices).
/// Used as a known-good Eulerian instance before the catalog is involved.
inline EmbeddedGraph eulerian7() {
    std::vector<std::array<int, 3>> faces = {
        {0, 1, 2}, {0, 2, 3}, {1, 2, 5}, {3, 4, 5}, {0, 3, 4}, {0, 1, 4},
        {5, 2, 4}, {6, 2, 3}, {6, 3, 1}, {6, 1, 4}, {6, 4, 2}, {5, 3, 1},
    };
    return EmbeddedGraph::from_triangles(7, faces);
}

}  // namespace tptri::fixtures
