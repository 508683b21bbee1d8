#pragma once

#include <string>
#include <vector>

#include "smog/drawing.hpp"
#include "smog/graph.hpp"

namespace smog {

class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

PlanarGraph gen_octahedron();
PlanarGraph gen_k4();
PlanarGraph gen_triangle();

// 20k vertices: wheels W_{i,j}, 1 <= i <= 2k, j in {t, b}; vertex 5*(2*(i-1) + [j == b]) + {c, n, w, e, s}.
PlanarGraph gen_trains(int k);
int trains_vertex(int i, char j, char part);

struct Certificates {
  Drawing smooth, octilinear;
};
Certificates gen_trains_certificates(int k);

// Octahedron with one edge subdivided by the degree-2 vertex 6.
PlanarGraph gen_component_c();
// k + 2 biconnected blocks: two copies of C at the ends and k octahedra with two disjoint edges
// subdivided in between, glued at the subdivision vertices.
PlanarGraph gen_chain(int k);
std::vector<int> chain_cut_vertices(int k);

// Wheel c; w1..w4 with t1, t2, p1, p2, q1, q2; outer face (p1, q1, p2, q2).
// Vertex ids: c=0, w1..w4=1..4, t1=5, t2=6, p1=7, p2=8, q1=9, q2=10.
PlanarGraph gen_graph_b();
// 2k + 4 copies of B in a cycle, q2 of each copy identified with q1 of the next.
PlanarGraph gen_necklace(int k);
std::vector<int> necklace_junctions(int k);

// Spine of s vertices, each of degree 8.
PlanarGraph gen_caterpillar(int s);

PlanarGraph gen_family(const std::string& name, int k);

// Replace every degree-2 vertex by an edge joining its neighbours (ids are compacted).
PlanarGraph suppress_degree_two(const PlanarGraph& g);
bool is_triconnected(const PlanarGraph& g);

// Rotation system from the direction in which each edge leaves its endpoints.
struct EdgeVector {
  int u, v;
  double dx, dy;  // direction from u towards v; the reverse direction is used at v
};
PlanarGraph embed_from_vectors(int n, const std::vector<EdgeVector>& edges);
// Rotation system from a drawing's ports, clockwise; the outer face is the one of most negative
// signed area of its vertex polygon.
PlanarGraph embed_from_drawing(const Drawing& d);

}  // namespace smog
