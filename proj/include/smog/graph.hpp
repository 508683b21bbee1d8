#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smog {

class GraphError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class EmbeddingError : public GraphError {
  using GraphError::GraphError;
};

class NotMaximalError : public GraphError {
 public:
  NotMaximalError(const std::string& msg, long missing) : GraphError(msg), missing_edges(missing) {}
  long missing_edges;
};

// Undirected simple graph with a rotation system: adj[v] lists the neighbours of v in clockwise order.
struct PlanarGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> outer;

  long edge_count() const;
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

PlanarGraph make_graph(int n, std::vector<std::vector<int>> adj, std::vector<int> outer);

// Faces as vertex cycles, each traversed with the face on the left.
std::vector<std::vector<int>> faces(const PlanarGraph& g);

// Throws EmbeddingError unless g is simple, symmetric, connected, satisfies Euler's formula and
// outer is one of its faces.
void check_embedding(const PlanarGraph& g);

struct MaximalityReport {
  bool ok = false;
  long missing_edges = 0;
  std::vector<std::vector<int>> non_triangular_faces;
  std::string message;
};

MaximalityReport check_maximal_planar(const PlanarGraph& g);

// Neighbour following u in the clockwise rotation at v.
int cw_next(const PlanarGraph& g, int v, int u);
int ccw_next(const PlanarGraph& g, int v, int u);

std::vector<int> biconnected_component_sizes(const PlanarGraph& g);
bool is_connected_without(const PlanarGraph& g, const std::vector<int>& removed);
int component_count_without(const PlanarGraph& g, const std::vector<int>& removed);

PlanarGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const PlanarGraph& g);

// Triangulation grown by inserting each new vertex into a uniformly chosen inner face.
PlanarGraph random_maximal_planar(int n, std::mt19937_64& rng);

struct CanonicalOrder {
  std::vector<int> pi;                  // pi[k-1] = v_k
  std::vector<int> rank;                // rank[v] = k - 1
  std::vector<std::vector<int>> lower;  // lower[k-1]: neighbours of v_k in G_{k-1}, left to right on C_{k-1}
  int v(int k) const { return pi[k - 1]; }
};

// Base pair (v1, v2) of the outer face in the orientation the layout expects.
std::pair<int, int> default_base(const PlanarGraph& g);

CanonicalOrder canonical_order(const PlanarGraph& g, int v1, int v2);
CanonicalOrder canonical_order(const PlanarGraph& g);

// Contour C_k of G_k from v1 to v2.
std::vector<int> contour_at(const PlanarGraph& g, const CanonicalOrder& order, int k);

// Independent check of the canonical order conditions, by brute force on every prefix.
// Returns an empty string on success, otherwise the first violated condition.
std::string verify_canonical_order(const PlanarGraph& g, const std::vector<int>& pi);

}  // namespace smog
