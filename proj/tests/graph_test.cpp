#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "smog/families.hpp"
#include "smog/graph.hpp"

using namespace smog;

namespace {

// Face walk written independently of the library: dart (u, v) is followed by (v, w) where w is the
// clockwise successor of u around v.
int count_faces(const PlanarGraph& g, bool& all_triangles) {
  std::set<std::pair<int, int>> used;
  int faces = 0;
  all_triangles = true;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (used.count({u, v})) continue;
      ++faces;
      int a = u, b = v, len = 0;
      while (used.insert({a, b}).second) {
        ++len;
        const auto& r = g.adj[b];
        int i = static_cast<int>(std::find(r.begin(), r.end(), a) - r.begin());
        int c = r[(i + 1) % r.size()];
        a = b;
        b = c;
      }
      if (len != 3) all_triangles = false;
    }
  return faces;
}

bool connected_without(const PlanarGraph& g, const std::vector<char>& present, int skip) {
  int start = -1, total = 0;
  for (int v = 0; v < g.n; ++v)
    if (present[v] && v != skip) {
      ++total;
      if (start < 0) start = v;
    }
  if (total == 0) return true;
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.adj[v])
      if (present[w] && w != skip && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == total;
}

// Necessary conditions of a canonical order checked without the library: every prefix with at least
// three vertices is biconnected, the earlier neighbours of each new vertex are connected, and every
// inner vertex has a later neighbour.
std::string prefix_check(const PlanarGraph& g, const std::vector<int>& pi) {
  std::vector<int> rank(g.n);
  for (int k = 0; k < g.n; ++k) rank[pi[k]] = k;
  std::vector<char> present(g.n, 0);
  for (int k = 0; k < g.n; ++k) {
    int v = pi[k];
    present[v] = 1;
    if (k >= 2) {
      for (int u = 0; u < g.n; ++u)
        if (present[u] && !connected_without(g, present, u)) return "prefix " + std::to_string(k + 1) + " not biconnected";
      std::vector<char> nb(g.n, 0);
      int count = 0;
      for (int w : g.adj[v])
        if (rank[w] < k) nb[w] = 1, ++count;
      if (count < 2) return "vertex " + std::to_string(v) + " has fewer than two earlier neighbours";
      // Earlier neighbours are connected among themselves (a contour path, possibly with chords).
      if (!connected_without(g, nb, -1)) return "neighbours of " + std::to_string(v) + " not connected";
    }
    if (k >= 1 && k + 1 < g.n) {
      bool later = false;
      for (int w : g.adj[v]) later = later || rank[w] > k;
      if (!later) return "vertex " + std::to_string(v) + " has no later neighbour";
    }
  }
  return "";
}

PlanarGraph cycle(int n) {
  std::vector<std::vector<int>> adj(n);
  std::vector<int> outer;
  for (int i = 0; i < n; ++i) {
    adj[i] = {(i + n - 1) % n, (i + 1) % n};
    outer.push_back(i);
  }
  PlanarGraph g;
  g.n = n;
  g.adj = adj;
  g.outer = outer;
  return g;
}

}  // namespace

TEST(Graph, MaximalExamples) {
  EXPECT_TRUE(check_maximal_planar(gen_octahedron()).ok);
  EXPECT_TRUE(check_maximal_planar(gen_k4()).ok);
  MaximalityReport r = check_maximal_planar(cycle(5));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.missing_edges, 4);
}

TEST(Graph, MaximalityAgreesWithFaceWalk) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    int n = 4 + static_cast<int>(rng() % 40);
    PlanarGraph g = random_maximal_planar(n, rng);
    bool tri = false;
    int f = count_faces(g, tri);
    EXPECT_TRUE(tri && n - g.edge_count() + f == 2);
    EXPECT_TRUE(check_maximal_planar(g).ok);

    // Drop an edge that is not on the outer face.
    std::set<std::pair<int, int>> outer_edges;
    for (size_t i = 0; i < g.outer.size(); ++i) {
      int a = g.outer[i], b = g.outer[(i + 1) % g.outer.size()];
      outer_edges.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto [a, b] : g.edges()) {
      if (outer_edges.count({a, b})) continue;
      PlanarGraph h = g;
      h.adj[a].erase(std::find(h.adj[a].begin(), h.adj[a].end(), b));
      h.adj[b].erase(std::find(h.adj[b].begin(), h.adj[b].end(), a));
      bool tri2 = true;
      count_faces(h, tri2);
      EXPECT_FALSE(tri2);
      MaximalityReport r = check_maximal_planar(h);
      EXPECT_FALSE(r.ok);
      EXPECT_EQ(r.missing_edges, 1);
      break;
    }
  }
}

TEST(Graph, EmbeddingChecks) {
  PlanarGraph g = gen_octahedron();
  EXPECT_NO_THROW(check_embedding(g));
  PlanarGraph bad = g;
  std::swap(bad.adj[0][0], bad.adj[0][1]);
  EXPECT_THROW(check_embedding(bad), EmbeddingError);
  PlanarGraph wrong_outer = g;
  wrong_outer.outer = {0, 1, 3};
  EXPECT_THROW(check_embedding(wrong_outer), EmbeddingError);
}

TEST(Graph, FileRoundTrip) {
  std::mt19937_64 rng(9);
  PlanarGraph g = random_maximal_planar(25, rng);
  std::stringstream s;
  write_graph(s, g);
  PlanarGraph h = read_graph(s);
  EXPECT_EQ(h.adj, g.adj);
  EXPECT_EQ(h.outer, g.outer);
}

TEST(Graph, ParserRejectsAsymmetry) {
  std::istringstream dup("3\n1 1\n0 2\n1 0\nouter: 0 1 2\n");
  EXPECT_THROW(read_graph(dup), GraphError);
  std::istringstream asym("3\n1 2\n0\n0 1\nouter: 0 1 2\n");
  EXPECT_THROW(read_graph(asym), GraphError);
  std::istringstream no_outer("3\n1 2\n2 0\n0 1\n");
  EXPECT_THROW(read_graph(no_outer), GraphError);
}

TEST(Graph, CanonicalOrderSmallCases) {
  PlanarGraph t = gen_triangle();
  CanonicalOrder o = canonical_order(t);
  EXPECT_EQ(o.pi.size(), 3u);
  EXPECT_EQ(verify_canonical_order(t, o.pi), "");

  PlanarGraph k4 = gen_k4();
  auto [v1, v2] = default_base(k4);
  CanonicalOrder ok4 = canonical_order(k4, v1, v2);
  ASSERT_EQ(ok4.pi.size(), 4u);
  EXPECT_EQ(ok4.pi[0], v1);
  EXPECT_EQ(ok4.pi[1], v2);
  // The single inner vertex comes third and the remaining outer vertex last.
  std::set<int> outer(k4.outer.begin(), k4.outer.end());
  EXPECT_FALSE(outer.count(ok4.pi[2]));
  EXPECT_TRUE(outer.count(ok4.pi[3]));
  EXPECT_EQ(verify_canonical_order(k4, ok4.pi), "");

  PlanarGraph oct = gen_octahedron();
  CanonicalOrder oo = canonical_order(oct);
  EXPECT_EQ(oo.pi.size(), 6u);
  EXPECT_EQ(verify_canonical_order(oct, oo.pi), "");
  EXPECT_EQ(prefix_check(oct, oo.pi), "");
}

TEST(Graph, CanonicalOrderOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + static_cast<int>(rng() % 62);
    PlanarGraph g = random_maximal_planar(n, rng);
    CanonicalOrder o = canonical_order(g);
    ASSERT_EQ(static_cast<int>(o.pi.size()), n);
    EXPECT_EQ(verify_canonical_order(g, o.pi), "") << "n=" << n;
    EXPECT_EQ(prefix_check(g, o.pi), "") << "n=" << n;
  }
}

TEST(Graph, VerifierRejectsBadOrders) {
  PlanarGraph g = gen_octahedron();
  CanonicalOrder o = canonical_order(g);
  std::vector<int> rev(o.pi.rbegin(), o.pi.rend());
  EXPECT_NE(verify_canonical_order(g, rev), "");
  std::vector<int> swapped = o.pi;
  std::swap(swapped[2], swapped[5]);
  EXPECT_NE(verify_canonical_order(g, swapped), "");
}

TEST(Graph, CanonicalOrderNeedsMaximal) {
  EXPECT_THROW(canonical_order(cycle(5)), NotMaximalError);
}
