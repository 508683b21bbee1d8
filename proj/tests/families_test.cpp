#include <gtest/gtest.h>

#include <algorithm>
#include <queue>

#include "smog/families.hpp"

using namespace smog;

namespace {

// Connected components after deleting `removed`, by breadth-first search.
int components(const PlanarGraph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.n, 0), seen(g.n, 0);
  for (int v : removed) gone[v] = 1;
  int count = 0;
  for (int s = 0; s < g.n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v])
        if (!gone[w] && !seen[w]) seen[w] = 1, q.push(w);
    }
  }
  return count;
}

bool brute_triconnected(const PlanarGraph& g) {
  if (g.n < 4) return false;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (components(g, {a, b}) != 1) return false;
  return true;
}

}  // namespace

TEST(Families, TrainsShape) {
  for (int k : {1, 2, 3, 10}) {
    PlanarGraph g = gen_trains(k);
    EXPECT_EQ(g.n, 20 * k);
    for (int v = 0; v < g.n; ++v) EXPECT_EQ(g.degree(v), 4) << "k=" << k << " v=" << v;
    EXPECT_NO_THROW(check_embedding(g));
    EXPECT_FALSE(check_maximal_planar(g).ok);
    EXPECT_EQ(components(g, {}), 1);
  }
  EXPECT_EQ(trains_vertex(1, 't', 'c'), 0);
  EXPECT_EQ(trains_vertex(1, 'b', 'n'), 6);
}

TEST(Families, TrainsCertificates) {
  for (int k : {1, 2, 4}) {
    PlanarGraph g = gen_trains(k);
    Certificates c = gen_trains_certificates(k);
    EXPECT_EQ(c.smooth.model, Model::Smooth);
    EXPECT_EQ(c.octilinear.model, Model::Octilinear);
    for (const Drawing* d : {&c.smooth, &c.octilinear}) {
      ValidationReport r = validate(g, *d);
      EXPECT_TRUE(r.planar()) << summary(r);
      EXPECT_TRUE(r.ports_ok()) << summary(r);
      EXPECT_TRUE(r.model_ok()) << summary(r);
      EXPECT_EQ(r.max_complexity, 1);
      // The certificate's rotation system is the graph's.
      PlanarGraph e = embed_from_drawing(*d);
      EXPECT_EQ(e.n, g.n);
      EXPECT_EQ(e.edge_count(), g.edge_count());
    }
  }
}

TEST(Families, ChainBlocks) {
  for (int k = 0; k <= 4; ++k) {
    PlanarGraph g = gen_chain(k);
    EXPECT_NO_THROW(check_embedding(g));
    EXPECT_EQ(static_cast<int>(biconnected_component_sizes(g).size()), k + 2);
    for (int v = 0; v < g.n; ++v) EXPECT_EQ(g.degree(v), 4) << "k=" << k << " v=" << v;
    // Each cut vertex separates the chain.
    for (int c : chain_cut_vertices(k)) EXPECT_EQ(components(g, {c}), 2) << "k=" << k << " cut=" << c;
    EXPECT_EQ(static_cast<int>(chain_cut_vertices(k).size()), k + 1);
  }
}

TEST(Families, NecklaceComponents) {
  for (int k = 0; k <= 4; ++k) {
    PlanarGraph g = gen_necklace(k);
    EXPECT_NO_THROW(check_embedding(g));
    for (int v = 0; v < g.n; ++v) EXPECT_EQ(g.degree(v), 4) << "k=" << k << " v=" << v;
    EXPECT_EQ(components(g, necklace_junctions(k)), 2 * k + 4);
    EXPECT_EQ(component_count_without(g, necklace_junctions(k)), 2 * k + 4);
    EXPECT_EQ(biconnected_component_sizes(g).size(), 1u);
  }
}

TEST(Families, GraphB) {
  PlanarGraph b = gen_graph_b();
  EXPECT_EQ(b.n, 11);
  EXPECT_NO_THROW(check_embedding(b));
  std::vector<int> outer = b.outer;
  std::sort(outer.begin(), outer.end());
  EXPECT_EQ(outer, (std::vector<int>{7, 8, 9, 10}));
  EXPECT_EQ(b.degree(0), 4);
}

TEST(Families, ComponentC) {
  PlanarGraph c = gen_component_c();
  EXPECT_EQ(c.n, 7);
  EXPECT_EQ(c.degree(6), 2);
  EXPECT_FALSE(is_triconnected(c));
  EXPECT_FALSE(brute_triconnected(c));
  PlanarGraph s = suppress_degree_two(c);
  EXPECT_EQ(s.n, 6);
  EXPECT_TRUE(is_triconnected(s));
  EXPECT_TRUE(brute_triconnected(s));
  EXPECT_TRUE(check_maximal_planar(s).ok);
}

TEST(Families, TriconnectivityAgreesWithBruteForce) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    PlanarGraph g = random_maximal_planar(4 + static_cast<int>(rng() % 16), rng);
    EXPECT_EQ(is_triconnected(g), brute_triconnected(g));
  }
  for (int k = 0; k <= 1; ++k) EXPECT_EQ(is_triconnected(gen_chain(k)), brute_triconnected(gen_chain(k)));
  EXPECT_EQ(is_triconnected(gen_graph_b()), brute_triconnected(gen_graph_b()));
}

TEST(Families, Caterpillar) {
  for (int s : {1, 2, 5}) {
    PlanarGraph g = gen_caterpillar(s);
    EXPECT_NO_THROW(check_embedding(g));
    for (int i = 0; i < s; ++i) EXPECT_EQ(g.degree(i), 8);
    for (int v = s; v < g.n; ++v) EXPECT_EQ(g.degree(v), 1);
    EXPECT_EQ(g.edge_count(), g.n - 1);
  }
}

TEST(Families, SmallFixedGraphs) {
  EXPECT_TRUE(check_maximal_planar(gen_octahedron()).ok);
  EXPECT_EQ(gen_octahedron().n, 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(gen_octahedron().degree(v), 4);
  EXPECT_TRUE(check_maximal_planar(gen_k4()).ok);
  EXPECT_EQ(gen_family("triangle", 0).n, 3);
}

TEST(Families, DomainErrors) {
  EXPECT_THROW(gen_trains(0), DomainError);
  EXPECT_THROW(gen_chain(-1), DomainError);
  EXPECT_THROW(gen_necklace(-1), DomainError);
  EXPECT_THROW(gen_caterpillar(0), DomainError);
  EXPECT_THROW(gen_family("dodecahedron", 1), DomainError);
}
