#include "smog/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace smog {

namespace {

std::vector<std::vector<int>> rotation_from_vectors(int n, const std::vector<EdgeVector>& edges) {
  std::vector<std::vector<std::pair<double, int>>> around(n);
  for (const auto& e : edges) {
    around[e.u].push_back({std::atan2(e.dy, e.dx), e.v});
    around[e.v].push_back({std::atan2(-e.dy, -e.dx), e.u});
  }
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    auto& a = around[v];
    std::sort(a.begin(), a.end(), [](auto& x, auto& y) { return x.first > y.first; });
    for (auto& [ang, u] : a) adj[v].push_back(u);
  }
  return adj;
}

void pick_longest_outer(PlanarGraph& g) {
  size_t best = 0;
  for (auto& f : faces(g))
    if (f.size() > best) {
      best = f.size();
      g.outer = f;
    }
}

}  // namespace

PlanarGraph embed_from_vectors(int n, const std::vector<EdgeVector>& edges) {
  PlanarGraph g;
  g.n = n;
  g.adj = rotation_from_vectors(n, edges);
  pick_longest_outer(g);
  return g;
}

PlanarGraph embed_from_drawing(const Drawing& d) {
  const int n = static_cast<int>(d.coords.size());
  std::vector<std::vector<std::pair<int, int>>> around(n);
  for (size_t i = 0; i < d.edges.size(); ++i) {
    auto prims = normalized(d.geometry[i]);
    auto [u, v] = d.edges[i];
    around[u].push_back({static_cast<int>(start_tangent(prims.front())), v});
    around[v].push_back({static_cast<int>(opposite(end_tangent(prims.back()))), u});
  }
  PlanarGraph g;
  g.n = n;
  g.adj.resize(n);
  for (int v = 0; v < n; ++v) {
    auto& a = around[v];
    std::sort(a.begin(), a.end(), [](auto& x, auto& y) { return x.first > y.first; });
    for (size_t j = 0; j + 1 < a.size(); ++j)
      if (a[j].first == a[j + 1].first) throw EmbeddingError("two edges share a port at vertex " + std::to_string(v));
    for (auto& [port, u] : a) g.adj[v].push_back(u);
  }
  double best = 0;
  for (auto& f : faces(g)) {
    double area = 0;
    for (size_t i = 0; i < f.size(); ++i) {
      const Point& p = d.coords[f[i]];
      const Point& q = d.coords[f[(i + 1) % f.size()]];
      area += p.x.get_d() * q.y.get_d() - q.x.get_d() * p.y.get_d();
    }
    if (area < best) {
      best = area;
      g.outer = f;
    }
  }
  return g;
}

PlanarGraph gen_triangle() { return make_graph(3, {{1, 2}, {2, 0}, {0, 1}}, {0, 1, 2}); }

PlanarGraph gen_k4() {
  // 0, 1, 2 outer, 3 inside.
  std::vector<EdgeVector> e{{0, 1, 4, 0}, {1, 2, -2, 4}, {2, 0, -2, -4}, {0, 3, 2, 1.5}, {1, 3, -2, 1.5}, {2, 3, 0, -2.5}};
  PlanarGraph g = embed_from_vectors(4, e);
  g.outer = {0, 1, 2};
  return g;
}

PlanarGraph gen_octahedron() {
  const double xy[6][2] = {{0, 0}, {12, 0}, {6, 10}, {8, 4}, {4, 4}, {6, 2}};
  const int es[12][2] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};
  std::vector<EdgeVector> e;
  for (auto& [u, v] : es) e.push_back({u, v, xy[v][0] - xy[u][0], xy[v][1] - xy[u][1]});
  PlanarGraph g = embed_from_vectors(6, e);
  g.outer = {0, 1, 2};
  return g;
}

int trains_vertex(int i, char j, char part) {
  static const std::string parts = "cnwes";
  return 5 * (2 * (i - 1) + (j == 'b' ? 1 : 0)) + static_cast<int>(parts.find(part));
}

namespace {

Drawing trains_drawing(int k, Model model) {
  if (k < 1) throw DomainError("trains need k >= 1");
  Drawing d;
  d.model = model;
  const int n = 20 * k;
  d.coords.resize(n);
  auto add = [&](int u, int v, std::vector<Primitive> geo) {
    d.edges.push_back({u, v});
    d.geometry.push_back(std::move(geo));
  };
  auto P = [](Rational x, Rational y) { return Point{x, y}; };
  for (int i = 1; i <= 2 * k; ++i)
    for (char j : {'t', 'b'}) {
      Rational X = 3 * i, Y = j == 't' ? 3 : 0;
      int c = trains_vertex(i, j, 'c'), nn = trains_vertex(i, j, 'n'), w = trains_vertex(i, j, 'w'),
          e = trains_vertex(i, j, 'e'), s = trains_vertex(i, j, 's');
      d.coords[c] = P(X, Y);
      d.coords[nn] = P(X, Y + 1);
      d.coords[w] = P(X - 1, Y);
      d.coords[e] = P(X + 1, Y);
      d.coords[s] = P(X, Y - 1);
      for (int r : {nn, w, e, s}) add(c, r, {Segment{d.coords[c], d.coords[r]}});
      const int rim[4] = {nn, w, s, e};
      for (int q = 0; q < 4; ++q) {
        int a = rim[q], b = rim[(q + 1) % 4];
        if (model == Model::Smooth)
          add(a, b, {Arc{d.coords[c], 1, d.coords[a], d.coords[b], Turn::CCW}});
        else
          add(a, b, {Segment{d.coords[a], d.coords[b]}});
      }
    }
  for (char j : {'t', 'b'})
    for (int h = 1; h < 2 * k; ++h) {
      int a = trains_vertex(h, j, 'e'), b = trains_vertex(h + 1, j, 'w');
      add(a, b, {Segment{d.coords[a], d.coords[b]}});
    }
  for (int h = 1; h <= 2 * k; ++h) {
    int a = trains_vertex(h, 't', 's'), b = trains_vertex(h, 'b', 'n');
    add(a, b, {Segment{d.coords[a], d.coords[b]}});
  }
  // Green pairs: north vertices on top, south vertices at the bottom.
  for (int h = 1; h <= k; ++h)
    for (char j : {'t', 'b'}) {
      char part = j == 't' ? 'n' : 's';
      int a = trains_vertex(2 * h - 1, j, part), b = trains_vertex(2 * h, j, part);
      const Point& pa = d.coords[a];
      const Point& pb = d.coords[b];
      if (model == Model::Smooth) {
        Point mid{(pa.x + pb.x) / 2, pa.y};
        add(a, b, {Arc{mid, Rational(3, 2), pa, pb, j == 't' ? Turn::CW : Turn::CCW}});
      } else {
        add(a, b, {Segment{pa, pb}});
      }
    }
  // Gray end edges.
  for (auto [i, part] : {std::pair{1, 'w'}, std::pair{2 * k, 'e'}}) {
    int a = trains_vertex(i, 't', part), b = trains_vertex(i, 'b', part);
    const Point& pa = d.coords[a];
    const Point& pb = d.coords[b];
    if (model == Model::Smooth) {
      Point mid{pa.x, (pa.y + pb.y) / 2};
      add(a, b, {Arc{mid, Rational(3, 2), pa, pb, part == 'w' ? Turn::CCW : Turn::CW}});
    } else {
      add(a, b, {Segment{pa, pb}});
    }
  }
  return d;
}

}  // namespace

PlanarGraph gen_trains(int k) { return embed_from_drawing(trains_drawing(k, Model::Smooth)); }

Certificates gen_trains_certificates(int k) { return {trains_drawing(k, Model::Smooth), trains_drawing(k, Model::Octilinear)}; }

namespace {

// Octahedron coordinates shared by C and the middle chain blocks.
const double kOcta[6][2] = {{0, 0}, {12, 0}, {6, 10}, {8, 4}, {4, 4}, {6, 2}};
const int kOctaEdges[12][2] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};

// Octahedron on ids base..base+5 with the listed edges subdivided by the given vertex ids.
void octa_block(int base, const std::vector<std::pair<int, int>>& subdivided, const std::vector<int>& mids,
                std::vector<EdgeVector>& out) {
  for (auto& [a, b] : kOctaEdges) {
    double dx = kOcta[b][0] - kOcta[a][0], dy = kOcta[b][1] - kOcta[a][1];
    int which = -1;
    for (size_t i = 0; i < subdivided.size(); ++i)
      if ((subdivided[i].first == a && subdivided[i].second == b) || (subdivided[i].first == b && subdivided[i].second == a))
        which = static_cast<int>(i);
    if (which < 0) {
      out.push_back({base + a, base + b, dx, dy});
    } else {
      out.push_back({base + a, mids[which], dx, dy});
      out.push_back({mids[which], base + b, dx, dy});
    }
  }
}

}  // namespace

PlanarGraph gen_component_c() {
  std::vector<EdgeVector> e;
  octa_block(0, {{0, 1}}, {6}, e);
  PlanarGraph g = embed_from_vectors(7, e);
  g.outer = {0, 6, 1, 2};
  std::reverse(g.outer.begin(), g.outer.end());
  auto fs = faces(g);
  for (auto& f : fs)
    if (f.size() == 4) g.outer = f;
  return g;
}

std::vector<int> chain_cut_vertices(int k) {
  std::vector<int> cuts;
  for (int i = 0; i <= k; ++i) cuts.push_back(6 * (k + 2) + i);
  return cuts;
}

PlanarGraph gen_chain(int k) {
  if (k < 0) throw DomainError("chain needs k >= 0");
  // Block b (0..k+1) owns octahedron vertices 6b..6b+5; cut vertex i joins blocks i and i+1.
  const int blocks = k + 2;
  const int n = 6 * blocks + (k + 1);
  auto cut = [&](int i) { return 6 * blocks + i; };
  // Blocks are embedded one at a time; at a cut vertex the two blocks' neighbours stay consecutive.
  PlanarGraph g;
  g.n = n;
  g.adj.resize(n);
  for (int b = 0; b < blocks; ++b) {
    std::vector<EdgeVector> e;
    std::vector<std::pair<int, int>> sub;
    std::vector<int> mids;
    // The right cut sits on the edge (1, 2) and the left cut on the edge (0, 4), which are disjoint.
    if (b > 0) {
      sub.push_back({0, 4});
      mids.push_back(cut(b - 1));
    }
    if (b + 1 < blocks) {
      sub.push_back({1, 2});
      mids.push_back(cut(b));
    }
    octa_block(6 * b, sub, mids, e);
    auto rot = rotation_from_vectors(n, e);
    for (int v = 0; v < n; ++v) g.adj[v].insert(g.adj[v].end(), rot[v].begin(), rot[v].end());
  }
  pick_longest_outer(g);
  return g;
}

namespace {

const double kB[11][2] = {{0, 0}, {-1, 1}, {-1, -1}, {1, -1}, {1, 1}, {-3, 0}, {3, 0}, {0, 5}, {0, -5}, {-6, 0}, {6, 0}};
const int kBEdges[20][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 1}, {5, 2},
                            {6, 3}, {6, 4}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9}, {7, 10}, {8, 10}};

}  // namespace

PlanarGraph gen_graph_b() {
  std::vector<EdgeVector> e;
  for (auto& [a, b] : kBEdges) e.push_back({a, b, kB[b][0] - kB[a][0], kB[b][1] - kB[a][1]});
  PlanarGraph g = embed_from_vectors(11, e);
  g.outer = {7, 9, 8, 10};
  return g;
}

std::vector<int> necklace_junctions(int k) {
  std::vector<int> out;
  const int copies = 2 * k + 4;
  for (int i = 0; i < copies; ++i) out.push_back(10 * i + 9);
  return out;
}

PlanarGraph gen_necklace(int k) {
  if (k < 0) throw DomainError("necklace needs k >= 0");
  const int copies = 2 * k + 4;
  // Copy i uses ids 10i + (0..9) for c..q1; its q2 is q1 of the next copy.
  auto id = [&](int copy, int local) {
    if (local == 10) return 10 * ((copy + 1) % copies) + 9;
    return 10 * copy + local;
  };
  std::vector<EdgeVector> e;
  for (int i = 0; i < copies; ++i)
    for (auto& [a, b] : kBEdges) e.push_back({id(i, a), id(i, b), kB[b][0] - kB[a][0], kB[b][1] - kB[a][1]});
  return embed_from_vectors(10 * copies, e);
}

PlanarGraph gen_caterpillar(int s) {
  if (s < 1) throw DomainError("caterpillar needs s >= 1");
  std::vector<EdgeVector> e;
  int next = s;
  for (int i = 0; i < s; ++i) {
    if (i + 1 < s) e.push_back({i, i + 1, 1, 0});
    std::vector<std::pair<double, double>> dirs{{0, 1}, {1, 1}, {-1, 1}, {0, -1}, {1, -1}, {-1, -1}};
    if (i == 0) dirs.push_back({-1, 0});
    if (i + 1 == s) dirs.push_back({1, 0});
    if (s == 1) dirs = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (auto [dx, dy] : dirs) e.push_back({i, next++, dx, dy});
  }
  return embed_from_vectors(next, e);
}

PlanarGraph gen_family(const std::string& name, int k) {
  if (name == "trains") return gen_trains(k);
  if (name == "chain") return gen_chain(k);
  if (name == "necklace") return gen_necklace(k);
  if (name == "octahedron") return gen_octahedron();
  if (name == "caterpillar") return gen_caterpillar(k);
  if (name == "k4") return gen_k4();
  if (name == "triangle") return gen_triangle();
  throw DomainError("unknown family: " + name);
}

PlanarGraph suppress_degree_two(const PlanarGraph& g) {
  PlanarGraph h = g;
  std::vector<char> gone(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (h.adj[v].size() != 2) continue;
    int a = h.adj[v][0], b = h.adj[v][1];
    if (h.has_edge(a, b)) continue;
    std::replace(h.adj[a].begin(), h.adj[a].end(), v, b);
    std::replace(h.adj[b].begin(), h.adj[b].end(), v, a);
    h.adj[v].clear();
    gone[v] = 1;
  }
  std::vector<int> id(g.n, -1);
  int n = 0;
  for (int v = 0; v < g.n; ++v)
    if (!gone[v]) id[v] = n++;
  PlanarGraph out;
  out.n = n;
  out.adj.resize(n);
  for (int v = 0; v < g.n; ++v)
    if (!gone[v])
      for (int u : h.adj[v]) out.adj[id[v]].push_back(id[u]);
  for (int v : g.outer)
    if (!gone[v]) out.outer.push_back(id[v]);
  return out;
}

bool is_triconnected(const PlanarGraph& g) {
  if (g.n < 4) return false;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (!is_connected_without(g, {a, b})) return false;
  return is_connected_without(g, {});
}

}  // namespace smog
