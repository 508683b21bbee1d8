#include "smog/graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace smog {

long PlanarGraph::edge_count() const {
  long s = 0;
  for (const auto& a : adj) s += static_cast<long>(a.size());
  return s / 2;
}

bool PlanarGraph::has_edge(int u, int v) const {
  return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

std::vector<std::pair<int, int>> PlanarGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.push_back({u, v});
  std::sort(out.begin(), out.end());
  return out;
}

PlanarGraph make_graph(int n, std::vector<std::vector<int>> adj, std::vector<int> outer) {
  PlanarGraph g;
  g.n = n;
  g.adj = std::move(adj);
  g.outer = std::move(outer);
  return g;
}

static int index_in(const std::vector<int>& a, int x) {
  auto it = std::find(a.begin(), a.end(), x);
  if (it == a.end()) throw EmbeddingError("vertex " + std::to_string(x) + " missing from rotation");
  return static_cast<int>(it - a.begin());
}

int cw_next(const PlanarGraph& g, int v, int u) {
  const auto& a = g.adj[v];
  return a[(index_in(a, u) + 1) % a.size()];
}

int ccw_next(const PlanarGraph& g, int v, int u) {
  const auto& a = g.adj[v];
  return a[(index_in(a, u) + a.size() - 1) % a.size()];
}

static void check_simple(const PlanarGraph& g) {
  if (g.n < 0 || static_cast<int>(g.adj.size()) != g.n) throw EmbeddingError("adjacency size does not match n");
  for (int v = 0; v < g.n; ++v) {
    std::set<int> seen;
    for (int u : g.adj[v]) {
      if (u < 0 || u >= g.n) throw EmbeddingError("neighbour id out of range at vertex " + std::to_string(v));
      if (u == v) throw EmbeddingError("self-loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw EmbeddingError("duplicate adjacency " + std::to_string(v) + "-" + std::to_string(u));
      if (std::find(g.adj[u].begin(), g.adj[u].end(), v) == g.adj[u].end())
        throw EmbeddingError("non-symmetric adjacency " + std::to_string(v) + "-" + std::to_string(u));
    }
  }
}

std::vector<std::vector<int>> faces(const PlanarGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<char>> used(g.n);
  for (int v = 0; v < g.n; ++v) used[v].assign(g.adj[v].size(), 0);
  for (int v = 0; v < g.n; ++v) {
    for (size_t i = 0; i < g.adj[v].size(); ++i) {
      if (used[v][i]) continue;
      std::vector<int> face;
      int a = v, ai = static_cast<int>(i);
      while (!used[a][ai]) {
        used[a][ai] = 1;
        face.push_back(a);
        int b = g.adj[a][ai];
        int c = cw_next(g, b, a);
        ai = index_in(g.adj[b], c);
        a = b;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

static bool same_cycle(const std::vector<int>& f, const std::vector<int>& c) {
  if (f.size() != c.size() || f.empty()) return false;
  long m = static_cast<long>(f.size());
  for (long dirn : {1L, -1L}) {
    for (long s = 0; s < m; ++s) {
      bool ok = true;
      for (long i = 0; i < m && ok; ++i) ok = f[((s + dirn * i) % m + m) % m] == c[i];
      if (ok) return true;
    }
  }
  return false;
}

bool is_connected_without(const PlanarGraph& g, const std::vector<int>& removed) {
  return component_count_without(g, removed) <= 1;
}

int component_count_without(const PlanarGraph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.n, 0), seen(g.n, 0);
  for (int r : removed) gone[r] = 1;
  int comps = 0;
  for (int s = 0; s < g.n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.adj[v])
        if (!gone[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  return comps;
}

void check_embedding(const PlanarGraph& g) {
  check_simple(g);
  if (g.n == 0) return;
  if (!is_connected_without(g, {})) throw EmbeddingError("graph is not connected");
  auto fs = faces(g);
  long f = static_cast<long>(fs.size()), m = g.edge_count();
  if (g.n == 1) return;
  if (g.n - m + f != 2)
    throw EmbeddingError("rotation system is not planar: n - m + f = " + std::to_string(g.n - m + f));
  if (!g.outer.empty()) {
    bool found = std::any_of(fs.begin(), fs.end(), [&](const auto& face) { return same_cycle(face, g.outer); });
    if (!found) throw EmbeddingError("outer face is not a face of the embedding");
  }
}

MaximalityReport check_maximal_planar(const PlanarGraph& g) {
  check_embedding(g);
  MaximalityReport r;
  long m = g.edge_count();
  long target = g.n >= 3 ? 3L * g.n - 6 : 0;
  r.missing_edges = target - m;
  for (auto& f : faces(g))
    if (f.size() != 3) r.non_triangular_faces.push_back(f);
  if (g.n < 3) {
    r.message = "fewer than 3 vertices";
  } else if (m != target) {
    r.message = "m = " + std::to_string(m) + " but 3n-6 = " + std::to_string(target) + " (" +
                std::to_string(r.missing_edges) + " missing edges)";
  } else if (!r.non_triangular_faces.empty()) {
    r.message = std::to_string(r.non_triangular_faces.size()) + " non-triangular faces";
  } else if (g.outer.size() != 3) {
    r.message = "outer face is not a triangle";
  } else {
    r.ok = true;
  }
  return r;
}

std::vector<int> biconnected_component_sizes(const PlanarGraph& g) {
  std::vector<int> disc(g.n, -1), low(g.n, 0), sizes;
  std::vector<std::pair<int, int>> estack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : g.adj[v]) {
      if (u == parent) continue;
      if (disc[u] == -1) {
        estack.push_back({v, u});
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::set<int> verts;
          while (true) {
            auto e = estack.back();
            estack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == std::make_pair(v, u)) break;
          }
          sizes.push_back(static_cast<int>(verts.size()));
        }
      } else if (disc[u] < disc[v]) {
        estack.push_back({v, u});
        low[v] = std::min(low[v], disc[u]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

PlanarGraph read_graph(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      auto p = line.find_first_not_of(" \t\r");
      if (p != std::string::npos && line[p] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw GraphError("empty graph file");
  PlanarGraph g;
  {
    std::istringstream ss(line);
    if (!(ss >> g.n) || g.n < 0) throw GraphError("bad vertex count");
  }
  g.adj.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    if (!next_line()) throw GraphError("missing rotation for vertex " + std::to_string(v));
    std::istringstream ss(line);
    int u;
    while (ss >> u) g.adj[v].push_back(u);
    if (!ss.eof()) throw GraphError("bad token in rotation of vertex " + std::to_string(v));
  }
  if (g.n > 0) {
    if (!next_line() || line.rfind("outer:", 0) != 0) throw GraphError("missing 'outer:' line");
    std::istringstream ss(line.substr(6));
    int u;
    while (ss >> u) g.outer.push_back(u);
  }
  check_simple(g);
  for (int u : g.outer)
    if (u < 0 || u >= g.n) throw GraphError("outer face vertex out of range");
  return g;
}

void write_graph(std::ostream& out, const PlanarGraph& g) {
  out << g.n << "\n";
  for (int v = 0; v < g.n; ++v) {
    for (size_t i = 0; i < g.adj[v].size(); ++i) out << (i ? " " : "") << g.adj[v][i];
    out << "\n";
  }
  if (g.n > 0) {
    out << "outer:";
    for (int u : g.outer) out << " " << u;
    out << "\n";
  }
}

PlanarGraph random_maximal_planar(int n, std::mt19937_64& rng) {
  if (n < 3) throw GraphError("a triangulation needs at least 3 vertices");
  PlanarGraph g;
  g.n = n;
  g.adj.assign(n, {});
  g.adj[0] = {1, 2};
  g.adj[1] = {2, 0};
  g.adj[2] = {0, 1};
  g.outer = {0, 1, 2};
  std::vector<std::array<int, 3>> inner{{0, 1, 2}};
  auto insert_after = [&](int v, int after, int x) {
    auto& a = g.adj[v];
    a.insert(a.begin() + index_in(a, after) + 1, x);
  };
  for (int x = 3; x < n; ++x) {
    std::uniform_int_distribution<size_t> pick(0, inner.size() - 1);
    size_t fi = pick(rng);
    auto [a, b, c] = inner[fi];
    insert_after(b, a, x);
    insert_after(c, b, x);
    insert_after(a, c, x);
    g.adj[x] = {a, c, b};
    inner[fi] = {a, b, x};
    inner.push_back({b, c, x});
    inner.push_back({c, a, x});
  }
  return g;
}

}  // namespace smog
