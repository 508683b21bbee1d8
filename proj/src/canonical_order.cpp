#include "smog/graph.hpp"

#include <algorithm>
#include <set>

namespace smog {

namespace {

// The dart v2 -> v1 must run along the outer face, so that v1 is left of v2 with the outer face above.
bool base_oriented(const PlanarGraph& g, int v1, int v2) {
  if (g.outer.size() != 3) return false;
  const auto& o = g.outer;
  if (std::find(o.begin(), o.end(), v1) == o.end() || std::find(o.begin(), o.end(), v2) == o.end()) return false;
  if (!g.has_edge(v1, v2)) return false;
  int third = -1;
  for (int x : o)
    if (x != v1 && x != v2) third = x;
  // The face on the left of v2 -> v1 continues to cw_next(v1, v2).
  return cw_next(g, v1, v2) == third;
}

}  // namespace

std::pair<int, int> default_base(const PlanarGraph& g) {
  const auto& o = g.outer;
  if (o.size() != 3) throw NotMaximalError("outer face is not a triangle", 0);
  for (int i = 0; i < 3; ++i) {
    int a = o[i], b = o[(i + 1) % 3];
    if (base_oriented(g, a, b)) return {a, b};
    if (base_oriented(g, b, a)) return {b, a};
  }
  throw EmbeddingError("outer face orientation could not be determined");
}

CanonicalOrder canonical_order(const PlanarGraph& g) {
  auto [a, b] = default_base(g);
  return canonical_order(g, a, b);
}

CanonicalOrder canonical_order(const PlanarGraph& g, int v1, int v2) {
  MaximalityReport rep = check_maximal_planar(g);
  if (!rep.ok) throw NotMaximalError("graph is not maximal planar: " + rep.message, rep.missing_edges);
  if (!base_oriented(g, v1, v2) && !(g.n == 3 && g.has_edge(v1, v2)))
    throw GraphError("v1, v2 must be consecutive on the outer face with the outer face to the left of v2 -> v1");
  const int n = g.n;
  int vn = -1;
  for (int x : g.outer)
    if (x != v1 && x != v2) vn = x;

  std::vector<int> prev(n, -1), next(n, -1), chords(n, 0);
  std::vector<char> outer(n, 0), removed(n, 0);
  next[v1] = vn;
  prev[vn] = v1;
  next[vn] = v2;
  prev[v2] = vn;
  outer[v1] = outer[v2] = outer[vn] = 1;

  std::vector<int> removal;
  std::vector<std::vector<int>> lower_of(n);
  for (int step = 0; step < n - 2; ++step) {
    int v = -1;
    for (int w = next[v1]; w != v2; w = next[w])
      if (chords[w] == 0) {
        v = w;
        break;
      }
    if (v == -1) throw GraphError("no removable contour vertex; embedding is inconsistent");
    int wl = prev[v], wr = next[v];
    // Remaining neighbours of v run counter-clockwise from wl to wr.
    std::vector<int> path{wl};
    const auto& rot = g.adj[v];
    int deg = static_cast<int>(rot.size());
    int i = static_cast<int>(std::find(rot.begin(), rot.end(), wl) - rot.begin());
    for (int s = 1; s < deg; ++s) {
      int u = rot[((i - s) % deg + deg) % deg];
      if (removed[u]) continue;
      path.push_back(u);
      if (u == wr) break;
    }
    if (path.back() != wr) throw GraphError("contour neighbours of a peeled vertex are not consecutive");
    removed[v] = 1;
    outer[v] = 0;
    removal.push_back(v);
    lower_of[v] = path;
    if (path.size() == 2) {
      // wl and wr become contour neighbours; their edge was a chord.
      --chords[wl];
      --chords[wr];
    }
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      next[path[k]] = path[k + 1];
      prev[path[k + 1]] = path[k];
    }
    for (size_t k = 1; k + 1 < path.size(); ++k) {
      int u = path[k];
      for (int x : g.adj[u]) {
        if (!outer[x] || removed[x] || x == prev[u] || x == next[u]) continue;
        ++chords[u];
        ++chords[x];
      }
      outer[u] = 1;
    }
  }

  CanonicalOrder co;
  co.pi = {v1, v2};
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) co.pi.push_back(*it);
  co.rank.assign(n, -1);
  for (int k = 0; k < n; ++k) co.rank[co.pi[k]] = k;
  co.lower.assign(n, {});
  for (int k = 2; k < n; ++k) co.lower[k] = lower_of[co.pi[k]];
  return co;
}

std::vector<int> contour_at(const PlanarGraph& g, const CanonicalOrder& order, int k) {
  (void)g;
  std::vector<int> c{order.v(1), order.v(2)};
  for (int j = 3; j <= k; ++j) {
    const auto& low = order.lower[j - 1];
    auto l = std::find(c.begin(), c.end(), low.front());
    auto r = std::find(c.begin(), c.end(), low.back());
    std::vector<int> nc(c.begin(), l + 1);
    nc.push_back(order.v(j));
    nc.insert(nc.end(), r, c.end());
    c = std::move(nc);
  }
  return c;
}

namespace {

PlanarGraph induced_prefix(const PlanarGraph& g, const std::vector<int>& rank, int k) {
  PlanarGraph h;
  h.n = g.n;
  h.adj.assign(g.n, {});
  for (int v = 0; v < g.n; ++v) {
    if (rank[v] >= k) continue;
    for (int u : g.adj[v])
      if (rank[u] < k) h.adj[v].push_back(u);
  }
  return h;
}

bool prefix_biconnected(const PlanarGraph& h, const std::vector<int>& rank, int k) {
  std::vector<int> gone;
  for (int v = 0; v < h.n; ++v)
    if (rank[v] >= k) gone.push_back(v);
  if (component_count_without(h, gone) != 1) return false;
  if (k <= 2) return true;
  for (int v = 0; v < h.n; ++v) {
    if (rank[v] >= k) continue;
    gone.push_back(v);
    bool ok = component_count_without(h, gone) == 1;
    gone.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::string verify_canonical_order(const PlanarGraph& g, const std::vector<int>& pi) {
  const int n = g.n;
  if (static_cast<int>(pi.size()) != n) return "order has wrong length";
  std::vector<int> rank(n, -1);
  for (int k = 0; k < n; ++k) {
    if (pi[k] < 0 || pi[k] >= n || rank[pi[k]] != -1) return "order is not a permutation";
    rank[pi[k]] = k;
  }
  if (n < 3) return "";
  std::set<int> outer(g.outer.begin(), g.outer.end());
  if (!outer.count(pi[0]) || !outer.count(pi[1]) || !outer.count(pi[n - 1]))
    return "v1, v2, vn must form the outer face";
  int v1 = pi[0], v2 = pi[1];
  for (int k = 2; k <= n; ++k) {
    PlanarGraph h = induced_prefix(g, rank, k);
    if (!prefix_biconnected(h, rank, k)) return "G_" + std::to_string(k) + " is not biconnected";
    if (k == n) break;
    // Outer face of G_k: the face of the dart v2 -> v1 in the induced rotation.
    std::vector<int> contour;
    if (k == 2) {
      contour = {v1, v2};
    } else {
      int a = v2, b = v1;
      do {
        contour.push_back(a);
        int c = cw_next(h, b, a);
        a = b;
        b = c;
      } while (!(a == v2 && b == v1));
      std::set<int> uniq(contour.begin(), contour.end());
      if (uniq.size() != contour.size()) return "C_" + std::to_string(k) + " is not a simple cycle";
    }
    // Walk from v1 to v2 avoiding the edge (v1, v2).
    std::vector<int> path;
    if (k == 2) {
      path = contour;
    } else {
      auto it = std::find(contour.begin(), contour.end(), v1);
      std::rotate(contour.begin(), it, contour.end());
      path = contour;  // v1 ... v2 along the contour (v2 -> v1 is the closing dart)
      if (path.back() != v2) return "C_" + std::to_string(k) + " does not contain the edge (v1, v2)";
    }
    int vk1 = pi[k];
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(path.size()); ++i)
      if (g.has_edge(vk1, path[i])) pos.push_back(i);
    int nb = 0;
    for (int u : g.adj[vk1])
      if (rank[u] < k) ++nb;
    if (nb < 2) return "v_" + std::to_string(k + 1) + " has fewer than two neighbours in G_" + std::to_string(k);
    if (static_cast<int>(pos.size()) != nb)
      return "v_" + std::to_string(k + 1) + " has a neighbour off the contour C_" + std::to_string(k);
    if (pos.back() - pos.front() + 1 != static_cast<int>(pos.size()))
      return "neighbours of v_" + std::to_string(k + 1) + " are not consecutive on C_" + std::to_string(k);
  }
  for (int k = 1; k < n - 1; ++k) {
    bool later = false;
    for (int u : g.adj[pi[k]])
      if (rank[u] > k) later = true;
    if (!later) return "v_" + std::to_string(k + 1) + " has no later neighbour";
  }
  return "";
}

}  // namespace smog
