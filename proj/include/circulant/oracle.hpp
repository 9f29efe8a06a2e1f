#pragma once

#include <algorithm>
#include <array>
#include <queue>
#include <vector>

#include "circulant/diameter_result.hpp"
#include "circulant/params.hpp"

namespace circulant {

/// Reference adjacency for C_n(1, s): neighbors are generated from the fixed
/// offsets {+1, -1, +s, -s} rather than stored.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(const CirculantParams& p)
      : n_(p.n()), offsets_{1, p.n() - 1, p.s(), p.n() - p.s()} {}

  Int n() const noexcept { return n_; }

  /// Sorted; the four offsets are pairwise distinct mod n because 2 <= s < n/2.
  std::array<Int, 4> neighbors(Int v) const {
    std::array<Int, 4> out;
    for (std::size_t k = 0; k < 4; ++k) out[k] = (v + offsets_[k]) % n_;
    std::sort(out.begin(), out.end());
    return out;
  }

  Int degree(Int v) const {
    auto nb = neighbors(v);
    return std::unique(nb.begin(), nb.end()) - nb.begin();
  }

  bool adjacent(Int u, Int v) const {
    const Int diff = (v - u + n_) % n_;
    return std::find(offsets_.begin(), offsets_.end(), diff) != offsets_.end();
  }

 private:
  Int n_;
  std::array<Int, 4> offsets_;
};

inline ExplicitGraph build_adjacency(const CirculantParams& p) {
  return ExplicitGraph(p);
}

/// Hop distances from `source` to every vertex.
inline std::vector<Int> bfs_distances(const ExplicitGraph& g, Int source) {
  if (source < 0 || source >= g.n()) throw VertexOutOfRange(source, g.n());
  std::vector<Int> dist(static_cast<std::size_t>(g.n()), -1);
  std::queue<Int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Int u = frontier.front();
    frontier.pop();
    for (Int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

enum class OracleSources { vertex_zero, all };

/// Diameter by breadth-first search. By vertex-transitivity the eccentricity of
/// vertex 0 is the diameter; OracleSources::all searches from every vertex.
inline DiameterResult oracle_diameter(const CirculantParams& p,
                                      OracleSources sources =
                                          OracleSources::vertex_zero) {
  const auto g = build_adjacency(p);
  const auto dist = bfs_distances(g, 0);

  DiameterResult out;
  out.method = DiameterMethod::oracle;
  out.value = *std::max_element(dist.begin(), dist.end());
  if (sources == OracleSources::all) {
    for (Int v = 1; v < p.n(); ++v) {
      const auto dv = bfs_distances(g, v);
      out.value = std::max(out.value, *std::max_element(dv.begin(), dv.end()));
    }
  }
  for (Int i = 2; i <= p.n() / 2; ++i) {
    if (dist[i] == out.value) out.witnesses.push_back(i);
  }
  return out;
}

}  // namespace circulant
