#include "comkit/topes.hpp"

#include <deque>
#include <limits>
#include <unordered_map>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"

namespace comkit {

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

std::vector<SignVector> topes(const SignSystem& s) {
  std::vector<SignVector> out;
  for (const auto& x : s) {
    bool maximal = true;
    for (const auto& y : s) {
      if (!(y == x) && leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

Graph tope_graph(const SignSystem& s) {
  const bool semisimple = check_nonredundancy(s, Redundancy::RN1_STAR).holds &&
                          check_nonredundancy(s, Redundancy::RN2_STAR).holds;
  Graph g{s.ground(), topes(s), {}, {}, semisimple};
  const std::size_t n = g.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SignVector& a = g.vertices[i];
      const SignVector& b = g.vertices[j];
      ElementSet diff = (a.positive() ^ b.positive()) | (a.negative() ^ b.negative());
      if (diff.count() == 1) {
        g.edges.emplace_back(i, j);
        g.edge_label.push_back(diff.first());
      }
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> graph_distances(const Graph& g) {
  const std::size_t n = g.vertices.size();
  const auto adj = g.adjacency();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, std::numeric_limits<std::size_t>::max()));
  for (std::size_t src = 0; src < n; ++src) {
    auto& d = dist[src];
    d[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (auto w : adj[v]) {
        if (d[w] == std::numeric_limits<std::size_t>::max()) {
          d[w] = d[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

PartialCubeResult is_partial_cube(const Graph& g) {
  const auto dist = graph_distances(g);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (dist[i][j] != hamming(g.vertices[i], g.vertices[j])) return {false, std::make_pair(i, j)};
  return {};
}

EdgeCovectorResult edge_covector_check(const SignSystem& s) {
  const auto report = classify(s);
  if (!report.is_semisimple || !report.is_strong_elimination)
    throw PreconditionError("edge/covector correspondence needs a semisimple strong elimination system");
  const ElementSet pm = non_constant_elements(s);
  const Graph g = tope_graph(s);

  EdgeCovectorResult r;
  r.edges = g.edges.size();
  std::unordered_map<SignVector, std::size_t, SignVectorHash> hits;
  for (const auto& x : s) {
    ElementSet z = x.zeros();
    if (z.subset_of(pm) && z.count() == 1) hits.emplace(x, 0);
  }
  r.edge_covectors = hits.size();
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    SignVector bary = g.vertices[g.edges[k].first];
    bary.set(g.edge_label[k], 0);
    auto it = hits.find(bary);
    if (it == hits.end()) {
      r.holds = false;
      continue;
    }
    ++it->second;
  }
  for (const auto& [x, count] : hits)
    if (count != 1) r.holds = false;
  return r;
}

bool verify_tope_determination(const SignSystem& a, const SignSystem& b) {
  if (!(a.ground() == b.ground())) throw PreconditionError("systems live on different ground sets");
  for (const auto* s : {&a, &b}) {
    const auto r = classify(*s);
    if (!r.is_com || !r.is_semisimple) throw PreconditionError("tope determination needs semisimple COMs");
  }
  if (topes(a) != topes(b)) return true;
  return a == b;
}

}  // namespace comkit
