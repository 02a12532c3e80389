#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "comkit/sign_system.hpp"

namespace comkit {

// Tope graph: topes as vertices, Hamming-1 pairs as edges labelled by the differing element.
struct Graph {
  GroundSet ground;
  std::vector<SignVector> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
  std::vector<std::size_t> edge_label;
  bool semisimple_input = true;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

// Maximal elements of (L, <=), in canonical order.
std::vector<SignVector> topes(const SignSystem& system);
Graph tope_graph(const SignSystem& system);

struct PartialCubeResult {
  bool holds = true;
  // First pair (by vertex index) whose graph distance differs from its Hamming distance.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

PartialCubeResult is_partial_cube(const Graph& g);

// All-pairs BFS distances; unreachable pairs get SIZE_MAX.
std::vector<std::vector<std::size_t>> graph_distances(const Graph& g);

struct EdgeCovectorResult {
  bool holds = true;
  std::size_t edges = 0;
  std::size_t edge_covectors = 0;  // covectors with exactly one zero among E±
};

// Requires a semisimple strong elimination system.
EdgeCovectorResult edge_covector_check(const SignSystem& system);

// (topes(a) = topes(b)) ⇒ (a = b); both must be semisimple COMs on one ground set.
bool verify_tope_determination(const SignSystem& a, const SignSystem& b);

}  // namespace comkit
