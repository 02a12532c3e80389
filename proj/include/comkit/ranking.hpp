#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "comkit/sign_system.hpp"
#include "comkit/topes.hpp"

namespace comkit {

// Finite strict order on elements 0..n-1, given by cover pairs (a, b) meaning a < b.
class Poset {
 public:
  // Throws ParseError on a cycle, a self-loop, or an index out of range.
  Poset(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> covers);
  // Elements labelled 1..n.
  static Poset antichain(std::size_t n);
  static Poset chain(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws ParseError for an unknown label.
  std::size_t index_of(const std::string& label) const;
  // Cover pairs with transitively implied pairs removed, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  bool less(std::size_t a, std::size_t b) const { return closure_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<bool>> closure_;
};

// Ordered partition of the elements into antichains; x < y iff x's level precedes y's.
struct Ranking {
  std::vector<std::vector<std::size_t>> levels;

  // level_of()[x] is the index of the level containing x.
  std::vector<std::size_t> level_of(std::size_t n) const;
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

// Every ranking whose order contains the poset's order. GuardError past limits.max_rankings.
std::vector<Ranking> ranking_extensions(const Poset& poset, const Limits& limits = {});

// Ground set of 2-subsets {i < j}, labelled "a,b", in lexicographic order.
GroundSet pair_ground_set(const Poset& poset);

// + where i is below j, - where j is below i, 0 on a shared level.
// Throws PreconditionError when r is not a ranking extension of the poset.
SignVector encode_ranking(const Poset& poset, const Ranking& r);

// Encodings of all ranking extensions over every pair; EmptyResultError when |P| < 2.
SignSystem ranking_system(const Poset& poset, const Limits& limits = {});

// Simplified ranking system. When every pair is comparable the simplified ground set is
// empty and EmptyResultError is raised unless simplification is turned off.
SignSystem ranking_com(const Poset& poset, bool simplified = true, const Limits& limits = {});

// Size of a largest antichain.
std::size_t width(const Poset& poset);
// Incomparability is transitive.
bool is_ranking(const Poset& poset);
// Number of weak orders on k elements.
unsigned long long fubini(std::size_t k);

// Partial cube in which the coordinatewise majority of every vertex triple is a vertex.
bool is_median_graph(const Graph& g);

struct RankingReport {
  std::size_t width = 0;
  bool is_ranking = false;
  bool is_om = false;
  bool is_lopsided = false;
  bool is_com = false;
  bool om_matches = false;         // OM iff the order is a ranking
  bool lopsided_matches = false;   // lopsided iff width <= 2
  bool median_graph = false;       // checked when width <= 2
  bool permutohedra_match = true;  // checked when the order is a ranking
  std::size_t topes = 0;
  std::size_t covectors = 0;

  bool consistent() const;
};

RankingReport verify_ranking_props(const Poset& poset, const Limits& limits = {});

}  // namespace comkit
