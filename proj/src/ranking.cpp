#include "comkit/ranking.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"
#include "comkit/minors.hpp"

namespace comkit {

Poset::Poset(std::vector<std::string> labels, std::vector<std::pair<std::size_t, std::size_t>> covers)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ParseError("poset has no elements");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw ParseError("duplicate poset element '" + labels_[i] + "'");
  closure_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n) throw ParseError("cover pair refers to an unknown element");
    if (a == b) throw ParseError("element '" + labels_[a] + "' is below itself");
    closure_[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k][j]) closure_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (closure_[i][i]) throw ParseError("cover relation has a cycle through '" + labels_[i] + "'");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!closure_[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(closure_[a][c] && closure_[c][b]);
      if (cover) covers_.emplace_back(a, b);
    }
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Poset(std::move(labels), {});
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset(std::move(labels), std::move(covers));
}

std::size_t Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ParseError("unknown poset element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Ranking::level_of(std::size_t n) const {
  std::vector<std::size_t> out(n, SIZE_MAX);
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (auto x : levels[k]) {
      if (x >= n) throw PreconditionError("ranking mentions an element outside the poset");
      if (out[x] != SIZE_MAX) throw PreconditionError("ranking lists an element twice");
      out[x] = k;
    }
  return out;
}

std::vector<Ranking> ranking_extensions(const Poset& poset, const Limits& limits) {
  const std::size_t n = poset.size();
  if (n > 63) throw GuardError("ranking enumeration supports at most 63 elements");
  std::vector<Ranking> out;
  Ranking current;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t remaining) {
    if (remaining == 0) {
      if (out.size() >= limits.max_rankings)
        throw GuardError("more than " + std::to_string(limits.max_rankings) + " ranking extensions");
      out.push_back(current);
      return;
    }
    std::vector<std::size_t> minimal;
    for (std::size_t x = 0; x < n; ++x) {
      if (!(remaining >> x & 1U)) continue;
      bool is_min = true;
      for (std::size_t y = 0; y < n && is_min; ++y) is_min = !((remaining >> y & 1U) && poset.less(y, x));
      if (is_min) minimal.push_back(x);
    }
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << minimal.size()); ++m) {
      std::vector<std::size_t> level;
      std::uint64_t taken = 0;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (m >> b & 1U) {
          level.push_back(minimal[b]);
          taken |= std::uint64_t{1} << minimal[b];
        }
      current.levels.push_back(std::move(level));
      extend(remaining & ~taken);
      current.levels.pop_back();
    }
  };
  extend(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  return out;
}

GroundSet pair_ground_set(const Poset& poset) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = i + 1; j < poset.size(); ++j) labels.push_back(poset.label(i) + "," + poset.label(j));
  if (labels.empty()) throw EmptyResultError("a poset with fewer than two elements has no pairs");
  return GroundSet(std::move(labels));
}

SignVector encode_ranking(const Poset& poset, const Ranking& r) {
  const std::size_t n = poset.size();
  const auto level = r.level_of(n);
  for (std::size_t x = 0; x < n; ++x)
    if (level[x] == SIZE_MAX) throw PreconditionError("ranking omits element '" + poset.label(x) + "'");
  for (const auto& l : r.levels)
    if (l.empty()) throw PreconditionError("ranking has an empty level");
  for (const auto& [a, b] : poset.covers())
    if (level[a] >= level[b])
      throw PreconditionError("ranking does not extend " + poset.label(a) + " < " + poset.label(b));
  SignVector v(n * (n - 1) / 2);
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++e)
      v.set(e, level[i] < level[j] ? 1 : (level[i] > level[j] ? -1 : 0));
  return v;
}

SignSystem ranking_system(const Poset& poset, const Limits& limits) {
  GroundSet ground = pair_ground_set(poset);
  std::vector<SignVector> rows;
  for (const auto& r : ranking_extensions(poset, limits)) rows.push_back(encode_ranking(poset, r));
  return SignSystem(std::move(ground), std::move(rows));
}

SignSystem ranking_com(const Poset& poset, bool simplified, const Limits& limits) {
  SignSystem all = ranking_system(poset, limits);
  if (!simplified) return all;
  bool any_incomparable = false;
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j = i + 1; j < poset.size(); ++j) any_incomparable = any_incomparable || !poset.comparable(i, j);
  if (!any_incomparable) throw EmptyResultError("every pair is comparable; the simplified ground set is empty");
  return simplify(all);
}

std::size_t width(const Poset& poset) {
  const std::size_t n = poset.size();
  if (n <= 12) {
    std::size_t best = 0;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
      const auto size = static_cast<std::size_t>(std::popcount(m));
      if (size <= best) continue;
      bool antichain = true;
      for (std::size_t a = 0; a < n && antichain; ++a)
        for (std::size_t b = a + 1; b < n && antichain; ++b)
          if ((m >> a & 1U) && (m >> b & 1U) && poset.comparable(a, b)) antichain = false;
      if (antichain) best = size;
    }
    return best;
  }
  // Dilworth: width = n - maximum matching in the comparability bipartite graph.
  std::vector<std::size_t> match(n, SIZE_MAX);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!poset.less(a, b) || seen[b]) continue;
      seen[b] = true;
      if (match[b] == SIZE_MAX || augment(match[b])) {
        match[b] = a;
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t a = 0; a < n; ++a) {
    seen.assign(n, false);
    if (augment(a)) ++matching;
  }
  return n - matching;
}

bool is_ranking(const Poset& poset) {
  const std::size_t n = poset.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || poset.comparable(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (c != a && c != b && !poset.comparable(b, c) && poset.comparable(a, c)) return false;
    }
  return true;
}

unsigned long long fubini(std::size_t k) {
  // a(k) = Σ_{i=1..k} C(k,i) a(k-i)
  std::vector<unsigned long long> a(k + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    unsigned long long binom = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      binom = binom * (m - i + 1) / i;
      a[m] += binom * a[m - i];
    }
  }
  return a[k];
}

bool is_median_graph(const Graph& g) {
  if (!is_partial_cube(g).holds) return false;
  std::unordered_set<SignVector, SignVectorHash> vertices(g.vertices.begin(), g.vertices.end());
  const std::size_t v = g.vertices.size();
  const std::size_t n = g.ground.size();
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      for (std::size_t c = b + 1; c < v; ++c) {
        SignVector m(n);
        for (std::size_t e = 0; e < n; ++e) {
          const int s = g.vertices[a][e] + g.vertices[b][e] + g.vertices[c][e];
          m.set(e, s > 0 ? 1 : (s < 0 ? -1 : 0));
        }
        if (!vertices.count(m)) return false;
      }
  return true;
}

bool RankingReport::consistent() const {
  return is_com && om_matches && lopsided_matches && (width > 2 || median_graph) && permutohedra_match;
}

RankingReport verify_ranking_props(const Poset& poset, const Limits& limits) {
  RankingReport r;
  const SignSystem com = ranking_com(poset, true, limits);
  const auto c = classify(com);
  r.width = width(poset);
  r.is_ranking = is_ranking(poset);
  r.is_com = c.is_com;
  r.is_om = c.is_om;
  r.is_lopsided = c.is_lopsided;
  r.om_matches = r.is_om == r.is_ranking;
  r.lopsided_matches = r.is_lopsided == (r.width <= 2);
  r.covectors = com.size();
  const Graph g = tope_graph(com);
  r.topes = g.vertices.size();
  if (r.width <= 2) r.median_graph = is_median_graph(g);

  if (r.is_ranking) {
    // Levels of a ranking: elements grouped by the number of elements below them.
    std::vector<std::size_t> below(poset.size(), 0);
    for (std::size_t x = 0; x < poset.size(); ++x)
      for (std::size_t y = 0; y < poset.size(); ++y)
        if (poset.less(y, x)) ++below[x];
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> sorted = below;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      sizes.push_back(j - i);
      i = j;
    }
    auto factorial = [](std::size_t k) {
      unsigned long long f = 1;
      for (std::size_t i = 2; i <= k; ++i) f *= i;
      return f;
    };
    unsigned long long topes = 1, covectors = 1, edges = 0;
    for (auto k : sizes) {
      topes *= factorial(k);
      covectors *= fubini(k);
    }
    for (auto k : sizes) edges += topes / factorial(k) * (factorial(k) * (k - 1) / 2);
    r.permutohedra_match = topes == r.topes && covectors == r.covectors && edges == g.edges.size();
  }
  return r;
}

}  // namespace comkit
