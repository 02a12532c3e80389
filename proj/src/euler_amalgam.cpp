#include "comkit/euler_amalgam.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "comkit/axioms.hpp"
#include "comkit/generation.hpp"
#include "comkit/substructures.hpp"

namespace comkit {

namespace {

void require_semisimple_com(const SignSystem& s, const char* what) {
  const auto c = classify(s);
  if (!c.is_com || !c.is_semisimple) throw PreconditionError(std::string(what) + " requires a semisimple COM");
}

void require_com(const SignSystem& s, const char* what) {
  if (!classify(s).is_com) throw PreconditionError(std::string(what) + " requires a COM");
}

using VectorSet = std::unordered_set<SignVector, SignVectorHash>;

// Shortest hypercube path from x to y (both full support) with every vertex and edge
// barycenter in `allowed`. Only coordinates in S(x,y) ever flip.
bool monotone_path(const VectorSet& allowed, const SignVector& x, const SignVector& y, const Limits& limits) {
  if (x.size() > limits.max_path_elements)
    throw GuardError("amalgam path search over " + std::to_string(x.size()) + " elements exceeds the guard");
  const std::vector<std::size_t> diff = separator(x, y).indices();
  const std::size_t k = diff.size();
  const std::uint64_t goal = (std::uint64_t{1} << k) - 1;
  auto vertex = [&](std::uint64_t mask) {
    SignVector v = x;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1U) v.set(diff[b], -x[diff[b]]);
    return v;
  };
  std::vector<bool> seen(goal + 1, false);
  std::deque<std::uint64_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::uint64_t mask = queue.front();
    queue.pop_front();
    if (mask == goal) return true;
    const SignVector v = vertex(mask);
    for (std::size_t b = 0; b < k; ++b) {
      const std::uint64_t next = mask | (std::uint64_t{1} << b);
      if (next == mask || seen[next]) continue;
      SignVector bary = v;
      bary.set(diff[b], 0);
      if (!allowed.count(bary)) continue;
      SignVector w = v;
      w.set(diff[b], -v[diff[b]]);
      if (!allowed.count(w)) continue;
      seen[next] = true;
      queue.push_back(next);
    }
  }
  return false;
}

}  // namespace

std::optional<Decomposition> decompose(const SignSystem& s) {
  require_semisimple_com(s, "decompose");
  const auto mins = minimal_elements(s);
  for (const auto& x : mins) {
    for (const auto& y : mins) {
      const ElementSet candidates = x.support() & y.zeros();
      if (candidates.empty()) continue;
      const std::size_t e = candidates.first();
      const int side = x[e];
      const auto open = side < 0 ? SubstructureKind::HALF_NEG : SubstructureKind::HALF_POS;
      const auto closed = side < 0 ? SubstructureKind::CLOSED_HALF_POS : SubstructureKind::CLOSED_HALF_NEG;
      const auto carrier = side < 0 ? SubstructureKind::CARRIER_NEG : SubstructureKind::CARRIER_POS;
      return Decomposition{e, side, x, y, substructure(s, e, open), substructure(s, e, closed),
                           substructure(s, e, carrier)};
    }
  }
  return std::nullopt;
}

AmalgamReport verify_amalgam(const SignSystem& lower, const SignSystem& upper, const SignSystem& whole,
                             const Limits& limits) {
  if (!(lower.ground() == upper.ground()) || !(lower.ground() == whole.ground()))
    throw DimensionError("amalgam parts live on different ground sets");
  AmalgamReport r;
  auto note = [&](const std::string& why) {
    if (r.failure.empty()) r.failure = why;
  };

  r.union_matches = unite(lower, upper) == whole;
  if (!r.union_matches) note("whole is not the union of the parts");

  std::vector<SignVector> only_lower, only_upper, both;
  for (const auto& x : lower) (upper.contains(x) ? both : only_lower).push_back(x);
  for (const auto& x : upper)
    if (!lower.contains(x)) only_upper.push_back(x);
  r.cond1 = r.union_matches && !only_lower.empty() && !only_upper.empty() && !both.empty();
  if (!r.cond1) note("condition (1): a difference or the intersection is empty");

  if (!both.empty()) {
    const auto c = classify(SignSystem(whole.ground(), both));
    r.cond2 = c.is_com && c.is_semisimple;
  }
  if (!r.cond2) note("condition (2): the intersection is not a semisimple COM");

  r.cond3 = true;
  for (const auto& x : lower) {
    for (const auto& y : upper) {
      if (!lower.contains(compose(x, y)) || !upper.contains(compose(y, x))) {
        r.cond3 = false;
        break;
      }
    }
    if (!r.cond3) break;
  }
  if (!r.cond3) note("condition (3): a composition leaves its part");

  // Condition (4): deletions L∖X⁰ cached per zero set.
  r.cond4 = true;
  std::unordered_map<ElementSet, VectorSet, ElementSetHash> deletions;
  for (const auto& x : only_lower) {
    for (const auto& y : only_upper) {
      if (!(x.zeros() == y.zeros())) continue;
      const ElementSet keep = whole.ground().all() - x.zeros();
      auto it = deletions.find(keep);
      if (it == deletions.end()) {
        VectorSet rows;
        for (const auto& z : whole) rows.insert(restrict_to(z, keep));
        it = deletions.emplace(keep, std::move(rows)).first;
      }
      if (!monotone_path(it->second, restrict_to(x, keep), restrict_to(y, keep), limits)) {
        r.cond4 = false;
        note("condition (4): no monotone path from " + x.str() + " to " + y.str());
        break;
      }
    }
    if (!r.cond4) break;
  }

  const auto cl = classify(lower), cu = classify(upper);
  r.parts_semisimple_coms = cl.is_com && cl.is_semisimple && cu.is_com && cu.is_semisimple;
  return r;
}

SignSystem amalgamate(const SignSystem& lower, const SignSystem& upper, const Limits& limits) {
  SignSystem whole = unite(lower, upper);
  AmalgamReport r = verify_amalgam(lower, upper, whole, limits);
  if (!r.parts_semisimple_coms) {
    r.failure = "the parts are not both semisimple COMs";
    throw AmalgamError(r.failure, r);
  }
  if (!r.holds()) throw AmalgamError(r.failure, r);
  return whole;
}

DecompositionNode decompose_fully(const SignSystem& s) {
  DecompositionNode node{s, std::nullopt, {}};
  if (auto d = decompose(s)) {
    node.pivot = d->pivot;
    node.parts.push_back(decompose_fully(d->lower));
    node.parts.push_back(decompose_fully(d->upper));
  }
  return node;
}

SignSystem reassemble(const DecompositionNode& node, const Limits& limits) {
  if (node.parts.empty()) return node.system;
  return amalgamate(reassemble(node.parts[0], limits), reassemble(node.parts[1], limits), limits);
}

std::vector<SignSystem> leaves(const DecompositionNode& node) {
  if (node.parts.empty()) return {node.system};
  std::vector<SignSystem> out;
  for (const auto& p : node.parts) {
    auto sub = leaves(p);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::size_t RankTable::rank_of(const SignVector& x) const {
  auto it = std::lower_bound(covectors.begin(), covectors.end(), x, canonical_less);
  if (it == covectors.end() || !(*it == x)) throw MembershipError("sign vector " + x.str() + " is not in the system");
  return rank[static_cast<std::size_t>(it - covectors.begin())];
}

RankTable rank_table(const SignSystem& s) {
  require_com(s, "rank");
  const auto rel = cover_relation(s);
  const std::size_t n = s.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s[a].support().count() > s[b].support().count();
  });
  std::vector<std::size_t> longest(n, 0), shortest(n, 0);
  std::vector<bool> graded(n, true);
  for (auto i : order) {
    if (rel.up[i].empty()) continue;
    std::size_t lo = SIZE_MAX, hi = 0;
    bool g = true;
    for (auto j : rel.up[i]) {
      lo = std::min(lo, shortest[j] + 1);
      hi = std::max(hi, longest[j] + 1);
      g = g && graded[j];
    }
    longest[i] = hi;
    shortest[i] = lo;
    graded[i] = g && lo == hi;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!graded[i]) throw ConsistencyError("upper interval of " + s[i].str() + " is not graded");
  return RankTable{s.covectors(), longest};
}

std::size_t rank(const SignSystem& s, const SignVector& x) {
  s.require_member(x);
  return rank_table(s).rank_of(x);
}

long euler_poincare(const SignSystem& s) {
  const auto t = rank_table(s);
  long sum = 0;
  for (auto r : t.rank) sum += (r % 2 == 0) ? 1 : -1;
  return sum;
}

long euler_zero_sets(const SignSystem& s) {
  long sum = 0;
  for (const auto& x : s) sum += (x.zeros().count() % 2 == 0) ? 1 : -1;
  return sum;
}

bool lopsided_by_euler(const SignSystem& s, EulerVariant variant, const Limits& limits) {
  const std::size_t n = s.num_elements();
  require_enumerable(n, limits, "lopsided_by_euler");
  if (n > 62) throw GuardError("lopsided_by_euler supports at most 62 elements");

  struct Row {
    std::uint64_t pos, neg, zero;
    int zeros;
  };
  std::vector<Row> rows;
  for (const auto& x : s) {
    Row r{0, 0, 0, 0};
    for (std::size_t e = 0; e < n; ++e) {
      const int v = x[e];
      if (v > 0) r.pos |= std::uint64_t{1} << e;
      if (v < 0) r.neg |= std::uint64_t{1} << e;
      if (v == 0) r.zero |= std::uint64_t{1} << e;
    }
    r.zeros = static_cast<int>(x.zeros().count());
    rows.push_back(r);
  }

  if (variant == EulerVariant::TOPAL_FIBERS) {
    for (const auto& x : s) {
      const auto free = x.zeros().indices();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
        SignVector t = x;
        for (std::size_t b = 0; b < free.size(); ++b) t.set(free[b], (m >> b & 1U) ? -1 : 1);
        if (!s.contains(t)) return false;
      }
    }
  }

  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
      return std::hash<std::uint64_t>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
  };
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t a = 0; a <= full; ++a) {
    // Topal fibers relative to A: covectors with zeros inside A, grouped by their pattern off A.
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>, PairHash> fibers;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if ((rows[k].zero & ~a) == 0) fibers[{rows[k].pos & ~a, rows[k].neg & ~a}].push_back(k);
    for (const auto& [key, members] : fibers) {
      if (variant == EulerVariant::TOPAL_FIBERS) {
        long sum = 0;
        for (auto k : members) sum += rows[k].zeros % 2 == 0 ? 1 : -1;
        if (sum != 1) return false;
        continue;
      }
      // Every non-empty contraction R/B, B ⊆ A.
      for (std::uint64_t b = a;; b = (b - 1) & a) {
        long sum = 0;
        bool any = false;
        const int bsize = std::popcount(b);
        for (auto k : members) {
          if ((rows[k].zero & b) != b) continue;
          any = true;
          sum += (rows[k].zeros - bsize) % 2 == 0 ? 1 : -1;
        }
        if (any && sum != 1) return false;
        if (b == 0) break;
      }
    }
  }
  return true;
}

}  // namespace comkit
