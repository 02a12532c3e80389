#include "comkit/substructures.hpp"

#include <map>
#include <unordered_set>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"
#include "comkit/minors.hpp"
#include "comkit/topes.hpp"

namespace comkit {

std::string kind_name(SubstructureKind kind) {
  switch (kind) {
    case SubstructureKind::HYPERPLANE: return "hyperplane";
    case SubstructureKind::HALF_POS: return "half+";
    case SubstructureKind::HALF_NEG: return "half-";
    case SubstructureKind::CARRIER: return "carrier";
    case SubstructureKind::CARRIER_POS: return "carrier+";
    case SubstructureKind::CARRIER_NEG: return "carrier-";
    case SubstructureKind::CLOSED_HALF_POS: return "closed-half+";
    case SubstructureKind::CLOSED_HALF_NEG: return "closed-half-";
  }
  return "unknown";
}

std::vector<SubstructureKind> all_substructure_kinds() {
  return {SubstructureKind::HYPERPLANE,  SubstructureKind::HALF_POS,        SubstructureKind::HALF_NEG,
          SubstructureKind::CARRIER,     SubstructureKind::CARRIER_POS,     SubstructureKind::CARRIER_NEG,
          SubstructureKind::CLOSED_HALF_POS, SubstructureKind::CLOSED_HALF_NEG};
}

SignSystem substructure(const SignSystem& s, std::size_t e, SubstructureKind kind) {
  if (e >= s.num_elements()) throw ParseError("element index out of range");
  std::vector<SignVector> zero_slice;
  for (const auto& x : s)
    if (x[e] == 0) zero_slice.push_back(x);
  auto in_carrier = [&](const SignVector& x) {
    for (const auto& w : zero_slice)
      if (leq(w, x)) return true;
    return false;
  };
  const std::string what = kind_name(kind);
  auto pick = [&](auto pred) { return s.filter(pred, what.c_str()); };
  switch (kind) {
    case SubstructureKind::HYPERPLANE: return pick([&](const SignVector& x) { return x[e] == 0; });
    case SubstructureKind::HALF_POS: return pick([&](const SignVector& x) { return x[e] == 1; });
    case SubstructureKind::HALF_NEG: return pick([&](const SignVector& x) { return x[e] == -1; });
    case SubstructureKind::CARRIER: return pick(in_carrier);
    case SubstructureKind::CARRIER_POS:
      return pick([&](const SignVector& x) { return x[e] == 1 && in_carrier(x); });
    case SubstructureKind::CARRIER_NEG:
      return pick([&](const SignVector& x) { return x[e] == -1 && in_carrier(x); });
    case SubstructureKind::CLOSED_HALF_POS:
      return pick([&](const SignVector& x) { return x[e] == 1 || in_carrier(x); });
    case SubstructureKind::CLOSED_HALF_NEG:
      return pick([&](const SignVector& x) { return x[e] == -1 || in_carrier(x); });
  }
  throw ParseError("unknown substructure kind");
}

namespace {

struct Status {
  bool ses, com, om;
};

struct Conditions {
  bool composition = true, partial_cube = true, symmetric_topes = true, edge_barycenters = true;
};

Conditions direct_conditions(const SignSystem& s) {
  Conditions c;
  c.composition = check_axiom(s, AxiomId::C).holds;
  const Graph g = tope_graph(s);
  c.partial_cube = is_partial_cube(g).holds;
  std::unordered_set<SignVector, SignVectorHash> tope_set(g.vertices.begin(), g.vertices.end());
  for (const auto& t : g.vertices)
    if (!tope_set.count(negate(t))) c.symmetric_topes = false;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    SignVector bary = g.vertices[g.edges[k].first];
    bary.set(g.edge_label[k], 0);
    if (!s.contains(bary)) c.edge_barycenters = false;
  }
  return c;
}

bool semisimple(const SignSystem& s) {
  return check_nonredundancy(s, Redundancy::RN1_STAR).holds && check_nonredundancy(s, Redundancy::RN2_STAR).holds;
}

class Recursion {
 public:
  std::size_t evaluated() const { return memo_.size(); }

  // Status of the hyperplane L_e^0, or nullopt when it is empty.
  std::optional<Status> hyperplane(const SignSystem& s, std::size_t e) {
    std::vector<SignVector> rows;
    for (const auto& x : s)
      if (x[e] == 0) rows.push_back(x);
    if (rows.empty()) return std::nullopt;
    return solve(SignSystem(s.ground(), std::move(rows)));
  }

  // Children of s combined per the recursive conditions.
  void combine(const SignSystem& s, bool& ses, bool& com, bool& om) {
    ses = com = om = true;
    for (std::size_t e = 0; e < s.num_elements(); ++e) {
      auto st = hyperplane(s, e);
      if (!st) continue;
      ses = ses && st->ses;
      com = com && st->com;
      om = om && st->om;
    }
  }

 private:
  // Coloops and duplicate parallel coordinates do not affect any of the three classes.
  static std::optional<SignSystem> reduce(const SignSystem& s) {
    const auto p = redundancy_profile(s);
    ElementSet drop = p.e0;
    for (const auto& cls : p.parallel_classes) {
      bool kept = false;
      for (auto e : cls) {
        if (drop.test(e)) continue;
        if (kept) drop.set(e);
        kept = true;
      }
    }
    if (drop == s.ground().all()) return std::nullopt;
    return delete_elements(s, drop);
  }

  Status solve(const SignSystem& s) {
    auto reduced = reduce(s);
    // Only the zero vector remains: trivially an oriented matroid.
    if (!reduced) return {true, true, true};
    std::string key;
    for (const auto& row : reduced->strings()) key += row + ",";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Status st{};
    if (!semisimple(*reduced)) {
      const auto c = classify(*reduced);
      st = {c.is_strong_elimination, c.is_com, c.is_om};
    } else {
      const Conditions c = direct_conditions(*reduced);
      bool ses = true, com = true, om = true;
      combine(*reduced, ses, com, om);
      const bool base = c.composition && c.partial_cube && c.edge_barycenters;
      st.ses = base && ses;
      st.com = base && com;
      st.om = base && om && c.symmetric_topes;
    }
    memo_.emplace(std::move(key), st);
    return st;
  }

  std::map<std::string, Status> memo_;
};

}  // namespace

RecursiveReport recursive_characterize(const SignSystem& s) {
  if (!semisimple(s)) throw PreconditionError("recursive characterization needs a semisimple system");
  RecursiveReport r;
  const Conditions c = direct_conditions(s);
  r.composition = c.composition;
  r.partial_cube = c.partial_cube;
  r.symmetric_topes = c.symmetric_topes;
  r.edge_barycenters = c.edge_barycenters;
  Recursion rec;
  rec.combine(s, r.hyperplanes_ses, r.hyperplanes_com, r.hyperplanes_om);
  r.subproblems = rec.evaluated();
  const bool base = r.composition && r.partial_cube && r.edge_barycenters;
  r.ses = base && r.hyperplanes_ses;
  r.com = base && r.hyperplanes_com;
  r.om = r.composition && r.edge_barycenters && r.hyperplanes_om && r.partial_cube && r.symmetric_topes;
  const auto direct = classify(s);
  r.agrees_with_classify =
      r.ses == direct.is_strong_elimination && r.com == direct.is_com && r.om == direct.is_om;
  return r;
}

}  // namespace comkit
