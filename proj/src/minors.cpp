#include "comkit/minors.hpp"

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"

namespace comkit {

namespace {

void require_within(const SignSystem& s, const ElementSet& a) {
  if (!a.subset_of(s.ground().all())) throw ParseError("element set exceeds the ground set");
}

SignSystem restrict_system(const SignSystem& s, const ElementSet& keep,
                           const std::vector<SignVector>& rows) {
  GroundSet ground = s.ground().restrict(keep);
  std::vector<SignVector> out;
  out.reserve(rows.size());
  for (const auto& x : rows) out.push_back(restrict_to(x, keep));
  return SignSystem(std::move(ground), std::move(out));
}

bool parallel(const SignSystem& s, std::size_t e, std::size_t f) {
  bool same = true, opposite = true;
  for (const auto& x : s) {
    same = same && x[e] == x[f];
    opposite = opposite && x[e] == -x[f];
    if (!same && !opposite) return false;
  }
  return true;
}

// Deletes `drop` plus every member but the first of each parallel class meeting `reduce`.
SignSystem transversal(const SignSystem& s, const RedundancyProfile& p, ElementSet drop,
                       const ElementSet& reduce) {
  for (const auto& cls : p.parallel_classes) {
    if (!reduce.test(cls.front())) continue;
    bool kept = false;
    for (auto e : cls) {
      if (drop.test(e)) continue;
      if (kept) drop.set(e);
      kept = true;
    }
  }
  ElementSet keep = s.ground().all() - drop;
  if (keep.empty()) throw EmptyResultError("simplification leaves an empty ground set");
  return restrict_system(s, keep, s.covectors());
}

}  // namespace

SignSystem delete_elements(const SignSystem& s, const ElementSet& a) {
  require_within(s, a);
  if (a.empty()) return s;
  ElementSet keep = s.ground().all() - a;
  if (keep.empty()) throw EmptyResultError("deletion leaves an empty ground set");
  return restrict_system(s, keep, s.covectors());
}

SignSystem delete_elements(const SignSystem& s, const std::vector<std::string>& labels) {
  return delete_elements(s, s.ground().elements(labels));
}

SignSystem contract(const SignSystem& s, const ElementSet& a) {
  require_within(s, a);
  if (a.empty()) return s;
  ElementSet keep = s.ground().all() - a;
  if (keep.empty()) throw EmptyResultError("contraction leaves an empty ground set");
  std::vector<SignVector> rows;
  for (const auto& x : s)
    if (!x.support().intersects(a)) rows.push_back(x);
  if (rows.empty()) throw EmptyResultError("no covector vanishes on the contracted set");
  return restrict_system(s, keep, rows);
}

SignSystem contract(const SignSystem& s, const std::vector<std::string>& labels) {
  return contract(s, s.ground().elements(labels));
}

SignSystem minor(const SignSystem& s, const MinorSpec& spec) {
  if (spec.deleted.intersects(spec.contracted))
    throw PreconditionError("deleted and contracted sets must be disjoint");
  require_within(s, spec.deleted | spec.contracted);
  // Work on positions of the original ground set, then drop both sets at once.
  std::vector<SignVector> rows;
  for (const auto& x : s)
    if (!x.support().intersects(spec.contracted)) rows.push_back(x);
  if (rows.empty()) throw EmptyResultError("no covector vanishes on the contracted set");
  ElementSet keep = s.ground().all() - spec.deleted - spec.contracted;
  if (keep.empty()) throw EmptyResultError("minor has an empty ground set");
  return restrict_system(s, keep, rows);
}

Fiber fiber(const SignSystem& s, const SignVector& x, const ElementSet& a) {
  s.require_member(x);
  require_within(s, a);
  const ElementSet outside = s.ground().all() - a;
  std::vector<SignVector> rows;
  bool face_witness = false;
  for (const auto& y : s) {
    if (!((y.positive() & outside) == (x.positive() & outside)) ||
        !((y.negative() & outside) == (x.negative() & outside)))
      continue;
    rows.push_back(y);
    if (y.zeros() == a) face_witness = true;
  }
  Fiber f{SignSystem(s.ground(), std::move(rows)), false, false};
  f.topal = x.zeros().subset_of(a);
  f.is_face = f.topal && face_witness;
  return f;
}

SignSystem face(const SignSystem& s, const SignVector& x) {
  s.require_member(x);
  if (!check_axiom(s, AxiomId::C).holds) throw PreconditionError("faces require the composition rule (C)");
  return s.filter([&](const SignVector& y) { return leq(x, y); }, "face");
}

RedundancyProfile redundancy_profile(const SignSystem& s) {
  RedundancyProfile p;
  const std::size_t n = s.num_elements();
  ElementSet has_pos, has_neg, has_zero;
  for (const auto& x : s) {
    has_pos |= x.positive();
    has_neg |= x.negative();
    has_zero |= x.zeros();
  }
  p.e_pm = non_constant_elements(s);
  for (std::size_t e = 0; e < n; ++e) {
    const int values = has_pos.test(e) + has_neg.test(e) + has_zero.test(e);
    if (values == 1) p.e1.set(e);
    if (values == 2) p.e2.set(e);
    if (!has_pos.test(e) && !has_neg.test(e)) p.e0.set(e);
  }
  std::vector<bool> assigned(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (assigned[e]) continue;
    std::vector<std::size_t> cls{e};
    assigned[e] = true;
    for (std::size_t f = e + 1; f < n; ++f) {
      if (!assigned[f] && parallel(s, e, f)) {
        cls.push_back(f);
        assigned[f] = true;
      }
    }
    p.parallel_classes.push_back(std::move(cls));
  }
  return p;
}

SignSystem simplify(const SignSystem& s) {
  const auto p = redundancy_profile(s);
  return transversal(s, p, p.e1 | p.e2, s.ground().all());
}

SignSystem semisimplify(const SignSystem& s) {
  const auto p = redundancy_profile(s);
  return transversal(s, p, p.e0 | p.e2, p.e_pm);
}

SignSystem reorient(const SignSystem& s, const ElementSet& a) {
  require_within(s, a);
  std::vector<SignVector> rows;
  for (const auto& x : s) {
    SignVector y = x;
    for (auto e : a.indices()) y.set(e, -x[e]);
    rows.push_back(y);
  }
  return SignSystem(s.ground(), std::move(rows));
}

}  // namespace comkit
