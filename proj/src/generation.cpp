#include "comkit/generation.hpp"

#include <algorithm>
#include <unordered_set>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"

namespace comkit {

CoverRelation cover_relation(const SignSystem& s) {
  const std::size_t n = s.size();
  CoverRelation rel;
  rel.up.resize(n);
  rel.down.resize(n);
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < n; ++i) {
    above.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && leq(s[i], s[j])) above.push_back(j);
    std::stable_sort(above.begin(), above.end(), [&](std::size_t a, std::size_t b) {
      return s[a].support().count() < s[b].support().count();
    });
    // A strictly-above element is a cover iff no cover found so far lies below it.
    auto& covers = rel.up[i];
    for (auto j : above) {
      bool blocked = std::any_of(covers.begin(), covers.end(),
                                 [&](std::size_t c) { return leq(s[c], s[j]); });
      if (!blocked) covers.push_back(j);
    }
    std::sort(covers.begin(), covers.end());
    for (auto c : covers) rel.down[c].push_back(i);
  }
  return rel;
}

std::vector<SignVector> minimal_elements(const SignSystem& s) {
  std::vector<SignVector> out;
  for (const auto& x : s) {
    bool minimal = std::none_of(s.begin(), s.end(),
                                [&](const SignVector& z) { return !(z == x) && leq(z, x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<SignVector> w_set(const SignSystem& s, const SignVector& x, const SignVector& y,
                              const ElementSet& a) {
  s.require_member(x);
  s.require_member(y);
  const ElementSet pos = x.positive() | y.positive();
  const ElementSet neg = x.negative() | y.negative();
  std::vector<SignVector> out;
  for (const auto& z : s) {
    if (!z.positive().subset_of(pos) || !z.negative().subset_of(neg)) continue;
    if (!(z.positive() & a).subset_of(x.positive()) || !(z.negative() & a).subset_of(x.negative()))
      continue;
    out.push_back(z);
  }
  return out;
}

SignSystem lopsided_envelope(const SignSystem& s, const Limits& limits) {
  auto we = check_axiom(s, AxiomId::WE);
  if (!we.holds) throw PreconditionError("lopsided envelope requires weak elimination (WE)");
  return upset(s, limits);
}

std::vector<SignVector> irreducibles(const SignSystem& s) {
  std::vector<SignVector> out;
  for (const auto& x : s) {
    ElementSet pos, neg;
    bool any = false;
    for (const auto& z : s) {
      if (z == x || !leq(z, x)) continue;
      pos |= z.positive();
      neg |= z.negative();
      any = true;
    }
    const bool reducible = any && pos == x.positive() && neg == x.negative();
    if (!reducible) out.push_back(x);
  }
  return out;
}

SignSystem conformal_closure(const GroundSet& ground, const std::vector<SignVector>& k) {
  std::unordered_set<SignVector, SignVectorHash> seen;
  std::vector<SignVector> items;
  for (const auto& x : k)
    if (seen.insert(x).second) items.push_back(x);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (separator(items[i], items[j]).any()) continue;
      SignVector z = compose(items[i], items[j]);
      if (seen.insert(z).second) items.push_back(z);
    }
  }
  return SignSystem(ground, std::move(items));
}

SignSystem conformal_closure(const SignSystem& k) { return conformal_closure(k.ground(), k.covectors()); }

CocircuitDecomposition cocircuits(const SignSystem& s) {
  CocircuitDecomposition d;
  d.minimal = minimal_elements(s);
  d.irreducibles = irreducibles(s);
  const auto rel = cover_relation(s);
  std::vector<std::size_t> proper;
  for (const auto& w : d.minimal)
    for (auto j : rel.up[s.index_of(w)]) proper.push_back(j);
  std::sort(proper.begin(), proper.end());
  proper.erase(std::unique(proper.begin(), proper.end()), proper.end());
  for (auto j : proper) d.proper.push_back(s[j]);

  std::vector<SignVector> all = d.irreducibles;
  all.insert(all.end(), d.minimal.begin(), d.minimal.end());
  all.insert(all.end(), d.proper.begin(), d.proper.end());
  d.cocircuits = SignSystem(s.ground(), std::move(all)).covectors();
  return d;
}

bool GenerationReport::consistent() const {
  const bool ses_agree = ses_c_se == ses_cc_se1 && ses_cc_se1 == ses_cc_some_k_se1 &&
                         ses_cc_some_k_se1 == ses_cc_j_se1;
  const bool com_agree = com_via_irreducibles == com_via_cocircuits &&
                         com_via_cocircuits == com_via_fs_prec;
  return ses_agree && com_agree;
}

GenerationReport verify_generation_theorems(const SignSystem& s) {
  GenerationReport r;
  auto holds = [](const SignSystem& sys, AxiomId id) { return check_axiom(sys, id).holds; };

  const bool cc = holds(s, AxiomId::CC);
  const bool l_se1 = holds(s, AxiomId::SE1);
  r.ses_c_se = holds(s, AxiomId::C) && holds(s, AxiomId::SE);
  r.ses_cc_se1 = cc && l_se1;

  const auto decomposition = cocircuits(s);
  const SignSystem j(s.ground(), decomposition.irreducibles);
  const SignSystem c(s.ground(), decomposition.cocircuits);
  r.j_se1 = holds(j, AxiomId::SE1);
  r.ses_cc_j_se1 = cc && r.j_se1;
  r.cocircuits_se1 = holds(c, AxiomId::SE1);
  r.ses_cc_some_k_se1 = cc && (r.j_se1 || r.cocircuits_se1 || l_se1);

  r.j_generates = conformal_closure(j) == s;
  r.j_irr = holds(j, AxiomId::IRR);
  const SignSystem c_closure = conformal_closure(c);
  r.cocircuits_fs_prec = check_fs_prec_within(c, c_closure).holds;
  r.com_via_irreducibles = r.j_generates && r.cocircuits_fs_prec && r.j_se1 && r.j_irr;

  r.cocircuits_generate = c_closure == s;
  r.cocircuits_coc = holds(c, AxiomId::COC);
  r.com_via_cocircuits = r.cocircuits_generate && r.cocircuits_se1 && r.cocircuits_fs_prec && r.cocircuits_coc;

  r.com_via_fs_prec = cc && l_se1 && holds(s, AxiomId::FS_PREC);
  return r;
}

}  // namespace comkit
