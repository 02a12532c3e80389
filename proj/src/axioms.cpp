#include "comkit/axioms.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "comkit/error.hpp"
#include "comkit/generation.hpp"

namespace comkit {

namespace {

const std::array<std::pair<AxiomId, const char*>, 15> kAxiomNames{{
    {AxiomId::C, "C"},
    {AxiomId::FS, "FS"},
    {AxiomId::FS_LE, "FS_LE"},
    {AxiomId::FS_PREC, "FS_PREC"},
    {AxiomId::SE, "SE"},
    {AxiomId::SE_EQ, "SE_EQ"},
    {AxiomId::SE1, "SE1"},
    {AxiomId::SE1_EQ, "SE1_EQ"},
    {AxiomId::SYM, "SYM"},
    {AxiomId::IC, "IC"},
    {AxiomId::Z, "Z"},
    {AxiomId::CC, "CC"},
    {AxiomId::WE, "WE"},
    {AxiomId::IRR, "IRR"},
    {AxiomId::COC, "COC"},
}};

const std::array<std::pair<Redundancy, const char*>, 9> kRedundancyNames{{
    {Redundancy::N0, "N0"},
    {Redundancy::N1, "N1"},
    {Redundancy::N1_STAR, "N1*"},
    {Redundancy::N2, "N2"},
    {Redundancy::N2_STAR, "N2*"},
    {Redundancy::RN1, "RN1"},
    {Redundancy::RN1_STAR, "RN1*"},
    {Redundancy::RN2, "RN2"},
    {Redundancy::RN2_STAR, "RN2*"},
}};

AxiomReport pass(std::string name) { return AxiomReport{std::move(name), true, std::nullopt}; }

AxiomReport fail(std::string name, Witness w) {
  return AxiomReport{std::move(name), false, std::move(w)};
}

bool in_w(const SignVector& z, const SignVector& x, const SignVector& y) {
  return z.positive().subset_of(x.positive() | y.positive()) &&
         z.negative().subset_of(x.negative() | y.negative());
}

// Positions where z and t carry the same value.
ElementSet agreement(const SignVector& z, const SignVector& t, const ElementSet& all) {
  return all - ((z.positive() ^ t.positive()) | (z.negative() ^ t.negative()));
}

// Visits (X, Y) with X ascending and Y descending; stops when visit returns a witness.
template <class Visit>
std::optional<Witness> scan_pairs(const SignSystem& s, bool unordered, Visit visit) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > 0;) {
      if (unordered && j < i) break;
      if (auto w = visit(s[i], s[j])) return w;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> zero_buckets(const SignSystem& s) {
  std::vector<std::vector<std::size_t>> buckets(s.num_elements());
  for (std::size_t k = 0; k < s.size(); ++k)
    for (auto e : s[k].zeros().indices()) buckets[e].push_back(k);
  return buckets;
}

SignVector with_sign(SignVector x, std::size_t e, int sign) {
  x.set(e, sign);
  return x;
}

// The vector demanded by (SE): zero on the separator, X∘Y elsewhere.
SignVector se_demand(const SignVector& t, const ElementSet& sep) {
  SignVector z = t;
  for (auto g : sep.indices()) z.set(g, 0);
  return z;
}

AxiomReport check_composition(const SignSystem& s, AxiomId id) {
  const std::string name = axiom_name(id);
  auto w = scan_pairs(s, false, [&](const SignVector& x, const SignVector& y) -> std::optional<Witness> {
    SignVector other = y;
    switch (id) {
      case AxiomId::C: break;
      case AxiomId::FS: other = negate(y); break;
      case AxiomId::FS_LE:
        if (!leq(x, y)) return std::nullopt;
        other = negate(y);
        break;
      case AxiomId::CC:
        if (separator(x, y).any()) return std::nullopt;
        break;
      default: break;
    }
    SignVector z = compose(x, other);
    if (s.contains(z)) return std::nullopt;
    return Witness{x, y, std::nullopt, std::nullopt, z, "composition missing from L"};
  });
  return w ? fail(name, *w) : pass(name);
}

AxiomReport check_strong_elimination(const SignSystem& s, bool equal_support) {
  const std::string name = axiom_name(equal_support ? AxiomId::SE_EQ : AxiomId::SE);
  const ElementSet all = s.ground().all();
  const auto buckets = zero_buckets(s);
  auto w = scan_pairs(s, true, [&](const SignVector& x, const SignVector& y) -> std::optional<Witness> {
    const ElementSet sep = separator(x, y);
    if (sep.empty()) return std::nullopt;
    if (equal_support && !(x.support() == y.support())) return std::nullopt;
    const SignVector t = compose(x, y);
    const ElementSet fixed = all - sep;
    for (auto e : sep.indices()) {
      bool found = false;
      if (sep.count() == 1) {
        found = s.contains(with_sign(t, e, 0));
      } else {
        for (auto k : buckets[e]) {
          if (fixed.subset_of(agreement(s[k], t, all))) {
            found = true;
            break;
          }
        }
      }
      if (!found) return Witness{x, y, e, std::nullopt, se_demand(t, sep), "no eliminating vector"};
    }
    return std::nullopt;
  });
  return w ? fail(name, *w) : pass(name);
}

AxiomReport check_se1(const SignSystem& s, bool equal_support) {
  const std::string name = axiom_name(equal_support ? AxiomId::SE1_EQ : AxiomId::SE1);
  const ElementSet all = s.ground().all();
  const auto buckets = zero_buckets(s);
  auto w = scan_pairs(s, true, [&](const SignVector& x, const SignVector& y) -> std::optional<Witness> {
    const ElementSet sep = separator(x, y);
    if (sep.empty()) return std::nullopt;
    if (equal_support && !(x.support() == y.support())) return std::nullopt;
    const SignVector t = compose(x, y);
    const ElementSet fixed = all - sep;
    for (auto e : sep.indices()) {
      ElementSet covered;
      bool any = false;
      for (auto k : buckets[e])
        if (in_w(s[k], x, y)) {
          covered |= agreement(s[k], t, all);
          any = true;
        }
      // With S(X,Y) = E there is no f; a Z with Z_e = 0 is still demanded.
      if (!any && fixed.empty())
        return Witness{x, y, e, std::nullopt, std::nullopt, "no Z in W(X,Y) with Z_e = 0"};
      ElementSet missing = fixed - covered;
      if (missing.any()) {
        std::size_t f = missing.first();
        return Witness{x, y, e, f, std::nullopt,
                       "no Z in W(X,Y) with Z_e = 0 and Z_f = (X∘Y)_f"};
      }
    }
    return std::nullopt;
  });
  return w ? fail(name, *w) : pass(name);
}

AxiomReport check_weak_elimination(const SignSystem& s) {
  const auto buckets = zero_buckets(s);
  auto w = scan_pairs(s, true, [&](const SignVector& x, const SignVector& y) -> std::optional<Witness> {
    for (auto e : separator(x, y).indices()) {
      bool found = std::any_of(buckets[e].begin(), buckets[e].end(),
                               [&](std::size_t k) { return in_w(s[k], x, y); });
      if (!found) return Witness{x, y, e, std::nullopt, std::nullopt, "no Z in W(X,Y) with Z_e = 0"};
    }
    return std::nullopt;
  });
  return w ? fail("WE", *w) : pass("WE");
}

AxiomReport check_symmetry(const SignSystem& s) {
  for (const auto& x : s) {
    SignVector m = negate(x);
    if (!s.contains(m)) return fail("SYM", Witness{x, std::nullopt, std::nullopt, std::nullopt, m, "negation missing"});
  }
  return pass("SYM");
}

AxiomReport check_ideal(const SignSystem& s) {
  for (const auto& x : s) {
    for (auto e : x.zeros().indices()) {
      for (int sign : {1, -1}) {
        SignVector up = with_sign(x, e, sign);
        if (!s.contains(up))
          return fail("IC", Witness{x, std::nullopt, e, std::nullopt, up, "upper neighbour missing"});
      }
    }
  }
  return pass("IC");
}

AxiomReport check_zero(const SignSystem& s) {
  SignVector zero(s.num_elements());
  if (s.contains(zero)) return pass("Z");
  return fail("Z", Witness{std::nullopt, std::nullopt, std::nullopt, std::nullopt, zero, "zero vector missing"});
}

AxiomReport check_irr(const SignSystem& s) {
  auto irr = irreducibles(s);
  if (irr.size() == s.size()) return pass("IRR");
  for (const auto& x : s) {
    if (!std::binary_search(irr.begin(), irr.end(), x, canonical_less))
      return fail("IRR", Witness{x, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                 "supremum of other members"});
  }
  return pass("IRR");
}

AxiomReport check_coc(const SignSystem& c) {
  SignSystem closure = conformal_closure(c);
  auto cover = cover_relation(closure);
  std::vector<SignVector> expected = minimal_elements(c);
  for (const auto& w : expected) {
    for (auto j : cover.up[closure.index_of(w)]) expected.push_back(closure[j]);
  }
  SignSystem rebuilt(c.ground(), expected);
  if (rebuilt == c) return pass("COC");
  for (const auto& x : c)
    if (!rebuilt.contains(x))
      return fail("COC", Witness{x, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                 "neither minimal nor a cover of a minimal element"});
  for (const auto& x : rebuilt)
    if (!c.contains(x))
      return fail("COC", Witness{std::nullopt, std::nullopt, std::nullopt, std::nullopt, x,
                                 "cover of a minimal element missing"});
  return pass("COC");
}

struct ColumnValues {
  ElementSet has_pos, has_neg, has_zero;
};

ColumnValues column_values(const SignSystem& s) {
  ColumnValues v;
  for (const auto& x : s) {
    v.has_pos |= x.positive();
    v.has_neg |= x.negative();
    v.has_zero |= x.zeros();
  }
  return v;
}

}  // namespace

std::string axiom_name(AxiomId id) {
  for (const auto& [k, n] : kAxiomNames)
    if (k == id) return n;
  throw ParseError("unknown axiom id");
}

AxiomId parse_axiom(const std::string& name) {
  for (const auto& [k, n] : kAxiomNames)
    if (name == n) return k;
  throw ParseError("unknown axiom '" + name + "'");
}

std::vector<AxiomId> all_axioms() {
  std::vector<AxiomId> out;
  for (const auto& entry : kAxiomNames) out.push_back(entry.first);
  return out;
}

std::string redundancy_name(Redundancy flavor) {
  for (const auto& [k, n] : kRedundancyNames)
    if (k == flavor) return n;
  throw ParseError("unknown non-redundancy flavor");
}

Redundancy parse_redundancy(const std::string& name) {
  for (const auto& [k, n] : kRedundancyNames)
    if (name == n) return k;
  throw ParseError("unknown non-redundancy flavor '" + name + "'");
}

std::vector<Redundancy> all_redundancy_flavors() {
  std::vector<Redundancy> out;
  for (const auto& entry : kRedundancyNames) out.push_back(entry.first);
  return out;
}

ElementSet non_constant_elements(const SignSystem& s) {
  ElementSet all_pos = s.ground().all(), all_neg = s.ground().all();
  for (const auto& x : s) {
    all_pos &= x.positive();
    all_neg &= x.negative();
  }
  return s.ground().all() - (all_pos | all_neg);
}

AxiomReport check_axiom(const SignSystem& s, AxiomId axiom) {
  switch (axiom) {
    case AxiomId::C:
    case AxiomId::FS:
    case AxiomId::FS_LE:
    case AxiomId::CC: return check_composition(s, axiom);
    case AxiomId::FS_PREC: return check_fs_prec_within(s, s);
    case AxiomId::SE: return check_strong_elimination(s, false);
    case AxiomId::SE_EQ: return check_strong_elimination(s, true);
    case AxiomId::SE1: return check_se1(s, false);
    case AxiomId::SE1_EQ: return check_se1(s, true);
    case AxiomId::SYM: return check_symmetry(s);
    case AxiomId::IC: return check_ideal(s);
    case AxiomId::Z: return check_zero(s);
    case AxiomId::WE: return check_weak_elimination(s);
    case AxiomId::IRR: return check_irr(s);
    case AxiomId::COC: return check_coc(s);
  }
  throw ParseError("unknown axiom id");
}

AxiomReport check_fs_prec_within(const SignSystem& s, const SignSystem& ambient) {
  auto cover = cover_relation(ambient);
  for (const auto& w : minimal_elements(s)) {
    if (!ambient.contains(w)) continue;
    const auto& ups = cover.up[ambient.index_of(w)];
    for (auto it = ups.rbegin(); it != ups.rend(); ++it) {
      const SignVector& y = ambient[*it];
      if (!s.contains(y)) continue;
      SignVector z = compose(w, negate(y));
      if (!s.contains(z))
        return fail("FS_PREC", Witness{w, y, std::nullopt, std::nullopt, z, "reflected cover missing"});
    }
  }
  return pass("FS_PREC");
}

AxiomReport check_nonredundancy(const SignSystem& s, Redundancy flavor) {
  const std::string name = redundancy_name(flavor);
  const bool restricted = flavor == Redundancy::RN1 || flavor == Redundancy::RN1_STAR ||
                          flavor == Redundancy::RN2 || flavor == Redundancy::RN2_STAR;
  const ElementSet domain = restricted ? non_constant_elements(s) : s.ground().all();
  const ColumnValues v = column_values(s);
  auto element_fail = [&](std::size_t e, const char* why) {
    return fail(name, Witness{std::nullopt, std::nullopt, e, std::nullopt, std::nullopt, why});
  };

  switch (flavor) {
    case Redundancy::N0: {
      ElementSet bad = domain - (v.has_pos | v.has_neg);
      return bad.any() ? element_fail(bad.first(), "coloop") : pass(name);
    }
    case Redundancy::N1:
    case Redundancy::RN1: {
      ElementSet bad = domain - (v.has_pos & v.has_neg);
      return bad.any() ? element_fail(bad.first(), "a sign is never taken") : pass(name);
    }
    case Redundancy::N1_STAR:
    case Redundancy::RN1_STAR: {
      ElementSet bad = domain - (v.has_pos & v.has_neg & v.has_zero);
      return bad.any() ? element_fail(bad.first(), "a value is never taken") : pass(name);
    }
    default: break;
  }

  const bool starred = flavor == Redundancy::N2_STAR || flavor == Redundancy::RN2_STAR;
  const auto idx = domain.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const std::size_t e = idx[a], f = idx[b];
      bool first = false, second = false;
      for (const auto& x : s) {
        const int p = x[e], q = x[f];
        if (starred) {
          first = first || p * q == 1;
          second = second || p * q == -1;
        } else {
          first = first || p != q;
          second = second || p != -q;
        }
        if (first && second) break;
      }
      if (!(first && second))
        return fail(name, Witness{std::nullopt, std::nullopt, e, f, std::nullopt,
                                  starred ? "pair never realizes both products" : "parallel pair"});
    }
  }
  return pass(name);
}

const AxiomReport& ClassificationReport::axiom(AxiomId id) const {
  const std::string name = axiom_name(id);
  for (const auto& r : axioms)
    if (r.name == name) return r;
  throw PreconditionError("axiom " + name + " is not part of the classification");
}

const AxiomReport& ClassificationReport::flavor(Redundancy f) const {
  const std::string name = redundancy_name(f);
  for (const auto& r : redundancy)
    if (r.name == name) return r;
  throw PreconditionError("flavor " + name + " missing");
}

ClassificationReport classify(const SignSystem& s) {
  ClassificationReport r;
  for (auto id : {AxiomId::C, AxiomId::FS, AxiomId::SE, AxiomId::SYM, AxiomId::IC, AxiomId::Z})
    r.axioms.push_back(check_axiom(s, id));
  for (auto f : all_redundancy_flavors()) r.redundancy.push_back(check_nonredundancy(s, f));
  auto holds = [&](AxiomId id) { return r.axiom(id).holds; };
  auto flag = [&](Redundancy f) { return r.flavor(f).holds; };
  r.is_strong_elimination = holds(AxiomId::C) && holds(AxiomId::SE);
  r.is_com = holds(AxiomId::FS) && holds(AxiomId::SE);
  r.is_om = holds(AxiomId::C) && holds(AxiomId::SYM) && holds(AxiomId::SE);
  r.is_lopsided = holds(AxiomId::IC) && holds(AxiomId::SE);
  r.is_simple = flag(Redundancy::N1_STAR) && flag(Redundancy::N2_STAR);
  r.is_semisimple = flag(Redundancy::RN1_STAR) && flag(Redundancy::RN2_STAR);
  return r;
}

AxiomReport check_om_alternative(const SignSystem& s) {
  const auto fs = check_axiom(s, AxiomId::FS);
  const auto z = check_axiom(s, AxiomId::Z);
  const auto se = check_axiom(s, AxiomId::SE);
  const bool alternative = fs.holds && z.holds && se.holds;
  const bool standard = check_axiom(s, AxiomId::C).holds && check_axiom(s, AxiomId::SYM).holds && se.holds;
  if (alternative != standard)
    throw ConsistencyError("(FS),(Z),(SE) and (C),(Sym),(SE) disagree");
  if (alternative) return pass("OM_ALT");
  for (const auto* r : {&fs, &z, &se})
    if (!r->holds) {
      Witness w = *r->witness;
      w.detail = r->name + ": " + w.detail;
      return fail("OM_ALT", w);
    }
  return pass("OM_ALT");
}

}  // namespace comkit
