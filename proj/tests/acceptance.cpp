// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "comkit/comkit.hpp"
#include "support/fixtures.hpp"

using namespace comkit;

namespace {

// Wall-clock budgets in seconds, per criterion.
constexpr double kBudget[] = {5.0, 1.0, 30.0, 30.0, 30.0, 60.0, 60.0, 120.0, 30.0};

// Collects failed expectations; the criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    if (failed_) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::optional<SignSystem> try_substructure(const SignSystem& s, std::size_t e, SubstructureKind k) {
  try {
    return substructure(s, e, k);
  } catch (const EmptyResultError&) {
    return std::nullopt;
  }
}

std::set<std::pair<std::string, std::string>> labelled_edges(const Graph& g, std::optional<std::size_t> flip) {
  std::set<std::pair<std::string, std::string>> out;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    SignVector a = g.vertices[g.edges[k].first], b = g.vertices[g.edges[k].second];
    if (flip) {
      a.set(*flip, -a[*flip]);
      b.set(*flip, -b[*flip]);
    }
    auto sa = a.str(), sb = b.str();
    if (sb < sa) std::swap(sa, sb);
    out.insert({sa + "|" + sb, g.ground.label(g.edge_label[k])});
  }
  return out;
}

void five_line_quadrilateral(Check& c) {
  const auto s = region_covectors(fixtures::five_lines_problem());
  const auto t = rank_table(s);
  std::size_t by_rank[3] = {0, 0, 0}, one_zero = 0;
  for (auto r : t.rank)
    if (r < 3) ++by_rank[r];
  for (const auto& x : s) one_zero += x.zeros().count() == 1;
  c.expect(s.size() == 29, "|L| = 29");
  c.expect(topes(s).size() == 11 && by_rank[0] == 11, "11 topes");
  c.expect(one_zero == 14 && by_rank[1] == 14, "14 covectors with one zero");
  c.expect(by_rank[2] == 4, "4 vertex covectors");
  const auto cl = classify(s);
  c.expect(cl.is_com && !cl.is_om && !cl.is_lopsided, "COM, not OM, not lopsided");
  c.expect(euler_poincare(s) == 1, "Euler-Poincare sum 1");
}

void counterexamples(Check& c) {
  const auto fs = fixtures::fs_counterexample();
  c.expect(check_axiom(fs, AxiomId::C).holds, "(C) holds");
  c.expect(check_axiom(fs, AxiomId::SE).holds, "(SE) holds");
  const auto f = check_axiom(fs, AxiomId::FS);
  c.expect(!f.holds && f.witness && f.witness->x && f.witness->x->str() == "00" && f.witness->y &&
               f.witness->y->str() == "++" && f.witness->missing && f.witness->missing->str() == "--",
           "(FS) fails at X=00, Y=++");
  const auto se = fixtures::se_counterexample();
  c.expect(check_axiom(se, AxiomId::WE).holds, "(WE) holds");
  const auto e = check_axiom(se, AxiomId::SE);
  c.expect(!e.holds && e.witness && e.witness->missing && e.witness->missing->str() == "+0",
           "(SE) fails demanding +0");
}

void generation(Check& c) {
  const auto corpus = fixtures::com_corpus();
  c.expect(corpus.size() >= 10, "at least ten fixtures");
  for (const auto& [name, s] : corpus) {
    c.expect(s.num_elements() <= 10, name + ": |E| <= 10");
    const auto r = verify_generation_theorems(s);
    c.expect(r.j_generates, name + ": J generates L");
    c.expect(r.ses_cc_se1 && r.com_via_fs_prec, name + ": (CC)+(SE1)");
    c.expect(r.cocircuits_se1 && r.cocircuits_fs_prec && r.cocircuits_coc, name + ": cocircuit axioms");
    c.expect(r.cocircuits_generate && conformal_closure(s.ground(), cocircuits(s).cocircuits) == s,
             name + ": cocircuits generate L");
    c.expect(r.consistent(), name + ": characterizations agree");
  }
}

void closure(Check& c) {
  std::mt19937 rng(2024);
  for (const auto& [name, s] : fixtures::com_corpus()) {
    const std::size_t n = s.num_elements();
    for (std::size_t e = 0; e < n; ++e)
      for (auto k : all_substructure_kinds())
        if (const auto sub = try_substructure(s, e, k))
          c.expect(classify(*sub).is_com, name + ": " + kind_name(k) + " of element " + std::to_string(e));
    for (const auto& x : s)
      for (int trial = 0; trial < 2; ++trial) {
        ElementSet a;
        for (std::size_t e = 0; e < n; ++e)
          if (rng() % 2) a.set(e);
        c.expect(classify(fiber(s, x, a).system).is_com, name + ": fiber at " + x.str());
      }
    for (int trial = 0; trial < 10; ++trial) {
      MinorSpec spec;
      for (std::size_t e = 0; e < n; ++e) {
        const auto roll = rng() % 4;
        if (roll == 0) spec.contracted.set(e);
        if (roll == 1) spec.deleted.set(e);
      }
      if ((spec.contracted | spec.deleted) == s.ground().all()) continue;
      try {
        c.expect(classify(minor(s, spec)).is_com, name + ": random minor");
      } catch (const EmptyResultError&) {
        // Contracting a set no covector vanishes on leaves nothing to classify.
      }
    }
  }
}

void amalgams(Check& c) {
  std::size_t decomposed = 0;
  for (const auto& [name, s] : fixtures::com_corpus()) {
    if (classify(s).is_om) continue;
    const auto d = decompose(s);
    c.expect(d.has_value(), name + ": decomposes");
    if (!d) continue;
    ++decomposed;
    c.expect(verify_amalgam(d->lower, d->upper, s).holds(), name + ": amalgam conditions");
    c.expect(amalgamate(d->lower, d->upper) == s, name + ": re-amalgamation");
    const auto tree = decompose_fully(s);
    c.expect(reassemble(tree) == s, name + ": iterated round trip");
    for (const auto& leaf : leaves(tree)) {
      const auto mins = minimal_elements(leaf);
      c.expect(mins.size() == 1 && classify(delete_elements(leaf, mins[0].support())).is_om,
               name + ": leaf is an OM");
    }
  }
  c.expect(decomposed >= 5, "at least five non-OM fixtures");
}

void euler(Check& c) {
  for (const auto& [name, s] : fixtures::com_corpus()) c.expect(euler_poincare(s) == 1, name + ": sum 1");
  bool saw_path = false, saw_plus = false;
  for (const auto& [name, s] : fixtures::all_systems()) {
    if (s.num_elements() > 8) continue;
    saw_path = saw_path || s == fixtures::path_system();
    saw_plus = saw_plus || s == fixtures::plus_zero_zero();
    const bool lop = classify(s).is_lopsided;
    c.expect(lopsided_by_euler(s, EulerVariant::TOPAL_FIBERS) == lop, name + ": topal fibers");
    c.expect(lopsided_by_euler(s, EulerVariant::CONTRACTIONS) == lop, name + ": contractions");
  }
  c.expect(saw_path && saw_plus, "regression systems present");
  c.expect(euler_zero_sets(fixtures::plus_zero_zero()) == 1, "{+00} naive sum");
}

void rankings(Check& c) {
  const auto a3 = ranking_com(Poset::antichain(3));
  c.expect(a3.size() == 13 && a3.size() == fubini(3), "3-antichain: 13 covectors");
  c.expect(topes(a3).size() == 6, "3-antichain: 6 topes");
  c.expect(classify(a3).is_om, "3-antichain: OM");
  const auto fib = ranking_com(fixtures::fibonacci6());
  const auto g = tope_graph(fib);
  c.expect(g.vertices.size() == 13, "Fibonacci: 13 topes");
  c.expect(classify(fib).is_lopsided, "Fibonacci: lopsided");
  c.expect(is_partial_cube(g).holds && is_median_graph(g), "Fibonacci: median partial cube");

  auto posets = fixtures::small_posets();
  posets.emplace_back("fibonacci6", fixtures::fibonacci6());
  for (const auto& [name, p] : posets) {
    const auto w = width(p);
    if (w == 2) c.expect(classify(ranking_com(p)).is_lopsided, name + ": width 2 is lopsided");
    if (w >= 3) c.expect(!classify(ranking_com(p)).is_lopsided, name + ": width 3 is not lopsided");
    if (p.size() <= 5)
      c.expect(topes(region_covectors(realize_ranking(p))) == topes(ranking_com(p)), name + ": realization");
  }
}

void realizability(Check& c) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const int mode = trial % 3;
    RealizationProblem p;
    if (mode == 2) {
      // Translated coordinate hyperplanes inside a random polytope.
      p = fixtures::random_arrangement(rng, d, 1, false, false);
      p.hyperplanes.clear();
      for (std::size_t i = 0; i < d; ++i) {
        RationalVector n(d);
        n[i] = 1;
        p.hyperplanes.push_back({n, static_cast<int>(rng() % 3) - 1, "x" + std::to_string(i + 1)});
      }
    } else {
      p = fixtures::random_arrangement(rng, d, 1 + rng() % 6, mode == 1, mode == 1);
    }
    const std::string tag = "arrangement " + std::to_string(trial);
    std::optional<RealizedSystem> realized;
    try {
      realized = realize_with_witnesses(p);
    } catch (const EmptyResultError&) {
      c.expect(!lp_strict_feasible({}, p.region.strict_constraints, d), tag + ": empty region");
      continue;
    }
    const RealizedSystem& r = *realized;
    for (std::size_t i = 0; i < r.system.size(); ++i)
      c.expect(sign_pattern(p, r.witnesses[i]) == r.system[i] && in_region(p.region, r.witnesses[i]),
               tag + ": witness of " + r.system[i].str());
    const auto cl = classify(r.system);
    c.expect(cl.is_com, tag + ": COM");
    if (mode == 1) c.expect(cl.is_om, tag + ": central full-space is OM");
    if (mode == 2) c.expect(cl.is_lopsided, tag + ": coordinate arrangement is lopsided");
  }
}

void tope_determination(Check& c) {
  std::size_t checked = 0;
  for (const auto& [name, s] : fixtures::com_corpus()) {
    if (!classify(s).is_semisimple) continue;
    ++checked;
    const Graph g = tope_graph(s);
    c.expect(is_partial_cube(g).holds, name + ": partial cube");
    c.expect(edge_covector_check(s).holds, name + ": edges match one-zero covectors");
    for (std::size_t e = 0; e < s.num_elements(); ++e) {
      ElementSet flip;
      flip.set(e);
      c.expect(labelled_edges(g, e) == labelled_edges(tope_graph(reorient(s, flip)), std::nullopt),
               name + ": reorientation of element " + std::to_string(e));
    }
  }
  c.expect(checked >= 10, "at least ten semisimple fixtures");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"five-line quadrilateral", five_line_quadrilateral},
      {"counterexample witnesses", counterexamples},
      {"generation theorems", generation},
      {"closure properties", closure},
      {"decompose/amalgamate round trip", amalgams},
      {"Euler-Poincare suites", euler},
      {"ranking COMs", rankings},
      {"realizability kernel", realizability},
      {"tope determination", tope_determination},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < kBudget[i];
    const bool pass = error.empty() && c.ok() && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %zu (%s): %s; %.3f s of %.0f s%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), c.summary().c_str(), secs, kBudget[i], in_time ? "" : " (over budget)",
                error.empty() ? "" : ("; exception: " + error).c_str());
  }
  return failures == 0 ? 0 : 1;
}
