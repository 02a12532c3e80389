#include "comkit/realize.hpp"

#include <cctype>

#include "comkit/error.hpp"
#include "comkit/ranking.hpp"

namespace comkit {

namespace {

Rational dot(const RationalVector& a, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

int sign_of(const Rational& q) { return sgn(q) > 0 ? 1 : (sgn(q) < 0 ? -1 : 0); }

bool valid_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Depth-first enumeration over coordinates; a prefix with no feasible point is pruned.
class CellEnumerator {
 public:
  CellEnumerator(const RealizationProblem& p) : p_(p) {
    for (const auto& c : p.region.strict_constraints) stricts_.push_back(c);
  }

  void run(const RationalVector& start, SignVector& x) { visit(0, start, x); }

  std::vector<SignVector> cells;
  std::vector<RationalVector> witnesses;

 private:
  void visit(std::size_t k, const RationalVector& point, SignVector& x) {
    if (k == p_.hyperplanes.size()) {
      cells.push_back(x);
      witnesses.push_back(point);
      return;
    }
    const auto& h = p_.hyperplanes[k];
    const int here = sign_of(dot(h.normal, point) - h.offset);
    for (int s : {0, 1, -1}) {
      x.set(k, s);
      push(h, s);
      if (s == here)
        visit(k + 1, point, x);
      else if (auto q = lp_strict_feasible(equalities_, stricts_, p_.dimension))
        visit(k + 1, *q, x);
      pop(s);
    }
    x.set(k, 0);
  }

  void push(const AffineHyperplane& h, int s) {
    if (s == 0) {
      equalities_.emplace_back(h.normal, h.offset);
      return;
    }
    RationalVector c = h.normal;
    Rational r = h.offset;
    if (s < 0) {
      for (auto& v : c) v = -v;
      r = -r;
    }
    stricts_.emplace_back(std::move(c), std::move(r));
  }

  void pop(int s) {
    if (s == 0)
      equalities_.pop_back();
    else
      stricts_.pop_back();
  }

  const RealizationProblem& p_;
  std::vector<LinearConstraint> equalities_;
  std::vector<LinearConstraint> stricts_;
};

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

void RealizationProblem::validate() const {
  if (dimension == 0) throw ParseError("arrangement dimension must be positive");
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != dimension)
      throw ParseError("hyperplane '" + h.label + "' has " + std::to_string(h.normal.size()) +
                       " coefficients, expected " + std::to_string(dimension));
    bool zero = true;
    for (const auto& v : h.normal) zero = zero && v == 0;
    if (zero) throw ParseError("hyperplane '" + h.label + "' has a zero normal");
  }
  for (const auto& [c, r] : region.strict_constraints)
    if (c.size() != dimension) throw ParseError("region constraint length differs from the dimension");
}

SignVector sign_pattern(const RealizationProblem& problem, const RationalVector& x) {
  if (x.size() != problem.dimension) throw DimensionError("point length differs from the dimension");
  SignVector out(problem.hyperplanes.size());
  for (std::size_t e = 0; e < problem.hyperplanes.size(); ++e) {
    const auto& h = problem.hyperplanes[e];
    out.set(e, sign_of(dot(h.normal, x) - h.offset));
  }
  return out;
}

bool in_region(const OpenPolyhedron& region, const RationalVector& x) {
  for (const auto& [c, r] : region.strict_constraints) {
    if (c.size() != x.size()) throw DimensionError("point length differs from the region");
    if (dot(c, x) <= r) return false;
  }
  return true;
}

RealizedSystem realize_with_witnesses(const RealizationProblem& problem, const Limits& limits) {
  problem.validate();
  if (problem.hyperplanes.empty()) throw EmptyResultError("arrangement has no hyperplanes");
  require_enumerable(problem.hyperplanes.size(), limits, "region_covectors");
  std::vector<std::string> labels;
  for (const auto& h : problem.hyperplanes) labels.push_back(h.label);
  GroundSet ground(labels);

  auto start = lp_strict_feasible({}, problem.region.strict_constraints, problem.dimension);
  if (!start) throw EmptyResultError("region is empty");
  CellEnumerator en(problem);
  SignVector x(problem.hyperplanes.size());
  en.run(*start, x);

  for (std::size_t i = 0; i < en.cells.size(); ++i) {
    const auto& w = en.witnesses[i];
    if (!(sign_pattern(problem, w) == en.cells[i]) || !in_region(problem.region, w))
      throw ConsistencyError("witness does not realize " + en.cells[i].str());
  }
  SignSystem system(ground, en.cells);
  std::vector<RationalVector> witnesses(system.size());
  for (std::size_t i = 0; i < en.cells.size(); ++i) witnesses[system.index_of(en.cells[i])] = en.witnesses[i];
  return RealizedSystem{std::move(system), std::move(witnesses)};
}

SignSystem region_covectors(const RealizationProblem& problem, const Limits& limits) {
  return realize_with_witnesses(problem, limits).system;
}

RealizationProblem realize_ranking(const Poset& poset) {
  const std::size_t n = poset.size();
  RealizationProblem p;
  p.dimension = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RationalVector c(n, 0);
      c[j] = 1;
      c[i] = -1;
      if (poset.comparable(i, j)) {
        if (poset.less(j, i)) {
          c[j] = -1;
          c[i] = 1;
        }
        p.region.strict_constraints.emplace_back(std::move(c), 0);
      } else {
        p.hyperplanes.push_back({std::move(c), 0, poset.label(i) + "," + poset.label(j)});
      }
    }
  }
  if (p.hyperplanes.empty()) throw EmptyResultError("every pair is comparable; the braid arrangement is empty");
  return p;
}

}  // namespace comkit
