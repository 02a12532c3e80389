#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <set>

namespace oracle {

Set to_set(const comkit::SignSystem& s) {
  Set out;
  for (const auto& x : s) {
    Vec v(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) v[e] = x[e];
    out.push_back(v);
  }
  return out;
}

comkit::SignSystem to_system(const Set& rows) {
  std::vector<comkit::SignVector> vs;
  for (const auto& r : rows) vs.push_back(comkit::SignVector::from_values(r));
  return comkit::SignSystem(comkit::GroundSet::numbered(rows.front().size()), vs);
}

Vec compose(const Vec& x, const Vec& y) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] != 0 ? x[i] : y[i];
  return z;
}

bool leq(const Vec& x, const Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && x[i] != y[i]) return false;
  return true;
}

bool member(const Set& s, const Vec& x) { return std::find(s.begin(), s.end(), x) != s.end(); }

namespace {
Vec negated(const Vec& x) {
  Vec z(x);
  for (auto& v : z) v = -v;
  return z;
}
}  // namespace

bool composition(const Set& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      if (!member(s, compose(x, y))) return false;
  return true;
}

bool face_symmetry(const Set& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      if (!member(s, compose(x, negated(y)))) return false;
  return true;
}

bool strong_elimination(const Set& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      for (std::size_t e = 0; e < x.size(); ++e) {
        if (x[e] == 0 || x[e] != -y[e]) continue;
        const Vec xy = compose(x, y);
        bool found = false;
        for (const auto& z : s) {
          if (z[e] != 0) continue;
          bool ok = true;
          for (std::size_t f = 0; f < x.size() && ok; ++f)
            if (!(x[f] != 0 && x[f] == -y[f])) ok = z[f] == xy[f];
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  return true;
}

bool symmetric(const Set& s) {
  for (const auto& x : s)
    if (!member(s, negated(x))) return false;
  return true;
}

bool ideal_composition(const Set& s) {
  for (const auto& x : s)
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] != 0) continue;
      for (int v : {1, -1}) {
        Vec y = x;
        y[k] = v;
        if (!member(s, y)) return false;
      }
    }
  return true;
}

bool has_zero(const Set& s) { return member(s, Vec(s.front().size(), 0)); }

bool weak_elimination(const Set& s) {
  for (const auto& x : s)
    for (const auto& y : s)
      for (std::size_t e = 0; e < x.size(); ++e) {
        if (x[e] == 0 || x[e] != -y[e]) continue;
        bool found = false;
        for (const auto& z : s) {
          if (z[e] != 0) continue;
          bool ok = true;
          for (std::size_t f = 0; f < x.size() && ok; ++f) {
            const int a = x[f] != 0 ? x[f] : y[f];
            const int b = y[f] != 0 ? y[f] : x[f];
            ok = z[f] == 0 || z[f] == a || z[f] == b;
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  return true;
}

bool is_com(const Set& s) { return face_symmetry(s) && strong_elimination(s); }
bool is_om(const Set& s) { return composition(s) && symmetric(s) && strong_elimination(s); }
bool is_lopsided(const Set& s) { return ideal_composition(s) && strong_elimination(s); }

Set topes(const Set& s) {
  Set out;
  for (const auto& x : s) {
    bool maximal = true;
    for (const auto& y : s)
      if (y != x && leq(x, y)) maximal = false;
    if (maximal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Set conformal_closure(const Set& s) {
  std::set<Vec> all(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const Set cur(all.begin(), all.end());
    for (const auto& x : cur)
      for (const auto& y : cur) {
        bool consistent = true;
        for (std::size_t i = 0; i < x.size(); ++i) consistent = consistent && x[i] * y[i] != -1;
        if (consistent && all.insert(compose(x, y)).second) grew = true;
      }
  }
  return Set(all.begin(), all.end());
}

std::size_t count_rankings(const comkit::Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> level(n, 0);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (p.less(a, b) && level[a] >= level[b]) return;
      std::vector<bool> used(n, false);
      for (auto l : level) used[l] = true;
      const auto top = *std::max_element(level.begin(), level.end());
      for (std::size_t l = 0; l <= top; ++l)
        if (!used[l]) return;
      ++count;
      return;
    }
    for (std::size_t l = 0; l < n; ++l) {
      level[i] = l;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

std::size_t count_linear_extensions(const comkit::Poset& p) {
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < perm.size() && ok; ++a)
      for (std::size_t b = a + 1; b < perm.size() && ok; ++b) ok = !p.less(perm[b], perm[a]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Set brute_force_cells(const comkit::RealizationProblem& problem) {
  const std::size_t n = problem.hyperplanes.size();
  Set out;
  Vec v(n, -1);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      std::vector<comkit::LinearConstraint> eq, strict = problem.region.strict_constraints;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& h = problem.hyperplanes[k];
        if (v[k] == 0) {
          eq.push_back({h.normal, h.offset});
          continue;
        }
        comkit::RationalVector c = h.normal;
        for (auto& q : c) q *= v[k];
        strict.push_back({c, h.offset * v[k]});
      }
      if (comkit::lp_strict_feasible(eq, strict, problem.dimension)) out.push_back(v);
      return;
    }
    for (int s : {-1, 0, 1}) {
      v[i] = s;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

Set random_system(std::mt19937& rng, std::size_t n, std::size_t rows) {
  std::uniform_int_distribution<int> sign(-1, 1);
  std::set<Vec> out;
  while (out.size() < std::max<std::size_t>(rows, 1)) {
    Vec v(n);
    for (auto& x : v) x = sign(rng);
    out.insert(v);
    if (out.size() >= static_cast<std::size_t>(std::pow(3, n))) break;
  }
  return Set(out.begin(), out.end());
}

}  // namespace oracle
