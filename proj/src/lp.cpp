#include <cstddef>

#include "comkit/error.hpp"
#include "comkit/realize.hpp"

namespace comkit {

namespace {

// Dense two-phase simplex over the rationals with Bland's rule.
// Rows hold [A | b]; the last row holds reduced costs and the objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows + 1, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t rows() const { return basis_.size(); }
  std::vector<std::size_t>& basis() { return basis_; }
  const Rational& objective() const { return t_[rows()][cols_]; }

  // Loads max c·z for the current basis.
  void set_objective(const std::vector<Rational>& c) {
    auto& obj = t_[rows()];
    for (std::size_t j = 0; j <= cols_; ++j) obj[j] = j < c.size() ? Rational(-c[j]) : Rational(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational cb = basis_[i] < c.size() ? c[basis_[i]] : Rational(0);
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj[j] += cb * t_[i][j];
    }
  }

  // Optimizes over columns < active. Returns false if unbounded.
  bool optimize(std::size_t active) {
    while (true) {
      std::size_t enter = active;
      for (std::size_t j = 0; j < active; ++j)
        if (t_[rows()][j] < 0) {
          enter = j;
          break;
        }
      if (enter == active) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Value of variable j in the current basic solution.
  Rational value(std::size_t j) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] == j) return t_[i][cols_];
    return 0;
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

Rational dot(const RationalVector& a, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

std::optional<RationalVector> lp_strict_feasible(const std::vector<LinearConstraint>& equalities,
                                                 const std::vector<LinearConstraint>& stricts,
                                                 std::size_t d) {
  for (const auto* list : {&equalities, &stricts})
    for (const auto& [a, b] : *list)
      if (a.size() != d) throw DimensionError("constraint length differs from the dimension");

  // Columns: x+ (d), x- (d), t+, t-, surplus per strict, slack u, artificials per row.
  const std::size_t ne = equalities.size(), ns = stricts.size();
  const std::size_t m = ne + ns + 1;
  const std::size_t tp = 2 * d, tm = 2 * d + 1, s0 = 2 * d + 2, u = s0 + ns, n0 = u + 1;
  Tableau tab(m, n0 + m);

  auto load = [&](std::size_t row, const RationalVector& a, const Rational& b) {
    for (std::size_t k = 0; k < d; ++k) {
      tab.at(row, k) = a[k];
      tab.at(row, d + k) = -a[k];
    }
    tab.rhs(row) = b;
  };
  for (std::size_t k = 0; k < ne; ++k) load(k, equalities[k].first, equalities[k].second);
  for (std::size_t k = 0; k < ns; ++k) {
    const std::size_t row = ne + k;
    load(row, stricts[k].first, stricts[k].second);
    tab.at(row, tp) = -1;
    tab.at(row, tm) = 1;
    tab.at(row, s0 + k) = -1;
  }
  tab.at(m - 1, tp) = 1;
  tab.at(m - 1, tm) = -1;
  tab.at(m - 1, u) = 1;
  tab.rhs(m - 1) = 1;

  for (std::size_t i = 0; i < m; ++i) {
    if (tab.rhs(i) < 0)
      for (std::size_t j = 0; j <= n0 + m; ++j) tab.at(i, j) = -tab.at(i, j);
    tab.at(i, n0 + i) = 1;
    tab.basis()[i] = n0 + i;
  }

  // Phase I: drive the artificials to zero.
  std::vector<Rational> phase1(n0 + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n0 + i] = -1;
  tab.set_objective(phase1);
  tab.optimize(n0 + m);
  if (tab.objective() != 0) return std::nullopt;
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < n0) {
      ++i;
      continue;
    }
    std::size_t col = n0;
    for (std::size_t j = 0; j < n0; ++j)
      if (tab.at(i, j) != 0) {
        col = j;
        break;
      }
    if (col == n0) {
      tab.drop_row(i);  // redundant equality
      continue;
    }
    tab.pivot(i, col);
    ++i;
  }

  // Phase II: maximize t = t+ - t-.
  std::vector<Rational> phase2(n0, 0);
  phase2[tp] = 1;
  phase2[tm] = -1;
  tab.set_objective(phase2);
  if (!tab.optimize(n0)) throw ConsistencyError("strict-feasibility program reported unbounded");
  if (tab.objective() <= 0) return std::nullopt;

  RationalVector x(d);
  for (std::size_t k = 0; k < d; ++k) x[k] = tab.value(k) - tab.value(d + k);
  for (const auto& [a, b] : equalities)
    if (dot(a, x) != b) throw ConsistencyError("simplex witness violates an equality");
  for (const auto& [c, r] : stricts)
    if (dot(c, x) <= r) throw ConsistencyError("simplex witness violates a strict inequality");
  return x;
}

}  // namespace comkit
