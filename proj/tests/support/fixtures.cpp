#include "fixtures.hpp"

#include <set>

#include "comkit/substructures.hpp"

namespace fixtures {

using comkit::AffineHyperplane;
using comkit::Rational;
using comkit::RationalVector;

namespace {

AffineHyperplane line(int a, int b, int c, const std::string& label) {
  return AffineHyperplane{RationalVector{a, b}, Rational(c), label};
}

Poset poset(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> covers_1based) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (auto& [a, b] : covers_1based) {
    --a;
    --b;
  }
  return Poset(std::move(labels), std::move(covers_1based));
}

}  // namespace

RealizationProblem five_lines_problem() {
  RealizationProblem p;
  p.dimension = 2;
  p.hyperplanes = {line(1, 0, 0, "1"), line(1, 0, 2, "2"), line(0, 1, 0, "3"), line(0, 1, 2, "4"),
                   line(2, 1, 4, "5")};
  p.region.strict_constraints = {{RationalVector{1, 0}, Rational(-1)},
                                 {RationalVector{1, 1}, Rational(1)},
                                 {RationalVector{-2, -1}, Rational(-5)},
                                 {RationalVector{0, -1}, Rational(-6)}};
  return p;
}

SignSystem five_lines() { return comkit::region_covectors(five_lines_problem()); }

SignSystem fs_counterexample() { return SignSystem::from_strings({"+-", "+0", "++", "0+", "-+", "00"}); }
SignSystem se_counterexample() { return SignSystem::from_strings({"++", "+-", "--", "00"}); }
SignSystem path_system() {
  return SignSystem::from_strings({"+++", "++-", "+--", "---", "--+", "++0", "+0-", "0--", "--0"});
}
SignSystem plus_zero_zero() { return SignSystem::from_strings({"+00"}); }

Poset antichain3() { return Poset::antichain(3); }
Poset fibonacci6() { return poset(6, {{1, 3}, {3, 5}, {2, 4}, {4, 6}, {1, 4}, {2, 5}, {3, 6}}); }
Poset fence5() { return poset(5, {{1, 4}, {2, 4}, {2, 5}, {3, 5}}); }
Poset n_poset() { return poset(4, {{1, 3}, {2, 3}, {2, 4}}); }
Poset two_plus_two() { return poset(4, {{1, 2}, {3, 4}}); }

std::vector<std::pair<std::string, Poset>> small_posets() {
  return {{"antichain2", Poset::antichain(2)}, {"antichain3", antichain3()},
          {"antichain4", Poset::antichain(4)}, {"fence5", fence5()},
          {"N", n_poset()},                    {"2+2", two_plus_two()},
          {"V", poset(3, {{1, 2}, {1, 3}})},   {"bowtie", poset(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})},
          {"1+2", poset(3, {{1, 2}})},         {"chain2+1", poset(4, {{1, 2}, {2, 3}})}};
}

SignSystem benzenoid(const std::vector<std::pair<int, int>>& centers) {
  // Hexagon centers sit at 3c in skewed lattice coordinates; corners at 3c + d_i + d_{i+1}.
  // Every cut is the line through a center along one of three lattice directions.
  static const int d[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  std::set<std::pair<std::pair<int, int>, int>> cuts;  // (normal, offset)
  for (const auto& [q, r] : centers)
    for (int k = 0; k < 3; ++k) {
      const int nx = -d[k][1], ny = d[k][0];
      cuts.insert({{nx, ny}, nx * 3 * q + ny * 3 * r});
    }
  RealizationProblem p;
  p.dimension = 2;
  int label = 1;
  for (const auto& [n, b] : cuts)  // doubled coordinates below, so doubled offsets
    p.hyperplanes.push_back(AffineHyperplane{RationalVector{n.first, n.second}, Rational(2 * b),
                                             "c" + std::to_string(label++)});
  std::set<std::pair<int, int>> points;
  for (const auto& [q, r] : centers) {
    points.insert({6 * q, 6 * r});
    for (int i = 0; i < 6; ++i) {
      const int j = (i + 1) % 6, k = (i + 2) % 6;
      const int ax = 3 * q + d[i][0] + d[j][0], ay = 3 * r + d[i][1] + d[j][1];
      const int bx = 3 * q + d[j][0] + d[k][0], by = 3 * r + d[j][1] + d[k][1];
      points.insert({2 * ax, 2 * ay});
      points.insert({ax + bx, ay + by});
    }
  }
  std::vector<comkit::SignVector> rows;
  for (const auto& [x, y] : points) rows.push_back(comkit::sign_pattern(p, RationalVector{x, y}));
  std::vector<std::string> labels;
  for (const auto& h : p.hyperplanes) labels.push_back(h.label);
  return SignSystem(comkit::GroundSet(labels), rows);
}

RealizationProblem coordinate_halfspace_problem() {
  RealizationProblem p;
  p.dimension = 3;
  p.hyperplanes = {{RationalVector{1, 0, 0}, 0, "x"}, {RationalVector{0, 1, 0}, 0, "y"},
                   {RationalVector{0, 0, 1}, 0, "z"}};
  p.region.strict_constraints = {{RationalVector{1, 1, 1}, Rational(1, 2)}};
  return p;
}

RealizationProblem three_lines_problem() {
  RealizationProblem p;
  p.dimension = 2;
  p.hyperplanes = {line(1, 0, 0, "a"), line(0, 1, 0, "b"), line(1, 1, 1, "c")};
  return p;
}

RealizationProblem central_planes_problem() {
  RealizationProblem p;
  p.dimension = 3;
  p.hyperplanes = {{RationalVector{1, 0, 0}, 0, "p1"}, {RationalVector{0, 1, 0}, 0, "p2"},
                   {RationalVector{0, 0, 1}, 0, "p3"}, {RationalVector{1, 1, 1}, 0, "p4"}};
  return p;
}

std::vector<Named> com_corpus() {
  const SignSystem planes = comkit::region_covectors(central_planes_problem());
  return {
      {"five-lines", five_lines()},
      {"segment", SignSystem::from_strings({"+", "-", "0"})},
      {"square", SignSystem::from_strings({"++", "+-", "+0", "-+", "--", "-0", "0+", "0-", "00"})},
      {"antichain3-ranking", comkit::ranking_com(antichain3())},
      {"hexagon", benzenoid({{0, 0}})},
      {"naphthalene", benzenoid({{0, 0}, {1, 0}})},
      {"fibonacci6-ranking", comkit::ranking_com(fibonacci6())},
      {"fence5-ranking", comkit::ranking_com(fence5())},
      {"N-ranking", comkit::ranking_com(n_poset())},
      {"coordinate-halfspace", comkit::region_covectors(coordinate_halfspace_problem())},
      {"three-lines", comkit::region_covectors(three_lines_problem())},
      {"central-planes", planes},
      {"central-planes-halfspace", comkit::substructure(planes, 3, comkit::SubstructureKind::HALF_POS)},
  };
}

std::vector<Named> all_systems() {
  auto out = com_corpus();
  out.push_back({"fs-counterexample", fs_counterexample()});
  out.push_back({"se-counterexample", se_counterexample()});
  out.push_back({"path", path_system()});
  out.push_back({"plus-zero-zero", plus_zero_zero()});
  return out;
}

RealizationProblem random_arrangement(std::mt19937& rng, std::size_t d, std::size_t n, bool central,
                                      bool full_space) {
  std::uniform_int_distribution<int> coef(-3, 3), off(-2, 2);
  auto normal = [&] {
    for (;;) {
      comkit::RationalVector v(d);
      bool zero = true;
      for (auto& c : v) {
        c = coef(rng);
        if (c != 0) zero = false;
      }
      if (!zero) return v;
    }
  };
  RealizationProblem p;
  p.dimension = d;
  for (std::size_t i = 0; i < n; ++i)
    p.hyperplanes.push_back({normal(), central ? 0 : off(rng), "h" + std::to_string(i + 1)});
  if (!full_space) {
    comkit::RationalVector center(d);
    for (auto& c : center) c = off(rng);
    for (std::size_t k = 0; k < d + 2; ++k) {
      auto c = normal();
      comkit::Rational dot = 0;
      for (std::size_t i = 0; i < d; ++i) dot += c[i] * center[i];
      p.region.strict_constraints.push_back({c, dot - 2});
    }
  }
  return p;
}

}  // namespace fixtures
