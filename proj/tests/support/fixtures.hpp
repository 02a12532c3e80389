#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "comkit/ranking.hpp"
#include "comkit/realize.hpp"
#include "comkit/sign_system.hpp"

namespace fixtures {

using comkit::Poset;
using comkit::RealizationProblem;
using comkit::SignSystem;

struct Named {
  std::string name;
  SignSystem system;
};

// Five lines (two parallel pairs and a fifth through a point of two others)
// restricted to an open quadrilateral.
RealizationProblem five_lines_problem();
SignSystem five_lines();

// {+-, +0, ++, 0+, -+, 00}: (C) and (SE) hold, (FS) fails.
SignSystem fs_counterexample();
// {++, +-, --, 00}: (WE) holds, (SE) fails.
SignSystem se_counterexample();
// Five topes along a path in the 3-cube together with the edge midpoints.
SignSystem path_system();
SignSystem plus_zero_zero();

Poset antichain3();
Poset fibonacci6();
Poset fence5();
Poset n_poset();
Poset two_plus_two();
// Every ranking poset fixture with at most five elements and at least one incomparable pair.
std::vector<std::pair<std::string, Poset>> small_posets();

// Cell complex of a hexagonal-grid patch given by axial hexagon centers.
SignSystem benzenoid(const std::vector<std::pair<int, int>>& centers);

RealizationProblem coordinate_halfspace_problem();
RealizationProblem three_lines_problem();
RealizationProblem central_planes_problem();

// Random integer arrangement of n hyperplanes in dimension d. Central arrangements pass
// through the origin; full_space drops the region, otherwise the region is a random
// open polytope around a random integer point.
RealizationProblem random_arrangement(std::mt19937& rng, std::size_t d, std::size_t n, bool central,
                                      bool full_space);

// The corpus: every member is a COM with at most ten elements.
std::vector<Named> com_corpus();
// Every corpus member plus non-COM regression systems.
std::vector<Named> all_systems();

}  // namespace fixtures
