#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "comkit/sign_system.hpp"

namespace comkit {

class Poset;

// Exact rational in canonical form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p/q" or an integer; throws ParseError on malformed input or q = 0.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// normal·x = offset; the positive side is normal·x > offset.
struct AffineHyperplane {
  RationalVector normal;
  Rational offset;
  std::string label;
};

// c·x > r for every (c, r).
struct OpenPolyhedron {
  std::vector<std::pair<RationalVector, Rational>> strict_constraints;
};

struct RealizationProblem {
  std::size_t dimension = 0;
  std::vector<AffineHyperplane> hyperplanes;
  OpenPolyhedron region;

  // Throws ParseError on a dimension mismatch or a zero normal.
  void validate() const;
};

using LinearConstraint = std::pair<RationalVector, Rational>;

// A point x with a·x = b for all equalities and c·x > r for all stricts, or nullopt.
std::optional<RationalVector> lp_strict_feasible(const std::vector<LinearConstraint>& equalities,
                                                 const std::vector<LinearConstraint>& stricts,
                                                 std::size_t dimension);

struct RealizedSystem {
  SignSystem system;
  std::vector<RationalVector> witnesses;  // witnesses[i] realizes system[i]
};

// Sign vectors of all cells of the arrangement that meet the region.
RealizedSystem realize_with_witnesses(const RealizationProblem& problem, const Limits& limits = {});
SignSystem region_covectors(const RealizationProblem& problem, const Limits& limits = {});

// Sign vector of a point; throws DimensionError on a length mismatch.
SignVector sign_pattern(const RealizationProblem& problem, const RationalVector& x);
bool in_region(const OpenPolyhedron& region, const RationalVector& x);

// Braid hyperplanes x_i = x_j for incomparable i < j (positive side x_i < x_j),
// restricted to x_i < x_j for comparable i < j in the poset.
RealizationProblem realize_ranking(const Poset& poset);

}  // namespace comkit
