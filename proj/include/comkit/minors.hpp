#pragma once

#include <string>
#include <vector>

#include "comkit/sign_system.hpp"

namespace comkit {

struct MinorSpec {
  ElementSet deleted;
  ElementSet contracted;
};

// (E∖A, {X∖A : X ∈ L}).
SignSystem delete_elements(const SignSystem& system, const ElementSet& a);
SignSystem delete_elements(const SignSystem& system, const std::vector<std::string>& labels);
// (E∖A, {X∖A : X ∈ L, X vanishes on A}); throws EmptyResultError if no X vanishes on A.
SignSystem contract(const SignSystem& system, const ElementSet& a);
SignSystem contract(const SignSystem& system, const std::vector<std::string>& labels);
// Contraction followed by deletion; the two sets must be disjoint.
SignSystem minor(const SignSystem& system, const MinorSpec& spec);

struct Fiber {
  SignSystem system;
  bool topal = false;  // X has no zeros outside A
  bool is_face = false;
};

// {Y ∈ L : Y∖A = X∖A}.
Fiber fiber(const SignSystem& system, const SignVector& x, const ElementSet& a);
// {X∘Y : Y ∈ L}; requires (C).
SignSystem face(const SignSystem& system, const SignVector& x);

struct RedundancyProfile {
  ElementSet e0;    // coloops
  ElementSet e_pm;  // not constantly +1 or -1
  ElementSet e1;    // one value taken
  ElementSet e2;    // two values taken
  std::vector<std::vector<std::size_t>> parallel_classes;
};

RedundancyProfile redundancy_profile(const SignSystem& system);
SignSystem simplify(const SignSystem& system);
SignSystem semisimplify(const SignSystem& system);

// Flips the sign of every coordinate in A.
SignSystem reorient(const SignSystem& system, const ElementSet& a);

}  // namespace comkit
