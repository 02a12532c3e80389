#pragma once

#include <string>

#include "comkit/sign_system.hpp"

namespace comkit {

enum class SubstructureKind {
  HYPERPLANE,
  HALF_POS,
  HALF_NEG,
  CARRIER,
  CARRIER_POS,
  CARRIER_NEG,
  CLOSED_HALF_POS,
  CLOSED_HALF_NEG
};

std::string kind_name(SubstructureKind kind);
std::vector<SubstructureKind> all_substructure_kinds();

// Subset of L on the same ground set; throws EmptyResultError when it is empty.
SignSystem substructure(const SignSystem& system, std::size_t e, SubstructureKind kind);

struct RecursiveReport {
  bool composition = false;       // (C) on L
  bool hyperplanes_ses = false;   // every hyperplane is a strong elimination system
  bool hyperplanes_com = false;   // every hyperplane is a COM
  bool hyperplanes_om = false;    // every hyperplane is an OM
  bool partial_cube = false;      // tope graph is a partial cube
  bool symmetric_topes = false;   // tope set closed under negation
  bool edge_barycenters = false;  // every tope-graph edge has its barycenter in L
  bool ses = false;
  bool com = false;
  bool om = false;
  bool agrees_with_classify = false;
  std::size_t subproblems = 0;    // distinct hyperplane systems evaluated
};

// Hyperplane recursion for semisimple systems; throws PreconditionError otherwise.
RecursiveReport recursive_characterize(const SignSystem& system);

}  // namespace comkit
