#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comkit/sign_system.hpp"

namespace comkit {

enum class AxiomId { C, FS, FS_LE, FS_PREC, SE, SE_EQ, SE1, SE1_EQ, SYM, IC, Z, CC, WE, IRR, COC };

enum class Redundancy { N0, N1, N1_STAR, N2, N2_STAR, RN1, RN1_STAR, RN2, RN2_STAR };

std::string axiom_name(AxiomId id);
// Accepts the names produced by axiom_name; throws ParseError otherwise.
AxiomId parse_axiom(const std::string& name);
std::vector<AxiomId> all_axioms();

std::string redundancy_name(Redundancy flavor);
Redundancy parse_redundancy(const std::string& name);
std::vector<Redundancy> all_redundancy_flavors();

// Counterexample to a universally quantified condition. For elimination axioms,
// `missing` shows the demanded vector with unconstrained separator positions as 0.
struct Witness {
  std::optional<SignVector> x;
  std::optional<SignVector> y;
  std::optional<std::size_t> e;
  std::optional<std::size_t> f;
  std::optional<SignVector> missing;
  std::string detail;
};

struct AxiomReport {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;
};

struct ClassificationReport {
  bool is_strong_elimination = false;
  bool is_com = false;
  bool is_om = false;
  bool is_lopsided = false;
  bool is_simple = false;
  bool is_semisimple = false;
  std::vector<AxiomReport> axioms;      // C, FS, SE, SYM, IC, Z
  std::vector<AxiomReport> redundancy;  // all nine flavors
  const AxiomReport& axiom(AxiomId id) const;
  const AxiomReport& flavor(Redundancy r) const;
};

// Exhaustive check. Pairs are scanned with X ascending and Y descending in
// canonical order; the first failure is the witness.
AxiomReport check_axiom(const SignSystem& system, AxiomId axiom);
AxiomReport check_nonredundancy(const SignSystem& system, Redundancy flavor);
ClassificationReport classify(const SignSystem& system);

// (FS), (Z), (SE); throws ConsistencyError if the verdict differs from (C), (Sym), (SE).
AxiomReport check_om_alternative(const SignSystem& system);

// (FS≺) with the covering relation taken in `ambient` and membership in `system`.
AxiomReport check_fs_prec_within(const SignSystem& system, const SignSystem& ambient);

// Elements that are not constantly +1 or constantly -1.
ElementSet non_constant_elements(const SignSystem& system);

}  // namespace comkit
