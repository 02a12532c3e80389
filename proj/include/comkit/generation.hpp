#pragma once

#include <vector>

#include "comkit/sign_system.hpp"

namespace comkit {

// Covering relation of (L, <=), by covector index. up[i] lists the j with L[i] ≺ L[j].
struct CoverRelation {
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::vector<std::size_t>> down;
};

CoverRelation cover_relation(const SignSystem& system);
std::vector<SignVector> minimal_elements(const SignSystem& system);

// W_A(X,Y): members of L taking values in {0, X_g, Y_g} everywhere and in {0, X_h} on A.
std::vector<SignVector> w_set(const SignSystem& system, const SignVector& x, const SignVector& y,
                              const ElementSet& a = {});

// Upset of a system satisfying (WE); throws PreconditionError otherwise.
SignSystem lopsided_envelope(const SignSystem& system, const Limits& limits = {});

// Members of L that are not the supremum of other members of L.
std::vector<SignVector> irreducibles(const SignSystem& system);

// Closure under conformal composition of sign-consistent pairs.
SignSystem conformal_closure(const SignSystem& k);
SignSystem conformal_closure(const GroundSet& ground, const std::vector<SignVector>& k);

struct CocircuitDecomposition {
  std::vector<SignVector> minimal;       // improper cocircuits
  std::vector<SignVector> proper;        // covers of minimal elements
  std::vector<SignVector> irreducibles;
  std::vector<SignVector> cocircuits;    // irreducibles ∪ minimal ∪ proper
};

CocircuitDecomposition cocircuits(const SignSystem& system);

struct GenerationReport {
  // Four equivalent characterizations of strong elimination systems.
  bool ses_c_se = false;             // (C) and (SE)
  bool ses_cc_se1 = false;           // (CC) and (SE1) on L
  bool ses_cc_some_k_se1 = false;    // (CC) and (SE1) on some J ⊆ K ⊆ L (tried: J, C(L), L)
  bool ses_cc_j_se1 = false;         // (CC) and (SE1) on J
  // COM characterization by irreducibles and cocircuits.
  bool j_generates = false;          // ⨀J = L
  bool j_se1 = false;
  bool j_irr = false;
  bool cocircuits_fs_prec = false;   // (FS≺) on C(L), covers taken in ⨀C(L)
  bool com_via_irreducibles = false;
  // Cocircuit axioms.
  bool cocircuits_generate = false;  // ⨀C(L) = L
  bool cocircuits_se1 = false;
  bool cocircuits_coc = false;
  bool com_via_cocircuits = false;
  // (CC), (SE1), (FS≺) on L.
  bool com_via_fs_prec = false;

  // The SES characterizations agree with each other and the COM ones agree with each other.
  bool consistent() const;
};

GenerationReport verify_generation_theorems(const SignSystem& system);

}  // namespace comkit
