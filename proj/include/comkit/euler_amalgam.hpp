#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comkit/error.hpp"
#include "comkit/sign_system.hpp"

namespace comkit {

// Split of a COM along element `pivot`: the open halfspace on the side of the first
// improper cocircuit X, and the closed opposite halfspace.
struct Decomposition {
  std::size_t pivot = 0;
  int side = -1;  // X_pivot; lower is the open halfspace with this sign
  SignVector x, y;
  SignSystem lower, upper, overlap;
};

// Requires a semisimple COM. Absent iff L has a single improper cocircuit.
std::optional<Decomposition> decompose(const SignSystem& system);

struct AmalgamReport {
  bool union_matches = false;  // whole = lower ∪ upper
  bool cond1 = false;          // both differences and the intersection non-empty
  bool cond2 = false;          // intersection is a semisimple COM
  bool cond3 = false;          // lower∘upper ⊆ lower, upper∘lower ⊆ upper
  bool cond4 = false;          // monotone hypercube paths between equal-zero-set pairs
  bool parts_semisimple_coms = false;
  std::string failure;
  bool holds() const { return union_matches && cond1 && cond2 && cond3 && cond4; }
};

AmalgamReport verify_amalgam(const SignSystem& lower, const SignSystem& upper, const SignSystem& whole,
                             const Limits& limits = {});

class AmalgamError : public Error {
 public:
  AmalgamError(const std::string& what, AmalgamReport report) : Error(what), report_(std::move(report)) {}
  const AmalgamReport& report() const { return report_; }

 private:
  AmalgamReport report_;
};

// Union of two semisimple COMs satisfying the amalgam conditions; throws AmalgamError otherwise.
SignSystem amalgamate(const SignSystem& lower, const SignSystem& upper, const Limits& limits = {});

// Repeated decomposition until every part has a single improper cocircuit.
struct DecompositionNode {
  SignSystem system;
  std::optional<std::size_t> pivot;
  std::vector<DecompositionNode> parts;  // empty or {lower, upper}
};

DecompositionNode decompose_fully(const SignSystem& system);
// Re-amalgamates the tree bottom-up.
SignSystem reassemble(const DecompositionNode& node, const Limits& limits = {});
std::vector<SignSystem> leaves(const DecompositionNode& node);

struct RankTable {
  std::vector<SignVector> covectors;  // canonical order
  std::vector<std::size_t> rank;
  std::size_t rank_of(const SignVector& x) const;
};

// Longest cover chain from X to a maximal element above it. Requires a COM; a
// non-graded upper interval raises ConsistencyError.
RankTable rank_table(const SignSystem& system);
std::size_t rank(const SignSystem& system, const SignVector& x);

// Σ (-1)^r(X); requires a COM.
long euler_poincare(const SignSystem& system);
// Σ (-1)^|X⁰|.
long euler_zero_sets(const SignSystem& system);

enum class EulerVariant { TOPAL_FIBERS, CONTRACTIONS };

// Lopsidedness via zero-set Euler sums: TOPAL_FIBERS checks every topal fiber plus
// closure under completion to topes; CONTRACTIONS checks every contraction of every topal fiber.
bool lopsided_by_euler(const SignSystem& system, EulerVariant variant, const Limits& limits = {});

}  // namespace comkit
