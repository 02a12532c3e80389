#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "comkit/limits.hpp"
#include "comkit/sign_vector.hpp"

namespace comkit {

// Non-empty ordered sequence of distinct element labels.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);
  // Labels e1, ..., en.
  static GroundSet numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws ParseError for an unknown label.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) > 0; }
  ElementSet elements(const std::vector<std::string>& labels) const;
  ElementSet all() const { return ElementSet::prefix(size()); }

  // Ground set of the labels at the kept positions, in order.
  GroundSet restrict(const ElementSet& keep) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A ground set with a non-empty, deduplicated, canonically sorted set of sign vectors.
class SignSystem {
 public:
  SignSystem(GroundSet ground, std::vector<SignVector> covectors);
  // Convenience: auto-named ground set, vectors written as "+-0" strings.
  static SignSystem from_strings(const std::vector<std::string>& rows);

  const GroundSet& ground() const { return ground_; }
  std::size_t num_elements() const { return ground_.size(); }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  std::size_t size() const { return covectors_.size(); }
  const SignVector& operator[](std::size_t i) const { return covectors_[i]; }
  auto begin() const { return covectors_.begin(); }
  auto end() const { return covectors_.end(); }

  bool contains(const SignVector& x) const { return index_.count(x) > 0; }
  // Position in canonical order; throws MembershipError when absent.
  std::size_t index_of(const SignVector& x) const;
  void require_member(const SignVector& x) const;

  // Same ground set, covectors selected by a predicate; throws EmptyResultError if none.
  template <class Pred>
  SignSystem filter(Pred pred, const char* what) const;

  std::vector<std::string> strings() const;

  friend bool operator==(const SignSystem& a, const SignSystem& b) {
    return a.ground_ == b.ground_ && a.covectors_ == b.covectors_;
  }

 private:
  GroundSet ground_;
  std::vector<SignVector> covectors_;
  std::unordered_map<SignVector, std::size_t, SignVectorHash> index_;
};

// Union and intersection of systems on the same ground set.
SignSystem unite(const SignSystem& a, const SignSystem& b);
// Throws EmptyResultError when the intersection is empty.
SignSystem intersect(const SignSystem& a, const SignSystem& b);
// True when every covector of a is in b.
bool is_subsystem(const SignSystem& a, const SignSystem& b);

// All Y with X <= Y for some X in the system.
SignSystem upset(const SignSystem& system, const Limits& limits = {});

void throw_empty(const char* what);

template <class Pred>
SignSystem SignSystem::filter(Pred pred, const char* what) const {
  std::vector<SignVector> kept;
  for (const auto& x : covectors_)
    if (pred(x)) kept.push_back(x);
  if (kept.empty()) throw_empty(what);
  return SignSystem(ground_, std::move(kept));
}

}  // namespace comkit
