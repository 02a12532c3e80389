#include "comkit/sign_system.hpp"

#include <algorithm>
#include <unordered_set>

#include "comkit/error.hpp"

namespace comkit {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw EmptyResultError("ground set must be non-empty");
  if (labels_.size() > kMaxElements)
    throw DimensionError("ground set larger than " + std::to_string(kMaxElements));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ParseError("empty element label");
    if (!index_.emplace(labels_[i], i).second)
      throw ParseError("duplicate element label '" + labels_[i] + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return GroundSet(std::move(labels));
}

std::size_t GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw ParseError("unknown element '" + label + "'");
  return it->second;
}

ElementSet GroundSet::elements(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s.set(index_of(l));
  return s;
}

GroundSet GroundSet::restrict(const ElementSet& keep) const {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size(); ++i)
    if (keep.test(i)) labels.push_back(labels_[i]);
  return GroundSet(std::move(labels));
}

SignSystem::SignSystem(GroundSet ground, std::vector<SignVector> covectors)
    : ground_(std::move(ground)), covectors_(std::move(covectors)) {
  if (covectors_.empty()) throw EmptyResultError("sign system must contain a covector");
  for (const auto& x : covectors_)
    if (x.size() != ground_.size())
      throw DimensionError("covector " + x.str() + " does not match ground set of size " +
                           std::to_string(ground_.size()));
  std::sort(covectors_.begin(), covectors_.end(), canonical_less);
  covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
  index_.reserve(covectors_.size());
  for (std::size_t i = 0; i < covectors_.size(); ++i) index_.emplace(covectors_[i], i);
}

SignSystem SignSystem::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw EmptyResultError("sign system must contain a covector");
  std::vector<SignVector> vs;
  for (const auto& r : rows) vs.push_back(SignVector::parse(r));
  GroundSet ground = GroundSet::numbered(vs.front().size());
  return SignSystem(std::move(ground), std::move(vs));
}

std::size_t SignSystem::index_of(const SignVector& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw MembershipError("sign vector " + x.str() + " is not in the system");
  return it->second;
}

void SignSystem::require_member(const SignVector& x) const {
  if (x.size() != num_elements())
    throw DimensionError("sign vector " + x.str() + " has the wrong length");
  index_of(x);
}

std::vector<std::string> SignSystem::strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& x : covectors_) out.push_back(x.str());
  return out;
}

void throw_empty(const char* what) { throw EmptyResultError(std::string(what) + " is empty"); }

namespace {

void require_same_ground(const SignSystem& a, const SignSystem& b) {
  if (!(a.ground() == b.ground())) throw DimensionError("systems live on different ground sets");
}

}  // namespace

SignSystem unite(const SignSystem& a, const SignSystem& b) {
  require_same_ground(a, b);
  std::vector<SignVector> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return SignSystem(a.ground(), std::move(all));
}

SignSystem intersect(const SignSystem& a, const SignSystem& b) {
  require_same_ground(a, b);
  return a.filter([&](const SignVector& x) { return b.contains(x); }, "intersection");
}

bool is_subsystem(const SignSystem& a, const SignSystem& b) {
  if (!(a.ground() == b.ground())) return false;
  return std::all_of(a.begin(), a.end(), [&](const SignVector& x) { return b.contains(x); });
}

SignSystem upset(const SignSystem& system, const Limits& limits) {
  require_enumerable(system.num_elements(), limits, "upset");
  std::unordered_set<SignVector, SignVectorHash> seen;
  std::vector<SignVector> out;
  for (const auto& x : system) {
    if (seen.count(x)) continue;
    std::vector<std::size_t> free = x.zeros().indices();
    // Odometer over {0,+,-} on the zero set of x.
    std::vector<int> digit(free.size(), 0);
    while (true) {
      SignVector y = x;
      for (std::size_t k = 0; k < free.size(); ++k) y.set(free[k], digit[k] == 2 ? -1 : digit[k]);
      if (seen.insert(y).second) out.push_back(y);
      std::size_t k = 0;
      while (k < free.size() && digit[k] == 2) digit[k++] = 0;
      if (k == free.size()) break;
      ++digit[k];
    }
  }
  return SignSystem(system.ground(), std::move(out));
}

}  // namespace comkit
