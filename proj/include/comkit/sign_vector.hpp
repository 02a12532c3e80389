#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comkit {

// Largest ground set a sign vector can live on.
inline constexpr std::size_t kMaxElements = 256;

// Fixed-capacity bitset over element indices 0..kMaxElements-1.
class ElementSet {
 public:
  static constexpr std::size_t kWords = kMaxElements / 64;

  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> elements);

  // The set {0, ..., n-1}.
  static ElementSet prefix(std::size_t n);

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Smallest member, or kMaxElements when empty.
  std::size_t first() const;
  // Smallest member greater than i, or kMaxElements.
  std::size_t next(std::size_t i) const;
  std::vector<std::size_t> indices() const;

  bool subset_of(const ElementSet& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  // Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

// A map E -> {+1, 0, -1}, stored as disjoint positive and negative supports.
class SignVector {
 public:
  SignVector() = default;
  // Zero vector of length n.
  explicit SignVector(std::size_t n);

  // Parses '+', '-', '0'; throws ParseError on any other character.
  static SignVector parse(std::string_view text);
  static SignVector from_values(const std::vector<int>& values);

  std::size_t size() const { return size_; }
  int operator[](std::size_t e) const { return pos_.test(e) ? 1 : (neg_.test(e) ? -1 : 0); }
  void set(std::size_t e, int sign);

  const ElementSet& positive() const { return pos_; }
  const ElementSet& negative() const { return neg_; }
  ElementSet support() const { return pos_ | neg_; }
  ElementSet zeros() const { return ElementSet::prefix(size_) - support(); }
  bool is_zero() const { return pos_.empty() && neg_.empty(); }
  bool full_support() const { return support().count() == size_; }

  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  friend SignVector compose(const SignVector&, const SignVector&);
  friend SignVector negate(const SignVector&);
  friend std::optional<SignVector> conformal_compose(const std::vector<SignVector>&);

  std::size_t size_ = 0;
  ElementSet pos_;
  ElementSet neg_;
};

// X∘Y: X where X is non-zero, Y elsewhere.
SignVector compose(const SignVector& x, const SignVector& y);
// Positions where X and Y carry opposite non-zero signs.
ElementSet separator(const SignVector& x, const SignVector& y);
// Product order with 0 below both signs.
bool leq(const SignVector& x, const SignVector& y);
SignVector negate(const SignVector& x);
// Supremum of pairwise sign-consistent vectors; absent on a sign conflict.
std::optional<SignVector> conformal_compose(const std::vector<SignVector>& vectors);

inline SignVector operator-(const SignVector& x) { return negate(x); }

// The coordinates of x at the kept positions, in order.
SignVector restrict_to(const SignVector& x, const ElementSet& keep);

// Number of positions where the two vectors differ.
std::size_t hamming(const SignVector& x, const SignVector& y);

// Lexicographic order with 0 < + < - per coordinate.
bool canonical_less(const SignVector& x, const SignVector& y);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& x) const;
};

}  // namespace comkit
