#include "comkit/sign_vector.hpp"

#include <string>

#include "comkit/error.hpp"
#include "comkit/limits.hpp"

namespace comkit {

ElementSet::ElementSet(std::initializer_list<std::size_t> elements) {
  for (auto e : elements) set(e);
}

ElementSet ElementSet::prefix(std::size_t n) {
  ElementSet s;
  std::size_t k = 0;
  for (; n >= 64; n -= 64) s.words_[k++] = ~std::uint64_t{0};
  if (n > 0) s.words_[k] = (std::uint64_t{1} << n) - 1;
  return s;
}

std::size_t ElementSet::first() const {
  for (std::size_t k = 0; k < kWords; ++k)
    if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return kMaxElements;
}

std::size_t ElementSet::next(std::size_t i) const {
  ++i;
  if (i >= kMaxElements) return kMaxElements;
  std::size_t k = i >> 6;
  std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == kWords) return kMaxElements;
    w = words_[k];
  }
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i < kMaxElements; i = next(i)) out.push_back(i);
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

void require_enumerable(std::size_t n, const Limits& limits, std::string_view what) {
  if (n > limits.max_elements)
    throw GuardError(std::string(what) + ": ground set of size " + std::to_string(n) +
                     " exceeds the enumeration guard of " + std::to_string(limits.max_elements));
}

namespace {

void require_same_size(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size())
    throw DimensionError("sign vectors of lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()));
}

}  // namespace

SignVector::SignVector(std::size_t n) : size_(n) {
  if (n > kMaxElements)
    throw DimensionError("sign vector length " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxElements));
}

SignVector SignVector::parse(std::string_view text) {
  SignVector x(text.size());
  for (std::size_t e = 0; e < text.size(); ++e) {
    switch (text[e]) {
      case '+': x.pos_.set(e); break;
      case '-': x.neg_.set(e); break;
      case '0': break;
      default:
        throw ParseError("invalid sign character '" + std::string(1, text[e]) + "'");
    }
  }
  return x;
}

SignVector SignVector::from_values(const std::vector<int>& values) {
  SignVector x(values.size());
  for (std::size_t e = 0; e < values.size(); ++e) x.set(e, values[e]);
  return x;
}

void SignVector::set(std::size_t e, int sign) {
  if (e >= size_) throw DimensionError("position " + std::to_string(e) + " out of range");
  pos_.reset(e);
  neg_.reset(e);
  if (sign > 0)
    pos_.set(e);
  else if (sign < 0)
    neg_.set(e);
}

std::string SignVector::str() const {
  std::string s(size_, '0');
  for (std::size_t e = 0; e < size_; ++e) {
    int v = (*this)[e];
    if (v > 0) s[e] = '+';
    if (v < 0) s[e] = '-';
  }
  return s;
}

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  SignVector r = x;
  ElementSet free = y.support() - x.support();
  r.pos_ |= y.pos_ & free;
  r.neg_ |= y.neg_ & free;
  return r;
}

ElementSet separator(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  return (x.positive() & y.negative()) | (x.negative() & y.positive());
}

bool leq(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  return x.positive().subset_of(y.positive()) && x.negative().subset_of(y.negative());
}

SignVector negate(const SignVector& x) {
  SignVector r = x;
  std::swap(r.pos_, r.neg_);
  return r;
}

std::optional<SignVector> conformal_compose(const std::vector<SignVector>& vectors) {
  if (vectors.empty()) throw DimensionError("conformal composition of an empty sequence");
  SignVector r = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    require_same_size(r, vectors[i]);
    r.pos_ |= vectors[i].pos_;
    r.neg_ |= vectors[i].neg_;
  }
  if (r.pos_.intersects(r.neg_)) return std::nullopt;
  return r;
}

SignVector restrict_to(const SignVector& x, const ElementSet& keep) {
  SignVector r(keep.count());
  std::size_t k = 0;
  for (std::size_t e = keep.first(); e < x.size(); e = keep.next(e)) r.set(k++, x[e]);
  return r;
}

std::size_t hamming(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  return ((x.positive() ^ y.positive()) | (x.negative() ^ y.negative())).count();
}

bool canonical_less(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  ElementSet diff = (x.positive() ^ y.positive()) | (x.negative() ^ y.negative());
  std::size_t e = diff.first();
  if (e >= x.size()) return false;
  auto code = [](int v) { return v == 0 ? 0 : (v > 0 ? 1 : 2); };
  return code(x[e]) < code(y[e]);
}

std::size_t SignVectorHash::operator()(const SignVector& x) const {
  return x.positive().hash() * 31 + x.negative().hash() + x.size();
}

}  // namespace comkit
