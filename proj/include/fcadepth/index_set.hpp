#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fcadepth/errors.hpp"

namespace fcadepth {

/// Fixed-universe bitset. The tag keeps object sets and attribute sets from
/// being mixed up at compile time.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : IndexSet(universe) {
    for (auto i : members) insert(i);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static IndexSet from_indices(std::size_t universe, const std::vector<std::size_t>& members) {
    IndexSet s(universe);
    for (auto i : members) s.insert(i);
    return s;
  }

  std::size_t universe() const { return size_; }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }
  void insert(std::size_t i) {
    check_index(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  void erase(std::size_t i) {
    check_index(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == size_; }

  bool is_subset_of(const IndexSet& other) const {
    check_same(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const IndexSet& other) const {
    check_same(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  IndexSet& operator&=(const IndexSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  /// Set difference.
  IndexSet& operator-=(const IndexSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  /// Members in increasing index order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  /// Agrees with `other` on every index below `limit`.
  bool equal_below(const IndexSet& other, std::size_t limit) const {
    check_same(other);
    for (std::size_t i = 0; i < limit; ++i)
      if (contains(i) != other.contains(i)) return false;
    return true;
  }

  /// "X.X." style rendering, one character per universe element.
  std::string to_cross_string(char yes = 'X', char no = '.') const {
    std::string s(size_, no);
    for_each([&](std::size_t i) { s[i] = yes; });
    return s;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

  /// Canonical order: cardinality first, then lexicographic on the sorted
  /// member list ({0,3} before {1,2}).
  friend bool canonical_less(const IndexSet& a, const IndexSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.indices() < b.indices();
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 1099511628211ULL ^ static_cast<std::size_t>(w);
    return h;
  }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
  void check_index(std::size_t i) const {
    if (i >= size_)
      throw DimensionError("index " + std::to_string(i) + " outside universe of size " + std::to_string(size_));
  }
  void check_same(const IndexSet& o) const {
    if (o.size_ != size_)
      throw DimensionError("universe size mismatch: " + std::to_string(size_) + " vs " + std::to_string(o.size_));
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

struct IndexSetHash {
  template <typename Tag>
  std::size_t operator()(const IndexSet<Tag>& s) const {
    return s.hash();
  }
};

}  // namespace fcadepth
