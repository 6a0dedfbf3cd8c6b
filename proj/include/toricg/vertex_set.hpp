#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace toricg {

/// Fixed-universe bitset of atom (vertex) indices. Two sets compare equal only
/// if they have the same universe size and the same members.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }
  static VertexSet of(std::size_t universe, const std::vector<std::size_t>& members) {
    VertexSet s(universe);
    for (auto m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const { return n_; }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return i < n_ && (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Set ordering: by cardinality, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    auto ma = a.members(), mb = b.members();
    return ma <=> mb;
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.n_ == b.n_ && a.words_ == b.words_; }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace toricg
