#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ttg {

/* Fixed-width bit vector. Every set in this library (poset points, lattice
 * elements, primes) is one of these; width is pinned at construction and all
 * binary operations require equal widths. */
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(words_for(n), 0) {}

  static Bitset full(int n) {
    Bitset b(n);
    for (std::size_t i = 0; i < b.w_.size(); ++i) b.w_[i] = ~std::uint64_t{0};
    b.trim();
    return b;
  }
  static Bitset single(int n, int bit) {
    Bitset b(n);
    b.set(bit);
    return b;
  }

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  Bitset operator|(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
  Bitset operator&(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
  Bitset operator^(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a ^ b; }); }
  // set difference
  Bitset operator-(const Bitset& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset complement() const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const Bitset& o) const { return is_subset_of(o) && *this != o; }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // -1 when no set bit at or after `from`
  int next_bit(int from) const {
    for (int i = from; i < n_;) {
      std::uint64_t w = w_[i >> 6] >> (i & 63);
      if (w) return i + __builtin_ctzll(w);
      i = (i | 63) + 1;
    }
    return -1;
  }
  template <class F>
  void for_each(F f) const {
    for (int i = next_bit(0); i >= 0; i = next_bit(i + 1)) f(i);
  }
  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  // Canonical order used to assign stable ids: by cardinality, then by words.
  static bool canonical_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.w_ < b.w_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto w : w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  static std::size_t words_for(int n) { return static_cast<std::size_t>((n + 63) / 64); }
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }
  template <class Op>
  Bitset apply(const Bitset& o, Op op) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
    return r;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ttg
