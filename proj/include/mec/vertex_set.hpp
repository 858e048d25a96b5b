#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace mec {

using Vertex = std::size_t;

// Fixed-capacity bitset over vertex labels 0..capacity-1. Sets with capacity
// <= 64 live in a single inline word; wider sets spill to the heap.
class VertexSet {
 public:
  static constexpr Vertex npos = static_cast<Vertex>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), heap_(capacity > 64 ? (capacity + 63) / 64 : 0, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t w = 0; w < s.word_count(); ++w) s.data()[w] = ~std::uint64_t{0};
    s.clear_tail();
    return s;
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t word_count() const { return heap_.empty() ? (capacity_ ? 1 : 0) : heap_.size(); }
  const std::uint64_t* words() const { return heap_.empty() ? &inline_ : heap_.data(); }

  bool contains(Vertex v) const { return (words()[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { data()[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { data()[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < word_count(); ++w) c += static_cast<std::size_t>(std::popcount(words()[w]));
    return c;
  }
  bool empty() const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words()[w]) return false;
    return true;
  }

  /// Smallest member, or npos.
  Vertex first() const { return next(0); }

  /// Smallest member >= from, or npos.
  Vertex next(Vertex from) const {
    if (from >= capacity_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t bits = words()[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits) return (w << 6) + static_cast<Vertex>(std::countr_zero(bits));
      if (++w >= word_count()) return npos;
      bits = words()[w];
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < word_count(); ++w) data()[w] &= o.words()[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < word_count(); ++w) data()[w] |= o.words()[w];
    return *this;
  }
  // set difference
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < word_count(); ++w) data()[w] &= ~o.words()[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words()[w] & o.words()[w]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words()[w] & ~o.words()[w]) return false;
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.capacity_ != b.capacity_) return false;
    for (std::size_t w = 0; w < a.word_count(); ++w)
      if (a.words()[w] != b.words()[w]) return false;
    return true;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}
    Vertex operator*() const { return at_; }
    iterator& operator++() {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.at_ == b.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = npos;
  };

  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, npos}; }

 private:
  std::uint64_t* data() { return heap_.empty() ? &inline_ : heap_.data(); }
  void clear_tail() {
    if (capacity_ & 63) data()[word_count() - 1] &= (std::uint64_t{1} << (capacity_ & 63)) - 1;
  }

  std::size_t capacity_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace mec
