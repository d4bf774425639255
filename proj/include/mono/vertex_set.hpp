// Copyright 2026 The Mono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONO_VERTEX_SET_HPP
#define MONO_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mono {

using Vertex = int;
using Colour = int;

/// A subset of {0, ..., universe-1} stored as a bitset.
///
/// Sets over the same universe combine with the usual operators. Mixing
/// universes is a programming error and is only caught by assertions.
/// Graphs with up to 256 vertices keep their words inline.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& o) const { return at_ == o.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), Word{0}) {}
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  static VertexSet singleton(int universe, Vertex v) {
    VertexSet s(universe);
    s.insert(v);
    return s;
  }
  static VertexSet from_vector(int universe, const std::vector<Vertex>& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  /// Universe must not exceed 64.
  static VertexSet from_mask(int universe, Word mask) {
    assert(universe <= kWordBits);
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(Vertex v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int size() const {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const { return scan_from(0); }
  /// Smallest member greater than v, or -1.
  Vertex next(Vertex v) const { return scan_from(v + 1); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ &&
           std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }
  /// Low 64 members as a mask; only meaningful when universe() <= 64.
  Word to_mask() const { return words_.empty() ? 0 : words_[0]; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  /// "{0,3,5}" form, used in reports and test diagnostics.
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) out += ',';
      out += std::to_string(v);
      first_member = false;
    }
    return out + "}";
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() {
    int tail = universe_ % kWordBits;
    if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
  }
  Vertex scan_from(Vertex from) const {
    if (from >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(from / kWordBits);
    Word w = words_[i] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0)
        return static_cast<Vertex>(i) * kWordBits + std::countr_zero(w);
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

}  // namespace mono

#endif  // MONO_VERTEX_SET_HPP
