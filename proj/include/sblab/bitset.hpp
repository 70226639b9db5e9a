// Copyright 2026 The sblab Authors
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

#ifndef SBLAB_BITSET_HPP_
#define SBLAB_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sblab {

// Fixed-width vertex set over ids [0, size). Width is chosen at construction
// and all binary operations require equal widths.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}
  Bitset(int size, std::initializer_list<int> members);

  static Bitset Full(int size);
  static Bitset FromVector(int size, const std::vector<int>& members);

  int size() const { return size_; }
  int word_count() const { return static_cast<int>(words_.size()); }
  const Word* data() const { return words_.data(); }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
  void clear();

  int count() const;
  bool any() const;
  bool none() const { return !any(); }

  // Lowest member >= from, or -1.
  int next(int from) const;
  int first() const { return next(0); }

  bool intersects(const Bitset& other) const;
  int and_count(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  // Removes every member of other.
  Bitset& subtract(const Bitset& other);
  // Removes members < bound.
  void clear_below(int bound);

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  std::vector<int> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < word_count(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace sblab

#endif  // SBLAB_BITSET_HPP_
