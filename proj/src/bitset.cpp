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

#include "sblab/bitset.hpp"

#include <cassert>

namespace sblab {

Bitset::Bitset(int size, std::initializer_list<int> members) : Bitset(size) {
  for (int m : members) set(m);
}

Bitset Bitset::Full(int size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~Word{0};
  const int tail = size % kWordBits;
  if (tail != 0) b.words_.back() = (Word{1} << tail) - 1;
  return b;
}

Bitset Bitset::FromVector(int size, const std::vector<int>& members) {
  Bitset b(size);
  for (int m : members) b.set(m);
  return b;
}

void Bitset::clear() {
  for (auto& w : words_) w = 0;
}

int Bitset::count() const {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

bool Bitset::any() const {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

int Bitset::next(int from) const {
  if (from >= size_) return -1;
  int w = from >> 6;
  Word bits = words_[w] & (~Word{0} << (from & 63));
  while (true) {
    if (bits != 0) return w * kWordBits + std::countr_zero(bits);
    if (++w >= word_count()) return -1;
    bits = words_[w];
  }
}

bool Bitset::intersects(const Bitset& other) const {
  assert(size_ == other.size_);
  for (int w = 0; w < word_count(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

int Bitset::and_count(const Bitset& other) const {
  assert(size_ == other.size_);
  int c = 0;
  for (int w = 0; w < word_count(); ++w) c += std::popcount(words_[w] & other.words_[w]);
  return c;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  assert(size_ == other.size_);
  for (int w = 0; w < word_count(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(size_ == other.size_);
  for (int w = 0; w < word_count(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  assert(size_ == other.size_);
  for (int w = 0; w < word_count(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  assert(size_ == other.size_);
  for (int w = 0; w < word_count(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void Bitset::clear_below(int bound) {
  if (bound <= 0) return;
  if (bound >= size_) {
    clear();
    return;
  }
  const int full = bound >> 6;
  for (int w = 0; w < full; ++w) words_[w] = 0;
  words_[full] &= ~Word{0} << (bound & 63);
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

}  // namespace sblab
