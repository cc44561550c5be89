// Copyright 2026 The Coopl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOPL_COALITION_HPP_
#define COOPL_COALITION_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace coopl {

// A subset of the player set {0, ..., n-1}. Members are kept sorted and
// duplicate-free; n is carried so that evaluators can reject mismatched
// inputs.
class Coalition {
 public:
  explicit Coalition(std::uint32_t player_count) : n_(player_count) {}

  Coalition(std::uint32_t player_count, std::vector<std::uint32_t> members)
      : n_(player_count), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] >= n_) {
        throw std::invalid_argument("coalition member out of range");
      }
      if (i > 0 && members_[i] == members_[i - 1]) {
        throw std::invalid_argument("coalition has a duplicate member");
      }
    }
  }

  static Coalition full(std::uint32_t player_count) {
    std::vector<std::uint32_t> all(player_count);
    for (std::uint32_t i = 0; i < player_count; ++i) all[i] = i;
    return Coalition(player_count, std::move(all));
  }

  // Bit i of mask selects player i; requires player_count <= 64.
  static Coalition from_mask(std::uint64_t mask, std::uint32_t player_count) {
    if (player_count > 64) {
      throw std::invalid_argument("from_mask supports at most 64 players");
    }
    if (player_count < 64 && (mask >> player_count) != 0) {
      throw std::invalid_argument("mask selects a player out of range");
    }
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < player_count; ++i) {
      if (mask & (1ULL << i)) members.push_back(i);
    }
    return Coalition(player_count, std::move(members));
  }

  std::uint64_t mask() const {
    if (n_ > 64) throw std::invalid_argument("mask() supports at most 64 players");
    std::uint64_t m = 0;
    for (auto i : members_) m |= 1ULL << i;
    return m;
  }

  std::uint32_t player_count() const { return n_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }

  bool contains(std::uint32_t player) const {
    return std::binary_search(members_.begin(), members_.end(), player);
  }

  bool is_subset_of(const Coalition& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition& a, const Coalition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.members_ <=> b.members_;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> members_;
};

}  // namespace coopl

#endif  // COOPL_COALITION_HPP_
