// Copyright 2026 The decomp Authors
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

#ifndef DECOMP_COMBINATORICS_HPP
#define DECOMP_COMBINATORICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "decomp/error.hpp"

namespace decomp {

/// Set partition of {0, ..., n-1}. Blocks are sorted ascending and ordered
/// by their minimum; printed 1-based.
class SetPartition {
 public:
  SetPartition() = default;
  /// Canonicalizes the given blocks; throws InvalidInstance unless they
  /// form a disjoint cover of {0, ..., n-1}.
  explicit SetPartition(std::vector<std::vector<std::size_t>> blocks);
  /// From a restricted growth string (block label of each element).
  static SetPartition from_labels(const std::vector<std::size_t>& labels);

  std::size_t ground_size() const { return n_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  /// Restricted growth string: labels[i] = index of the block containing i.
  std::vector<std::size_t> labels() const;
  /// Every block of *this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  /// Lexicographic order of restricted growth strings.
  friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.labels() < b.labels(); }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// i and j share a block iff values[i] == values[j].
template <class T>
SetPartition partition_of_values(const std::vector<T>& values) {
  if (values.empty()) throw Error(ErrorCode::InvalidInstance, "partition of an empty sequence");
  std::vector<std::size_t> labels(values.size());
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t k = 0;
    while (k < firsts.size() && !(values[firsts[k]] == values[i])) ++k;
    if (k == firsts.size()) firsts.push_back(i);
    labels[i] = k;
  }
  return SetPartition::from_labels(labels);
}

/// All partitions of {0, ..., n-1}, in restricted-growth-string order.
std::vector<SetPartition> all_partitions(std::size_t n);

/// All refinements of p with exactly m blocks, in restricted-growth-string
/// order. NoRefinementExists unless #p <= m <= ground size.
std::vector<SetPartition> enumerate_m_refinements(const SetPartition& p, std::size_t m);

mpz_class stirling2(std::size_t n, std::size_t k);
mpz_class bell(std::size_t n);

}  // namespace decomp

#endif  // DECOMP_COMBINATORICS_HPP
