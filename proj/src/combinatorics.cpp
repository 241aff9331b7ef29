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

#include "decomp/combinatorics.hpp"

#include <algorithm>

namespace decomp {

SetPartition::SetPartition(std::vector<std::vector<std::size_t>> blocks) {
  std::size_t n = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::InvalidInstance, "empty block in set partition");
    std::sort(b.begin(), b.end());
    n += b.size();
  }
  std::vector<bool> seen(n, false);
  for (const auto& b : blocks) {
    for (auto i : b) {
      if (i >= n || seen[i]) throw Error(ErrorCode::InvalidInstance, "blocks do not form a disjoint cover");
      seen[i] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  n_ = n;
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::from_labels(const std::vector<std::size_t>& labels) {
  std::size_t count = 0;
  for (auto l : labels) count = std::max(count, l + 1);
  std::vector<std::vector<std::size_t>> blocks(count);
  for (std::size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(i);
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }), blocks.end());
  return SetPartition(std::move(blocks));
}

std::vector<std::size_t> SetPartition::labels() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (auto i : blocks_[k]) out[i] = k;
  }
  return out;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.n_ != n_) return false;
  const auto outer = coarser.labels();
  for (const auto& b : blocks_) {
    for (auto i : b) {
      if (outer[i] != outer[b.front()]) return false;
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) s += ",";
    s += "{";
    for (std::size_t j = 0; j < blocks_[k].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(blocks_[k][j] + 1);
    }
    s += "}";
  }
  return s + "}";
}

namespace {

void extend_rgs(std::vector<std::size_t>& rgs, std::size_t pos, std::size_t used,
                std::vector<std::vector<std::size_t>>& out) {
  if (pos == rgs.size()) {
    out.push_back(rgs);
    return;
  }
  for (std::size_t l = 0; l <= used; ++l) {
    rgs[pos] = l;
    extend_rgs(rgs, pos + 1, std::max(used, l + 1), out);
  }
}

std::vector<std::vector<std::size_t>> growth_strings(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return {{}};
  std::vector<std::size_t> rgs(n, 0);
  extend_rgs(rgs, 1, 1, out);
  return out;
}

}  // namespace

std::vector<SetPartition> all_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  for (const auto& r : growth_strings(n)) out.push_back(SetPartition::from_labels(r));
  return out;
}

std::vector<SetPartition> enumerate_m_refinements(const SetPartition& p, std::size_t m) {
  if (m < p.num_blocks() || m > p.ground_size()) {
    throw Error(ErrorCode::NoRefinementExists, "no " + std::to_string(m) + "-refinement of " + p.to_string());
  }
  // Partition each block independently and combine.
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> per_block;
  for (const auto& b : p.blocks()) {
    std::vector<std::vector<std::vector<std::size_t>>> options;
    for (const auto& r : growth_strings(b.size())) {
      std::vector<std::vector<std::size_t>> sub;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] >= sub.size()) sub.resize(r[i] + 1);
        sub[r[i]].push_back(b[i]);
      }
      options.push_back(std::move(sub));
    }
    per_block.push_back(std::move(options));
  }
  std::vector<SetPartition> out;
  std::vector<std::size_t> choice(per_block.size(), 0);
  while (true) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < choice.size(); ++k) count += per_block[k][choice[k]].size();
    if (count == m) {
      std::vector<std::vector<std::size_t>> blocks;
      for (std::size_t k = 0; k < choice.size(); ++k) {
        for (const auto& b : per_block[k][choice[k]]) blocks.push_back(b);
      }
      out.emplace_back(std::move(blocks));
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == per_block[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class stirling2(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = mpz_class(static_cast<unsigned long>(j)) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

mpz_class bell(std::size_t n) {
  mpz_class total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += stirling2(n, k);
  return total;
}

}  // namespace decomp
