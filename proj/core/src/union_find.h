// Copyright 2026 The signedva Authors
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

#ifndef SIGNEDVA_SRC_UNION_FIND_H_
#define SIGNEDVA_SRC_UNION_FIND_H_

#include <numeric>
#include <utility>
#include <vector>

namespace signedva::internal {

// Union by size without path compression, so every union can be undone in
// LIFO order. Backtracking searches push a mark, try unions, and roll back.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // False when a and b were already connected (the edge would close a cycle).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  int mark() const { return static_cast<int>(history_.size()); }

  void rollback(int mark) {
    while (static_cast<int>(history_.size()) > mark) {
      const int b = history_.back();
      history_.pop_back();
      const int a = parent_[b];
      size_[a] -= size_[b];
      parent_[b] = b;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

}  // namespace signedva::internal

#endif  // SIGNEDVA_SRC_UNION_FIND_H_
