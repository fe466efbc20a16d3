// Copyright 2026 The rjanus Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rjanus {

/// A scalar variable `x` or an array element `x[i]`.
struct CellKey {
  std::string name;
  std::optional<std::int32_t> index;

  static CellKey scalar(std::string name) { return {std::move(name), std::nullopt}; }
  static CellKey element(std::string name, std::int32_t index) {
    return {std::move(name), index};
  }

  bool is_element() const { return index.has_value(); }
  /// `x` or `x[i]`.
  std::string to_string() const;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

/// Persistent map from cells to 32-bit values. Absent cells read as zero.
///
/// Updates are functional and share structure with the original (a treap
/// whose priorities are a hash of the key, so the shape depends only on the
/// key set). Copies are O(1); `assign` is expected O(log n).
class Store {
 public:
  Store() = default;

  std::int32_t get(const CellKey& key) const;
  std::int32_t get(const std::string& scalar) const { return get(CellKey::scalar(scalar)); }

  /// Binds `key` to `value`, keeping the binding even when `value` is zero.
  Store update(const CellKey& key, std::int32_t value) const;
  /// Drops every zero binding.
  Store canonical() const;
  /// `update` followed by `canonical` for the touched cell: the representation
  /// the engines keep.
  Store assign(const CellKey& key, std::int32_t value) const;

  bool empty() const { return root_ == nullptr; }
  std::size_t size() const;
  bool is_canonical() const;

  /// In-order bindings, including any zero bindings not yet canonicalized.
  std::vector<std::pair<CellKey, std::int32_t>> bindings() const;

  /// Visits bindings in key order.
  void for_each(const std::function<void(const CellKey&, std::int32_t)>& fn) const;

  /// Equality of the functions the stores denote: zero bindings are ignored.
  friend bool operator==(const Store& a, const Store& b);

  struct Node;  // defined in store.cpp

 private:
  using NodePtr = std::shared_ptr<const Node>;

  explicit Store(NodePtr root) : root_(std::move(root)) {}

  NodePtr root_;
};

/// Rendered as `{i ↦ 3, n ↦ 6}`; the empty store is `{}`.
std::string to_string(const Store& store);

}  // namespace rjanus
