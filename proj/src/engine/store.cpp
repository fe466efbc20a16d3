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

#include "rjanus/store.hpp"

namespace rjanus {

std::string CellKey::to_string() const {
  if (!index) return name;
  return name + "[" + std::to_string(*index) + "]";
}

struct Store::Node {
  CellKey key;
  std::int32_t value;
  std::uint64_t priority;
  NodePtr left;
  NodePtr right;
};

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t priority_of(const CellKey& key) {
  std::uint64_t h = std::hash<std::string>{}(key.name);
  if (key.index) h = mix(h ^ (0x100000000ULL | static_cast<std::uint32_t>(*key.index)));
  return mix(h);
}

}  // namespace

namespace {

using Node = Store::Node;
using NodePtr = std::shared_ptr<const Node>;

// Heap order on (priority, key) so that ties are still total.
bool above(const Node& a, const Node& b) {
  return a.priority > b.priority || (a.priority == b.priority && a.key < b.key);
}

NodePtr with_children(const Node& n, NodePtr left, NodePtr right) {
  return std::make_shared<const Node>(Node{n.key, n.value, n.priority, std::move(left),
                                           std::move(right)});
}

// Splits `t` (which does not contain `key`) into keys below and above `key`.
std::pair<NodePtr, NodePtr> split(const NodePtr& t, const CellKey& key) {
  if (!t) return {};
  if (t->key < key) {
    auto [l, r] = split(t->right, key);
    return {with_children(*t, t->left, std::move(l)), std::move(r)};
  }
  auto [l, r] = split(t->left, key);
  return {std::move(l), with_children(*t, std::move(r), t->right)};
}

NodePtr merge(const NodePtr& a, const NodePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (above(*a, *b)) return with_children(*a, a->left, merge(a->right, b));
  return with_children(*b, merge(a, b->left), b->right);
}

NodePtr insert(const NodePtr& t, const Node& fresh) {
  if (!t) return std::make_shared<const Node>(fresh);
  if (t->key == fresh.key) {
    return std::make_shared<const Node>(
        Node{t->key, fresh.value, t->priority, t->left, t->right});
  }
  if (above(fresh, *t)) {
    auto [l, r] = split(t, fresh.key);
    return std::make_shared<const Node>(
        Node{fresh.key, fresh.value, fresh.priority, std::move(l), std::move(r)});
  }
  if (fresh.key < t->key) return with_children(*t, insert(t->left, fresh), t->right);
  return with_children(*t, t->left, insert(t->right, fresh));
}

NodePtr erase(const NodePtr& t, const CellKey& key) {
  if (!t) return t;
  if (t->key == key) return merge(t->left, t->right);
  if (key < t->key) {
    auto left = erase(t->left, key);
    if (left == t->left) return t;
    return with_children(*t, std::move(left), t->right);
  }
  auto right = erase(t->right, key);
  if (right == t->right) return t;
  return with_children(*t, t->left, std::move(right));
}

template <typename Fn>
void in_order(const NodePtr& t, const Fn& fn) {
  if (!t) return;
  in_order(t->left, fn);
  fn(*t);
  in_order(t->right, fn);
}

}  // namespace

std::int32_t Store::get(const CellKey& key) const {
  const Node* n = root_.get();
  while (n) {
    if (key == n->key) return n->value;
    n = key < n->key ? n->left.get() : n->right.get();
  }
  return 0;
}

Store Store::update(const CellKey& key, std::int32_t value) const {
  return Store(insert(root_, Node{key, value, priority_of(key), nullptr, nullptr}));
}

Store Store::assign(const CellKey& key, std::int32_t value) const {
  if (value == 0) return Store(erase(root_, key));
  return update(key, value);
}

Store Store::canonical() const {
  NodePtr root = root_;
  in_order(root_, [&](const Node& n) {
    if (n.value == 0) root = erase(root, n.key);
  });
  return Store(std::move(root));
}

std::size_t Store::size() const {
  std::size_t count = 0;
  in_order(root_, [&](const Node&) { ++count; });
  return count;
}

bool Store::is_canonical() const {
  bool ok = true;
  in_order(root_, [&](const Node& n) { ok = ok && n.value != 0; });
  return ok;
}

std::vector<std::pair<CellKey, std::int32_t>> Store::bindings() const {
  std::vector<std::pair<CellKey, std::int32_t>> out;
  in_order(root_, [&](const Node& n) { out.emplace_back(n.key, n.value); });
  return out;
}

void Store::for_each(const std::function<void(const CellKey&, std::int32_t)>& fn) const {
  in_order(root_, [&](const Node& n) { fn(n.key, n.value); });
}

bool operator==(const Store& a, const Store& b) {
  if (a.root_ == b.root_) return true;
  auto nonzero = [](const Store& s) {
    std::vector<std::pair<CellKey, std::int32_t>> out;
    in_order(s.root_, [&](const Node& n) {
      if (n.value != 0) out.emplace_back(n.key, n.value);
    });
    return out;
  };
  return nonzero(a) == nonzero(b);
}

std::string to_string(const Store& store) {
  std::string out = "{";
  bool first = true;
  store.for_each([&](const CellKey& key, std::int32_t value) {
    if (value == 0) return;
    if (!first) out += ", ";
    first = false;
    out += key.to_string() + " ↦ " + std::to_string(value);
  });
  out += "}";
  return out;
}

}  // namespace rjanus
