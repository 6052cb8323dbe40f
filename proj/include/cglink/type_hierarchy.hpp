#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cglink/errors.hpp"

namespace cglink {

/// A rooted tree of type names with subsumption queries.
///
/// Used twice per knowledge base: once for concept types and once for
/// relation types. `a <= b` holds iff `b` lies on the parent walk from `a`
/// (inclusive), so the order is reflexive and the root subsumes everything.
/// Mutation happens in a single-threaded load phase; every query is const
/// and safe to run concurrently afterwards.
class TypeHierarchy {
public:
  // Declares `name`. A type without a parent is the root; only one is
  // allowed, and parents must already be declared (tree shape, no cycles).
  void add_type(const std::string& name,
                const std::optional<std::string>& parent = std::nullopt) {
    if (contains(name)) raise(errc::duplicate_type, "type '" + name + "' already declared");
    if (!parent) {
      if (root_) raise(errc::second_root, "root already declared ('" + *root_ + "'), cannot add root '" + name + "'");
      root_ = name;
    } else {
      if (!contains(*parent)) raise(errc::unknown_parent, "parent type '" + *parent + "' of '" + name + "' not declared");
      parent_.emplace(name, *parent);
    }
    order_.push_back(name);
  }

  bool contains(const std::string& name) const {
    return (root_ && *root_ == name) || parent_.count(name) != 0;
  }

  bool has_root() const { return root_.has_value(); }

  const std::string& root() const {
    if (!root_) raise(errc::unknown_type, "hierarchy has no root");
    return *root_;
  }

  // Parent of `name`, or nullopt for the root.
  std::optional<std::string> parent_of(const std::string& name) const {
    require(name);
    auto it = parent_.find(name);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
  }

  /// a <= b: `b` is `a` or one of its ancestors.
  bool is_subtype(const std::string& a, const std::string& b) const {
    require(a);
    require(b);
    const std::string* cur = &a;
    while (true) {
      if (*cur == b) return true;
      auto it = parent_.find(*cur);
      if (it == parent_.end()) return false;
      cur = &it->second;
    }
  }

  /// True iff a <= b or b <= a.
  bool comparable(const std::string& a, const std::string& b) const {
    return is_subtype(a, b) || is_subtype(b, a);
  }

  /// The narrower of two comparable types.
  const std::string& more_specific(const std::string& a, const std::string& b) const {
    if (is_subtype(a, b)) return a;
    if (is_subtype(b, a)) return b;
    raise(errc::incomparable, "types '" + a + "' and '" + b + "' are not comparable");
  }

  // Path from `name` up to the root, inclusive.
  std::vector<std::string> ancestors(const std::string& name) const {
    require(name);
    std::vector<std::string> chain;
    std::string cur = name;
    while (true) {
      chain.push_back(cur);
      auto it = parent_.find(cur);
      if (it == parent_.end()) break;
      cur = it->second;
    }
    return chain;
  }

  std::size_t size() const { return order_.size(); }

  /// Declaration order, root first among its subtree ancestors.
  const std::vector<std::string>& names() const { return order_; }

private:
  void require(const std::string& name) const {
    if (!contains(name)) raise(errc::unknown_type, "type '" + name + "' not declared");
  }

  std::vector<std::string> order_;
  std::unordered_map<std::string, std::string> parent_;  // non-root -> parent
  std::optional<std::string> root_;
};

}  // namespace cglink
