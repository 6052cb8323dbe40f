#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cglink/cg.hpp"
#include "cglink/errors.hpp"
#include "cglink/type_hierarchy.hpp"

namespace cglink {

/// How a relation arc was traversed when the chain was extracted.
enum class Direction { forward, backward };

/// A linear conceptual graph: k relations threading k+1 concepts, each step
/// recording the traversal direction of its arc. A chain may hold a single
/// concept (zero relations, e.g. a fusion result) or nothing at all.
class Chain {
public:
  struct Link {
    std::string relation;
    Direction dir;

    bool operator==(const Link&) const = default;
  };

  Chain() = default;

  static Chain single(ConceptNode c) {
    Chain ch;
    ch.concepts_.push_back(std::move(c));
    return ch;
  }

  // Appends one traversal step. The chain must already have a tail concept.
  void extend(Link link, ConceptNode next) {
    if (concepts_.empty()) raise(errc::invalid_index, "cannot extend a chain with no concepts");
    links_.push_back(std::move(link));
    concepts_.push_back(std::move(next));
  }

  /// Relation count.
  std::size_t length() const { return links_.size(); }
  std::size_t concept_count() const { return concepts_.size(); }

  const ConceptNode& first() const {
    if (concepts_.empty()) raise(errc::invalid_index, "chain has no concepts");
    return concepts_.front();
  }
  const ConceptNode& last() const {
    if (concepts_.empty()) raise(errc::invalid_index, "chain has no concepts");
    return concepts_.back();
  }

  const std::vector<ConceptNode>& concepts() const { return concepts_; }
  const std::vector<Link>& links() const { return links_; }

  void set_concept(std::size_t i, ConceptNode c) {
    if (i >= concepts_.size()) raise(errc::invalid_index, "chain concept index out of range");
    concepts_[i] = std::move(c);
  }

  // Removes the last step (one link and one concept).
  void pop_back() {
    if (links_.empty()) raise(errc::invalid_index, "chain has no step to remove");
    links_.pop_back();
    concepts_.pop_back();
  }

  // Drops coreference variables; literal referents stay.
  void strip_variable_referents() {
    for (auto& c : concepts_)
      if (is_variable_referent(c.referent)) c.referent.clear();
  }

  bool operator==(const Chain&) const = default;

private:
  std::vector<ConceptNode> concepts_;
  std::vector<Link> links_;
};

/// Copy of a concept narrowed to type `t`; the referent is preserved.
inline ConceptNode restrict_concept(const ConceptNode& c, const std::string& t,
                                    const TypeHierarchy& types) {
  if (!types.is_subtype(t, c.type))
    raise(errc::not_a_subtype, "'" + t + "' is not a subtype of '" + c.type + "'");
  return ConceptNode{t, c.referent};
}

/// Concatenates two chains by merging last(a) with first(b). The junction
/// concept appears once, typed with the narrower of the two junction types;
/// the result has length(a) + length(b) relations. A chain with no concepts
/// acts as the identity.
inline Chain join_chains(const Chain& a, const Chain& b, const TypeHierarchy& types) {
  if (a.concept_count() == 0) return b;
  if (b.concept_count() == 0) return a;
  const ConceptNode& la = a.last();
  const ConceptNode& fb = b.first();
  if (!types.comparable(la.type, fb.type))
    raise(errc::incomparable_junction,
          "junction types '" + la.type + "' and '" + fb.type + "' are not comparable");
  ConceptNode junction;
  junction.type = types.more_specific(la.type, fb.type);
  junction.referent = !la.referent.empty() ? la.referent : fb.referent;

  Chain out = a;
  out.set_concept(out.concept_count() - 1, std::move(junction));
  for (std::size_t i = 0; i < b.length(); ++i)
    out.extend(b.links()[i], b.concepts()[i + 1]);
  return out;
}

/// Renders a chain in linear syntax, bit-exact: concepts as `[Type]` or
/// `[Type:referent]`, forward steps as `-(rel)->`, backward steps as
/// `<-(rel)-`. A chain with no concepts renders as `[]`.
inline std::string render_linear(const Chain& c) {
  if (c.concept_count() == 0) return "[]";
  auto concept_str = [](const ConceptNode& n) {
    std::string s = "[" + n.type;
    if (!n.referent.empty()) s += ":" + n.referent;
    s += "]";
    return s;
  };
  std::string out = concept_str(c.concepts()[0]);
  for (std::size_t i = 0; i < c.length(); ++i) {
    const auto& link = c.links()[i];
    if (link.dir == Direction::forward)
      out += "-(" + link.relation + ")->";
    else
      out += "<-(" + link.relation + ")-";
    out += concept_str(c.concepts()[i + 1]);
  }
  return out;
}

}  // namespace cglink
