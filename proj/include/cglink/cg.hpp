#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cglink/errors.hpp"
#include "cglink/type_hierarchy.hpp"

namespace cglink {

/// A concept node: type plus optional referent. Referents starting with '*'
/// are coreference variables (scoped to their graph); anything else is a
/// literal marker.
struct ConceptNode {
  std::string type;
  std::string referent;  // empty = none

  bool operator==(const ConceptNode&) const = default;
};

inline bool is_variable_referent(const std::string& r) {
  return !r.empty() && r.front() == '*';
}

/// A binary relation arc between two concepts, source -> target.
struct RelationNode {
  std::string type;
  std::size_t source;
  std::size_t target;

  bool operator==(const RelationNode&) const = default;
};

/// Bipartite graph of concept nodes and binary relation nodes, with an
/// optional designated head concept. Immutable once built; all queries are
/// const and reentrant.
class ConceptualGraph {
public:
  std::size_t add_concept(std::string type, std::string referent = {}) {
    if (is_variable_referent(referent)) {
      for (const auto& c : concepts_)
        if (c.referent == referent)
          raise(errc::duplicate_referent,
                "variable '" + referent + "' already names a concept; coreferent nodes must be merged");
    }
    concepts_.push_back(ConceptNode{std::move(type), std::move(referent)});
    return concepts_.size() - 1;
  }

  std::size_t add_relation(std::string type, std::size_t source, std::size_t target) {
    if (source >= concepts_.size() || target >= concepts_.size())
      raise(errc::invalid_index, "relation endpoint index out of range");
    if (source == target)
      raise(errc::self_loop, "relation endpoints must be two distinct concepts");
    relations_.push_back(RelationNode{std::move(type), source, target});
    return relations_.size() - 1;
  }

  void set_head(std::size_t index) {
    if (index >= concepts_.size()) raise(errc::invalid_index, "head index out of range");
    head_ = index;
  }

  const std::vector<ConceptNode>& concepts() const { return concepts_; }
  const std::vector<RelationNode>& relations() const { return relations_; }
  std::optional<std::size_t> head() const { return head_; }

  const ConceptNode& concept_at(std::size_t i) const {
    if (i >= concepts_.size()) raise(errc::invalid_index, "concept index out of range");
    return concepts_[i];
  }

  // Narrows the type of one concept in place (used when merging chains into
  // a sentence graph). `t` must be a subtype of the current type.
  void restrict_concept(std::size_t i, const std::string& t, const TypeHierarchy& types) {
    if (i >= concepts_.size()) raise(errc::invalid_index, "concept index out of range");
    if (!types.is_subtype(t, concepts_[i].type))
      raise(errc::not_a_subtype, "'" + t + "' is not a subtype of '" + concepts_[i].type + "'");
    concepts_[i].type = t;
  }

  // Checks every referenced type name against the two hierarchies.
  void validate_types(const TypeHierarchy& types, const TypeHierarchy& reltypes) const {
    for (const auto& c : concepts_)
      if (!types.contains(c.type)) raise(errc::unknown_type, "type '" + c.type + "' not declared");
    for (const auto& r : relations_)
      if (!reltypes.contains(r.type))
        raise(errc::unknown_relation_type, "relation type '" + r.type + "' not declared");
  }

  bool operator==(const ConceptualGraph&) const = default;

private:
  std::vector<ConceptNode> concepts_;
  std::vector<RelationNode> relations_;
  std::optional<std::size_t> head_;
};

/// A conceptual graph with a mandatory head concept. Reference models
/// attached to ontology types and lexicon definitions both take this shape.
class ReferenceModel {
public:
  explicit ReferenceModel(ConceptualGraph graph) : graph_(std::move(graph)) {
    if (!graph_.head()) raise(errc::missing_head, "reference model requires a head concept");
  }

  const ConceptualGraph& graph() const { return graph_; }
  std::size_t head_index() const { return *graph_.head(); }
  const ConceptNode& head() const { return graph_.concept_at(head_index()); }
  const std::string& head_type() const { return head().type; }

private:
  ConceptualGraph graph_;
};

}  // namespace cglink
