#pragma once

#include <string>

#include "cglink/lexicon.hpp"
#include "cglink/model_registry.hpp"
#include "cglink/type_hierarchy.hpp"

namespace cglink {

/// Everything the resolver needs: concept-type tree, relation-type tree,
/// reference models, and the semantic lexicon. Built in a single-threaded
/// load phase, then treated as frozen; const access is safe from any number
/// of concurrent callers.
struct KnowledgeBase {
  TypeHierarchy types;
  TypeHierarchy reltypes;
  ModelRegistry models;
  Lexicon lexicon;
};

}  // namespace cglink
