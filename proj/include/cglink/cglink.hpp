#pragma once

// Conceptual-graph link resolution: a knowledge-representation engine that
// turns grammatical links between word predicates into conceptual chains by
// heuristic path search through an ontology's reference models.

#include "cglink/errors.hpp"
#include "cglink/type_hierarchy.hpp"
#include "cglink/cg.hpp"
#include "cglink/chain.hpp"
#include "cglink/paths.hpp"
#include "cglink/model_registry.hpp"
#include "cglink/lexicon.hpp"
#include "cglink/kb.hpp"
#include "cglink/resolver.hpp"
#include "cglink/kbformat.hpp"
#include "cglink/triples.hpp"
