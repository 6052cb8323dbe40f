#pragma once

#include <cstddef>
#include <vector>

#include "cglink/cg.hpp"
#include "cglink/chain.hpp"
#include "cglink/errors.hpp"

namespace cglink {

/// All simple paths between two concepts of a graph, as chains.
///
/// Arc direction is ignored for traversal but recorded on every step. A path
/// never revisits a concept, so no relation node is traversed twice either.
/// `max_rel` bounds the relation count. When `from == to` the sole result is
/// the single-concept chain. Results come in a deterministic order:
/// lexicographic by the sequence of relation indices traversed.
inline std::vector<Chain> enumerate_paths(const ConceptualGraph& g, std::size_t from,
                                          std::size_t to, std::size_t max_rel) {
  const auto& concepts = g.concepts();
  const auto& relations = g.relations();
  if (from >= concepts.size() || to >= concepts.size())
    raise(errc::invalid_index, "path endpoint index out of range");

  // incident relation indices per concept, ascending
  std::vector<std::vector<std::size_t>> incident(concepts.size());
  for (std::size_t r = 0; r < relations.size(); ++r) {
    incident[relations[r].source].push_back(r);
    incident[relations[r].target].push_back(r);
  }

  std::vector<Chain> out;
  std::vector<bool> visited(concepts.size(), false);
  Chain path = Chain::single(concepts[from]);

  auto dfs = [&](auto&& self, std::size_t at) -> void {
    if (at == to) {
      // extending past the target can never reach it again on a simple path
      out.push_back(path);
      return;
    }
    if (path.length() >= max_rel) return;
    visited[at] = true;
    for (std::size_t r : incident[at]) {
      const RelationNode& rel = relations[r];
      std::size_t next = rel.source == at ? rel.target : rel.source;
      if (visited[next] || next == at) continue;
      Direction dir = rel.source == at ? Direction::forward : Direction::backward;
      path.extend(Chain::Link{rel.type, dir}, concepts[next]);
      self(self, next);
      path.pop_back();
    }
    visited[at] = false;
  };
  dfs(dfs, from);
  return out;
}

}  // namespace cglink
