#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cglink/chain.hpp"
#include "cglink/errors.hpp"
#include "cglink/kb.hpp"
#include "cglink/paths.hpp"

namespace cglink {

/// The three chain-production methods, in increasing order of complexity.
enum class Method { fusion, inclusion, join };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::fusion: return "fusion";
    case Method::inclusion: return "inclusion";
    case Method::join: return "join";
  }
  return "?";
}

/// One knowledge source for a predicate: its lexicon definition (rank 0) or
/// a reference model inherited along the hierarchy (rank 1 = nearest).
struct RankedModel {
  const ReferenceModel* model;
  std::size_t rank;
  std::string label;  // "def:<word>" or "model:<Type>"
};

/// A pair of knowledge sources for the two linked predicates, ordered by
/// specificity on the key (max rank, min rank): lower keys use more specific
/// knowledge.
struct ModelPair {
  RankedModel first;
  RankedModel second;

  std::pair<std::size_t, std::size_t> key() const {
    return {std::max(first.rank, second.rank), std::min(first.rank, second.rank)};
  }
};

/// True iff `a` uses strictly more specific knowledge than `b`.
inline bool pair_more_specific(const ModelPair& a, const ModelPair& b) {
  return a.key() < b.key();
}

/// The knowledge sources for a predicate, most specific first: the lexicon
/// definition, then reference models found walking the head type's ancestor
/// chain. Strictly ordered because the hierarchy is a tree.
inline std::vector<RankedModel> model_sequence(const PredicateEntry& entry,
                                               const KnowledgeBase& kb) {
  std::vector<RankedModel> seq;
  seq.push_back(RankedModel{&entry.definition, 0, "def:" + entry.word});
  std::size_t rank = 1;
  for (const OwnedModel& om : kb.models.inherited_models(entry.definition.head_type(), kb.types))
    seq.push_back(RankedModel{om.model, rank++, "model:" + om.owner});
  return seq;
}

/// Concept fusion: if the two types are comparable the concepts may be
/// redundant, and the empty chain carrying the merged (narrower-typed)
/// concept is returned.
inline std::optional<Chain> method_fusion(const std::string& t1, const std::string& t2,
                                          const TypeHierarchy& types) {
  if (!types.comparable(t1, t2)) return std::nullopt;
  return Chain::single(ConceptNode{types.more_specific(t1, t2), {}});
}

/// Which predicate the model's head stands for: left = chains start at the
/// head, right = chains end at it.
enum class HeadSide { left, right };

namespace detail {

inline Chain reversed(const Chain& c) {
  if (c.concept_count() == 0) return c;
  Chain out = Chain::single(c.concepts().back());
  for (std::size_t i = c.length(); i-- > 0;) {
    Direction dir =
        c.links()[i].dir == Direction::forward ? Direction::backward : Direction::forward;
    out.extend(Chain::Link{c.links()[i].relation, dir}, c.concepts()[i]);
  }
  return out;
}

}  // namespace detail

/// Concept inclusion: one predicate's concept may be "included" in the
/// other's model. For every concept of the model whose type subsumes
/// `other_type`, every simple path between the head and that concept becomes
/// a chain, with the far endpoint narrowed to `other_type`. Coreference
/// variables are dropped from the results.
inline std::vector<Chain> method_inclusion(const ReferenceModel& m, HeadSide side,
                                           const std::string& other_type,
                                           const TypeHierarchy& types, std::size_t max_rel) {
  std::vector<Chain> out;
  const auto& concepts = m.graph().concepts();
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    if (!types.is_subtype(other_type, concepts[i].type)) continue;
    for (Chain& path : enumerate_paths(m.graph(), m.head_index(), i, max_rel)) {
      path.set_concept(path.concept_count() - 1,
                       restrict_concept(path.last(), other_type, types));
      if (side == HeadSide::right) path = detail::reversed(path);
      path.strip_variable_referents();
      out.push_back(std::move(path));
    }
  }
  return out;
}

/// Model join: any two concepts of the two models with comparable types may
/// be merged. For every such pair, every head1->concept path of m1 is joined
/// to every concept->head2 path of m2; the junction concept keeps the
/// narrower type. Coreference variables are dropped from the results.
inline std::vector<Chain> method_join(const ReferenceModel& m1, const ReferenceModel& m2,
                                      const TypeHierarchy& types, std::size_t max_rel) {
  std::vector<Chain> out;
  const auto& c1 = m1.graph().concepts();
  const auto& c2 = m2.graph().concepts();
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (!types.comparable(c1[i].type, c2[j].type)) continue;
      auto paths1 = enumerate_paths(m1.graph(), m1.head_index(), i, max_rel);
      auto paths2 = enumerate_paths(m2.graph(), j, m2.head_index(), max_rel);
      for (Chain& p : paths1) p.strip_variable_referents();
      for (Chain& p : paths2) p.strip_variable_referents();
      for (const Chain& p1 : paths1)
        for (const Chain& p2 : paths2) out.push_back(join_chains(p1, p2, types));
    }
  }
  return out;
}

/// Position of the best preference the chain satisfies: the smallest index i
/// such that some chain relation r has r <= prefs[i] in the relation-type
/// tree. A chain with no relations matches only a trailing catch-all (the
/// relation-type root as last preference) and gets that index; nullopt means
/// the chain violates the preferences.
inline std::optional<std::size_t> pref_rank(const Chain& c, const GramRelEntry& gr,
                                            const TypeHierarchy& reltypes) {
  if (c.length() == 0) {
    if (gr.prefs.back() == reltypes.root()) return gr.prefs.size() - 1;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < gr.prefs.size(); ++i)
    for (const auto& link : c.links())
      if (reltypes.is_subtype(link.relation, gr.prefs[i])) return i;
  return std::nullopt;
}

struct ResolveOptions {
  std::size_t max_rel = 6;           // path-length bound, in relations
  std::optional<std::uint64_t> seed; // set = random tie-break, unset = lexicographic
};

/// A preference-satisfying chain produced by some (stage, method).
struct Candidate {
  Chain chain;
  Method method;
  std::optional<ModelPair> pair;  // nullopt for fusion (model-free)
  std::size_t pref_rank;
  std::size_t length;             // relation count
  std::string rendered;           // cached render_linear
};

/// One visited production stage and what it generated.
struct StageRecord {
  Method method;
  std::optional<std::pair<std::size_t, std::size_t>> ranks;  // (r1, r2), nullopt for fusion
  std::string m1_label;  // empty for fusion
  std::string m2_label;
  std::size_t generated = 0;   // chains produced by the stage
  std::size_t satisfying = 0;  // of which preference-satisfying
};

struct ResolutionResult {
  std::optional<Candidate> selected;   // engaged on success
  std::vector<Candidate> candidates;   // winning stage's candidates, ranked
  std::size_t explored = 0;            // chains generated over visited stages
  std::size_t discarded = 0;           // of which violating preferences
  std::size_t pairs_visited = 0;
  std::vector<StageRecord> trace;      // visited stages in order
};

namespace detail {

// Narrows both chain ends to the definitions' head types so a selected chain
// never generalizes a predicate. A chain whose end is incomparable with the
// required type cannot represent the link and is dropped (nullopt).
inline std::optional<Chain> anchor_ends(Chain chain, const std::string& t1,
                                        const std::string& t2, const TypeHierarchy& types) {
  if (chain.concept_count() == 0) return chain;
  auto narrow = [&](std::size_t idx, const std::string& t) -> bool {
    const ConceptNode& c = chain.concepts()[idx];
    if (types.is_subtype(c.type, t)) return true;  // already specific enough
    if (types.is_subtype(t, c.type)) {
      chain.set_concept(idx, restrict_concept(c, t, types));
      return true;
    }
    return false;
  };
  if (!narrow(0, t1)) return std::nullopt;
  if (!narrow(chain.concept_count() - 1, t2)) return std::nullopt;
  return chain;
}

inline bool candidate_order(const Candidate& a, const Candidate& b) {
  if (a.pref_rank != b.pref_rank) return a.pref_rank < b.pref_rank;
  if (a.length != b.length) return a.length < b.length;
  return a.rendered < b.rendered;
}

// Selects the winner among a stage's candidates: lowest preference rank,
// then shortest chain, then lexicographic render (or uniform random among
// the remaining ties when an RNG is supplied).
inline Candidate select_candidate(std::vector<Candidate> candidates, std::mt19937_64* rng) {
  std::sort(candidates.begin(), candidates.end(), candidate_order);
  if (!rng) return candidates.front();
  std::size_t tie_end = 1;
  while (tie_end < candidates.size() &&
         candidates[tie_end].pref_rank == candidates[0].pref_rank &&
         candidates[tie_end].length == candidates[0].length)
    ++tie_end;
  return candidates[(*rng)() % tie_end];
}

inline ResolutionResult resolve_link_impl(const KnowledgeBase& kb, const std::string& p1,
                                          const std::string& gr_name, const std::string& p2,
                                          const ResolveOptions& opts, std::mt19937_64* rng) {
  const PredicateEntry& e1 = kb.lexicon.lookup_entry(p1);
  const PredicateEntry& e2 = kb.lexicon.lookup_entry(p2);
  const GramRelEntry& gr = kb.lexicon.lookup_gramrel(gr_name);
  const std::string& t1 = e1.definition.head_type();
  const std::string& t2 = e2.definition.head_type();

  ResolutionResult res;

  // Turns raw stage chains into candidates, updating counters; returns the
  // stage's satisfying candidates ranked by the selection order.
  auto run_stage = [&](std::vector<Chain> chains, Method method,
                       const std::optional<ModelPair>& pair) {
    StageRecord rec;
    rec.method = method;
    if (pair) {
      rec.ranks = {pair->first.rank, pair->second.rank};
      rec.m1_label = pair->first.label;
      rec.m2_label = pair->second.label;
    }
    rec.generated = chains.size();
    res.explored += chains.size();
    std::vector<Candidate> cands;
    for (Chain& raw : chains) {
      std::optional<Chain> anchored = anchor_ends(std::move(raw), t1, t2, kb.types);
      if (!anchored) {
        ++res.discarded;
        continue;
      }
      std::optional<std::size_t> rank = pref_rank(*anchored, gr, kb.reltypes);
      if (!rank) {
        ++res.discarded;
        continue;
      }
      std::size_t len = anchored->length();
      std::string rendered = render_linear(*anchored);
      cands.push_back(
          Candidate{std::move(*anchored), method, pair, *rank, len, std::move(rendered)});
    }
    rec.satisfying = cands.size();
    res.trace.push_back(std::move(rec));
    std::sort(cands.begin(), cands.end(), candidate_order);
    return cands;
  };

  auto finish = [&](std::vector<Candidate> cands) {
    res.selected = select_candidate(cands, rng);
    res.candidates = std::move(cands);
    return std::move(res);
  };

  // Stage 1: fusion on the definitions' head types, model-free. A
  // preference-satisfying fusion wins outright (simplest method, most
  // specific knowledge).
  {
    std::vector<Chain> chains;
    if (std::optional<Chain> fused = method_fusion(t1, t2, kb.types))
      chains.push_back(std::move(*fused));
    auto cands = run_stage(std::move(chains), Method::fusion, std::nullopt);
    if (!cands.empty()) return finish(std::move(cands));
  }

  // Stage 2: model pairs from most to least specific; within a pair,
  // inclusion on both sides, then join. The first stage producing a
  // preference-satisfying chain closes the search.
  std::vector<RankedModel> seq1 = model_sequence(e1, kb);
  std::vector<RankedModel> seq2 = model_sequence(e2, kb);
  std::vector<ModelPair> pairs;
  for (const RankedModel& m1 : seq1)
    for (const RankedModel& m2 : seq2) pairs.push_back(ModelPair{m1, m2});
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const ModelPair& a, const ModelPair& b) { return a.key() < b.key(); });

  for (const ModelPair& pair : pairs) {
    ++res.pairs_visited;
    std::vector<Chain> incl =
        method_inclusion(*pair.first.model, HeadSide::left, t2, kb.types, opts.max_rel);
    std::vector<Chain> incl_right =
        method_inclusion(*pair.second.model, HeadSide::right, t1, kb.types, opts.max_rel);
    incl.insert(incl.end(), std::make_move_iterator(incl_right.begin()),
                std::make_move_iterator(incl_right.end()));
    auto cands = run_stage(std::move(incl), Method::inclusion, pair);
    if (!cands.empty()) return finish(std::move(cands));

    cands = run_stage(method_join(*pair.first.model, *pair.second.model, kb.types, opts.max_rel),
                      Method::join, pair);
    if (!cands.empty()) return finish(std::move(cands));
  }

  return res;  // selected stays empty: no chain found
}

}  // namespace detail

/// Resolves one grammatical link (P1; Gr; P2) into a conceptual chain.
/// Returns a result whose `selected` is empty when every stage is exhausted
/// without a preference-satisfying chain.
inline ResolutionResult try_resolve_link(const KnowledgeBase& kb, const std::string& p1,
                                         const std::string& gr, const std::string& p2,
                                         const ResolveOptions& opts = {}) {
  if (opts.seed) {
    std::mt19937_64 rng(*opts.seed);
    return detail::resolve_link_impl(kb, p1, gr, p2, opts, &rng);
  }
  return detail::resolve_link_impl(kb, p1, gr, p2, opts, nullptr);
}

/// Like try_resolve_link but failure to find any chain is an error.
inline ResolutionResult resolve_link(const KnowledgeBase& kb, const std::string& p1,
                                     const std::string& gr, const std::string& p2,
                                     const ResolveOptions& opts = {}) {
  ResolutionResult res = try_resolve_link(kb, p1, gr, p2, opts);
  if (!res.selected)
    raise(errc::no_chain_found,
          "no chain found for (" + p1 + "; " + gr + "; " + p2 + ")");
  return res;
}

/// One dependency triple: parent predicate, grammatical relation, child.
struct Triple {
  std::string parent;
  std::string gramrel;
  std::string child;

  bool operator==(const Triple&) const = default;
};

/// A resolved sentence: the merged conceptual graph plus the per-link
/// resolution results in depth-first order.
struct SentenceResult {
  ConceptualGraph graph;
  std::vector<std::pair<Triple, ResolutionResult>> links;
};

/// Resolves every grammatical link of a dependency tree, depth-first from
/// the sentence head, and joins the chains on the shared parent concepts
/// (merged concepts keep the narrower type).
inline SentenceResult resolve_sentence(const KnowledgeBase& kb,
                                       const std::vector<Triple>& triples,
                                       const ResolveOptions& opts = {}) {
  if (triples.empty()) raise(errc::not_a_tree, "no triples given");

  // tree shape: unique root (= first parent), one parent per child
  std::unordered_map<std::string, std::vector<const Triple*>> children;
  std::unordered_map<std::string, std::size_t> parent_count;
  for (const Triple& t : triples) {
    children[t.parent].push_back(&t);
    ++parent_count[t.child];
    if (parent_count[t.child] > 1)
      raise(errc::not_a_tree, "word '" + t.child + "' has more than one parent");
  }
  const std::string& root = triples.front().parent;
  if (parent_count.count(root))
    raise(errc::not_a_tree, "head word '" + root + "' appears as a child");
  {
    // every triple must be reachable from the head
    std::size_t reached = 0;
    std::vector<const std::string*> stack{&root};
    while (!stack.empty()) {
      const std::string* word = stack.back();
      stack.pop_back();
      auto it = children.find(*word);
      if (it == children.end()) continue;
      reached += it->second.size();
      for (const Triple* t : it->second) stack.push_back(&t->child);
    }
    if (reached != triples.size())
      raise(errc::not_a_tree, "triples are not all connected to the head");
  }

  std::optional<std::mt19937_64> rng;
  if (opts.seed) rng.emplace(*opts.seed);

  SentenceResult out;
  ConceptualGraph& g = out.graph;

  // Merges a chain concept into an existing graph node, narrowing its type.
  auto merge_into = [&](std::size_t node, const ConceptNode& c) {
    const std::string& have = g.concepts()[node].type;
    const std::string& narrower = kb.types.more_specific(have, c.type);  // incomparable -> error
    if (narrower != have) g.restrict_concept(node, narrower, kb.types);
  };

  auto resolve_word = [&](auto&& self, const std::string& word,
                          std::optional<std::size_t> node) -> void {
    auto it = children.find(word);
    if (it == children.end()) return;
    for (const Triple* t : it->second) {
      ResolutionResult res =
          detail::resolve_link_impl(kb, t->parent, t->gramrel, t->child, opts,
                                    rng ? &*rng : nullptr);
      if (!res.selected)
        raise(errc::no_chain_found,
              "no chain found for (" + t->parent + "; " + t->gramrel + "; " + t->child + ")");
      const Chain& chain = res.selected->chain;

      if (!node) {
        node = g.add_concept(chain.first().type, chain.first().referent);
        if (g.concepts().size() == 1) g.set_head(*node);
      } else {
        merge_into(*node, chain.first());
      }

      // lay the chain down, reusing the parent node as its first concept
      std::size_t prev = *node;
      std::size_t last = *node;
      for (std::size_t i = 0; i < chain.length(); ++i) {
        const ConceptNode& c = chain.concepts()[i + 1];
        std::size_t next = g.add_concept(c.type, c.referent);
        const Chain::Link& link = chain.links()[i];
        if (link.dir == Direction::forward)
          g.add_relation(link.relation, prev, next);
        else
          g.add_relation(link.relation, next, prev);
        prev = next;
        last = next;
      }
      out.links.emplace_back(*t, std::move(res));
      self(self, t->child, last);
    }
  };
  resolve_word(resolve_word, root, std::nullopt);
  return out;
}

}  // namespace cglink
