// cglink: resolve grammatical links into conceptual chains over a .kb
// knowledge base.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cglink/cglink.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonFlags {
  bool all = false;
  bool stats = false;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::size_t max_rel = 6;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--all", f.all, "print every candidate of the winning stage, ranked");
  cmd->add_flag("--stats", f.stats, "print search statistics");
  cmd->add_flag("--json", f.json, "emit a structured JSON record");
  cmd->add_option("--seed", f.seed, "random tie-break with this seed");
  cmd->add_option("--max-path-len", f.max_rel, "path length bound in relations")
      ->check(CLI::NonNegativeNumber);
}

cglink::ResolveOptions to_options(const CommonFlags& f) {
  cglink::ResolveOptions opts;
  opts.max_rel = f.max_rel;
  opts.seed = f.seed;
  return opts;
}

// Loads a KB or reports its diagnostics on stderr (exit 2 path).
cglink::KnowledgeBase load_kb_or_fail(const std::string& path) {
  cglink::LoadResult res = cglink::parse_kb_file(path);
  if (!res.ok()) {
    for (const auto& d : res.diagnostics) std::cerr << cglink::format_diagnostic(d) << "\n";
    std::exit(2);
  }
  return std::move(*res.kb);
}

std::string stats_line(const cglink::ResolutionResult& r) {
  return "explored=" + std::to_string(r.explored) + " discarded=" + std::to_string(r.discarded) +
         " pairs=" + std::to_string(r.pairs_visited) + " method=" +
         std::string(cglink::method_name(r.selected->method));
}

ordered_json models_json(const cglink::Candidate& c) {
  if (!c.pair) return nullptr;
  return ordered_json::array({c.pair->first.label, c.pair->second.label});
}

ordered_json result_json(const cglink::ResolutionResult& r, bool with_candidates) {
  const cglink::Candidate& sel = *r.selected;
  ordered_json j;
  j["chain"] = sel.rendered;
  j["method"] = std::string(cglink::method_name(sel.method));
  j["explored"] = r.explored;
  j["discarded"] = r.discarded;
  j["pairs"] = r.pairs_visited;
  j["pref_rank"] = sel.pref_rank;
  j["length"] = sel.length;
  j["models"] = models_json(sel);
  ordered_json trace = ordered_json::array();
  for (const auto& rec : r.trace) {
    ordered_json t;
    t["method"] = std::string(cglink::method_name(rec.method));
    if (rec.ranks) t["models"] = ordered_json::array({rec.m1_label, rec.m2_label});
    t["generated"] = rec.generated;
    t["satisfying"] = rec.satisfying;
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  if (with_candidates) {
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.candidates) {
      ordered_json e;
      e["rank"] = c.pref_rank;
      e["len"] = c.length;
      e["chain"] = c.rendered;
      cands.push_back(std::move(e));
    }
    j["candidates"] = std::move(cands);
  }
  return j;
}

int cmd_resolve(const std::string& kb_path, const std::string& p1, const std::string& gr,
                const std::string& p2, const CommonFlags& flags) {
  cglink::KnowledgeBase kb = load_kb_or_fail(kb_path);
  cglink::ResolutionResult res = cglink::resolve_link(kb, p1, gr, p2, to_options(flags));
  if (flags.json) {
    std::cout << result_json(res, flags.all).dump() << "\n";
    return 0;
  }
  std::cout << res.selected->rendered << "\n";
  if (flags.all)
    for (const auto& c : res.candidates)
      std::cout << "rank=" << c.pref_rank << " len=" << c.length << " " << c.rendered << "\n";
  if (flags.stats) std::cout << stats_line(res) << "\n";
  return 0;
}

// One concept per line with its outgoing relations, in insertion order.
void print_graph(std::ostream& os, const cglink::ConceptualGraph& g) {
  for (std::size_t i = 0; i < g.concepts().size(); ++i) {
    const auto& c = g.concepts()[i];
    os << "c" << i << " [" << c.type;
    if (!c.referent.empty()) os << ":" << c.referent;
    os << "]";
    for (const auto& r : g.relations())
      if (r.source == i) os << " -(" << r.type << ")->c" << r.target;
    os << "\n";
  }
}

int cmd_sentence(const std::string& kb_path, const std::string& triples_path,
                 const CommonFlags& flags) {
  cglink::KnowledgeBase kb = load_kb_or_fail(kb_path);
  std::vector<cglink::Triple> triples = cglink::parse_triples_file(triples_path);
  cglink::SentenceResult res = cglink::resolve_sentence(kb, triples, to_options(flags));

  if (flags.json) {
    ordered_json j;
    ordered_json concepts = ordered_json::array();
    for (std::size_t i = 0; i < res.graph.concepts().size(); ++i) {
      const auto& c = res.graph.concepts()[i];
      ordered_json e;
      e["id"] = i;
      e["type"] = c.type;
      if (!c.referent.empty()) e["referent"] = c.referent;
      concepts.push_back(std::move(e));
    }
    ordered_json relations = ordered_json::array();
    for (const auto& r : res.graph.relations()) {
      ordered_json e;
      e["type"] = r.type;
      e["source"] = r.source;
      e["target"] = r.target;
      relations.push_back(std::move(e));
    }
    ordered_json links = ordered_json::array();
    for (const auto& [triple, rr] : res.links) {
      ordered_json e;
      e["p1"] = triple.parent;
      e["gr"] = triple.gramrel;
      e["p2"] = triple.child;
      e["record"] = result_json(rr, flags.all);
      links.push_back(std::move(e));
    }
    j["concepts"] = std::move(concepts);
    j["relations"] = std::move(relations);
    j["links"] = std::move(links);
    std::cout << j.dump() << "\n";
    return 0;
  }

  print_graph(std::cout, res.graph);
  for (const auto& [triple, rr] : res.links) {
    std::string link = "link " + triple.parent + " " + triple.gramrel + " " + triple.child;
    if (flags.all)
      for (const auto& c : rr.candidates)
        std::cout << link << ": rank=" << c.pref_rank << " len=" << c.length << " " << c.rendered
                  << "\n";
    if (flags.stats) std::cout << link << ": " << stats_line(rr) << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& kb_path) {
  cglink::LoadResult res = cglink::parse_kb_file(kb_path);
  if (!res.ok()) {
    for (const auto& d : res.diagnostics) std::cerr << cglink::format_diagnostic(d) << "\n";
    return 2;
  }
  for (const auto& d : cglink::validate_kb(*res.kb, &res.source_map))
    std::cout << cglink::format_diagnostic(d) << "\n";
  return 0;
}

int cmd_stats(const std::string& kb_path) {
  cglink::KnowledgeBase kb = load_kb_or_fail(kb_path);
  std::cout << "types=" << kb.types.size() << "\n";
  std::cout << "reltypes=" << kb.reltypes.size() << "\n";
  std::cout << "models=" << kb.models.size() << "\n";
  std::cout << "entries=" << kb.lexicon.entry_count() << "\n";
  std::cout << "gramrels=" << kb.lexicon.gramrel_count() << "\n";
  const std::string* largest = nullptr;
  std::size_t best = 0;
  for (const std::string& owner : kb.models.owners()) {
    std::size_t n = kb.models.find(owner)->graph().concepts().size();
    if (!largest || n > best) {
      largest = &owner;
      best = n;
    }
  }
  if (largest) {
    const auto& g = kb.models.find(*largest)->graph();
    std::cout << "largest_model=" << *largest << " concepts=" << g.concepts().size()
              << " relations=" << g.relations().size() << "\n";
  } else {
    std::cout << "largest_model=none\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conceptual-graph link resolution over a .kb knowledge base"};
  app.require_subcommand(1);

  std::string kb_path, p1, gr, p2, triples_path;
  CommonFlags resolve_flags, sentence_flags;

  CLI::App* resolve = app.add_subcommand("resolve", "resolve one grammatical link");
  resolve->add_option("kb", kb_path, "knowledge base file")->required();
  resolve->add_option("p1", p1, "head predicate lexeme")->required();
  resolve->add_option("gr", gr, "grammatical relation")->required();
  resolve->add_option("p2", p2, "dependent predicate lexeme")->required();
  add_common_flags(resolve, resolve_flags);

  CLI::App* sentence = app.add_subcommand("sentence", "resolve a dependency-triple file");
  sentence->add_option("kb", kb_path, "knowledge base file")->required();
  sentence->add_option("triples", triples_path, "triple file")->required();
  add_common_flags(sentence, sentence_flags);

  CLI::App* validate = app.add_subcommand("validate", "check a knowledge base");
  validate->add_option("kb", kb_path, "knowledge base file")->required();

  CLI::App* stats = app.add_subcommand("stats", "summarize a knowledge base");
  stats->add_option("kb", kb_path, "knowledge base file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (resolve->parsed()) return cmd_resolve(kb_path, p1, gr, p2, resolve_flags);
    if (sentence->parsed()) return cmd_sentence(kb_path, triples_path, sentence_flags);
    if (validate->parsed()) return cmd_validate(kb_path);
    if (stats->parsed()) return cmd_stats(kb_path);
  } catch (const cglink::kb_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == cglink::errc::no_chain_found ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
