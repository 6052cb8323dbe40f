#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cglink/kb.hpp"

namespace cglink {

/// One parser or validator finding. Errors imply load failure; warnings do
/// not.
struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity;
  std::size_t line;
  std::string message;
};

inline std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.severity == Diagnostic::Severity::error ? "error:" : "warning:";
  out += std::to_string(d.line) + ":" + d.message;
  return out;
}

/// Declaration lines kept aside for the validator's diagnostics.
struct SourceMap {
  std::unordered_map<std::string, std::size_t> type_lines;
  std::unordered_map<std::string, std::size_t> model_lines;
  std::unordered_map<std::string, std::size_t> gramrel_lines;
};

/// Outcome of a load: `kb` is engaged iff no error diagnostic was produced.
struct LoadResult {
  std::optional<KnowledgeBase> kb;
  std::vector<Diagnostic> diagnostics;
  SourceMap source_map;

  bool ok() const { return kb.has_value(); }
};

namespace kbformat_detail {

struct Token {
  enum class Kind { ident, punct, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t line = 0;
};

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

// `#` starts a comment; punctuation is { } ; : , < plus the arrow pieces
// `-` and `->`.
inline std::vector<Token> tokenize(const std::string& text, std::vector<Diagnostic>& diags) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      tokens.push_back(Token{Token::Kind::ident, text.substr(i, j - i), line});
      i = j;
    } else if (c == '{' || c == '}' || c == ';' || c == ':' || c == ',' || c == '<') {
      tokens.push_back(Token{Token::Kind::punct, std::string(1, c), line});
      ++i;
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        tokens.push_back(Token{Token::Kind::punct, "->", line});
        i += 2;
      } else {
        tokens.push_back(Token{Token::Kind::punct, "-", line});
        ++i;
      }
    } else {
      diags.push_back({Diagnostic::Severity::error, line,
                       std::string("unexpected character '") + c + "'"});
      ++i;
    }
  }
  tokens.push_back(Token{Token::Kind::end, "", line});
  return tokens;
}

// ---- statement forms collected by the first pass ----

struct TypeDecl {
  std::string name;
  std::optional<std::string> parent;
  std::size_t line;
};

struct NodeDecl {
  std::string var;
  std::string type;
  bool is_head;
  std::size_t line;
  std::size_t seq;  // position within the body, shared with edges
};

struct EdgeDecl {
  std::string src, rel, dst;
  std::size_t line;
  std::size_t seq;
};

struct GraphDecl {
  std::string key;  // model type or entry word
  std::vector<NodeDecl> nodes;
  std::vector<EdgeDecl> edges;
  std::size_t line;
};

struct GramRelDecl {
  std::string name;
  std::vector<std::string> prefs;
  std::size_t line;
};

struct Ast {
  std::vector<TypeDecl> types;
  std::vector<TypeDecl> reltypes;
  std::vector<GraphDecl> models;
  std::vector<GraphDecl> entries;
  std::vector<GramRelDecl> gramrels;
};

class Parser {
public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : tokens_(std::move(tokens)), diags_(diags) {}

  Ast parse() {
    Ast ast;
    while (!at_end()) {
      const Token& t = peek();
      if (t.kind != Token::Kind::ident) {
        error(t.line, "expected a declaration keyword, got '" + t.text + "'");
        recover();
        continue;
      }
      if (t.text == "type") {
        if (auto d = parse_type()) ast.types.push_back(std::move(*d));
      } else if (t.text == "reltype") {
        if (auto d = parse_type()) ast.reltypes.push_back(std::move(*d));
      } else if (t.text == "model") {
        if (auto d = parse_graph("model")) ast.models.push_back(std::move(*d));
      } else if (t.text == "entry") {
        if (auto d = parse_graph("entry")) ast.entries.push_back(std::move(*d));
      } else if (t.text == "gramrel") {
        if (auto d = parse_gramrel()) ast.gramrels.push_back(std::move(*d));
      } else {
        error(t.line, "expected a declaration keyword, got '" + t.text + "'");
        recover();
      }
    }
    return ast;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  bool match_punct(const std::string& p) {
    if (peek().kind == Token::Kind::punct && peek().text == p) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::optional<std::string> expect_ident(const char* what) {
    if (peek().kind == Token::Kind::ident) return advance().text;
    error(peek().line, std::string("expected ") + what + ", got '" + peek().text + "'");
    return std::nullopt;
  }

  void error(std::size_t line, const std::string& msg) {
    diags_.push_back({Diagnostic::Severity::error, line, msg});
  }

  // Skips ahead to the next top-level keyword so several syntax errors can
  // be reported in one run.
  void recover() {
    static const std::unordered_set<std::string> keywords{"type", "reltype", "model", "entry",
                                                          "gramrel"};
    while (!at_end()) {
      if (peek().kind == Token::Kind::ident && keywords.count(peek().text)) return;
      ++pos_;
    }
  }

  std::optional<TypeDecl> parse_type() {
    std::size_t line = advance().line;  // 'type' / 'reltype'
    auto name = expect_ident("a type name");
    if (!name) {
      recover();
      return std::nullopt;
    }
    TypeDecl d{*name, std::nullopt, line};
    if (match_punct("<")) {
      auto parent = expect_ident("a parent type name");
      if (!parent) {
        recover();
        return std::nullopt;
      }
      d.parent = *parent;
    }
    return d;
  }

  std::optional<GramRelDecl> parse_gramrel() {
    std::size_t line = advance().line;  // 'gramrel'
    auto name = expect_ident("a grammatical relation name");
    if (!name) {
      recover();
      return std::nullopt;
    }
    if (peek().kind != Token::Kind::ident || peek().text != "prefers") {
      error(peek().line, "expected 'prefers' after 'gramrel " + *name + "'");
      recover();
      return std::nullopt;
    }
    advance();
    GramRelDecl d{*name, {}, line};
    auto first = expect_ident("a relation type after 'prefers'");
    if (!first) {
      recover();
      return std::nullopt;
    }
    d.prefs.push_back(*first);
    while (match_punct(",")) {
      auto rel = expect_ident("a relation type after ','");
      if (!rel) {
        recover();
        return std::nullopt;
      }
      d.prefs.push_back(*rel);
    }
    return d;
  }

  // model TYPE { head VAR: TYPE ; VAR: TYPE ... ; VAR -REL-> VAR ... }
  // entry WORD { same body }
  std::optional<GraphDecl> parse_graph(const char* kind) {
    std::size_t line = advance().line;  // 'model' / 'entry'
    auto key = expect_ident(kind == std::string("model") ? "a type name" : "a word");
    if (!key) {
      recover();
      return std::nullopt;
    }
    if (!match_punct("{")) {
      error(peek().line, std::string("expected '{' after '") + kind + " " + *key + "'");
      recover();
      return std::nullopt;
    }
    GraphDecl d{*key, {}, {}, line};
    bool want_statement = true;
    while (true) {
      if (match_punct("}")) return d;
      if (at_end()) {
        error(peek().line, std::string("unterminated '") + kind + " " + *key + "' body");
        return std::nullopt;
      }
      if (!want_statement) {
        if (!match_punct(";")) {
          error(peek().line, "expected ';' or '}' in body, got '" + peek().text + "'");
          recover();
          return std::nullopt;
        }
        want_statement = true;
        continue;
      }
      if (match_punct(";")) continue;  // tolerate empty statements
      if (!parse_body_statement(d)) {
        recover();
        return std::nullopt;
      }
      want_statement = false;
    }
  }

  bool parse_body_statement(GraphDecl& d) {
    std::size_t line = peek().line;
    std::size_t seq = d.nodes.size() + d.edges.size();
    auto first = expect_ident("a concept variable or 'head'");
    if (!first) return false;

    bool is_head = false;
    std::string var = *first;
    if (var == "head" && peek().kind == Token::Kind::ident) {
      is_head = true;
      var = advance().text;
    }
    if (match_punct(":")) {  // concept declaration
      auto type = expect_ident("a concept type");
      if (!type) return false;
      d.nodes.push_back(NodeDecl{var, *type, is_head, line, seq});
      return true;
    }
    if (is_head) {
      error(peek().line, "expected ':' after 'head " + var + "'");
      return false;
    }
    if (match_punct("-")) {  // edge: VAR -REL-> VAR
      auto rel = expect_ident("a relation type");
      if (!rel) return false;
      if (!match_punct("->")) {
        error(peek().line, "expected '->' after relation '" + *rel + "'");
        return false;
      }
      auto dst = expect_ident("a target concept variable");
      if (!dst) return false;
      d.edges.push_back(EdgeDecl{var, *rel, *dst, line, seq});
      return true;
    }
    error(peek().line, "expected ':' or '-' after '" + var + "'");
    return false;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diags_;
};

// Builds one hierarchy from declarations, reporting problems as diagnostics.
// Forward references are fine: insertion is by walk from the root.
inline TypeHierarchy build_hierarchy(const std::vector<TypeDecl>& decls, const char* kind,
                                     std::vector<Diagnostic>& diags,
                                     std::unordered_map<std::string, std::size_t>& lines) {
  TypeHierarchy h;
  const TypeDecl* root = nullptr;
  std::unordered_map<std::string, const TypeDecl*> by_name;
  for (const TypeDecl& d : decls) {
    if (by_name.count(d.name)) {
      diags.push_back({Diagnostic::Severity::error, d.line,
                       std::string(kind) + " '" + d.name + "' declared twice"});
      continue;
    }
    by_name.emplace(d.name, &d);
    lines.emplace(d.name, d.line);
    if (!d.parent) {
      if (root) {
        diags.push_back({Diagnostic::Severity::error, d.line,
                         std::string("second root ") + kind + " '" + d.name +
                             "' (root is '" + root->name + "')"});
        continue;
      }
      root = &d;
    }
  }
  if (!root) {
    diags.push_back({Diagnostic::Severity::error, decls.empty() ? 1 : decls.front().line,
                     std::string("no root ") + kind + " declared"});
    return h;
  }

  // children in declaration order, then insert by walk from the root
  std::unordered_map<std::string, std::vector<const TypeDecl*>> children;
  for (const TypeDecl& d : decls) {
    if (by_name.at(d.name) != &d) continue;  // duplicate, already reported
    if (d.parent) {
      if (!by_name.count(*d.parent)) {
        diags.push_back({Diagnostic::Severity::error, d.line,
                         std::string("unknown parent ") + kind + " '" + *d.parent + "' of '" +
                             d.name + "'"});
        continue;
      }
      children[*d.parent].push_back(&d);
    }
  }
  std::vector<const TypeDecl*> stack{root};
  std::unordered_set<std::string> inserted;
  while (!stack.empty()) {
    const TypeDecl* d = stack.back();
    stack.pop_back();
    h.add_type(d->name, d->parent);
    inserted.insert(d->name);
    auto it = children.find(d->name);
    if (it == children.end()) continue;
    for (auto cit = it->second.rbegin(); cit != it->second.rend(); ++cit) stack.push_back(*cit);
  }
  for (const TypeDecl& d : decls) {
    if (by_name.at(d.name) != &d) continue;
    if (!d.parent || !by_name.count(*d.parent)) continue;
    if (!inserted.count(d.name))
      diags.push_back({Diagnostic::Severity::error, d.line,
                       std::string(kind) + " '" + d.name +
                           "' is not reachable from the root (cyclic parents)"});
  }
  return h;
}

// Builds the conceptual graph of one model/entry body. Repeated VAR with the
// same type denotes the same node (coreference); the stored referent is
// '*VAR'.
inline std::optional<ConceptualGraph> build_graph(const GraphDecl& d, const TypeHierarchy& types,
                                                  const TypeHierarchy& reltypes,
                                                  std::vector<Diagnostic>& diags) {
  bool ok = true;
  auto fail = [&](std::size_t line, const std::string& msg) {
    diags.push_back({Diagnostic::Severity::error, line, msg});
    ok = false;
  };

  ConceptualGraph g;
  std::unordered_map<std::string, std::size_t> var_index;
  std::unordered_map<std::string, std::string> var_type;
  std::unordered_map<std::string, std::size_t> var_seq;  // first declaration position
  std::optional<std::size_t> head;

  for (const NodeDecl& n : d.nodes) {
    auto it = var_index.find(n.var);
    std::size_t idx;
    if (it != var_index.end()) {
      if (var_type.at(n.var) != n.type) {
        fail(n.line, "variable '" + n.var + "' redeclared with type '" + n.type +
                         "' (was '" + var_type.at(n.var) + "')");
        continue;
      }
      idx = it->second;
    } else {
      if (!types.contains(n.type)) {
        fail(n.line, "unknown type '" + n.type + "'");
        continue;
      }
      idx = g.add_concept(n.type, "*" + n.var);
      var_index.emplace(n.var, idx);
      var_type.emplace(n.var, n.type);
      var_seq.emplace(n.var, n.seq);
    }
    if (n.is_head) {
      if (head && *head != idx) {
        fail(n.line, "'" + d.key + "' declares a second head");
        continue;
      }
      head = idx;
    }
  }
  for (const EdgeDecl& e : d.edges) {
    bool endpoints_ok = true;
    for (const std::string* var : {&e.src, &e.dst}) {
      auto it = var_seq.find(*var);
      if (it == var_seq.end() || it->second > e.seq) {
        fail(e.line, "concept variable '" + *var + "' used before declaration");
        endpoints_ok = false;
      }
    }
    if (!endpoints_ok) continue;
    if (!reltypes.contains(e.rel)) {
      fail(e.line, "unknown relation type '" + e.rel + "'");
      continue;
    }
    std::size_t src = var_index.at(e.src), dst = var_index.at(e.dst);
    if (src == dst) {
      fail(e.line, "relation '" + e.rel + "' connects '" + e.src + "' to itself");
      continue;
    }
    g.add_relation(e.rel, src, dst);
  }
  if (!head) {
    fail(d.line, "'" + d.key + "' has no head concept");
    return std::nullopt;
  }
  if (!ok) return std::nullopt;
  g.set_head(*head);
  return g;
}

}  // namespace kbformat_detail

/// Parses the declarative KB text format into a frozen knowledge base.
/// Forward references to types within the file are allowed (two-pass load);
/// declaration order is preserved for deterministic enumeration. On any
/// error the result carries diagnostics instead of a knowledge base.
inline LoadResult parse_kb(const std::string& text) {
  using namespace kbformat_detail;
  LoadResult out;
  auto& diags = out.diagnostics;

  std::vector<Token> tokens = tokenize(text, diags);
  Ast ast = Parser(std::move(tokens), diags).parse();

  KnowledgeBase kb;
  std::unordered_map<std::string, std::size_t> reltype_lines;
  kb.types = build_hierarchy(ast.types, "type", diags, out.source_map.type_lines);
  kb.reltypes = build_hierarchy(ast.reltypes, "reltype", diags, reltype_lines);
  bool hierarchies_ok =
      std::none_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::error;
      });

  if (hierarchies_ok) {
    for (const GraphDecl& d : ast.models) {
      if (!kb.types.contains(d.key)) {
        diags.push_back({Diagnostic::Severity::error, d.line, "unknown type '" + d.key + "'"});
        continue;
      }
      auto g = build_graph(d, kb.types, kb.reltypes, diags);
      if (!g) continue;
      ReferenceModel model(std::move(*g));
      if (model.head_type() != d.key) {
        diags.push_back({Diagnostic::Severity::error, d.line,
                         "model '" + d.key + "' has head of type '" + model.head_type() + "'"});
        continue;
      }
      if (kb.models.has_model(d.key)) {
        diags.push_back(
            {Diagnostic::Severity::error, d.line, "type '" + d.key + "' already has a model"});
        continue;
      }
      kb.models.register_model(d.key, std::move(model), kb.types);
      out.source_map.model_lines.emplace(d.key, d.line);
    }
    for (const GraphDecl& d : ast.entries) {
      auto g = build_graph(d, kb.types, kb.reltypes, diags);
      if (!g) continue;
      if (kb.lexicon.has_entry(d.key)) {
        diags.push_back(
            {Diagnostic::Severity::error, d.line, "word '" + d.key + "' already defined"});
        continue;
      }
      kb.lexicon.add_entry(d.key, std::move(*g), kb.types, kb.reltypes);
    }
    for (const GramRelDecl& d : ast.gramrels) {
      if (kb.lexicon.has_gramrel(d.name)) {
        diags.push_back({Diagnostic::Severity::error, d.line,
                         "grammatical relation '" + d.name + "' already defined"});
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < d.prefs.size() && ok; ++i) {
        if (!kb.reltypes.contains(d.prefs[i])) {
          diags.push_back({Diagnostic::Severity::error, d.line,
                           "unknown relation type '" + d.prefs[i] + "' in preferences of '" +
                               d.name + "'"});
          ok = false;
        }
        for (std::size_t j = 0; j < i && ok; ++j)
          if (d.prefs[i] == d.prefs[j]) {
            diags.push_back({Diagnostic::Severity::error, d.line,
                             "preference '" + d.prefs[i] + "' listed twice in '" + d.name + "'"});
            ok = false;
          }
      }
      if (!ok) continue;
      kb.lexicon.add_gramrel(d.name, d.prefs, kb.reltypes);
      out.source_map.gramrel_lines.emplace(d.name, d.line);
    }
  }

  bool has_error = std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::error;
  });
  if (!has_error) out.kb = std::move(kb);
  return out;
}

inline LoadResult parse_kb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    LoadResult out;
    out.diagnostics.push_back(
        {Diagnostic::Severity::error, 0, "cannot open '" + path + "'"});
    return out;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

/// Sanity warnings over a loaded knowledge base: types the resolver cannot
/// expand (no model anywhere on the ancestor chain), model concepts
/// unreachable from their head, and grammatical-relation preferences no
/// model relation can ever satisfy.
inline std::vector<Diagnostic> validate_kb(const KnowledgeBase& kb,
                                           const SourceMap* map = nullptr) {
  std::vector<Diagnostic> warnings;
  auto line_of = [&](const std::unordered_map<std::string, std::size_t>* lines,
                     const std::string& key) -> std::size_t {
    if (!map || !lines) return 0;
    auto it = lines->find(key);
    return it == lines->end() ? 0 : it->second;
  };
  auto warn = [&](std::size_t line, std::string msg) {
    warnings.push_back({Diagnostic::Severity::warning, line, std::move(msg)});
  };

  for (const std::string& t : kb.types.names()) {
    bool covered = false;
    for (const std::string& a : kb.types.ancestors(t))
      if (kb.models.has_model(a)) {
        covered = true;
        break;
      }
    if (!covered)
      warn(line_of(map ? &map->type_lines : nullptr, t),
           "type '" + t + "' has no reference model on its ancestor chain");
  }

  for (const std::string& owner : kb.models.owners()) {
    const ReferenceModel* m = kb.models.find(owner);
    const auto& g = m->graph();
    std::vector<bool> seen(g.concepts().size(), false);
    std::vector<std::size_t> stack{m->head_index()};
    seen[m->head_index()] = true;
    while (!stack.empty()) {
      std::size_t at = stack.back();
      stack.pop_back();
      for (const RelationNode& r : g.relations()) {
        std::size_t other = r.source == at ? r.target : (r.target == at ? r.source : at);
        if (other != at && !seen[other]) {
          seen[other] = true;
          stack.push_back(other);
        }
      }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) {
        const ConceptNode& c = g.concepts()[i];
        std::string who = c.referent.empty() ? "#" + std::to_string(i) : c.referent;
        warn(line_of(map ? &map->model_lines : nullptr, owner),
             "concept '" + who + "' (" + c.type + ") unreachable from head in model '" + owner +
                 "'");
      }
  }

  // relation types actually used by some model or entry graph
  std::unordered_set<std::string> used;
  auto collect = [&](const ConceptualGraph& g) {
    for (const RelationNode& r : g.relations()) used.insert(r.type);
  };
  for (const std::string& owner : kb.models.owners()) collect(kb.models.find(owner)->graph());
  for (const std::string& w : kb.lexicon.entry_words())
    collect(kb.lexicon.lookup_entry(w).definition.graph());

  for (const std::string& name : kb.lexicon.gramrel_names()) {
    const GramRelEntry& gr = kb.lexicon.lookup_gramrel(name);
    for (const std::string& pref : gr.prefs) {
      bool matched = false;
      for (const std::string& r : used)
        if (kb.reltypes.is_subtype(r, pref)) {
          matched = true;
          break;
        }
      if (!matched)
        warn(line_of(map ? &map->gramrel_lines : nullptr, name),
             "preference '" + pref + "' of '" + name + "' matches no model relation");
    }
  }
  return warnings;
}

namespace kbformat_detail {

inline void write_graph_body(std::ostream& os, const ConceptualGraph& g) {
  // variable names come from the stored referents; anonymous concepts get
  // fresh c<i> names
  std::unordered_set<std::string> taken;
  std::vector<std::string> names(g.concepts().size());
  for (std::size_t i = 0; i < g.concepts().size(); ++i) {
    const std::string& ref = g.concepts()[i].referent;
    if (is_variable_referent(ref)) names[i] = ref.substr(1);
  }
  for (const std::string& n : names)
    if (!n.empty()) taken.insert(n);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!names[i].empty()) continue;
    std::string candidate = "c" + std::to_string(i);
    while (taken.count(candidate)) candidate += "_";
    names[i] = candidate;
    taken.insert(candidate);
  }

  std::size_t total = g.concepts().size() + g.relations().size();
  std::size_t emitted = 0;
  auto sep = [&]() { os << (++emitted < total ? " ;\n" : "\n"); };
  for (std::size_t i = 0; i < g.concepts().size(); ++i) {
    os << "  ";
    if (g.head() && *g.head() == i) os << "head ";
    os << names[i] << ": " << g.concepts()[i].type;
    sep();
  }
  for (const RelationNode& r : g.relations()) {
    os << "  " << names[r.source] << " -" << r.type << "-> " << names[r.target];
    sep();
  }
}

}  // namespace kbformat_detail

/// Writes a knowledge base back out in the KB text format, preserving
/// declaration order; reparsing the output yields an isomorphic KB.
inline std::string serialize_kb(const KnowledgeBase& kb) {
  using namespace kbformat_detail;
  std::ostringstream os;
  auto write_types = [&](const TypeHierarchy& h, const char* kw) {
    for (const std::string& name : h.names()) {
      os << kw << " " << name;
      if (auto p = h.parent_of(name)) os << " < " << *p;
      os << "\n";
    }
  };
  write_types(kb.types, "type");
  os << "\n";
  write_types(kb.reltypes, "reltype");

  for (const std::string& owner : kb.models.owners()) {
    os << "\nmodel " << owner << " {\n";
    write_graph_body(os, kb.models.find(owner)->graph());
    os << "}\n";
  }
  for (const std::string& word : kb.lexicon.entry_words()) {
    os << "\nentry " << word << " {\n";
    write_graph_body(os, kb.lexicon.lookup_entry(word).definition.graph());
    os << "}\n";
  }
  if (kb.lexicon.gramrel_count()) os << "\n";
  for (const std::string& name : kb.lexicon.gramrel_names()) {
    const GramRelEntry& gr = kb.lexicon.lookup_gramrel(name);
    os << "gramrel " << name << " prefers ";
    for (std::size_t i = 0; i < gr.prefs.size(); ++i) {
      if (i) os << ", ";
      os << gr.prefs[i];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cglink
