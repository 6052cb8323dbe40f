#include <doctest.h>

#include <algorithm>
#include <string>

#include "cglink/cglink.hpp"
#include "support/fixture.hpp"

using namespace cglink;

namespace {

bool has_error(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::error;
  });
}

const Diagnostic* find_containing(const std::vector<Diagnostic>& diags, const std::string& text) {
  for (const auto& d : diags)
    if (d.message.find(text) != std::string::npos) return &d;
  return nullptr;
}

}  // namespace

TEST_CASE("the shipped fixture loads cleanly") {
  LoadResult res = parse_kb_file(CGLINK_FIXTURE_KB);
  REQUIRE(res.ok());
  CHECK_FALSE(has_error(res.diagnostics));
  CHECK(res.kb->types.size() == 20);
  CHECK(res.kb->reltypes.size() == 19);
  CHECK(res.kb->models.size() == 1);
  CHECK(res.kb->lexicon.entry_count() == 5);
  CHECK(res.kb->lexicon.gramrel_count() == 1);

  const ReferenceModel* m = res.kb->models.find("Angioplasty");
  REQUIRE(m);
  CHECK(m->graph().concepts().size() == 12);
  CHECK(m->graph().relations().size() == 15);
  CHECK(m->head().referent == "*x");
}

TEST_CASE("empty input has no root") {
  LoadResult res = parse_kb("");
  CHECK_FALSE(res.ok());
  REQUIRE(find_containing(res.diagnostics, "no root type"));
  // both hierarchies are missing their root
  CHECK(find_containing(res.diagnostics, "no root reltype"));
}

TEST_CASE("model head type must match the model's type") {
  LoadResult res = parse_kb(
      "type Top\n"
      "type Angioplasty < Top\n"
      "type Stenosis < Top\n"
      "reltype rel\n"
      "model Angioplasty { head x: Stenosis }\n");
  CHECK_FALSE(res.ok());
  const Diagnostic* d = find_containing(res.diagnostics, "head of type 'Stenosis'");
  REQUIRE(d);
  CHECK(d->line == 5);
}

TEST_CASE("diagnostics carry the offending line") {
  LoadResult res = parse_kb(
      "type Top\n"
      "type A < Top\n"
      "type A < Top\n"          // line 3: duplicate
      "type B < Missing\n"      // line 4: unknown parent
      "type Second\n"           // line 5: second root
      "reltype rel\n"
      "model A {\n"
      "  head x: A ;\n"
      "  y: Nope ;\n"           // line 9: unknown type
      "  x -involves-> y\n"     // line 10: unknown reltype (and y bad)
      "}\n"
      "gramrel g prefers\n");   // line 12: syntax
  CHECK_FALSE(res.ok());

  const Diagnostic* dup = find_containing(res.diagnostics, "'A' declared twice");
  REQUIRE(dup);
  CHECK(dup->line == 3);
  const Diagnostic* parent = find_containing(res.diagnostics, "unknown parent type 'Missing'");
  REQUIRE(parent);
  CHECK(parent->line == 4);
  const Diagnostic* root = find_containing(res.diagnostics, "second root type 'Second'");
  REQUIRE(root);
  CHECK(root->line == 5);
}

TEST_CASE("body diagnostics") {
  const char* preamble =
      "type Top\n"
      "type A < Top\n"
      "type B < Top\n"
      "reltype rel\n";

  auto load = [&](const std::string& rest) { return parse_kb(std::string(preamble) + rest); };

  LoadResult unknown_type = load("model A { head x: A ; y: Nope }\n");
  CHECK_FALSE(unknown_type.ok());
  const Diagnostic* d = find_containing(unknown_type.diagnostics, "unknown type 'Nope'");
  REQUIRE(d);
  CHECK(d->line == 5);

  LoadResult fwd_use = load("model A { head x: A ; x -rel-> y ; y: B }\n");
  CHECK_FALSE(fwd_use.ok());
  CHECK(find_containing(fwd_use.diagnostics, "'y' used before declaration"));

  LoadResult self_loop = load("model A { head x: A ; x -rel-> x }\n");
  CHECK_FALSE(self_loop.ok());
  CHECK(find_containing(self_loop.diagnostics, "connects 'x' to itself"));

  LoadResult no_head = load("entry w_f { x: A }\n");
  CHECK_FALSE(no_head.ok());
  CHECK(find_containing(no_head.diagnostics, "no head concept"));

  LoadResult retype = load("model A { head x: A ; x: B }\n");
  CHECK_FALSE(retype.ok());
  CHECK(find_containing(retype.diagnostics, "redeclared with type 'B'"));

  // repeated VAR with the same type is the same node
  LoadResult coref = load("model A { head x: A ; y: B ; y: B ; x -rel-> y }\n");
  REQUIRE(coref.ok());
  CHECK(coref.kb->models.find("A")->graph().concepts().size() == 2);

  LoadResult dup_model = load("model A { head x: A }\nmodel A { head x: A }\n");
  CHECK_FALSE(dup_model.ok());
  CHECK(find_containing(dup_model.diagnostics, "already has a model"));

  LoadResult dup_entry = load("entry w_f { head x: A }\nentry w_f { head x: A }\n");
  CHECK_FALSE(dup_entry.ok());
  CHECK(find_containing(dup_entry.diagnostics, "already defined"));

  LoadResult bad_pref = load("gramrel g prefers nope\n");
  CHECK_FALSE(bad_pref.ok());
  CHECK(find_containing(bad_pref.diagnostics, "unknown relation type 'nope'"));
}

TEST_CASE("syntax errors are reported with recovery") {
  // several malformed statements, each reported, later statements still seen
  LoadResult res = parse_kb(
      "type Top\n"
      "reltype rel\n"
      "type A < Top\n"
      "frobnicate A\n"                       // line 4: unknown keyword
      "model A { head x: A ; x -rel> x }\n"  // line 5: bad arrow
      "gramrel g likes rel\n"                // line 6: missing 'prefers'
      "entry w_f { head x: A\n");            // line 7: unterminated body
  CHECK_FALSE(res.ok());
  const Diagnostic* kw = find_containing(res.diagnostics, "expected a declaration keyword");
  REQUIRE(kw);
  CHECK(kw->line == 4);
  const Diagnostic* arrow = find_containing(res.diagnostics, "expected '->'");
  REQUIRE(arrow);
  CHECK(arrow->line == 5);
  CHECK(find_containing(res.diagnostics, "expected 'prefers'"));
  CHECK(find_containing(res.diagnostics, "unterminated 'entry w_f' body"));

  LoadResult stray = parse_kb("type Top\nreltype rel\nmodel Top { head : Top }\n");
  CHECK_FALSE(stray.ok());

  LoadResult bad_head = parse_kb("type Top\nreltype rel\nmodel Top { head x Top }\n");
  CHECK_FALSE(bad_head.ok());
  CHECK(find_containing(bad_head.diagnostics, "expected ':' after 'head x'"));
}

TEST_CASE("forward references load in two passes") {
  LoadResult res = parse_kb(
      "model Angioplasty { head x: Angioplasty ; s: Stenosis ; x -involves-> s }\n"
      "type Coronary_Artery < Artery\n"
      "type Artery < Top\n"
      "type Top\n"
      "type Angioplasty < Top\n"
      "type Stenosis < Top\n"
      "reltype involves < rel\n"
      "reltype rel\n");
  REQUIRE(res.ok());
  CHECK(res.kb->types.is_subtype("Coronary_Artery", "Artery"));
  CHECK(res.kb->models.has_model("Angioplasty"));
}

TEST_CASE("serialize round-trips to an isomorphic KB") {
  LoadResult first = parse_kb_file(CGLINK_FIXTURE_KB);
  REQUIRE(first.ok());
  std::string text = serialize_kb(*first.kb);

  LoadResult second = parse_kb(text);
  REQUIRE(second.ok());

  // serialization reaches a fixpoint immediately: order is preserved
  CHECK(serialize_kb(*second.kb) == text);

  const KnowledgeBase& a = *first.kb;
  const KnowledgeBase& b = *second.kb;
  CHECK(a.types.names() == b.types.names());
  CHECK(a.reltypes.names() == b.reltypes.names());
  for (const auto& name : a.types.names()) CHECK(a.types.parent_of(name) == b.types.parent_of(name));
  CHECK(a.models.owners() == b.models.owners());
  for (const auto& owner : a.models.owners())
    CHECK(a.models.find(owner)->graph() == b.models.find(owner)->graph());
  CHECK(a.lexicon.entry_words() == b.lexicon.entry_words());
  for (const auto& w : a.lexicon.entry_words())
    CHECK(a.lexicon.lookup_entry(w).definition.graph() ==
          b.lexicon.lookup_entry(w).definition.graph());
  CHECK(a.lexicon.gramrel_names() == b.lexicon.gramrel_names());
  for (const auto& g : a.lexicon.gramrel_names())
    CHECK(a.lexicon.lookup_gramrel(g).prefs == b.lexicon.lookup_gramrel(g).prefs);
}

TEST_CASE("validate_kb findings") {
  LoadResult fixture = parse_kb_file(CGLINK_FIXTURE_KB);
  REQUIRE(fixture.ok());
  auto warnings = validate_kb(*fixture.kb, &fixture.source_map);
  for (const auto& d : warnings) CHECK(d.severity == Diagnostic::Severity::warning);
  // the fixture's unused preferences are flagged
  CHECK(find_containing(warnings, "preference 'involved_obj' of 'de_f'"));
  CHECK(find_containing(warnings, "preference 'motivated_by' of 'de_f'"));
  // but satisfied ones are not
  CHECK_FALSE(find_containing(warnings, "preference 'purported_obj'"));
  CHECK_FALSE(find_containing(warnings, "preference 'rel'"));
  // no unreachable concepts in the fixture
  CHECK_FALSE(find_containing(warnings, "unreachable"));

  // a model with a disconnected concept draws a warning
  LoadResult disc = parse_kb(
      "type Top\n"
      "type A < Top\n"
      "type B < Top\n"
      "reltype rel\n"
      "model A { head x: A ; y: B }\n"
      "entry w_f { head x: A }\n"
      "gramrel g prefers rel\n");
  REQUIRE(disc.ok());
  auto disc_warnings = validate_kb(*disc.kb, &disc.source_map);
  const Diagnostic* w = find_containing(disc_warnings, "unreachable from head in model 'A'");
  REQUIRE(w);
  CHECK(w->line == 5);
  // types with no model anywhere on their chain are flagged too
  CHECK(find_containing(disc_warnings, "type 'Top' has no reference model"));
  CHECK_FALSE(find_containing(disc_warnings, "type 'A' has no reference model"));
}
