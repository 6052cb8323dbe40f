#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cglink/cglink.hpp"
#include "support/fixture.hpp"
#include "support/oracles.hpp"

using namespace cglink;

TEST_CASE("trivial and diamond paths") {
  ConceptualGraph g;
  std::size_t a = g.add_concept("A");
  std::size_t b = g.add_concept("B");
  std::size_t c = g.add_concept("C");
  std::size_t d = g.add_concept("D");
  g.add_relation("r1", a, b);
  g.add_relation("r2", a, c);
  g.add_relation("r3", b, d);
  g.add_relation("r4", c, d);

  auto self = enumerate_paths(g, a, a, 4);
  REQUIRE(self.size() == 1);
  CHECK(self[0].length() == 0);
  CHECK(self[0].first().type == "A");
  // the trivial path survives even a zero bound
  CHECK(enumerate_paths(g, a, a, 0).size() == 1);

  auto paths = enumerate_paths(g, a, d, 4);
  std::size_t expected = testsupport::oracle_all_simple_paths(g, a, d, 4).size();
  CHECK(expected == 2);
  REQUIRE(paths.size() == expected);
  // deterministic order: relation r1 explored before r2
  CHECK(paths[0].links()[0].relation == "r1");
  CHECK(paths[1].links()[0].relation == "r2");

  CHECK(enumerate_paths(g, a, d, 1).empty());
  CHECK_THROWS_AS(enumerate_paths(g, a, 99, 4), kb_error);
}

TEST_CASE("fixture model: head to artery segment") {
  const auto& kb = testsupport::fixture_kb();
  const ReferenceModel* m = kb.models.find("Angioplasty");
  REQUIRE(m);
  const auto& g = m->graph();

  std::size_t as = g.concepts().size();
  for (std::size_t i = 0; i < g.concepts().size(); ++i)
    if (g.concepts()[i].referent == "*as") as = i;
  REQUIRE(as < g.concepts().size());

  bool found = false;
  for (const Chain& c : enumerate_paths(g, m->head_index(), as, 6)) {
    if (c.length() == 1 && c.links()[0].relation == "purported_obj" &&
        c.links()[0].dir == Direction::forward && c.last().type == "Artery_Segment")
      found = true;
  }
  CHECK(found);
}

TEST_CASE("enumerate_paths equals the exhaustive oracle on random graphs") {
  std::vector<std::string> types{"A", "B", "C", "D"};
  std::vector<std::string> rels{"r", "s", "t"};
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(seed);
    ConceptualGraph g = testsupport::random_graph(rng, 12, types, rels);
    std::size_t n = g.concepts().size();
    std::size_t from = rng() % n;
    std::size_t to = rng() % n;
    std::size_t max_rel = rng() % 7;

    auto impl = enumerate_paths(g, from, to, max_rel);
    auto expected = testsupport::oracle_all_simple_paths(g, from, to, max_rel);

    REQUIRE(impl.size() == expected.size());

    // the declared enumeration order is lexicographic by relation indices,
    // so the content sequences must match exactly
    std::vector<std::string> impl_keys;
    for (const Chain& c : impl) {
      CHECK(c.length() <= max_rel);
      impl_keys.push_back(testsupport::chain_content_key(c));
    }
    CHECK(impl_keys == testsupport::ordered_path_keys(g, from, std::move(expected)));
  }
}
