#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "adian/error.hpp"
#include "adian/presentation.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace adian;

namespace {

  PresentationError::Kind parse_error_kind(std::string const& text) {
    try {
      parse_presentation(text);
    } catch (PresentationError const& e) {
      return e.kind();
    }
    FAIL("no PresentationError for " << text);
    return PresentationError::Kind::schema;
  }

  std::set<std::pair<std::string, std::string>> endpoints(SideGraph const& g) {
    std::set<std::pair<std::string, std::string>> result;
    for (auto const& e : g.edges) {
      result.insert(std::minmax(e.first, e.second));
    }
    return result;
  }

  using Pair = Presentation::relation_pair;

  // Every side of length 1 or 2 over {a, b, c}.
  std::vector<PositiveWord> short_sides() {
    std::vector<PositiveWord> result;
    for (std::string x : {"a", "b", "c"}) {
      result.push_back({x});
    }
    for (std::string x : {"a", "b", "c"}) {
      for (std::string y : {"a", "b", "c"}) {
        result.push_back({x, y});
      }
    }
    return result;
  }

}  // namespace

TEST_CASE("parse_presentation reads alphabet and relations in order") {
  auto p = parse_presentation(
      R"({"alphabet": ["a","b"], "relations": [[["a","b","a"],["b","a","b"]]]})");
  REQUIRE(p.number_of_relations() == 1);
  CHECK(p.alphabet() == std::vector<Letter>{"a", "b"});
  CHECK(p.relation(0).lhs == PositiveWord{"a", "b", "a"});
  CHECK(p.relation(0).rhs == PositiveWord{"b", "a", "b"});
  CHECK(p.relation(0).index == 0);
  CHECK(p == fixture::braid());

  auto q = parse_presentation(
      R"({"alphabet": ["x1","x2"], "relations": [[["x2"],["x1","x1"]], [["x1"],["x2","x2"]]]})");
  CHECK(q.relation(1).lhs == PositiveWord{"x1"});
  CHECK(q.relation(1).index == 1);
}

TEST_CASE("parse_presentation rejects bad documents") {
  using K = PresentationError::Kind;
  CHECK(parse_error_kind(R"({"alphabet": ["a"], "relations": [[["a"],[]]]})") == K::empty_side);
  CHECK(parse_error_kind(R"({"alphabet": ["a"], "relations": [[["a","b"],["a"]]]})")
        == K::unknown_letter);
  CHECK(parse_error_kind(R"({"alphabet": [], "relations": []})") == K::empty_alphabet);
  CHECK(parse_error_kind(R"({"alphabet": ["a","a"], "relations": []})") == K::duplicate_letter);
  CHECK(parse_error_kind(R"({"alphabet": ["a b"], "relations": []})") == K::bad_letter);
  CHECK(parse_error_kind(R"({"alphabet": ["a'"], "relations": []})") == K::bad_letter);
  CHECK(parse_error_kind(R"({"alphabet": ["a"]})") == K::schema);
  CHECK(parse_error_kind(R"({"alphabet": ["a"], "relations": [[["a"]]]})") == K::schema);

  try {
    parse_presentation("{\"alphabet\": [\"a\"],\n  \"relations\": [ ");
    FAIL("expected a syntax error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("a relation with identical sides parses and is not Adian") {
  auto p = parse_presentation(R"({"alphabet": ["a","b"], "relations": [[["a","b"],["a","b"]]]})");
  auto v = is_adian(p);
  CHECK_FALSE(v.adian());
  REQUIRE(v.witness);
  CHECK(v.witness->edges.size() == 1);
}

TEST_CASE("presentation JSON round trip") {
  for (auto const& p : fixture::samples()) {
    CHECK(presentation_from_json(to_json(p)) == p);
  }
}

TEST_CASE("left and right graphs") {
  auto p = fixture::braid();
  CHECK(endpoints(left_graph(p)) == std::set<std::pair<std::string, std::string>>{{"a", "b"}});
  CHECK(endpoints(right_graph(p)) == std::set<std::pair<std::string, std::string>>{{"a", "b"}});
  CHECK(left_graph(p).vertices == std::vector<Letter>{"a", "b"});

  Presentation q({"a", "b", "c"}, {{{"a", "b"}, {"c", "a"}}});
  CHECK(endpoints(left_graph(q)) == std::set<std::pair<std::string, std::string>>{{"a", "c"}});
  CHECK(endpoints(right_graph(q)) == std::set<std::pair<std::string, std::string>>{{"a", "b"}});
  CHECK(left_graph(q).edges[0].relation == 0);

  Presentation r({"a"}, {{{"a", "a"}, {"a"}}});
  REQUIRE(left_graph(r).edges.size() == 1);
  CHECK(left_graph(r).edges[0].first == "a");
  CHECK(left_graph(r).edges[0].second == "a");
  CHECK(right_graph(r).edges[0].first == "a");
  CHECK(right_graph(r).edges[0].second == "a");
}

TEST_CASE("is_adian on the reference presentations") {
  CHECK(is_adian(fixture::braid()).adian());
  CHECK(is_adian(fixture::two_cells()).adian());
  CHECK(is_adian(fixture::abc_ba()).adian());
  CHECK(is_adian(fixture::chain()).adian());

  auto loop = is_adian(Presentation({"a"}, {{{"a", "a"}, {"a"}}}));
  REQUIRE(loop.witness);
  CHECK(loop.witness->graph == GraphSide::left);
  CHECK(describe(*loop.witness) == "loop at a (left graph, relation 0)");

  auto parallel = is_adian(Presentation({"a", "b"}, {{{"a", "b"}, {"b", "a"}},
                                                     {{"a", "a", "b"}, {"b", "b", "a"}}}));
  REQUIRE(parallel.witness);
  CHECK(parallel.witness->graph == GraphSide::left);
  CHECK(parallel.witness->edges.size() == 2);

  // Left graph a-b, b-c, d-a; right graph a-b, b-c, a-c.
  auto triangle = is_adian(Presentation(
      {"a", "b", "c", "d"}, {{{"a"}, {"b"}}, {{"b", "b"}, {"c", "c"}}, {{"d", "a"}, {"a", "c"}}}));
  REQUIRE(triangle.witness);
  CHECK(triangle.witness->graph == GraphSide::right);
  CHECK(triangle.witness->edges.size() == 3);
}

TEST_CASE("cycle witnesses are closed walks of the reported graph") {
  std::mt19937_64 rng(11);
  auto const      sides = short_sides();
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Pair> rs;
    for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i) {
      rs.emplace_back(sides[rng() % sides.size()], sides[rng() % sides.size()]);
    }
    Presentation p({"a", "b", "c"}, rs);
    auto         v = is_adian(p);
    if (v.adian()) {
      continue;
    }
    auto const& w = *v.witness;
    auto        g = w.graph == GraphSide::left ? left_graph(p) : right_graph(p);
    REQUIRE(w.vertices.size() == w.edges.size());
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      auto const& e    = w.edges[i];
      auto const& next = w.vertices[(i + 1) % w.vertices.size()];
      CHECK(e == g.edges[e.relation]);
      CHECK(used.insert(e.relation).second);
      bool const joins = (e.first == w.vertices[i] && e.second == next)
                         || (e.second == w.vertices[i] && e.first == next);
      CHECK(joins);
    }
  }
}

TEST_CASE("is_adian agrees with the edge-subset forest oracle") {
  auto const sides = short_sides();
  std::vector<Pair> relations;
  for (auto const& u : sides) {
    for (auto const& v : sides) {
      relations.emplace_back(u, v);
    }
  }
  std::size_t const n       = relations.size();
  std::size_t       checked = 0;
  auto              agree   = [&checked](std::vector<Pair> const& rs) {
    ++checked;
    Presentation p({"a", "b", "c"}, rs);
    return is_adian(p).adian() == oracle::adian(p);
  };
  // One, two or three relations, unordered with repetition.
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(agree({relations[i]}));
    for (std::size_t j = i; j < n; ++j) {
      REQUIRE(agree({relations[i], relations[j]}));
      for (std::size_t k = j; k < n; ++k) {
        REQUIRE(agree({relations[i], relations[j], relations[k]}));
      }
    }
  }
  CHECK(checked == n + n * (n + 1) / 2 + n * (n + 1) * (n + 2) / 6);

  // Longer sides only move the first and last letters around.
  std::mt19937_64 rng(5);
  std::string const letters[] = {"a", "b", "c"};
  auto random_side = [&] {
    PositiveWord w;
    for (std::size_t n = 1 + rng() % 3; n > 0; --n) {
      w.push_back(letters[rng() % 3]);
    }
    return w;
  };
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<Pair> rs;
    for (std::size_t n = 1 + rng() % 3; n > 0; --n) {
      rs.emplace_back(random_side(), random_side());
    }
    Presentation p({"a", "b", "c"}, rs);
    REQUIRE(is_adian(p).adian() == oracle::adian(p));
  }
}

TEST_CASE("side graph shape and symmetries") {
  std::mt19937_64 rng(3);
  auto const      sides = short_sides();
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Pair> rs;
    for (std::size_t n = 1 + rng() % 4; n > 0; --n) {
      rs.emplace_back(sides[rng() % sides.size()], sides[rng() % sides.size()]);
    }
    Presentation p({"a", "b", "c"}, rs);
    for (auto const& g : {left_graph(p), right_graph(p)}) {
      REQUIRE(g.edges.size() == rs.size());
      std::set<std::size_t> tags;
      for (auto const& e : g.edges) {
        tags.insert(e.relation);
      }
      CHECK(tags.size() == rs.size());
      CHECK(*tags.rbegin() == rs.size() - 1);
    }

    bool const verdict  = is_adian(p).adian();
    auto       shuffled = rs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(is_adian(Presentation({"a", "b", "c"}, shuffled)).adian() == verdict);
    auto flipped = rs;
    auto& r      = flipped[rng() % flipped.size()];
    std::swap(r.first, r.second);
    CHECK(is_adian(Presentation({"a", "b", "c"}, flipped)).adian() == verdict);
  }
}
