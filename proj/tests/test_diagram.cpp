#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "adian/diagram.hpp"
#include "adian/error.hpp"
#include "adian/munn.hpp"

#include "fixtures.hpp"

using namespace adian;

namespace {

  struct EdgeSpec {
    char const* letter;
    VertexId    tail;
    VertexId    head;
  };

  struct FaceSpec {
    std::optional<CellKind> cell;
    std::vector<DartId>     boundary;
  };

  // Edge i becomes darts 2i (positive) and 2i + 1.
  Diagram make(Presentation const&                   p,
               std::vector<EdgeSpec> const&          edges,
               std::vector<std::vector<DartId>> const& rotations,
               std::vector<FaceSpec> const&          faces,
               VertexId                              base) {
    std::vector<Dart> darts;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& e = edges[i];
      darts.push_back({2 * i, 2 * i + 1, {e.letter, 1}, e.tail, e.head});
      darts.push_back({2 * i + 1, 2 * i, {e.letter, -1}, e.head, e.tail});
    }
    std::vector<Vertex> vertices;
    for (std::size_t v = 0; v < rotations.size(); ++v) {
      vertices.push_back({v, rotations[v]});
    }
    std::vector<Face> fs;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      fs.push_back({f, faces[f].cell, faces[f].boundary});
    }
    return Diagram(std::make_shared<Presentation const>(p), vertices, darts, fs, base);
  }

  SignedWord w(char const* text) {
    return parse_word(text);
  }

  // Two (ab, c) cells reflected across their shared c-edge.
  Diagram mirror_pair() {
    return make(fixture::ab_c(),
                {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}, {"a", 0, 3}, {"b", 3, 2}},
                {{6, 4, 0}, {1, 2}, {3, 5, 9}, {8, 7}},
                {{CellKind{0, 0, -1}, {4, 3, 1}},
                 {CellKind{0, 0, 1}, {6, 8, 5}},
                 {std::nullopt, {0, 2, 9, 7}}},
                0);
  }

  // A square cell whose boundary reads a b b' a'.
  Diagram commutator_cell() {
    return make(Presentation({"a", "b"}, {{{"a", "b"}, {"b", "a"}}}),
                {{"a", 0, 1}, {"b", 1, 2}, {"b", 3, 2}, {"a", 0, 3}},
                {{0, 6}, {2, 1}, {5, 3}, {4, 7}},
                {{CellKind{0, 0, 1}, {0, 2, 5, 7}}, {std::nullopt, {6, 4, 3, 1}}},
                0);
  }

  // Vertex 0 is interior with three positive darts leaving it.
  Diagram interior_source() {
    return make(
        Presentation({"p", "q", "r", "s", "t", "u"},
                     {{{"p", "q"}, {"r"}}, {{"r", "s"}, {"t"}}, {{"t", "u"}, {"p"}}}),
        {{"p", 0, 1}, {"r", 0, 2}, {"t", 0, 3}, {"q", 1, 2}, {"s", 2, 3}, {"u", 3, 1}},
        {{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}},
        {{CellKind{0, 0, 1}, {0, 6, 3}},
         {CellKind{1, 0, 1}, {2, 8, 5}},
         {CellKind{2, 0, 1}, {4, 10, 1}},
         {std::nullopt, {7, 11, 9}}},
        1);
  }

  std::vector<DartId> walk_darts_labelled(Diagram const& d, SignedWord const& word) {
    auto const walk = boundary_walk(d, d.base_vertex());
    for (std::size_t i = 0; i < walk.size(); ++i) {
      std::vector<DartId> path;
      for (std::size_t k = 0; k < word.size(); ++k) {
        path.push_back(walk[(i + k) % walk.size()]);
      }
      if (label(d, path) == word) {
        return path;
      }
    }
    FAIL("no boundary path labelled " << to_string(word));
    return {};
  }

  // single_cell((ab, c)) with (ba, c) glued on its c side.
  Diagram two_cell_diagram() {
    auto p    = std::make_shared<Presentation const>(fixture::two_cells());
    auto cell = single_cell(p, 0);
    auto path = walk_darts_labelled(cell, w("c'"));
    return attach_cell(cell, path, 1, Side::rhs);
  }

  // Cells (ab, cd), (cd, ef), (ef, gh) glued in a row.
  Diagram chain_diagram() {
    auto p     = std::make_shared<Presentation const>(fixture::chain());
    auto d     = single_cell(p, 0);
    d          = attach_cell(d, walk_darts_labelled(d, w("d' c'")), 1, Side::lhs);
    return attach_cell(d, walk_darts_labelled(d, w("f' e'")), 2, Side::lhs);
  }

  DartId interior_positive(Diagram const& d, char const* letter) {
    for (auto const& x : d.darts()) {
      if (x.label == SignedLetter{letter, 1} && !d.boundary_edge(x.id)) {
        return x.id;
      }
    }
    FAIL("no interior " << letter << " dart");
    return no_id;
  }

  std::size_t euler(Diagram const& d) {
    return d.number_of_vertices() + d.number_of_faces() - d.number_of_edges();
  }

}  // namespace

TEST_CASE("a single braid cell is valid") {
  auto d = single_cell(fixture::braid(), 0);
  CHECK(validate(d).ok());
  CHECK(d.number_of_vertices() == 6);
  CHECK(d.number_of_edges() == 6);
  CHECK(d.number_of_faces() == 2);
  CHECK(euler(d) == 2);
  CHECK(boundary_word(d) == w("a b a b' a' b'"));
  CHECK(interior_sources_sinks(d).empty());
}

TEST_CASE("a mirror pair fails the reducedness check") {
  auto const d = mirror_pair();
  auto const r = validate(d);
  CHECK(r.has(Violation::Kind::reducedness));
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].locus == "edge 4");
  CHECK(to_string(r.violations[0]).starts_with("reducedness violation at edge"));
}

TEST_CASE("a cell label that is no conjugate of its relator is reported") {
  auto const r = validate(commutator_cell());
  CHECK(r.has(Violation::Kind::cell_label));
}

TEST_CASE("an interior source is found and flagged") {
  auto const d = interior_source();
  CHECK(interior_sources_sinks(d) == std::vector<VertexId>{0});
  auto const r = validate(d);
  CHECK(r.has(Violation::Kind::interior_source));
  CHECK(r.has(Violation::Kind::directed_cycle));
  CHECK_FALSE(r.has(Violation::Kind::euler));
  CHECK_FALSE(r.has(Violation::Kind::faces));
}

TEST_CASE("broken maps are reported in order") {
  auto const good = single_cell(fixture::ab_c(), 0);

  auto darts        = good.darts();
  darts[0].inverse  = 0;
  auto const broken = Diagram(good.shared_presentation(), good.vertices(), darts,
                              good.faces(), good.base_vertex());
  CHECK(validate(broken).violations.front().kind == Violation::Kind::involution);

  auto vertices = good.vertices();
  std::reverse(vertices[0].rotation.begin(), vertices[0].rotation.end());
  vertices[0].rotation.pop_back();
  auto const missing = Diagram(good.shared_presentation(), vertices, good.darts(),
                               good.faces(), good.base_vertex());
  CHECK(validate(missing).violations.front().kind == Violation::Kind::rotation);

  auto faces = good.faces();
  std::swap(faces[0].cell, faces[1].cell);
  auto const swapped = Diagram(good.shared_presentation(), good.vertices(), good.darts(),
                               faces, good.base_vertex());
  CHECK_FALSE(validate(swapped).ok());

  CHECK_THROWS_AS(Diagram(good.shared_presentation(), good.vertices(), good.darts(),
                          good.faces(), 99),
                  DiagramError);
}

TEST_CASE("boundary words") {
  auto const cell = single_cell(fixture::ab_c(), 0);
  CHECK(boundary_word(cell) == w("a b c'"));

  auto const tree = tree_diagram(cell.shared_presentation(), w("a"));
  CHECK(boundary_word(tree) == w("a a'"));
  CHECK(validate(tree).ok());

  auto const both = wedge(cell, cell, 0, 0);
  CHECK(boundary_word(both) == w("a b c' a b c'"));
  CHECK(validate(both).ok());
  CHECK(cut_vertices(both) == std::vector<VertexId>{0});

  CHECK(boundary_word(mirror(cell)) == inverse(boundary_word(cell)));
  CHECK(boundary_word(point_diagram(fixture::ab_c())).empty());
  CHECK(validate(point_diagram(fixture::ab_c())).ok());
}

TEST_CASE("boundary_walk from a non-boundary vertex throws") {
  auto const d = interior_source();
  try {
    boundary_walk(d, 0);
    FAIL("expected not_on_boundary");
  } catch (DiagramError const& e) {
    CHECK(e.kind() == DiagramError::Kind::not_on_boundary);
  }
}

TEST_CASE("gluing (ba, c) onto the c side of (ab, c)") {
  auto const d = two_cell_diagram();
  CHECK(validate(d).ok());
  CHECK(d.number_of_cells() == 2);
  CHECK(boundary_word(d) == w("a b a' b'"));
  CHECK(interior_sources_sinks(d).empty());
  CHECK_FALSE(has_directed_cycle(d));
}

TEST_CASE("gluing that would create a mirror pair is rejected") {
  auto const cell = single_cell(fixture::two_cells(), 0);
  auto const path = walk_darts_labelled(cell, w("c'"));
  bool       tried = false;
  for (auto const& where : placements(cell, path)) {
    if (where.relation != 0) {
      continue;
    }
    tried = true;
    try {
      attach_cell(cell, path, where);
      FAIL("mirror pair accepted");
    } catch (DiagramError const& e) {
      CHECK(e.kind() == DiagramError::Kind::mirror_pair);
    }
  }
  CHECK(tried);

  auto const wrong = walk_darts_labelled(cell, w("a"));
  CHECK_THROWS_AS(attach_cell(cell, wrong, CellPlacement{1, 1, 0}), DiagramError);
}

TEST_CASE("single_cell requires a cyclically reduced relator") {
  Presentation p({"a", "b"}, {{{"a", "b"}, {"a"}}});
  CHECK_THROWS_AS(single_cell(p, 0), DiagramError);
}

TEST_CASE("simple components") {
  auto const cell  = single_cell(fixture::ab_c(), 0);
  auto const alone = simple_components(cell);
  CHECK(alone.components.size() == 1);
  CHECK(alone.trees.empty());

  auto const both = simple_components(wedge(cell, cell, 0, 0));
  CHECK(both.components.size() == 2);
  REQUIRE(both.incidence.size() == 1);
  CHECK(both.incidence[0].components.size() == 2);

  auto const hung = attach_tree(cell, 1, w("a b"));
  CHECK(validate(hung).ok());
  auto const parts = simple_components(hung);
  CHECK(parts.components.size() == 1);
  REQUIRE(parts.trees.size() == 1);
  CHECK(parts.trees[0].edges.size() == 2);
  CHECK(extremal_vertices(hung).size() == 1);
  CHECK(number_of_simple_components(tree_diagram(cell.shared_presentation(), w("a b'"))) == 0);
}

TEST_CASE("transversals") {
  auto const two = two_cell_diagram();
  auto const c   = interior_positive(two, "c");
  auto const t   = extend_to_transversal(two, c);
  CHECK(t.darts == std::vector<DartId>{c});
  CHECK(is_transversal(two, t));
  auto [left, right] = cells_beside(two, t);
  CHECK(left.size() == 1);
  CHECK(right.size() == 1);

  auto const chain = chain_diagram();
  CHECK(validate(chain).ok());
  CHECK(boundary_word(chain) == w("a b h' g'"));
  auto const middle = extend_to_transversal(chain, interior_positive(chain, "c"));
  CHECK(middle.darts.size() == 2);
  CHECK(label(chain, middle.darts) == w("c d"));
  CHECK(is_transversal(chain, middle));

  auto const boundary_dart = walk_darts_labelled(two, w("a"))[0];
  CHECK_THROWS_AS(extend_to_transversal(two, boundary_dart), DiagramError);
  CHECK_THROWS_AS(extend_to_transversal(two, two.inverse(c)), DiagramError);
}

TEST_CASE("splitting along a transversal") {
  auto const two   = two_cell_diagram();
  auto const t     = extend_to_transversal(two, interior_positive(two, "c"));
  auto [one, other] = split_along_transversal(two, t);
  CHECK(validate(one).ok());
  CHECK(validate(other).ok());
  CHECK(one.number_of_cells() + other.number_of_cells() == 2);
  std::set<std::string> words{to_string(boundary_word(one)), to_string(boundary_word(other))};
  CHECK(words == std::set<std::string>{"a b c'", "c a' b'"});

  auto const cell = single_cell(fixture::ab_c(), 0);
  Transversal along{{walk_darts_labelled(cell, w("a"))[0]}};
  CHECK_FALSE(is_transversal(cell, along));
  CHECK_THROWS(split_along_transversal(cell, along));
}

TEST_CASE("special cells") {
  auto const cell = single_cell(fixture::ab_c(), 0);
  CHECK(find_special_cells(cell).size() == 1);

  auto const two = two_cell_diagram();
  CHECK(find_special_cells(two).size() == 2);
  auto const s = find_special_cell_constructive(two, two.base_vertex());
  CHECK(two.is_cell(s.cell));
  CHECK(boundary_stretch_interior(two, s).size() == 1);
  CHECK_THROWS(find_special_cell_constructive(cell, 0));

  // Avoiding the vertex inside the g h side leaves the a b end.
  auto const chain = chain_diagram();
  CHECK(find_special_cells(chain).size() == 2);
  auto const gh     = walk_darts_labelled(chain, w("h' g'"));
  auto const avoid  = chain.dart(gh[0]).head;
  auto const end    = find_special_cell_constructive(chain, avoid);
  auto const stretch = boundary_stretch_interior(chain, end);
  CHECK(std::find(stretch.begin(), stretch.end(), avoid) == stretch.end());
  CHECK(chain.face(end.cell).cell->relation == 0);
  CHECK(end.descent.size() <= chain.number_of_cells());
}

TEST_CASE("render_dot") {
  auto const cell = single_cell(fixture::ab_c(), 0);
  auto const dot  = render_dot(cell);
  CHECK(dot.starts_with("digraph"));
  for (char const* edge : {"[label=\"a\"]", "[label=\"b\"]", "[label=\"c\"]"}) {
    CHECK(dot.find(edge) != std::string::npos);
  }
  std::size_t arrows = 0;
  for (auto at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) {
    ++arrows;
  }
  CHECK(arrows == 3);
  CHECK(render_dot(cell) == dot);
  CHECK(render_dot(wedge(cell, cell, 0, 0)).find("diamond") != std::string::npos);
  CHECK(dot.find("diamond") == std::string::npos);
}

TEST_CASE("diagram JSON round trip") {
  for (std::size_t seed = 0; seed < 30; ++seed) {
    auto const d = fixture::corpus(seed);
    CHECK(diagram_from_json(to_json(d)) == d);
    CHECK(parse_diagram(to_json(d).dump()) == d);
  }
  CHECK_THROWS_AS(parse_diagram(R"({"vertices": []})"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("{"), ParseError);
}

TEST_CASE("random diagrams") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto const d = random_diagram(fixture::braid(), 1, seed);
    CHECK(d.number_of_cells() == 1);
    CHECK(number_of_simple_components(d) == 1);
    CHECK(random_diagram(fixture::braid(), 6, seed) == random_diagram(fixture::braid(), 6, seed));
  }
  try {
    random_diagram(Presentation({"a"}, {{{"a", "a"}, {"a"}}}), 2, 0);
    FAIL("non-Adian presentation accepted");
  } catch (DiagramError const& e) {
    CHECK(e.kind() == DiagramError::Kind::not_adian);
  }
}

TEST_CASE("corpus properties") {
  std::size_t multi = 0;
  for (std::size_t seed = 0; seed < fixture::corpus_size; ++seed) {
    CAPTURE(seed);
    auto const d = fixture::corpus(seed);
    auto const r = validate(d);
    REQUIRE(r.ok());
    CHECK(euler(d) == 2);
    CHECK(interior_sources_sinks(d).empty());
    CHECK_FALSE(has_directed_cycle(d));

    auto const parts = simple_components(d);
    std::size_t cells = 0;
    for (auto const& c : parts.components) {
      cells += c.cells.size();
      auto const& sub = c.sub.diagram;
      REQUIRE(validate(sub).ok());
      CHECK(number_of_simple_components(sub) == 1);
      if (sub.number_of_cells() < 2) {
        continue;
      }
      ++multi;
      CHECK(find_special_cells(sub).size() >= 2);

      auto const special = find_special_cell_constructive(sub, sub.base_vertex());
      auto const list    = find_special_cells(sub);
      CHECK(std::find(list.begin(), list.end(), special.cell) != list.end());
      auto const stretch = boundary_stretch_interior(sub, special);
      CHECK(std::find(stretch.begin(), stretch.end(), sub.base_vertex()) == stretch.end());
      CHECK(special.descent.size() <= sub.number_of_cells());

      auto const [left, right] = split_parts(sub, special.transversal);
      bool const on_left = std::find(left.cell_map.begin(), left.cell_map.end(), special.cell)
                           != left.cell_map.end();
      auto const& alone = on_left ? left : right;
      auto const& rest  = on_left ? right : left;
      REQUIRE(alone.cell_map.size() == 1);
      CHECK(alone.cell_map[0] == special.cell);
      CHECK(rest.cell_map.size() + 1 == sub.number_of_cells());
      CHECK(number_of_simple_components(rest.diagram) == 1);
      CHECK(validate(rest.diagram).ok());

      for (auto const& half : {left.diagram, right.diagram}) {
        CHECK(validate(half).ok());
        CHECK(number_of_simple_components(half) == 1);
        CHECK(extremal_vertices(half).empty());
        bool const interior_edge = std::any_of(
            half.darts().begin(), half.darts().end(),
            [&half](Dart const& x) { return x.label.positive() && !half.boundary_edge(x.id); });
        CHECK(interior_edge == (half.number_of_cells() > 1));
      }
    }
    CHECK(cells == d.number_of_cells());
  }
  CHECK(multi > 100);
}
