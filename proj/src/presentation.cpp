#include "adian/presentation.hpp"

#include <algorithm>  // for find, reverse
#include <numeric>    // for iota
#include <queue>      // for queue
#include <unordered_map>
#include <unordered_set>

#include "adian/error.hpp"

#include "json_text.hpp"

namespace adian {

  namespace {
    using json = nlohmann::json;

    PositiveWord word_from_json(json const& j, std::string const& where) {
      if (!j.is_array()) {
        throw PresentationError(PresentationError::Kind::schema,
                                where + ": expected an array of letters");
      }
      PositiveWord w;
      for (auto const& x : j) {
        if (!x.is_string()) {
          throw PresentationError(PresentationError::Kind::schema,
                                  where + ": letters must be strings");
        }
        w.push_back(x.get<std::string>());
      }
      return w;
    }

    // Disjoint sets over letter indices.
    class DisjointSets {
     public:
      explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        parent_[y] = x;
        return true;
      }

     private:
      std::vector<std::size_t> parent_;
    };
  }  // namespace

  Presentation::Presentation(std::vector<Letter>        alphabet,
                             std::vector<relation_pair> relations)
      : alphabet_(std::move(alphabet)) {
    using Kind = PresentationError::Kind;
    if (alphabet_.empty()) {
      throw PresentationError(Kind::empty_alphabet, "the alphabet is empty");
    }
    std::unordered_set<Letter> seen;
    for (auto const& x : alphabet_) {
      if (!is_letter_token(x)) {
        throw PresentationError(Kind::bad_letter, "invalid letter token '" + x + "'");
      }
      if (!seen.insert(x).second) {
        throw PresentationError(Kind::duplicate_letter, "duplicate letter '" + x + "'");
      }
    }
    relations_.reserve(relations.size());
    for (std::size_t i = 0; i < relations.size(); ++i) {
      auto& [u, v] = relations[i];
      if (u.empty() || v.empty()) {
        throw PresentationError(Kind::empty_side,
                                "relation " + std::to_string(i) + " has an empty side");
      }
      for (auto const* side : {&u, &v}) {
        for (auto const& x : *side) {
          if (seen.count(x) == 0) {
            throw PresentationError(Kind::unknown_letter,
                                    "relation " + std::to_string(i)
                                        + " uses unknown letter '" + x + "'");
          }
        }
      }
      relations_.push_back({std::move(u), std::move(v), i});
    }
  }

  Relation const& Presentation::relation(std::size_t i) const {
    if (i >= relations_.size()) {
      throw PresentationError(PresentationError::Kind::bad_relation_index,
                              "no relation with index " + std::to_string(i));
    }
    return relations_[i];
  }

  bool Presentation::contains(Letter const& x) const {
    return std::find(alphabet_.begin(), alphabet_.end(), x) != alphabet_.end();
  }

  Presentation parse_presentation(std::string_view text) {
    return presentation_from_json(detail::parse_json(text));
  }

  namespace detail {

    nlohmann::json parse_json(std::string_view text) {
      try {
        return nlohmann::json::parse(text.begin(), text.end());
      } catch (nlohmann::json::parse_error const& e) {
        std::size_t const byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t       line = 1, column = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
          if (text[i] == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
        throw ParseError("syntax error at line " + std::to_string(line) + ", column "
                             + std::to_string(column),
                         line,
                         column);
      }
    }

  }  // namespace detail

  Presentation presentation_from_json(json const& j) {
    using Kind = PresentationError::Kind;
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("relations")) {
      throw PresentationError(Kind::schema,
                              "a presentation needs \"alphabet\" and \"relations\"");
    }
    std::vector<Letter> alphabet = word_from_json(j.at("alphabet"), "alphabet");
    auto const&         rels     = j.at("relations");
    if (!rels.is_array()) {
      throw PresentationError(Kind::schema, "\"relations\" must be an array");
    }
    std::vector<Presentation::relation_pair> relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      auto const&       r     = rels[i];
      std::string const where = "relation " + std::to_string(i);
      if (!r.is_array() || r.size() != 2) {
        throw PresentationError(Kind::schema, where + ": expected a pair of words");
      }
      relations.emplace_back(word_from_json(r[0], where), word_from_json(r[1], where));
    }
    return Presentation(std::move(alphabet), std::move(relations));
  }

  json to_json(Presentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relations()) {
      rels.push_back(json::array({r.lhs, r.rhs}));
    }
    return json{{"alphabet", p.alphabet()}, {"relations", rels}};
  }

  SideGraph left_graph(Presentation const& p) {
    SideGraph g{p.alphabet(), {}};
    for (auto const& r : p.relations()) {
      g.edges.push_back({r.lhs.front(), r.rhs.front(), r.index});
    }
    return g;
  }

  SideGraph right_graph(Presentation const& p) {
    SideGraph g{p.alphabet(), {}};
    for (auto const& r : p.relations()) {
      g.edges.push_back({r.lhs.back(), r.rhs.back(), r.index});
    }
    return g;
  }

  std::string to_string(GraphSide g) {
    return g == GraphSide::left ? "left graph" : "right graph";
  }

  std::string describe(CycleWitness const& w) {
    if (w.edges.size() == 1) {
      return "loop at " + w.vertices.front() + " (" + to_string(w.graph)
             + ", relation " + std::to_string(w.edges.front().relation) + ")";
    }
    std::string kind = w.edges.size() == 2 ? "parallel edges " : "cycle ";
    std::string path;
    for (auto const& v : w.vertices) {
      path += v + "-";
    }
    path += w.vertices.front();
    std::string rels;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      rels += (i == 0 ? "" : ", ") + std::to_string(w.edges[i].relation);
    }
    return kind + path + " (" + to_string(w.graph) + ", relations " + rels + ")";
  }

  std::optional<CycleWitness> find_cycle(SideGraph const& g, GraphSide side) {
    std::unordered_map<Letter, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      index.emplace(g.vertices[i], i);
    }
    DisjointSets sets(g.vertices.size());
    // Accepted forest edges, as adjacency lists of (neighbour, edge number).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest(
        g.vertices.size());

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto const  x = index.at(g.edges[e].first);
      auto const  y = index.at(g.edges[e].second);
      if (x == y) {
        return CycleWitness{side, {g.edges[e]}, {g.vertices[x]}};
      }
      if (sets.unite(x, y)) {
        forest[x].emplace_back(y, e);
        forest[y].emplace_back(x, e);
        continue;
      }
      // Closed walk x -e- y ~> x, the second leg along the forest.
      std::size_t const none = g.vertices.size();
      std::vector<std::pair<std::size_t, std::size_t>> parent(g.vertices.size(),
                                                              {none, 0});
      std::queue<std::size_t> q;
      q.push(x);
      parent[x] = {x, 0};
      while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto [w, f] : forest[v]) {
          if (parent[w].first == none) {
            parent[w] = {v, f};
            q.push(w);
          }
        }
      }
      CycleWitness w{side, {g.edges[e]}, {g.vertices[x]}};
      for (auto v = y; v != x; v = parent[v].first) {
        w.vertices.push_back(g.vertices[v]);
        w.edges.push_back(g.edges[parent[v].second]);
      }
      return w;
    }
    return std::nullopt;
  }

  AdianVerdict is_adian(Presentation const& p) {
    if (auto w = find_cycle(left_graph(p), GraphSide::left)) {
      return {std::move(w)};
    }
    return {find_cycle(right_graph(p), GraphSide::right)};
  }

  json to_json(SideGraph const& g) {
    json edges = json::array();
    for (auto const& e : g.edges) {
      edges.push_back({{"ends", {e.first, e.second}}, {"relation", e.relation}});
    }
    return json{{"vertices", g.vertices}, {"edges", edges}};
  }

}  // namespace adian
