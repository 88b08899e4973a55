// Positive presentations (X, R), their left and right graphs, and the
// cycle-free (Adian) test.

#ifndef ADIAN_PRESENTATION_HPP_
#define ADIAN_PRESENTATION_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "json.hpp"  // for nlohmann::json

#include "adian/word.hpp"

namespace adian {

  enum class Side { lhs, rhs };

  inline Side other(Side s) noexcept {
    return s == Side::lhs ? Side::rhs : Side::lhs;
  }

  struct Relation {
    PositiveWord lhs;
    PositiveWord rhs;
    std::size_t  index = 0;

    PositiveWord const& side(Side s) const noexcept {
      return s == Side::lhs ? lhs : rhs;
    }

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  // Immutable after construction.  Relations keep their document order and
  // are referred to by index everywhere else in the toolkit.
  class Presentation {
   public:
    using relation_pair = std::pair<PositiveWord, PositiveWord>;

    // Throws PresentationError if the alphabet is empty or has duplicate or
    // badly formed letters, if a relation has an empty side, or if a relation
    // uses a letter outside the alphabet.
    Presentation(std::vector<Letter> alphabet, std::vector<relation_pair> relations);

    std::vector<Letter> const& alphabet() const noexcept {
      return alphabet_;
    }
    std::vector<Relation> const& relations() const noexcept {
      return relations_;
    }
    std::size_t number_of_relations() const noexcept {
      return relations_.size();
    }
    // Throws PresentationError for an index out of range.
    Relation const& relation(std::size_t i) const;

    bool contains(Letter const& x) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<Letter>   alphabet_;
    std::vector<Relation> relations_;
  };

  // JSON text of the form
  //   {"alphabet": ["a","b"], "relations": [[["a","b","a"],["b","a","b"]]]}
  // Syntax errors throw ParseError with line and column; everything else
  // throws PresentationError.
  Presentation parse_presentation(std::string_view text);
  Presentation presentation_from_json(nlohmann::json const& j);
  nlohmann::json to_json(Presentation const& p);

  struct SideEdge {
    Letter      first;
    Letter      second;
    std::size_t relation = 0;

    friend bool operator==(SideEdge const&, SideEdge const&) = default;
  };

  // Undirected multigraph on the alphabet with one edge per relation.
  struct SideGraph {
    std::vector<Letter>   vertices;
    std::vector<SideEdge> edges;
  };

  // Edge i joins the first letters of both sides of relation i.
  SideGraph left_graph(Presentation const& p);
  // Edge i joins the last letters of both sides of relation i.
  SideGraph right_graph(Presentation const& p);

  enum class GraphSide { left, right };

  std::string to_string(GraphSide g);

  // A closed walk in one side graph.  Loops are one edge, parallel edges two.
  struct CycleWitness {
    GraphSide             graph = GraphSide::left;
    std::vector<SideEdge> edges;
    std::vector<Letter>   vertices;  // vertices[i] is where edges[i] starts
  };

  std::string describe(CycleWitness const& w);

  struct AdianVerdict {
    std::optional<CycleWitness> witness;

    bool adian() const noexcept {
      return !witness.has_value();
    }
    explicit operator bool() const noexcept {
      return adian();
    }
  };

  // Adian iff both side graphs are forests as multigraphs: no loops, no
  // parallel edges, no longer cycles.  The left graph is searched first.
  AdianVerdict is_adian(Presentation const& p);

  // Forest test for a single side graph; nullopt when acyclic.
  std::optional<CycleWitness> find_cycle(SideGraph const& g, GraphSide side);

  nlohmann::json to_json(SideGraph const& g);

}  // namespace adian

#endif  // ADIAN_PRESENTATION_HPP_
