// Shared machinery for the diagram translation units.

#ifndef ADIAN_SRC_DIAGRAM_INTERNAL_HPP_
#define ADIAN_SRC_DIAGRAM_INTERNAL_HPP_

#include <cstddef>   // for size_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "adian/diagram.hpp"

namespace adian::detail {

  inline constexpr long outer_tag = -1;

  // A map under construction.  Every dart carries the slot of the cell on
  // its left, or outer_tag; assemble() turns the slots into faces.
  struct MapData {
    std::shared_ptr<Presentation const> presentation;
    std::vector<Dart>                   darts;
    std::vector<std::vector<DartId>>    rotations;
    std::vector<long>                   tag;
    std::vector<std::size_t>            cell_relation;  // per slot
    VertexId                            base = 0;

    VertexId add_vertex() {
      rotations.emplace_back();
      return rotations.size() - 1;
    }

    // New edge from -> to labelled x; returns the positive dart.  Neither
    // dart is entered into a rotation.
    DartId add_edge(VertexId from, VertexId to, Letter const& x) {
      DartId const d = darts.size();
      darts.push_back({d, d + 1, {x, 1}, from, to});
      darts.push_back({d + 1, d, {x, -1}, to, from});
      tag.push_back(outer_tag);
      tag.push_back(outer_tag);
      return d;
    }

    // Dart from -> to labelled by x (of either sign); returns the dart
    // running from -> to.
    DartId add_signed_edge(VertexId from, VertexId to, SignedLetter const& x) {
      return x.positive() ? add_edge(from, to, x.letter)
                          : darts[add_edge(to, from, x.letter)].inverse;
    }

    long add_cell(std::size_t relation) {
      cell_relation.push_back(relation);
      return static_cast<long>(cell_relation.size() - 1);
    }
  };

  // Computes the faces from the rotations.  Throws std::logic_error if the
  // slots are not constant on face orbits, or the outer face is not a single
  // orbit; throws DiagramError (label_mismatch) if a cell's boundary is not
  // labelled by its relator.
  Diagram assemble(MapData data);

  MapData disassemble(Diagram const& d);

  // u v⁻¹ for orientation +1, v u⁻¹ for -1.
  SignedWord relator(Presentation const& p, std::size_t relation, int orientation);

  SignedWord rotate(SignedWord const& w, std::size_t k);

  template <typename T>
  std::vector<T> rotate_vector(std::vector<T> const& v, std::size_t k) {
    std::vector<T> result(v.begin() + k, v.end());
    result.insert(result.end(), v.begin(), v.begin() + k);
    return result;
  }

  // (orientation, k) with rotate(w, k) == relator(orientation), if any.
  std::optional<std::pair<int, std::size_t>>
  match_relator(Presentation const& p, std::size_t relation, SignedWord const& w);

  bool cyclically_reduced(SignedWord const& w);

  // Orbits of face_next, each starting at its least dart; ordered by that
  // dart.
  std::vector<std::vector<DartId>> face_orbits(Diagram const& d);

  // The cells on both sides of the edge of x are mirror images of each
  // other.  Both sides must be cells.
  bool mirror_pair_across(Diagram const& d, DartId x);

  // Cycle of darts of face f rotated so that `last` is its final dart.
  std::vector<DartId> face_ending_at(Diagram const& d, FaceId f, DartId last);

  // Sides of a cell as positive dart paths from its initial to its terminal
  // vertex: first the one read forwards along the face, then the other.
  std::pair<std::vector<DartId>, std::vector<DartId>> cell_sides(Diagram const& d,
                                                                 FaceId         f);

  std::size_t edge_count_of_cells(Diagram const& d, std::vector<FaceId> const& cells);

}  // namespace adian::detail

#endif  // ADIAN_SRC_DIAGRAM_INTERNAL_HPP_
