// Free reduction, Dyck words and Munn trees.
//
// A word over X ∪ X⁻¹ is an idempotent of the free inverse semigroup exactly
// when the two roots of its Munn tree coincide, which happens exactly when
// the word freely reduces to the empty word.

#ifndef ADIAN_MUNN_HPP_
#define ADIAN_MUNN_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "adian/word.hpp"

namespace adian {

  // Cancels xx⁻¹ and x⁻¹x factors until none remain.
  SignedWord free_reduce(SignedWord const& w);

  bool is_dyck(SignedWord const& w);

  // True iff w is literally p p⁻¹ for some nonempty p.
  bool is_pp_inverse(SignedWord const& w);

  struct MunnEdge {
    std::size_t from;
    Letter      letter;
    std::size_t to;

    friend bool operator==(MunnEdge const&, MunnEdge const&) = default;
    friend auto operator<=>(MunnEdge const&, MunnEdge const&) = default;
  };

  // Birooted tree with a deterministic and co-deterministic edge labelling.
  struct MunnTree {
    std::size_t           number_of_vertices = 0;
    std::vector<MunnEdge> edges;
    std::size_t           start_root = 0;
    std::size_t           end_root   = 0;

    friend bool operator==(MunnTree const&, MunnTree const&) = default;
  };

  // Traces w from the start root, reusing an existing edge whenever one with
  // the required source (or target) and letter is present.  Throws Error on
  // the empty word.
  MunnTree munn_tree(SignedWord const& w);

  // Vertices renumbered breadth-first from the start root, visiting
  // neighbours by (letter, outgoing before incoming); edges sorted.
  MunnTree canonical(MunnTree const& t);

  bool fim_idempotent(SignedWord const& w);

}  // namespace adian

#endif  // ADIAN_MUNN_HPP_
