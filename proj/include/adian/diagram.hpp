// van Kampen diagrams over positive presentations as planar combinatorial
// maps.
//
// A diagram is a set of darts (directed half-edges) with a fixed-point-free
// inverse involution, a rotation at every vertex listing the darts that
// leave it in counterclockwise order, and the faces of the map.  Every dart
// has its face on its left; the successor of dart d along its face is the
// dart preceding d⁻¹ in the rotation at head(d).  Exactly one face is the
// outer face; all others are 2-cells labelled by relators.
//
// The boundary of the diagram is read with the interior on the left, so the
// boundary walk visits a dart d exactly when d⁻¹ lies on the outer face, and
// the walk's successor of d is the dart following d⁻¹ in the rotation at
// head(d).

#ifndef ADIAN_DIAGRAM_HPP_
#define ADIAN_DIAGRAM_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <limits>       // for numeric_limits
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "json.hpp"  // for nlohmann::json

#include "adian/presentation.hpp"
#include "adian/word.hpp"

namespace adian {

  using VertexId = std::size_t;
  using DartId   = std::size_t;
  using FaceId   = std::size_t;

  inline constexpr std::size_t no_id = std::numeric_limits<std::size_t>::max();

  struct Dart {
    DartId       id      = 0;
    DartId       inverse = 0;
    SignedLetter label;
    VertexId     tail = 0;
    VertexId     head = 0;

    friend bool operator==(Dart const&, Dart const&) = default;
  };

  struct Vertex {
    VertexId            id = 0;
    std::vector<DartId> rotation;  // darts leaving this vertex, counterclockwise

    friend bool operator==(Vertex const&, Vertex const&) = default;
  };

  // The boundary of a cell, read from Face::boundary[0], is the rotation by
  // `offset` letters of u v⁻¹ (orientation +1) or v u⁻¹ (orientation -1)
  // for relation (u, v).
  struct CellKind {
    std::size_t relation    = 0;
    std::size_t offset      = 0;
    int         orientation = 1;

    friend bool operator==(CellKind const&, CellKind const&) = default;
  };

  struct Face {
    FaceId                  id = 0;
    std::optional<CellKind> cell;  // nullopt for the outer face
    std::vector<DartId>     boundary;

    bool outer() const noexcept {
      return !cell.has_value();
    }

    friend bool operator==(Face const&, Face const&) = default;
  };

  class Diagram {
   public:
    // Ids must equal positions and every id reference must be in range;
    // otherwise throws DiagramError (malformed).  No other check is made,
    // see validate().
    Diagram(std::shared_ptr<Presentation const> presentation,
            std::vector<Vertex>                 vertices,
            std::vector<Dart>                   darts,
            std::vector<Face>                   faces,
            VertexId                            base_vertex);

    Presentation const& presentation() const noexcept {
      return *presentation_;
    }
    std::shared_ptr<Presentation const> const& shared_presentation() const noexcept {
      return presentation_;
    }

    std::vector<Vertex> const& vertices() const noexcept {
      return vertices_;
    }
    std::vector<Dart> const& darts() const noexcept {
      return darts_;
    }
    std::vector<Face> const& faces() const noexcept {
      return faces_;
    }
    Vertex const& vertex(VertexId v) const {
      return vertices_.at(v);
    }
    Dart const& dart(DartId d) const {
      return darts_.at(d);
    }
    Face const& face(FaceId f) const {
      return faces_.at(f);
    }
    VertexId base_vertex() const noexcept {
      return base_;
    }

    std::size_t number_of_vertices() const noexcept {
      return vertices_.size();
    }
    std::size_t number_of_edges() const noexcept {
      return darts_.size() / 2;
    }
    std::size_t number_of_faces() const noexcept {
      return faces_.size();
    }
    std::size_t number_of_cells() const noexcept;

    // Stored face containing d, or no_id.
    FaceId face_of(DartId d) const noexcept {
      return face_of_[d];
    }
    // First stored outer face, or no_id.
    FaceId outer_face() const noexcept;
    bool   is_cell(FaceId f) const noexcept {
      return f != no_id && !faces_[f].outer();
    }

    DartId inverse(DartId d) const noexcept {
      return darts_[d].inverse;
    }
    // Neighbours of d in the rotation at tail(d).
    DartId rotation_next(DartId d) const noexcept;
    DartId rotation_prev(DartId d) const noexcept;
    // Successor of d along the face on its left.
    DartId face_next(DartId d) const noexcept {
      return rotation_prev(inverse(d));
    }
    // Successor of d along the boundary walk (interior on the left).
    DartId boundary_next(DartId d) const noexcept {
      return rotation_next(inverse(d));
    }

    // The positive dart of the edge containing d.
    DartId positive_dart(DartId d) const noexcept {
      return darts_[d].label.positive() ? d : inverse(d);
    }

    // d lies on the boundary walk, i.e. d⁻¹ is on the outer face.
    bool on_boundary_walk(DartId d) const noexcept;
    // Either dart of the edge lies on the outer face.
    bool boundary_edge(DartId d) const noexcept;
    bool boundary_vertex(VertexId v) const noexcept;

    Diagram with_base_vertex(VertexId v) const;

    friend bool operator==(Diagram const& x, Diagram const& y);

   private:
    std::shared_ptr<Presentation const> presentation_;
    std::vector<Vertex>                 vertices_;
    std::vector<Dart>                   darts_;
    std::vector<Face>                   faces_;
    VertexId                            base_;
    // Derived, tolerant of inconsistent input.
    std::vector<std::size_t> rotation_index_;
    std::vector<FaceId>      face_of_;
    std::vector<bool>        boundary_vertex_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  struct Violation {
    enum class Kind {
      involution,
      rotation,
      faces,
      euler,
      connectivity,
      outer_face,
      base_vertex,
      cell_label,
      reducedness,
      directed_cycle,
      interior_source,
      interior_sink
    };
    Kind        kind;
    std::string locus;
    std::string message;
  };

  std::string to_string(Violation::Kind k);
  std::string to_string(Violation const& v);

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
    bool has(Violation::Kind k) const noexcept;
  };

  // Involution laws, rotations, face orbits, Euler's formula, connectivity,
  // the outer face and base vertex, cell labels, reducedness, directed
  // cycles and interior sources or sinks, in that order.  A failure of the
  // involution or rotation checks ends the report early because every later
  // check reads the map through them.
  ValidationReport validate(Diagram const& d);

  ////////////////////////////////////////////////////////////////////////
  // Boundary and local structure
  ////////////////////////////////////////////////////////////////////////

  SignedWord label(Diagram const& d, std::span<DartId const> path);

  // The boundary walk starting with dart `start`, which must lie on it.
  std::vector<DartId> boundary_walk_at(Diagram const& d, DartId start);
  // Starts with the least-id walk dart leaving `from`.  Throws DiagramError
  // (not_on_boundary) when `from` is interior.  Empty for a one-vertex
  // diagram.
  std::vector<DartId> boundary_walk(Diagram const& d, VertexId from);
  SignedWord          boundary_word(Diagram const& d);
  SignedWord          boundary_word(Diagram const& d, VertexId from);

  // Interior vertices whose leaving darts are all positive or all negative.
  std::vector<VertexId> interior_sources_sinks(Diagram const& d);

  // Topological sort of the positively labelled darts.
  bool has_directed_cycle(Diagram const& d);

  // Vertices visited more than once by the boundary walk.
  std::vector<VertexId> cut_vertices(Diagram const& d);

  // Degree one vertices.
  std::vector<VertexId> extremal_vertices(Diagram const& d);

  ////////////////////////////////////////////////////////////////////////
  // Sub-diagrams and the cactoid structure
  ////////////////////////////////////////////////////////////////////////

  // A diagram cut out of a larger one, with the maps back to it.
  struct SubDiagram {
    Diagram               diagram;
    std::vector<VertexId> vertex_map;  // new id -> parent id
    std::vector<DartId>   dart_map;    // new id -> parent id
    std::vector<FaceId>   cell_map;    // new cell face id -> parent face id

    VertexId local_vertex(VertexId parent) const;  // no_id if absent
    DartId   local_dart(DartId parent) const;      // no_id if absent
  };

  // Keeps the edges whose positive dart is marked in `keep_edge` (indexed by
  // dart id; both darts of an edge should agree) and the cells all of whose
  // edges are kept.  `lone_vertex` is used when no edge is kept.  The kept
  // part must be a diagram in its own right.
  SubDiagram extract(Diagram const&           d,
                     std::vector<bool> const& keep_edge,
                     VertexId                 base_vertex,
                     VertexId                 lone_vertex = no_id);

  struct SimpleComponent {
    std::vector<FaceId>   cells;
    std::vector<DartId>   edges;  // positive darts
    std::vector<VertexId> vertices;
    SubDiagram            sub;
  };

  // Edges in no cell, grouped through vertices that lie on no component.
  struct TreePart {
    std::vector<DartId>   edges;  // positive darts
    std::vector<VertexId> vertices;
  };

  struct CutVertexIncidence {
    VertexId                 vertex;
    std::vector<std::size_t> components;
    std::vector<std::size_t> trees;
  };

  struct CactoidDecomposition {
    std::vector<SimpleComponent>    components;
    std::vector<TreePart>           trees;
    std::vector<CutVertexIncidence> incidence;
  };

  CactoidDecomposition simple_components(Diagram const& d);
  std::size_t          number_of_simple_components(Diagram const& d);

  ////////////////////////////////////////////////////////////////////////
  // Transversals and special cells
  ////////////////////////////////////////////////////////////////////////

  struct Transversal {
    std::vector<DartId> darts;

    friend bool operator==(Transversal const&, Transversal const&) = default;
  };

  std::vector<VertexId> vertices_of(Diagram const& d, Transversal const& t);

  // Positive path between distinct boundary vertices with distinct vertices,
  // interior edges and interior intermediate vertices.
  bool is_transversal(Diagram const& d, Transversal const& t);

  // Extends the interior positive dart e forwards and backwards, taking the
  // least-id positive dart at every interior vertex.  Throws DiagramError if
  // e is negative or on the boundary.
  Transversal extend_to_transversal(Diagram const& d, DartId e);

  // Cell faces on the left and on the right of t.
  std::pair<std::vector<FaceId>, std::vector<FaceId>>
  cells_beside(Diagram const& d, Transversal const& t);

  // Requires one simple component, no extremal vertex, and t a transversal
  // of d.  First the part on the left of t, then the part on the right.
  std::pair<SubDiagram, SubDiagram> split_parts(Diagram const& d, Transversal const& t);
  std::pair<Diagram, Diagram>       split_along_transversal(Diagram const&     d,
                                                            Transversal const& t);

  // Cells with at least one full side on the boundary.
  std::vector<FaceId> find_special_cells(Diagram const& d);

  struct SpecialCell {
    FaceId      cell;
    Transversal transversal;  // cuts `cell` off the rest of the diagram
    // Number of cells in each region visited while narrowing down to `cell`.
    std::vector<std::size_t> descent;
  };

  // Requires one simple component without extremal vertices and more than
  // one cell.  Narrows both halves of a first transversal down to a special
  // cell each and returns the first whose boundary stretch does not have
  // `avoid` in its interior.
  SpecialCell find_special_cell_constructive(Diagram const& d, VertexId avoid);

  // Vertices of ∂cell ∩ ∂d strictly between the ends of the cutting
  // transversal.
  std::vector<VertexId> boundary_stretch_interior(Diagram const&     d,
                                                  SpecialCell const& s);

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  // One vertex, no edges, empty boundary word.
  Diagram point_diagram(std::shared_ptr<Presentation const> p);
  Diagram point_diagram(Presentation const& p);

  // The cell of relation (u, v) with boundary u v⁻¹ read from its initial
  // vertex, which is vertex 0 and the base vertex.  Throws DiagramError if
  // u v⁻¹ is not cyclically reduced.
  Diagram single_cell(std::shared_ptr<Presentation const> p, std::size_t relation);
  Diagram single_cell(Presentation const& p, std::size_t relation);

  // The Munn tree of w, based at its start root.
  Diagram tree_diagram(std::shared_ptr<Presentation const> p, SignedWord const& w);

  // Where a new cell goes when glued along a boundary path P: its boundary,
  // read from the first vertex of P around the new cell, is
  // rotate(word, offset) where word is u v⁻¹ or v u⁻¹.
  struct CellPlacement {
    std::size_t relation    = 0;
    int         orientation = 1;
    std::size_t offset      = 0;

    friend bool operator==(CellPlacement const&, CellPlacement const&) = default;
  };

  // All placements of a cell along `path` (consecutive boundary walk darts
  // with distinct vertices and distinct ends) where the glued letters
  // match and at least one letter of the cell stays free.
  std::vector<CellPlacement> placements(Diagram const& d, std::span<DartId const> path);

  // Glues a new cell along `path`.  Throws DiagramError on label mismatch, a
  // bad path, or when the new cell and a neighbour would be mirror images.
  // A base vertex strictly inside `path` moves to the path's first vertex.
  Diagram attach_cell(Diagram const&          d,
                      std::span<DartId const> path,
                      CellPlacement const&    where);

  // The first placement of relation `relation` whose glued letters all come
  // from side `side` of the relation and which creates no mirror pair.
  Diagram attach_cell(Diagram const&          d,
                      std::span<DartId const> path,
                      std::size_t             relation,
                      Side                    side);

  // Identifies v2 in d2 with v1 in d1.  Both must be boundary vertices; the
  // result keeps d1's base vertex.  d2 is inserted at the boundary corner of
  // v1 whose leaving dart has the least id (and likewise for v2).
  Diagram wedge(Diagram const& d1, Diagram const& d2, VertexId v1, VertexId v2);

  // Corner-explicit wedge: c1 and c2 are boundary walk darts leaving the
  // vertices to identify, or no_id for an isolated vertex.
  Diagram wedge_at_corners(Diagram const& d1,
                           Diagram const& d2,
                           VertexId       v1,
                           DartId         c1,
                           VertexId       v2,
                           DartId         c2);

  // Hangs the Munn tree of w (by its start root) at boundary vertex v.
  Diagram attach_tree(Diagram const& d, VertexId v, SignedWord const& w);

  // The mirror image: every rotation reversed.  Its boundary word from the
  // same corner is the inverse word.
  Diagram mirror(Diagram const& d);

  // Deterministic in (p, cells, seed).  Requires p to be Adian; throws
  // DiagramError (not_adian) otherwise.
  Diagram random_diagram(Presentation const& p, std::size_t cells, std::uint64_t seed);

  ////////////////////////////////////////////////////////////////////////
  // Input and output
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json to_json(Diagram const& d);
  Diagram        diagram_from_json(nlohmann::json const& j);
  Diagram        parse_diagram(std::string_view text);

  // Graphviz digraph of the positive darts, the base vertex drawn doubled,
  // cut vertices as diamonds, and one comment line per face.
  std::string render_dot(Diagram const& d);

}  // namespace adian

#endif  // ADIAN_DIAGRAM_HPP_
