#include <algorithm>  // for find, sort, unique
#include <numeric>    // for iota
#include <queue>      // for queue
#include <set>        // for set
#include <stdexcept>  // for logic_error

#include "adian/diagram.hpp"
#include "adian/error.hpp"

#include "diagram_internal.hpp"

namespace adian {

  namespace {

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

      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent_[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> parent_;
    };

    template <typename T>
    void sort_unique(std::vector<T>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    DiagramError precondition(std::string const& msg) {
      return DiagramError(DiagramError::Kind::precondition, msg);
    }

    bool interior_edge(Diagram const& d, DartId x) {
      return d.is_cell(d.face_of(x)) && d.is_cell(d.face_of(d.inverse(x)));
    }

    // Cells reachable from `start` across interior edges not in `blocked`.
    std::vector<FaceId> flood(Diagram const&           d,
                              FaceId                   start,
                              std::vector<bool> const& blocked) {
      std::vector<bool>   seen(d.number_of_faces(), false);
      std::vector<FaceId> cells;
      std::queue<FaceId>  q;
      seen[start] = true;
      q.push(start);
      while (!q.empty()) {
        auto f = q.front();
        q.pop();
        cells.push_back(f);
        for (auto x : d.face(f).boundary) {
          auto const g = d.face_of(d.inverse(x));
          if (!blocked[d.positive_dart(x)] && d.is_cell(g) && !seen[g]) {
            seen[g] = true;
            q.push(g);
          }
        }
      }
      std::sort(cells.begin(), cells.end());
      return cells;
    }

    std::vector<bool> edges_of_cells(Diagram const& d, std::vector<FaceId> const& cells) {
      std::vector<bool> keep(d.darts().size(), false);
      for (auto f : cells) {
        for (auto x : d.face(f).boundary) {
          keep[x] = keep[d.inverse(x)] = true;
        }
      }
      return keep;
    }

    void require_one_bare_component(Diagram const& d, char const* what) {
      if (number_of_simple_components(d) != 1 || !extremal_vertices(d).empty()) {
        throw precondition(std::string(what)
                           + " needs one simple component and no extremal vertex");
      }
      for (DartId x = 0; x < d.darts().size(); ++x) {
        if (!d.is_cell(d.face_of(x)) && !d.is_cell(d.face_of(d.inverse(x)))) {
          throw precondition(std::string(what) + " needs a diagram without trees");
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SubDiagram and extract
  ////////////////////////////////////////////////////////////////////////

  VertexId SubDiagram::local_vertex(VertexId parent) const {
    auto it = std::find(vertex_map.begin(), vertex_map.end(), parent);
    return it == vertex_map.end() ? no_id : static_cast<VertexId>(it - vertex_map.begin());
  }

  DartId SubDiagram::local_dart(DartId parent) const {
    auto it = std::find(dart_map.begin(), dart_map.end(), parent);
    return it == dart_map.end() ? no_id : static_cast<DartId>(it - dart_map.begin());
  }

  SubDiagram extract(Diagram const&           d,
                     std::vector<bool> const& keep_edge,
                     VertexId                 base_vertex,
                     VertexId                 lone_vertex) {
    auto kept = [&](DartId x) { return keep_edge[d.positive_dart(x)]; };

    std::vector<DartId>   dart_map;
    std::vector<VertexId> vertex_map;
    for (DartId x = 0; x < d.darts().size(); ++x) {
      if (kept(x)) {
        dart_map.push_back(x);
        vertex_map.push_back(d.dart(x).tail);
      }
    }
    if (dart_map.empty()) {
      VertexId const v = lone_vertex == no_id ? base_vertex : lone_vertex;
      return SubDiagram{point_diagram(d.shared_presentation()), {v}, {}, {}};
    }
    sort_unique(vertex_map);

    std::vector<VertexId> new_vertex(d.number_of_vertices(), no_id);
    for (VertexId v = 0; v < vertex_map.size(); ++v) {
      new_vertex[vertex_map[v]] = v;
    }
    std::vector<DartId> new_dart(d.darts().size(), no_id);
    for (DartId x = 0; x < dart_map.size(); ++x) {
      new_dart[dart_map[x]] = x;
    }
    if (new_vertex[base_vertex] == no_id) {
      throw precondition("base vertex " + std::to_string(base_vertex)
                         + " is not in the extracted part");
    }

    detail::MapData m;
    m.presentation = d.shared_presentation();
    m.base         = new_vertex[base_vertex];
    for (auto x : dart_map) {
      auto const& old = d.dart(x);
      m.darts.push_back({new_dart[x],
                         new_dart[old.inverse],
                         old.label,
                         new_vertex[old.tail],
                         new_vertex[old.head]});
    }
    for (auto v : vertex_map) {
      auto& rotation = m.rotations.emplace_back();
      for (auto x : d.vertex(v).rotation) {
        if (kept(x)) {
          rotation.push_back(new_dart[x]);
        }
      }
    }
    std::vector<FaceId> cell_map;
    std::vector<long>   slot(d.number_of_faces(), detail::outer_tag);
    for (auto const& f : d.faces()) {
      if (!f.outer()
          && std::all_of(f.boundary.begin(), f.boundary.end(), [&](DartId x) {
               return kept(x);
             })) {
        slot[f.id] = m.add_cell(f.cell->relation);
        cell_map.push_back(f.id);
      }
    }
    m.tag.assign(dart_map.size(), detail::outer_tag);
    for (DartId x = 0; x < dart_map.size(); ++x) {
      auto const f = d.face_of(dart_map[x]);
      if (f != no_id) {
        m.tag[x] = slot[f];
      }
    }
    return SubDiagram{detail::assemble(std::move(m)),
                      std::move(vertex_map),
                      std::move(dart_map),
                      std::move(cell_map)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Simple components
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Component index of every cell face (no_id for the outer face).
    std::vector<std::size_t> cell_classes(Diagram const& d, std::size_t& count) {
      DisjointSets sets(d.number_of_faces());
      for (DartId x = 0; x < d.darts().size(); ++x) {
        if (interior_edge(d, x)) {
          sets.unite(d.face_of(x), d.face_of(d.inverse(x)));
        }
      }
      std::vector<std::size_t> cls(d.number_of_faces(), no_id);
      std::vector<std::size_t> index(d.number_of_faces(), no_id);
      count = 0;
      for (auto const& f : d.faces()) {
        if (f.outer()) {
          continue;
        }
        auto const root = sets.find(f.id);
        if (index[root] == no_id) {
          index[root] = count++;
        }
        cls[f.id] = index[root];
      }
      return cls;
    }

  }  // namespace

  std::size_t number_of_simple_components(Diagram const& d) {
    std::size_t count = 0;
    cell_classes(d, count);
    return count;
  }

  CactoidDecomposition simple_components(Diagram const& d) {
    std::size_t count = 0;
    auto const  cls   = cell_classes(d, count);

    CactoidDecomposition result;
    result.components.reserve(count);
    std::vector<std::vector<FaceId>> cells(count);
    for (auto const& f : d.faces()) {
      if (!f.outer()) {
        cells[cls[f.id]].push_back(f.id);
      }
    }
    std::vector<bool> on_component(d.number_of_vertices(), false);
    for (std::size_t c = 0; c < count; ++c) {
      auto const          keep = edges_of_cells(d, cells[c]);
      std::vector<DartId> edges;
      std::vector<VertexId> vertices;
      for (DartId x = 0; x < d.darts().size(); ++x) {
        if (keep[x] && d.dart(x).label.positive()) {
          edges.push_back(x);
          vertices.push_back(d.dart(x).tail);
          vertices.push_back(d.dart(x).head);
        }
      }
      sort_unique(vertices);
      for (auto v : vertices) {
        on_component[v] = true;
      }
      VertexId base = d.base_vertex();
      if (!std::binary_search(vertices.begin(), vertices.end(), base)) {
        base = *std::find_if(vertices.begin(), vertices.end(), [&d](VertexId v) {
          return d.boundary_vertex(v);
        });
      }
      result.components.push_back(
          {cells[c], std::move(edges), vertices, extract(d, keep, base)});
    }

    // Trees: edges in no cell, glued together at vertices on no component.
    std::vector<DartId> tree_edges;
    for (DartId x = 0; x < d.darts().size(); ++x) {
      if (d.dart(x).label.positive() && !d.is_cell(d.face_of(x))
          && !d.is_cell(d.face_of(d.inverse(x)))) {
        tree_edges.push_back(x);
      }
    }
    DisjointSets                           sets(tree_edges.size());
    std::vector<std::vector<std::size_t>> at_vertex(d.number_of_vertices());
    for (std::size_t i = 0; i < tree_edges.size(); ++i) {
      at_vertex[d.dart(tree_edges[i]).tail].push_back(i);
      at_vertex[d.dart(tree_edges[i]).head].push_back(i);
    }
    for (VertexId v = 0; v < at_vertex.size(); ++v) {
      if (!on_component[v]) {
        for (auto i : at_vertex[v]) {
          sets.unite(i, at_vertex[v].front());
        }
      }
    }
    std::vector<std::size_t> tree_of(tree_edges.size(), no_id);
    std::vector<std::size_t> index(tree_edges.size(), no_id);
    for (std::size_t i = 0; i < tree_edges.size(); ++i) {
      auto const root = sets.find(i);
      if (index[root] == no_id) {
        index[root] = result.trees.size();
        result.trees.emplace_back();
      }
      auto& t    = result.trees[index[root]];
      tree_of[i] = index[root];
      t.edges.push_back(tree_edges[i]);
      t.vertices.push_back(d.dart(tree_edges[i]).tail);
      t.vertices.push_back(d.dart(tree_edges[i]).head);
    }
    for (auto& t : result.trees) {
      sort_unique(t.vertices);
    }

    for (VertexId v = 0; v < d.number_of_vertices(); ++v) {
      CutVertexIncidence inc{v, {}, {}};
      for (std::size_t c = 0; c < count; ++c) {
        auto const& vs = result.components[c].vertices;
        if (std::binary_search(vs.begin(), vs.end(), v)) {
          inc.components.push_back(c);
        }
      }
      for (auto i : at_vertex[v]) {
        inc.trees.push_back(tree_of[i]);
      }
      sort_unique(inc.trees);
      if (inc.components.size() + inc.trees.size() > 1) {
        result.incidence.push_back(std::move(inc));
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transversals
  ////////////////////////////////////////////////////////////////////////

  std::vector<VertexId> vertices_of(Diagram const& d, Transversal const& t) {
    std::vector<VertexId> result;
    if (t.darts.empty()) {
      return result;
    }
    result.push_back(d.dart(t.darts.front()).tail);
    for (auto x : t.darts) {
      result.push_back(d.dart(x).head);
    }
    return result;
  }

  bool is_transversal(Diagram const& d, Transversal const& t) {
    if (t.darts.empty()) {
      return false;
    }
    for (std::size_t i = 0; i < t.darts.size(); ++i) {
      auto const x = t.darts[i];
      if (x >= d.darts().size() || !d.dart(x).label.positive() || d.boundary_edge(x)) {
        return false;
      }
      if (i > 0 && d.dart(t.darts[i - 1]).head != d.dart(x).tail) {
        return false;
      }
    }
    auto vs = vertices_of(d, t);
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      if (d.boundary_vertex(vs[i])) {
        return false;
      }
    }
    if (!d.boundary_vertex(vs.front()) || !d.boundary_vertex(vs.back())) {
      return false;
    }
    sort_unique(vs);
    return vs.size() == t.darts.size() + 1;
  }

  namespace {

    // Extends the positive dart e forwards and backwards while `inside`
    // holds at the current vertex, taking the least positive dart each time.
    Transversal extend_while(Diagram const& d, DartId e, auto const& inside) {
      std::vector<DartId> forward{e};
      std::size_t const   limit = d.number_of_edges();
      for (VertexId v = d.dart(e).head; inside(v);) {
        DartId best = no_id;
        for (auto x : d.vertex(v).rotation) {
          if (d.dart(x).label.positive()) {
            best = std::min(best, x);
          }
        }
        if (best == no_id) {
          throw precondition("interior sink at vertex " + std::to_string(v));
        }
        forward.push_back(best);
        v = d.dart(best).head;
        if (forward.size() > limit) {
          throw precondition("directed cycle through vertex " + std::to_string(v));
        }
      }
      std::vector<DartId> backward;
      for (VertexId v = d.dart(e).tail; inside(v);) {
        DartId best = no_id;
        for (auto x : d.vertex(v).rotation) {
          if (!d.dart(x).label.positive()) {
            best = std::min(best, d.inverse(x));
          }
        }
        if (best == no_id) {
          throw precondition("interior source at vertex " + std::to_string(v));
        }
        backward.push_back(best);
        v = d.dart(best).tail;
        if (forward.size() + backward.size() > limit) {
          throw precondition("directed cycle through vertex " + std::to_string(v));
        }
      }
      std::reverse(backward.begin(), backward.end());
      backward.insert(backward.end(), forward.begin(), forward.end());
      return Transversal{std::move(backward)};
    }

  }  // namespace

  Transversal extend_to_transversal(Diagram const& d, DartId e) {
    if (e >= d.darts().size() || !d.dart(e).label.positive()) {
      throw precondition("dart " + std::to_string(e) + " is not a positive dart");
    }
    if (d.boundary_edge(e)) {
      throw precondition("dart " + std::to_string(e) + " lies on the boundary");
    }
    return extend_while(d, e, [&d](VertexId v) { return !d.boundary_vertex(v); });
  }

  std::pair<std::vector<FaceId>, std::vector<FaceId>>
  cells_beside(Diagram const& d, Transversal const& t) {
    std::vector<FaceId> left, right;
    for (auto x : t.darts) {
      if (d.is_cell(d.face_of(x))) {
        left.push_back(d.face_of(x));
      }
      if (d.is_cell(d.face_of(d.inverse(x)))) {
        right.push_back(d.face_of(d.inverse(x)));
      }
    }
    sort_unique(left);
    sort_unique(right);
    return {left, right};
  }

  namespace {

    // Cell sets on the left and right of t, flooding across edges not in t.
    std::pair<std::vector<FaceId>, std::vector<FaceId>> halves(Diagram const&     d,
                                                               Transversal const& t) {
      std::vector<bool> blocked(d.darts().size(), false);
      for (auto x : t.darts) {
        blocked[x] = true;
      }
      auto left  = flood(d, d.face_of(t.darts.front()), blocked);
      auto right = flood(d, d.face_of(d.inverse(t.darts.front())), blocked);
      return {std::move(left), std::move(right)};
    }

    SubDiagram part(Diagram const& d, std::vector<FaceId> const& cells, Transversal const& t) {
      auto const     keep  = edges_of_cells(d, cells);
      VertexId const start = d.dart(t.darts.front()).tail;
      bool const     has_base
          = std::any_of(d.vertex(d.base_vertex()).rotation.begin(),
                        d.vertex(d.base_vertex()).rotation.end(),
                        [&](DartId x) { return keep[x]; });
      return extract(d, keep, has_base ? d.base_vertex() : start);
    }

  }  // namespace

  std::pair<SubDiagram, SubDiagram> split_parts(Diagram const& d, Transversal const& t) {
    if (!is_transversal(d, t)) {
      throw precondition("not a directed transversal of the diagram");
    }
    require_one_bare_component(d, "splitting");
    auto [left, right] = halves(d, t);
    std::vector<FaceId> both = left;
    both.insert(both.end(), right.begin(), right.end());
    sort_unique(both);
    if (both.size() != left.size() + right.size() || both.size() != d.number_of_cells()) {
      throw precondition("the transversal does not divide the cells in two");
    }
    return {part(d, left, t), part(d, right, t)};
  }

  std::pair<Diagram, Diagram> split_along_transversal(Diagram const& d, Transversal const& t) {
    auto parts = split_parts(d, t);
    return {std::move(parts.first.diagram), std::move(parts.second.diagram)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Special cells
  ////////////////////////////////////////////////////////////////////////

  std::vector<FaceId> find_special_cells(Diagram const& d) {
    std::vector<FaceId> result;
    for (auto const& f : d.faces()) {
      if (f.outer()) {
        continue;
      }
      auto const [forwards, backwards] = detail::cell_sides(d, f.id);
      auto outside                     = [&d](DartId x) { return !d.is_cell(d.face_of(x)); };
      bool const x_on = std::all_of(forwards.begin(), forwards.end(), [&](DartId x) {
        return outside(d.inverse(x));
      });
      bool const y_on = std::all_of(backwards.begin(), backwards.end(), outside);
      if (x_on || y_on) {
        result.push_back(f.id);
      }
    }
    return result;
  }

  namespace {

    std::vector<DartId> stretch(Diagram const& d, FaceId cell, Transversal const& t) {
      std::set<DartId> on_t;
      for (auto x : t.darts) {
        on_t.insert(x);
        on_t.insert(d.inverse(x));
      }
      auto const& b     = d.face(cell).boundary;
      std::size_t start = 0;
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (!on_t.contains(b[k]) && on_t.contains(b[(k + b.size() - 1) % b.size()])) {
          start = k;
          break;
        }
      }
      std::vector<DartId> sigma;
      for (std::size_t k = 0; k < b.size() && !on_t.contains(b[(start + k) % b.size()]); ++k) {
        sigma.push_back(b[(start + k) % b.size()]);
      }
      return sigma;
    }

    // Narrows the region `region`, cut off by `t`, to a single cell.
    SpecialCell narrow(Diagram const& d, std::vector<FaceId> region, Transversal t) {
      std::vector<std::size_t> descent{region.size()};
      while (region.size() > 1) {
        std::vector<bool> in_region(d.number_of_faces(), false);
        for (auto f : region) {
          in_region[f] = true;
        }
        DartId e = no_id;
        for (DartId x = 0; x < d.darts().size() && e == no_id; ++x) {
          if (d.dart(x).label.positive() && interior_edge(d, x) && in_region[d.face_of(x)]
              && in_region[d.face_of(d.inverse(x))]) {
            e = x;
          }
        }
        if (e == no_id) {
          throw std::logic_error("region of several cells without an inner edge");
        }
        auto const        tv = vertices_of(d, t);
        std::set<VertexId> on_t(tv.begin(), tv.end());
        auto const         t1 = extend_while(d, e, [&](VertexId v) {
          return !d.boundary_vertex(v) && !on_t.contains(v);
        });
        auto const         v1 = vertices_of(d, t1);
        auto const position = [&tv](VertexId v) -> std::size_t {
          auto it = std::find(tv.begin(), tv.end(), v);
          return it == tv.end() ? no_id : static_cast<std::size_t>(it - tv.begin());
        };
        auto const a = position(v1.front()), b = position(v1.back());
        Transversal t2;
        if (a != no_id && a != 0 && a + 1 != tv.size()) {
          t2.darts.assign(t.darts.begin(), t.darts.begin() + a);
        }
        t2.darts.insert(t2.darts.end(), t1.darts.begin(), t1.darts.end());
        if (b != no_id && b != 0 && b + 1 != tv.size()) {
          t2.darts.insert(t2.darts.end(), t.darts.begin() + b, t.darts.end());
        }
        auto [left, right] = halves(d, t2);
        auto const inside  = [&in_region](std::vector<FaceId> const& cells) {
          return std::all_of(
              cells.begin(), cells.end(), [&](FaceId f) { return in_region[f]; });
        };
        auto& next = inside(left) ? left : right;
        if (!inside(next) || next.size() >= region.size() || next.empty()) {
          throw std::logic_error("transversal does not shrink the region");
        }
        region = std::move(next);
        t      = std::move(t2);
        descent.push_back(region.size());
      }
      return SpecialCell{region.front(), std::move(t), std::move(descent)};
    }

  }  // namespace

  SpecialCell find_special_cell_constructive(Diagram const& d, VertexId avoid) {
    require_one_bare_component(d, "finding a special cell");
    if (d.number_of_cells() < 2) {
      throw precondition("a special cell is found in diagrams with at least two cells");
    }
    DartId e = no_id;
    for (DartId x = 0; x < d.darts().size() && e == no_id; ++x) {
      if (d.dart(x).label.positive() && !d.boundary_edge(x)) {
        e = x;
      }
    }
    auto const t             = extend_to_transversal(d, e);
    auto const [left, right] = halves(d, t);
    SpecialCell candidates[] = {narrow(d, left, t), narrow(d, right, t)};
    for (auto& c : candidates) {
      auto const s = boundary_stretch_interior(d, c);
      if (std::find(s.begin(), s.end(), avoid) == s.end()) {
        return std::move(c);
      }
    }
    throw std::logic_error("both special cells cover vertex " + std::to_string(avoid));
  }

  std::vector<VertexId> boundary_stretch_interior(Diagram const& d, SpecialCell const& s) {
    auto const            sigma = stretch(d, s.cell, s.transversal);
    std::vector<VertexId> result;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
      result.push_back(d.dart(sigma[i]).head);
    }
    return result;
  }

}  // namespace adian
