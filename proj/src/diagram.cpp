#include "adian/diagram.hpp"

#include <algorithm>  // for find, min_element, sort
#include <map>        // for map
#include <queue>      // for queue
#include <set>        // for set
#include <stdexcept>  // for logic_error

#include "adian/error.hpp"

#include "diagram_internal.hpp"

namespace adian {

  ////////////////////////////////////////////////////////////////////////
  // Diagram
  ////////////////////////////////////////////////////////////////////////

  Diagram::Diagram(std::shared_ptr<Presentation const> presentation,
                   std::vector<Vertex>                 vertices,
                   std::vector<Dart>                   darts,
                   std::vector<Face>                   faces,
                   VertexId                            base_vertex)
      : presentation_(std::move(presentation)),
        vertices_(std::move(vertices)),
        darts_(std::move(darts)),
        faces_(std::move(faces)),
        base_(base_vertex),
        rotation_index_(darts_.size(), no_id),
        face_of_(darts_.size(), no_id),
        boundary_vertex_(vertices_.size(), false) {
    auto malformed = [](std::string const& msg) {
      return DiagramError(DiagramError::Kind::malformed, msg);
    };
    if (presentation_ == nullptr) {
      throw malformed("a diagram needs a presentation");
    }
    if (vertices_.empty()) {
      throw malformed("a diagram has at least one vertex");
    }
    std::size_t const nv = vertices_.size(), nd = darts_.size(), nf = faces_.size();
    for (std::size_t i = 0; i < nv; ++i) {
      if (vertices_[i].id != i) {
        throw malformed("vertex ids must be 0.." + std::to_string(nv - 1));
      }
      for (auto d : vertices_[i].rotation) {
        if (d >= nd) {
          throw malformed("vertex " + std::to_string(i) + " rotation names unknown dart "
                          + std::to_string(d));
        }
      }
    }
    for (std::size_t i = 0; i < nd; ++i) {
      auto const& d = darts_[i];
      if (d.id != i) {
        throw malformed("dart ids must be 0.." + std::to_string(nd - 1));
      }
      if (d.inverse >= nd || d.tail >= nv || d.head >= nv) {
        throw malformed("dart " + std::to_string(i) + " refers to an unknown id");
      }
      if (!is_letter_token(d.label.letter) || (d.label.sign != 1 && d.label.sign != -1)) {
        throw malformed("dart " + std::to_string(i) + " has a bad label");
      }
    }
    for (std::size_t i = 0; i < nf; ++i) {
      if (faces_[i].id != i) {
        throw malformed("face ids must be 0.." + std::to_string(nf - 1));
      }
      for (auto d : faces_[i].boundary) {
        if (d >= nd) {
          throw malformed("face " + std::to_string(i) + " names unknown dart "
                          + std::to_string(d));
        }
      }
    }
    if (base_ >= nv) {
      throw malformed("base vertex " + std::to_string(base_) + " does not exist");
    }

    for (auto const& v : vertices_) {
      for (std::size_t k = 0; k < v.rotation.size(); ++k) {
        if (darts_[v.rotation[k]].tail == v.id) {
          rotation_index_[v.rotation[k]] = k;
        }
      }
    }
    for (auto const& f : faces_) {
      for (auto d : f.boundary) {
        face_of_[d] = f.id;
      }
    }
    for (auto const& f : faces_) {
      if (f.outer()) {
        for (auto d : f.boundary) {
          boundary_vertex_[darts_[d].tail] = true;
        }
      }
    }
    if (nd == 0) {
      std::fill(boundary_vertex_.begin(), boundary_vertex_.end(), true);
    }
  }

  std::size_t Diagram::number_of_cells() const noexcept {
    return std::count_if(
        faces_.begin(), faces_.end(), [](Face const& f) { return !f.outer(); });
  }

  FaceId Diagram::outer_face() const noexcept {
    for (auto const& f : faces_) {
      if (f.outer()) {
        return f.id;
      }
    }
    return no_id;
  }

  DartId Diagram::rotation_next(DartId d) const noexcept {
    auto const& rot = vertices_[darts_[d].tail].rotation;
    auto const  k   = rotation_index_[d];
    if (k == no_id) {
      return d;
    }
    return rot[(k + 1) % rot.size()];
  }

  DartId Diagram::rotation_prev(DartId d) const noexcept {
    auto const& rot = vertices_[darts_[d].tail].rotation;
    auto const  k   = rotation_index_[d];
    if (k == no_id) {
      return d;
    }
    return rot[(k + rot.size() - 1) % rot.size()];
  }

  bool Diagram::on_boundary_walk(DartId d) const noexcept {
    auto const f = face_of_[inverse(d)];
    return f != no_id && faces_[f].outer();
  }

  bool Diagram::boundary_edge(DartId d) const noexcept {
    return on_boundary_walk(d) || on_boundary_walk(inverse(d));
  }

  bool Diagram::boundary_vertex(VertexId v) const noexcept {
    return boundary_vertex_[v];
  }

  Diagram Diagram::with_base_vertex(VertexId v) const {
    return Diagram(presentation_, vertices_, darts_, faces_, v);
  }

  bool operator==(Diagram const& x, Diagram const& y) {
    return *x.presentation_ == *y.presentation_ && x.vertices_ == y.vertices_
           && x.darts_ == y.darts_ && x.faces_ == y.faces_ && x.base_ == y.base_;
  }

  ////////////////////////////////////////////////////////////////////////
  // detail
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    SignedWord relator(Presentation const& p, std::size_t relation, int orientation) {
      auto const& r = p.relation(relation);
      auto const& x = orientation > 0 ? r.lhs : r.rhs;
      auto const& y = orientation > 0 ? r.rhs : r.lhs;
      return concat(to_signed(x), inverse(to_signed(y)));
    }

    SignedWord rotate(SignedWord const& w, std::size_t k) {
      return rotate_vector(w, w.empty() ? 0 : k % w.size());
    }

    std::optional<std::pair<int, std::size_t>>
    match_relator(Presentation const& p, std::size_t relation, SignedWord const& w) {
      for (int orientation : {1, -1}) {
        auto const r = relator(p, relation, orientation);
        if (r.size() != w.size()) {
          continue;
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
          if (rotate(w, k) == r) {
            return std::make_pair(orientation, k);
          }
        }
      }
      return std::nullopt;
    }

    bool cyclically_reduced(SignedWord const& w) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        auto const& x = w[i];
        auto const& y = w[(i + 1) % w.size()];
        if (x.letter == y.letter && x.sign == -y.sign) {
          return false;
        }
      }
      return true;
    }

    std::vector<std::vector<DartId>> face_orbits(Diagram const& d) {
      std::vector<std::vector<DartId>> orbits;
      std::vector<bool>                seen(d.darts().size(), false);
      for (DartId start = 0; start < d.darts().size(); ++start) {
        if (seen[start]) {
          continue;
        }
        std::vector<DartId> orbit;
        DartId              x = start;
        while (!seen[x]) {
          seen[x] = true;
          orbit.push_back(x);
          x = d.face_next(x);
        }
        orbits.push_back(std::move(orbit));
      }
      return orbits;
    }

    std::vector<DartId> face_ending_at(Diagram const& d, FaceId f, DartId last) {
      auto const& b = d.face(f).boundary;
      auto const  k = std::find(b.begin(), b.end(), last) - b.begin();
      return rotate_vector(b, (k + 1) % b.size());
    }

    bool mirror_pair_across(Diagram const& d, DartId x) {
      auto const f1 = d.face_of(x);
      auto const f2 = d.face_of(d.inverse(x));
      auto const l1 = label(d, face_ending_at(d, f1, x));
      auto       b2 = face_ending_at(d, f2, d.inverse(x));
      std::rotate(b2.begin(), b2.end() - 1, b2.end());  // now starts at x⁻¹
      return label(d, b2) == inverse(l1);
    }

    std::pair<std::vector<DartId>, std::vector<DartId>> cell_sides(Diagram const& d,
                                                                   FaceId         f) {
      auto const& b = d.face(f).boundary;
      // Start of the positive run: a positive dart preceded by a negative one.
      std::size_t start = 0;
      for (std::size_t k = 0; k < b.size(); ++k) {
        auto const prev = b[(k + b.size() - 1) % b.size()];
        if (d.dart(b[k]).label.positive() && !d.dart(prev).label.positive()) {
          start = k;
          break;
        }
      }
      std::vector<DartId> forwards, backwards;
      for (std::size_t k = 0; k < b.size(); ++k) {
        auto const x = b[(start + k) % b.size()];
        if (d.dart(x).label.positive()) {
          forwards.push_back(x);
        } else {
          backwards.push_back(d.inverse(x));
        }
      }
      std::reverse(backwards.begin(), backwards.end());
      return {forwards, backwards};
    }

    Diagram assemble(MapData data) {
      std::size_t const   nd = data.darts.size();
      std::vector<Vertex> vertices;
      for (std::size_t v = 0; v < data.rotations.size(); ++v) {
        vertices.push_back({v, data.rotations[v]});
      }
      // Faces are computed from a provisional diagram with no faces stored.
      Diagram const bare(data.presentation, vertices, data.darts, {}, data.base);
      auto const    orbits = face_orbits(bare);

      std::vector<Face>        cells(data.cell_relation.size());
      std::vector<bool>        filled(data.cell_relation.size(), false);
      std::vector<DartId>      outer;
      bool                     have_outer = false;
      for (auto const& orbit : orbits) {
        long const t = data.tag[orbit.front()];
        for (auto x : orbit) {
          if (data.tag[x] != t) {
            throw std::logic_error("face orbit crosses cell boundaries");
          }
        }
        if (t == outer_tag) {
          if (have_outer) {
            throw std::logic_error("more than one outer face");
          }
          have_outer = true;
          outer      = orbit;
          continue;
        }
        auto const slot = static_cast<std::size_t>(t);
        if (filled[slot]) {
          throw std::logic_error("cell split into several orbits");
        }
        filled[slot]    = true;
        auto const rel  = data.cell_relation[slot];
        auto const word = label(bare, orbit);
        auto const m    = match_relator(*data.presentation, rel, word);
        if (!m || !cyclically_reduced(word)) {
          throw DiagramError(DiagramError::Kind::label_mismatch,
                             "cell boundary " + to_string(word)
                                 + " is not a conjugate of relator "
                                 + std::to_string(rel));
        }
        cells[slot] = Face{0, CellKind{rel, 0, m->first}, rotate_vector(orbit, m->second)};
      }
      if (nd != 0 && !have_outer) {
        throw std::logic_error("no outer face");
      }
      std::vector<Face> faces;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        if (filled[s]) {
          cells[s].id = faces.size();
          faces.push_back(std::move(cells[s]));
        }
      }
      faces.push_back(Face{faces.size(), std::nullopt, std::move(outer)});
      return Diagram(data.presentation,
                     std::move(vertices),
                     std::move(data.darts),
                     std::move(faces),
                     data.base);
    }

    MapData disassemble(Diagram const& d) {
      MapData data;
      data.presentation = d.shared_presentation();
      data.darts        = d.darts();
      for (auto const& v : d.vertices()) {
        data.rotations.push_back(v.rotation);
      }
      data.tag.assign(d.darts().size(), outer_tag);
      std::vector<long> slot(d.faces().size(), outer_tag);
      for (auto const& f : d.faces()) {
        if (!f.outer()) {
          slot[f.id] = data.add_cell(f.cell->relation);
        }
      }
      for (DartId x = 0; x < d.darts().size(); ++x) {
        if (d.face_of(x) != no_id) {
          data.tag[x] = slot[d.face_of(x)];
        }
      }
      data.base = d.base_vertex();
      return data;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Boundary
  ////////////////////////////////////////////////////////////////////////

  SignedWord label(Diagram const& d, std::span<DartId const> path) {
    SignedWord w;
    w.reserve(path.size());
    for (auto x : path) {
      w.push_back(d.dart(x).label);
    }
    return w;
  }

  std::vector<DartId> boundary_walk_at(Diagram const& d, DartId start) {
    if (!d.on_boundary_walk(start)) {
      throw DiagramError(DiagramError::Kind::not_on_boundary,
                         "dart " + std::to_string(start) + " is not on the boundary walk");
    }
    std::vector<DartId> walk;
    DartId              x = start;
    do {
      walk.push_back(x);
      x = d.boundary_next(x);
      if (walk.size() > d.darts().size()) {
        throw std::logic_error("boundary walk does not close");
      }
    } while (x != start);
    return walk;
  }

  std::vector<DartId> boundary_walk(Diagram const& d, VertexId from) {
    if (from >= d.number_of_vertices() || !d.boundary_vertex(from)) {
      throw DiagramError(DiagramError::Kind::not_on_boundary,
                         "vertex " + std::to_string(from) + " is not on the boundary");
    }
    if (d.darts().empty()) {
      return {};
    }
    DartId best = no_id;
    for (auto x : d.vertex(from).rotation) {
      if (d.on_boundary_walk(x) && x < best) {
        best = x;
      }
    }
    return boundary_walk_at(d, best);
  }

  SignedWord boundary_word(Diagram const& d) {
    return boundary_word(d, d.base_vertex());
  }

  SignedWord boundary_word(Diagram const& d, VertexId from) {
    return label(d, boundary_walk(d, from));
  }

  std::vector<VertexId> interior_sources_sinks(Diagram const& d) {
    std::vector<VertexId> result;
    for (auto const& v : d.vertices()) {
      if (d.boundary_vertex(v.id) || v.rotation.empty()) {
        continue;
      }
      bool all_positive = true, all_negative = true;
      for (auto x : v.rotation) {
        (d.dart(x).label.positive() ? all_negative : all_positive) = false;
      }
      if (all_positive || all_negative) {
        result.push_back(v.id);
      }
    }
    return result;
  }

  bool has_directed_cycle(Diagram const& d) {
    std::vector<std::size_t> indegree(d.number_of_vertices(), 0);
    for (auto const& x : d.darts()) {
      if (x.label.positive()) {
        ++indegree[x.head];
      }
    }
    std::queue<VertexId> ready;
    for (VertexId v = 0; v < d.number_of_vertices(); ++v) {
      if (indegree[v] == 0) {
        ready.push(v);
      }
    }
    std::size_t sorted = 0;
    while (!ready.empty()) {
      auto v = ready.front();
      ready.pop();
      ++sorted;
      for (auto x : d.vertex(v).rotation) {
        if (d.dart(x).label.positive() && --indegree[d.dart(x).head] == 0) {
          ready.push(d.dart(x).head);
        }
      }
    }
    return sorted != d.number_of_vertices();
  }

  std::vector<VertexId> cut_vertices(Diagram const& d) {
    auto const outer = d.outer_face();
    if (outer == no_id) {
      return {};
    }
    std::vector<std::size_t> visits(d.number_of_vertices(), 0);
    for (auto x : d.face(outer).boundary) {
      ++visits[d.dart(x).tail];
    }
    std::vector<VertexId> result;
    for (VertexId v = 0; v < visits.size(); ++v) {
      if (visits[v] > 1) {
        result.push_back(v);
      }
    }
    return result;
  }

  std::vector<VertexId> extremal_vertices(Diagram const& d) {
    std::vector<VertexId> result;
    for (auto const& v : d.vertices()) {
      if (v.rotation.size() == 1) {
        result.push_back(v.id);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Violation::Kind k) {
    using K = Violation::Kind;
    switch (k) {
      case K::involution:
        return "involution";
      case K::rotation:
        return "rotation";
      case K::faces:
        return "faces";
      case K::euler:
        return "euler";
      case K::connectivity:
        return "connectivity";
      case K::outer_face:
        return "outer face";
      case K::base_vertex:
        return "base vertex";
      case K::cell_label:
        return "cell label";
      case K::reducedness:
        return "reducedness";
      case K::directed_cycle:
        return "directed cycle";
      case K::interior_source:
        return "interior source";
      case K::interior_sink:
        return "interior sink";
    }
    return "unknown";
  }

  std::string to_string(Violation const& v) {
    return to_string(v.kind) + " violation at " + v.locus + ": " + v.message;
  }

  bool ValidationReport::has(Violation::Kind k) const noexcept {
    return std::any_of(violations.begin(), violations.end(), [k](Violation const& v) {
      return v.kind == k;
    });
  }

  ValidationReport validate(Diagram const& d) {
    using K = Violation::Kind;
    ValidationReport report;
    auto             add = [&report](K k, std::string locus, std::string msg) {
      report.violations.push_back({k, std::move(locus), std::move(msg)});
    };
    auto dart_locus = [](DartId x) { return "dart " + std::to_string(x); };

    // Involution laws.
    for (auto const& x : d.darts()) {
      auto const& y = d.dart(x.inverse);
      if (x.inverse == x.id) {
        add(K::involution, dart_locus(x.id), "dart is its own inverse");
      } else if (y.inverse != x.id) {
        add(K::involution, dart_locus(x.id), "inverse of the inverse is not the dart");
      } else if (y.label != x.label.inverse()) {
        add(K::involution, dart_locus(x.id), "inverse dart is not labelled by the inverse letter");
      } else if (y.tail != x.head || y.head != x.tail) {
        add(K::involution, dart_locus(x.id), "inverse dart does not swap head and tail");
      }
    }
    // Rotations.
    std::vector<std::size_t> listed(d.darts().size(), 0);
    for (auto const& v : d.vertices()) {
      for (auto x : v.rotation) {
        ++listed[x];
        if (d.dart(x).tail != v.id) {
          add(K::rotation,
              "vertex " + std::to_string(v.id),
              "rotation lists dart " + std::to_string(x) + " which does not leave it");
        }
      }
    }
    for (auto const& x : d.darts()) {
      if (listed[x.id] != 1) {
        add(K::rotation,
            dart_locus(x.id),
            "dart appears " + std::to_string(listed[x.id])
                + " times in the rotation at its tail");
      }
    }
    if (!report.ok()) {
      return report;
    }

    // Faces against the orbits of the rotation system.
    auto const orbits = detail::face_orbits(d);
    {
      std::map<DartId, std::size_t> orbit_of;
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (auto x : orbits[i]) {
          orbit_of[x] = i;
        }
      }
      std::vector<bool> matched(orbits.size(), false);
      for (auto const& f : d.faces()) {
        std::string const locus = "face " + std::to_string(f.id);
        if (f.boundary.empty()) {
          if (!(d.darts().empty() && f.outer())) {
            add(K::faces, locus, "empty face boundary");
          }
          continue;
        }
        auto const& orbit = orbits[orbit_of.at(f.boundary.front())];
        auto const  k     = std::find(orbit.begin(), orbit.end(), f.boundary.front())
                       - orbit.begin();
        if (detail::rotate_vector(orbit, k) != f.boundary) {
          add(K::faces, locus, "boundary is not an orbit of the rotation system");
          continue;
        }
        if (matched[orbit_of.at(f.boundary.front())]) {
          add(K::faces, locus, "face listed twice");
        }
        matched[orbit_of.at(f.boundary.front())] = true;
      }
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (!matched[i]) {
          add(K::faces,
              dart_locus(orbits[i].front()),
              "orbit " + to_string(label(d, orbits[i])) + " is not a listed face");
        }
      }
    }
    // Euler's formula, counting faces of the rotation system.
    {
      long const v = static_cast<long>(d.number_of_vertices());
      long const e = static_cast<long>(d.number_of_edges());
      long const f = static_cast<long>(d.darts().empty() ? 1 : orbits.size());
      if (v - e + f != 2) {
        add(K::euler,
            "diagram",
            "V - E + F = " + std::to_string(v) + " - " + std::to_string(e) + " + "
                + std::to_string(f) + " != 2");
      }
    }
    // Connectivity.
    {
      std::vector<bool>    seen(d.number_of_vertices(), false);
      std::queue<VertexId> q;
      q.push(0);
      seen[0]           = true;
      std::size_t count = 1;
      while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto x : d.vertex(v).rotation) {
          auto const w = d.dart(x).head;
          if (!seen[w]) {
            seen[w] = true;
            ++count;
            q.push(w);
          }
        }
      }
      if (count != d.number_of_vertices()) {
        add(K::connectivity,
            "diagram",
            std::to_string(d.number_of_vertices() - count) + " vertices unreachable from vertex 0");
      }
    }
    // Outer face and base vertex.
    {
      std::size_t outers = std::count_if(
          d.faces().begin(), d.faces().end(), [](Face const& f) { return f.outer(); });
      if (outers != 1) {
        add(K::outer_face, "diagram", std::to_string(outers) + " outer faces instead of one");
      }
      if (!d.boundary_vertex(d.base_vertex())) {
        add(K::base_vertex,
            "vertex " + std::to_string(d.base_vertex()),
            "base vertex is not on the outer face");
      }
    }
    // Cell labels.
    for (auto const& f : d.faces()) {
      if (f.outer()) {
        continue;
      }
      std::string const locus = "face " + std::to_string(f.id);
      if (f.cell->relation >= d.presentation().number_of_relations()) {
        add(K::cell_label, locus, "unknown relation " + std::to_string(f.cell->relation));
        continue;
      }
      if (f.cell->orientation != 1 && f.cell->orientation != -1) {
        add(K::cell_label, locus, "orientation must be 1 or -1");
        continue;
      }
      auto const expected = detail::rotate(
          detail::relator(d.presentation(), f.cell->relation, f.cell->orientation),
          f.cell->offset);
      auto const actual = label(d, f.boundary);
      if (actual != expected) {
        add(K::cell_label,
            locus,
            "boundary " + to_string(actual) + " is not " + to_string(expected)
                + ", the declared conjugate of relator " + std::to_string(f.cell->relation));
      } else if (!detail::cyclically_reduced(actual)) {
        add(K::cell_label, locus, "boundary " + to_string(actual) + " is not cyclically reduced");
      }
    }
    if (report.has(K::faces) || report.has(K::cell_label)) {
      return report;
    }
    // Reducedness.
    for (auto const& x : d.darts()) {
      if (!x.label.positive() || !d.is_cell(d.face_of(x.id))
          || !d.is_cell(d.face_of(x.inverse))) {
        continue;
      }
      if (detail::mirror_pair_across(d, x.id)) {
        add(K::reducedness,
            "edge " + std::to_string(x.id),
            "faces " + std::to_string(d.face_of(x.id)) + " and "
                + std::to_string(d.face_of(x.inverse)) + " are mirror images");
      }
    }
    if (has_directed_cycle(d)) {
      add(K::directed_cycle, "diagram", "positively labelled darts contain a cycle");
    }
    for (auto v : interior_sources_sinks(d)) {
      bool const source = d.dart(d.vertex(v).rotation.front()).label.positive();
      add(source ? K::interior_source : K::interior_sink,
          "vertex " + std::to_string(v),
          source ? "interior vertex with only positive leaving darts"
                 : "interior vertex with only negative leaving darts");
    }
    return report;
  }

}  // namespace adian
