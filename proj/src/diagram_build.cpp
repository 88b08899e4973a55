#include <algorithm>  // for find, reverse
#include <random>     // for mt19937_64
#include <set>        // for set

#include "adian/diagram.hpp"
#include "adian/error.hpp"
#include "adian/munn.hpp"

#include "diagram_internal.hpp"

namespace adian {

  namespace {

    using detail::MapData;
    using detail::outer_tag;

    // Path from -> to spelling w, with fresh intermediate vertices whose
    // rotations are filled in.  Returns the darts in walking order; the
    // rotations at `from` and `to` are left to the caller.
    std::vector<DartId>
    add_path(MapData& m, VertexId from, VertexId to, SignedWord const& w) {
      std::vector<DartId> path;
      VertexId            here = from;
      for (std::size_t i = 0; i < w.size(); ++i) {
        VertexId const next = i + 1 == w.size() ? to : m.add_vertex();
        path.push_back(m.add_signed_edge(here, next, w[i]));
        here = next;
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        m.rotations[m.darts[path[i]].head] = {m.darts[path[i]].inverse, path[i + 1]};
      }
      return path;
    }

    void insert_before(std::vector<DartId>& rotation, DartId anchor, DartId x) {
      rotation.insert(std::find(rotation.begin(), rotation.end(), anchor), x);
    }

    void insert_after(std::vector<DartId>& rotation, DartId anchor, DartId x) {
      rotation.insert(std::find(rotation.begin(), rotation.end(), anchor) + 1, x);
    }

    void check_boundary_path(Diagram const& d, std::span<DartId const> path) {
      auto bad = [](std::string const& msg) {
        return DiagramError(DiagramError::Kind::not_on_boundary, msg);
      };
      if (path.empty()) {
        throw bad("the gluing path is empty");
      }
      std::set<VertexId> seen{d.dart(path.front()).tail};
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= d.darts().size() || !d.on_boundary_walk(path[i])) {
          throw bad("dart " + std::to_string(path[i]) + " is not on the boundary walk");
        }
        if (i > 0 && d.boundary_next(path[i - 1]) != path[i]) {
          throw bad("gluing path does not follow the boundary walk");
        }
        if (!seen.insert(d.dart(path[i]).head).second) {
          throw bad("gluing path repeats a vertex");
        }
      }
    }

    // The corner at v with the least leaving walk dart, or no_id when v has
    // no edges.
    DartId least_corner(Diagram const& d, VertexId v) {
      if (v >= d.number_of_vertices() || !d.boundary_vertex(v)) {
        throw DiagramError(DiagramError::Kind::not_on_boundary,
                           "vertex " + std::to_string(v) + " is not on the boundary");
      }
      DartId best = no_id;
      for (auto x : d.vertex(v).rotation) {
        if (d.on_boundary_walk(x)) {
          best = std::min(best, x);
        }
      }
      return best;
    }

  }  // namespace

  Diagram point_diagram(std::shared_ptr<Presentation const> p) {
    MapData m;
    m.presentation = std::move(p);
    m.add_vertex();
    return detail::assemble(std::move(m));
  }

  Diagram point_diagram(Presentation const& p) {
    return point_diagram(std::make_shared<Presentation const>(p));
  }

  Diagram single_cell(std::shared_ptr<Presentation const> p, std::size_t relation) {
    auto const& r = p->relation(relation);
    if (r.lhs.front() == r.rhs.front() || r.lhs.back() == r.rhs.back()) {
      throw DiagramError(DiagramError::Kind::precondition,
                         "relator " + std::to_string(relation)
                             + " is not cyclically reduced");
    }
    MapData m;
    m.presentation      = std::move(p);
    VertexId const from = m.add_vertex();
    VertexId const to   = m.add_vertex();
    auto const     u    = add_path(m, from, to, to_signed(r.lhs));
    auto const     v    = add_path(m, from, to, to_signed(r.rhs));
    long const     cell = m.add_cell(relation);
    for (auto x : u) {
      m.tag[x] = cell;
    }
    for (auto x : v) {
      m.tag[m.darts[x].inverse] = cell;
    }
    m.rotations[from] = {u.front(), v.front()};
    m.rotations[to]   = {m.darts[u.back()].inverse, m.darts[v.back()].inverse};
    return detail::assemble(std::move(m));
  }

  Diagram single_cell(Presentation const& p, std::size_t relation) {
    return single_cell(std::make_shared<Presentation const>(p), relation);
  }

  Diagram tree_diagram(std::shared_ptr<Presentation const> p, SignedWord const& w) {
    if (w.empty()) {
      return point_diagram(std::move(p));
    }
    auto const t = munn_tree(w);
    MapData    m;
    m.presentation = std::move(p);
    m.rotations.resize(t.number_of_vertices);
    for (auto const& e : t.edges) {
      if (!m.presentation->contains(e.letter)) {
        throw DiagramError(DiagramError::Kind::label_mismatch,
                           "letter " + e.letter + " is not in the alphabet");
      }
      auto const x = m.add_edge(e.from, e.to, e.letter);
      m.rotations[e.from].push_back(x);
      m.rotations[e.to].push_back(x + 1);
    }
    m.base = t.start_root;
    return detail::assemble(std::move(m));
  }

  std::vector<CellPlacement> placements(Diagram const& d, std::span<DartId const> path) {
    check_boundary_path(d, path);
    auto const                 glued = inverse(label(d, path));
    std::vector<CellPlacement> result;
    auto const&                p = d.presentation();
    for (std::size_t rel = 0; rel < p.number_of_relations(); ++rel) {
      for (int orientation : {1, -1}) {
        auto const word = detail::relator(p, rel, orientation);
        if (word.size() <= glued.size()) {
          continue;
        }
        for (std::size_t offset = 0; offset < word.size(); ++offset) {
          auto const w = detail::rotate(word, offset);
          if (std::equal(glued.begin(), glued.end(), w.end() - glued.size())) {
            result.push_back({rel, orientation, offset});
          }
        }
      }
    }
    return result;
  }

  Diagram attach_cell(Diagram const&          d,
                      std::span<DartId const> path,
                      CellPlacement const&    where) {
    check_boundary_path(d, path);
    auto const& p = d.presentation();
    if (where.relation >= p.number_of_relations()
        || (where.orientation != 1 && where.orientation != -1)) {
      throw DiagramError(DiagramError::Kind::precondition, "bad cell placement");
    }
    auto const word = detail::rotate(detail::relator(p, where.relation, where.orientation),
                                     where.offset);
    auto const glued = inverse(label(d, path));
    if (word.size() <= glued.size()
        || !std::equal(glued.begin(), glued.end(), word.end() - glued.size())) {
      throw DiagramError(DiagramError::Kind::label_mismatch,
                         "path " + to_string(label(d, path))
                             + " does not match the cell " + to_string(word));
    }
    MapData        m     = detail::disassemble(d);
    VertexId const s     = d.dart(path.front()).tail;
    VertexId const t     = d.dart(path.back()).head;
    auto const     q     = add_path(m, s, t, slice(word, 0, word.size() - glued.size()));
    long const     cell  = m.add_cell(where.relation);
    for (auto x : q) {
      m.tag[x] = cell;
    }
    for (auto x : path) {
      m.tag[d.inverse(x)] = cell;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (d.dart(path[i]).head == m.base) {
        m.base = s;
      }
    }
    insert_before(m.rotations[s], path.front(), q.front());
    insert_after(m.rotations[t], d.inverse(path.back()), m.darts[q.back()].inverse);
    Diagram result = detail::assemble(std::move(m));
    for (auto x : path) {
      if (result.is_cell(result.face_of(x)) && detail::mirror_pair_across(result, x)) {
        throw DiagramError(DiagramError::Kind::mirror_pair,
                           "the new cell and face " + std::to_string(result.face_of(x))
                               + " would be mirror images across edge "
                               + std::to_string(d.positive_dart(x)));
      }
    }
    return result;
  }

  Diagram attach_cell(Diagram const&          d,
                      std::span<DartId const> path,
                      std::size_t             relation,
                      Side                    side) {
    auto const& p = d.presentation();
    for (auto const& where : placements(d, path)) {
      if (where.relation != relation) {
        continue;
      }
      // Glued letters occupy the last |path| positions of the rotated word;
      // positions below |first side| belong to the first side.
      Side const  first      = where.orientation > 0 ? Side::lhs : Side::rhs;
      std::size_t first_size = p.relation(relation).side(first).size();
      std::size_t length     = first_size + p.relation(relation).side(other(first)).size();
      bool        all_on     = true;
      for (std::size_t i = length - path.size(); i < length; ++i) {
        Side const s = (where.offset + i) % length < first_size ? first : other(first);
        all_on       = all_on && s == side;
      }
      if (!all_on) {
        continue;
      }
      try {
        return attach_cell(d, path, where);
      } catch (DiagramError const& e) {
        if (e.kind() != DiagramError::Kind::mirror_pair) {
          throw;
        }
      }
    }
    throw DiagramError(DiagramError::Kind::label_mismatch,
                       "no placement of relation " + std::to_string(relation)
                           + " glues its " + (side == Side::lhs ? "left" : "right")
                           + " side along the path without a mirror pair");
  }

  Diagram wedge_at_corners(Diagram const& d1,
                           Diagram const& d2,
                           VertexId       v1,
                           DartId         c1,
                           VertexId       v2,
                           DartId         c2) {
    if (!(*d1.shared_presentation() == *d2.shared_presentation())) {
      throw DiagramError(DiagramError::Kind::precondition,
                         "wedged diagrams must share a presentation");
    }
    for (auto [d, v, c] : {std::tuple{&d1, v1, c1}, std::tuple{&d2, v2, c2}}) {
      if (v >= d->number_of_vertices() || !d->boundary_vertex(v)) {
        throw DiagramError(DiagramError::Kind::not_on_boundary,
                           "vertex " + std::to_string(v) + " is not on the boundary");
      }
      if (c == no_id ? !d->vertex(v).rotation.empty()
                     : (c >= d->darts().size() || d->dart(c).tail != v
                        || !d->on_boundary_walk(c))) {
        throw DiagramError(DiagramError::Kind::not_on_boundary,
                           "bad corner at vertex " + std::to_string(v));
      }
    }
    MapData        m  = detail::disassemble(d1);
    MapData const  m2 = detail::disassemble(d2);
    std::size_t const dart_shift = m.darts.size();
    std::vector<VertexId> vmap(d2.number_of_vertices());
    for (VertexId v = 0; v < vmap.size(); ++v) {
      vmap[v] = v == v2 ? v1 : m.add_vertex();
    }
    std::vector<long> slot(m2.cell_relation.size());
    for (std::size_t s = 0; s < slot.size(); ++s) {
      slot[s] = m.add_cell(m2.cell_relation[s]);
    }
    for (auto const& x : m2.darts) {
      m.darts.push_back({x.id + dart_shift,
                         x.inverse + dart_shift,
                         x.label,
                         vmap[x.tail],
                         vmap[x.head]});
      m.tag.push_back(m2.tag[x.id] == outer_tag ? outer_tag : slot[m2.tag[x.id]]);
    }
    for (VertexId v = 0; v < vmap.size(); ++v) {
      if (v == v2) {
        continue;
      }
      for (auto x : m2.rotations[v]) {
        m.rotations[vmap[v]].push_back(x + dart_shift);
      }
    }
    if (c2 != no_id) {
      auto const& r2 = m2.rotations[v2];
      auto const  k  = std::find(r2.begin(), r2.end(), c2) - r2.begin();
      std::vector<DartId> block;
      for (std::size_t i = 0; i < r2.size(); ++i) {
        block.push_back(r2[(k + i) % r2.size()] + dart_shift);
      }
      auto& r1 = m.rotations[v1];
      auto  at = c1 == no_id ? r1.end() : std::find(r1.begin(), r1.end(), c1);
      r1.insert(at, block.begin(), block.end());
    }
    return detail::assemble(std::move(m));
  }

  Diagram wedge(Diagram const& d1, Diagram const& d2, VertexId v1, VertexId v2) {
    return wedge_at_corners(d1, d2, v1, least_corner(d1, v1), v2, least_corner(d2, v2));
  }

  Diagram attach_tree(Diagram const& d, VertexId v, SignedWord const& w) {
    return wedge(d, tree_diagram(d.shared_presentation(), w), v, 0);
  }

  Diagram mirror(Diagram const& d) {
    MapData m = detail::disassemble(d);
    for (auto& r : m.rotations) {
      std::reverse(r.begin(), r.end());
    }
    // The face on the left of x is now the old face on the left of x⁻¹.
    std::vector<long> tag(m.tag.size());
    for (DartId x = 0; x < tag.size(); ++x) {
      tag[x] = m.tag[d.inverse(x)];
    }
    m.tag = std::move(tag);
    return detail::assemble(std::move(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // random_diagram
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Sampler {
     public:
      explicit Sampler(std::uint64_t seed) : rng_(seed) {}

      std::size_t below(std::size_t n) {
        return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n);
      }
      bool chance(unsigned percent) {
        return below(100) < percent;
      }

     private:
      std::mt19937_64 rng_;
    };

    struct Gluing {
      std::vector<DartId> path;
      CellPlacement       where;
    };

    std::vector<std::vector<Gluing>> gluings_by_length(Diagram const& d,
                                                       std::size_t    max_length) {
      std::vector<std::vector<Gluing>> by_length(max_length + 1);
      auto const                       walk = boundary_walk(d, d.base_vertex());
      for (std::size_t i = 0; i < walk.size(); ++i) {
        std::vector<DartId> path;
        std::set<VertexId>  seen{d.dart(walk[i]).tail};
        for (std::size_t k = 0; k < max_length && k < walk.size(); ++k) {
          DartId const x = walk[(i + k) % walk.size()];
          if (!seen.insert(d.dart(x).head).second) {
            break;
          }
          path.push_back(x);
          for (auto const& where : placements(d, path)) {
            by_length[path.size()].push_back({path, where});
          }
        }
      }
      return by_length;
    }

    DartId random_corner(Diagram const& d, Sampler& rng) {
      if (d.darts().empty()) {
        return no_id;
      }
      auto const walk = boundary_walk(d, d.base_vertex());
      return walk[rng.below(walk.size())];
    }

    Diagram wedge_randomly(Diagram const& d, Diagram const& piece, Sampler& rng) {
      DartId const c1 = random_corner(d, rng);
      DartId const c2 = random_corner(piece, rng);
      VertexId const v1 = c1 == no_id ? d.base_vertex() : d.dart(c1).tail;
      VertexId const v2 = c2 == no_id ? piece.base_vertex() : piece.dart(c2).tail;
      return wedge_at_corners(d, piece, v1, c1, v2, c2);
    }

    SignedWord random_word(Presentation const& p, std::size_t length, Sampler& rng) {
      SignedWord w;
      for (std::size_t i = 0; i < length; ++i) {
        w.push_back({p.alphabet()[rng.below(p.alphabet().size())], rng.chance(50) ? 1 : -1});
      }
      return w;
    }

    Diagram random_cell(std::shared_ptr<Presentation const> const& p, Sampler& rng) {
      Diagram cell = single_cell(p, rng.below(p->number_of_relations()));
      return rng.chance(50) ? cell : mirror(cell);
    }

  }  // namespace

  Diagram random_diagram(Presentation const& presentation,
                         std::size_t         cells,
                         std::uint64_t       seed) {
    if (auto verdict = is_adian(presentation); !verdict) {
      throw DiagramError(DiagramError::Kind::not_adian,
                         "random diagrams need an Adian presentation: "
                             + describe(*verdict.witness));
    }
    auto const p = std::make_shared<Presentation const>(presentation);
    Sampler    rng(seed);
    if (cells == 0) {
      return tree_diagram(p, random_word(*p, rng.below(4), rng));
    }
    std::size_t max_relator = 0;
    for (auto const& r : p->relations()) {
      max_relator = std::max(max_relator, r.lhs.size() + r.rhs.size());
    }
    std::size_t const tree_budget = cells / 3 + 1;
    std::size_t       trees       = 0;
    Diagram           d           = random_cell(p, rng);
    while (d.number_of_cells() < cells) {
      auto const roll = rng.below(100);
      if (roll < 15) {
        d = wedge_randomly(d, random_cell(p, rng), rng);
        continue;
      }
      if (roll < 25 && trees < tree_budget) {
        ++trees;
        d = wedge_randomly(d, tree_diagram(p, random_word(*p, 1 + rng.below(3), rng)), rng);
        continue;
      }
      auto by_length = gluings_by_length(d, max_relator - 1);
      bool attached  = false;
      for (std::size_t attempt = 0; attempt < 32 && !attached; ++attempt) {
        std::vector<std::size_t> lengths;
        for (std::size_t k = 1; k < by_length.size(); ++k) {
          if (!by_length[k].empty()) {
            lengths.push_back(k);
          }
        }
        if (lengths.empty()) {
          break;
        }
        auto& options = by_length[lengths[rng.below(lengths.size())]];
        auto  pick    = rng.below(options.size());
        try {
          d        = attach_cell(d, options[pick].path, options[pick].where);
          attached = true;
        } catch (DiagramError const& e) {
          if (e.kind() != DiagramError::Kind::mirror_pair) {
            throw;
          }
          options.erase(options.begin() + static_cast<std::ptrdiff_t>(pick));
        }
      }
      if (!attached) {
        d = wedge_randomly(d, random_cell(p, rng), rng);
      }
    }
    if (rng.chance(30)) {
      d = wedge_randomly(d, tree_diagram(p, random_word(*p, 1 + rng.below(3), rng)), rng);
    }
    auto const walk = boundary_walk(d, d.base_vertex());
    return d.with_base_vertex(d.dart(walk[rng.below(walk.size())]).tail);
  }

}  // namespace adian
