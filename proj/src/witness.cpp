#include <algorithm>  // for find, all_of
#include <numeric>    // for iota
#include <optional>   // for optional
#include <set>        // for set
#include <stdexcept>  // for logic_error

#include "adian/error.hpp"
#include "adian/munn.hpp"
#include "adian/witness.hpp"

#include "diagram_internal.hpp"

namespace adian {

  namespace {

    Certificate dyck_base(SignedWord w) {
      return Certificate{std::move(w), DyckBase{}, {}};
    }

    void expect_subject(Certificate const& c, SignedWord const& w, char const* where) {
      if (c.subject != w) {
        throw std::logic_error(std::string(where) + ": certified " + to_string(c.subject)
                               + " instead of " + to_string(w));
      }
    }

    // A factor [start, end) of the subject, with a certificate unless it is
    // literally p p⁻¹.
    struct Piece {
      std::size_t                start;
      std::size_t                end;
      std::optional<Certificate> proof;
    };

    Certificate drop_idempotents(SignedWord subject, std::vector<Piece> pieces, Certificate rest) {
      Certificate c{std::move(subject), DropIdempotents{}, {std::move(rest)}};
      auto&       step = std::get<DropIdempotents>(c.step);
      for (auto& p : pieces) {
        if (p.proof) {
          step.factors.push_back({Factor::Kind::certified, p.start, p.end, c.children.size()});
          c.children.push_back(std::move(*p.proof));
        } else {
          step.factors.push_back({Factor::Kind::pp_inverse, p.start, p.end, 0});
        }
      }
      return c;
    }

    Direction from_to(Side source) {
      return source == Side::lhs ? Direction::lhs_to_rhs : Direction::rhs_to_lhs;
    }

    // Side of the relation read forwards along a cell's boundary.
    Side forward_side(Diagram const& d, FaceId f) {
      return d.face(f).cell->orientation > 0 ? Side::lhs : Side::rhs;
    }

    std::size_t index_in(std::vector<DartId> const& v, DartId x) {
      auto it = std::find(v.begin(), v.end(), x);
      return it == v.end() ? no_id : static_cast<std::size_t>(it - v.begin());
    }

    ////////////////////////////////////////////////////////////////////////
    // One simple component, no trees
    ////////////////////////////////////////////////////////////////////////

    Certificate one_cell(Diagram const& d, DartId start) {
      auto const  w     = label(d, boundary_walk_at(d, start));
      FaceId const cell = 0;
      auto const [xs, ys] = detail::cell_sides(d, cell);
      Side const  x_side  = forward_side(d, cell);
      std::size_t const rel = d.face(cell).cell->relation;

      std::size_t i = index_in(xs, start);
      if (i == no_id && start == d.inverse(ys.back())) {
        i = xs.size();
      }
      if (i != no_id) {
        // w = y Y⁻¹ x with X = x y; Y⁻¹ becomes X⁻¹ = y⁻¹ x⁻¹.
        RelationSubst const s{rel, from_to(other(x_side)), xs.size() - i, true};
        auto const          x = label(d, std::vector<DartId>(xs.begin(), xs.begin() + i));
        auto const          y = label(d, std::vector<DartId>(xs.begin() + i, xs.end()));
        auto const          child = concat(concat(y, inverse(y)), concat(inverse(x), x));
        return Certificate{w, s, {dyck_base(child)}};
      }
      // The walk starts strictly inside Y = p q: w = p⁻¹ X q⁻¹.
      std::size_t j = no_id;
      for (std::size_t k = 0; k < ys.size(); ++k) {
        if (d.inverse(ys[k]) == start) {
          j = k;
        }
      }
      if (j == no_id) {
        throw std::logic_error("start dart is not on the cell");
      }
      auto const p     = label(d, std::vector<DartId>(ys.begin(), ys.begin() + j + 1));
      auto const q     = label(d, std::vector<DartId>(ys.begin() + j + 1, ys.end()));
      auto const child = concat(concat(inverse(p), p), concat(q, inverse(q)));
      return Certificate{w, RelationSubst{rel, from_to(x_side), p.size(), false}, {dyck_base(child)}};
    }

    Certificate one_component(Diagram const& d, DartId start) {
      if (d.number_of_cells() == 1) {
        return one_cell(d, start);
      }
      auto const     walk = boundary_walk_at(d, start);
      auto const     w    = label(d, walk);
      VertexId const from = d.dart(start).tail;
      auto const     sc   = find_special_cell_constructive(d, from);
      auto const [xs, ys] = detail::cell_sides(d, sc.cell);
      Side const        x_side = forward_side(d, sc.cell);
      std::size_t const rel    = d.face(sc.cell).cell->relation;

      std::set<DartId> on_p(sc.transversal.darts.begin(), sc.transversal.darts.end());
      auto const       first_on_p = [&on_p](std::vector<DartId> const& side) {
        for (std::size_t k = 0; k < side.size(); ++k) {
          if (on_p.contains(side[k])) {
            return k;
          }
        }
        return no_id;
      };
      std::size_t const r_len = sc.transversal.darts.size();
      std::size_t       r_at  = first_on_p(ys);
      bool const        along_y = r_at != no_id;
      if (!along_y) {
        r_at = first_on_p(xs);
      }
      auto const& cut = along_y ? ys : xs;  // the side containing p = s r t
      if (r_at == no_id || r_at + r_len > cut.size()) {
        throw std::logic_error("the cutting transversal does not run along the special cell");
      }
      std::vector<DartId> const s_darts(cut.begin(), cut.begin() + r_at);
      std::vector<DartId> const r_darts(cut.begin() + r_at, cut.begin() + r_at + r_len);
      std::vector<DartId> const t_darts(cut.begin() + r_at + r_len, cut.end());
      auto const                s = label(d, s_darts), r = label(d, r_darts), t = label(d, t_darts);

      // sigma: the special cell's stretch of the boundary walk.
      std::vector<DartId> sigma;
      auto const          add_inverted = [&](std::vector<DartId> const& v) {
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
          sigma.push_back(d.inverse(*it));
        }
      };
      if (along_y) {  // sigma = s⁻¹ X t⁻¹
        add_inverted(s_darts);
        sigma.insert(sigma.end(), xs.begin(), xs.end());
        add_inverted(t_darts);
      } else {  // sigma = t Y⁻¹ s
        sigma.insert(sigma.end(), t_darts.begin(), t_darts.end());
        add_inverted(ys);
        sigma.insert(sigma.end(), s_darts.begin(), s_darts.end());
      }
      std::size_t const g = index_in(walk, sigma.front());
      if (g == no_id || g + sigma.size() > walk.size()
          || !std::equal(sigma.begin(), sigma.end(), walk.begin() + g)) {
        throw std::logic_error("the special cell's stretch is not a run of the walk");
      }

      // Rewrite the full side on the boundary into the side along p, then
      // cancel the spurs s and t.
      SignedWord         rewritten, remainder;
      std::size_t const  h_at = g + sigma.size();
      auto const         head = slice(w, 0, g);
      auto const         tail = slice(w, h_at, w.size());
      RelationSubst      subst;
      std::vector<Piece> spurs;
      if (along_y) {
        subst     = {rel, from_to(x_side), g + s.size(), false};
        rewritten = concat(concat(head, concat(inverse(s), s)),
                           concat(concat(r, concat(t, inverse(t))), tail));
        remainder = concat(concat(head, r), tail);
        if (!s.empty()) {
          spurs.push_back({g, g + 2 * s.size(), std::nullopt});
        }
        if (!t.empty()) {
          std::size_t const at = g + 2 * s.size() + r.size();
          spurs.push_back({at, at + 2 * t.size(), std::nullopt});
        }
      } else {
        subst     = {rel, from_to(other(x_side)), g + t.size(), true};
        rewritten = concat(concat(head, concat(t, inverse(t))),
                           concat(concat(inverse(r), concat(inverse(s), s)), tail));
        remainder = concat(concat(head, inverse(r)), tail);
        if (!t.empty()) {
          spurs.push_back({g, g + 2 * t.size(), std::nullopt});
        }
        if (!s.empty()) {
          std::size_t const at = g + 2 * t.size() + r.size();
          spurs.push_back({at, at + 2 * s.size(), std::nullopt});
        }
      }

      auto parts = split_parts(d, sc.transversal);
      auto& rest = parts.first.cell_map.size() == 1 && parts.first.cell_map[0] == sc.cell
                       ? parts.second
                       : parts.first;
      VertexId const local_from = rest.local_vertex(from);
      if (local_from == no_id) {
        throw std::logic_error("the remaining part lost the start vertex");
      }
      auto const local_walk = boundary_walk(rest.diagram, local_from);
      if (label(rest.diagram, local_walk) != remainder) {
        throw std::logic_error("remaining part reads " + to_string(label(rest.diagram, local_walk))
                               + " instead of " + to_string(remainder));
      }
      Certificate next = one_component(rest.diagram, local_walk.front());
      if (!spurs.empty()) {
        next = drop_idempotents(rewritten, std::move(spurs), std::move(next));
      }
      expect_subject(next, rewritten, "special cell step");
      return Certificate{w, subst, {std::move(next)}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Cut vertices and trees
    ////////////////////////////////////////////////////////////////////////

    Certificate certify(Diagram const& d, DartId start);

    struct Pieces {
      std::vector<SubDiagram>  parts;
      std::vector<std::size_t> of_edge;  // by positive dart
    };

    // The closures of the components of d minus gamma.
    Pieces pieces_at(Diagram const& d, VertexId gamma) {
      std::size_t const        n = d.darts().size();
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      for (auto const& v : d.vertices()) {
        if (v.id == gamma || v.rotation.empty()) {
          continue;
        }
        auto const first = find(d.positive_dart(v.rotation.front()));
        for (auto x : v.rotation) {
          parent[find(d.positive_dart(x))] = first;
        }
      }
      Pieces                   result;
      std::vector<std::size_t> index(n, no_id);
      result.of_edge.assign(n, no_id);
      std::vector<std::vector<bool>> keep;
      for (DartId x = 0; x < n; ++x) {
        if (!d.dart(x).label.positive()) {
          continue;
        }
        auto const root = find(x);
        if (index[root] == no_id) {
          index[root] = keep.size();
          keep.emplace_back(n, false);
        }
        result.of_edge[x]        = index[root];
        keep[index[root]][x]     = true;
      }
      for (auto const& k : keep) {
        result.parts.push_back(extract(d, k, gamma));
      }
      return result;
    }

    Certificate cut_step(Diagram const&             d,
                         std::vector<DartId> const& walk,
                         VertexId                   gamma,
                         Pieces const&              pieces) {
      auto const w        = label(d, walk);
      auto const piece_of = [&](DartId x) { return pieces.of_edge[d.positive_dart(x)]; };
      // Walk segments [first, last) that leave gamma and come back to it.
      auto const excursion = [&](std::size_t first, std::size_t last) {
        auto const& part  = pieces.parts[piece_of(walk[first])];
        auto        proof = certify(part.diagram, part.local_dart(walk[first]));
        expect_subject(proof, slice(w, first, last), "cut vertex excursion");
        return proof;
      };
      auto const excursions = [&](std::size_t first, std::size_t last) {
        std::vector<Piece> result;
        for (std::size_t i = first; i < last;) {
          std::size_t j = i + 1;
          while (j < last && d.dart(walk[j]).tail != gamma) {
            ++j;
          }
          result.push_back({i, j, excursion(i, j)});
          i = j;
        }
        return result;
      };

      if (d.dart(walk.front()).tail == gamma) {
        Certificate c{w, ProductOfIdempotents{}, {}};
        auto&       step = std::get<ProductOfIdempotents>(c.step);
        for (auto& e : excursions(0, walk.size())) {
          step.factors.push_back({Factor::Kind::certified, e.start, e.end, c.children.size()});
          c.children.push_back(std::move(*e.proof));
        }
        return c;
      }
      // w = y (other pieces) x, where y and x lie in the start's own piece.
      std::size_t const own = piece_of(walk.front());
      std::size_t       a   = 0;
      while (d.dart(walk[a]).head != gamma) {
        ++a;
      }
      std::size_t b = a + 1;
      while (b < walk.size() && piece_of(walk[b]) != own) {
        ++b;
      }
      auto const& part = pieces.parts[own];
      auto        rest = certify(part.diagram, part.local_dart(walk.front()));
      expect_subject(rest, concat(slice(w, 0, a + 1), slice(w, b, w.size())), "cut vertex remainder");
      if (b == a + 1) {
        throw std::logic_error("cut vertex " + std::to_string(gamma) + " has a single piece");
      }
      return drop_idempotents(w, excursions(a + 1, b), std::move(rest));
    }

    // Start on the single simple component: drop the tree excursions.
    Certificate around_component(Diagram const&             d,
                                 SimpleComponent const&     c,
                                 std::vector<DartId> const& walk) {
      auto const       w = label(d, walk);
      std::set<DartId> on_c(c.edges.begin(), c.edges.end());
      auto const       in_c = [&](DartId x) { return on_c.contains(d.positive_dart(x)); };
      std::vector<Piece> runs;
      DartId             first_c = no_id;
      for (std::size_t i = 0; i < walk.size();) {
        if (in_c(walk[i])) {
          first_c = first_c == no_id ? walk[i] : first_c;
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < walk.size() && !in_c(walk[j])) {
          ++j;
        }
        auto const run = slice(w, i, j);
        if (!is_dyck(run)) {
          throw std::logic_error("tree excursion " + to_string(run) + " is not a Dyck word");
        }
        runs.push_back({i, j, is_pp_inverse(run) ? std::nullopt : std::optional(dyck_base(run))});
        i = j;
      }
      auto proof = one_component(c.sub.diagram, c.sub.local_dart(first_c));
      if (runs.empty()) {
        return proof;
      }
      return drop_idempotents(w, std::move(runs), std::move(proof));
    }

    Certificate certify(Diagram const& d, DartId start) {
      auto const walk = boundary_walk_at(d, start);
      auto const dec  = simple_components(d);
      auto const k    = dec.components.size();
      if (k == 0) {
        return dyck_base(label(d, walk));
      }
      if (k == 1) {
        auto const& c    = dec.components.front();
        auto const  on_c = [&c](VertexId v) {
          return std::binary_search(c.vertices.begin(), c.vertices.end(), v);
        };
        if (on_c(d.dart(start).tail)) {
          return around_component(d, c, walk);
        }
        for (auto x : walk) {
          if (on_c(d.dart(x).head)) {
            return cut_step(d, walk, d.dart(x).head, pieces_at(d, d.dart(x).head));
          }
        }
        throw std::logic_error("the boundary walk never meets the simple component");
      }
      for (auto gamma : cut_vertices(d)) {
        auto pieces = pieces_at(d, gamma);
        if (std::all_of(pieces.parts.begin(), pieces.parts.end(), [k](SubDiagram const& p) {
              return number_of_simple_components(p.diagram) < k;
            })) {
          return cut_step(d, walk, gamma, pieces);
        }
      }
      throw std::logic_error("no cut vertex separates the simple components");
    }

    void require_certifiable(Diagram const& d) {
      if (auto verdict = is_adian(d.presentation()); !verdict) {
        throw DiagramError(DiagramError::Kind::not_adian,
                           "the presentation is not Adian: " + describe(*verdict.witness));
      }
      if (auto report = validate(d); !report.ok()) {
        throw DiagramError(DiagramError::Kind::precondition,
                           "invalid diagram: " + to_string(report.violations.front()));
      }
      if (d.darts().empty()) {
        throw CertificateError(CertificateError::Kind::empty_subject,
                               "the diagram is a single vertex and its boundary word is empty");
      }
    }

  }  // namespace

  Certificate witness_from(Diagram const& d, DartId start) {
    require_certifiable(d);
    return certify(d, start);
  }

  Certificate witness_simple_component(Diagram const& d, VertexId from) {
    require_certifiable(d);
    if (number_of_simple_components(d) != 1) {
      throw DiagramError(DiagramError::Kind::precondition,
                         "expected exactly one simple component");
    }
    return certify(d, boundary_walk(d, from).front());
  }

  WitnessReport witness_idempotent(Diagram const& d) {
    require_certifiable(d);
    auto c = certify(d, boundary_walk(d, d.base_vertex()).front());
    auto s = statistics(c);
    return {std::move(c), s};
  }

  WitnessReport witness_reversed(Diagram const& d) {
    require_certifiable(d);
    auto const walk = boundary_walk(d, d.base_vertex());
    auto       c    = certify(mirror(d), d.inverse(walk.back()));
    auto       s    = statistics(c);
    return {std::move(c), s};
  }

}  // namespace adian
