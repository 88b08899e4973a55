// Independent reference implementations used by the tests.  None of these
// call into the library code they are compared against.

#ifndef ADIAN_TESTS_ORACLES_HPP_
#define ADIAN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adian/munn.hpp"
#include "adian/presentation.hpp"
#include "adian/witness.hpp"

namespace oracle {

  using Token  = std::string;  // "a" or "a'"
  using Tokens = std::vector<Token>;

  inline Token invert(Token const& t) {
    return t.back() == '\'' ? t.substr(0, t.size() - 1) : t + "'";
  }

  inline Tokens tokens(adian::SignedWord const& w) {
    Tokens result;
    for (auto const& x : w) {
      result.push_back(x.sign > 0 ? x.letter : x.letter + "'");
    }
    return result;
  }

  inline Tokens tokens(adian::PositiveWord const& w) {
    return Tokens(w.begin(), w.end());
  }

  inline Tokens invert(Tokens const& w) {
    Tokens result;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(invert(*it));
    }
    return result;
  }

  // Deletes the leftmost cancelling pair until none is left.
  inline Tokens reduce(Tokens w) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i + 1] == invert(w[i])) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline Tokens stack_reduce(Tokens const& w) {
    Tokens stack;
    for (auto const& t : w) {
      if (!stack.empty() && stack.back() == invert(t)) {
        stack.pop_back();
      } else {
        stack.push_back(t);
      }
    }
    return stack;
  }

  // Forest test on a multigraph given as endpoint pairs: every edge subset S
  // must satisfy |S| = |V(S)| - c(S), components found by depth-first search.
  inline bool is_forest(std::vector<std::pair<std::string, std::string>> const& edges) {
    std::size_t const m = edges.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      std::map<std::string, std::vector<std::string>> adj;
      std::size_t                                     count = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) {
          ++count;
          adj[edges[i].first].push_back(edges[i].second);
          adj[edges[i].second].push_back(edges[i].first);
        }
      }
      std::set<std::string> seen;
      std::size_t           components = 0;
      for (auto const& [v, _] : adj) {
        if (seen.contains(v)) {
          continue;
        }
        ++components;
        std::vector<std::string> stack{v};
        seen.insert(v);
        while (!stack.empty()) {
          auto u = stack.back();
          stack.pop_back();
          for (auto const& w : adj[u]) {
            if (seen.insert(w).second) {
              stack.push_back(w);
            }
          }
        }
      }
      if (count != adj.size() - components) {
        return false;
      }
    }
    return true;
  }

  inline bool adian(adian::Presentation const& p) {
    std::vector<std::pair<std::string, std::string>> left, right;
    for (auto const& r : p.relations()) {
      left.emplace_back(r.lhs.front(), r.rhs.front());
      right.emplace_back(r.lhs.back(), r.rhs.back());
    }
    return is_forest(left) && is_forest(right);
  }

  // Stallings folding of the path spelling w, merging in random order.
  inline adian::MunnTree fold(adian::SignedWord const& w, std::mt19937_64& rng) {
    struct E {
      std::size_t from;
      std::string letter;
      std::size_t to;
    };
    std::vector<E> edges;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].sign > 0) {
        edges.push_back({i, w[i].letter, i + 1});
      } else {
        edges.push_back({i + 1, w[i].letter, i});
      }
    }
    std::vector<std::size_t> rep(w.size() + 1);
    for (std::size_t i = 0; i < rep.size(); ++i) {
      rep[i] = i;
    }
    auto find = [&rep](std::size_t x) {
      while (rep[x] != x) {
        x = rep[x];
      }
      return x;
    };
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> merges;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          if (edges[i].letter != edges[j].letter) {
            continue;
          }
          auto fi = find(edges[i].from), fj = find(edges[j].from);
          auto ti = find(edges[i].to), tj = find(edges[j].to);
          if (fi == fj && ti != tj) {
            merges.emplace_back(ti, tj);
          } else if (ti == tj && fi != fj) {
            merges.emplace_back(fi, fj);
          }
        }
      }
      if (merges.empty()) {
        break;
      }
      auto [x, y] = merges[rng() % merges.size()];
      rep[find(x)] = find(y);
    }
    std::map<std::size_t, std::size_t> id;
    auto                               number = [&](std::size_t v) {
      auto r = find(v);
      return id.emplace(r, id.size()).first->second;
    };
    adian::MunnTree t;
    t.start_root = number(0);
    std::set<std::tuple<std::size_t, std::string, std::size_t>> seen;
    for (auto const& e : edges) {
      auto key = std::make_tuple(number(e.from), e.letter, number(e.to));
      if (seen.insert(key).second) {
        t.edges.push_back({std::get<0>(key), e.letter, std::get<2>(key)});
      }
    }
    t.end_root           = number(w.size());
    t.number_of_vertices = id.size();
    return t;
  }

  // Certificate checker over token strings.  Returns true iff every side
  // condition holds; shares no code with adian::verify.
  inline bool accepts(adian::Certificate const& c, adian::Presentation const& p) {
    Tokens const s = tokens(c.subject);
    if (s.empty()) {
      return false;
    }
    for (auto const& t : s) {
      std::string const letter = t.back() == '\'' ? t.substr(0, t.size() - 1) : t;
      if (!p.contains(letter)) {
        return false;
      }
    }
    auto sub = [&s](std::size_t a, std::size_t b) {
      return Tokens(s.begin() + static_cast<long>(a), s.begin() + static_cast<long>(b));
    };
    auto child_tokens = [&c](std::size_t i) { return tokens(c.children[i].subject); };
    bool ok           = false;

    if (std::holds_alternative<adian::DyckBase>(c.step)) {
      ok = c.children.empty() && reduce(s).empty();
    } else if (auto const* r = std::get_if<adian::RelationSubst>(&c.step)) {
      if (r->relation < p.number_of_relations() && c.children.size() == 1) {
        auto const& rel  = p.relation(r->relation);
        bool const  lr   = r->direction == adian::Direction::lhs_to_rhs;
        Tokens      from = tokens(lr ? rel.lhs : rel.rhs);
        Tokens      to   = tokens(lr ? rel.rhs : rel.lhs);
        if (r->inverted) {
          from = invert(from);
          to   = invert(to);
        }
        if (r->position <= s.size() && from.size() <= s.size() - r->position
            && sub(r->position, r->position + from.size()) == from) {
          Tokens expect = sub(0, r->position);
          expect.insert(expect.end(), to.begin(), to.end());
          auto rest = sub(r->position + from.size(), s.size());
          expect.insert(expect.end(), rest.begin(), rest.end());
          ok = child_tokens(0) == expect;
        }
      }
    } else {
      bool const  drop    = std::holds_alternative<adian::DropIdempotents>(c.step);
      auto const& factors = drop ? std::get<adian::DropIdempotents>(c.step).factors
                                 : std::get<adian::ProductOfIdempotents>(c.step).factors;
      std::size_t const offset = drop ? 1 : 0;
      ok                       = !factors.empty() && c.children.size() >= offset;
      std::set<std::size_t> children;
      Tokens                remainder;
      std::size_t           at = 0;
      for (auto const& f : factors) {
        if (!ok || f.start < at || f.start >= f.end || f.end > s.size()) {
          ok = false;
          break;
        }
        if (!drop && f.start != at) {
          ok = false;
          break;
        }
        auto gap = sub(at, f.start);
        remainder.insert(remainder.end(), gap.begin(), gap.end());
        auto piece = sub(f.start, f.end);
        at         = f.end;
        if (f.kind == adian::Factor::Kind::pp_inverse) {
          std::size_t const n = piece.size() / 2;
          ok = drop && piece.size() % 2 == 0
               && Tokens(piece.begin() + static_cast<long>(n), piece.end())
                      == invert(Tokens(piece.begin(), piece.begin() + static_cast<long>(n)));
          continue;
        }
        ok = f.child >= offset && f.child < c.children.size() && children.insert(f.child).second
             && child_tokens(f.child) == piece;
      }
      auto tail = sub(std::min(at, s.size()), s.size());
      remainder.insert(remainder.end(), tail.begin(), tail.end());
      ok = ok && children.size() + offset == c.children.size();
      if (drop) {
        ok = ok && !remainder.empty() && child_tokens(0) == remainder;
      } else {
        ok = ok && at == s.size();
      }
    }
    if (!ok) {
      return false;
    }
    return std::all_of(c.children.begin(), c.children.end(), [&p](auto const& child) {
      return accepts(child, p);
    });
  }

}  // namespace oracle

#endif  // ADIAN_TESTS_ORACLES_HPP_
