#include "adian/munn.hpp"

#include <algorithm>  // for sort
#include <limits>     // for numeric_limits
#include <map>        // for map
#include <queue>      // for queue
#include <tuple>      // for tuple
#include <utility>    // for pair

#include "adian/error.hpp"

namespace adian {

  SignedWord free_reduce(SignedWord const& w) {
    SignedWord stack;
    stack.reserve(w.size());
    for (auto const& x : w) {
      if (!stack.empty() && stack.back().letter == x.letter
          && stack.back().sign == -x.sign) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return stack;
  }

  bool is_dyck(SignedWord const& w) {
    return free_reduce(w).empty();
  }

  bool is_pp_inverse(SignedWord const& w) {
    if (w.empty() || w.size() % 2 != 0) {
      return false;
    }
    std::size_t const n = w.size() / 2;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[n + i] != w[n - 1 - i].inverse()) {
        return false;
      }
    }
    return true;
  }

  MunnTree munn_tree(SignedWord const& w) {
    if (w.empty()) {
      throw Error("the Munn tree of the empty word is not an element of a semigroup");
    }
    MunnTree                                                t;
    std::map<std::pair<std::size_t, Letter>, std::size_t> out, in;
    t.number_of_vertices = 1;
    std::size_t current  = 0;
    for (auto const& x : w) {
      auto& forward  = x.positive() ? out : in;
      auto& backward = x.positive() ? in : out;
      auto  it       = forward.find({current, x.letter});
      if (it != forward.end()) {
        current = it->second;
        continue;
      }
      std::size_t const next = t.number_of_vertices++;
      forward.emplace(std::make_pair(current, x.letter), next);
      backward.emplace(std::make_pair(next, x.letter), current);
      if (x.positive()) {
        t.edges.push_back({current, x.letter, next});
      } else {
        t.edges.push_back({next, x.letter, current});
      }
      current = next;
    }
    t.end_root = current;
    return t;
  }

  MunnTree canonical(MunnTree const& t) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    // (letter, direction, neighbour); direction 0 = outgoing, 1 = incoming.
    std::vector<std::vector<std::tuple<Letter, int, std::size_t>>> adj(
        t.number_of_vertices);
    for (auto const& e : t.edges) {
      adj[e.from].emplace_back(e.letter, 0, e.to);
      adj[e.to].emplace_back(e.letter, 1, e.from);
    }
    std::vector<std::size_t> label(t.number_of_vertices, unset);
    std::size_t              next = 0;
    std::queue<std::size_t>  q;
    label[t.start_root] = next++;
    q.push(t.start_root);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      auto nbrs = adj[v];
      std::sort(nbrs.begin(), nbrs.end());
      for (auto const& [letter, dir, u] : nbrs) {
        if (label[u] == unset) {
          label[u] = next++;
          q.push(u);
        }
      }
    }
    MunnTree result;
    result.number_of_vertices = t.number_of_vertices;
    result.start_root         = label[t.start_root];
    result.end_root           = label[t.end_root];
    for (auto const& e : t.edges) {
      result.edges.push_back({label[e.from], e.letter, label[e.to]});
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
  }

  bool fim_idempotent(SignedWord const& w) {
    auto const t = munn_tree(w);
    return t.start_root == t.end_root;
  }

}  // namespace adian
