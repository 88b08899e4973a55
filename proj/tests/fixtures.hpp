// Sample presentations and the random corpus shared by the tests.

#ifndef ADIAN_TESTS_FIXTURES_HPP_
#define ADIAN_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "adian/diagram.hpp"
#include "adian/presentation.hpp"

namespace fixture {

  inline adian::Presentation braid() {
    return adian::Presentation({"a", "b"}, {{{"a", "b", "a"}, {"b", "a", "b"}}});
  }

  // {(ab, c), (ba, c)}
  inline adian::Presentation two_cells() {
    return adian::Presentation({"a", "b", "c"},
                               {{{"a", "b"}, {"c"}}, {{"b", "a"}, {"c"}}});
  }

  inline adian::Presentation abc_ba() {
    return adian::Presentation({"a", "b", "c"}, {{{"a", "b", "c"}, {"b", "a"}}});
  }

  inline adian::Presentation ab_c() {
    return adian::Presentation({"a", "b", "c"}, {{{"a", "b"}, {"c"}}});
  }

  // {(ab, cd), (cd, ef), (ef, gh)}
  inline adian::Presentation chain() {
    return adian::Presentation({"a", "b", "c", "d", "e", "f", "g", "h"},
                               {{{"a", "b"}, {"c", "d"}},
                                {{"c", "d"}, {"e", "f"}},
                                {{"e", "f"}, {"g", "h"}}});
  }

  inline std::vector<adian::Presentation> const& samples() {
    static std::vector<adian::Presentation> const all{braid(), two_cells(), abc_ba()};
    return all;
  }

  // Corpus member `seed`: up to 12 cells, cycling through the samples.
  inline adian::Diagram corpus(std::size_t seed) {
    return adian::random_diagram(samples()[seed % 3], 1 + seed % 12, seed);
  }

  inline constexpr std::size_t corpus_size = 500;

}  // namespace fixture

#endif  // ADIAN_TESTS_FIXTURES_HPP_
