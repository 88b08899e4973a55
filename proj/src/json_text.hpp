#ifndef ADIAN_SRC_JSON_TEXT_HPP_
#define ADIAN_SRC_JSON_TEXT_HPP_

#include <string_view>  // for string_view

#include "json.hpp"  // for nlohmann::json

namespace adian::detail {

  // Throws ParseError carrying the 1-based line and column of a syntax error.
  nlohmann::json parse_json(std::string_view text);

}  // namespace adian::detail

#endif  // ADIAN_SRC_JSON_TEXT_HPP_
