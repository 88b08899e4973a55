#include "adian/word.hpp"

#include <algorithm>  // for any_of, reverse
#include <cctype>     // for isspace

#include "adian/error.hpp"

namespace adian {

  bool is_letter_token(std::string_view token) noexcept {
    if (token.empty()) {
      return false;
    }
    return std::none_of(token.begin(), token.end(), [](char c) {
      return c == '\'' || std::isspace(static_cast<unsigned char>(c));
    });
  }

  SignedWord to_signed(PositiveWord const& w) {
    SignedWord result;
    result.reserve(w.size());
    for (auto const& x : w) {
      result.push_back({x, 1});
    }
    return result;
  }

  SignedWord inverse(SignedWord const& w) {
    SignedWord result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(it->inverse());
    }
    return result;
  }

  SignedWord concat(SignedWord const& x, SignedWord const& y) {
    SignedWord result(x);
    result.insert(result.end(), y.begin(), y.end());
    return result;
  }

  SignedWord slice(SignedWord const& w, std::size_t first, std::size_t last) {
    return SignedWord(w.begin() + first, w.begin() + last);
  }

  std::string to_string(SignedLetter const& x) {
    return x.positive() ? x.letter : x.letter + "'";
  }

  std::string to_string(SignedWord const& w) {
    std::string result;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        result += ' ';
      }
      result += to_string(w[i]);
    }
    return result;
  }

  SignedWord parse_word(std::string_view text) {
    SignedWord  result;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t const start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::string_view token = text.substr(start, i - start);
      int              sign  = 1;
      if (token.back() == '\'') {
        sign  = -1;
        token = token.substr(0, token.size() - 1);
      }
      if (!is_letter_token(token)) {
        throw ParseError("invalid letter token '"
                             + std::string(text.substr(start, i - start))
                             + "' at column " + std::to_string(start + 1),
                         1,
                         start + 1);
      }
      result.push_back({std::string(token), sign});
    }
    return result;
  }

}  // namespace adian
