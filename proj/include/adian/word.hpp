// Letters and words over X ∪ X⁻¹.
//
// Letters are string tokens.  The textual form of a signed word separates
// letters by whitespace and marks an inverse letter with a trailing `'`, so
// "a b' a" is a b⁻¹ a.

#ifndef ADIAN_WORD_HPP_
#define ADIAN_WORD_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

namespace adian {

  using Letter       = std::string;
  using PositiveWord = std::vector<Letter>;

  struct SignedLetter {
    Letter letter;
    int    sign = 1;  // +1 or -1

    bool positive() const noexcept {
      return sign > 0;
    }

    SignedLetter inverse() const {
      return {letter, -sign};
    }

    friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
    friend std::strong_ordering operator<=>(SignedLetter const&,
                                            SignedLetter const&)
        = default;
  };

  using SignedWord = std::vector<SignedLetter>;

  // A letter token is nonempty, has no whitespace, and contains no `'`.
  bool is_letter_token(std::string_view token) noexcept;

  SignedWord to_signed(PositiveWord const& w);

  // Formal inverse: reverse the word and flip every sign.
  SignedWord inverse(SignedWord const& w);

  SignedWord concat(SignedWord const& x, SignedWord const& y);

  // Subword [first, last).
  SignedWord slice(SignedWord const& w, std::size_t first, std::size_t last);

  std::string to_string(SignedLetter const& x);
  std::string to_string(SignedWord const& w);

  // Throws ParseError on a bad token; the empty string gives the empty word.
  SignedWord parse_word(std::string_view text);

}  // namespace adian

#endif  // ADIAN_WORD_HPP_
