// Exception types shared by every adian-kit module.

#ifndef ADIAN_ERROR_HPP_
#define ADIAN_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace adian {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text: JSON syntax, bad tokens in a word.  Line and column are
  // 1-based; both are 0 when the position is unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(msg), line_(line), column_(column) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  class PresentationError : public Error {
   public:
    enum class Kind {
      schema,
      empty_alphabet,
      bad_letter,
      duplicate_letter,
      empty_side,
      unknown_letter,
      bad_relation_index
    };

    PresentationError(Kind kind, std::string const& msg)
        : Error(msg), kind_(kind) {}

    Kind kind() const noexcept {
      return kind_;
    }

   private:
    Kind kind_;
  };

  class DiagramError : public Error {
   public:
    enum class Kind {
      malformed,
      label_mismatch,
      mirror_pair,
      not_on_boundary,
      precondition,
      not_adian
    };

    DiagramError(Kind kind, std::string const& msg) : Error(msg), kind_(kind) {}

    Kind kind() const noexcept {
      return kind_;
    }

   private:
    Kind kind_;
  };

  class CertificateError : public Error {
   public:
    enum class Kind { schema, unsupported_version, empty_subject };

    CertificateError(Kind kind, std::string const& msg)
        : Error(msg), kind_(kind) {}

    Kind kind() const noexcept {
      return kind_;
    }

   private:
    Kind kind_;
  };

}  // namespace adian

#endif  // ADIAN_ERROR_HPP_
