// Certificates that a word is an idempotent of Inv⟨X | R⟩.
//
// A certificate is a tree.  Each node names a word (its subject) and a step
// explaining why the subject is idempotent provided its children are:
//
//   dyck_base              the subject freely reduces to the empty word;
//   relation_subst         one occurrence of a relation side (or of its
//                          inverse) is replaced by the other side, and the
//                          single child has the rewritten word as subject;
//   drop_idempotents       the subject is x0 E1 x1 ... En xn where every Ei is
//                          literally p p⁻¹ or has its own certificate, and
//                          children[0] certifies x0 x1 ... xn;
//   product_of_idempotents the subject is E1 ... Ek, each Ei certified by a
//                          child.
//
// verify() checks every side condition itself and never trusts a rewritten
// word written in the certificate.

#ifndef ADIAN_WITNESS_HPP_
#define ADIAN_WITNESS_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "json.hpp"  // for nlohmann::json

#include "adian/diagram.hpp"
#include "adian/presentation.hpp"
#include "adian/word.hpp"

namespace adian {

  inline constexpr int certificate_version = 1;

  struct DyckBase {
    friend bool operator==(DyckBase const&, DyckBase const&) = default;
  };

  enum class Direction { lhs_to_rhs, rhs_to_lhs };

  struct RelationSubst {
    std::size_t relation  = 0;
    Direction   direction = Direction::lhs_to_rhs;
    std::size_t position  = 0;
    bool        inverted  = false;  // replace the inverse of one side by the other's

    friend bool operator==(RelationSubst const&, RelationSubst const&) = default;
  };

  // Subject positions [start, end).  A certified factor names its child.
  struct Factor {
    enum class Kind { pp_inverse, certified };
    Kind        kind  = Kind::certified;
    std::size_t start = 0;
    std::size_t end   = 0;
    std::size_t child = 0;

    friend bool operator==(Factor const&, Factor const&) = default;
  };

  // Certified factors use children 1..n; children[0] is the remainder.
  struct DropIdempotents {
    std::vector<Factor> factors;

    friend bool operator==(DropIdempotents const&, DropIdempotents const&) = default;
  };

  // Every factor is certified; children 0..k-1.
  struct ProductOfIdempotents {
    std::vector<Factor> factors;

    friend bool operator==(ProductOfIdempotents const&, ProductOfIdempotents const&)
        = default;
  };

  using Step = std::variant<DyckBase, RelationSubst, DropIdempotents, ProductOfIdempotents>;

  std::string kind_name(Step const& s);

  struct Certificate {
    SignedWord               subject;
    Step                     step;
    std::vector<Certificate> children;

    friend bool operator==(Certificate const&, Certificate const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  struct Verdict {
    bool        accepted = true;
    std::string locus;  // e.g. "root.children[1]" for the failing node
    std::string reason;

    explicit operator bool() const noexcept {
      return accepted;
    }
  };

  // Malformed certificates (bad positions, unknown relations, wrong child
  // counts) are rejected rather than thrown.
  Verdict verify(Certificate const& c, Presentation const& p);

  ////////////////////////////////////////////////////////////////////////
  // Generation
  ////////////////////////////////////////////////////////////////////////

  struct WitnessStatistics {
    std::size_t nodes                  = 0;
    std::size_t depth                  = 0;
    std::size_t dyck_base              = 0;
    std::size_t relation_subst         = 0;
    std::size_t drop_idempotents       = 0;
    std::size_t product_of_idempotents = 0;

    friend bool operator==(WitnessStatistics const&, WitnessStatistics const&) = default;
  };

  WitnessStatistics statistics(Certificate const& c);

  struct WitnessReport {
    Certificate       certificate;
    WitnessStatistics statistics;
  };

  // Certificate for the boundary word read from the walk dart `start`.
  // Requires a valid diagram over an Adian presentation whose boundary
  // word is nonempty; throws CertificateError (empty_subject) for a
  // one-vertex diagram and DiagramError (not_adian) for a presentation that
  // is not Adian.
  Certificate witness_from(Diagram const& d, DartId start);

  // Certificate for boundary_word(d, from) when d has one simple
  // component, possibly with trees attached.
  Certificate witness_simple_component(Diagram const& d, VertexId from);

  // Certificate for boundary_word(d).
  WitnessReport witness_idempotent(Diagram const& d);

  // Certificate for the inverse of boundary_word(d), read from the mirror
  // image of d.
  WitnessReport witness_reversed(Diagram const& d);

  ////////////////////////////////////////////////////////////////////////
  // Input and output
  ////////////////////////////////////////////////////////////////////////

  // The version field is written on the root only.
  nlohmann::json certificate_to_json(Certificate const& c);

  // Throws CertificateError: schema, unsupported_version, empty_subject.
  Certificate certificate_from_json(nlohmann::json const& j);
  Certificate parse_certificate(std::string_view text);

}  // namespace adian

#endif  // ADIAN_WITNESS_HPP_
