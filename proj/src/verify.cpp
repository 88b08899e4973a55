// The verifier reads nothing but words, free reduction and the relations.

#include <vector>  // for vector

#include "adian/munn.hpp"
#include "adian/presentation.hpp"
#include "adian/witness.hpp"
#include "adian/word.hpp"

namespace adian {

  namespace {

    Verdict reject(std::string locus, std::string reason) {
      return Verdict{false, std::move(locus), std::move(reason)};
    }

    std::string child_locus(std::string const& locus, std::size_t i) {
      return locus + ".children[" + std::to_string(i) + "]";
    }

    Verdict check(Certificate const& c, Presentation const& p, std::string const& locus);

    Verdict check_children(Certificate const& c,
                           Presentation const& p,
                           std::string const&  locus) {
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        if (auto v = check(c.children[i], p, child_locus(locus, i)); !v) {
          return v;
        }
      }
      return {};
    }

    Verdict check_step(Certificate const& c, DyckBase const&, Presentation const&,
                       std::string const& locus) {
      if (!c.children.empty()) {
        return reject(locus, "dyck_base takes no children");
      }
      if (!is_dyck(c.subject)) {
        return reject(locus, "subject " + to_string(c.subject) + " reduces to "
                                 + to_string(free_reduce(c.subject)) + ", not to 1");
      }
      return {};
    }

    Verdict check_step(Certificate const& c, RelationSubst const& s, Presentation const& p,
                       std::string const& locus) {
      if (s.relation >= p.number_of_relations()) {
        return reject(locus, "unknown relation " + std::to_string(s.relation));
      }
      if (c.children.size() != 1) {
        return reject(locus, "relation_subst takes exactly one child");
      }
      auto const& r       = p.relation(s.relation);
      bool const  forward = s.direction == Direction::lhs_to_rhs;
      SignedWord  pattern = to_signed(forward ? r.lhs : r.rhs);
      SignedWord  image   = to_signed(forward ? r.rhs : r.lhs);
      if (s.inverted) {
        pattern = inverse(pattern);
        image   = inverse(image);
      }
      if (s.position > c.subject.size() || pattern.size() > c.subject.size() - s.position
          || slice(c.subject, s.position, s.position + pattern.size()) != pattern) {
        return reject(locus, to_string(pattern) + " does not occur at position "
                                 + std::to_string(s.position) + " of "
                                 + to_string(c.subject));
      }
      auto const rewritten = concat(
          concat(slice(c.subject, 0, s.position), image),
          slice(c.subject, s.position + pattern.size(), c.subject.size()));
      if (c.children[0].subject != rewritten) {
        return reject(locus, "child subject " + to_string(c.children[0].subject)
                                 + " is not the rewritten word " + to_string(rewritten));
      }
      return {};
    }

    // Ranges nonempty, inside the subject, sorted and disjoint.  Certified
    // children form first, first+1, ... in some order.
    Verdict check_factors(Certificate const&         c,
                          std::vector<Factor> const& factors,
                          std::size_t                first_child,
                          std::string const&         locus) {
      if (factors.empty()) {
        return reject(locus, "no factors");
      }
      std::size_t       previous = 0;
      std::size_t       certified = 0;
      std::vector<bool> used(c.children.size(), false);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto const&       f    = factors[i];
        std::string const here = locus + ".factors[" + std::to_string(i) + "]";
        if (f.start >= f.end || f.end > c.subject.size()) {
          return reject(here, "bad range [" + std::to_string(f.start) + ", "
                                  + std::to_string(f.end) + ")");
        }
        if (f.start < previous) {
          return reject(here, "factors overlap or are out of order");
        }
        previous = f.end;
        auto const piece = slice(c.subject, f.start, f.end);
        if (f.kind == Factor::Kind::pp_inverse) {
          if (!is_pp_inverse(piece)) {
            return reject(here, to_string(piece) + " is not of the form p p'");
          }
          continue;
        }
        ++certified;
        if (f.child < first_child || f.child >= c.children.size() || used[f.child]) {
          return reject(here, "bad child index " + std::to_string(f.child));
        }
        used[f.child] = true;
        if (c.children[f.child].subject != piece) {
          return reject(here, "child subject " + to_string(c.children[f.child].subject)
                                  + " is not the factor " + to_string(piece));
        }
      }
      if (c.children.size() != first_child + certified) {
        return reject(locus, "expected " + std::to_string(first_child + certified)
                                 + " children, found "
                                 + std::to_string(c.children.size()));
      }
      return {};
    }

    Verdict check_step(Certificate const& c, DropIdempotents const& s, Presentation const&,
                       std::string const& locus) {
      if (c.children.empty()) {
        return reject(locus, "drop_idempotents needs the remainder as first child");
      }
      if (auto v = check_factors(c, s.factors, 1, locus); !v) {
        return v;
      }
      SignedWord  remainder;
      std::size_t at = 0;
      for (auto const& f : s.factors) {
        remainder = concat(remainder, slice(c.subject, at, f.start));
        at        = f.end;
      }
      remainder = concat(remainder, slice(c.subject, at, c.subject.size()));
      if (remainder.empty()) {
        return reject(locus, "nothing remains after dropping the factors");
      }
      if (c.children[0].subject != remainder) {
        return reject(locus, "first child subject " + to_string(c.children[0].subject)
                                 + " is not the remainder " + to_string(remainder));
      }
      return {};
    }

    Verdict check_step(Certificate const& c, ProductOfIdempotents const& s, Presentation const&,
                       std::string const& locus) {
      if (auto v = check_factors(c, s.factors, 0, locus); !v) {
        return v;
      }
      std::size_t at = 0;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        auto const& f = s.factors[i];
        if (f.kind != Factor::Kind::certified) {
          return reject(locus + ".factors[" + std::to_string(i) + "]",
                        "every factor of a product must be certified");
        }
        if (f.start != at) {
          return reject(locus + ".factors[" + std::to_string(i) + "]",
                        "factors do not cover the subject");
        }
        at = f.end;
      }
      if (at != c.subject.size()) {
        return reject(locus, "factors do not cover the subject");
      }
      return {};
    }

    Verdict check(Certificate const& c, Presentation const& p, std::string const& locus) {
      if (c.subject.empty()) {
        return reject(locus, "empty subject");
      }
      for (auto const& x : c.subject) {
        if (!p.contains(x.letter) || (x.sign != 1 && x.sign != -1)) {
          return reject(locus, "subject letter " + to_string(x) + " is not in the alphabet");
        }
      }
      auto v = std::visit([&](auto const& s) { return check_step(c, s, p, locus); }, c.step);
      if (!v) {
        v.reason = kind_name(c.step) + ": " + v.reason;
        return v;
      }
      return check_children(c, p, locus);
    }

  }  // namespace

  Verdict verify(Certificate const& c, Presentation const& p) {
    return check(c, p, "root");
  }

}  // namespace adian
