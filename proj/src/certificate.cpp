#include <algorithm>  // for max

#include "adian/error.hpp"
#include "adian/witness.hpp"

#include "json_text.hpp"

namespace adian {

  using json = nlohmann::json;

  namespace {

    template <typename... F>
    struct overloaded : F... {
      using F::operator()...;
    };

    CertificateError schema(std::string const& where, std::string const& msg) {
      return CertificateError(CertificateError::Kind::schema, where + ": " + msg);
    }

    json factors_to_json(std::vector<Factor> const& factors) {
      json result = json::array();
      for (auto const& f : factors) {
        if (f.kind == Factor::Kind::pp_inverse) {
          result.push_back({{"kind", "pp_inverse"}, {"start", f.start}, {"end", f.end}});
        } else {
          result.push_back({{"kind", "certified"},
                            {"start", f.start},
                            {"end", f.end},
                            {"child", f.child}});
        }
      }
      return result;
    }

    json node_to_json(Certificate const& c) {
      json step = std::visit(
          overloaded{[](DyckBase const&) { return json{{"kind", "dyck_base"}}; },
                     [](RelationSubst const& s) {
                       return json{{"kind", "relation_subst"},
                                   {"relation", s.relation},
                                   {"direction",
                                    s.direction == Direction::lhs_to_rhs ? "lhs_to_rhs"
                                                                         : "rhs_to_lhs"},
                                   {"position", s.position},
                                   {"inverted", s.inverted}};
                     },
                     [](DropIdempotents const& s) {
                       return json{{"kind", "drop_idempotents"},
                                   {"factors", factors_to_json(s.factors)}};
                     },
                     [](ProductOfIdempotents const& s) {
                       return json{{"kind", "product_of_idempotents"},
                                   {"factors", factors_to_json(s.factors)}};
                     }},
          c.step);
      json children = json::array();
      for (auto const& child : c.children) {
        children.push_back(node_to_json(child));
      }
      return {{"subject", to_string(c.subject)}, {"step", step}, {"children", children}};
    }

    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        throw schema(where, std::string("missing \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t index(json const& j, char const* key, std::string const& where) {
      auto const& v = field(j, key, where);
      if (!v.is_number_unsigned()) {
        throw schema(where, std::string("\"") + key + "\" must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::vector<Factor> factors_from_json(json const& j, std::string const& where) {
      auto const& list = field(j, "factors", where);
      if (!list.is_array()) {
        throw schema(where, "\"factors\" must be an array");
      }
      std::vector<Factor> result;
      for (auto const& f : list) {
        std::string const here = where + ".factors[" + std::to_string(result.size()) + "]";
        auto const&       kind = field(f, "kind", here);
        Factor            factor;
        factor.start = index(f, "start", here);
        factor.end   = index(f, "end", here);
        if (kind == "pp_inverse") {
          factor.kind = Factor::Kind::pp_inverse;
        } else if (kind == "certified") {
          factor.kind  = Factor::Kind::certified;
          factor.child = index(f, "child", here);
        } else {
          throw schema(here, "unknown factor kind");
        }
        result.push_back(factor);
      }
      return result;
    }

    Step step_from_json(json const& j, std::string const& where) {
      auto const& kind = field(j, "kind", where);
      if (kind == "dyck_base") {
        return DyckBase{};
      }
      if (kind == "relation_subst") {
        auto const& direction = field(j, "direction", where);
        auto const& inverted  = field(j, "inverted", where);
        if (direction != "lhs_to_rhs" && direction != "rhs_to_lhs") {
          throw schema(where, "\"direction\" must be \"lhs_to_rhs\" or \"rhs_to_lhs\"");
        }
        if (!inverted.is_boolean()) {
          throw schema(where, "\"inverted\" must be a boolean");
        }
        return RelationSubst{index(j, "relation", where),
                             direction == "lhs_to_rhs" ? Direction::lhs_to_rhs
                                                       : Direction::rhs_to_lhs,
                             index(j, "position", where),
                             inverted.get<bool>()};
      }
      if (kind == "drop_idempotents") {
        return DropIdempotents{factors_from_json(j, where)};
      }
      if (kind == "product_of_idempotents") {
        return ProductOfIdempotents{factors_from_json(j, where)};
      }
      throw schema(where, "unknown step kind");
    }

    Certificate node_from_json(json const& j, std::string const& where) {
      auto const& subject = field(j, "subject", where);
      if (!subject.is_string()) {
        throw schema(where, "\"subject\" must be a string");
      }
      Certificate c;
      try {
        c.subject = parse_word(subject.get<std::string>());
      } catch (ParseError const& e) {
        throw schema(where, std::string("bad subject: ") + e.what());
      }
      if (c.subject.empty()) {
        throw CertificateError(CertificateError::Kind::empty_subject,
                               where + ": the empty word is not a semigroup element");
      }
      c.step                = step_from_json(field(j, "step", where), where + ".step");
      auto const& children = field(j, "children", where);
      if (!children.is_array()) {
        throw schema(where, "\"children\" must be an array");
      }
      for (auto const& child : children) {
        c.children.push_back(node_from_json(
            child, where + ".children[" + std::to_string(c.children.size()) + "]"));
      }
      return c;
    }

    void accumulate(Certificate const& c, std::size_t depth, WitnessStatistics& s) {
      ++s.nodes;
      s.depth = std::max(s.depth, depth);
      std::visit(overloaded{[&](DyckBase const&) { ++s.dyck_base; },
                            [&](RelationSubst const&) { ++s.relation_subst; },
                            [&](DropIdempotents const&) { ++s.drop_idempotents; },
                            [&](ProductOfIdempotents const&) { ++s.product_of_idempotents; }},
                 c.step);
      for (auto const& child : c.children) {
        accumulate(child, depth + 1, s);
      }
    }

  }  // namespace

  std::string kind_name(Step const& s) {
    return std::visit(
        overloaded{[](DyckBase const&) { return "dyck_base"; },
                   [](RelationSubst const&) { return "relation_subst"; },
                   [](DropIdempotents const&) { return "drop_idempotents"; },
                   [](ProductOfIdempotents const&) { return "product_of_idempotents"; }},
        s);
  }

  WitnessStatistics statistics(Certificate const& c) {
    WitnessStatistics s;
    accumulate(c, 1, s);
    return s;
  }

  json certificate_to_json(Certificate const& c) {
    json j = node_to_json(c);
    j["version"] = certificate_version;
    return j;
  }

  Certificate certificate_from_json(json const& j) {
    auto const& version = field(j, "version", "root");
    if (!version.is_number_integer()) {
      throw schema("root", "\"version\" must be an integer");
    }
    if (version.get<long>() != certificate_version) {
      throw CertificateError(CertificateError::Kind::unsupported_version,
                             "unsupported certificate version " + version.dump()
                                 + " (expected " + std::to_string(certificate_version)
                                 + ")");
    }
    return node_from_json(j, "root");
  }

  Certificate parse_certificate(std::string_view text) {
    json j;
    try {
      j = detail::parse_json(text);
    } catch (ParseError const& e) {
      throw CertificateError(CertificateError::Kind::schema, e.what());
    }
    return certificate_from_json(j);
  }

}  // namespace adian
