#include <sstream>  // for ostringstream

#include "adian/diagram.hpp"
#include "adian/error.hpp"

#include "json_text.hpp"

namespace adian {

  using json = nlohmann::json;

  namespace {

    DiagramError malformed(std::string const& msg) {
      return DiagramError(DiagramError::Kind::malformed, msg);
    }

    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object() || !j.contains(key)) {
        throw malformed(where + ": missing \"" + key + "\"");
      }
      return j.at(key);
    }

    std::size_t index_field(json const& j, char const* key, std::string const& where) {
      auto const& v = field(j, key, where);
      if (!v.is_number_unsigned()) {
        throw malformed(where + ": \"" + key + "\" must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::vector<DartId> id_list(json const& j, char const* key, std::string const& where) {
      auto const& v = field(j, key, where);
      if (!v.is_array()) {
        throw malformed(where + ": \"" + key + "\" must be an array");
      }
      std::vector<DartId> result;
      for (auto const& x : v) {
        if (!x.is_number_unsigned()) {
          throw malformed(where + ": \"" + key + "\" must hold dart ids");
        }
        result.push_back(x.get<DartId>());
      }
      return result;
    }

    json const& array_field(json const& j, char const* key) {
      auto const& v = field(j, key, "diagram");
      if (!v.is_array()) {
        throw malformed(std::string("\"") + key + "\" must be an array");
      }
      return v;
    }

  }  // namespace

  json to_json(Diagram const& d) {
    json vertices = json::array(), darts = json::array(), faces = json::array();
    for (auto const& v : d.vertices()) {
      vertices.push_back({{"id", v.id}, {"rotation", v.rotation}});
    }
    for (auto const& x : d.darts()) {
      darts.push_back({{"id", x.id},
                       {"inverse", x.inverse},
                       {"letter", x.label.letter},
                       {"sign", x.label.sign},
                       {"tail", x.tail},
                       {"head", x.head}});
    }
    for (auto const& f : d.faces()) {
      json kind = "outer";
      if (!f.outer()) {
        kind = {{"cell",
                 {{"relation", f.cell->relation},
                  {"offset", f.cell->offset},
                  {"orientation", f.cell->orientation}}}};
      }
      faces.push_back({{"id", f.id}, {"kind", kind}, {"boundary", f.boundary}});
    }
    return {{"presentation", to_json(d.presentation())},
            {"vertices", vertices},
            {"darts", darts},
            {"faces", faces},
            {"base_vertex", d.base_vertex()}};
  }

  Diagram diagram_from_json(json const& j) {
    if (!j.is_object()) {
      throw malformed("a diagram must be a JSON object");
    }
    auto p = std::make_shared<Presentation const>(
        presentation_from_json(field(j, "presentation", "diagram")));

    std::vector<Vertex> vertices;
    for (auto const& v : array_field(j, "vertices")) {
      std::string const where = "vertex " + std::to_string(vertices.size());
      vertices.push_back({index_field(v, "id", where), id_list(v, "rotation", where)});
    }
    std::vector<Dart> darts;
    for (auto const& x : array_field(j, "darts")) {
      std::string const where  = "dart " + std::to_string(darts.size());
      auto const&       letter = field(x, "letter", where);
      auto const&       sign   = field(x, "sign", where);
      if (!letter.is_string()) {
        throw malformed(where + ": \"letter\" must be a string");
      }
      if (!sign.is_number_integer() || (sign.get<long>() != 1 && sign.get<long>() != -1)) {
        throw malformed(where + ": \"sign\" must be 1 or -1");
      }
      darts.push_back({index_field(x, "id", where),
                       index_field(x, "inverse", where),
                       {letter.get<std::string>(), static_cast<int>(sign.get<long>())},
                       index_field(x, "tail", where),
                       index_field(x, "head", where)});
    }
    std::vector<Face> faces;
    for (auto const& f : array_field(j, "faces")) {
      std::string const where = "face " + std::to_string(faces.size());
      auto const&       kind  = field(f, "kind", where);
      Face              face{index_field(f, "id", where), std::nullopt, id_list(f, "boundary", where)};
      if (kind.is_object() && kind.size() == 1 && kind.contains("cell")) {
        auto const& c           = kind.at("cell");
        auto const& orientation = field(c, "orientation", where);
        if (!orientation.is_number_integer()) {
          throw malformed(where + ": \"orientation\" must be 1 or -1");
        }
        face.cell = CellKind{index_field(c, "relation", where),
                             index_field(c, "offset", where),
                             static_cast<int>(orientation.get<long>())};
      } else if (kind != "outer") {
        throw malformed(where + ": \"kind\" must be \"outer\" or {\"cell\": {...}}");
      }
      faces.push_back(std::move(face));
    }
    return Diagram(std::move(p),
                   std::move(vertices),
                   std::move(darts),
                   std::move(faces),
                   index_field(j, "base_vertex", "diagram"));
  }

  Diagram parse_diagram(std::string_view text) {
    return diagram_from_json(detail::parse_json(text));
  }

  std::string render_dot(Diagram const& d) {
    std::vector<bool> cut(d.number_of_vertices(), false);
    for (auto v : cut_vertices(d)) {
      cut[v] = true;
    }
    std::ostringstream out;
    out << "digraph diagram {\n";
    for (auto const& f : d.faces()) {
      out << "  // face " << f.id;
      if (f.outer()) {
        out << " outer";
      } else {
        out << " cell of relation " << f.cell->relation << " orientation "
            << f.cell->orientation << " offset " << f.cell->offset;
      }
      out << ": " << to_string(label(d, f.boundary)) << "\n";
    }
    out << "  node [shape=circle, label=\"\", width=0.15];\n";
    for (auto const& v : d.vertices()) {
      out << "  v" << v.id << " [tooltip=\"" << v.id << "\"";
      if (cut[v.id]) {
        out << ", shape=diamond";
      }
      if (v.id == d.base_vertex()) {
        out << ", peripheries=2, xlabel=\"O\"";
      }
      out << "];\n";
    }
    for (auto const& x : d.darts()) {
      if (x.label.positive()) {
        out << "  v" << x.tail << " -> v" << x.head << " [label=\"" << x.label.letter
            << "\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace adian
