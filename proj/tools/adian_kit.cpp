// adian-kit: command line front end.
//
// Exit status: 0 for success or a true verdict, 1 for a false verdict (not
// Adian, invalid diagram, rejected certificate), 2 for usage, schema and I/O
// errors.  Results go to stdout, diagnostics to stderr.

#include <atomic>    // for atomic
#include <cstdlib>   // for getenv
#include <fstream>   // for ifstream, ofstream
#include <iostream>  // for cout, cerr
#include <sstream>   // for ostringstream
#include <thread>    // for thread

#include "CLI11.hpp"

#include "adian/diagram.hpp"
#include "adian/error.hpp"
#include "adian/munn.hpp"
#include "adian/presentation.hpp"
#include "adian/witness.hpp"

namespace {

  using json = nlohmann::json;
  using namespace adian;

  constexpr int exit_ok    = 0;
  constexpr int exit_false = 1;
  constexpr int exit_usage = 2;

  // Raised for anything that should end the run with status 2.
  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw UsageError("cannot write " + path);
    }
  }

  std::string where(ParseError const& e, std::string const& path) {
    return path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": "
           + e.what();
  }

  Presentation load_presentation(std::string const& path) {
    try {
      return parse_presentation(read_file(path));
    } catch (ParseError const& e) {
      throw UsageError(where(e, path));
    } catch (Error const& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  Diagram load_diagram(std::string const& path) {
    try {
      return parse_diagram(read_file(path));
    } catch (ParseError const& e) {
      throw UsageError(where(e, path));
    } catch (Error const& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  SignedWord word_argument(std::string const& text) {
    try {
      return parse_word(text);
    } catch (ParseError const& e) {
      throw UsageError(std::string("bad word: ") + e.what());
    }
  }

  json witness_json(CycleWitness const& w) {
    json edges = json::array();
    for (auto const& e : w.edges) {
      edges.push_back({{"first", e.first}, {"second", e.second}, {"relation", e.relation}});
    }
    return {{"graph", to_string(w.graph)},
            {"vertices", w.vertices},
            {"edges", edges},
            {"description", describe(w)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int adian_check(std::string const& path, bool graphs, bool as_json) {
    auto const p       = load_presentation(path);
    auto const verdict = is_adian(p);
    if (as_json) {
      json out = {{"adian", verdict.adian()}};
      if (verdict.witness) {
        out["witness"] = witness_json(*verdict.witness);
      }
      if (graphs) {
        out["left_graph"]  = to_json(left_graph(p));
        out["right_graph"] = to_json(right_graph(p));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (verdict ? "adian" : "not adian") << "\n";
      if (verdict.witness) {
        std::cout << "witness: " << describe(*verdict.witness) << "\n";
      }
      if (graphs) {
        std::cout << "left graph: " << to_json(left_graph(p)).dump() << "\n"
                  << "right graph: " << to_json(right_graph(p)).dump() << "\n";
      }
    }
    return verdict ? exit_ok : exit_false;
  }

  struct FileReport {
    int              status = exit_ok;
    std::string      error;
    ValidationReport report;
  };

  int diagram_validate(std::vector<std::string> const& paths, unsigned jobs, bool as_json) {
    std::vector<FileReport> results(paths.size());
    std::atomic<std::size_t> next{0};
    auto                     work = [&] {
      for (std::size_t i = next++; i < paths.size(); i = next++) {
        try {
          results[i].report = validate(load_diagram(paths[i]));
          results[i].status = results[i].report.ok() ? exit_ok : exit_false;
        } catch (UsageError const& e) {
          results[i].status = exit_usage;
          results[i].error  = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }

    int  status = exit_ok;
    json files  = json::array();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      auto const& r = results[i];
      status        = std::max(status, r.status);
      if (!r.error.empty()) {
        std::cerr << r.error << "\n";
      }
      if (as_json) {
        json violations = json::array();
        for (auto const& v : r.report.violations) {
          violations.push_back(
              {{"kind", to_string(v.kind)}, {"locus", v.locus}, {"message", v.message}});
        }
        files.push_back({{"file", paths[i]},
                         {"ok", r.status == exit_ok},
                         {"violations", violations}});
        if (!r.error.empty()) {
          files.back()["error"] = r.error;
        }
        continue;
      }
      if (r.status == exit_ok) {
        std::cout << paths[i] << ": ok\n";
      }
      for (auto const& v : r.report.violations) {
        std::cout << paths[i] << ": " << to_string(v) << "\n";
      }
    }
    if (as_json) {
      std::cout << json{{"files", files}}.dump(2) << "\n";
    }
    return status;
  }

  int diagram_render(std::string const& path, std::string const& out) {
    write_output(out, render_dot(load_diagram(path)));
    return exit_ok;
  }

  int diagram_random(std::string const& path,
                     std::size_t        cells,
                     std::uint64_t      seed,
                     std::string const& out,
                     bool               as_json) {
    auto const p = load_presentation(path);
    if (auto verdict = is_adian(p); !verdict) {
      throw UsageError("random diagrams need an Adian presentation: "
                       + describe(*verdict.witness));
    }
    auto const d = random_diagram(p, cells, seed);
    write_output(out, to_json(d).dump(2) + "\n");
    if (!out.empty() && out != "-") {
      if (as_json) {
        std::cout << json{{"output", out},
                          {"cells", d.number_of_cells()},
                          {"seed", seed},
                          {"boundary", to_string(boundary_word(d))}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "wrote " << d.number_of_cells() << " cells to " << out << "\n";
      }
    }
    return exit_ok;
  }

  int witness_generate(std::string const& path,
                       std::string const& out,
                       bool               reversed,
                       bool               as_json) {
    auto const d = load_diagram(path);
    if (auto verdict = is_adian(d.presentation()); !verdict) {
      throw UsageError("certificates need an Adian presentation: "
                       + describe(*verdict.witness));
    }
    if (d.darts().empty()) {
      std::cerr << path << ": the diagram is a single vertex; its boundary word is empty "
                << "and names no semigroup element\n";
      return exit_false;
    }
    if (auto report = validate(d); !report.ok()) {
      for (auto const& v : report.violations) {
        std::cerr << path << ": " << to_string(v) << "\n";
      }
      return exit_false;
    }
    auto const report = reversed ? witness_reversed(d) : witness_idempotent(d);
    write_output(out, certificate_to_json(report.certificate).dump(2) + "\n");
    auto const& s = report.statistics;
    if (as_json) {
      std::cout << json{{"subject", to_string(report.certificate.subject)},
                        {"nodes", s.nodes},
                        {"depth", s.depth},
                        {"dyck_base", s.dyck_base},
                        {"relation_subst", s.relation_subst},
                        {"drop_idempotents", s.drop_idempotents},
                        {"product_of_idempotents", s.product_of_idempotents}}
                       .dump(2)
                << "\n";
    } else if (!out.empty() && out != "-") {
      std::cout << "certified " << to_string(report.certificate.subject) << " with "
                << s.nodes << " steps, depth " << s.depth << "\n";
    }
    return exit_ok;
  }

  int witness_verify(std::string const& cert_path,
                     std::string const& presentation_path,
                     bool               as_json) {
    Certificate c;
    try {
      c = parse_certificate(read_file(cert_path));
    } catch (CertificateError const& e) {
      throw UsageError(cert_path + ": " + e.what());
    }
    auto const verdict = verify(c, load_presentation(presentation_path));
    if (as_json) {
      json out = {{"accepted", verdict.accepted}};
      if (!verdict) {
        out["locus"]  = verdict.locus;
        out["reason"] = verdict.reason;
      }
      std::cout << out.dump(2) << "\n";
    } else if (verdict) {
      std::cout << "accepted\n";
    } else {
      std::cout << "rejected at " << verdict.locus << ": " << verdict.reason << "\n";
    }
    return verdict ? exit_ok : exit_false;
  }

  int munn_reduce(std::string const& text, bool as_json) {
    auto const reduced = free_reduce(word_argument(text));
    if (as_json) {
      std::cout << json{{"reduced", to_string(reduced)}}.dump() << "\n";
    } else {
      std::cout << to_string(reduced) << "\n";
    }
    return exit_ok;
  }

  int munn_dyck(std::string const& text, bool as_json) {
    bool const dyck = is_dyck(word_argument(text));
    if (as_json) {
      std::cout << json{{"dyck", dyck}}.dump() << "\n";
    } else {
      std::cout << (dyck ? "true" : "false") << "\n";
    }
    return dyck ? exit_ok : exit_false;
  }

  std::uint64_t default_seed() {
    if (char const* env = std::getenv("ADIAN_KIT_SEED")) {
      try {
        return std::stoull(env);
      } catch (std::exception const&) {
        throw UsageError(std::string("ADIAN_KIT_SEED is not a number: ") + env);
      }
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adian presentations, van Kampen diagrams and idempotency certificates",
               "adian-kit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output on stdout");

  std::function<int()> action;
  std::string          in, in2, out, word;
  std::vector<std::string> files;
  bool                 graphs = false, reversed = false;
  unsigned             jobs   = 1;
  std::size_t          cells  = 1;
  std::optional<std::uint64_t> seed;

  auto* adian = app.add_subcommand("adian", "presentations")->require_subcommand(1);
  auto* check = adian->add_subcommand("check", "decide the Adian condition");
  check->add_option("presentation", in, "presentation JSON file")->required();
  check->add_flag("--graphs", graphs, "also print the left and right graphs");
  check->callback([&] { action = [&] { return adian_check(in, graphs, as_json); }; });

  auto* diagram  = app.add_subcommand("diagram", "van Kampen diagrams")->require_subcommand(1);
  auto* validate = diagram->add_subcommand("validate", "check diagram files");
  validate->add_option("diagrams", files, "diagram JSON files")->required();
  validate->add_option("--jobs", jobs, "files checked concurrently")->check(CLI::PositiveNumber);
  validate->callback([&] { action = [&] { return diagram_validate(files, jobs, as_json); }; });

  auto* render = diagram->add_subcommand("render", "write Graphviz DOT");
  render->add_option("diagram", in, "diagram JSON file")->required();
  render->add_option("-o,--output", out, "output file (default stdout)");
  render->callback([&] { action = [&] { return diagram_render(in, out); }; });

  auto* random = diagram->add_subcommand("random", "generate a random reduced diagram");
  random->add_option("presentation", in, "presentation JSON file")->required();
  random->add_option("--cells", cells, "number of cells")->required();
  random->add_option("--seed", seed, "seed (default $ADIAN_KIT_SEED, else 0)");
  random->add_option("-o,--output", out, "output file (default stdout)");
  random->callback([&] {
    action = [&] { return diagram_random(in, cells, seed ? *seed : default_seed(), out, as_json); };
  });

  auto* witness  = app.add_subcommand("witness", "idempotency certificates")->require_subcommand(1);
  auto* generate = witness->add_subcommand("generate", "certify a diagram's boundary word");
  generate->add_option("diagram", in, "diagram JSON file")->required();
  generate->add_option("-o,--output", out, "output file (default stdout)");
  generate->add_flag("--reversed", reversed, "certify the boundary read the other way round");
  generate->callback([&] {
    action = [&] { return witness_generate(in, out, reversed, as_json); };
  });

  auto* verify_cmd = witness->add_subcommand("verify", "check a certificate");
  verify_cmd->add_option("certificate", in, "certificate JSON file")->required();
  verify_cmd->add_option("presentation", in2, "presentation JSON file")->required();
  verify_cmd->callback([&] { action = [&] { return witness_verify(in, in2, as_json); }; });

  auto* munn   = app.add_subcommand("munn", "free inverse semigroup words")->require_subcommand(1);
  auto* reduce = munn->add_subcommand("reduce", "free reduction");
  reduce->add_option("word", word, "word such as \"a b' a\"")->required();
  reduce->callback([&] { action = [&] { return munn_reduce(word, as_json); }; });
  auto* dyck = munn->add_subcommand("dyck", "does the word reduce to 1");
  dyck->add_option("word", word, "word such as \"a b' a\"")->required();
  dyck->callback([&] { action = [&] { return munn_dyck(word, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  try {
    return action();
  } catch (UsageError const& e) {
    std::cerr << "adian-kit: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "adian-kit: internal error: " << e.what() << "\n";
    return exit_usage;
  }
}
