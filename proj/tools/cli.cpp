#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "leafcert/closure.hpp"
#include "leafcert/errors.hpp"
#include "leafcert/families.hpp"
#include "leafcert/graph6.hpp"
#include "leafcert/structure.hpp"
#include "report_json.hpp"

namespace leafcert {
namespace {

// A graph6 argument may be the encoding itself, a file holding it on its
// first non-empty line, or "-" for standard input.
std::string read_graph_argument(const std::string& arg, std::istream& in) {
  auto first_line = [](std::istream& s) {
    std::string line;
    while (std::getline(s, line)) {
      if (!line.empty() && line != ">>graph6<<") return line;
    }
    throw ArgumentError("no graph6 line in input");
  };
  if (arg == "-") return first_line(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    return first_line(file);
  }
  return arg;
}

std::vector<std::string> read_corpus_argument(const std::string& arg,
                                              std::istream& in) {
  if (arg == "-") return read_corpus(in);
  std::ifstream file(arg);
  if (!file) throw ArgumentError("cannot open corpus file " + arg);
  return read_corpus(file);
}

struct Options {
  std::string graph;
  long l = 0;
  std::size_t k = 2;
  bool witnesses = false;
  std::string corpus;
  std::size_t k_min = 2;
  std::size_t k_max = 2;
  std::size_t oracle_limit = 9;
  std::string format = "json";
  bool reproducible = false;
  std::string family;
  std::size_t n = 0;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"leafcert: topological-index certificates for k-leaf-connected graphs"};
  app.require_subcommand(1);
  Options opt;

  auto* indices = app.add_subcommand("indices", "Print the index report of a graph");
  indices->add_option("graph", opt.graph, "graph6 string, file, or -")->required();

  auto* closure = app.add_subcommand("closure", "Print the l-closure trace");
  closure->add_option("graph", opt.graph, "graph6 string, file, or -")->required();
  closure->add_option("--l", opt.l, "Degree-sum threshold")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Run every sufficient condition");
  certify_cmd->add_option("graph", opt.graph, "graph6 string, file, or -")->required();
  certify_cmd->add_option("--k", opt.k, "Leaf count")->required();

  auto* oracle = app.add_subcommand("oracle", "Decide k-leaf-connectivity exhaustively");
  oracle->add_option("graph", opt.graph, "graph6 string, file, or -")->required();
  oracle->add_option("--k", opt.k, "Leaf count")->required();
  oracle->add_flag("--witnesses", opt.witnesses, "Emit a spanning tree per k-set");

  auto* survey = app.add_subcommand("survey", "Certify and cross-check a graph6 corpus");
  survey->add_option("corpus", opt.corpus, "graph6 file, or -")->required();
  survey->add_option("--k-min", opt.k_min, "Smallest k")->required();
  survey->add_option("--k-max", opt.k_max, "Largest k")->required();
  survey->add_option("--oracle-limit", opt.oracle_limit, "Largest order given to the oracle");
  survey->add_option("--format", opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  survey->add_flag("--reproducible", opt.reproducible, "Omit timing fields");

  auto* gen = app.add_subcommand("gen", "Print a named construction as graph6");
  gen->add_option("--family", opt.family, "Family name")->required();
  gen->add_option("--n", opt.n, "Order")->required();
  gen->add_option("--k", opt.k, "Leaf parameter");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*indices) {
      const Graph g = from_graph6(read_graph_argument(opt.graph, in));
      out << to_json(compute_indices(g)).dump(2) << '\n';
    } else if (*closure) {
      const Graph g = from_graph6(read_graph_argument(opt.graph, in));
      out << to_json(l_closure(g, opt.l)).dump(2) << '\n';
    } else if (*certify_cmd) {
      const Graph g = from_graph6(read_graph_argument(opt.graph, in));
      out << to_json(certify(g, opt.k)).dump(2) << '\n';
    } else if (*oracle) {
      const Graph g = from_graph6(read_graph_argument(opt.graph, in));
      if (g.order() > kDefaultOracleLimit && g.order() <= kCliOracleHardLimit) {
        err << "warning: exhaustive oracle on " << g.order()
            << " vertices may take a long time\n";
      }
      OracleOptions oracle_options;
      oracle_options.max_order = kCliOracleHardLimit;
      oracle_options.collect_witnesses = opt.witnesses;
      const auto start = std::chrono::steady_clock::now();
      const LeafDecision d = is_k_leaf_connected(g, opt.k, oracle_options);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      out << oracle_json(g, opt.k, d, static_cast<long>(ms)).dump(2) << '\n';
    } else if (*survey) {
      SurveyOptions survey_options;
      survey_options.k_min = opt.k_min;
      survey_options.k_max = opt.k_max;
      survey_options.oracle_limit = opt.oracle_limit;
      const SurveyReport report =
          run_survey(read_corpus_argument(opt.corpus, in), survey_options);
      if (opt.format == "csv") {
        out << survey_csv(report);
      } else {
        out << to_json(report, survey_options, opt.reproducible).dump(2) << '\n';
      }
    } else if (*gen) {
      const auto family = parse_family(opt.family);
      if (!family) throw ArgumentError("unknown family " + opt.family);
      out << to_graph6(build({*family, opt.n, opt.k})) << '\n';
    }
  } catch (const LimitError& e) {
    err << "limit error: " << e.what() << '\n';
    return kExitLimitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace leafcert
