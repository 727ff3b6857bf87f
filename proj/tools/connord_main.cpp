#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "connord/assembly.hpp"
#include "connord/canonical.hpp"
#include "connord/census.hpp"
#include "connord/generic_graph.hpp"
#include "connord/link.hpp"
#include "connord/pd.hpp"
#include "connord/space.hpp"
#include "connord/space_io.hpp"

namespace {

constexpr int kExitMalformed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotTreeLike = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw connord::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

connord::ConnectivitySpace load_space(const std::string& path) {
  const connord::SpaceFileData data =
      connord::parse_space_file(read_input(path));
  connord::Family family = data.sets;
  for (int p = 1; p <= data.n; ++p)
    family.push_back(connord::PointSet::single(p));
  return connord::ConnectivitySpace(data.n, std::move(family));
}

void add_file_arg(CLI::App* cmd, std::string& file) {
  cmd->add_option("FILE", file, "input file ('-' or omitted reads stdin)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite connectivity spaces and the connectivity order of links"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path = "-";
  int an_n = 0;
  int census_n = 0;
  bool census_labeled = false;
  bool dot = false;

  CLI::App* validate = app.add_subcommand(
      "validate", "check the connectivity axioms; exit 0 valid, 2 otherwise");
  add_file_arg(validate, file);

  CLI::App* order =
      app.add_subcommand("order", "connectivity order of the space");
  add_file_arg(order, file);

  CLI::App* irr = app.add_subcommand(
      "irreducibles", "irreducible connected subsets, one per line");
  add_file_arg(irr, file);

  CLI::App* graph =
      app.add_subcommand("graph", "generic graph in DOT digraph syntax");
  add_file_arg(graph, file);
  graph->add_flag("--dot", dot, "DOT output (the default and only format)");

  CLI::App* canon = app.add_subcommand(
      "canon", "canonical encoding, equal iff the spaces are isomorphic");
  add_file_arg(canon, file);

  CLI::App* an =
      app.add_subcommand("an", "write the space A_N, the unique space of "
                               "order N-1, as a space file");
  an->add_option("N", an_n, "number of points")->required();

  CLI::App* link_order = app.add_subcommand(
      "link-order",
      "connectivity order of a link given its nonsplittable sublinks "
      "(points = components, set = nonsplittable sublink)");
  add_file_arg(link_order, file);

  CLI::App* lk_bound = app.add_subcommand(
      "lk-bound", "space file of the linking-number lower bound for the "
                  "splittability structure");
  lk_bound->add_option("MATRIXFILE", file,
                       "matrix file: N, then N rows of N integers");

  CLI::App* realize = app.add_subcommand(
      "realize", "emit a link diagram whose splittability structure is the "
                 "given space; exit 3 if the space is not tree-like");
  add_file_arg(realize, file);
  realize->add_option("--pd", out_path, "output path for the PD text ('-' "
                                        "for stdout)");

  CLI::App* census = app.add_subcommand(
      "census", "enumerate structures on N points: order histogram plus a "
                "totals line");
  census->add_option("N", census_n, "ground-set size")->required();
  census->add_flag("--labeled", census_labeled,
                   "count labeled structures instead of isomorphism classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*validate) {
      const connord::SpaceFileData data =
          connord::parse_space_file(read_input(file));
      const connord::ValidationReport report =
          connord::validate_structure(data.n, data.sets);
      if (!report.valid()) {
        std::cout << report.describe() << "\n";
        return kExitInvalid;
      }
      std::cout << "valid\n";
    } else if (*order) {
      std::cout << load_space(file).order() << "\n";
    } else if (*irr) {
      const connord::ConnectivitySpace space = load_space(file);
      const connord::Family sets = space.irreducibles();
      const std::vector<int> orders = connord::detail::irreducible_orders(sets);
      for (std::size_t i = 0; i < sets.size(); ++i)
        std::cout << orders[i] << "\t" << sets[i].labels() << "\n";
    } else if (*graph) {
      std::cout << connord::generic_graph(load_space(file)).to_dot();
    } else if (*canon) {
      std::cout << connord::hex(connord::canonical_form(load_space(file)))
                << "\n";
    } else if (*an) {
      std::cout << connord::space_file_text(connord::make_an(an_n));
    } else if (*link_order) {
      const connord::SpaceFileData data =
          connord::parse_space_file(read_input(file));
      const connord::LinkDescription link{data.n, data.sets};
      std::cout << connord::connectivity_order_of_link(link) << "\n";
    } else if (*lk_bound) {
      const connord::LinkingMatrix matrix =
          connord::parse_matrix_file(read_input(file));
      std::cout << connord::space_file_text(connord::linking_lower_bound(matrix));
    } else if (*realize) {
      const connord::ConnectivitySpace space = load_space(file);
      const connord::AssemblyResult result =
          connord::assembly_from_space(space);
      if (!result.ok()) {
        std::cerr << "not tree-like: " << result.violation->describe() << "\n";
        return kExitNotTreeLike;
      }
      const std::string text = connord::pd_to_text(connord::pd_emit(*result.tree));
      if (out_path.empty() || out_path == "-") {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw connord::ParseError("cannot open '" + out_path + "'");
        out << text;
      }
    } else if (*census) {
      const connord::CensusReport report =
          connord::enumerate_structures(census_n, census_labeled);
      for (const auto& [ord, count] : report.order_histogram)
        std::cout << ord << "\t" << count << "\n";
      if (census_labeled)
        std::cout << "labeled\t" << report.labeled_count << "\n";
      else
        std::cout << "classes\t" << report.iso_classes.size() << "\n";
    }
  } catch (const connord::ValidationError& e) {
    std::cerr << e.report().describe() << "\n";
    return kExitInvalid;
  } catch (const connord::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
