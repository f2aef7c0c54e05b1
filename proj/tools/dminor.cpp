// dminor: command-line front end.
//
// Exit codes: 0 success / found / valid, 1 absent / invalid, 2 search budget
// exhausted, 3 usage, parse or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dminor/connectivity.hpp"
#include "dminor/error.hpp"
#include "dminor/json_io.hpp"
#include "dminor/minor.hpp"
#include "dminor/pathdecomp.hpp"
#include "dminor/pathwidth.hpp"
#include "experiments.hpp"

namespace {

using namespace dminor;

constexpr int kError = 3;

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

Digraph load_graph(const std::string& path) {
  try {
    return parse_digraph(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(slurp(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed minors, path-decompositions and (Q,m,k)-digraphs"};
  app.require_subcommand(1);

  std::string family, graph_file, pattern_file, decomp_file, decomp_out, name;
  int size = 0, k = 0;
  std::uint64_t seed = 0;
  std::int64_t budget = -1;
  bool linked_flag = false;
  experiments::Params params;

  auto* gen = app.add_subcommand("gen", "Generate a digraph");
  gen->add_option("family", family, "transitive, cycle, super_tournament, stability_two, "
                                    "random_tournament, random_digraph")->required();
  gen->add_option("size", size)->required();
  gen->add_option("--seed", seed);

  auto* cls = app.add_subcommand("classify", "Report simple / semi-complete / tournament / acyclic");
  cls->add_option("graph", graph_file)->required();

  auto* pw = app.add_subcommand("pathwidth", "Exact path-width");
  pw->add_option("graph", graph_file)->required();
  pw->add_option("--decomp", decomp_out, "Write an optimal decomposition here");

  auto* vd = app.add_subcommand("verify-decomp", "Check a path-decomposition");
  vd->add_option("graph", graph_file)->required();
  vd->add_option("decomp", decomp_file)->required();
  vd->add_flag("--linked", linked_flag, "Also check the linked conditions");

  auto* ld = app.add_subcommand("linked", "Linked path-decomposition with empty end bags");
  ld->add_option("graph", graph_file)->required();
  ld->add_option("decomp", decomp_file)->required();

  auto* mn = app.add_subcommand("minor", "Search for a minor mapping");
  mn->add_option("pattern", pattern_file)->required();
  mn->add_option("host", graph_file)->required();
  mn->add_option("--budget", budget, "Node budget; negative for unlimited");

  auto* tr = app.add_subcommand("triple", "Search for a k-triple");
  tr->add_option("graph", graph_file)->required();
  tr->add_option("k", k)->required()->check(CLI::PositiveNumber);

  auto* ex = app.add_subcommand("experiment", "Run a named experiment");
  ex->add_option("name", name)->required()->check(CLI::IsMember(experiments::names()));
  ex->add_option("--seed", params.seed);
  ex->add_option("--n", params.n);
  ex->add_option("--count", params.count);
  ex->add_option("--random-size", params.random_size);
  ex->add_option("--budget", params.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*gen) {
      auto f = parse_family(family);
      if (!f) throw std::invalid_argument("unknown family " + family);
      std::cout << to_text(generate(*f, size, seed));
      return 0;
    }
    if (*cls) {
      print(to_json(classify(load_graph(graph_file))));
      return 0;
    }
    if (*pw) {
      const Digraph g = load_graph(graph_file);
      const PathwidthResult res = exact_pathwidth(g);
      std::cout << res.width << '\n';
      if (!decomp_out.empty()) {
        std::ofstream out(decomp_out);
        if (!out) throw std::runtime_error("cannot write " + decomp_out);
        out << to_json(res.decomposition).dump(2) << '\n';
      }
      return 0;
    }
    if (*vd) {
      const Digraph g = load_graph(graph_file);
      const DecompositionReport rep = verify(g, decomposition_from_json(load_json(decomp_file)),
                                             linked_flag);
      print(to_json(rep));
      return (linked_flag ? rep.linked_valid() : rep.valid()) ? 0 : 1;
    }
    if (*ld) {
      const Digraph g = load_graph(graph_file);
      const PathDecomposition p = pad_empty_ends(decomposition_from_json(load_json(decomp_file)));
      print(to_json(build_linked(g, p, VertexSet{}, VertexSet{})));
      return 0;
    }
    if (*mn) {
      const Digraph h = load_graph(pattern_file);
      const Digraph g = load_graph(graph_file);
      const MinorSearchResult res = find_minor(h, g, budget);
      switch (res.status) {
        case SearchStatus::found: print(to_json(*res.mapping)); return 0;
        case SearchStatus::absent: std::cout << "absent\n"; return 1;
        case SearchStatus::budget_exceeded: std::cout << "budget\n"; return 2;
      }
    }
    if (*tr) {
      const auto t = find_k_triple(load_graph(graph_file), k);
      if (!t) {
        std::cout << "absent\n";
        return 1;
      }
      print(to_json(*t));
      return 0;
    }
    if (*ex) {
      const Json rep = experiments::run(name, params);
      print(rep);
      return rep["passed"].get<bool>() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
