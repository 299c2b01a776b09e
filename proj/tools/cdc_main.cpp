// cdc: cycle double covers of cubic bridgeless graphs.
//
// Exit codes: 0 success, 1 input error or rejected cover, 2 case failure,
// 3 oracle absent / crosscheck disagreement, 4 oracle indeterminate.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "cdc/decomposer.hpp"
#include "cdc/graph_io.hpp"
#include "cdc/json_io.hpp"
#include "cdc/oracle.hpp"
#include "cdc/rng.hpp"
#include "cdc/verify.hpp"

namespace {

using namespace cdc;

constexpr int kOk = 0, kInputError = 1, kCaseFailure = 2, kAbsent = 3, kIndeterminate = 4;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

GraphFormat guess_format(const std::string& path, const std::string& text) {
  if (path.ends_with(".g6")) return GraphFormat::Graph6;
  if (path.ends_with(".txt") || path.ends_with(".edges")) return GraphFormat::EdgeList;
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text.compare(i, 10, ">>graph6<<") == 0) return GraphFormat::Graph6;
  const std::size_t end = text.find('\n', i == std::string::npos ? 0 : i);
  const std::string line = text.substr(i == std::string::npos ? 0 : i, end == std::string::npos ? std::string::npos : end - i);
  for (char c : line)
    if (c == ' ' || c == '\t' || c == '#') return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  GraphFormat f = format == "graph6" ? GraphFormat::Graph6
                  : format == "edgelist" ? GraphFormat::EdgeList
                                         : guess_format(path, text);
  return parse_graph(text, f);
}

std::vector<Vertex> parse_vertex_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) throw Error("bad vertex " + tok);
    out.push_back(v);
  }
  return out;
}

double default_budget_seconds() {
  if (const char* env = std::getenv("CDC_DEFAULT_BUDGET")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring CDC_DEFAULT_BUDGET=" << env << "\n";
    }
  }
  return 60.0;
}

Budget seconds_budget(double seconds) {
  Budget b;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
  return b;
}

struct DecomposeArgs {
  std::string input = "-", format = "auto", goddyn, output, trace;
  std::uint64_t fallback_budget = FallbackOptions{}.max_nodes;
};

int run_decompose(const DecomposeArgs& a) {
  Graph g;
  std::optional<Cycle> first;
  try {
    g = load_graph(a.input, a.format);
    if (!a.goddyn.empty()) first = Cycle::from_vertices(parse_vertex_list(a.goddyn));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  DecomposeOptions opts;
  opts.fallback.max_nodes = a.fallback_budget;
  CdcResult r;
  try {
    r = first ? cycle_double_cover_containing(g, *first, opts) : cycle_double_cover(g, opts);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (!a.trace.empty()) write_output(a.trace, to_json(r.trace).dump(2) + "\n");
  if (!r.cover) {
    Json diag{{"status", "case_failure"}, {"graph6", serialize_graph6(g)}, {"flags", r.trace.flags}};
    if (r.trace.failure) diag["failure"] = to_json(*r.trace.failure);
    write_output(a.output, diag.dump(2) + "\n");
    std::cerr << "case failure";
    if (r.trace.failure) std::cerr << ": " << r.trace.failure->reason;
    std::cerr << "\n";
    return kCaseFailure;
  }
  if (first && std::find(r.cover->cycles.begin(), r.cover->cycles.end(), *first) == r.cover->cycles.end()) {
    std::cerr << "error: cover does not contain the prescribed cycle\n";
    return kCaseFailure;
  }
  write_output(a.output, cover_to_json(g, *r.cover).dump(2) + "\n");
  return kOk;
}

int run_verify(const std::string& graph_path, const std::string& cover_path) {
  Graph g;
  CycleDoubleCover cover;
  try {
    g = load_graph(graph_path, "auto");
    cover = cover_from_json(Json::parse(read_input(cover_path)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const CdcVerdict v = verify_cdc(g, cover);
  std::cout << to_json(v).dump(2) << "\n";
  if (!v.accepted) {
    for (const Witness& w : v.witnesses) {
      std::cerr << w.kind;
      for (Vertex u : w.vertices) std::cerr << " " << u;
      if (!w.detail.empty()) std::cerr << " (" << w.detail << ")";
      std::cerr << "\n";
    }
  }
  return v.accepted ? kOk : kInputError;
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::Absent: return kAbsent;
    case SearchStatus::Indeterminate: return kIndeterminate;
  }
  return kInputError;
}

int run_oracle(const std::string& input, const std::string& mode, double seconds) {
  Graph g;
  try {
    g = load_graph(input, "auto");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  const Budget budget = seconds_budget(seconds);
  SearchStatus status;
  if (mode == "cdc") {
    status = brute_force_cdc(g, budget, BranchRule::MostConstrained).status;
  } else {
    try {
      status = brute_force_rainbow_decomposition(build_line_graph(g).lg, budget).status;
    } catch (const PreconditionError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  std::cout << to_string(status) << "\n";
  return status_code(status);
}

int run_gen(std::size_t n, std::uint64_t seed, std::size_t count, const std::string& output) {
  std::string out;
  try {
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i)
      out += serialize_graph6(random_cubic_bridgeless({n, rng.next(), GeneratorConfig{}.max_rejections})) + "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  write_output(output, out);
  return kOk;
}

struct Row {
  int instances = 0, covers = 0, failures = 0, found = 0, absent = 0, indeterminate = 0, disagreements = 0;
};

int run_crosscheck(std::size_t n_max, std::uint64_t seed, std::size_t count, const std::string& artifacts,
                   double seconds) {
  if (n_max < 4) {
    std::cerr << "error: --n-max must be at least 4\n";
    return kInputError;
  }
  const std::size_t sizes = (n_max - 4) / 2 + 1;
  Rng rng(seed);
  std::map<std::size_t, Row> rows;
  int failures = 0, disagreements = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 4 + 2 * (i % sizes);
    const Graph g = random_cubic_bridgeless({n, rng.next(), GeneratorConfig{}.max_rejections});
    Row& row = rows[n];
    ++row.instances;
    CdcResult r = cycle_double_cover(g);
    const bool ok = r.cover.has_value();
    if (ok) ++row.covers;
    const CdcSearch oracle = brute_force_cdc(g, seconds_budget(seconds), BranchRule::MostConstrained);
    if (oracle.status == SearchStatus::Found) ++row.found;
    if (oracle.status == SearchStatus::Absent) ++row.absent;
    if (oracle.status == SearchStatus::Indeterminate) ++row.indeterminate;
    if (ok && oracle.status == SearchStatus::Absent) {
      ++row.disagreements;
      ++disagreements;
    }
    if (!ok) {
      ++row.failures;
      ++failures;
      std::filesystem::create_directories(artifacts);
      Json art{{"instance", i}, {"graph6", serialize_graph6(g)}, {"flags", r.trace.flags}};
      if (r.trace.failure) art["failure"] = to_json(*r.trace.failure);
      const std::string path = artifacts + "/failure-" + std::to_string(i) + ".json";
      write_output(path, art.dump(2) + "\n");
      std::cerr << "case failure on instance " << i << " written to " << path << "\n";
    }
  }
  std::cout << std::setw(4) << "n" << std::setw(11) << "instances" << std::setw(8) << "covers" << std::setw(10)
            << "failures" << std::setw(7) << "found" << std::setw(8) << "absent" << std::setw(8) << "indet"
            << std::setw(10) << "disagree" << "\n";
  for (const auto& [n, row] : rows)
    std::cout << std::setw(4) << n << std::setw(11) << row.instances << std::setw(8) << row.covers << std::setw(10)
              << row.failures << std::setw(7) << row.found << std::setw(8) << row.absent << std::setw(8)
              << row.indeterminate << std::setw(10) << row.disagreements << "\n";
  std::cout << "total " << count << " instances, " << failures << " case failures, " << disagreements
            << " disagreements\n";
  if (disagreements) return kAbsent;
  if (failures) return kCaseFailure;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle double covers of cubic bridgeless graphs"};
  app.require_subcommand(1);
  int code = kOk;

  DecomposeArgs da;
  auto* dec = app.add_subcommand("decompose", "Build and verify a cycle double cover");
  dec->add_option("--input", da.input, "Graph file, or - for stdin");
  dec->add_option("--format", da.format, "graph6 or edgelist")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  dec->add_option("--goddyn-cycle", da.goddyn, "Cycle the cover must contain, as v0,v1,...");
  dec->add_option("--output", da.output, "Cover JSON destination");
  dec->add_option("--trace", da.trace, "Trace JSON destination");
  dec->add_option("--fallback-budget", da.fallback_budget, "Node budget of the fallback search");
  dec->callback([&] { code = run_decompose(da); });

  std::string vgraph, vcover;
  auto* ver = app.add_subcommand("verify", "Check a cover against a graph");
  ver->add_option("--graph", vgraph)->required();
  ver->add_option("--cover", vcover)->required();
  ver->callback([&] { code = run_verify(vgraph, vcover); });

  std::string oinput = "-", omode = "cdc";
  double obudget = default_budget_seconds();
  auto* ora = app.add_subcommand("oracle", "Brute-force search");
  ora->add_option("--input", oinput);
  ora->add_option("--mode", omode)->check(CLI::IsMember({"cdc", "rainbow"}));
  ora->add_option("--budget", obudget, "Seconds; 0 for unlimited");
  ora->callback([&] { code = run_oracle(oinput, omode, obudget); });

  std::size_t gn = 0, gcount = 1;
  std::uint64_t gseed = 0;
  std::string gout;
  auto* gen = app.add_subcommand("gen", "Random cubic bridgeless graphs as graph6");
  gen->add_option("--n", gn)->required();
  gen->add_option("--seed", gseed);
  gen->add_option("--count", gcount);
  gen->add_option("--output", gout);
  gen->callback([&] { code = run_gen(gn, gseed, gcount, gout); });

  std::size_t cmax = 10, ccount = 50;
  std::uint64_t cseed = 0;
  std::string cdir = "crosscheck-failures";
  double cbudget = default_budget_seconds();
  auto* cc = app.add_subcommand("crosscheck", "Decompose random instances and compare with the oracle");
  cc->add_option("--n-max", cmax);
  cc->add_option("--seed", cseed);
  cc->add_option("--count", ccount);
  cc->add_option("--artifacts", cdir, "Directory for case failure artifacts");
  cc->add_option("--budget", cbudget, "Oracle seconds per instance");
  cc->callback([&] { code = run_crosscheck(cmax, cseed, ccount, cdir, cbudget); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  return code;
}
