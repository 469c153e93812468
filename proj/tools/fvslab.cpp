// fvslab: solve, analyze, construct, verify and search feedback-vertex-set
// instances of bounded degeneracy or treewidth.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fvslab/bounds.hpp"
#include "fvslab/codec.hpp"
#include "fvslab/constructions.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/orderings.hpp"
#include "fvslab/report.hpp"
#include "fvslab/verify.hpp"

namespace {

using fvslab::Digraph;
using fvslab::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitMismatch = 3;

int default_threads() {
  if (const char* env = std::getenv("FVSLAB_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

std::string slurp(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw fvslab::InputError("cannot open file " + arg.substr(1));
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
  }
  return arg;
}

std::variant<Graph, Digraph> decode_instance(const std::string& text, const std::string& format,
                                             bool directed) {
  if (format == "digraph6") return fvslab::decode_digraph6(text);
  if (format == "graph6") return fvslab::decode_graph6(text);
  if (format != "auto") throw fvslab::InputError("unsupported input format: " + format);
  if (directed || (!text.empty() && text[0] == '&') || text.rfind(">>digraph6<<", 0) == 0) {
    return fvslab::decode_digraph6(text);
  }
  if (text.rfind(">>graph6<<", 0) == 0) return fvslab::decode_graph6(text);
  // headerless: the data length separates the two formats
  if (!text.empty() && static_cast<unsigned char>(text[0]) >= 63 &&
      static_cast<unsigned char>(text[0]) != 126) {
    size_t n = static_cast<unsigned char>(text[0]) - 63;
    size_t g6 = 1 + (n * (n - 1) / 2 + 5) / 6;
    size_t d6 = 1 + (n * n + 5) / 6;
    if (text.size() == d6 && text.size() != g6) return fvslab::decode_digraph6(text);
  }
  return fvslab::decode_graph6(text);
}

void print_suite(const fvslab::SuiteReport& rep, bool as_json) {
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
    return;
  }
  for (const fvslab::CheckLine& c : rep.checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": claimed " << c.claimed
              << ", measured " << c.measured << "\n";
  }
  std::cout << (rep.pass ? "OK" : "MISMATCH") << " suite " << rep.suite << " ("
            << rep.checks.size() << " checks, " << rep.seconds << "s)\n";
}

std::string emit_instance(const std::variant<Graph, Digraph>& g, const std::string& fmt,
                          bool header) {
  if (std::holds_alternative<Digraph>(g)) {
    const Digraph& d = std::get<Digraph>(g);
    if (fmt == "dot") return fvslab::to_dot(d);
    if (fmt == "digraph6") return fvslab::encode_digraph6(d, header);
    throw fvslab::InputError("cannot emit a digraph as " + fmt);
  }
  const Graph& d = std::get<Graph>(g);
  if (fmt == "dot") return fvslab::to_dot(d);
  if (fmt == "graph6") return fvslab::encode_graph6(d);
  throw fvslab::InputError("cannot emit a graph as " + fmt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feedback vertex sets in graphs of bounded degeneracy or treewidth"};
  app.require_subcommand(1);

  std::string input, format = "auto", emit = "digraph6";
  bool directed = false, as_json = false, no_header = false, verify_flag = false;
  int threads = default_threads();
  long long deadline_ms = 0;
  long long budget = -1;
  uint64_t seed = 1, iters = 10000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "input format: graph6|digraph6|auto");
    cmd->add_flag("--directed", directed, "treat auto-format input as digraph6");
    cmd->add_flag("--json", as_json, "emit a JSON report");
    cmd->add_option("--threads,-j", threads, "worker threads for suites");
    cmd->add_option("--deadline-ms", deadline_ms, "solver deadline in milliseconds");
    cmd->add_option("--seed", seed, "seed for randomized subcommands");
  };

  CLI::App* solve = app.add_subcommand("solve", "exact minimum feedback vertex set");
  solve->add_option("input", input, "graph6/digraph6 string, @file, or - for stdin")->required();
  solve->add_option("--budget", budget, "give up if no FVS within this size");
  add_common(solve);

  CLI::App* analyze = app.add_subcommand("analyze", "degeneracy, treewidth, FVS and bounds");
  analyze->add_option("input", input, "graph6/digraph6 string, @file, or - for stdin")->required();
  add_common(analyze);

  std::string family, spec_file;
  int opt_k = 0, opt_i = 0, opt_l = 0, opt_m = 1;
  CLI::App* construct = app.add_subcommand("construct", "generate a family member");
  construct->add_option("family", family, "lbdg|evendeg|lbtw|lbtw2|gen-iterate|gen2-spec")
      ->required();
  construct->add_option("--k", opt_k, "parameter k");
  construct->add_option("--i", opt_i, "family index");
  construct->add_option("--l", opt_l, "parameter l (lbtw2)");
  construct->add_option("--m", opt_m, "parameter m (lbtw2)");
  construct->add_option("--spec", spec_file, "JSON construction spec file (gen-iterate/gen2-spec)");
  construct->add_option("--emit", emit, "output format: graph6|digraph6|dot");
  construct->add_flag("--no-header", no_header, "omit the digraph6 '&' header");
  construct->add_flag("--verify", verify_flag, "run the exact solver on the result");
  add_common(construct);

  std::string suite, block_r;
  int block_rprime = -1, row = -1, max_n = 7;
  CLI::App* verify = app.add_subcommand("verify", "reproduce the published numbers");
  verify->add_option("suite", suite, "table1|table2|tournaments|block")->required();
  verify->add_option("--row", row, "restrict table2 to one k");
  verify->add_option("--max-n", max_n, "largest tournament order (tournaments suite)");
  verify->add_option("--input", input, "block suite: digraph6 string, @file or -");
  verify->add_option("--R", block_r, "block suite: comma-separated bad-set ids");
  verify->add_option("--r-prime", block_rprime, "block suite: the r' vertex");
  add_common(verify);

  int search_n = 0, search_rldeg = 0;
  std::string state_file;
  CLI::App* search = app.add_subcommand("search", "local search for building blocks");
  search->add_option("--n", search_n, "block order")->required();
  search->add_option("--max-rldeg", search_rldeg, "right-left degeneracy cap")->required();
  search->add_option("--iters", iters, "iteration budget");
  search->add_option("--state", state_file, "resumable state file");
  add_common(search);

  std::string to_format = "digraph6";
  CLI::App* codec = app.add_subcommand("codec", "decode/encode graph6 and digraph6");
  codec->add_option("input", input, "string, @file, or - for stdin")->required();
  codec->add_option("--to", to_format, "output format: graph6|digraph6|dot");
  codec->add_flag("--no-header", no_header, "omit the digraph6 '&' header");
  add_common(codec);

  CLI11_PARSE(app, argc, argv);

  fvslab::SolveOptions solver_opt;
  if (deadline_ms > 0) solver_opt.deadline = std::chrono::milliseconds(deadline_ms);
  if (budget >= 0) solver_opt.budget = static_cast<int>(budget);

  try {
    if (solve->parsed()) {
      auto inst = decode_instance(slurp(input), format, directed);
      fvslab::FvsCertificate cert =
          std::holds_alternative<Digraph>(inst) ? min_fvs(std::get<Digraph>(inst), solver_opt)
                                                : min_fvs(std::get<Graph>(inst), solver_opt);
      json j = fvslab::to_json(cert);
      j["schema"] = fvslab::kReportSchema;
      if (as_json)
        std::cout << j.dump(2) << "\n";
      else {
        std::cout << "fvs size " << cert.size() << (cert.optimal ? "" : " (not certified optimal)")
                  << "; vertices:";
        for (int v : cert.vertices) std::cout << " " << v;
        std::cout << "\n";
      }
      return cert.status == fvslab::SolveStatus::optimal ? kExitOk : kExitTimeout;
    }

    if (analyze->parsed()) {
      std::string text = slurp(input);
      auto inst = decode_instance(text, format, directed);
      fvslab::AnalyzeOptions aopt;
      aopt.solver = solver_opt;
      json j = fvslab::analyze_instance(inst, text, format, aopt);
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (construct->parsed()) {
      json report;
      std::variant<Graph, Digraph> out;
      if (family == "lbdg") {
        auto m = fvslab::lbdg_family(opt_k, opt_i);
        if (verify_flag) m.f_exact = min_fvs(m.graph, solver_opt).size();
        report = fvslab::to_json(m);
        out = m.graph;
      } else if (family == "evendeg") {
        auto m = fvslab::even_deg_block(opt_k);
        if (verify_flag) m.f_exact = min_fvs(m.graph, solver_opt).size();
        report = fvslab::to_json(m);
        out = m.graph;
      } else if (family == "lbtw") {
        fvslab::TournamentA t = fvslab::tournament_a(std::min(opt_k, 7), seed);
        if (t.n != opt_k) throw fvslab::InputError("lbtw needs k <= 7 without a supplied tournament");
        auto m = fvslab::lbtw_family(opt_k, opt_i, t.witness);
        if (verify_flag) m.f_exact = min_fvs(m.graph, solver_opt).size();
        report = fvslab::to_json(m);
        out = m.graph;
      } else if (family == "lbtw2") {
        fvslab::TournamentA t = fvslab::tournament_a(opt_k + 1, seed);
        fvslab::TournamentA t0 = fvslab::tournament_a(opt_l + opt_m, seed);
        auto m = fvslab::lbtw2_family(opt_k, opt_l, opt_m, t.witness, t0.witness,
                                      std::max(opt_i, 1));
        if (verify_flag) m.f_exact = min_fvs(m.graph, solver_opt).size();
        report = fvslab::to_json(m);
        out = m.graph;
      } else if (family == "gen-iterate" || family == "gen2-spec") {
        std::ifstream in(spec_file);
        if (!in) throw fvslab::InputError("cannot open spec file " + spec_file);
        std::stringstream ss;
        ss << in.rdbuf();
        fvslab::ConstructionOutput res =
            fvslab::run_construction_spec(ss.str(), verify_flag, solver_opt);
        report = json{{"schema", fvslab::kReportSchema}, {"description", res.description}};
        if (res.f_exact) report["f_exact"] = *res.f_exact;
        out = res.graph;
      } else {
        throw fvslab::InputError("unknown family: " + family);
      }
      if (emit == "digraph6" && std::holds_alternative<Graph>(out)) emit = "graph6";
      std::cout << emit_instance(out, emit, !no_header);
      if (emit != "dot") std::cout << "\n";
      report["schema"] = fvslab::kReportSchema;
      if (as_json) std::cout << report.dump(2) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      fvslab::SuiteReport rep;
      if (suite == "table1") {
        rep = fvslab::verify_table1(threads);
      } else if (suite == "table2") {
        rep = fvslab::verify_table2(row >= 0 ? std::optional<int>(row) : std::nullopt, threads);
      } else if (suite == "tournaments") {
        rep = fvslab::verify_tournaments(max_n, true);
      } else if (suite == "block") {
        Digraph d = fvslab::decode_digraph6(slurp(input));
        std::vector<int> r;
        std::stringstream ss(block_r);
        for (std::string tok; std::getline(ss, tok, ',');) r.push_back(std::stoi(tok));
        rep = fvslab::verify_block(d, r, block_rprime);
      } else {
        throw fvslab::InputError("unknown suite: " + suite);
      }
      print_suite(rep, as_json);
      return rep.pass ? kExitOk : kExitMismatch;
    }

    if (search->parsed()) {
      uint64_t start_seed = seed;
      uint64_t done = 0;
      std::optional<fvslab::Block<Digraph>> carried;
      if (!state_file.empty()) {
        std::ifstream in(state_file);
        if (in) {
          json st = json::parse(in);
          start_seed = st.value("seed", seed);
          done = st.value("iterations_done", 0ull);
          if (st.contains("best")) {
            fvslab::Block<Digraph> b;
            b.graph = fvslab::decode_digraph6(st["best"].at("digraph6").get<std::string>());
            b.R = st["best"].at("R").get<std::vector<int>>();
            b.r_prime = st["best"].at("r_prime").get<int>();
            fvslab::certify_block(b, solver_opt);
            if (*b.r_bad && *b.deg_rl <= search_rldeg) carried = std::move(b);
          }
        }
      }
      fvslab::BlockSearchResult res =
          fvslab::search_block(search_n, search_rldeg, start_seed + done, iters);
      if (carried) {
        fvslab::Rat carried_ratio(*carried->f, carried->graph.order() - 1);
        if (!res.found || res.ratio < carried_ratio) {
          res.found = true;
          res.block = std::move(*carried);
          res.ratio = carried_ratio;
        }
      }
      json j{{"schema", fvslab::kReportSchema},
             {"found", res.found},
             {"iterations", res.iterations}};
      if (res.found) {
        j["digraph6"] = fvslab::encode_digraph6(res.block.graph, false);
        j["R"] = res.block.R;
        j["r_prime"] = res.block.r_prime;
        j["f"] = *res.block.f;
        j["deg_RL"] = *res.block.deg_rl;
        j["ratio"] = res.ratio.str();
        j["r_minimal"] = *res.block.r_minimal;
      }
      if (!state_file.empty()) {
        json st{{"seed", start_seed}, {"iterations_done", done + iters}};
        if (res.found) {
          st["best"] = json{{"digraph6", fvslab::encode_digraph6(res.block.graph, false)},
                            {"R", res.block.R},
                            {"r_prime", res.block.r_prime}};
        }
        std::ofstream outf(state_file);
        outf << st.dump(2) << "\n";
      }
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (codec->parsed()) {
      std::string text = slurp(input);
      std::variant<Graph, Digraph> inst = decode_instance(text, format, directed);
      if (to_format == "graph6" && std::holds_alternative<Digraph>(inst)) {
        inst = underlying(std::get<Digraph>(inst));  // forget the orientation
      }
      std::cout << emit_instance(inst, to_format, !no_header);
      if (to_format != "dot") std::cout << "\n";
      return kExitOk;
    }
  } catch (const fvslab::CodecError& e) {
    std::cerr << "decode error: " << e.what();
    if (e.bit != fvslab::CodecError::npos) std::cerr << " (bit " << e.bit << ")";
    std::cerr << "\n";
    return kExitInput;
  } catch (const fvslab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
