#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include <kintree/graph_file.hpp>
#include <kintree/oracle.hpp>
#include <kintree/result_document.hpp>
#include <kintree/solver.hpp>

namespace kintree::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedK: return kExitUnsupportedK;
    case ErrorCode::InternalCaseExhaustion:
    case ErrorCode::NoAttachment:
    case ErrorCode::PreconditionViolated: return kExitRejected;
    default: return kExitInputError;
  }
}

std::vector<Vertex> to_internal(const std::vector<int>& one_based, const Graph& g) {
  std::vector<Vertex> out;
  for (int id : one_based) {
    if (id < 1 || static_cast<std::size_t>(id) > g.vertex_count()) {
      throw Error(ErrorCode::ParseError, "terminal " + std::to_string(id) + " is not a vertex");
    }
    out.push_back(id - 1);
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + path);
  file << text;
}

struct SolveArgs {
  std::string graph;
  int k = 0;
  std::vector<int> terminals;
  bool oracle_fallback = false;
  int max_oracle_n = kDefaultOracleCap;
  std::string output;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  std::string doc;
  int code = kExitOk;
  try {
    GraphFile file = read_graph_file(a.graph);
    const std::vector<Vertex> x = a.terminals.empty() ? file.terminals : to_internal(a.terminals, file.graph);
    const int k = a.k > 0 ? a.k : static_cast<int>(x.size());
    if (static_cast<int>(x.size()) != k) {
      throw Error(ErrorCode::TerminalCountMismatch,
                  "--k " + std::to_string(k) + " but " + std::to_string(x.size()) + " terminals given");
    }
    if (k < 5 && a.oracle_fallback) {
      const std::optional<VertexSet> tree = brute_force_find_tree(file.graph, x, a.max_oracle_n);
      doc = tree ? render_result(k, x, InducedTree{*tree, x}) : render_exhaustive_no_tree(k, x);
    } else {
      doc = render_result(k, x, k_in_a_tree(file.graph, k, x));
    }
  } catch (const Error& e) {
    doc = render_error(e.code(), e.what());
    code = exit_code_for(e.code());
    err << "kintree solve: " << e.what() << "\n";
  }
  emit(doc, a.output, out);
  return code;
}

struct VerifyArgs {
  std::string graph;
  std::string certificate;
  int max_oracle_n = kDefaultOracleCap;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const GraphFile file = read_graph_file(a.graph);
    const ParsedResult doc = parse_result(slurp(a.certificate));
    auto reject = [&](const std::string& why) {
      out << "rejected: " << why << "\n";
      return kExitRejected;
    };
    if (doc.status == "error") return reject("document reports an error");
    if (static_cast<int>(doc.terminals.size()) != doc.k) return reject("terminal count differs from k");
    for (Vertex t : doc.terminals) {
      if (!file.graph.contains(t)) return reject("terminal outside the graph");
    }
    if (doc.exhaustive) {
      if (brute_force_k_in_a_tree(file.graph, doc.terminals, a.max_oracle_n)) {
        return reject("exhaustive search finds a tree");
      }
      out << "ok\n";
      return kExitOk;
    }
    const Verdict v = verify_result(file.graph, doc.terminals, *doc.result);
    if (!v) return reject(std::string(to_string(v.reason)) + " at index " + std::to_string(v.index));
    out << "ok\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "kintree verify: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidGraph ||
                   e.code() == ErrorCode::TooLarge
               ? kExitInputError
               : kExitRejected;
  }
}

struct GenArgs {
  std::string kind = "random-girth";
  int k = 5;
  int n = 14;
  std::uint64_t seed = 0;
  std::vector<int> lengths;
  double p = 0.3;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<InstanceKind> kind = parse_instance_kind(a.kind);
    if (!kind) throw Error(ErrorCode::InfeasibleSpec, "unknown kind '" + a.kind + "'");
    InstanceSpec spec;
    spec.kind = *kind;
    spec.k = a.k;
    spec.n = a.n;
    spec.seed = a.seed;
    spec.path_lengths = a.lengths;
    spec.edge_probability = a.p;
    const Instance inst = generate(spec);
    emit(serialize_graph_file(inst.graph, inst.terminals), a.output, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "kintree gen: " << e.what() << "\n";
    return kExitInputError;
  }
}

struct OracleArgs {
  std::string graph;
  std::vector<int> terminals;
  int max_oracle_n = kDefaultOracleCap;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const GraphFile file = read_graph_file(a.graph);
    const std::vector<Vertex> x = a.terminals.empty() ? file.terminals : to_internal(a.terminals, file.graph);
    out << (brute_force_k_in_a_tree(file.graph, x, a.max_oracle_n) ? "true" : "false") << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "kintree oracle: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induced trees through k terminals in graphs of girth at least k"};
  app.name("kintree");
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* s = app.add_subcommand("solve", "Find an induced tree or a certificate that none exists");
  s->add_option("graph", solve.graph, "Graph file")->required();
  s->add_option("--k", solve.k, "Number of terminals (default: as many as given)");
  s->add_option("--terminals", solve.terminals, "Comma-separated 1-based terminals")->delimiter(',');
  s->add_flag("--oracle-fallback", solve.oracle_fallback, "Use exhaustive search when k < 5");
  s->add_option("--max-oracle-n", solve.max_oracle_n, "Vertex limit for exhaustive search");
  s->add_option("-o,--output", solve.output, "Write the result document here");

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "Check a result document against a graph");
  v->add_option("graph", verify.graph, "Graph file")->required();
  v->add_option("certificate", verify.certificate, "Result document")->required();
  v->add_option("--max-oracle-n", verify.max_oracle_n, "Vertex limit for exhaustive search");

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "minimal-k-structure | subdivided-k4 | spider | random-girth");
  g->add_option("--k", gen.k, "Number of terminals / girth bound");
  g->add_option("--n", gen.n, "Vertex count (random-girth)");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--lengths", gen.lengths, "Comma-separated pendant path lengths")->delimiter(',');
  g->add_option("--p", gen.p, "Edge probability (random-girth)");
  g->add_option("-o,--output", gen.output, "Write the graph file here");

  OracleArgs oracle;
  CLI::App* o = app.add_subcommand("oracle", "Decide by exhaustive search");
  o->add_option("graph", oracle.graph, "Graph file")->required();
  o->add_option("--terminals", oracle.terminals, "Comma-separated 1-based terminals")->delimiter(',');
  o->add_option("--max-oracle-n", oracle.max_oracle_n, "Vertex limit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kintree: " << e.what() << "\n";
    return kExitInputError;
  }

  if (s->parsed()) return cmd_solve(solve, out, err);
  if (v->parsed()) return cmd_verify(verify, out, err);
  if (g->parsed()) return cmd_gen(gen, out, err);
  return cmd_oracle(oracle, out, err);
}

}  // namespace kintree::cli
