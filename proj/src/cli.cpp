#include "admg/cli.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "admg/binary_param.hpp"
#include "admg/errors.hpp"
#include "admg/factorization.hpp"
#include "admg/graph.hpp"
#include "admg/heads.hpp"
#include "admg/io.hpp"
#include "admg/mseparation.hpp"
#include "admg/oracle.hpp"
#include "admg/partition.hpp"

namespace admg {

namespace {

// Thrown for problems with command-line values (unknown labels, malformed
// assignment strings); mapped to exit code 2 like flag errors.
struct UsageError {
  std::string message;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

int resolve_label(const Admg& g, const std::string& name) {
  for (int v = 0; v < g.size(); ++v)
    if (g.label(v) == name) return v;
  throw UsageError{"unknown node '" + name + "'"};
}

VertexSet resolve_set(const Admg& g, const std::string& csv) {
  VertexSet s;
  if (csv.empty()) return s;
  for (const std::string& name : split_csv(csv)) {
    if (name.empty()) throw UsageError{"empty node name in list '" + csv + "'"};
    s.add(resolve_label(g, name));
  }
  return s;
}

nlohmann::json labels_json(const Admg& g, VertexSet s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int v : s) arr.push_back(g.label(v));
  return arr;
}

std::string labels_csv(const Admg& g, VertexSet s) {
  std::string text;
  for (int v : s) {
    if (!text.empty()) text += ",";
    text += g.label(v);
  }
  return text;
}

std::string render_term(const Admg& g, VertexSet head, VertexSet tail) {
  std::string text = "p(" + labels_csv(g, head);
  if (!tail.empty()) text += "|" + labels_csv(g, tail);
  return text + ")";
}

// Shortest round-trip decimal rendering (what the JSON serializer uses), so
// text and JSON output agree digit-for-digit.
std::string fmt_double(double x) { return nlohmann::json(x).dump(); }

std::uint32_t parse_assignment(const Admg& g, const std::string& bits) {
  if (static_cast<int>(bits.size()) != g.size())
    throw UsageError{"assignment '" + bits + "' must have one character per node (" +
                     std::to_string(g.size()) + ")"};
  std::uint32_t aligned = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (bits[v] == '1')
      aligned |= std::uint32_t{1} << v;
    else if (bits[v] != '0')
      throw UsageError{"assignment '" + bits + "' must consist of 0s and 1s"};
  }
  return aligned;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("'") + path + "': " + e.what());
  }
}

nlohmann::json term_json(const Admg& g, VertexSet head, VertexSet tail, int depth) {
  return {{"head", labels_json(g, head)}, {"tail", labels_json(g, tail)}, {"depth", depth}};
}

struct Options {
  std::string file;
  bool json = false;
  std::string set_csv;
  bool all = false;
  std::string x_csv, y_csv, given_csv;
  std::string params_path;
  std::string assignment;
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int n = 0;
  double pd = 0.3;
  double pb = 0.3;
};

int run_validate(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  if (opt.json) {
    nlohmann::json j = {{"nodes", g.size()},
                        {"directed", g.directed_edges().size()},
                        {"bidirected", g.bidirected_edges().size()},
                        {"valid", true}};
    out << j.dump(2) << "\n";
  } else {
    out << "ok: " << g.size() << " nodes, " << g.directed_edges().size() << " directed, "
        << g.bidirected_edges().size() << " bidirected\n";
  }
  return 0;
}

int run_heads(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  std::vector<HeadTail> heads = all_heads(g);
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const HeadTail& ht : heads)
      arr.push_back({{"head", labels_json(g, ht.head)},
                     {"tail", labels_json(g, ht.tail())},
                     {"dis_tail", labels_json(g, ht.dis_tail)},
                     {"pa_tail", labels_json(g, ht.pa_tail)}});
    out << arr.dump(2) << "\n";
  } else {
    for (const HeadTail& ht : heads) out << render_term(g, ht.head, ht.tail()) << "\n";
  }
  return 0;
}

int run_partition(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  VertexSet within = resolve_set(g, opt.set_csv);
  Decomposition dec = decompose(g, within);
  if (opt.json) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const DecompositionBlock& b : dec.blocks)
      blocks.push_back({{"head", labels_json(g, b.head)}, {"depth", b.depth}});
    nlohmann::json j = {{"set", labels_json(g, dec.source)}, {"blocks", blocks}};
    out << j.dump(2) << "\n";
  } else {
    for (const DecompositionBlock& b : dec.blocks)
      out << "depth " << b.depth << ": " << labels_csv(g, b.head) << "\n";
  }
  return 0;
}

int run_factorize(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  std::vector<Factorization> list;
  if (opt.all) {
    list = factorize_all(g);
  } else {
    list.push_back(factorize(g, resolve_set(g, opt.set_csv)));
  }
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Factorization& f : list) {
      nlohmann::json terms = nlohmann::json::array();
      for (const FactorTerm& t : f.terms) terms.push_back(term_json(g, t.head, t.tail, t.depth));
      arr.push_back({{"margin", labels_json(g, f.margin)},
                     {"terms", terms},
                     {"rendered", render_equation(g, f)}});
    }
    out << (opt.all ? arr : arr.at(0)).dump(2) << "\n";
  } else {
    for (const Factorization& f : list) out << render_equation(g, f) << "\n";
  }
  return 0;
}

int run_msep(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  VertexSet x = resolve_set(g, opt.x_csv);
  VertexSet y = resolve_set(g, opt.y_csv);
  VertexSet z = resolve_set(g, opt.given_csv);
  bool separated = is_m_separated(g, x, y, z);
  if (opt.json) {
    nlohmann::json j = {{"x", labels_json(g, x)},
                        {"y", labels_json(g, y)},
                        {"given", labels_json(g, z)},
                        {"m_separated", separated}};
    out << j.dump(2) << "\n";
  } else {
    out << "m-separated: " << (separated ? "true" : "false") << "\n";
  }
  return 0;
}

int run_dim(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  MobiusContext ctx(g);
  if (opt.json) {
    nlohmann::json j = {{"dimension", ctx.param_dimension()}};
    out << j.dump(2) << "\n";
  } else {
    out << ctx.param_dimension() << "\n";
  }
  return 0;
}

int run_moebius(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  MobiusContext ctx(g);
  MobiusParams params = params_from_json(ctx, load_json_file(opt.params_path));
  if (!opt.assignment.empty()) {
    std::uint32_t aligned = parse_assignment(g, opt.assignment);
    double p = ctx.reconstruct_entry(params, aligned);
    if (opt.json) {
      nlohmann::json j = {{"assignment", opt.assignment}, {"p", p}};
      out << j.dump(2) << "\n";
    } else {
      out << fmt_double(p) << "\n";
    }
    return 0;
  }
  JointTable table = joint_from_params(ctx, params);
  if (opt.json) {
    nlohmann::json rows = nlohmann::json::array();
    int n = g.size();
    for (std::uint32_t row = 0; row < (std::uint32_t{1} << n); ++row) {
      std::string bits(n, '0');
      std::uint32_t aligned = 0;
      for (int v = 0; v < n; ++v)
        if ((row >> (n - 1 - v)) & 1u) {
          bits[v] = '1';
          aligned |= std::uint32_t{1} << v;
        }
      rows.push_back({{"assignment", bits}, {"p", table[aligned]}});
    }
    nlohmann::json j = {{"table", rows}};
    out << j.dump(2) << "\n";
  } else {
    out << joint_to_csv(table);
  }
  return 0;
}

int run_verify(const Options& opt, std::ostream& out) {
  Admg g = load_admg(opt.file);
  VerifyReport report = verify_markov_equivalence(g, opt.trials, opt.seed, opt.tol);
  if (opt.json) {
    out << verify_report_to_json(g, report).dump(2) << "\n";
  } else {
    out << "trials: " << report.trials << "\n";
    out << "forward pass: " << report.forward_pass << "/" << report.trials << "\n";
    out << "reverse pass: " << report.reverse_pass << "/" << report.trials << "\n";
    for (const VerifyCounterexample& ce : report.counterexamples) {
      out << "counterexample (" << ce.direction << ", trial " << ce.trial << "): ";
      if (ce.direction == "forward")
        out << "margin " << labels_csv(g, ce.margin) << "\n";
      else
        out << labels_csv(g, ce.x) << " _||_ " << labels_csv(g, ce.y) << " | "
            << labels_csv(g, ce.z) << "\n";
    }
    out << "ok: " << (report.ok() ? "true" : "false") << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_random(const Options& opt, std::ostream& out) {
  RandomSpec spec;
  spec.n = opt.n;
  spec.p_directed = opt.pd;
  spec.p_bidirected = opt.pb;
  spec.seed = opt.seed;
  Admg g = random_admg(spec);
  if (opt.json)
    out << graph_to_json(g).dump(2) << "\n";
  else
    out << to_admg_text(g);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Head/tail factorization toolkit for acyclic directed mixed graphs"};
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "graph file (.admg)")->required();
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check a graph file");
  add_file(c_validate);

  CLI::App* c_heads = app.add_subcommand("heads", "list every head with its tail");
  add_file(c_heads);

  CLI::App* c_partition = app.add_subcommand("partition", "recursive head partition of a set");
  add_file(c_partition);
  c_partition->add_option("--set", opt.set_csv, "comma-separated node labels")->required();

  CLI::App* c_factorize = app.add_subcommand("factorize", "factorize ancestral margins");
  add_file(c_factorize);
  CLI::Option* o_set = c_factorize->add_option("--set", opt.set_csv, "one ancestral margin");
  CLI::Option* o_all = c_factorize->add_flag("--all", opt.all, "every nonempty ancestral margin");
  o_set->excludes(o_all);

  CLI::App* c_msep = app.add_subcommand("msep", "test m-separation");
  add_file(c_msep);
  c_msep->add_option("--x", opt.x_csv, "first set, comma-separated")->required();
  c_msep->add_option("--y", opt.y_csv, "second set, comma-separated")->required();
  c_msep->add_option("--given", opt.given_csv, "conditioning set (may be empty)");

  CLI::App* c_dim = app.add_subcommand("dim", "binary parametrization dimension");
  add_file(c_dim);

  CLI::App* c_moebius = app.add_subcommand("moebius", "evaluate the binary parametrization");
  add_file(c_moebius);
  c_moebius->add_option("--params", opt.params_path, "parameter JSON file")->required();
  c_moebius->add_option("--assignment", opt.assignment, "bit string, one character per node");

  CLI::App* c_verify = app.add_subcommand("verify", "two-way factorization/Markov check");
  add_file(c_verify);
  c_verify->add_option("--trials", opt.trials, "random tables per direction");
  c_verify->add_option("--seed", opt.seed, "random seed");
  c_verify->add_option("--tol", opt.tol, "numeric tolerance");

  CLI::App* c_random = app.add_subcommand("random", "sample a random graph");
  c_random->add_option("--n", opt.n, "number of nodes")->required();
  c_random->add_option("--seed", opt.seed, "random seed");
  c_random->add_option("--pd", opt.pd, "directed edge probability");
  c_random->add_option("--pb", opt.pb, "bidirected edge probability");
  c_random->add_flag("--json", opt.json, "emit JSON instead of text");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_validate)) return run_validate(opt, out);
    if (app.got_subcommand(c_heads)) return run_heads(opt, out);
    if (app.got_subcommand(c_partition)) return run_partition(opt, out);
    if (app.got_subcommand(c_factorize)) {
      if (!opt.all && opt.set_csv.empty())
        throw UsageError{"factorize needs --set or --all"};
      return run_factorize(opt, out);
    }
    if (app.got_subcommand(c_msep)) return run_msep(opt, out);
    if (app.got_subcommand(c_dim)) return run_dim(opt, out);
    if (app.got_subcommand(c_moebius)) return run_moebius(opt, out);
    if (app.got_subcommand(c_verify)) return run_verify(opt, out);
    if (app.got_subcommand(c_random)) return run_random(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: missing subcommand\n";
  return 2;
}

}  // namespace admg
