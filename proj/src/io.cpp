#include "admg/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "admg/errors.hpp"

namespace admg {

namespace {

std::string line_msg(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

// Labels sorted lexicographically; used for parameter-file keys so the file
// layout does not depend on internal vertex numbering.
std::vector<int> lex_sorted_ids(const Admg& g, VertexSet s) {
  std::vector<int> ids = s.to_vector();
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return g.label(a) < g.label(b); });
  return ids;
}

std::string head_key(const Admg& g, VertexSet head) {
  std::string key;
  for (int v : lex_sorted_ids(g, head)) {
    if (!key.empty()) key += ",";
    key += g.label(v);
  }
  return key;
}

// Packs a tail assignment (bit per graph vertex) into the parameter-file row
// index, and renders the matching bit-string key.
std::string tail_key(const std::vector<int>& tail_ids, std::uint32_t aligned) {
  std::string key;
  for (int v : tail_ids) key += ((aligned >> v) & 1u) ? '1' : '0';
  return key;
}

}  // namespace

Admg parse_admg_text(const std::string& text) {
  std::vector<std::string> labels;
  std::map<std::string, int> id_of;
  std::vector<std::pair<int, int>> directed;
  std::vector<std::pair<int, int>> bidirected;
  bool edges_seen = false;

  auto resolve = [&](const std::string& name, int line) {
    auto it = id_of.find(name);
    if (it == id_of.end()) throw ParseError(line_msg(line, "unknown node '" + name + "'"));
    return it->second;
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (tokens[0] == "node") {
      if (tokens.size() != 2)
        throw ParseError(line_msg(line_no, "expected 'node <name>'"));
      if (edges_seen)
        throw ParseError(line_msg(line_no, "node declarations must precede edges"));
      const std::string& name = tokens[1];
      if (name.find(',') != std::string::npos)
        throw ParseError(line_msg(line_no, "node name must not contain ','"));
      if (id_of.count(name))
        throw ParseError(line_msg(line_no, "duplicate node '" + name + "'"));
      id_of[name] = static_cast<int>(labels.size());
      labels.push_back(name);
      continue;
    }

    if (tokens.size() == 3 && (tokens[1] == "->" || tokens[1] == "<->")) {
      edges_seen = true;
      int a = resolve(tokens[0], line_no);
      int b = resolve(tokens[2], line_no);
      if (tokens[1] == "->")
        directed.emplace_back(a, b);
      else
        bidirected.emplace_back(a, b);
      continue;
    }

    throw ParseError(line_msg(line_no, "expected 'node <name>', '<a> -> <b>' or '<a> <-> <b>'"));
  }

  return Admg(static_cast<int>(labels.size()), directed, bidirected, labels);
}

Admg load_admg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_admg_text(buf.str());
}

std::string to_admg_text(const Admg& g) {
  std::ostringstream out;
  for (int v = 0; v < g.size(); ++v) out << "node " << g.label(v) << "\n";
  for (auto [a, b] : g.directed_edges()) out << g.label(a) << " -> " << g.label(b) << "\n";
  for (auto [a, b] : g.bidirected_edges()) out << g.label(a) << " <-> " << g.label(b) << "\n";
  return out.str();
}

nlohmann::json graph_to_json(const Admg& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (int v = 0; v < g.size(); ++v) nodes.push_back(g.label(v));
  nlohmann::json dir = nlohmann::json::array();
  for (auto [a, b] : g.directed_edges()) dir.push_back({g.label(a), g.label(b)});
  nlohmann::json bi = nlohmann::json::array();
  for (auto [a, b] : g.bidirected_edges()) bi.push_back({g.label(a), g.label(b)});
  return {{"nodes", nodes}, {"directed", dir}, {"bidirected", bi}};
}

Admg graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes"))
    throw ParseError("graph json must be an object with a 'nodes' array");
  std::vector<std::string> labels;
  std::map<std::string, int> id_of;
  for (const auto& item : j.at("nodes")) {
    std::string name = item.get<std::string>();
    if (id_of.count(name)) throw ParseError("duplicate node '" + name + "'");
    id_of[name] = static_cast<int>(labels.size());
    labels.push_back(name);
  }
  auto resolve = [&](const nlohmann::json& item) {
    std::string name = item.get<std::string>();
    auto it = id_of.find(name);
    if (it == id_of.end()) throw ParseError("unknown node '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<int, int>> directed;
  std::vector<std::pair<int, int>> bidirected;
  if (j.contains("directed"))
    for (const auto& e : j.at("directed")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [from, to] pairs");
      directed.emplace_back(resolve(e[0]), resolve(e[1]));
    }
  if (j.contains("bidirected"))
    for (const auto& e : j.at("bidirected")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [a, b] pairs");
      bidirected.emplace_back(resolve(e[0]), resolve(e[1]));
    }
  return Admg(static_cast<int>(labels.size()), directed, bidirected, labels);
}

nlohmann::json params_to_json(const MobiusContext& ctx, const MobiusParams& params) {
  if (params.q.size() != ctx.heads().size())
    throw IncompleteParams("parameter table count does not match the head list");
  const Admg& g = ctx.graph();
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < ctx.heads().size(); ++i) {
    const HeadTail& ht = ctx.heads()[i];
    VertexSet tail = ht.tail();
    if (params.q[i].size() != std::size_t{1} << tail.size())
      throw IncompleteParams("parameter table for head '" + head_key(g, ht.head) +
                             "' has the wrong row count");
    std::vector<int> tail_ids = lex_sorted_ids(g, tail);
    nlohmann::json rows = nlohmann::json::object();
    std::vector<int> ascending = tail.to_vector();
    for (std::uint32_t packed = 0; packed < (1u << tail.size()); ++packed) {
      std::uint32_t aligned = 0;
      for (std::size_t k = 0; k < ascending.size(); ++k)
        if ((packed >> k) & 1u) aligned |= 1u << ascending[k];
      rows[tail_key(tail_ids, aligned)] = params.q[i][packed];
    }
    out[head_key(g, ht.head)] = rows;
  }
  return out;
}

MobiusParams params_from_json(const MobiusContext& ctx, const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("parameter json must be an object keyed by head");
  const Admg& g = ctx.graph();
  MobiusParams params;
  params.q.resize(ctx.heads().size());
  for (std::size_t i = 0; i < ctx.heads().size(); ++i) {
    const HeadTail& ht = ctx.heads()[i];
    std::string hkey = head_key(g, ht.head);
    if (!j.contains(hkey)) throw IncompleteParams("missing head '" + hkey + "'");
    const nlohmann::json& rows = j.at(hkey);
    VertexSet tail = ht.tail();
    std::vector<int> tail_ids = lex_sorted_ids(g, tail);
    std::vector<int> ascending = tail.to_vector();
    params.q[i].assign(std::size_t{1} << tail.size(), 0.0);
    for (std::uint32_t packed = 0; packed < (1u << tail.size()); ++packed) {
      std::uint32_t aligned = 0;
      for (std::size_t k = 0; k < ascending.size(); ++k)
        if ((packed >> k) & 1u) aligned |= 1u << ascending[k];
      std::string tkey = tail_key(tail_ids, aligned);
      if (!rows.contains(tkey))
        throw IncompleteParams("head '" + hkey + "' missing tail assignment '" + tkey + "'");
      double q = rows.at(tkey).get<double>();
      if (!(q >= 0.0 && q <= 1.0))
        throw ParseError("head '" + hkey + "', tail '" + tkey + "': value " +
                         std::to_string(q) + " outside [0, 1]");
      params.q[i][packed] = q;
    }
  }
  return params;
}

std::string joint_to_csv(const JointTable& table) {
  int n = table.variable_count();
  std::ostringstream out;
  out << "assignment,p\n";
  for (std::uint32_t row = 0; row < (1u << n); ++row) {
    std::string assignment(n, '0');
    std::uint32_t aligned = 0;
    for (int v = 0; v < n; ++v)
      if ((row >> (n - 1 - v)) & 1u) {  // leftmost character is vertex 0
        assignment[v] = '1';
        aligned |= 1u << v;
      }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", table[aligned]);
    out << assignment << "," << buf << "\n";
  }
  return out.str();
}

nlohmann::json verify_report_to_json(const Admg& g, const VerifyReport& report) {
  auto labels_of = [&](VertexSet s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s) arr.push_back(g.label(v));
    return arr;
  };
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const VerifyCounterexample& ce : report.counterexamples) {
    nlohmann::json item = {{"direction", ce.direction}, {"trial", ce.trial}};
    if (ce.direction == "forward") {
      item["margin"] = labels_of(ce.margin);
    } else {
      item["x"] = labels_of(ce.x);
      item["y"] = labels_of(ce.y);
      item["given"] = labels_of(ce.z);
    }
    counterexamples.push_back(item);
  }
  return {{"graph", graph_to_json(g)},
          {"trials", report.trials},
          {"forward_pass", report.forward_pass},
          {"reverse_pass", report.reverse_pass},
          {"ok", report.ok()},
          {"counterexamples", counterexamples}};
}

}  // namespace admg
