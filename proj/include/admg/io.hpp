#pragma once

#include <string>

#include "json.hpp"

#include "admg/binary_param.hpp"
#include "admg/graph.hpp"
#include "admg/joint_table.hpp"
#include "admg/oracle.hpp"

namespace admg {

// Graph text format, one item per line:
//   # comment (also allowed after an item)
//   node <label>          -- declarations first; order assigns ids 0,1,...
//   <label> -> <label>
//   <label> <-> <label>
// ParseError messages carry 1-based line numbers.
Admg parse_admg_text(const std::string& text);
Admg load_admg(const std::string& path);

// Canonical rendering: nodes in id order, then sorted directed edges, then
// sorted bidirected edges.  parse(render(g)) reproduces g exactly.
std::string to_admg_text(const Admg& g);

// {"nodes": [...], "directed": [[a,b],...], "bidirected": [[a,b],...]},
// all entries as labels, edges in canonical order.
nlohmann::json graph_to_json(const Admg& g);
Admg graph_from_json(const nlohmann::json& j);

// Parameter file: map from head key to {tail-assignment bit-string: q}.
// Head keys list the head's labels sorted lexicographically, joined by ",";
// tail bit-strings order positions by lexicographically sorted tail labels;
// the empty tail uses key "".
nlohmann::json params_to_json(const MobiusContext& ctx, const MobiusParams& params);
MobiusParams params_from_json(const MobiusContext& ctx, const nlohmann::json& j);

// CSV with header "assignment,p"; the assignment string's i-th character is
// the value of vertex i, rows sorted by assignment string.
std::string joint_to_csv(const JointTable& table);

nlohmann::json verify_report_to_json(const Admg& g, const VerifyReport& report);

}  // namespace admg
