#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vmstar/graph.hpp"
#include "vmstar/plan.hpp"

namespace vmstar {
class MultiGraph;
class Dow;
}

namespace vmstar::io {

// Text edge-list format: first line "n m", then n label lines, then m lines
// "label label".
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

// {"vertices":[...], "edges":[[u,v],...]}; numeric labels are emitted as
// JSON numbers and accepted either way.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

void write_graph_dot(std::ostream& out, const Graph& g);

// Plan serialization: a list of {op:"LC"|"MX"|"MY"|"MZ", v, partner?}.
nlohmann::json plan_moves_to_json(const Plan& p);
std::vector<Move> plan_moves_from_json(const nlohmann::json& j);

// Double occurrence words: whitespace-separated labels.
Dow read_word(const std::string& text);
std::string write_word(const Dow& w);

// Multigraph edge list: one edge per line, "id u v"; '#' starts a comment.
MultiGraph read_multigraph_text(std::istream& in);
void write_multigraph_text(std::ostream& out, const MultiGraph& f);

Label label_from_json(const nlohmann::json& j);
nlohmann::json label_to_json(const Label& l);

// Loads a graph from a file, sniffing JSON vs. text edge-list. "-" = stdin.
Graph load_graph(const std::string& path);
MultiGraph load_multigraph(const std::string& path);

}  // namespace vmstar::io
