#include "vmstar/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vmstar/multigraph.hpp"
#include "vmstar/word.hpp"

namespace vmstar::io {

using nlohmann::json;

Graph read_graph_text(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("expected header line 'n m'");
    std::vector<Label> labels;
    labels.reserve(size_t(n));
    for (long long i = 0; i < n; ++i) {
        std::string tok;
        if (!(in >> tok)) throw FormatError("expected " + std::to_string(n) + " vertex labels");
        labels.emplace_back(tok);
    }
    Graph g(std::move(labels));
    for (long long i = 0; i < m; ++i) {
        std::string a, b;
        if (!(in >> a >> b)) throw FormatError("expected " + std::to_string(m) + " edge lines");
        try {
            g.add_edge(Label(a), Label(b));
        } catch (const Error& e) {
            throw FormatError(std::string("bad edge line: ") + e.what());
        }
    }
    return g;
}

void write_graph_text(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.size() << ' ' << es.size() << '\n';
    for (const auto& l : g.labels()) out << l << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
}

Label label_from_json(const json& j) {
    if (j.is_number_integer()) return Label(j.get<long long>());
    if (j.is_string()) return Label(j.get<std::string>());
    throw FormatError("labels must be integers or strings");
}

json label_to_json(const Label& l) {
    if (l.numeric()) return json(l.value());
    return json(l.text());
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw FormatError("graph JSON needs 'vertices' and 'edges'");
    std::vector<Label> labels;
    for (const auto& v : j.at("vertices")) labels.push_back(label_from_json(v));
    Graph g(std::move(labels));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair");
        try {
            g.add_edge(label_from_json(e[0]), label_from_json(e[1]));
        } catch (const Error& err) {
            throw FormatError(std::string("bad edge: ") + err.what());
        }
    }
    return g;
}

json graph_to_json(const Graph& g) {
    json verts = json::array();
    for (const auto& l : g.labels()) verts.push_back(label_to_json(l));
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({label_to_json(u), label_to_json(v)}));
    return json{{"vertices", verts}, {"edges", edges}};
}

void write_graph_dot(std::ostream& out, const Graph& g) {
    out << "graph g {\n";
    for (const auto& l : g.labels()) out << "  \"" << l << "\";\n";
    for (const auto& [u, v] : g.edges()) out << "  \"" << u << "\" -- \"" << v << "\";\n";
    out << "}\n";
}

json plan_moves_to_json(const Plan& p) {
    json arr = json::array();
    for (const auto& m : p.moves) {
        json jm;
        switch (m.kind) {
            case MoveKind::LC: jm["op"] = "LC"; break;
            case MoveKind::MeasX: jm["op"] = "MX"; break;
            case MoveKind::MeasY: jm["op"] = "MY"; break;
            case MoveKind::MeasZ: jm["op"] = "MZ"; break;
        }
        jm["v"] = label_to_json(m.v);
        if (m.partner) jm["partner"] = label_to_json(*m.partner);
        arr.push_back(jm);
    }
    return arr;
}

std::vector<Move> plan_moves_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("plan JSON must be a list of moves");
    std::vector<Move> moves;
    for (const auto& jm : j) {
        std::string op = jm.at("op").get<std::string>();
        Label v = label_from_json(jm.at("v"));
        std::optional<Label> partner;
        if (jm.contains("partner")) partner = label_from_json(jm.at("partner"));
        if (op == "LC")
            moves.push_back(Move::lc(v));
        else if (op == "MX")
            moves.push_back(Move::mx(v, partner));
        else if (op == "MY")
            moves.push_back(Move::my(v));
        else if (op == "MZ")
            moves.push_back(Move::mz(v));
        else
            throw FormatError("unknown plan op '" + op + "'");
    }
    return moves;
}

Dow read_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<Label> letters;
    std::string tok;
    while (in >> tok) letters.emplace_back(tok);
    return Dow(std::move(letters));
}

std::string write_word(const Dow& w) {
    std::string out;
    for (int i = 0; i < w.length(); ++i) {
        if (i) out += ' ';
        out += w.letters()[i].text();
    }
    return out;
}

MultiGraph read_multigraph_text(std::istream& in) {
    MultiGraph g;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long id;
        std::string u, v;
        if (!(ls >> id)) continue;  // blank line
        if (!(ls >> u >> v)) throw FormatError("multigraph line needs 'id u v': " + line);
        g.add_edge(int(id), Label(u), Label(v));
    }
    return g;
}

void write_multigraph_text(std::ostream& out, const MultiGraph& f) {
    for (const auto& e : f.edges()) out << e.id << ' ' << e.u << ' ' << e.v << '\n';
}

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Graph load_graph(const std::string& path) {
    std::string text = slurp(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && (text[i] == '{' || text[i] == '[')) {
        return graph_from_json(json::parse(text));
    }
    std::istringstream in(text);
    return read_graph_text(in);
}

MultiGraph load_multigraph(const std::string& path) {
    std::string text = slurp(path);
    std::istringstream in(text);
    return read_multigraph_text(in);
}

}  // namespace vmstar::io
