#include "vmstar/multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace vmstar {

MultiGraph::MultiGraph(std::vector<Label> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);
}

void MultiGraph::add_vertex(const Label& v) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || !(*it == v)) vertices_.insert(it, v);
}

void MultiGraph::add_edge(int id, const Label& u, const Label& v) {
    if (has_edge_id(id)) throw Error("duplicate edge id " + std::to_string(id));
    add_vertex(u);
    add_vertex(v);
    Edge e{id, u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& a, int b) { return a.id < b; });
    edges_.insert(it, e);
}

int MultiGraph::add_edge(const Label& u, const Label& v) {
    int id = edges_.empty() ? 0 : edges_.back().id + 1;
    add_edge(id, u, v);
    return id;
}

const MultiGraph::Edge& MultiGraph::edge(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& a, int b) { return a.id < b; });
    if (it == edges_.end() || it->id != id) throw Error("no edge with id " + std::to_string(id));
    return *it;
}

bool MultiGraph::has_edge_id(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& a, int b) { return a.id < b; });
    return it != edges_.end() && it->id == id;
}

int MultiGraph::degree(const Label& v) const {
    int d = 0;
    for (const auto& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

bool MultiGraph::is_regular(int k) const {
    for (const auto& v : vertices_)
        if (degree(v) != k) return false;
    return true;
}

std::vector<int> MultiGraph::incident_ids(const Label& v) const {
    std::vector<int> out;
    for (const auto& e : edges_)
        if (e.u == v || e.v == v) out.push_back(e.id);
    return out;
}

bool MultiGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::set<Label> seen;
    std::queue<Label> q;
    q.push(vertices_[0]);
    seen.insert(vertices_[0]);
    while (!q.empty()) {
        Label a = q.front();
        q.pop();
        for (const auto& e : edges_) {
            if (e.u == a && !seen.count(e.v)) {
                seen.insert(e.v);
                q.push(e.v);
            }
            if (e.v == a && !seen.count(e.u)) {
                seen.insert(e.u);
                q.push(e.u);
            }
        }
    }
    return int(seen.size()) == vertex_count();
}

const Label& MultiGraph::other_end(int edge_id, const Label& from) const {
    const Edge& e = edge(edge_id);
    if (e.u == from) return e.v;
    if (e.v == from) return e.u;
    throw Error("edge " + std::to_string(edge_id) + " is not incident to '" + from.text() + "'");
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        bool same = x.id == y.id && ((x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u));
        if (!same) return false;
    }
    return true;
}

EulerianTour::EulerianTour(const MultiGraph& g, Label start, std::vector<int> edge_seq)
    : EulerianTour(std::make_shared<const MultiGraph>(g), std::move(start), std::move(edge_seq)) {}

EulerianTour::EulerianTour(std::shared_ptr<const MultiGraph> g, Label start,
                           std::vector<int> edge_seq)
    : graph_(std::move(g)), start_(std::move(start)), edge_seq_(std::move(edge_seq)) {
    if (int(edge_seq_.size()) != graph_->edge_count())
        throw NotEulerian("tour uses " + std::to_string(edge_seq_.size()) + " edges, graph has " +
                          std::to_string(graph_->edge_count()));
    build_vertex_seq();
}

void EulerianTour::build_vertex_seq() {
    verts_.clear();
    verts_.reserve(edge_seq_.size());
    std::set<int> used;
    Label cur = start_;
    for (int id : edge_seq_) {
        if (used.count(id)) throw NotEulerian("edge id " + std::to_string(id) + " traversed twice");
        used.insert(id);
        verts_.push_back(cur);
        cur = graph_->other_end(id, cur);
    }
    if (!(cur == start_)) throw NotEulerian("tour does not close on its start vertex");
}

Dow EulerianTour::induced_word() const {
    std::vector<Label> letters(verts_);
    return Dow(std::move(letters));
}

EulerianTour EulerianTour::kappa(const Label& v) const {
    int first = -1, second = -1;
    for (int i = 0; i < length(); ++i) {
        if (verts_[i] == v) {
            if (first < 0)
                first = i;
            else {
                second = i;
                break;
            }
        }
    }
    if (first < 0) throw UnknownVertex("vertex '" + v.text() + "' not on tour");
    if (second < 0) return *this;  // single visit: closed by the start, nothing enclosed
    std::vector<int> seq(edge_seq_);
    std::reverse(seq.begin() + first, seq.begin() + second);
    return EulerianTour(graph_, start_, std::move(seq));
}

EulerianTour EulerianTour::reversed() const {
    std::vector<int> seq(edge_seq_.rbegin(), edge_seq_.rend());
    return EulerianTour(graph_, start_, std::move(seq));
}

EulerianTour EulerianTour::rotated(int shift) const {
    int n = length();
    shift = ((shift % n) + n) % n;
    std::vector<int> seq;
    seq.reserve(n);
    for (int i = 0; i < n; ++i) seq.push_back(edge_seq_[(i + shift) % n]);
    return EulerianTour(graph_, verts_[shift], std::move(seq));
}

std::vector<int> EulerianTour::canonical_key() const {
    std::vector<int> best(edge_seq_);
    auto consider = [&](const std::vector<int>& cand) {
        if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
            best = cand;
    };
    int n = length();
    std::vector<int> rev(edge_seq_.rbegin(), edge_seq_.rend());
    for (int s = 0; s < n; ++s) {
        std::vector<int> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = edge_seq_[(i + s) % n];
            b[i] = rev[(i + s) % n];
        }
        consider(a);
        consider(b);
    }
    return best;
}

bool EulerianTour::equivalent(const EulerianTour& other) const {
    return length() == other.length() && canonical_key() == other.canonical_key();
}

EulerianTour eulerian_tour(const MultiGraph& g) {
    for (const auto& v : g.vertices())
        if (g.degree(v) % 2 != 0)
            throw NotEulerian("vertex '" + v.text() + "' has odd degree");
    if (!g.is_connected()) throw NotEulerian("multigraph is not connected");
    if (g.edge_count() == 0) throw NotEulerian("multigraph has no edges");

    // Hierholzer with a stack; edges leave each vertex in ascending id order.
    std::map<Label, std::vector<int>> inc;
    for (const auto& v : g.vertices()) inc[v] = g.incident_ids(v);
    std::map<Label, size_t> next;
    std::set<int> used;

    Label start = g.vertices().front();
    if (g.degree(start) == 0)
        for (const auto& v : g.vertices())
            if (g.degree(v) > 0) {
                start = v;
                break;
            }

    std::vector<std::pair<Label, int>> stack;  // (vertex, edge taken to get here)
    std::vector<int> circuit;                  // edge ids, built backwards
    stack.push_back({start, -1});
    while (!stack.empty()) {
        Label v = stack.back().first;
        auto& ids = inc[v];
        size_t& k = next[v];
        while (k < ids.size() && used.count(ids[k])) ++k;
        if (k < ids.size()) {
            int id = ids[k];
            used.insert(id);
            stack.push_back({g.other_end(id, v), id});
        } else {
            if (stack.back().second >= 0) circuit.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return EulerianTour(g, start, std::move(circuit));
}

namespace {

struct TourEnum {
    std::shared_ptr<const MultiGraph> gp;
    const MultiGraph& g;
    const std::function<bool(const EulerianTour&)>& visit;
    long long budget;
    long long emitted = 0;
    bool stopped = false;
    std::map<Label, std::vector<int>> inc;
    std::set<int> used;
    std::vector<int> seq;
    Label start;

    TourEnum(const MultiGraph& g_, const std::function<bool(const EulerianTour&)>& v_,
             long long budget_)
        : gp(std::make_shared<const MultiGraph>(g_)), g(*gp), visit(v_), budget(budget_) {}

    void run(const Label& s) {
        start = s;
        for (const auto& v : g.vertices()) inc[v] = g.incident_ids(v);
        extend(s);
    }

    void extend(const Label& at) {
        if (stopped) return;
        if (int(seq.size()) == g.edge_count()) {
            if (!(at == start)) return;
            if (++emitted > budget) throw BudgetExceeded("eulerian tour enumeration budget hit");
            if (!visit(EulerianTour(gp, start, seq))) stopped = true;
            return;
        }
        for (int id : inc[at]) {
            if (used.count(id)) continue;
            used.insert(id);
            seq.push_back(id);
            extend(g.other_end(id, at));
            seq.pop_back();
            used.erase(id);
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_eulerian_tours(const MultiGraph& g, const Label& start,
                              const std::function<bool(const EulerianTour&)>& visit,
                              long long budget) {
    for (const auto& v : g.vertices())
        if (g.degree(v) % 2 != 0)
            throw NotEulerian("vertex '" + v.text() + "' has odd degree");
    if (!g.is_connected()) throw NotEulerian("multigraph is not connected");
    TourEnum e(g, visit, budget);
    e.run(start);
}

std::pair<MultiGraph, EulerianTour> multigraph_from_word(const Dow& word) {
    if (word.length() == 0) throw MalformedWord("empty word has no multigraph");
    const auto& w = word.letters();
    int n = word.length();
    auto g = std::make_shared<MultiGraph>(word.letter_set());
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) {
        g->add_edge(i, w[i], w[(i + 1) % n]);
        seq[i] = i;
    }
    MultiGraph out(*g);
    EulerianTour tour(std::shared_ptr<const MultiGraph>(g), w[0], std::move(seq));
    return {std::move(out), std::move(tour)};
}

}  // namespace vmstar
