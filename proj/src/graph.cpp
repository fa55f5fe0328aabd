#include "vmstar/graph.hpp"

#include <algorithm>
#include <queue>

namespace vmstar {

Graph::Graph(std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    for (size_t i = 1; i < labels.size(); ++i)
        if (labels[i] == labels[i - 1])
            throw Error("duplicate vertex label '" + labels[i].text() + "'");
    labels_ = std::move(labels);
    adj_.assign(labels_.size(), Bitset(int(labels_.size())));
}

Graph Graph::star(const std::vector<Label>& labels, const Label& center) {
    Graph g(labels);
    int c = g.index_of(center);
    for (int i = 0; i < g.size(); ++i)
        if (i != c) g.add_edge_i(c, i);
    return g;
}

Graph Graph::complete(const std::vector<Label>& labels) {
    Graph g(labels);
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) g.add_edge_i(i, j);
    return g;
}

Graph Graph::edgeless(const std::vector<Label>& labels) { return Graph(labels); }

Graph Graph::path(const std::vector<Label>& order) {
    Graph g(order);
    for (size_t i = 0; i + 1 < order.size(); ++i) g.add_edge(order[i], order[i + 1]);
    return g;
}

Graph Graph::cycle(const std::vector<Label>& order) {
    Graph g = path(order);
    if (order.size() > 2) g.add_edge(order.front(), order.back());
    return g;
}

bool Graph::has_vertex(const Label& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    return it != labels_.end() && *it == v;
}

int Graph::index_of(const Label& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || !(*it == v))
        throw UnknownVertex("vertex '" + v.text() + "' is not in the graph");
    return int(it - labels_.begin());
}

std::vector<Label> Graph::neighbors(const Label& v) const {
    std::vector<Label> out;
    adj_[index_of(v)].for_each([&](int i) { out.push_back(labels_[i]); });
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& r : adj_) total += r.count();
    return total / 2;
}

std::vector<std::pair<Label, Label>> Graph::edges() const {
    std::vector<std::pair<Label, Label>> out;
    for (int i = 0; i < size(); ++i)
        adj_[i].for_each([&](int j) {
            if (j > i) out.emplace_back(labels_[i], labels_[j]);
        });
    return out;
}

void Graph::add_edge_i(int u, int v) {
    if (u == v) throw Error("self-loops are not allowed in a simple graph");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge_i(int u, int v) {
    adj_[u].clear(v);
    adj_[v].clear(u);
}

void Graph::toggle_edge_i(int u, int v) {
    adj_[u].flip(v);
    adj_[v].flip(u);
}

void Graph::local_complement_inplace_i(int v) {
    // Complement G[N_v]: for every u in N_v, N_u ^= N_v \ {u}; the row XOR
    // also flips (u,v) and (u,u), which we undo.
    const Bitset nv = adj_[v];
    nv.for_each([&](int u) {
        adj_[u].xor_with(nv);
        adj_[u].clear(u);
        adj_[u].set(v);
    });
}

Graph Graph::local_complement(const Label& v) const {
    Graph g = *this;
    g.local_complement_inplace_i(index_of(v));
    return g;
}

void Graph::pivot_inplace_i(int u, int v) {
    if (!adjacent_i(u, v))
        throw NotAnEdge("pivot requires an edge, but (" + labels_[u].text() + "," +
                        labels_[v].text() + ") is not one");
    local_complement_inplace_i(v);
    local_complement_inplace_i(u);
    local_complement_inplace_i(v);
}

Graph Graph::pivot(const Label& u, const Label& v) const {
    Graph g = *this;
    g.pivot_inplace_i(index_of(u), index_of(v));
    return g;
}

Graph Graph::pivot_at_vertex(const Label& v) const {
    int vi = index_of(v);
    int u = adj_[vi].lowest();
    if (u < 0) return *this;
    Graph g = *this;
    g.pivot_inplace_i(u, vi);
    return g;
}

Graph Graph::induced(const std::vector<Label>& keep) const {
    std::vector<int> idx;
    idx.reserve(keep.size());
    for (const auto& l : keep) idx.push_back(index_of(l));
    Graph g(keep);
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
            if (adjacent_i(idx[a], idx[b])) g.add_edge(keep[a], keep[b]);
    return g;
}

Graph Graph::erased(const Label& v) const {
    std::vector<Label> keep;
    keep.reserve(labels_.size() - 1);
    for (const auto& l : labels_)
        if (!(l == v)) keep.push_back(l);
    if (keep.size() == labels_.size())
        throw UnknownVertex("vertex '" + v.text() + "' is not in the graph");
    return induced(keep);
}

Graph Graph::complemented() const {
    Graph g(labels_);
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (!adjacent_i(i, j)) g.add_edge_i(i, j);
    return g;
}

Bitset Graph::component_of_i(int s) const {
    Bitset seen(size());
    std::queue<int> q;
    seen.set(s);
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        adj_[u].for_each([&](int w) {
            if (!seen.get(w)) {
                seen.set(w);
                q.push(w);
            }
        });
    }
    return seen;
}

bool Graph::is_connected() const {
    if (size() == 0) return true;
    return component_of_i(0).count() == size();
}

std::vector<std::vector<Label>> Graph::connected_components() const {
    std::vector<std::vector<Label>> comps;
    Bitset seen(size());
    for (int i = 0; i < size(); ++i) {
        if (seen.get(i)) continue;
        Bitset c = component_of_i(i);
        seen.or_with(c);
        std::vector<Label> names;
        c.for_each([&](int j) { names.push_back(labels_[j]); });
        comps.push_back(std::move(names));
    }
    return comps;
}

std::optional<int> Graph::distance(const Label& u, const Label& v) const {
    int s = index_of(u), t = index_of(v);
    std::vector<int> dist(size(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        if (a == t) return dist[a];
        adj_[a].for_each([&](int b) {
            if (dist[b] < 0) {
                dist[b] = dist[a] + 1;
                q.push(b);
            }
        });
    }
    return std::nullopt;
}

std::vector<Label> Graph::shortest_path(const Label& s, const Label& t) const {
    int si = index_of(s), ti = index_of(t);
    if (si == ti) return {s};
    std::vector<int> parent(size(), -2);
    std::queue<int> q;
    parent[si] = -1;
    q.push(si);
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        if (a == ti) break;
        // Neighbors iterate in index order, i.e. ascending label.
        adj_[a].for_each([&](int b) {
            if (parent[b] == -2) {
                parent[b] = a;
                q.push(b);
            }
        });
    }
    if (parent[ti] == -2) return {};
    std::vector<Label> path;
    for (int a = ti; a != -1; a = parent[a]) path.push_back(labels_[a]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Label> Graph::cut_vertices() const {
    std::vector<Label> out;
    int base = int(connected_components().size());
    for (int i = 0; i < size(); ++i) {
        Graph g = erased(labels_[i]);
        if (g.size() > 0 && int(g.connected_components().size()) > base) out.push_back(labels_[i]);
    }
    return out;
}

Classification Graph::classify() const {
    int n = size();
    bool complete = true;
    for (int i = 0; i < n && complete; ++i)
        if (degree_i(i) != n - 1) complete = false;
    if (complete) return {GraphShape::Complete, std::nullopt};

    int center = -1, centers = 0;
    for (int i = 0; i < n; ++i) {
        if (degree_i(i) == n - 1) {
            center = i;
            ++centers;
        }
    }
    if (centers == 1) {
        bool leaves_ok = true;
        for (int i = 0; i < n && leaves_ok; ++i)
            if (i != center && degree_i(i) != 1) leaves_ok = false;
        if (leaves_ok) return {GraphShape::Star, labels_[center]};
    }
    return {GraphShape::Other, std::nullopt};
}

std::string Graph::adjacency_key() const {
    std::string key;
    key.reserve(size_t(size()) * ((size() + 7) / 8));
    for (int i = 0; i < size(); ++i) {
        unsigned char byte = 0;
        int nb = 0;
        for (int j = 0; j < size(); ++j) {
            byte = (unsigned char)((byte << 1) | (adjacent_i(i, j) ? 1 : 0));
            if (++nb == 8) {
                key.push_back(char(byte));
                byte = 0;
                nb = 0;
            }
        }
        if (nb) key.push_back(char(byte << (8 - nb)));
    }
    return key;
}

}  // namespace vmstar
