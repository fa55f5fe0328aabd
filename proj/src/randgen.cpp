#include "vmstar/randgen.hpp"

#include <algorithm>
#include <numeric>

namespace vmstar {

Graph random_dh(int n, Rng& rng, double p_leaf, double p_false, double p_true,
                std::vector<GrowthStep>* trace) {
    if (n < 1) throw Error("random_dh needs n >= 1");
    double total = p_leaf + p_false + p_true;
    if (total <= 0) throw Error("growth probabilities must sum to a positive value");

    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i) labels.emplace_back(i);
    Graph g(labels);
    // Grow on the prefix 1..k of the label set; all labels already exist as
    // isolated vertices until their growth step reaches them.
    std::uniform_real_distribution<double> coin(0.0, total);
    for (int k = 2; k <= n; ++k) {
        std::uniform_int_distribution<int> pick(0, k - 2);
        int anchor = pick(rng);
        int added = k - 1;
        double c = coin(rng);
        GrowthOp op = c < p_leaf ? GrowthOp::Leaf
                                 : (c < p_leaf + p_false ? GrowthOp::FalseTwin : GrowthOp::TrueTwin);
        // A false twin of the isolated root would disconnect the graph; on
        // K_1 all three operations coincide in K_2.
        if (op == GrowthOp::FalseTwin && g.degree_i(anchor) == 0) op = GrowthOp::Leaf;
        switch (op) {
            case GrowthOp::Leaf:
                g.add_edge_i(anchor, added);
                break;
            case GrowthOp::FalseTwin:
                g.row(anchor).for_each([&](int u) { g.add_edge_i(added, u); });
                break;
            case GrowthOp::TrueTwin:
                g.row(anchor).for_each([&](int u) { g.add_edge_i(added, u); });
                g.add_edge_i(added, anchor);
                break;
        }
        if (trace) trace->push_back({op, g.label(anchor), g.label(added)});
    }
    return g;
}

Graph random_connected(int n, Rng& rng, double extra_edge_prob) {
    if (n < 1) throw Error("random_connected needs n >= 1");
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i) labels.emplace_back(i);
    Graph g(labels);
    for (int k = 1; k < n; ++k) {
        std::uniform_int_distribution<int> pick(0, k - 1);
        g.add_edge_i(pick(rng), k);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent_i(i, j) && coin(rng) < extra_edge_prob) g.add_edge_i(i, j);
    return g;
}

Graph random_graph(int n, Rng& rng, double edge_prob) {
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i) labels.emplace_back(i);
    Graph g(labels);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) g.add_edge_i(i, j);
    return g;
}

namespace {

// Pairing model: k points per vertex, random perfect matching.
template <typename AcceptPair>
bool try_pairing(int n, int k, Rng& rng, AcceptPair&& accept) {
    std::vector<int> points(n * k);
    for (int i = 0; i < n * k; ++i) points[i] = i / k;
    std::shuffle(points.begin(), points.end(), rng);
    for (size_t i = 0; i < points.size(); i += 2)
        if (!accept(points[i], points[i + 1])) return false;
    return true;
}

}  // namespace

Graph random_cubic(int n, Rng& rng) {
    if (n < 4 || n % 2 != 0) throw Error("a cubic graph needs an even order >= 4");
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i) labels.emplace_back(i);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g(labels);
        bool ok = try_pairing(n, 3, rng, [&](int u, int v) {
            if (u == v || g.adjacent_i(u, v)) return false;
            g.add_edge_i(u, v);
            return true;
        });
        if (ok && g.is_connected()) return g;
    }
    throw Error("failed to sample a connected cubic graph");
}

MultiGraph random_four_regular(int n, Rng& rng) {
    if (n < 1) throw Error("random_four_regular needs n >= 1");
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i) labels.emplace_back(i);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        MultiGraph g(labels);
        try_pairing(n, 4, rng, [&](int u, int v) {
            g.add_edge(labels[u], labels[v]);
            return true;
        });
        if (g.is_connected()) return g;
    }
    throw Error("failed to sample a connected 4-regular multigraph");
}

namespace {

// Backtracks over symmetric degree matrices: diag = loop counts (each loop
// adds 2 to the degree), off-diag = edge multiplicities.
void enumerate_degree_matrices(int n, int row, int col, std::vector<std::vector<int>>& m,
                               std::vector<int>& remaining, std::vector<MultiGraph>& out) {
    if (row == n) {
        std::vector<Label> labels;
        for (int i = 1; i <= n; ++i) labels.emplace_back(i);
        MultiGraph g(labels);
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < m[i][i]; ++l) g.add_edge(labels[i], labels[i]);
            for (int j = i + 1; j < n; ++j)
                for (int c = 0; c < m[i][j]; ++c) g.add_edge(labels[i], labels[j]);
        }
        if (g.is_connected()) out.push_back(std::move(g));
        return;
    }
    if (col == n) {
        if (remaining[row] == 0) enumerate_degree_matrices(n, row + 1, row + 1, m, remaining, out);
        return;
    }
    if (col == row) {
        // loops: each consumes 2 of the row's remaining degree
        for (int loops = 0; 2 * loops <= remaining[row] && loops <= 2; ++loops) {
            m[row][row] = loops;
            remaining[row] -= 2 * loops;
            enumerate_degree_matrices(n, row, col + 1, m, remaining, out);
            remaining[row] += 2 * loops;
        }
        m[row][row] = 0;
        return;
    }
    int cap = std::min(remaining[row], std::min(remaining[col], 4));
    for (int mult = 0; mult <= cap; ++mult) {
        m[row][col] = m[col][row] = mult;
        remaining[row] -= mult;
        remaining[col] -= mult;
        enumerate_degree_matrices(n, row, col + 1, m, remaining, out);
        remaining[row] += mult;
        remaining[col] += mult;
    }
    m[row][col] = m[col][row] = 0;
}

}  // namespace

std::vector<MultiGraph> all_connected_four_regular(int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::vector<int> remaining(n, 4);
    std::vector<MultiGraph> out;
    enumerate_degree_matrices(n, 0, 0, m, remaining, out);
    return out;
}

}  // namespace vmstar
