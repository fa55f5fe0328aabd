#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vmstar/dh.hpp"
#include "vmstar/oracle.hpp"

using namespace vmstar;
using test::labels_upto;

TEST_CASE("long paths have a foliage of exactly four") {
    for (int k = 5; k <= 9; ++k) {
        auto f = foliage(Graph::path(labels_upto(k)));
        CHECK(f.foliage.size() == 4);
        CHECK(f.leaves == std::set<Label>{Label(1), Label(k)});
        CHECK(f.axils == std::set<Label>{Label(2), Label(k - 1)});
    }
}

TEST_CASE("every vertex of a complete graph is a true twin") {
    for (int n = 2; n <= 6; ++n) {
        Graph k = Graph::complete(labels_upto(n));
        auto f = foliage(k);
        CHECK(int(f.twins.size()) == n);
        CHECK(int(f.foliage.size()) == n);
        CHECK(are_twins(k, Label(1), Label(2)));
    }
}

TEST_CASE("small connected DH graphs have full foliage") {
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + int(rng() % 3);  // 2..4
        Graph g = random_dh(n, rng);
        CHECK(int(foliage(g).foliage.size()) == n);
    }
}

TEST_CASE("twin partners are pairwise twins") {
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_dh(2 + int(rng() % 8), rng);
        auto f = foliage(g);
        for (const auto& [v, partners] : f.twins)
            for (size_t i = 0; i < partners.size(); ++i)
                for (size_t j = i + 1; j < partners.size(); ++j)
                    CHECK(are_twins(g, partners[i], partners[j]));
    }
}

TEST_CASE("C_5 is not distance-hereditary, C_4 and trees are") {
    CHECK(!is_distance_hereditary(Graph::cycle(labels_upto(5))));
    CHECK(is_distance_hereditary(Graph::cycle(labels_upto(4))));
    CHECK(is_distance_hereditary(Graph::path(labels_upto(7))));
    Graph tree = Graph::edgeless(labels_upto(6));
    tree.add_edge(Label(1), Label(2));
    tree.add_edge(Label(1), Label(3));
    tree.add_edge(Label(2), Label(4));
    tree.add_edge(Label(2), Label(5));
    tree.add_edge(Label(3), Label(6));
    CHECK(is_distance_hereditary(tree));
}

TEST_CASE("recognition agrees with the distance definition on small graphs") {
    Rng rng(7);
    for (int it = 0; it < 150; ++it) {
        Graph g = it % 2 ? random_graph(3 + int(rng() % 5), rng, 0.45)
                         : random_dh(3 + int(rng() % 5), rng);
        if (!g.is_connected()) continue;
        CHECK(is_distance_hereditary(g) == test::dh_by_distances(g));
    }
}

TEST_CASE("generated DH graphs are connected, sized and recognized") {
    Rng rng(11);
    CHECK(random_dh(1, rng) == Graph::edgeless({Label(1)}));
    CHECK(random_dh(2, rng) == Graph::complete(labels_upto(2)));
    for (int it = 0; it < 100; ++it) {
        int n = 1 + int(rng() % 12);
        Graph g = random_dh(n, rng);
        CHECK(g.size() == n);
        CHECK(g.is_connected());
        CHECK(is_distance_hereditary(g));
    }
}

TEST_CASE("growth never shrinks the foliage") {
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        std::vector<GrowthStep> trace;
        Graph g = random_dh(9, rng, 1.0 / 3, 1.0 / 3, 1.0 / 3, &trace);
        // Rebuild the trace step by step and watch |T| along the way.
        Graph cur = Graph::edgeless({g.label(0)});
        size_t prev = foliage(cur).foliage.size();
        Graph full = Graph::edgeless(g.labels());
        // replay on the full label set restricted to grown-so-far vertices
        std::vector<Label> grown{g.label(0)};
        for (const auto& step : trace) {
            grown.push_back(step.added);
            cur = g.induced(grown);
            size_t now = foliage(cur).foliage.size();
            CHECK(now >= prev);
            prev = now;
        }
        (void)full;
    }
}

TEST_CASE("reduction keeps a pendant-free core and the same answers") {
    // K_2 {1,2} plus pendant leaf 3: keeping the K_2 strips the leaf.
    Graph g = Graph::path(labels_upto(3));
    auto [h, prefix] = reduce_instance(g, {Label(1), Label(2)});
    CHECK(h == Graph::complete(labels_upto(2)));
    CHECK(prefix.empty());
}

TEST_CASE("reduction preserves brute-force vertex-minor answers") {
    Rng rng(17);
    int done = 0;
    while (done < 40) {
        Graph g = random_dh(5 + int(rng() % 4), rng);
        int k = 2 + int(rng() % 2);
        std::set<Label> keep;
        while (int(keep.size()) < k) keep.insert(g.label(int(rng() % g.size())));
        auto [h, prefix] = reduce_instance(g, keep);
        std::vector<Label> kv(keep.begin(), keep.end());
        Graph star = Graph::star(kv, kv[0]);
        bool before = vertex_minor_bruteforce(g, star).has_value();
        bool after = vertex_minor_bruteforce(h, star).has_value();
        CHECK(before == after);
        ++done;
    }
}

TEST_CASE("every cut component of a DH graph reaches the foliage") {
    Rng rng(19);
    for (int it = 0; it < 80; ++it) {
        Graph g = random_dh(4 + int(rng() % 7), rng);
        auto f = foliage(g);
        for (const auto& cut : g.cut_vertices()) {
            Graph without = g.erased(cut);
            for (const auto& comp : without.connected_components()) {
                bool hit = false;
                for (const auto& v : comp)
                    if (f.foliage.count(v)) hit = true;
                CHECK(hit);
            }
        }
    }
}
