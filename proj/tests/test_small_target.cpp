#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vmstar/oracle.hpp"
#include "vmstar/small_target.hpp"

using namespace vmstar;
using test::labels_upto;

TEST_CASE("already adjacent pairs need no moves") {
    Graph g = Graph::path(labels_upto(4));
    Plan p = make_pair(g, Label(2), Label(3));
    CHECK(p.moves.empty());
}

TEST_CASE("a path a-x-y-b closes with two interior complementations") {
    Graph g = Graph::path({Label("a"), Label("x"), Label("y"), Label("b")});
    Plan p = make_pair(g, Label("a"), Label("b"));
    REQUIRE(p.moves.size() == 2);
    CHECK(p.moves[0] == Move::lc(Label("x")));
    CHECK(p.moves[1] == Move::lc(Label("y")));
    Graph after = g;
    for (const auto& m : p.moves) after = apply_move(after, m);
    CHECK(after.adjacent(Label("a"), Label("b")));
}

TEST_CASE("pair plans leave the endpoints adjacent on random connected graphs") {
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_connected(3 + int(rng() % 9), rng, 0.3);
        Label a = g.label(int(rng() % g.size()));
        Label b = g.label(int(rng() % g.size()));
        if (a == b) continue;
        Plan p = make_pair(g, a, b);
        Graph after = g;
        for (const auto& m : p.moves) after = apply_move(after, m);
        CHECK(after.adjacent(a, b));
    }
}

TEST_CASE("disconnected endpoints are rejected") {
    Graph g = Graph::edgeless(labels_upto(3));
    g.add_edge(Label(1), Label(2));
    CHECK_THROWS_AS(make_pair(g, Label(1), Label(3)), NotConnected);
}

TEST_CASE("triangles and short paths are already connected triples") {
    Graph t = Graph::complete(labels_upto(3));
    CHECK(make_triple(t, Label(1), Label(2), Label(3)).moves.empty());
    Graph p = Graph::path(labels_upto(3));
    Plan plan = make_triple(p, Label(1), Label(2), Label(3));
    CHECK(plan.moves.size() <= 1);
}

TEST_CASE("triple walks connect the induced triple on random graphs") {
    Rng rng(7);
    int done = 0;
    while (done < 300) {
        Graph g = random_connected(3 + int(rng() % 10), rng, 0.3);
        std::vector<int> idx(g.size());
        for (int i = 0; i < g.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        Label a = g.label(idx[0]), b = g.label(idx[1]), c = g.label(idx[2]);
        Plan p = make_triple(g, a, b, c);
        Graph after = g;
        for (const auto& m : p.moves) after = apply_move(after, m);
        CHECK(after.induced({a, b, c}).is_connected());
        // connected targets on contained vertices are always reachable
        CHECK(vertex_minor_bruteforce(g, Graph::star({a, b, c}, a)).has_value());
        ++done;
    }
}

TEST_CASE("small targets replay exactly") {
    SUBCASE("an edge inside a cycle") {
        Graph g = Graph::cycle(labels_upto(6));
        Graph target = Graph::complete({Label(2), Label(5)});
        Plan p = small_vertex_minor(g, target);
        CHECK(apply_plan(g, p) == target);
    }
    SUBCASE("a path on three chosen vertices of a cycle") {
        Graph g = Graph::cycle(labels_upto(6));
        Graph target = Graph::path({Label(1), Label(3), Label(5)});
        Plan p = small_vertex_minor(g, target);
        CHECK(apply_plan(g, p) == target);
    }
    SUBCASE("a one-vertex target") {
        Graph g = Graph::cycle(labels_upto(5));
        Graph target = Graph::edgeless({Label(4)});
        Plan p = small_vertex_minor(g, target);
        CHECK(apply_plan(g, p) == target);
    }
}

TEST_CASE("random connected targets on three contained vertices always succeed") {
    Rng rng(11);
    int done = 0;
    while (done < 250) {
        Graph g = random_connected(3 + int(rng() % 10), rng, 0.35);
        std::vector<int> idx(g.size());
        for (int i = 0; i < g.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        int k = 1 + int(rng() % 3);
        std::vector<Label> tv;
        for (int i = 0; i < k; ++i) tv.push_back(g.label(idx[i]));
        Graph target = [&]() {
            switch (k) {
                case 1: return Graph::edgeless(tv);
                case 2: return Graph::complete(tv);
                default:
                    return rng() & 1 ? Graph::complete(tv) : Graph::star(tv, tv[rng() % 3]);
            }
        }();
        Plan p = small_vertex_minor(g, target);
        CHECK(apply_plan(g, p) == target);
        // intermediate connectivity is the operation's own contract: replay
        // prefix by prefix and watch the surviving graph
        Graph cur = g;
        bool all_connected = true;
        for (const auto& m : p.moves) {
            cur = apply_move(cur, m);
            if (!cur.is_connected()) all_connected = false;
        }
        CHECK(all_connected);
        ++done;
    }
}

TEST_CASE("targets outside the graph or disconnected hosts are rejected") {
    Graph g = Graph::path(labels_upto(3));
    CHECK_THROWS_AS(small_vertex_minor(g, Graph::complete({Label(7), Label(8)})), InvalidTarget);
    CHECK_THROWS_AS(small_vertex_minor(g, Graph::edgeless({Label(1), Label(2)})), InvalidTarget);
    Graph split = Graph::edgeless(labels_upto(4));
    split.add_edge(Label(1), Label(2));
    split.add_edge(Label(3), Label(4));
    CHECK_THROWS_AS(small_vertex_minor(split, Graph::complete({Label(1), Label(2)})),
                    NotConnected);
}
