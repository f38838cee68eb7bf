#include "doctest.h"
#include "helpers.hpp"
#include "locdom/errors.hpp"
#include "locdom/graph.hpp"

using namespace locdom;
using namespace testing_graphs;

namespace {
ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Io;
}
}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(70, {3, 65, 0});
    CHECK(s.size() == 3);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(64));
    CHECK(s.to_vector() == std::vector<int>{0, 3, 65});
    s.erase(3);
    CHECK(s.to_string() == "{0,65}");
    CHECK(s.next(1) == 65);
    CHECK(code_of([&] { s.insert(70); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("vertex set lexicographic order") {
    CHECK(VertexSet(5, {0, 2}) < VertexSet(5, {1}));
    CHECK(VertexSet(5, {0}) < VertexSet(5, {0, 2}));
    CHECK_FALSE(VertexSet(5, {1, 2}) < VertexSet(5, {1, 2}));
    CHECK(VertexSet(5, {1, 2}) < VertexSet(5, {1, 3}));
}

TEST_CASE("from_edges normalises and counts") {
    auto g = Graph::from_edges(4, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    g.validate();
}

TEST_CASE("from_edges errors") {
    CHECK(code_of([] { Graph::from_edges(3, {{0, 3}}); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { Graph::from_edges(3, {{1, 1}}); }) == ErrorCode::LoopEdge);
}

TEST_CASE("neighbourhoods") {
    auto g = path(4);
    CHECK(g.open_neighbourhood(1) == VertexSet(4, {0, 2}));
    CHECK(g.closed_neighbourhood(1) == VertexSet(4, {0, 1, 2}));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("remove_edges") {
    auto g = cycle(4);
    auto h = remove_edges(g, {{1, 0}});
    CHECK(h.edge_count() == 3);
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK(code_of([&] { remove_edges(g, {{0, 2}}); }) == ErrorCode::EdgeNotPresent);
}

TEST_CASE("remove_vertices keeps relative order") {
    auto g = path(5);
    auto [h, map] = remove_vertices(g, {1, 3});
    CHECK(h.order() == 3);
    CHECK(h.edge_count() == 0);
    CHECK(map.new_to_old == std::vector<int>{0, 2, 4});
    CHECK(map.to_new(1) == -1);
    CHECK(map.lift(VertexSet(3, {1, 2})) == VertexSet(5, {2, 4}));
    CHECK(map.restrict(VertexSet(5, {1, 2})) == VertexSet(3, {1}));
}

TEST_CASE("components ordered by minimum vertex") {
    auto g = Graph::from_edges(6, {{4, 1}, {0, 5}, {2, 3}});
    auto cs = components(g);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == VertexSet(6, {0, 5}));
    CHECK(cs[1] == VertexSet(6, {1, 4}));
    CHECK(cs[2] == VertexSet(6, {2, 3}));
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(path(3)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("degree predicates") {
    CHECK(is_cubic(k33()));
    CHECK(is_cubic(prism()));
    CHECK(is_subcubic(path(5)));
    CHECK_FALSE(is_subcubic(star(4)));
    CHECK_FALSE(is_cubic(path(4)));
}

TEST_CASE("relabel") {
    auto g = path(3);
    auto h = relabel(g, {2, 0, 1});
    CHECK(h.has_edge(2, 0));
    CHECK(h.has_edge(0, 1));
    CHECK_FALSE(h.has_edge(2, 1));
}
