#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"

using namespace locdom;
using namespace testing_graphs;

namespace {
ErrorCode parse_error(std::string_view s) {
    try {
        parse_graph6(s);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error for " << s);
    return ErrorCode::Io;
}
}  // namespace

// Reference strings below were produced by an independent graph6 encoder.
TEST_CASE("graph6 known strings") {
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<C~\n") == complete(4));

    auto empty2 = parse_graph6("A?");
    CHECK(empty2.order() == 2);
    CHECK(empty2.edge_count() == 0);
    // '_' carries the single upper-triangle bit, so this is one edge.
    auto k2 = parse_graph6("A_");
    CHECK(k2.edge_count() == 1);

    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(to_graph6(k33()) == "EFz_");
    CHECK(to_graph6(prism()) == "E{Sw");
}

TEST_CASE("graph6 errors") {
    CHECK(parse_error("C") == ErrorCode::TruncatedBody);
    CHECK(parse_error("") == ErrorCode::MalformedHeader);
    CHECK(parse_error(" ") == ErrorCode::MalformedHeader);
    CHECK(parse_error("~") == ErrorCode::MalformedHeader);
    CHECK(parse_error("B@") == ErrorCode::NonZeroPadding);
    CHECK(parse_error("BA") == ErrorCode::NonZeroPadding);
    CHECK(parse_error("C\x7f") == ErrorCode::ByteOutOfRange);
    CHECK(parse_error("C~~") == ErrorCode::TrailingData);
    CHECK(parse_error("~???") == ErrorCode::MalformedHeader);
    CHECK(parse_error("~??~") == ErrorCode::TruncatedBody);
}

TEST_CASE("graph6 long size field") {
    auto g = path(70);
    auto s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 30);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) es.emplace_back(i, j);
        auto g = Graph::from_edges(n, es);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("edge list format") {
    auto g = parse_edge_list("# a path\nn 5\n0 1\n1 2  # middle\n\n2 3\n");
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(parse_edge_list("0 1\n1 2\n").order() == 3);
    CHECK(parse_edge_list("").order() == 0);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 2\n"), Error);
}

TEST_CASE("format sniffing") {
    CHECK(sniff_format("C~\n") == GraphFormat::Graph6);
    CHECK(sniff_format("0 1\n") == GraphFormat::EdgeList);
    CHECK(parse_graph("C~\n") == complete(4));
}

TEST_CASE("dot output") {
    DotOptions opts;
    opts.highlight = VertexSet(3, {1});
    opts.labels[0] = "a";
    auto dot = to_dot(path(3), opts);
    CHECK(dot.find("0 [label=\"a\"]") != std::string::npos);
    CHECK(dot.find("1 [style=filled, fillcolor=gray]") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
}
