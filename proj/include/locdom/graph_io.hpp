#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

enum class GraphFormat { Graph6, EdgeList };

std::string_view format_name(GraphFormat f);
GraphFormat parse_format_name(std::string_view name);

// graph6 as used by nauty: optional ">>graph6<<" header, size field, then the
// upper triangle packed column by column into 6-bit printable bytes.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Plain edge list: optional "n <N>" line, one "u v" pair per line, '#' starts
// a comment. Without an "n" line the order is one more than the largest index.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Guesses the format of a file body: a single token line is graph6.
GraphFormat sniff_format(std::string_view text);
Graph parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt);
std::string format_graph(const Graph& g, GraphFormat format);

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);
void write_text_file(const std::string& path, std::string_view body);
std::string read_text_file(const std::string& path);

struct DotOptions {
    std::optional<VertexSet> highlight;
    std::map<int, std::string> labels;
};
std::string to_dot(const Graph& g, const DotOptions& opts = {});

}  // namespace locdom
