#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "skewspec/graph.hpp"

namespace skewspec::io {

/// Contents of a graph file: "ug" headers give a Graph, "og" headers an
/// OrientedGraph.
using GraphFile = std::variant<Graph, OrientedGraph>;

/// Line-oriented text format:
///
///   # comment
///   og <n> <m>        (or: ug <n> <m>)
///   a <u> <v>         arc u -> v, one line per arc   (ug files: e <u> <v>)
///
/// '#' starts a comment anywhere on a line; blank lines are ignored. Throws
/// ParseError with the 1-based line number.
GraphFile parse_graph_file(std::string_view text);
GraphFile read_graph_file(const std::filesystem::path& path);

/// Canonical text: header, then one line per edge in canonical edge order.
std::string serialize(const Graph& g);
std::string serialize(const OrientedGraph& og);
std::string serialize(const GraphFile& file);

void write_graph_file(const std::filesystem::path& path, const GraphFile& file);

}  // namespace skewspec::io
