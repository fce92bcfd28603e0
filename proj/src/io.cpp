#include "skewspec/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace skewspec::io {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  bool have_header = false;
  bool oriented = false;
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, std::size_t> seen;  // edge -> line
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 3 || (tokens[0] != "og" && tokens[0] != "ug")) {
        throw ParseError(line_no, "expected header 'og <n> <m>' or 'ug <n> <m>'");
      }
      oriented = tokens[0] == "og";
      n = parse_int(tokens[1], line_no, "vertex count");
      m = parse_int(tokens[2], line_no, "edge count");
      have_header = true;
      continue;
    }

    const std::string_view tag = oriented ? "a" : "e";
    if (tokens.size() != 3 || tokens[0] != tag) {
      throw ParseError(line_no, "expected '" + std::string(tag) + " <u> <v>'");
    }
    const int u = parse_int(tokens[1], line_no, "endpoint");
    const int v = parse_int(tokens[2], line_no, "endpoint");
    if (u >= n || v >= n) {
      throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    auto [it, inserted] = seen.try_emplace({std::min(u, v), std::max(u, v)}, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} (first on line " + std::to_string(it->second) + ")");
    }
    if (static_cast<int>(pairs.size()) == m) {
      throw ParseError(line_no, "more than the " + std::to_string(m) + " edges declared in the header");
    }
    pairs.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<int>(pairs.size()) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(pairs.size()));
  }
  if (oriented) return OrientedGraph::from_arcs(n, pairs);
  return Graph(n, pairs);
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

std::string serialize(const Graph& g) {
  std::string out = "ug " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string serialize(const OrientedGraph& og) {
  std::string out = "og " + std::to_string(og.order()) + " " + std::to_string(og.size()) + "\n";
  for (auto [tail, head] : og.arcs()) out += "a " + std::to_string(tail) + " " + std::to_string(head) + "\n";
  return out;
}

std::string serialize(const GraphFile& file) {
  return std::visit([](const auto& g) { return serialize(g); }, file);
}

void write_graph_file(const std::filesystem::path& path, const GraphFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  out << serialize(file);
}

}  // namespace skewspec::io
