#include "cdc/graph_io.hpp"

#include <charconv>

#include "cdc/error.hpp"

namespace cdc {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) offset = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: truncated input", i);
    int b = static_cast<unsigned char>(text[i]);
    if (b < 63 || b > 126) throw ParseError("graph6: byte out of range", i);
    return b - 63;
  };

  std::size_t n = 0;
  std::size_t pos = offset;
  int first = byte_at(pos);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos += 1;
  } else {
    if (byte_at(pos + 1) == 63) throw ParseError("graph6: vertex counts above 258047 unsupported", pos + 1);
    n = (static_cast<std::size_t>(byte_at(pos + 1)) << 12) |
        (static_cast<std::size_t>(byte_at(pos + 2)) << 6) | static_cast<std::size_t>(byte_at(pos + 3));
    pos += 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw ParseError("graph6: truncated bit vector", text.size());
  if (text.size() > pos + bytes) throw ParseError("graph6: trailing data", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bits % 6 != 0) {
    int last = byte_at(pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  return Graph(n, edges);
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw GraphError("graph6: vertex count too large");
  }
  int chunk = 0, used = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((chunk << (6 - used)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) out.push_back(parse_graph6(line));
    start = end + 1;
  }
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line_no);
  if (value > 10'000'000) throw ParseError("integer too large: " + std::string(tok), line_no);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  long long declared = -1;
  long long max_id = -1;
  std::size_t line_no = 0, start = 0;
  bool seen_content = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    auto tok = tokens(line);
    if (!seen_content && tok.size() == 2 && tok[0] == "n") {
      declared = to_int(tok[1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tok.size() != 2) throw ParseError("expected 'u v'", line_no);
    long long a = to_int(tok[0], line_no), b = to_int(tok[1], line_no);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    if (declared >= 0 && std::max(a, b) >= declared)
      throw ParseError("vertex id " + std::to_string(std::max(a, b)) + " exceeds declared count", line_no);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    lines.push_back(line_no);
    max_id = std::max({max_id, a, b});
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return edges[x] < edges[y]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (edges[order[i]] == edges[order[i - 1]])
      throw ParseError("duplicate edge " + to_string(edges[order[i]]), lines[order[i]]);
  std::size_t n = declared >= 0 ? static_cast<std::size_t>(declared) : static_cast<std::size_t>(max_id + 1);
  return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  auto graphs = parse_graph6_lines(text);
  if (graphs.empty()) throw ParseError("graph6: truncated input", 0);
  if (graphs.size() > 1) throw ParseError("expected a single graph6 line", 0);
  return graphs.front();
}

}  // namespace cdc
