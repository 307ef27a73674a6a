#include "cdsopt/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace cdsopt {

namespace {

constexpr std::string_view kGivenDsTag = "given-ds:";

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  const auto ws = " \t\r\v\f";
  while (true) {
    auto b = line.find_first_not_of(ws, pos);
    if (b == std::string_view::npos) break;
    auto e = line.find_first_of(ws, b);
    if (e == std::string_view::npos) e = line.size();
    out.push_back(line.substr(b, e - b));
    pos = e;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if constexpr (std::is_floating_point_v<T>) {
    if (!tok.empty() && tok.front() == '+') ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(GraphErrorKind kind, std::size_t line_no, const std::string& detail) {
  throw GraphError(kind, std::string(to_string(kind)) + " (line " + std::to_string(line_no) + "): " + detail);
}

struct Line {
  std::size_t number;
  std::string_view text;
};

}  // namespace

Instance parse_instance(std::string_view text, std::string label) {
  std::vector<Line> lines;
  {
    std::size_t no = 0;
    for (auto raw : split_lines(text)) {
      ++no;
      auto t = trim(raw);
      if (t.empty() || t.front() == '#') continue;
      lines.push_back({no, t});
    }
  }
  if (lines.empty()) throw GraphError(GraphErrorKind::MalformedHeader, "malformed header: empty input");

  std::size_t cursor = 0;
  const auto header = tokens(lines[cursor].text);
  long long n = 0, e = 0, m = 0;
  if (header.size() != 4 || header[0] != "cds" || !parse_number(header[1], n) ||
      !parse_number(header[2], e) || !parse_number(header[3], m)) {
    fail(GraphErrorKind::MalformedHeader, lines[cursor].number, "expected `cds <n> <edge_count> <m>`");
  }
  if (n < 1) fail(GraphErrorKind::MalformedHeader, lines[cursor].number, "n must be positive");
  if (e < 0) fail(GraphErrorKind::MalformedHeader, lines[cursor].number, "edge count must be nonnegative");
  if (m < 1) fail(GraphErrorKind::MalformedHeader, lines[cursor].number, "m must be positive");
  if (n > 100'000'000 || m > 1'000'000) fail(GraphErrorKind::MalformedHeader, lines[cursor].number, "header values too large");
  ++cursor;

  auto need_line = [&](const char* what) -> const Line& {
    if (cursor >= lines.size()) {
      throw GraphError(GraphErrorKind::MalformedBody, std::string("malformed body: unexpected end of input, expected ") + what);
    }
    return lines[cursor++];
  };

  std::vector<double> costs;
  {
    const Line& line = need_line("cost line");
    const auto toks = tokens(line.text);
    if (static_cast<long long>(toks.size()) != n)
      fail(GraphErrorKind::MalformedBody, line.number, "expected " + std::to_string(n) + " costs, got " + std::to_string(toks.size()));
    costs.reserve(toks.size());
    for (auto tok : toks) {
      double c = 0.0;
      if (!parse_number(tok, c)) fail(GraphErrorKind::MalformedBody, line.number, "bad cost `" + std::string(tok) + "`");
      if (!(c > 0.0)) fail(GraphErrorKind::NonPositiveCost, line.number, "cost " + std::string(tok));
      costs.push_back(c);
    }
  }

  std::optional<std::vector<Point>> coords;
  if (cursor < lines.size() && lines[cursor].text == "coords") {
    ++cursor;
    coords.emplace();
    coords->reserve(n);
    for (long long i = 0; i < n; ++i) {
      const Line& line = need_line("coordinate line");
      const auto toks = tokens(line.text);
      Point p;
      if (toks.size() != 2 || !parse_number(toks[0], p.x) || !parse_number(toks[1], p.y))
        fail(GraphErrorKind::MalformedBody, line.number, "expected `x y`");
      coords->push_back(p);
    }
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(e);
  for (long long i = 0; i < e; ++i) {
    const Line& line = need_line("edge line");
    const auto toks = tokens(line.text);
    long long u = 0, v = 0;
    if (toks.size() != 2 || !parse_number(toks[0], u) || !parse_number(toks[1], v))
      fail(GraphErrorKind::MalformedBody, line.number, "expected `u v`");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(GraphErrorKind::NodeOutOfRange, line.number, "edge " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) fail(GraphErrorKind::SelfLoop, line.number, "node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (cursor != lines.size())
    fail(GraphErrorKind::MalformedBody, lines[cursor].number, "trailing content after edge list");

  return Instance{WeightedGraph::build(std::move(costs), std::move(edges), std::move(coords)),
                  static_cast<int>(m), std::move(label)};
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string serialize_instance(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  std::string out = "cds " + std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) +
                    " " + std::to_string(inst.m) + "\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (u) out += ' ';
    out += format_double(g.cost(u));
  }
  out += '\n';
  if (g.coords()) {
    out += "coords\n";
    for (const Point& p : *g.coords()) out += format_double(p.x) + " " + format_double(p.y) + "\n";
  }
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), std::filesystem::path(path).stem().string());
}

std::optional<NodeSet> extract_given_ds(std::string_view text) {
  for (auto raw : split_lines(text)) {
    auto t = trim(raw);
    if (t.empty() || t.front() != '#') continue;
    t = trim(t.substr(1));
    if (t.substr(0, kGivenDsTag.size()) != kGivenDsTag) continue;
    NodeSet out;
    for (auto tok : tokens(t.substr(kGivenDsTag.size()))) {
      NodeId id = 0;
      if (!parse_number(tok, id)) throw GraphError(GraphErrorKind::MalformedBody, "malformed body: bad id in given-ds directive");
      out.push_back(id);
    }
    return out;
  }
  return std::nullopt;
}

std::string given_ds_directive(const NodeSet& nodes) {
  std::string out = "# ";
  out += kGivenDsTag;
  for (NodeId u : nodes) out += " " + std::to_string(u);
  out += '\n';
  return out;
}

NodeSet parse_node_list(std::string_view text, NodeId n) {
  NodeSet out;
  for (auto raw : split_lines(text)) {
    auto t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    for (auto tok : tokens(t)) {
      long long id = 0;
      if (!parse_number(tok, id)) throw std::invalid_argument("bad node id `" + std::string(tok) + "`");
      if (id < 0 || id >= n) throw std::out_of_range("node id " + std::string(tok) + " out of range [0, " + std::to_string(n) + ")");
      out.push_back(static_cast<NodeId>(id));
    }
  }
  return normalize_node_set(n, std::move(out));
}

}  // namespace cdsopt
