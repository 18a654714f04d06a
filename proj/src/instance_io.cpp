#include "ihs/instance_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace ihs {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view s) {
  double x = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError("bad number '" + std::string(s) + "'");
  }
  return x;
}

namespace {

template <typename Int>
Int parse_int(std::string_view s, const char* what) {
  Int x{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return x;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string_view expect_key(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() == key.size() ||
      token[key.size()] != '=') {
    throw ParseError("params: expected '" + std::string(key) + "=...', got '" +
                     std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

Graph InstanceFile::graph() const {
  if (directed) throw std::invalid_argument("instance is directed");
  return Graph(n, edges);
}

Digraph InstanceFile::digraph() const {
  if (!directed) throw std::invalid_argument("instance is undirected");
  return Digraph(n, edges);
}

InstanceFile instance_from(const Graph& g) {
  InstanceFile f;
  f.n = g.num_vertices();
  f.edges = g.edges();
  return f;
}

InstanceFile instance_from(const Digraph& d) {
  InstanceFile f;
  f.directed = true;
  f.n = d.num_vertices();
  f.edges = d.arcs();
  return f;
}

InstanceFile instance_from(const PlantedInstance& inst) {
  InstanceFile f = instance_from(inst.digraph);
  f.planted = inst.planted;
  ModelParams params = inst.params;
  params.n = f.n;
  params.sampling = PairSampling::kNaive;
  f.params = params;
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  std::string out;
  out.reserve(32 + f.edges.size() * 14);
  out += "ihs-graph 1 ";
  out += f.directed ? "directed" : "undirected";
  out += ' ' + std::to_string(f.n) + ' ' + std::to_string(f.edges.size()) + '\n';
  std::array<char, 16> buf{};
  auto append_id = [&](Vertex x) {
    out.append(buf.data(), std::to_chars(buf.data(), buf.data() + buf.size(), x).ptr);
  };
  for (const auto& [u, v] : f.edges) {
    append_id(u);
    out += ' ';
    append_id(v);
    out += '\n';
  }
  if (f.planted) {
    out += "planted " + std::to_string(f.planted->size());
    for (Vertex v : *f.planted) out += ' ' + std::to_string(v);
    out += '\n';
  }
  if (f.params) {
    out += "params delta=" + format_double(f.params->delta) + " p=" + format_double(f.params->p) +
           " k=" + std::to_string(f.params->k) + " seed=" + std::to_string(f.params->seed) + '\n';
  }
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(lineno + 1) + ": " + msg);
  };
  try {
    if (lines.empty()) throw ParseError("empty input");
    InstanceFile f;
    auto head = split_tokens(lines[0]);
    if (head.size() != 5 || head[0] != "ihs-graph" || head[1] != "1") {
      throw fail("expected 'ihs-graph 1 <directed|undirected> <n> <m>'");
    }
    if (head[2] == "directed") {
      f.directed = true;
    } else if (head[2] != "undirected") {
      throw fail("graph kind must be 'directed' or 'undirected'");
    }
    f.n = parse_int<std::size_t>(head[3], "vertex count");
    if (f.n > std::numeric_limits<Vertex>::max()) throw fail("vertex count too large");
    const auto m = parse_int<std::size_t>(head[4], "edge count");
    if (lines.size() < m + 1) throw fail("expected " + std::to_string(m) + " edge lines");

    f.edges.reserve(m);
    for (lineno = 1; lineno <= m; ++lineno) {
      auto tok = split_tokens(lines[lineno]);
      if (tok.size() != 2) throw fail("expected '<u> <v>'");
      auto u = parse_int<Vertex>(tok[0], "vertex id");
      auto v = parse_int<Vertex>(tok[1], "vertex id");
      if (u >= f.n || v >= f.n) throw fail("vertex id out of range");
      if (u == v) throw fail("self-loop");
      if (!f.directed && u > v) std::swap(u, v);
      f.edges.emplace_back(u, v);
    }
    std::sort(f.edges.begin(), f.edges.end());
    if (std::adjacent_find(f.edges.begin(), f.edges.end()) != f.edges.end()) {
      lineno = 0;
      throw fail("repeated edge");
    }

    for (; lineno < lines.size(); ++lineno) {
      auto tok = split_tokens(lines[lineno]);
      if (tok.empty()) {
        if (lineno + 1 == lines.size()) break;
        throw fail("blank line");
      }
      if (tok[0] == "planted") {
        if (f.planted || f.params) throw fail("unexpected planted trailer");
        if (tok.size() < 2) throw fail("expected 'planted <count> <ids...>'");
        const auto count = parse_int<std::size_t>(tok[1], "planted count");
        if (tok.size() != count + 2) throw fail("planted count does not match ids");
        std::vector<Vertex> ids;
        for (std::size_t i = 2; i < tok.size(); ++i) {
          const auto v = parse_int<Vertex>(tok[i], "planted id");
          if (v >= f.n) throw fail("planted id out of range");
          ids.push_back(v);
        }
        VertexSet set(ids);
        if (set.size() != ids.size()) throw fail("repeated planted id");
        f.planted = std::move(set);
      } else if (tok[0] == "params") {
        if (f.params) throw fail("repeated params trailer");
        if (tok.size() != 5) throw fail("expected 'params delta=<f> p=<f> k=<int> seed=<u64>'");
        ModelParams p;
        p.n = f.n;
        p.delta = parse_double(expect_key(tok[1], "delta"));
        p.p = parse_double(expect_key(tok[2], "p"));
        p.k = parse_int<int>(expect_key(tok[3], "k"), "k");
        p.seed = parse_int<std::uint64_t>(expect_key(tok[4], "seed"), "seed");
        f.params = p;
      } else {
        throw fail("unknown trailer '" + std::string(tok[0]) + "'");
      }
    }
    return f;
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind("line ", 0) == 0) throw;
    throw fail(msg);
  }
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const InstanceFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_instance(f);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ihs
