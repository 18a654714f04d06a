#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ihs/graph.hpp"
#include "ihs/random_models.hpp"

namespace ihs {

/// Malformed instance text. what() names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// In-memory form of the plain-text instance format:
///
///   ihs-graph 1 <directed|undirected> <n> <m>
///   <u> <v>                      (m lines)
///   planted <count> <ids...>     (optional)
///   params delta=<f> p=<f> k=<int> seed=<u64>   (optional)
///
/// Edges are stored with u < v; edges and arcs are kept sorted.
struct InstanceFile {
  bool directed = false;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<VertexSet> planted;
  std::optional<ModelParams> params;  // n mirrors the header; sampling is not stored

  Graph graph() const;      // requires !directed
  Digraph digraph() const;  // requires directed

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile instance_from(const Graph& g);
InstanceFile instance_from(const Digraph& d);
InstanceFile instance_from(const PlantedInstance& inst);

/// Canonical text; parse_instance(serialize_instance(f)) == f.
std::string serialize_instance(const InstanceFile& f);

/// Strict parser. Throws ParseError on any deviation from the format,
/// including ids out of range, self-loops and repeated edges.
InstanceFile parse_instance(std::string_view text);

InstanceFile read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const InstanceFile& f);

/// Shortest round-trip decimal form of x, independent of the locale.
std::string format_double(double x);
/// Inverse of format_double; throws ParseError on trailing garbage.
double parse_double(std::string_view s);

}  // namespace ihs
