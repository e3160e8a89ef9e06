#ifndef GENCOV_GRAPH_HPP
#define GENCOV_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gencov
{

using VertexId = std::size_t;
using DartId = std::size_t;

/// A graph as a quadruple (V, D, beg, inv).
///
/// Darts are the primitive: an edge is a pair {x, inv x}, a semi-edge has
/// x == inv x and a loop has x != inv x with beg x == term x. Parallel edges
/// are allowed. Construction validates the data, so every `Graph` object is a
/// valid graph.
class Graph
{
public:
  Graph() = default;

  /// Throws `DanglingDart` or `InvNotInvolution`.
  Graph(std::size_t vertex_count, std::vector<VertexId> beg, std::vector<DartId> inv);

  std::size_t vertex_count() const noexcept
  { return _vertex_count; }

  std::size_t dart_count() const noexcept
  { return _beg.size(); }

  VertexId beg(DartId x) const
  { return _beg[x]; }

  DartId inv(DartId x) const
  { return _inv[x]; }

  VertexId term(DartId x) const
  { return _beg[_inv[x]]; }

  /// Darts emanating from `v`, in increasing index order.
  std::span<DartId const> darts_at(VertexId v) const
  { return _out[v]; }

  std::size_t valence(VertexId v) const
  { return _out[v].size(); }

  bool is_semi_edge(DartId x) const
  { return _inv[x] == x; }

  bool is_loop(DartId x) const
  { return _inv[x] != x && term(x) == _beg[x]; }

  std::vector<VertexId> const &beg_map() const noexcept
  { return _beg; }

  std::vector<DartId> const &inv_map() const noexcept
  { return _inv; }

  friend bool operator==(Graph const &lhs, Graph const &rhs)
  {
    return lhs._vertex_count == rhs._vertex_count && lhs._beg == rhs._beg &&
           lhs._inv == rhs._inv;
  }

private:
  std::size_t _vertex_count = 0;
  std::vector<VertexId> _beg;
  std::vector<DartId> _inv;
  std::vector<std::vector<DartId>> _out;
};

/// Checks raw graph data: beg and inv total, inv an involution.
void validate(std::size_t vertex_count, std::span<VertexId const> beg,
              std::span<DartId const> inv);

void validate(Graph const &graph);

/// Sequence of darts with `term x_i == beg x_{i+1}`. An empty walk still has
/// a base vertex.
class Walk
{
public:
  static Walk empty_at(VertexId v);

  /// Throws `NotConnected` if consecutive darts do not meet.
  static Walk from_darts(Graph const &graph, std::vector<DartId> darts);

  VertexId initial() const noexcept
  { return _initial; }

  VertexId final_vertex() const noexcept
  { return _final; }

  std::vector<DartId> const &darts() const noexcept
  { return _darts; }

  std::size_t length() const noexcept
  { return _darts.size(); }

  bool is_closed() const noexcept
  { return _initial == _final; }

  Walk inverse(Graph const &graph) const;

  /// `this` followed by `next`; requires `final_vertex() == next.initial()`.
  Walk then(Walk const &next) const;

  friend bool operator==(Walk const &, Walk const &) = default;

private:
  VertexId _initial = 0;
  VertexId _final = 0;
  std::vector<DartId> _darts;
};

/// Vertex and dart maps between two graphs.
struct GraphMorphism
{
  std::vector<VertexId> vertex_map;
  std::vector<DartId> dart_map;

  static GraphMorphism identity(Graph const &graph);

  /// Both maps applied after `this`.
  GraphMorphism then(GraphMorphism const &next) const;

  GraphMorphism inverse() const;

  friend bool operator==(GraphMorphism const &, GraphMorphism const &) = default;
};

/// φ(beg x) = beg φ(x) and φ(inv x) = inv φ(x) for every dart.
bool is_morphism(Graph const &from, Graph const &to, GraphMorphism const &map);

bool is_isomorphism(Graph const &from, Graph const &to, GraphMorphism const &map);

enum class EdgeKind
{
  semi_edge,
  loop,
  link,
};

struct Edge
{
  DartId dart;  // the lesser of {x, inv x}
  EdgeKind kind;
  VertexId first;   // min endpoint
  VertexId second;  // max endpoint
};

struct EdgeClassification
{
  std::vector<Edge> edges;
  /// Edges grouped by endpoint pair (indices into `edges`); classes of size
  /// one are included.
  std::vector<std::vector<std::size_t>> parallel_classes;

  std::size_t count(EdgeKind kind) const;

  /// Number of classes with at least two edges.
  std::size_t parallel_class_count() const;
};

EdgeClassification classify_edges(Graph const &graph);

/// No semi-edges, no loops and no two distinct parallel edges.
bool is_simple(Graph const &graph);

struct Components
{
  std::size_t count = 0;
  std::vector<std::size_t> of_vertex;

  std::vector<std::vector<VertexId>> groups() const;
};

Components components(Graph const &graph);

bool is_connected(Graph const &graph);

/// Spanning subgraph that is a tree; `darts` holds both darts of every edge.
struct SpanningTree
{
  VertexId root = 0;
  std::vector<DartId> darts;       // sorted
  std::vector<DartId> parent_dart; // dart from parent into the vertex; root maps to itself

  bool contains(DartId x) const;
};

/// BFS tree from `root`, scanning darts by increasing index. Throws
/// `NotConnected`.
SpanningTree spanning_tree(Graph const &graph, VertexId root = 0);

/// Checks that `darts` are the edges of a spanning tree of `graph`; missing
/// inverse darts are added. Throws `NotASpanningTree`.
SpanningTree as_spanning_tree(Graph const &graph, std::vector<DartId> darts);

/// Text format: `vertices <n>` then one `dart <id> beg <v> inv <id>` line per
/// dart. Blank lines and `#` comments are ignored.
Graph parse_graph(std::string_view text);

std::string format_graph(Graph const &graph);

struct DotLabels
{
  std::function<std::string(VertexId)> vertex;
  std::function<std::string(DartId)> dart;
};

/// Graphviz export with parallel edges as multi-edges and every semi-edge
/// drawn as an edge to its own point node.
std::string to_dot(Graph const &graph, DotLabels const &labels = {});

} // namespace gencov

#endif // GENCOV_GRAPH_HPP
