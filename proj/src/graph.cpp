#include "gencov/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "gencov/error.hpp"

namespace gencov
{

void validate(std::size_t vertex_count, std::span<VertexId const> beg,
              std::span<DartId const> inv)
{
  if (beg.size() != inv.size())
    throw Error(ErrorCode::DanglingDart, "beg and inv have different lengths");

  for (DartId x = 0; x < beg.size(); ++x) {
    if (beg[x] >= vertex_count)
      throw Error(ErrorCode::DanglingDart,
                  "dart " + std::to_string(x) + " begins at missing vertex " +
                    std::to_string(beg[x]), x);
    if (inv[x] >= inv.size())
      throw Error(ErrorCode::DanglingDart,
                  "dart " + std::to_string(x) + " has missing inverse " +
                    std::to_string(inv[x]), x);
  }
  for (DartId x = 0; x < inv.size(); ++x) {
    if (inv[inv[x]] != x)
      throw Error(ErrorCode::InvNotInvolution,
                  "inv(inv(" + std::to_string(x) + ")) = " +
                    std::to_string(inv[inv[x]]), x);
  }
}

void validate(Graph const &graph)
{
  validate(graph.vertex_count(), graph.beg_map(), graph.inv_map());
}

Graph::Graph(std::size_t vertex_count, std::vector<VertexId> beg, std::vector<DartId> inv)
: _vertex_count(vertex_count),
  _beg(std::move(beg)),
  _inv(std::move(inv)),
  _out(vertex_count)
{
  validate(_vertex_count, _beg, _inv);
  for (DartId x = 0; x < _beg.size(); ++x)
    _out[_beg[x]].push_back(x);
}

Walk Walk::empty_at(VertexId v)
{
  Walk w;
  w._initial = v;
  w._final = v;
  return w;
}

Walk Walk::from_darts(Graph const &graph, std::vector<DartId> darts)
{
  if (darts.empty())
    throw Error(ErrorCode::NotConnected, "use Walk::empty_at for empty walks");
  for (std::size_t i = 0; i < darts.size(); ++i) {
    if (darts[i] >= graph.dart_count())
      throw Error(ErrorCode::DanglingDart, "walk uses missing dart", darts[i]);
    if (i > 0 && graph.term(darts[i - 1]) != graph.beg(darts[i]))
      throw Error(ErrorCode::NotConnected,
                  "darts " + std::to_string(darts[i - 1]) + " and " +
                    std::to_string(darts[i]) + " do not meet");
  }
  Walk w;
  w._initial = graph.beg(darts.front());
  w._final = graph.term(darts.back());
  w._darts = std::move(darts);
  return w;
}

Walk Walk::inverse(Graph const &graph) const
{
  Walk w;
  w._initial = _final;
  w._final = _initial;
  for (auto it = _darts.rbegin(); it != _darts.rend(); ++it)
    w._darts.push_back(graph.inv(*it));
  return w;
}

Walk Walk::then(Walk const &next) const
{
  if (_final != next._initial)
    throw Error(ErrorCode::NotConnected, "walks do not meet");
  Walk w = *this;
  w._final = next._final;
  w._darts.insert(w._darts.end(), next._darts.begin(), next._darts.end());
  return w;
}

GraphMorphism GraphMorphism::identity(Graph const &graph)
{
  GraphMorphism m;
  m.vertex_map.resize(graph.vertex_count());
  m.dart_map.resize(graph.dart_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    m.vertex_map[v] = v;
  for (DartId x = 0; x < graph.dart_count(); ++x)
    m.dart_map[x] = x;
  return m;
}

GraphMorphism GraphMorphism::then(GraphMorphism const &next) const
{
  GraphMorphism m;
  for (auto v : vertex_map)
    m.vertex_map.push_back(next.vertex_map.at(v));
  for (auto x : dart_map)
    m.dart_map.push_back(next.dart_map.at(x));
  return m;
}

GraphMorphism GraphMorphism::inverse() const
{
  GraphMorphism m;
  m.vertex_map.resize(vertex_map.size());
  m.dart_map.resize(dart_map.size());
  for (std::size_t v = 0; v < vertex_map.size(); ++v)
    m.vertex_map.at(vertex_map[v]) = v;
  for (std::size_t x = 0; x < dart_map.size(); ++x)
    m.dart_map.at(dart_map[x]) = x;
  return m;
}

bool is_morphism(Graph const &from, Graph const &to, GraphMorphism const &map)
{
  if (map.vertex_map.size() != from.vertex_count() ||
      map.dart_map.size() != from.dart_count())
    return false;
  for (auto v : map.vertex_map) {
    if (v >= to.vertex_count())
      return false;
  }
  for (auto x : map.dart_map) {
    if (x >= to.dart_count())
      return false;
  }
  for (DartId x = 0; x < from.dart_count(); ++x) {
    DartId image = map.dart_map[x];
    if (map.vertex_map[from.beg(x)] != to.beg(image))
      return false;
    if (map.dart_map[from.inv(x)] != to.inv(image))
      return false;
  }
  return true;
}

namespace
{

bool is_bijection(std::vector<std::size_t> const &map, std::size_t size)
{
  if (map.size() != size)
    return false;
  std::vector<bool> hit(size, false);
  for (auto i : map) {
    if (i >= size || hit[i])
      return false;
    hit[i] = true;
  }
  return true;
}

} // namespace

bool is_isomorphism(Graph const &from, Graph const &to, GraphMorphism const &map)
{
  return from.vertex_count() == to.vertex_count() &&
         from.dart_count() == to.dart_count() &&
         is_bijection(map.vertex_map, to.vertex_count()) &&
         is_bijection(map.dart_map, to.dart_count()) &&
         is_morphism(from, to, map);
}

std::size_t EdgeClassification::count(EdgeKind kind) const
{
  return static_cast<std::size_t>(std::count_if(
    edges.begin(), edges.end(), [kind](Edge const &e) { return e.kind == kind; }));
}

std::size_t EdgeClassification::parallel_class_count() const
{
  return static_cast<std::size_t>(
    std::count_if(parallel_classes.begin(), parallel_classes.end(),
                  [](auto const &c) { return c.size() > 1; }));
}

EdgeClassification classify_edges(Graph const &graph)
{
  EdgeClassification result;
  std::map<std::pair<VertexId, VertexId>, std::size_t> class_of;

  for (DartId x = 0; x < graph.dart_count(); ++x) {
    if (graph.inv(x) < x)
      continue;

    Edge e;
    e.dart = x;
    e.kind = graph.is_semi_edge(x) ? EdgeKind::semi_edge
             : graph.is_loop(x)    ? EdgeKind::loop
                                   : EdgeKind::link;
    e.first = std::min(graph.beg(x), graph.term(x));
    e.second = std::max(graph.beg(x), graph.term(x));

    auto [it, inserted] =
      class_of.emplace(std::make_pair(e.first, e.second), result.parallel_classes.size());
    if (inserted)
      result.parallel_classes.emplace_back();
    result.parallel_classes[it->second].push_back(result.edges.size());
    result.edges.push_back(e);
  }
  return result;
}

bool is_simple(Graph const &graph)
{
  auto classes = classify_edges(graph);
  return classes.count(EdgeKind::semi_edge) == 0 && classes.count(EdgeKind::loop) == 0 &&
         classes.parallel_class_count() == 0;
}

std::vector<std::vector<VertexId>> Components::groups() const
{
  std::vector<std::vector<VertexId>> result(count);
  for (VertexId v = 0; v < of_vertex.size(); ++v)
    result[of_vertex[v]].push_back(v);
  return result;
}

Components components(Graph const &graph)
{
  constexpr auto unseen = static_cast<std::size_t>(-1);
  Components result;
  result.of_vertex.assign(graph.vertex_count(), unseen);

  std::deque<VertexId> queue;
  for (VertexId start = 0; start < graph.vertex_count(); ++start) {
    if (result.of_vertex[start] != unseen)
      continue;
    std::size_t id = result.count++;
    result.of_vertex[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (DartId x : graph.darts_at(v)) {
        VertexId w = graph.term(x);
        if (result.of_vertex[w] == unseen) {
          result.of_vertex[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return result;
}

bool is_connected(Graph const &graph)
{
  return components(graph).count <= 1;
}

bool SpanningTree::contains(DartId x) const
{
  return std::binary_search(darts.begin(), darts.end(), x);
}

SpanningTree spanning_tree(Graph const &graph, VertexId root)
{
  if (root >= graph.vertex_count())
    throw Error(ErrorCode::NotConnected, "root vertex does not exist");

  constexpr auto unseen = static_cast<std::size_t>(-1);
  SpanningTree tree;
  tree.root = root;
  tree.parent_dart.assign(graph.vertex_count(), unseen);
  tree.parent_dart[root] = root;

  std::deque<VertexId> queue{root};
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId x : graph.darts_at(v)) {
      VertexId w = graph.term(x);
      if (tree.parent_dart[w] != unseen)
        continue;
      tree.parent_dart[w] = x;
      tree.darts.push_back(x);
      tree.darts.push_back(graph.inv(x));
      queue.push_back(w);
      ++reached;
    }
  }
  if (reached != graph.vertex_count())
    throw Error(ErrorCode::NotConnected, "graph is not connected");

  std::sort(tree.darts.begin(), tree.darts.end());
  return tree;
}

SpanningTree as_spanning_tree(Graph const &graph, std::vector<DartId> darts)
{
  auto fail = [](std::string const &msg) {
    throw Error(ErrorCode::NotASpanningTree, msg);
  };

  if (graph.vertex_count() == 0)
    fail("graph has no vertices");

  std::vector<DartId> closed;
  for (DartId x : darts) {
    if (x >= graph.dart_count())
      fail("dart " + std::to_string(x) + " does not exist");
    if (graph.beg(x) == graph.term(x))
      fail("dart " + std::to_string(x) + " is a loop or semi-edge");
    closed.push_back(x);
    closed.push_back(graph.inv(x));
  }
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

  if (closed.size() != 2 * (graph.vertex_count() - 1))
    fail("expected " + std::to_string(graph.vertex_count() - 1) + " edges, got " +
         std::to_string(closed.size() / 2));

  // |V|-1 edges spanning all vertices form a tree
  std::vector<std::vector<DartId>> out(graph.vertex_count());
  for (DartId x : closed)
    out[graph.beg(x)].push_back(x);

  constexpr auto unseen = static_cast<std::size_t>(-1);
  SpanningTree tree;
  tree.root = 0;
  tree.darts = closed;
  tree.parent_dart.assign(graph.vertex_count(), unseen);
  tree.parent_dart[0] = 0;
  std::deque<VertexId> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId x : out[v]) {
      VertexId w = graph.term(x);
      if (tree.parent_dart[w] != unseen)
        continue;
      tree.parent_dart[w] = x;
      queue.push_back(w);
      ++reached;
    }
  }
  if (reached != graph.vertex_count())
    fail("darts do not connect all vertices");
  return tree;
}

namespace
{

[[noreturn]] void parse_fail(std::size_t line, std::string const &msg)
{
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

Graph parse_graph(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  bool have_header = false;
  std::size_t vertex_count = 0;
  std::map<DartId, std::pair<VertexId, DartId>> darts;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);

    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword))
      continue;

    if (keyword == "vertices") {
      if (have_header)
        parse_fail(line_no, "duplicate 'vertices' header");
      if (!(words >> vertex_count))
        parse_fail(line_no, "expected a vertex count");
      have_header = true;
    } else if (keyword == "dart") {
      if (!have_header)
        parse_fail(line_no, "'dart' before 'vertices' header");
      DartId id = 0, inv = 0;
      VertexId beg = 0;
      std::string kw_beg, kw_inv;
      if (!(words >> id >> kw_beg >> beg >> kw_inv >> inv) || kw_beg != "beg" ||
          kw_inv != "inv")
        parse_fail(line_no, "expected 'dart <id> beg <v> inv <id>'");
      if (!darts.emplace(id, std::make_pair(beg, inv)).second)
        parse_fail(line_no, "duplicate dart " + std::to_string(id));
    } else {
      parse_fail(line_no, "unknown keyword '" + keyword + "'");
    }

    std::string rest;
    if (words >> rest)
      parse_fail(line_no, "trailing text '" + rest + "'");
  }

  if (!have_header)
    throw Error(ErrorCode::ParseError, "missing 'vertices' header");

  std::vector<VertexId> beg;
  std::vector<DartId> inv;
  DartId expected = 0;
  for (auto const &[id, data] : darts) {
    if (id != expected)
      throw Error(ErrorCode::ParseError,
                  "dart ids must be 0.." + std::to_string(darts.size() - 1));
    beg.push_back(data.first);
    inv.push_back(data.second);
    ++expected;
  }
  return Graph(vertex_count, std::move(beg), std::move(inv));
}

std::string format_graph(Graph const &graph)
{
  std::ostringstream out;
  out << "vertices " << graph.vertex_count() << '\n';
  for (DartId x = 0; x < graph.dart_count(); ++x)
    out << "dart " << x << " beg " << graph.beg(x) << " inv " << graph.inv(x) << '\n';
  return out.str();
}

namespace
{

std::string quoted(std::string const &s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + '"';
}

} // namespace

std::string to_dot(Graph const &graph, DotLabels const &labels)
{
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << "  v" << v;
    if (labels.vertex)
      out << " [label=" << quoted(labels.vertex(v)) << ']';
    out << ";\n";
  }

  auto dart_label = [&](DartId x) -> std::string {
    return labels.dart ? labels.dart(x) : std::to_string(x);
  };

  for (DartId x = 0; x < graph.dart_count(); ++x) {
    DartId y = graph.inv(x);
    if (y < x)
      continue;
    if (x == y) {
      out << "  s" << x << " [shape=point];\n";
      out << "  v" << graph.beg(x) << " -- s" << x
          << " [label=" << quoted(dart_label(x)) << "];\n";
    } else {
      out << "  v" << graph.beg(x) << " -- v" << graph.beg(y)
          << " [taillabel=" << quoted(dart_label(x))
          << ", headlabel=" << quoted(dart_label(y)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace gencov
