#include "gencov/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gencov/error.hpp"

namespace gencov
{

namespace
{

using Color = std::size_t;
using Coloring = std::vector<Color>;

// Vertex-level view of a dart graph: what survives once parallel darts are
// treated as interchangeable.
struct Multigraph
{
  std::vector<std::size_t> semi_edges;
  std::vector<std::size_t> loops;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> links;

  explicit Multigraph(Graph const &g)
  : semi_edges(g.vertex_count(), 0),
    loops(g.vertex_count(), 0),
    links(g.vertex_count())
  {
    std::vector<std::map<VertexId, std::size_t>> mult(g.vertex_count());
    for (DartId x = 0; x < g.dart_count(); ++x) {
      VertexId v = g.beg(x);
      if (g.is_semi_edge(x))
        ++semi_edges[v];
      else if (g.is_loop(x))
        ++loops[v]; // counts darts; two per loop
      else
        ++mult[v][g.term(x)];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      links[v].assign(mult[v].begin(), mult[v].end());
  }

  std::size_t multiplicity(VertexId v, VertexId w) const
  {
    auto it = std::lower_bound(links[v].begin(), links[v].end(),
                               std::make_pair(w, std::size_t{0}));
    return it != links[v].end() && it->first == w ? it->second : 0;
  }
};

class Matcher
{
public:
  Matcher(Multigraph const &a, Multigraph const &b)
  : _a(a), _b(b), _n(a.semi_edges.size())
  {}

  std::optional<std::vector<VertexId>> run()
  {
    std::map<std::pair<std::size_t, std::size_t>, Color> initial;
    for (VertexId v = 0; v < _n; ++v) {
      initial.emplace(std::make_pair(_a.semi_edges[v], _a.loops[v]), 0);
      initial.emplace(std::make_pair(_b.semi_edges[v], _b.loops[v]), 0);
    }
    Color next = 0;
    for (auto &entry : initial)
      entry.second = next++;

    Coloring ca(_n), cb(_n);
    for (VertexId v = 0; v < _n; ++v) {
      ca[v] = initial.at({_a.semi_edges[v], _a.loops[v]});
      cb[v] = initial.at({_b.semi_edges[v], _b.loops[v]});
    }
    return search(std::move(ca), std::move(cb), initial.size());
  }

private:
  // Joint colour refinement; returns the new colour count or nothing if the
  // two colourings stop having equal class sizes.
  std::optional<std::size_t> refine(Coloring &ca, Coloring &cb, std::size_t colors) const
  {
    for (;;) {
      std::map<std::vector<std::size_t>, Color> ids;
      std::vector<std::vector<std::size_t>> sa(_n), sb(_n);

      auto signature = [](Multigraph const &g, Coloring const &c, VertexId v) {
        std::vector<std::pair<Color, std::size_t>> around;
        for (auto const &[w, m] : g.links[v])
          around.emplace_back(c[w], m);
        std::sort(around.begin(), around.end());
        std::vector<std::size_t> sig{c[v]};
        for (auto const &[col, m] : around) {
          sig.push_back(col);
          sig.push_back(m);
        }
        return sig;
      };

      for (VertexId v = 0; v < _n; ++v) {
        sa[v] = signature(_a, ca, v);
        sb[v] = signature(_b, cb, v);
        ids.emplace(sa[v], 0);
        ids.emplace(sb[v], 0);
      }
      Color next = 0;
      for (auto &entry : ids)
        entry.second = next++;

      std::vector<std::size_t> count_a(ids.size(), 0), count_b(ids.size(), 0);
      for (VertexId v = 0; v < _n; ++v) {
        ca[v] = ids.at(sa[v]);
        cb[v] = ids.at(sb[v]);
        ++count_a[ca[v]];
        ++count_b[cb[v]];
      }
      if (count_a != count_b)
        return std::nullopt;
      if (ids.size() == colors)
        return colors;
      colors = ids.size();
    }
  }

  bool verify(std::vector<VertexId> const &map) const
  {
    for (VertexId v = 0; v < _n; ++v) {
      VertexId w = map[v];
      if (_a.semi_edges[v] != _b.semi_edges[w] || _a.loops[v] != _b.loops[w] ||
          _a.links[v].size() != _b.links[w].size())
        return false;
      for (auto const &[u, m] : _a.links[v]) {
        if (_b.multiplicity(w, map[u]) != m)
          return false;
      }
    }
    return true;
  }

  std::optional<std::vector<VertexId>> search(Coloring ca, Coloring cb, std::size_t colors)
  {
    auto refined = refine(ca, cb, colors);
    if (!refined)
      return std::nullopt;
    colors = *refined;

    std::vector<std::size_t> size(colors, 0);
    for (VertexId v = 0; v < _n; ++v)
      ++size[ca[v]];

    std::optional<Color> target;
    for (Color c = 0; c < colors; ++c) {
      if (size[c] > 1 && (!target || size[c] < size[*target]))
        target = c;
    }

    if (!target) {
      std::vector<VertexId> by_color_b(colors);
      for (VertexId w = 0; w < _n; ++w)
        by_color_b[cb[w]] = w;
      std::vector<VertexId> map(_n);
      for (VertexId v = 0; v < _n; ++v)
        map[v] = by_color_b[ca[v]];
      if (verify(map))
        return map;
      return std::nullopt;
    }

    VertexId v = 0;
    while (ca[v] != *target)
      ++v;

    for (VertexId w = 0; w < _n; ++w) {
      if (cb[w] != *target)
        continue;
      Coloring na = ca, nb = cb;
      na[v] = colors;
      nb[w] = colors;
      if (auto found = search(std::move(na), std::move(nb), colors + 1))
        return found;
    }
    return std::nullopt;
  }

  Multigraph const &_a;
  Multigraph const &_b;
  std::size_t _n;
};

GraphMorphism darts_over(Graph const &g1, Graph const &g2,
                         std::vector<VertexId> const &vertex_map)
{
  // Edges of g2 bucketed by sort and endpoints; links are stored by their dart
  // running from the smaller to the larger endpoint.
  std::vector<std::vector<DartId>> semi(g2.vertex_count()), loops(g2.vertex_count());
  std::map<std::pair<VertexId, VertexId>, std::vector<DartId>> links;
  for (DartId y = 0; y < g2.dart_count(); ++y) {
    if (g2.is_semi_edge(y))
      semi[g2.beg(y)].push_back(y);
    else if (g2.is_loop(y) && y < g2.inv(y))
      loops[g2.beg(y)].push_back(y);
    else if (!g2.is_loop(y) && g2.beg(y) < g2.term(y))
      links[{g2.beg(y), g2.term(y)}].push_back(y);
  }

  auto pop = [](std::vector<DartId> &bucket) {
    if (bucket.empty())
      throw std::out_of_range("empty dart bucket");
    DartId y = bucket.back();
    bucket.pop_back();
    return y;
  };

  GraphMorphism m;
  m.vertex_map = vertex_map;
  m.dart_map.assign(g1.dart_count(), 0);
  for (DartId x = 0; x < g1.dart_count(); ++x) {
    if (g1.inv(x) < x)
      continue;
    VertexId a = vertex_map[g1.beg(x)];
    VertexId b = vertex_map[g1.term(x)];
    if (g1.is_semi_edge(x)) {
      m.dart_map[x] = pop(semi.at(a));
      continue;
    }
    DartId y;
    if (g1.is_loop(x))
      y = pop(loops.at(a));
    else if (a < b)
      y = pop(links.at({a, b}));
    else
      y = g2.inv(pop(links.at({b, a})));
    m.dart_map[x] = y;
    m.dart_map[g1.inv(x)] = g2.inv(y);
  }
  return m;
}

} // namespace

std::optional<GraphMorphism> find_isomorphism(Graph const &g1, Graph const &g2,
                                              std::size_t dart_cap)
{
  if (g1.dart_count() > dart_cap || g2.dart_count() > dart_cap)
    throw Error(ErrorCode::TooLarge,
                "isomorphism search is capped at " + std::to_string(dart_cap) + " darts");

  if (g1.vertex_count() != g2.vertex_count() || g1.dart_count() != g2.dart_count())
    return std::nullopt;

  Multigraph a(g1), b(g2);
  auto vertex_map = Matcher(a, b).run();
  if (!vertex_map)
    return std::nullopt;

  GraphMorphism m;
  try {
    m = darts_over(g1, g2, *vertex_map);
  } catch (std::out_of_range const &) {
    throw Error(ErrorCode::Internal, "dart assignment ran out of darts after vertex match");
  }
  if (!is_isomorphism(g1, g2, m))
    throw Error(ErrorCode::Internal, "dart assignment failed after vertex match");
  return m;
}

} // namespace gencov
