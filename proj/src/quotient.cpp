#include "gencov/quotient.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "gencov/error.hpp"

namespace gencov
{

ActionGroup::ActionGroup(Graph graph, Group group)
: _graph(std::move(graph))
, _group(std::move(group))
{
  std::size_t n = _graph.vertex_count();
  std::size_t points = n + _graph.dart_count();
  if (_group.degree() != points)
    throw Error(ErrorCode::DegreeMismatch,
                "action has degree " + std::to_string(_group.degree()) + " but the graph has " +
                  std::to_string(points) + " vertices and darts");

  for (Perm const &g : _group.generators()) {
    for (VertexId v = 0; v < n; ++v)
      if (g[vertex_point(v)] >= n)
        throw Error(ErrorCode::NotAnAction,
                    "generator " + g.to_string() + " maps vertex " + std::to_string(v) +
                      " to a dart");
    for (DartId x = 0; x < _graph.dart_count(); ++x) {
      if (g[dart_point(x)] < n)
        throw Error(ErrorCode::NotAnAction,
                    "generator " + g.to_string() + " maps dart " + std::to_string(x) +
                      " to a vertex",
                    x);
      DartId y = dart_image(x, g);
      if (_graph.beg(y) != vertex_image(_graph.beg(x), g) ||
          _graph.inv(y) != dart_image(_graph.inv(x), g))
        throw Error(ErrorCode::NotAnAction,
                    "generator " + g.to_string() + " does not commute with beg and inv at dart " +
                      std::to_string(x),
                    x);
    }
  }

  if (_graph.dart_count() > 0) {
    for (Perm const &g : _group.elements()) {
      if (g.is_identity())
        continue;
      bool moves_dart = false;
      for (DartId x = 0; x < _graph.dart_count() && !moves_dart; ++x)
        moves_dart = dart_image(x, g) != x;
      if (!moves_dart)
        throw Error(ErrorCode::NotFaithfulOnDarts,
                    "element " + g.to_string() + " fixes every dart but is not the identity");
    }
  }
}

Group ActionGroup::vertex_stabiliser(VertexId v) const
{
  std::vector<Perm> fixing;
  for (Perm const &g : _group.elements())
    if (vertex_image(v, g) == v)
      fixing.push_back(g);
  return Group::from_closed_set(_group.degree(), std::move(fixing));
}

Group ActionGroup::dart_stabiliser(DartId x) const
{
  std::vector<Perm> fixing;
  for (Perm const &g : _group.elements())
    if (dart_image(x, g) == x)
      fixing.push_back(g);
  return Group::from_closed_set(_group.degree(), std::move(fixing));
}

namespace
{

// Orbit index of every point in [first, first + count), orbits numbered by
// least member.
std::vector<std::size_t> orbit_numbers(Group const &group, std::size_t first, std::size_t count,
                                       std::vector<std::vector<std::size_t>> &orbits)
{
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit(count, unset);
  for (std::size_t i = 0; i < count; ++i) {
    if (orbit[i] != unset)
      continue;
    std::size_t id = orbits.size();
    orbits.emplace_back();
    for (Perm const &g : group.elements()) {
      std::size_t j = g[static_cast<Point>(first + i)] - first;
      if (orbit[j] == unset) {
        orbit[j] = id;
        orbits.back().push_back(j);
      }
    }
    std::sort(orbits.back().begin(), orbits.back().end());
  }
  return orbit;
}

// Least element of `group` taking point `from` to point `to`.
std::optional<Perm> least_mover(Group const &group, Point from, Point to)
{
  for (Perm const &g : group.elements())
    if (g[from] == to)
      return g;
  return std::nullopt;
}

} // namespace

Quotient quotient_graph(ActionGroup const &action)
{
  Graph const &graph = action.graph();
  Quotient q;
  q.map.vertex_map = orbit_numbers(action.group(), 0, graph.vertex_count(), q.vertex_orbits);
  q.map.dart_map =
    orbit_numbers(action.group(), graph.vertex_count(), graph.dart_count(), q.dart_orbits);

  std::vector<VertexId> beg;
  std::vector<DartId> inv;
  for (auto const &orbit : q.dart_orbits) {
    DartId x = orbit.front();
    beg.push_back(q.map.vertex_map[graph.beg(x)]);
    inv.push_back(q.map.dart_map[graph.inv(x)]);
  }
  q.graph = Graph(q.vertex_orbits.size(), std::move(beg), std::move(inv));
  return q;
}

TransversalData choose_transversal(ActionGroup const &action, Quotient const &quotient)
{
  Graph const &graph = action.graph();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);

  if (!is_connected(quotient.graph))
    throw Error(ErrorCode::QuotientNotConnected, "the quotient graph is not connected");

  TransversalData t;
  t.vertex_rep.assign(quotient.graph.vertex_count(), unset);
  t.dart_rep.assign(quotient.graph.dart_count(), unset);
  if (graph.vertex_count() == 0)
    return t;

  std::deque<VertexId> queue{0};
  t.vertex_rep[quotient.map.vertex_map[0]] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : graph.darts_at(v)) {
      std::size_t o = quotient.map.dart_map[d];
      if (t.dart_rep[o] != unset)
        continue;
      t.dart_rep[o] = d;
      VertexId w = graph.term(d);
      std::size_t ow = quotient.map.vertex_map[w];
      if (t.vertex_rep[ow] != unset)
        continue;
      t.vertex_rep[ow] = w;
      queue.push_back(w);
      std::size_t back = quotient.map.dart_map[graph.inv(d)];
      if (t.dart_rep[back] == unset)
        t.dart_rep[back] = graph.inv(d);
    }
  }

  for (std::size_t o = 0; o < t.dart_rep.size(); ++o) {
    DartId x = t.dart_rep[o];
    DartId partner = t.dart_rep[quotient.graph.inv(o)];
    t.partner.push_back(partner);
    bool closed = partner == graph.inv(x);
    t.closed.push_back(closed);
    if (closed) {
      t.zeta.push_back(action.group().identity());
    } else {
      auto g = least_mover(action.group(), action.dart_point(partner),
                           action.dart_point(graph.inv(x)));
      if (!g)
        throw Error(ErrorCode::Internal, "no element maps a partner onto its inverse dart", x);
      t.zeta.push_back(std::move(*g));
    }
  }
  return t;
}

void check_transversal(ActionGroup const &action, Quotient const &quotient,
                       TransversalData const &t)
{
  Graph const &graph = action.graph();
  auto fail = [](std::string const &what) { throw Error(ErrorCode::BadTransversal, what); };

  std::size_t nv = quotient.graph.vertex_count();
  std::size_t nd = quotient.graph.dart_count();
  if (t.vertex_rep.size() != nv || t.dart_rep.size() != nd || t.partner.size() != nd ||
      t.zeta.size() != nd || t.closed.size() != nd)
    fail("transversal tables do not match the number of orbits");

  for (std::size_t o = 0; o < nv; ++o)
    if (t.vertex_rep[o] >= graph.vertex_count() || quotient.map.vertex_map[t.vertex_rep[o]] != o)
      fail("vertex " + std::to_string(t.vertex_rep[o]) + " does not represent orbit " +
           std::to_string(o));

  for (std::size_t o = 0; o < nd; ++o) {
    DartId x = t.dart_rep[o];
    if (x >= graph.dart_count() || quotient.map.dart_map[x] != o)
      fail("dart " + std::to_string(x) + " does not represent orbit " + std::to_string(o));
    if (t.vertex_rep[quotient.map.vertex_map[graph.beg(x)]] != graph.beg(x))
      fail("dart " + std::to_string(x) + " does not begin in the vertex transversal");
    if (t.partner[o] != t.dart_rep[quotient.graph.inv(o)])
      fail("partner of dart " + std::to_string(x) + " is not the representative of its inverse");
    if (t.closed[o] != (t.partner[o] == graph.inv(x)))
      fail("closed flag of dart " + std::to_string(x) + " is wrong");
    if (t.zeta[o].degree() != action.group().degree() || !action.group().contains(t.zeta[o]) ||
        action.dart_image(t.partner[o], t.zeta[o]) != graph.inv(x))
      fail("voltage of dart " + std::to_string(x) + " does not take its partner to its inverse");
  }
}

Reconstruction reconstruct(ActionGroup const &action, std::size_t size_cap)
{
  Graph const &graph = action.graph();
  Quotient quotient = quotient_graph(action);
  TransversalData t = choose_transversal(action, quotient);

  std::vector<Group> vertex_weights;
  for (VertexId v : t.vertex_rep)
    vertex_weights.push_back(action.vertex_stabiliser(v));
  std::vector<Group> dart_weights;
  for (DartId x : t.dart_rep)
    dart_weights.push_back(action.dart_stabiliser(x));

  GenVoltageGraph gvg(quotient.graph, action.group(), std::move(vertex_weights),
                      std::move(dart_weights), t.zeta);
  Cover cover = gen_cov(gvg, size_cap);

  // Element taking each point's orbit representative to it, then its label.
  GraphMorphism iso;
  iso.vertex_map.assign(graph.vertex_count(), 0);
  iso.dart_map.assign(graph.dart_count(), 0);
  std::vector<bool> seen(graph.vertex_count() + graph.dart_count(), false);
  for (std::size_t o = 0; o < t.vertex_rep.size(); ++o) {
    Point rep = action.vertex_point(t.vertex_rep[o]);
    for (Perm const &g : action.group().elements()) {
      VertexId w = g[rep];
      if (!seen[w]) {
        seen[w] = true;
        iso.vertex_map[w] = cover.vertex_of(o, g);
      }
    }
  }
  for (std::size_t o = 0; o < t.dart_rep.size(); ++o) {
    Point rep = action.dart_point(t.dart_rep[o]);
    for (Perm const &g : action.group().elements()) {
      Point p = g[rep];
      if (!seen[p]) {
        seen[p] = true;
        iso.dart_map[p - graph.vertex_count()] = cover.dart_of(o, g);
      }
    }
  }

  return Reconstruction{std::move(quotient), std::move(t), std::move(gvg), std::move(cover),
                        std::move(iso)};
}

Group dart_weight_intersection(GenVoltageGraph const &gvg)
{
  std::vector<Group> const &weights =
    gvg.base().dart_count() > 0 ? gvg.dart_weights() : gvg.vertex_weights();
  Group result = gvg.group();
  for (Group const &w : weights)
    result = intersection(result, w);
  return result;
}

bool is_faithful_gvg(GenVoltageGraph const &gvg)
{
  return core(dart_weight_intersection(gvg), gvg.group()).is_trivial();
}

GenerationVerdict generation_connectivity_test(ActionGroup const &action,
                                               Quotient const &quotient,
                                               TransversalData const &t)
{
  check_transversal(action, quotient, t);
  Graph const &graph = action.graph();

  // T_V joined by the edges {x, x⁻¹} with both darts in T_D.
  std::vector<std::size_t> parent(graph.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t o = 0; o < t.dart_rep.size(); ++o)
    if (t.closed[o])
      parent[find(graph.beg(t.dart_rep[o]))] = find(graph.term(t.dart_rep[o]));
  for (VertexId v : t.vertex_rep)
    if (find(v) != find(t.vertex_rep.front()))
      throw Error(ErrorCode::BadTransversal, "the transversal is not connected");

  std::vector<GroupPart> parts;
  for (VertexId v : t.vertex_rep)
    parts.emplace_back(action.vertex_stabiliser(v));
  GenerationVerdict verdict{false, action.group(), {}};
  for (std::size_t o = 0; o < t.dart_rep.size(); ++o) {
    if (t.closed[o])
      continue;
    DartId back = graph.inv(t.dart_rep[o]);
    auto a = least_mover(action.group(), action.dart_point(back), action.dart_point(t.partner[o]));
    if (!a)
      throw Error(ErrorCode::Internal, "no element takes an inverse dart into the transversal");
    parts.emplace_back(*a);
    verdict.shifts.emplace_back(o, std::move(*a));
  }
  verdict.generated = generated_by(action.group(), parts);
  verdict.connected = verdict.generated.order() == action.group().order();
  return verdict;
}

} // namespace gencov
