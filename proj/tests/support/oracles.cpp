#include "testkit/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace testkit
{

ElementSet sorted_elements(Group const &group)
{
  ElementSet out(group.elements().begin(), group.elements().end());
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet coset_set(Group const &subgroup, Perm const &g)
{
  ElementSet out;
  for (Perm const &h : subgroup.elements())
    out.push_back(h * g);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet literal_core(Group const &subgroup, Group const &group)
{
  ElementSet result = sorted_elements(subgroup);
  for (Perm const &g : group.elements()) {
    ElementSet conj;
    for (Perm const &h : subgroup.elements())
      conj.push_back(g.inverse() * h * g);
    std::sort(conj.begin(), conj.end());
    ElementSet meet;
    std::set_intersection(result.begin(), result.end(), conj.begin(), conj.end(),
                          std::back_inserter(meet));
    result = std::move(meet);
  }
  return result;
}

bool literal_is_subset(Group const &a, Group const &b)
{
  ElementSet big = sorted_elements(b);
  for (Perm const &p : a.elements())
    if (!std::binary_search(big.begin(), big.end(), p))
      return false;
  return true;
}

namespace
{

bool set_contains(ElementSet const &set, Perm const &p)
{
  return std::binary_search(set.begin(), set.end(), p);
}

} // namespace

bool literal_eq_holds(int equation, Graph const &base, Group const &,
                      std::vector<Group> const &vertex_weights,
                      std::vector<Group> const &dart_weights, std::vector<Perm> const &voltages,
                      DartId x)
{
  Group const &wx = dart_weights[x];
  switch (equation) {
  case 1:
    return literal_is_subset(wx, vertex_weights[base.beg(x)]);
  case 2: {
    // ω(x) = {ζ⁻¹ h ζ : h ∈ ω(x⁻¹)}
    Perm const &z = voltages[x];
    ElementSet conj;
    for (Perm const &h : dart_weights[base.inv(x)].elements())
      conj.push_back(z.inverse() * h * z);
    std::sort(conj.begin(), conj.end());
    return conj == sorted_elements(wx);
  }
  case 3:
    return set_contains(sorted_elements(wx), voltages[base.inv(x)] * voltages[x]);
  }
  return false;
}

std::optional<std::string> literal_gvg_defect(Graph const &base, Group const &group,
                                              std::vector<Group> const &vertex_weights,
                                              std::vector<Group> const &dart_weights,
                                              std::vector<Perm> const &voltages)
{
  std::size_t degree = group.degree();
  if (vertex_weights.size() != base.vertex_count() || dart_weights.size() != base.dart_count() ||
      voltages.size() != base.dart_count())
    return "table sizes";
  for (Group const &w : vertex_weights)
    if (w.degree() != degree || !literal_is_subset(w, group))
      return "vertex weight outside G";
  for (Group const &w : dart_weights)
    if (w.degree() != degree || !literal_is_subset(w, group))
      return "dart weight outside G";
  ElementSet all = sorted_elements(group);
  for (Perm const &z : voltages)
    if (z.degree() != degree || !set_contains(all, z))
      return "voltage outside G";
  for (DartId x = 0; x < base.dart_count(); ++x)
    for (int eq = 1; eq <= 3; ++eq)
      if (!literal_eq_holds(eq, base, group, vertex_weights, dart_weights, voltages, x))
        return "equation " + std::to_string(eq) + " fails at dart " + std::to_string(x);
  if (base.vertex_count() == 0 || bfs_component_count(base) != 1)
    return "base not connected";
  return std::nullopt;
}

BruteCover brute_cover(GenVoltageGraph const &gvg)
{
  Graph const &base = gvg.base();
  BruteCover out;
  std::map<std::pair<std::size_t, ElementSet>, std::size_t> vertex_index, dart_index;

  for (VertexId v = 0; v < base.vertex_count(); ++v)
    for (Perm const &g : gvg.group().elements()) {
      auto key = std::make_pair(v, coset_set(gvg.weight(v), g));
      if (vertex_index.emplace(key, out.vertex_labels.size()).second)
        out.vertex_labels.push_back(key);
    }
  for (DartId x = 0; x < base.dart_count(); ++x)
    for (Perm const &g : gvg.group().elements()) {
      auto key = std::make_pair(x, coset_set(gvg.dart_weight(x), g));
      if (dart_index.emplace(key, out.dart_labels.size()).second)
        out.dart_labels.push_back(key);
    }

  std::vector<VertexId> beg;
  std::vector<DartId> inv;
  for (auto const &[x, coset] : out.dart_labels) {
    Perm const &g = coset.front();
    beg.push_back(vertex_index.at({base.beg(x), coset_set(gvg.weight(base.beg(x)), g)}));
    inv.push_back(
      dart_index.at({base.inv(x), coset_set(gvg.dart_weight(base.inv(x)), gvg.voltage(x) * g)}));
  }
  out.graph = Graph(out.vertex_labels.size(), std::move(beg), std::move(inv));
  return out;
}

std::optional<GraphMorphism> match_by_labels(Cover const &cover, BruteCover const &brute)
{
  GenVoltageGraph const &gvg = cover.source();
  std::map<std::pair<std::size_t, ElementSet>, std::size_t> vertex_index, dart_index;
  for (std::size_t i = 0; i < brute.vertex_labels.size(); ++i)
    vertex_index[brute.vertex_labels[i]] = i;
  for (std::size_t i = 0; i < brute.dart_labels.size(); ++i)
    dart_index[brute.dart_labels[i]] = i;

  if (cover.graph().vertex_count() != brute.graph.vertex_count() ||
      cover.graph().dart_count() != brute.graph.dart_count())
    return std::nullopt;

  GraphMorphism m;
  for (VertexId v = 0; v < cover.graph().vertex_count(); ++v) {
    CoverLabel label = cover.vertex_label(v);
    auto it = vertex_index.find(
      {label.base.index, coset_set(gvg.weight(label.base.index), label.representative)});
    if (it == vertex_index.end())
      return std::nullopt;
    m.vertex_map.push_back(it->second);
  }
  for (DartId x = 0; x < cover.graph().dart_count(); ++x) {
    CoverLabel label = cover.dart_label(x);
    auto it = dart_index.find(
      {label.base.index, coset_set(gvg.dart_weight(label.base.index), label.representative)});
    if (it == dart_index.end())
      return std::nullopt;
    m.dart_map.push_back(it->second);
  }
  if (!is_isomorphism(cover.graph(), brute.graph, m))
    return std::nullopt;
  return m;
}

std::size_t bfs_component_count(Graph const &graph)
{
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<std::vector<VertexId>> adj(graph.vertex_count());
  for (DartId x = 0; x < graph.dart_count(); ++x)
    adj[graph.beg(x)].push_back(graph.beg(graph.inv(x)));
  std::size_t count = 0;
  for (VertexId s = 0; s < graph.vertex_count(); ++s) {
    if (seen[s])
      continue;
    ++count;
    std::deque<VertexId> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  return count;
}

bool has_semi_edge(Graph const &graph)
{
  for (DartId x = 0; x < graph.dart_count(); ++x)
    if (graph.inv(x) == x)
      return true;
  return false;
}

bool has_parallel_darts(Graph const &graph)
{
  std::set<std::pair<VertexId, VertexId>> ends;
  for (DartId x = 0; x < graph.dart_count(); ++x)
    if (!ends.emplace(graph.beg(x), graph.beg(graph.inv(x))).second)
      return true;
  return false;
}

bool literal_is_simple(Graph const &graph)
{
  for (DartId x = 0; x < graph.dart_count(); ++x)
    if (graph.inv(x) == x || graph.beg(x) == graph.beg(graph.inv(x)))
      return false;
  return !has_parallel_darts(graph);
}

std::set<VertexId> enumerate_lift_endpoints(Cover const &cover, VertexId start,
                                            std::vector<DartId> const &darts)
{
  Graph const &graph = cover.graph();
  std::set<VertexId> current{start};
  for (DartId base_dart : darts) {
    std::set<VertexId> next;
    for (VertexId v : current)
      for (DartId d = 0; d < graph.dart_count(); ++d)
        if (graph.beg(d) == v && cover.projection().dart_map[d] == base_dart)
          next.insert(graph.beg(graph.inv(d)));
    current = std::move(next);
  }
  return current;
}

std::vector<VertexId> adjacent_by_scan(Graph const &graph, VertexId vertex)
{
  std::vector<VertexId> out;
  for (DartId d = 0; d < graph.dart_count(); ++d)
    if (graph.beg(d) == vertex)
      out.push_back(graph.beg(graph.inv(d)));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace testkit
