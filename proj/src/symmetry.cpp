#include "gencov/symmetry.hpp"

#include <deque>
#include <string>

#include "gencov/error.hpp"
#include "gencov/quotient.hpp"

namespace gencov
{

namespace
{

bool maps_fibres_to_fibres(Cover const &from, Cover const &to, GraphMorphism const &map,
                           GraphMorphism const &base_map)
{
  for (VertexId v = 0; v < map.vertex_map.size(); ++v)
    if (to.projection().vertex_map[map.vertex_map[v]] !=
        base_map.vertex_map[from.projection().vertex_map[v]])
      return false;
  for (DartId x = 0; x < map.dart_map.size(); ++x)
    if (to.projection().dart_map[map.dart_map[x]] !=
        base_map.dart_map[from.projection().dart_map[x]])
      return false;
  return true;
}

} // namespace

LiftedTranslation lift_translation(Cover const &cover, Perm const &h)
{
  if (!cover.source().group().contains(h))
    throw Error(ErrorCode::NotInGroup, h.to_string() + " is not in the voltage group");

  Graph const &graph = cover.graph();
  LiftedTranslation lift{h, {}};
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    CoverLabel label = cover.vertex_label(v);
    lift.map.vertex_map.push_back(cover.index_of(label.base, label.representative * h));
  }
  for (DartId x = 0; x < graph.dart_count(); ++x) {
    CoverLabel label = cover.dart_label(x);
    lift.map.dart_map.push_back(cover.index_of(label.base, label.representative * h));
  }
  if (!is_isomorphism(graph, graph, lift.map) ||
      !maps_fibres_to_fibres(cover, cover, lift.map, GraphMorphism::identity(cover.source().base())))
    throw Error(ErrorCode::Internal,
                "lift of " + h.to_string() + " is not a fibre-preserving automorphism");
  return lift;
}

ActionHomReport action_hom(Cover const &cover)
{
  GenVoltageGraph const &gvg = cover.source();
  Graph const &graph = cover.graph();

  std::vector<CoverLabel> labels;
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    labels.push_back(cover.vertex_label(v));
  for (DartId x = 0; x < graph.dart_count(); ++x)
    labels.push_back(cover.dart_label(x));

  std::vector<Perm> kernel;
  for (Perm const &h : gvg.group().elements()) {
    bool fixes = true;
    for (std::size_t i = 0; i < labels.size() && fixes; ++i) {
      CoverLabel const &label = labels[i];
      std::size_t here = i < graph.vertex_count() ? i : i - graph.vertex_count();
      fixes = cover.index_of(label.base, label.representative * h) == here;
    }
    if (fixes)
      kernel.push_back(h);
  }

  ActionHomReport report{Group::from_closed_set(gvg.group().degree(), std::move(kernel)), false};
  report.injective = report.kernel.is_trivial();

  if (!(report.kernel == core(dart_weight_intersection(gvg), gvg.group())))
    throw Error(ErrorCode::Internal, "kernel of the translation action differs from the core");
  if (report.injective != is_faithful_gvg(gvg))
    throw Error(ErrorCode::Internal, "injectivity of the translation action differs from faithfulness");
  return report;
}

GroupIsomorphism::GroupIsomorphism(Group from, Group to, std::vector<Perm> images)
: _from(std::move(from))
, _to(std::move(to))
{
  auto fail = [](std::string const &what) { throw Error(ErrorCode::IncompatiblePair, what); };

  std::vector<Perm> const &gens = _from.generators();
  if (images.size() != gens.size())
    fail("expected " + std::to_string(gens.size()) + " generator images, got " +
         std::to_string(images.size()));
  for (Perm const &p : images)
    if (p.degree() != _to.degree() || !_to.contains(p))
      fail("generator image " + p.to_string() + " is not in the codomain");
  if (_from.order() != _to.order())
    fail("groups of orders " + std::to_string(_from.order()) + " and " +
         std::to_string(_to.order()) + " are not isomorphic");

  // Walk the Cayley graph, sending e·s to f(e)·f(s); any clash means the
  // images do not respect a relation.
  std::vector<std::optional<Perm>> table(_from.order());
  table[*_from.index_of(_from.identity())] = _to.identity();
  std::deque<Perm> queue{_from.identity()};
  while (!queue.empty()) {
    Perm e = queue.front();
    queue.pop_front();
    Perm const fe = *table[*_from.index_of(e)];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm next = e * gens[i];
      Perm image = fe * images[i];
      auto &slot = table[*_from.index_of(next)];
      if (!slot) {
        slot = std::move(image);
        queue.push_back(std::move(next));
      } else if (*slot != image) {
        fail("generator images do not define a homomorphism");
      }
    }
  }

  std::vector<bool> hit(_to.order(), false);
  for (auto &slot : table) {
    std::size_t j = *_to.index_of(*slot);
    if (hit[j])
      fail("generator images do not define an injective map");
    hit[j] = true;
    _table.push_back(std::move(*slot));
  }
}

GroupIsomorphism GroupIsomorphism::inner(Group const &group, Perm const &g)
{
  std::vector<Perm> images;
  for (Perm const &s : group.generators())
    images.push_back(s.conjugated_by(g));
  return GroupIsomorphism(group, group, std::move(images));
}

Perm const &GroupIsomorphism::operator()(Perm const &p) const
{
  auto i = _from.index_of(p);
  if (!i)
    throw Error(ErrorCode::NotInGroup, p.to_string() + " is not in the domain");
  return _table[*i];
}

Group GroupIsomorphism::image(Group const &subgroup) const
{
  std::vector<Perm> gens;
  for (Perm const &s : subgroup.generators())
    gens.push_back((*this)(s));
  return Group::generate(_to.degree(), std::move(gens), subgroup.order());
}

GraphMorphism cover_iso_from_pair(Cover const &from, Cover const &to, CompatiblePair const &pair)
{
  GenVoltageGraph const &a = from.source();
  GenVoltageGraph const &b = to.source();
  GraphMorphism const &phi = pair.base_map;
  GroupIsomorphism const &f = pair.group_map;
  auto fail = [](std::string const &what) { throw Error(ErrorCode::IncompatiblePair, what); };

  if (!(f.domain() == a.group()) || !(f.codomain() == b.group()))
    fail("group map does not go between the two voltage groups");
  if (phi.vertex_map.size() != a.base().vertex_count() ||
      phi.dart_map.size() != a.base().dart_count() ||
      !is_isomorphism(a.base(), b.base(), phi))
    fail("base map is not an isomorphism of the base graphs");
  for (VertexId v = 0; v < a.base().vertex_count(); ++v)
    if (!(f.image(a.weight(v)) == b.weight(phi.vertex_map[v])))
      fail("f(ω(v)) differs from ω′(φ(v)) at vertex " + std::to_string(v));
  for (DartId x = 0; x < a.base().dart_count(); ++x) {
    if (!(f.image(a.dart_weight(x)) == b.dart_weight(phi.dart_map[x])))
      fail("f(ω(x)) differs from ω′(φ(x)) at dart " + std::to_string(x));
    if (f(a.voltage(x)) != b.voltage(phi.dart_map[x]))
      fail("f(ζ(x)) differs from ζ′(φ(x)) at dart " + std::to_string(x));
  }

  Graph const &graph = from.graph();
  GraphMorphism map;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    CoverLabel label = from.vertex_label(v);
    map.vertex_map.push_back(
      to.vertex_of(phi.vertex_map[label.base.index], f(label.representative)));
  }
  for (DartId x = 0; x < graph.dart_count(); ++x) {
    CoverLabel label = from.dart_label(x);
    map.dart_map.push_back(to.dart_of(phi.dart_map[label.base.index], f(label.representative)));
  }
  if (!is_isomorphism(graph, to.graph(), map) || !maps_fibres_to_fibres(from, to, map, phi))
    throw Error(ErrorCode::Internal, "map induced by a compatible pair is not an isomorphism");
  return map;
}

} // namespace gencov
