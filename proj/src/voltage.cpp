#include "gencov/voltage.hpp"

#include <algorithm>

namespace gencov
{

namespace
{

std::string dart_name(DartId x)
{ return "dart " + std::to_string(x); }

} // namespace

std::optional<GvgViolation> find_violation(Graph const &base, Group const &group,
                                           std::span<Group const> vertex_weights,
                                           std::span<Group const> dart_weights,
                                           std::span<Perm const> voltages)
{
  if (vertex_weights.size() != base.vertex_count() ||
      dart_weights.size() != base.dart_count() || voltages.size() != base.dart_count())
    return GvgViolation{ErrorCode::DegreeMismatch, std::nullopt,
                        "weight or voltage table does not match the base graph"};

  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    if (!vertex_weights[v].is_subgroup_of(group))
      return GvgViolation{ErrorCode::NotASubgroup, std::nullopt,
                          "weight of vertex " + std::to_string(v) + " is not a subgroup of G"};
  }
  for (DartId x = 0; x < base.dart_count(); ++x) {
    if (!dart_weights[x].is_subgroup_of(group))
      return GvgViolation{ErrorCode::NotASubgroup, x,
                          "weight of " + dart_name(x) + " is not a subgroup of G"};
    if (!group.contains(voltages[x]))
      return GvgViolation{ErrorCode::NotInGroup, x,
                          "voltage " + voltages[x].to_string() + " of " + dart_name(x) +
                            " is not in G"};
  }

  for (DartId x = 0; x < base.dart_count(); ++x) {
    DartId y = base.inv(x);
    Group const &wx = dart_weights[x];

    if (!wx.is_subgroup_of(vertex_weights[base.beg(x)]))
      return GvgViolation{ErrorCode::Eq1Violation, x,
                          "weight of " + dart_name(x) +
                            " is not contained in the weight of its initial vertex"};

    if (!(conjugate(dart_weights[y], voltages[x]) == wx))
      return GvgViolation{ErrorCode::Eq2Violation, x,
                          "weight of " + dart_name(x) +
                            " differs from the weight of its inverse conjugated by its voltage"};

    if (!wx.contains(voltages[y] * voltages[x]))
      return GvgViolation{ErrorCode::Eq3Violation, x,
                          "voltage(inv x) * voltage(x) = " +
                            (voltages[y] * voltages[x]).to_string() +
                            " is not in the weight of " + dart_name(x)};
  }

  if (!is_connected(base))
    return GvgViolation{ErrorCode::BaseNotConnected, std::nullopt, "base graph is not connected"};

  return std::nullopt;
}

GenVoltageGraph::GenVoltageGraph(Graph base, Group group, std::vector<Group> vertex_weights,
                                 std::vector<Group> dart_weights, std::vector<Perm> voltages)
: _base(std::move(base)),
  _group(std::move(group)),
  _vertex_weights(std::move(vertex_weights)),
  _dart_weights(std::move(dart_weights)),
  _voltages(std::move(voltages))
{
  validate_gvg(*this);
}

GenVoltageGraph GenVoltageGraph::with(std::vector<Group> vertex_weights,
                                      std::vector<Group> dart_weights,
                                      std::vector<Perm> voltages) const
{
  return GenVoltageGraph(_base, _group, std::move(vertex_weights), std::move(dart_weights),
                         std::move(voltages));
}

GenVoltageGraph GenVoltageGraph::with_voltages(std::vector<Perm> voltages) const
{
  return with(_vertex_weights, _dart_weights, std::move(voltages));
}

bool operator==(GenVoltageGraph const &lhs, GenVoltageGraph const &rhs)
{
  return lhs._base == rhs._base && lhs._group == rhs._group &&
         lhs._vertex_weights == rhs._vertex_weights &&
         lhs._dart_weights == rhs._dart_weights && lhs._voltages == rhs._voltages;
}

void validate_gvg(GenVoltageGraph const &gvg)
{
  auto violation = find_violation(gvg.base(), gvg.group(), gvg.vertex_weights(),
                                  gvg.dart_weights(), gvg.voltages());
  if (violation)
    throw Error(violation->code, violation->message, violation->dart);
}

std::size_t lambda(GenVoltageGraph const &gvg, DartId x)
{
  return gvg.weight(gvg.base().beg(x)).order() / gvg.dart_weight(x).order();
}

std::size_t fibre_size(GenVoltageGraph const &gvg, BaseElement z)
{
  return gvg.group().order() / gvg.weight(z).order();
}

bool WalkVoltage::contains(Perm const &p) const
{
  return std::binary_search(elements.begin(), elements.end(), p);
}

WalkVoltage walk_voltage(GenVoltageGraph const &gvg, Walk const &walk)
{
  Graph const &base = gvg.base();
  Group const &start = gvg.weight(walk.initial());

  // Starting from ω(v_0) instead of {1} changes nothing for n > 0, since the
  // product already ends in ω(v_0), and gives ω(v) for the empty walk.
  std::vector<Perm> current(start.elements().begin(), start.elements().end());
  for (DartId x : walk.darts()) {
    Perm const &volt = gvg.voltage(x);
    std::vector<Perm> next;
    next.reserve(current.size() * gvg.weight(base.beg(x)).order());
    for (auto const &w : gvg.weight(base.beg(x)).elements()) {
      Perm prefix = volt * w;
      for (auto const &s : current)
        next.push_back(prefix * s);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return WalkVoltage{std::move(current), start};
}

GenVoltageGraph normalize_inverse_pairs(GenVoltageGraph const &gvg)
{
  std::vector<Perm> voltages = gvg.voltages();
  Graph const &base = gvg.base();
  for (DartId x = 0; x < base.dart_count(); ++x) {
    DartId y = base.inv(x);
    if (x < y)
      voltages[y] = voltages[x].inverse();
  }
  return gvg.with_voltages(std::move(voltages));
}

Graph k2_graph()
{
  return Graph(2, {0, 1}, {1, 0});
}

GenVoltageGraph coset_graph_spec(Group const &group, Group const &vertex_weight,
                                 Group const &dart_weight, Perm const &a)
{
  return GenVoltageGraph(Graph(1, {0}, {0}), group, {vertex_weight}, {dart_weight}, {a});
}

GenVoltageGraph bicoset_spec(Group const &group, Group const &left, Group const &right)
{
  Group both = intersection(left, right);
  Perm id = group.identity();
  return GenVoltageGraph(k2_graph(), group, {left, right}, {both, both}, {id, id});
}

} // namespace gencov
