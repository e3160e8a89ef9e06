#include "gencov/normalize.hpp"

#include <algorithm>

namespace gencov
{

FibreShift FibreShift::identity(Graph const &base, std::size_t degree)
{
  FibreShift shift;
  shift.vertex_multipliers.assign(base.vertex_count(), Perm(degree));
  shift.dart_multipliers.assign(base.dart_count(), Perm(degree));
  return shift;
}

FibreShift FibreShift::then(FibreShift const &next) const
{
  // g ↦ m g ↦ m' m g
  FibreShift shift;
  for (std::size_t v = 0; v < vertex_multipliers.size(); ++v)
    shift.vertex_multipliers.push_back(next.vertex_multipliers[v] * vertex_multipliers[v]);
  for (std::size_t x = 0; x < dart_multipliers.size(); ++x)
    shift.dart_multipliers.push_back(next.dart_multipliers[x] * dart_multipliers[x]);
  return shift;
}

GraphMorphism realize(FibreShift const &shift, Cover const &from, Cover const &to)
{
  GraphMorphism m;
  Graph const &g = from.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    CoverLabel label = from.vertex_label(v);
    m.vertex_map.push_back(
      to.index_of(label.base, shift.multiplier(label.base) * label.representative));
  }
  for (DartId x = 0; x < g.dart_count(); ++x) {
    CoverLabel label = from.dart_label(x);
    m.dart_map.push_back(
      to.index_of(label.base, shift.multiplier(label.base) * label.representative));
  }
  return m;
}

NormalisationStep shift_dart(GenVoltageGraph const &gvg, DartId x)
{
  Graph const &base = gvg.base();
  if (base.beg(x) == base.term(x))
    throw Error(ErrorCode::LoopOrSemiEdge,
                "cannot shift dart " + std::to_string(x) + ": it begins and ends at one vertex",
                x);

  VertexId v = base.term(x);
  Perm const c = gvg.voltage(x);
  Perm const c_inv = c.inverse();
  std::size_t degree = gvg.group().degree();

  FibreShift witness = FibreShift::identity(base, degree);

  std::vector<Group> vertex_weights = gvg.vertex_weights();
  vertex_weights[v] = conjugate(vertex_weights[v], c);
  witness.vertex_multipliers[v] = c_inv;

  std::vector<Group> dart_weights = gvg.dart_weights();
  std::vector<Perm> voltages = gvg.voltages();
  for (DartId y = 0; y < base.dart_count(); ++y) {
    bool starts = base.beg(y) == v;
    bool ends = base.term(y) == v;
    if (starts) {
      dart_weights[y] = conjugate(dart_weights[y], c);
      witness.dart_multipliers[y] = c_inv;
    }
    if (ends)
      voltages[y] = c_inv * voltages[y];
    if (starts)
      voltages[y] = voltages[y] * c;
  }

  GenVoltageGraph after = gvg.with(std::move(vertex_weights), std::move(dart_weights),
                                   std::move(voltages));
  return NormalisationStep{x, c, gvg, std::move(after), std::move(witness)};
}

bool is_t_normalised(GenVoltageGraph const &gvg, SpanningTree const &tree)
{
  return std::all_of(tree.darts.begin(), tree.darts.end(),
                     [&](DartId x) { return gvg.voltage(x).is_identity(); });
}

TNormalisation t_normalize(GenVoltageGraph const &gvg, SpanningTree const &tree)
{
  Graph const &base = gvg.base();
  SpanningTree checked = as_spanning_tree(base, tree.darts);

  // Peel leaves in least-index order, remembering the tree dart into each.
  std::vector<std::size_t> degree(base.vertex_count(), 0);
  for (DartId x : checked.darts)
    ++degree[base.beg(x)];
  std::vector<bool> removed(base.vertex_count(), false);
  std::vector<DartId> into_leaf;
  for (std::size_t remaining = base.vertex_count(); remaining > 1; --remaining) {
    VertexId leaf = 0;
    while (removed[leaf] || degree[leaf] != 1)
      ++leaf;
    DartId out = 0;
    for (DartId x : base.darts_at(leaf)) {
      if (checked.contains(x) && !removed[base.term(x)]) {
        out = x;
        break;
      }
    }
    removed[leaf] = true;
    --degree[leaf];
    --degree[base.term(out)];
    into_leaf.push_back(base.inv(out));
  }

  TNormalisation result{gvg, FibreShift::identity(base, gvg.group().degree()), {}, checked};
  for (auto it = into_leaf.rbegin(); it != into_leaf.rend(); ++it) {
    DartId x = *it;
    DartId back = base.inv(x);
    GenVoltageGraph const &current = result.result;
    if (current.voltage(x).is_identity() && current.voltage(back).is_identity())
      continue;

    NormalisationStep step = shift_dart(current, x);
    // ζ(x) is now trivial and ζ(x⁻¹) ∈ ω(x); set ζ(x⁻¹) = ζ(x)⁻¹ = 1.
    std::vector<Perm> voltages = step.after.voltages();
    voltages[back] = voltages[x].inverse();
    step.after = step.after.with_voltages(std::move(voltages));

    result.witness = result.witness.then(step.witness);
    result.result = step.after;
    result.steps.push_back(std::move(step));
  }
  return result;
}

TNormalisation t_normalize(GenVoltageGraph const &gvg)
{
  return t_normalize(gvg, spanning_tree(gvg.base(), 0));
}

} // namespace gencov
