#include "gencov/cover.hpp"

#include <algorithm>
#include <string>

#include "gencov/error.hpp"
#include "gencov/normalize.hpp"

namespace gencov
{

std::size_t Cover::index_of(BaseElement z, Perm const &g) const
{
  return fibre_offset(z) + table(z).coset_of(g);
}

std::size_t Cover::fibre_offset(BaseElement z) const
{
  return z.sort == ElementSort::vertex ? _vertex_offsets[z.index] : _dart_offsets[z.index];
}

std::size_t Cover::fibre_size(BaseElement z) const
{
  return table(z).coset_count();
}

CoverLabel Cover::vertex_label(VertexId v) const
{
  BaseElement z = BaseElement::vertex(_vertex_base[v]);
  return {z, table(z).representative(v - fibre_offset(z))};
}

CoverLabel Cover::dart_label(DartId x) const
{
  BaseElement z = BaseElement::dart(_dart_base[x]);
  return {z, table(z).representative(x - fibre_offset(z))};
}

Cover gen_cov(GenVoltageGraph const &gvg, std::size_t size_cap)
{
  Graph const &base = gvg.base();
  Group const &group = gvg.group();

  std::size_t total = 0;
  for (VertexId v = 0; v < base.vertex_count(); ++v)
    total += group.order() / gvg.weight(v).order();
  for (DartId x = 0; x < base.dart_count(); ++x)
    total += group.order() / gvg.dart_weight(x).order();
  if (total > size_cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "cover would have " + std::to_string(total) + " vertices and darts, cap is " +
                  std::to_string(size_cap));

  Cover cover(gvg);
  std::size_t offset = 0;
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    cover._vertex_tables.emplace_back(gvg.weight(v), group);
    cover._vertex_offsets.push_back(offset);
    offset += cover._vertex_tables.back().coset_count();
    cover._vertex_base.resize(offset, v);
  }
  std::size_t vertex_count = offset;
  offset = 0;
  for (DartId x = 0; x < base.dart_count(); ++x) {
    cover._dart_tables.emplace_back(gvg.dart_weight(x), group);
    cover._dart_offsets.push_back(offset);
    offset += cover._dart_tables.back().coset_count();
    cover._dart_base.resize(offset, x);
  }
  std::size_t dart_count = offset;

  std::vector<VertexId> beg(dart_count);
  std::vector<DartId> inv(dart_count);
  for (DartId x = 0; x < base.dart_count(); ++x) {
    CosetTable const &tab = cover._dart_tables[x];
    Perm const &zeta = gvg.voltage(x);
    for (std::size_t c = 0; c < tab.coset_count(); ++c) {
      Perm const &g = tab.representative(c);
      DartId here = cover._dart_offsets[x] + c;
      beg[here] = cover.vertex_of(base.beg(x), g);
      inv[here] = cover.dart_of(base.inv(x), zeta * g);
      for (Perm const &h : tab.subgroup().elements()) {
        Perm hg = h * g;
        if (cover.vertex_of(base.beg(x), hg) != beg[here] ||
            cover.dart_of(base.inv(x), zeta * hg) != inv[here])
          throw Error(ErrorCode::Internal,
                      "cover labels depend on the coset representative at dart " +
                        std::to_string(x),
                      x);
      }
    }
  }
  cover._graph = Graph(vertex_count, std::move(beg), std::move(inv));
  cover._projection.vertex_map = cover._vertex_base;
  cover._projection.dart_map = cover._dart_base;
  return cover;
}

ValenceReport valence_check(Cover const &cover)
{
  GenVoltageGraph const &gvg = cover.source();
  Graph const &base = gvg.base();
  ValenceReport report;
  for (VertexId u = 0; u < base.vertex_count(); ++u) {
    std::size_t expected = 0;
    for (DartId x : base.darts_at(u))
      expected += lambda(gvg, x);
    BaseElement z = BaseElement::vertex(u);
    std::size_t first = cover.fibre_offset(z);
    std::size_t size = cover.fibre_size(z);
    report.rows.push_back({u, expected, size});
    for (VertexId v = first; v < first + size; ++v)
      if (cover.graph().valence(v) != expected)
        report.violations.push_back(v);
  }
  return report;
}

std::vector<VertexId> neighbours(Cover const &cover, VertexId vertex)
{
  GenVoltageGraph const &gvg = cover.source();
  Graph const &base = gvg.base();
  CoverLabel label = cover.vertex_label(vertex);
  VertexId u = label.base.index;
  Perm const &g = label.representative;

  std::vector<VertexId> result;
  for (DartId x : base.darts_at(u)) {
    CosetTable within(gvg.dart_weight(x), gvg.weight(u));
    for (std::size_t c = 0; c < within.coset_count(); ++c) {
      Perm const &h = within.representative(c);
      result.push_back(cover.vertex_of(base.term(x), gvg.voltage(x) * h * g));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<VertexId> lifted_walk_endpoints(Cover const &cover, Walk const &walk)
{
  WalkVoltage voltage = walk_voltage(cover.source(), walk);
  std::vector<VertexId> result;
  for (Perm const &z : voltage.elements)
    result.push_back(cover.vertex_of(walk.final_vertex(), z));
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

ConnectivityVerdict is_connected_by_voltage(GenVoltageGraph const &gvg)
{
  TNormalisation normal = t_normalize(gvg);
  GenVoltageGraph const &n = normal.result;
  std::vector<GroupPart> parts;
  for (DartId x = 0; x < n.base().dart_count(); ++x)
    if (!normal.tree.contains(x))
      parts.emplace_back(n.voltage(x));
  for (Group const &w : n.vertex_weights())
    parts.emplace_back(w);
  Group generated = generated_by(n.group(), parts);
  std::size_t index = n.group().order() / generated.order();
  return ConnectivityVerdict{index == 1, std::move(generated), index, std::move(normal.tree)};
}

namespace
{

// First h in ω(beg x) (skipping ω(x) when x == y) with ζ(y) h ζ(x)⁻¹ ∈ ω(term x).
std::optional<Perm> parallel_multiplier(GenVoltageGraph const &gvg, DartId x, DartId y)
{
  Graph const &base = gvg.base();
  Group const &target = gvg.weight(base.term(x));
  Perm const zeta_x_inv = gvg.voltage(x).inverse();
  Perm const &zeta_y = gvg.voltage(y);
  for (Perm const &h : gvg.weight(base.beg(x)).elements()) {
    if (x == y && gvg.dart_weight(x).contains(h))
      continue;
    if (target.contains(zeta_y * h * zeta_x_inv))
      return h;
  }
  return std::nullopt;
}

bool same_ends(Graph const &base, DartId x, DartId y)
{
  return base.beg(x) == base.beg(y) && base.term(x) == base.term(y);
}

} // namespace

std::optional<ParallelWitness> has_parallel_darts_by_voltage(GenVoltageGraph const &gvg)
{
  Graph const &base = gvg.base();
  for (DartId x = 0; x < base.dart_count(); ++x)
    for (DartId y = x; y < base.dart_count(); ++y)
      if (same_ends(base, x, y))
        if (auto h = parallel_multiplier(gvg, x, y))
          return ParallelWitness{x, y, std::move(*h)};
  return std::nullopt;
}

std::optional<DartId> has_semiedge_by_voltage(GenVoltageGraph const &gvg)
{
  Graph const &base = gvg.base();
  for (DartId x = 0; x < base.dart_count(); ++x)
    if (base.is_semi_edge(x) && gvg.dart_weight(x).contains(gvg.voltage(x)))
      return x;
  return std::nullopt;
}

SimplicityVerdict is_simple_by_voltage(GenVoltageGraph const &gvg)
{
  Graph const &base = gvg.base();
  SimplicityVerdict verdict;
  for (DartId x = 0; x < base.dart_count(); ++x) {
    if (auto h = parallel_multiplier(gvg, x, x)) {
      verdict.simple = false;
      verdict.failed_condition = 1;
      verdict.parallel = ParallelWitness{x, x, std::move(*h)};
      return verdict;
    }
  }
  for (DartId x = 0; x < base.dart_count(); ++x) {
    for (DartId y = 0; y < base.dart_count(); ++y) {
      if (y == x || !same_ends(base, x, y))
        continue;
      if (auto h = parallel_multiplier(gvg, x, y)) {
        verdict.simple = false;
        verdict.failed_condition = 2;
        verdict.parallel = ParallelWitness{x, y, std::move(*h)};
        return verdict;
      }
    }
  }
  if (auto s = has_semiedge_by_voltage(gvg)) {
    verdict.simple = false;
    verdict.failed_condition = 3;
    verdict.semi_edge = s;
  }
  return verdict;
}

} // namespace gencov
