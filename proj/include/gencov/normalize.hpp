#ifndef GENCOV_NORMALIZE_HPP
#define GENCOV_NORMALIZE_HPP

#include <vector>

#include "gencov/cover.hpp"
#include "gencov/graph.hpp"
#include "gencov/voltage.hpp"

namespace gencov
{

/// Fibre-preserving map between covers of two voltage graphs with the same
/// base and group: (z, ω(z)g) ↦ (z, ω'(z) m_z g) for one multiplier m_z per
/// base element.
struct FibreShift
{
  std::vector<Perm> vertex_multipliers;
  std::vector<Perm> dart_multipliers;

  static FibreShift identity(Graph const &base, std::size_t degree);

  Perm const &multiplier(BaseElement z) const
  { return z.sort == ElementSort::vertex ? vertex_multipliers[z.index] : dart_multipliers[z.index]; }

  /// `this` followed by `next`.
  FibreShift then(FibreShift const &next) const;
};

/// The index-level map `from.graph() -> to.graph()` described by `shift`.
/// Not checked; pair with `is_isomorphism`.
GraphMorphism realize(FibreShift const &shift, Cover const &from, Cover const &to);

struct NormalisationStep
{
  DartId shifted;
  Perm conjugator; // ζ(shifted) before the step
  GenVoltageGraph before;
  GenVoltageGraph after;
  FibreShift witness;
};

/// Makes ζ(x) trivial for a dart x with beg x ≠ term x. With v = term x and
/// c = ζ(x):
///
///   ζ'(y) = c⁻¹ ζ(y)   if term y = v (and not beg y = v)
///   ζ'(y) = ζ(y) c     if beg y = v (and not term y = v)
///   ζ'(y) = c⁻¹ ζ(y) c if y is a loop or semi-edge at v
///   ω'(z) = ω(z)^c     if v ∈ {z, beg z}
///
/// and the witness multiplies labels by c⁻¹ on those same z. Throws
/// `LoopOrSemiEdge`.
NormalisationStep shift_dart(GenVoltageGraph const &gvg, DartId x);

struct TNormalisation
{
  GenVoltageGraph result;
  FibreShift witness;
  std::vector<NormalisationStep> steps;
  SpanningTree tree;
};

/// Makes ζ trivial on both darts of every edge of `tree`.
///
/// Leaves are peeled in least-index order; the tree darts into them are then
/// shifted in reverse peeling order, so each shift only touches darts at a
/// vertex whose tree edge to the root side is already done. After each shift
/// the inverse tree dart is rewritten to ζ(x)⁻¹ = 1, which leaves the cover
/// unchanged. Throws `NotASpanningTree`.
TNormalisation t_normalize(GenVoltageGraph const &gvg, SpanningTree const &tree);

/// Normalises on the BFS spanning tree rooted at vertex 0.
TNormalisation t_normalize(GenVoltageGraph const &gvg);

bool is_t_normalised(GenVoltageGraph const &gvg, SpanningTree const &tree);

} // namespace gencov

#endif // GENCOV_NORMALIZE_HPP
