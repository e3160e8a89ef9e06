#ifndef GENCOV_QUOTIENT_HPP
#define GENCOV_QUOTIENT_HPP

#include <cstddef>
#include <vector>

#include "gencov/cover.hpp"
#include "gencov/graph.hpp"
#include "gencov/group.hpp"
#include "gencov/voltage.hpp"

namespace gencov
{

/// A group of automorphisms of a graph, acting on the unified point set
/// V ∪ D: vertex v is point v and dart x is point |V| + x.
class ActionGroup
{
public:
  /// Throws `DegreeMismatch` if the degree is not |V| + |D|, `NotAnAction`
  /// if a generator mixes vertices and darts or breaks beg/inv, and
  /// `NotFaithfulOnDarts` if a nontrivial element fixes every dart.
  ActionGroup(Graph graph, Group group);

  Graph const &graph() const noexcept
  { return _graph; }

  Group const &group() const noexcept
  { return _group; }

  Point vertex_point(VertexId v) const
  { return static_cast<Point>(v); }

  Point dart_point(DartId x) const
  { return static_cast<Point>(_graph.vertex_count() + x); }

  VertexId vertex_image(VertexId v, Perm const &g) const
  { return g[vertex_point(v)]; }

  DartId dart_image(DartId x, Perm const &g) const
  { return g[dart_point(x)] - _graph.vertex_count(); }

  Group vertex_stabiliser(VertexId v) const;
  Group dart_stabiliser(DartId x) const;

private:
  Graph _graph;
  Group _group;
};

/// Γ/G. Orbits are numbered by their least member.
struct Quotient
{
  Graph graph;
  GraphMorphism map; // Γ → Γ/G
  std::vector<std::vector<VertexId>> vertex_orbits;
  std::vector<std::vector<DartId>> dart_orbits;
};

Quotient quotient_graph(ActionGroup const &action);

/// One representative per orbit (T_V, T_D) with beg x ∈ T_V for x ∈ T_D,
/// indexed by quotient vertex and dart.
struct TransversalData
{
  std::vector<VertexId> vertex_rep;
  std::vector<DartId> dart_rep;
  /// ι(x): the member of T_D in the orbit of x⁻¹.
  std::vector<DartId> partner;
  /// An element with ι(x)^ζ = x⁻¹; the identity when x⁻¹ ∈ T_D.
  std::vector<Perm> zeta;
  /// x⁻¹ ∈ T_D, i.e. x lies in T_D°.
  std::vector<bool> closed;
};

/// Grows a connected transversal by BFS from vertex 0, taking darts in index
/// order. Throws `QuotientNotConnected`.
TransversalData choose_transversal(ActionGroup const &action, Quotient const &quotient);

/// Checks `transversal` against `action`: representatives, partners and
/// ι(x)^ζ = x⁻¹. Throws `BadTransversal`.
void check_transversal(ActionGroup const &action, Quotient const &quotient,
                       TransversalData const &transversal);

struct Reconstruction
{
  Quotient quotient;
  TransversalData transversal;
  GenVoltageGraph gvg;
  Cover cover;
  /// Γ → cover, x^g ↦ (x^G, G_x g) for x in the transversal.
  GraphMorphism isomorphism;
};

/// Voltage graph over Γ/G with ω(x^G) = G_x and ζ from the transversal,
/// whose cover is isomorphic to Γ.
Reconstruction reconstruct(ActionGroup const &action, std::size_t size_cap = default_cover_cap);

/// core_G(⋂ ω(x)) is trivial. For a base without darts the intersection runs
/// over vertices.
bool is_faithful_gvg(GenVoltageGraph const &gvg);

/// ⋂ ω(x) over darts (over vertices if there are none).
Group dart_weight_intersection(GenVoltageGraph const &gvg);

struct GenerationVerdict
{
  bool connected = false;
  Group generated;
  /// a_x per dart orbit whose representative's inverse lies outside T_D.
  std::vector<std::pair<std::size_t, Perm>> shifts;
};

/// Whether ⟨G_v (v ∈ T_V), a_x (x ∈ T_D \ T_D°)⟩ = G, with a_x the least
/// element taking x⁻¹ into T_D. Throws `BadTransversal` unless T_V together
/// with the edges inside T_D is connected.
GenerationVerdict generation_connectivity_test(ActionGroup const &action,
                                               Quotient const &quotient,
                                               TransversalData const &transversal);

} // namespace gencov

#endif // GENCOV_QUOTIENT_HPP
