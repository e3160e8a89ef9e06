#ifndef GENCOV_COVER_HPP
#define GENCOV_COVER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gencov/graph.hpp"
#include "gencov/group.hpp"
#include "gencov/voltage.hpp"

namespace gencov
{

inline constexpr std::size_t default_cover_cap = 1000000;

/// Label (z, ω(z)g) of a cover vertex or dart, with g the canonical
/// representative of its coset.
struct CoverLabel
{
  BaseElement base;
  Perm representative;

  friend bool operator==(CoverLabel const &, CoverLabel const &) = default;
};

/// The generalised cover Γ of a generalised voltage graph:
///
///   V(Γ) = {(v, ω(v)g)},  D(Γ) = {(x, ω(x)g)},
///   beg (x, ω(x)g) = (beg x, ω(beg x)g),
///   inv (x, ω(x)g) = (inv x, ω(inv x)ζ(x)g).
///
/// The fibre above a base element occupies a contiguous index range; within a
/// fibre, elements are ordered by canonical coset representative.
class Cover
{
public:
  Graph const &graph() const noexcept
  { return _graph; }

  GenVoltageGraph const &source() const noexcept
  { return _source; }

  /// Index of the cover element (z, ω(z)g).
  std::size_t index_of(BaseElement z, Perm const &g) const;

  VertexId vertex_of(VertexId v, Perm const &g) const
  { return index_of(BaseElement::vertex(v), g); }

  DartId dart_of(DartId x, Perm const &g) const
  { return index_of(BaseElement::dart(x), g); }

  CoverLabel vertex_label(VertexId v) const;
  CoverLabel dart_label(DartId x) const;

  /// First index and size of the fibre above `z`.
  std::size_t fibre_offset(BaseElement z) const;
  std::size_t fibre_size(BaseElement z) const;

  /// The covering projection Γ → Δ.
  GraphMorphism const &projection() const noexcept
  { return _projection; }

  friend Cover gen_cov(GenVoltageGraph const &gvg, std::size_t size_cap);

private:
  explicit Cover(GenVoltageGraph source)
  : _source(std::move(source))
  {}

  CosetTable const &table(BaseElement z) const
  { return z.sort == ElementSort::vertex ? _vertex_tables[z.index] : _dart_tables[z.index]; }

  GenVoltageGraph _source;
  Graph _graph;
  std::vector<CosetTable> _vertex_tables;
  std::vector<CosetTable> _dart_tables;
  std::vector<std::size_t> _vertex_offsets;
  std::vector<std::size_t> _dart_offsets;
  std::vector<std::size_t> _vertex_base; // cover vertex -> base vertex
  std::vector<std::size_t> _dart_base;   // cover dart -> base dart
  GraphMorphism _projection;
};

/// Builds the cover, re-checking that beg and inv do not depend on the coset
/// representative. Throws `SizeCapExceeded` when |V(Γ)| + |D(Γ)| > `size_cap`.
Cover gen_cov(GenVoltageGraph const &gvg, std::size_t size_cap = default_cover_cap);

struct ValenceRow
{
  VertexId base_vertex;
  std::size_t expected; // sum of λ(x) over darts at the base vertex
  std::size_t fibre_size;
};

struct ValenceReport
{
  std::vector<ValenceRow> rows;
  std::vector<VertexId> violations; // cover vertices with unexpected valence

  bool ok() const noexcept
  { return violations.empty(); }
};

ValenceReport valence_check(Cover const &cover);

/// Neighbours of a cover vertex (u, ω(u)g) as a sorted multiset, one entry per
/// emanating dart, computed from the voltage data as
/// (term x, ω(term x) ζ(x) h g) over darts x at u and coset representatives
/// h of ω(x) in ω(u).
std::vector<VertexId> neighbours(Cover const &cover, VertexId vertex);

/// Final vertices {(v, ω(v)z) : z ∈ ζ(W)} of the lifts of `walk` that start
/// at (u, ω(u)), sorted.
std::vector<VertexId> lifted_walk_endpoints(Cover const &cover, Walk const &walk);

struct ConnectivityVerdict
{
  bool connected = false;
  /// ⟨A, B⟩ computed after normalising on `tree`.
  Group generated;
  /// |G : ⟨A, B⟩|, the number of components of the cover.
  std::size_t index = 0;
  SpanningTree tree;
};

/// Normalises on the BFS spanning tree T of the base, then compares
/// G with ⟨A, B⟩ where A = ⟨ζ(x) : x ∉ D(T)⟩ and B = ⟨ω(v) : v ∈ V(Δ)⟩.
ConnectivityVerdict is_connected_by_voltage(GenVoltageGraph const &gvg);

/// Darts x, y with beg x = beg y, term x = term y and h ∈ ω(beg x) such
/// that ζ(y) h ζ(x)⁻¹ ∈ ω(term x), and x ≠ y or h ∉ ω(x). The cover darts
/// (x, ω(x)) and (y, ω(y)h) are then distinct and parallel.
struct ParallelWitness
{
  DartId x;
  DartId y;
  Perm h;
};

std::optional<ParallelWitness> has_parallel_darts_by_voltage(GenVoltageGraph const &gvg);

/// A semi-edge dart x with ζ(x) ∈ ω(x); (x, ω(x)) is then self-inverse.
std::optional<DartId> has_semiedge_by_voltage(GenVoltageGraph const &gvg);

struct SimplicityVerdict
{
  bool simple = true;
  /// 1, 2 or 3 for the first failing condition, 0 if simple.
  int failed_condition = 0;
  std::optional<ParallelWitness> parallel;
  std::optional<DartId> semi_edge;
};

/// For every dart x:
///  (1) ζ(x) h ζ(x)⁻¹ ∉ ω(term x) for h ∈ ω(beg x) \ ω(x);
///  (2) ζ(y) h ζ(x)⁻¹ ∉ ω(term x) for darts y ≠ x parallel to x, h ∈ ω(beg x);
///  (3) ζ(x) ∉ ω(x) if x is a semi-edge.
SimplicityVerdict is_simple_by_voltage(GenVoltageGraph const &gvg);

} // namespace gencov

#endif // GENCOV_COVER_HPP
