#ifndef GENCOV_VOLTAGE_HPP
#define GENCOV_VOLTAGE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gencov/error.hpp"
#include "gencov/graph.hpp"
#include "gencov/group.hpp"

namespace gencov
{

enum class ElementSort
{
  vertex,
  dart,
};

/// A vertex or a dart of a graph.
struct BaseElement
{
  ElementSort sort = ElementSort::vertex;
  std::size_t index = 0;

  static BaseElement vertex(VertexId v)
  { return {ElementSort::vertex, v}; }

  static BaseElement dart(DartId x)
  { return {ElementSort::dart, x}; }

  friend auto operator<=>(BaseElement const &, BaseElement const &) = default;
};

/// First condition that a candidate (Δ, G, ω, ζ) breaks.
struct GvgViolation
{
  ErrorCode code;
  std::optional<DartId> dart;
  std::string message;
};

/// Checks the three weight/voltage conditions for every dart and that the
/// base is connected:
///
///   ω(x) ≤ ω(beg x),   ω(x) = ω(x⁻¹)^ζ(x),   ζ(x⁻¹)ζ(x) ∈ ω(x).
///
/// Darts are scanned in index order and the conditions in that order. Shape
/// problems (wrong table sizes, weights outside G, voltages outside G) are
/// reported as `DegreeMismatch`, `NotASubgroup` or `NotInGroup`.
std::optional<GvgViolation> find_violation(Graph const &base, Group const &group,
                                           std::span<Group const> vertex_weights,
                                           std::span<Group const> dart_weights,
                                           std::span<Perm const> voltages);

/// Generalised voltage graph (Δ, G, ω, ζ). Always valid once constructed.
class GenVoltageGraph
{
public:
  /// Throws `Error` carrying the code of the first violation.
  GenVoltageGraph(Graph base, Group group, std::vector<Group> vertex_weights,
                  std::vector<Group> dart_weights, std::vector<Perm> voltages);

  Graph const &base() const noexcept
  { return _base; }

  Group const &group() const noexcept
  { return _group; }

  Group const &weight(VertexId v) const
  { return _vertex_weights[v]; }

  Group const &dart_weight(DartId x) const
  { return _dart_weights[x]; }

  Group const &weight(BaseElement z) const
  { return z.sort == ElementSort::vertex ? _vertex_weights[z.index] : _dart_weights[z.index]; }

  Perm const &voltage(DartId x) const
  { return _voltages[x]; }

  std::vector<Group> const &vertex_weights() const noexcept
  { return _vertex_weights; }

  std::vector<Group> const &dart_weights() const noexcept
  { return _dart_weights; }

  std::vector<Perm> const &voltages() const noexcept
  { return _voltages; }

  /// Same base and group with new weights and voltages (validated).
  GenVoltageGraph with(std::vector<Group> vertex_weights, std::vector<Group> dart_weights,
                       std::vector<Perm> voltages) const;

  GenVoltageGraph with_voltages(std::vector<Perm> voltages) const;

  friend bool operator==(GenVoltageGraph const &lhs, GenVoltageGraph const &rhs);

private:
  Graph _base;
  Group _group;
  std::vector<Group> _vertex_weights;
  std::vector<Group> _dart_weights;
  std::vector<Perm> _voltages;
};

void validate_gvg(GenVoltageGraph const &gvg);

/// |ω(beg x) : ω(x)|, the number of cover darts above `x` at each vertex of
/// the fibre above `beg x`.
std::size_t lambda(GenVoltageGraph const &gvg, DartId x);

/// |G : ω(z)|.
std::size_t fibre_size(GenVoltageGraph const &gvg, BaseElement z);

/// Voltage of a walk: the subset
///
///   ζ(x_{n-1}) ω(v_{n-1}) ··· ζ(x_0) ω(v_0)
///
/// of G, where v_i = beg x_i. The empty walk at v has voltage ω(v). The set is
/// a union of cosets z·ω(v_0).
struct WalkVoltage
{
  std::vector<Perm> elements; // sorted
  Group granule;              // ω(v_0)

  bool contains(Perm const &p) const;

  std::size_t coset_count() const
  { return elements.size() / granule.order(); }
};

WalkVoltage walk_voltage(GenVoltageGraph const &gvg, Walk const &walk);

/// Rewrites ζ(x⁻¹) := ζ(x)⁻¹ for the lesser dart x of every edge that is not
/// a semi-edge. The cover is unchanged label for label.
GenVoltageGraph normalize_inverse_pairs(GenVoltageGraph const &gvg);

/// One vertex with one semi-edge s: ω(vertex) = Gv, ω(s) = Gx, ζ(s) = a.
GenVoltageGraph coset_graph_spec(Group const &group, Group const &vertex_weight,
                                 Group const &dart_weight, Perm const &a);

/// K2 with vertices u = 0, v = 1 and darts x = 0 (u→v), y = 1 (v→u):
/// ω(u) = L, ω(v) = R, ω(x) = ω(y) = L ∩ R and trivial voltages.
GenVoltageGraph bicoset_spec(Group const &group, Group const &left, Group const &right);

/// The graph with two vertices and one edge between them, as used by
/// `bicoset_spec`.
Graph k2_graph();

} // namespace gencov

#endif // GENCOV_VOLTAGE_HPP
