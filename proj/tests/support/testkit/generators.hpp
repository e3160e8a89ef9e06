#ifndef GENCOV_TESTKIT_GENERATORS_HPP
#define GENCOV_TESTKIT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gencov/graph.hpp"
#include "gencov/group.hpp"
#include "gencov/voltage.hpp"

namespace testkit
{

using namespace gencov;

inline constexpr std::uint64_t default_seed = 20240611;

class Rng
{
public:
  explicit Rng(std::uint64_t seed = default_seed)
  : _engine(seed)
  {}

  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi)
  { return std::uniform_int_distribution<std::size_t>(lo, hi)(_engine); }

  bool chance(double p)
  { return std::bernoulli_distribution(p)(_engine); }

  template <class T>
  T const &pick(std::vector<T> const &items)
  { return items[between(0, items.size() - 1)]; }

  Perm element(Group const &group)
  { return group.element(between(0, group.order() - 1)); }

  std::mt19937_64 &engine() noexcept
  { return _engine; }

private:
  std::mt19937_64 _engine;
};

struct NamedGroup
{
  std::string name;
  Group group;
};

Group cyclic_group(std::size_t n);
Group dihedral_group(std::size_t n);
Group symmetric_group(std::size_t n);

/// A fixed menu of small groups, all of order at most `max_order`.
std::vector<NamedGroup> small_groups(std::size_t max_order);

/// Subgroup generated by up to two random elements of `within`, or
/// occasionally `within` itself or the trivial group.
Group random_subgroup(Rng &rng, Group const &within);

struct BaseShape
{
  std::size_t max_vertices = 4;
  std::size_t max_darts = 10;
};

/// Random connected graph with loops, semi-edges and parallel edges, dart
/// ids shuffled.
Graph random_connected_base(Rng &rng, BaseShape shape = {});

/// Random graph that may be disconnected.
Graph random_base(Rng &rng, BaseShape shape = {});

/// Random valid voltage graph over `group` and `base`, built edge by edge.
GenVoltageGraph random_gvg(Rng &rng, Group const &group, Graph const &base);

/// Random valid voltage graph: group from `small_groups(max_order)` and a
/// random connected base.
GenVoltageGraph random_gvg(Rng &rng, std::size_t max_order = 24, BaseShape shape = {});

/// Raw (ω, ζ) tables that may or may not satisfy the equations.
struct RawTables
{
  Graph base;
  Group group;
  std::vector<Group> vertex_weights;
  std::vector<Group> dart_weights;
  std::vector<Perm> voltages;
};

/// Mix of valid tables, valid tables with one entry perturbed, and fully
/// random tables, occasionally with weights or voltages outside G.
RawTables random_tables(Rng &rng, std::size_t max_order = 12);

/// Random walk of the given length starting at a random vertex.
Walk random_walk(Rng &rng, Graph const &graph, std::size_t length);

} // namespace testkit

#endif // GENCOV_TESTKIT_GENERATORS_HPP
