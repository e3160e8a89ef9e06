#ifndef GENCOV_GROUP_HPP
#define GENCOV_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gencov/perm.hpp"

namespace gencov
{

inline constexpr std::size_t default_order_cap = 100000;

/// A finite permutation group stored by full element enumeration.
///
/// Elements are kept sorted, so two groups are equal exactly when their
/// element lists are. Copies share the underlying (immutable) storage.
class Group
{
public:
  /// Closure of `gens` by breadth-first multiplication.
  ///
  /// Throws `DegreeMismatch` if a generator has the wrong degree and
  /// `OrderCapExceeded` once the closure grows beyond `order_cap`.
  static Group generate(std::size_t degree, std::vector<Perm> gens,
                        std::size_t order_cap = default_order_cap);

  static Group trivial(std::size_t degree);

  /// Wraps a set already known to be closed under multiplication; a small
  /// generating set is picked greedily from the sorted elements.
  static Group from_closed_set(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  bool is_trivial() const noexcept
  { return order() == 1u; }

  std::vector<Perm> const &generators() const noexcept;

  /// All elements in ascending (lexicographic) order.
  std::span<Perm const> elements() const noexcept;

  Perm const &element(std::size_t index) const
  { return elements()[index]; }

  Perm identity() const
  { return Perm(degree()); }

  bool contains(Perm const &p) const;

  /// Position of `p` in `elements()`.
  std::optional<std::size_t> index_of(Perm const &p) const;

  bool is_subgroup_of(Group const &other) const;

  friend bool operator==(Group const &lhs, Group const &rhs);

private:
  struct Data;
  explicit Group(std::shared_ptr<Data const> data);

  std::shared_ptr<Data const> _data;
};

/// A right coset `H g` identified by its least element.
struct RightCoset
{
  Group subgroup;
  Perm representative;

  /// Canonical coset `H g`.
  static RightCoset of(Group const &subgroup, Perm const &g);

  bool contains(Perm const &p) const;

  friend bool operator==(RightCoset const &lhs, RightCoset const &rhs)
  { return lhs.subgroup == rhs.subgroup && lhs.representative == rhs.representative; }
};

/// Lexicographically least element of `H g`.
Perm canonical_representative(Group const &subgroup, Perm const &g);

/// The right cosets of `subgroup` in `group`, ordered by representative.
/// Throws `NotASubgroup`.
std::vector<RightCoset> right_cosets(Group const &subgroup, Group const &group);

/// Lookup table from the elements of `group` to right cosets of `subgroup`.
class CosetTable
{
public:
  CosetTable(Group const &subgroup, Group const &group);

  std::size_t coset_count() const noexcept
  { return _representatives.size(); }

  /// Coset of `group.element(element_index)`.
  std::size_t coset_of(std::size_t element_index) const
  { return _coset_of[element_index]; }

  /// Coset containing `g`; throws `NotInGroup` unless `g` is in the group.
  std::size_t coset_of(Perm const &g) const;

  Perm const &representative(std::size_t coset) const
  { return _representatives[coset]; }

  Group const &subgroup() const noexcept
  { return _subgroup; }

  Group const &group() const noexcept
  { return _group; }

private:
  Group _subgroup;
  Group _group;
  std::vector<std::size_t> _coset_of;
  std::vector<Perm> _representatives;
};

/// `{g^-1 h g : h in H}`, carrying the conjugated generators of `H`.
Group conjugate(Group const &subgroup, Perm const &g);

Group intersection(Group const &lhs, Group const &rhs);

/// Largest normal subgroup of `group` contained in `subgroup`.
Group core(Group const &subgroup, Group const &group);

bool is_normal(Group const &subgroup, Group const &group);

using GroupPart = std::variant<Perm, Group>;

/// Subgroup of `group` generated by all given elements and subgroups.
/// Throws `NotInAmbientGroup` if a part does not lie in `group`.
Group generated_by(Group const &group, std::vector<GroupPart> const &parts);

} // namespace gencov

#endif // GENCOV_GROUP_HPP
