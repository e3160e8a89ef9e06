#ifndef GENCOV_SYMMETRY_HPP
#define GENCOV_SYMMETRY_HPP

#include <unordered_map>
#include <vector>

#include "gencov/cover.hpp"
#include "gencov/graph.hpp"
#include "gencov/group.hpp"

namespace gencov
{

/// The automorphism h̄ : (z, ω(z)g) ↦ (z, ω(z)gh) of a cover.
struct LiftedTranslation
{
  Perm h;
  GraphMorphism map;
};

/// Throws `NotInGroup` unless `h` lies in the group of the cover's source.
LiftedTranslation lift_translation(Cover const &cover, Perm const &h);

struct ActionHomReport
{
  /// {h : h̄ = id}, found by applying every h.
  Group kernel;
  bool injective = false;
};

/// Kernel of h ↦ h̄. Cross-checked against core_G(⋂ ω(x)) and faithfulness;
/// throws `Internal` if they disagree.
ActionHomReport action_hom(Cover const &cover);

/// A group isomorphism given by the images of the domain's generators.
class GroupIsomorphism
{
public:
  /// Extends the generator images to all of `from`. Throws
  /// `IncompatiblePair` if they do not define a bijective homomorphism onto
  /// `to`.
  GroupIsomorphism(Group from, Group to, std::vector<Perm> images);

  /// Conjugation by `g` within `group`, p ↦ g⁻¹ p g.
  static GroupIsomorphism inner(Group const &group, Perm const &g);

  Group const &domain() const noexcept
  { return _from; }

  Group const &codomain() const noexcept
  { return _to; }

  /// Throws `NotInGroup` for elements outside the domain.
  Perm const &operator()(Perm const &p) const;

  Group image(Group const &subgroup) const;

private:
  Group _from;
  Group _to;
  std::vector<Perm> _table; // indexed like `_from.elements()`
};

/// φ : Δ → Δ′ and f : G → G′ with f(ω(z)) = ω′(φ(z)) and
/// f(ζ(x)) = ζ′(φ(x)).
struct CompatiblePair
{
  GraphMorphism base_map;
  GroupIsomorphism group_map;
};

/// Φ : (z, ω(z)g) ↦ (φ(z), ω′(φ(z)) f(g)), checked to be an isomorphism
/// `from.graph() -> to.graph()`. Throws `IncompatiblePair` naming the
/// failing condition.
GraphMorphism cover_iso_from_pair(Cover const &from, Cover const &to, CompatiblePair const &pair);

} // namespace gencov

#endif // GENCOV_SYMMETRY_HPP
