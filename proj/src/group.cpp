#include "gencov/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "gencov/error.hpp"

namespace gencov
{

struct Group::Data
{
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
};

namespace
{

std::vector<Perm> closure(std::size_t degree, std::vector<Perm> const &gens,
                          std::size_t order_cap)
{
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> found;
  Perm id(degree);
  seen.insert(id);
  found.push_back(id);

  for (std::size_t next = 0; next < found.size(); ++next) {
    for (auto const &gen : gens) {
      Perm candidate = found[next] * gen;
      if (seen.insert(candidate).second) {
        found.push_back(std::move(candidate));
        if (found.size() > order_cap)
          throw Error(ErrorCode::OrderCapExceeded,
                      "group order exceeds cap of " + std::to_string(order_cap));
      }
    }
  }

  std::sort(found.begin(), found.end());
  return found;
}

} // namespace

Group::Group(std::shared_ptr<Data const> data)
: _data(std::move(data))
{}

Group Group::generate(std::size_t degree, std::vector<Perm> gens,
                      std::size_t order_cap)
{
  for (auto const &gen : gens) {
    if (gen.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch,
                  "generator " + gen.to_string() + " has degree " +
                    std::to_string(gen.degree()) + ", expected " +
                    std::to_string(degree));
  }

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->elements = closure(degree, gens, order_cap);
  data->generators = std::move(gens);
  return Group(std::move(data));
}

Group Group::trivial(std::size_t degree)
{
  return generate(degree, {});
}

Group Group::from_closed_set(std::size_t degree, std::vector<Perm> elements)
{
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  std::vector<Perm> gens;
  std::vector<Perm> reached{Perm(degree)};
  for (auto const &element : elements) {
    if (std::binary_search(reached.begin(), reached.end(), element))
      continue;
    gens.push_back(element);
    reached = closure(degree, gens, elements.size());
  }

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->generators = std::move(gens);
  data->elements = std::move(elements);
  return Group(std::move(data));
}

std::size_t Group::degree() const noexcept
{ return _data->degree; }

std::size_t Group::order() const noexcept
{ return _data->elements.size(); }

std::vector<Perm> const &Group::generators() const noexcept
{ return _data->generators; }

std::span<Perm const> Group::elements() const noexcept
{ return _data->elements; }

bool Group::contains(Perm const &p) const
{
  return p.degree() == degree() &&
         std::binary_search(_data->elements.begin(), _data->elements.end(), p);
}

std::optional<std::size_t> Group::index_of(Perm const &p) const
{
  if (p.degree() != degree())
    return std::nullopt;
  auto it = std::lower_bound(_data->elements.begin(), _data->elements.end(), p);
  if (it == _data->elements.end() || *it != p)
    return std::nullopt;
  return static_cast<std::size_t>(it - _data->elements.begin());
}

bool Group::is_subgroup_of(Group const &other) const
{
  if (degree() != other.degree() || other.order() % order() != 0)
    return false;
  return std::includes(other._data->elements.begin(), other._data->elements.end(),
                       _data->elements.begin(), _data->elements.end());
}

bool operator==(Group const &lhs, Group const &rhs)
{
  return lhs._data == rhs._data ||
         (lhs.degree() == rhs.degree() && lhs._data->elements == rhs._data->elements);
}

Perm canonical_representative(Group const &subgroup, Perm const &g)
{
  auto elements = subgroup.elements();
  Perm best = elements[0] * g;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    Perm candidate = elements[i] * g;
    if (candidate < best)
      best = std::move(candidate);
  }
  return best;
}

RightCoset RightCoset::of(Group const &subgroup, Perm const &g)
{
  return RightCoset{subgroup, canonical_representative(subgroup, g)};
}

bool RightCoset::contains(Perm const &p) const
{
  // p in H r  <=>  p r^-1 in H
  return subgroup.contains(p * representative.inverse());
}

CosetTable::CosetTable(Group const &subgroup, Group const &group)
: _subgroup(subgroup),
  _group(group)
{
  if (!subgroup.is_subgroup_of(group))
    throw Error(ErrorCode::NotASubgroup,
                "subgroup of order " + std::to_string(subgroup.order()) +
                  " is not contained in group of order " +
                  std::to_string(group.order()));

  constexpr auto unassigned = static_cast<std::size_t>(-1);
  _coset_of.assign(group.order(), unassigned);

  // Scanning in ascending order makes the first unassigned element the least
  // member of its coset.
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (_coset_of[i] != unassigned)
      continue;
    std::size_t coset = _representatives.size();
    Perm const &g = group.element(i);
    _representatives.push_back(g);
    for (auto const &h : subgroup.elements())
      _coset_of[*group.index_of(h * g)] = coset;
  }
}

std::size_t CosetTable::coset_of(Perm const &g) const
{
  auto index = _group.index_of(g);
  if (!index)
    throw Error(ErrorCode::NotInGroup, g.to_string() + " is not in the group");
  return _coset_of[*index];
}

std::vector<RightCoset> right_cosets(Group const &subgroup, Group const &group)
{
  CosetTable table(subgroup, group);
  std::vector<RightCoset> result;
  result.reserve(table.coset_count());
  for (std::size_t c = 0; c < table.coset_count(); ++c)
    result.push_back(RightCoset{subgroup, table.representative(c)});
  return result;
}

Group conjugate(Group const &subgroup, Perm const &g)
{
  if (g.degree() != subgroup.degree())
    throw Error(ErrorCode::DegreeMismatch, "conjugating element has wrong degree");
  if (g.is_identity())
    return subgroup;

  std::vector<Perm> gens;
  for (auto const &gen : subgroup.generators())
    gens.push_back(gen.conjugated_by(g));

  return Group::generate(subgroup.degree(), std::move(gens), subgroup.order());
}

Group intersection(Group const &lhs, Group const &rhs)
{
  if (lhs.degree() != rhs.degree())
    throw Error(ErrorCode::DegreeMismatch, "cannot intersect groups of different degree");
  if (lhs == rhs)
    return lhs;
  if (lhs.is_subgroup_of(rhs))
    return lhs;
  if (rhs.is_subgroup_of(lhs))
    return rhs;

  std::vector<Perm> common;
  std::set_intersection(lhs.elements().begin(), lhs.elements().end(),
                        rhs.elements().begin(), rhs.elements().end(),
                        std::back_inserter(common));
  return Group::from_closed_set(lhs.degree(), std::move(common));
}

Group core(Group const &subgroup, Group const &group)
{
  if (!subgroup.is_subgroup_of(group))
    throw Error(ErrorCode::NotASubgroup, "core requires a subgroup");

  // Shrink C to C ∩ C^s over the generators s of the group until stable. The
  // fixpoint is normalised by every generator, hence normal, and each step
  // keeps the core.
  std::vector<Perm> current(subgroup.elements().begin(), subgroup.elements().end());
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &s : group.generators()) {
      Perm s_inv = s.inverse();
      std::vector<Perm> kept;
      kept.reserve(current.size());
      for (auto const &c : current) {
        // c in C^s  <=>  s c s^-1 in C
        if (std::binary_search(current.begin(), current.end(), s * c * s_inv))
          kept.push_back(c);
      }
      if (kept.size() != current.size()) {
        current = std::move(kept);
        changed = true;
      }
    }
  }

  if (current.size() == subgroup.order())
    return subgroup;
  return Group::from_closed_set(group.degree(), std::move(current));
}

bool is_normal(Group const &subgroup, Group const &group)
{
  if (!subgroup.is_subgroup_of(group))
    return false;
  for (auto const &s : group.generators()) {
    for (auto const &h : subgroup.generators()) {
      if (!subgroup.contains(h.conjugated_by(s)))
        return false;
    }
  }
  return true;
}

Group generated_by(Group const &group, std::vector<GroupPart> const &parts)
{
  std::vector<Perm> gens;
  for (auto const &part : parts) {
    if (auto const *p = std::get_if<Perm>(&part)) {
      if (!group.contains(*p))
        throw Error(ErrorCode::NotInAmbientGroup,
                    p->to_string() + " is not in the ambient group");
      if (!p->is_identity())
        gens.push_back(*p);
    } else {
      auto const &sub = std::get<Group>(part);
      if (!sub.is_subgroup_of(group))
        throw Error(ErrorCode::NotInAmbientGroup,
                    "subgroup is not contained in the ambient group");
      for (auto const &gen : sub.generators()) {
        if (!gen.is_identity())
          gens.push_back(gen);
      }
    }
  }

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Group::generate(group.degree(), std::move(gens), group.order());
}

} // namespace gencov
