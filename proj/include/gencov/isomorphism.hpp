#ifndef GENCOV_ISOMORPHISM_HPP
#define GENCOV_ISOMORPHISM_HPP

#include <cstddef>
#include <optional>

#include "gencov/graph.hpp"

namespace gencov
{

inline constexpr std::size_t default_isomorphism_dart_cap = 20000;

/// Searches for an isomorphism `g1 -> g2`.
///
/// Vertices are matched by individualisation and colour refinement over the
/// multigraph (semi-edge, loop and link multiplicities); the dart map is then
/// read off by pairing darts between matched endpoints. Exhaustive, so the
/// answer is exact. Throws `TooLarge` beyond `dart_cap` darts.
std::optional<GraphMorphism> find_isomorphism(Graph const &g1, Graph const &g2,
                                              std::size_t dart_cap = default_isomorphism_dart_cap);

} // namespace gencov

#endif // GENCOV_ISOMORPHISM_HPP
