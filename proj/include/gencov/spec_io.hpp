#ifndef GENCOV_SPEC_IO_HPP
#define GENCOV_SPEC_IO_HPP

#include <string>
#include <string_view>

#include "gencov/cover.hpp"
#include "gencov/graph.hpp"
#include "gencov/group.hpp"
#include "gencov/voltage.hpp"

namespace gencov
{

/// Reads a voltage graph spec:
///
///   {
///     "schema": 1,
///     "group": {"degree": 6, "generators": ["(1 2 3)(4 5 6)", "(2 3)(4 5)"]},
///     "base": "vertices 2\ndart 0 beg 0 inv 1\ndart 1 beg 1 inv 0\n",
///     "weights": {"vertices": [["(2 3)(4 5)"], [...]], "darts": [[], []]},
///     "voltages": ["()", "()"]
///   }
///
/// Weights are lists of generators and permutations use 1-based cycle
/// notation. Malformed input throws `ParseError` with the JSON path of the
/// offending value; well-formed but invalid data throws the validation error.
GenVoltageGraph parse_spec(std::string_view text);

/// Canonical form: weights are written as their stored generators, so
/// `format_spec(parse_spec(format_spec(g))) == format_spec(g)`.
std::string format_spec(GenVoltageGraph const &gvg);

/// Reads generators of a group acting on V ∪ D, one per line, as cycles of
/// `v<id>` and `d<id>` points with 0-based ids, e.g. `(v0 v1)(d0 d2)(d1 d3)`.
/// Blank lines and `#` comments are skipped. The group has degree |V| + |D|
/// with vertex v at point v and dart x at point |V| + x.
Group parse_action(std::string_view text, Graph const &graph);

std::string format_action(Group const &group, Graph const &graph);

/// One line per cover vertex and dart: `vertex <id> over <v> coset <g>`.
std::string format_fibre_table(Cover const &cover);

/// DOT export of the cover with vertices labelled by their base vertex and
/// coset representative.
std::string cover_to_dot(Cover const &cover);

} // namespace gencov

#endif // GENCOV_SPEC_IO_HPP
