#ifndef GENCOV_PERM_HPP
#define GENCOV_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gencov
{

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1} acting on the right.
///
/// Products compose left to right, `i^(p*q) == (i^p)^q`, and the conjugate
/// `p.conjugated_by(h)` is `h^-1 * p * h`. Ordering is lexicographic on the
/// image sequence, which is what canonical coset representatives rely on.
class Perm
{
public:
  Perm() = default;

  /// The identity on `degree` points.
  explicit Perm(std::size_t degree);

  /// Throws `Error(ParseError)` unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from 0-based disjoint cycles.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<Point>> const &cycles);

  /// Parses 1-based disjoint-cycle notation such as "(1 2 3)(5 4 6)".
  /// Commas are accepted as separators; "()" and "" denote the identity.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept
  { return _images.size(); }

  Point operator[](Point i) const
  { return _images[i]; }

  std::span<Point const> images() const noexcept
  { return _images; }

  bool is_identity() const noexcept;

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);

  Perm inverse() const;

  /// `h^-1 * this * h`.
  Perm conjugated_by(Perm const &h) const;

  Perm pow(long long exponent) const;

  std::size_t order() const;

  /// 1-based disjoint-cycle notation; every cycle starts at its least point.
  std::string to_string() const;

  friend bool operator==(Perm const &, Perm const &) = default;
  friend std::strong_ordering operator<=>(Perm const &, Perm const &) = default;

private:
  std::vector<Point> _images;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const noexcept;
};

} // namespace gencov

#endif // GENCOV_PERM_HPP
