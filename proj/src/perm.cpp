#include "gencov/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "gencov/error.hpp"

namespace gencov
{

Perm::Perm(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Perm::Perm(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point image : _images) {
    if (image >= _images.size() || seen[image])
      throw Error(ErrorCode::ParseError, "image sequence is not a bijection");
    seen[image] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});

  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree)
        throw Error(ErrorCode::ParseError,
                    "point " + std::to_string(from + 1) + " exceeds degree " +
                      std::to_string(degree));
      if (used[from])
        throw Error(ErrorCode::ParseError,
                    "point " + std::to_string(from + 1) +
                      " occurs twice in cycle notation");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

Perm Perm::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;

  auto fail = [&](std::string const &msg) {
    throw Error(ErrorCode::ParseError,
                "in \"" + std::string(text) + "\" at offset " +
                  std::to_string(pos) + ": " + msg);
  };

  auto skip_blank = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_blank();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;

    std::vector<Point> cycle;
    for (;;) {
      while (pos < text.size() &&
             (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
        ++pos;
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a point number");

      unsigned long long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        if (value > degree)
          fail("point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (value == 0)
        fail("points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_blank();
  }

  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const noexcept
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Perm Perm::operator*(Perm const &rhs) const
{
  Perm result(*this);
  result *= rhs;
  return result;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  if (rhs.degree() != degree())
    throw Error(ErrorCode::DegreeMismatch,
                "cannot multiply permutations of degree " +
                  std::to_string(degree()) + " and " +
                  std::to_string(rhs.degree()));
  if (&rhs == this) {
    Perm copy(rhs);
    return *this *= copy;
  }
  for (auto &image : _images)
    image = rhs._images[image];
  return *this;
}

Perm Perm::inverse() const
{
  std::vector<Point> images(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    images[_images[i]] = static_cast<Point>(i);
  Perm result;
  result._images = std::move(images);
  return result;
}

Perm Perm::conjugated_by(Perm const &h) const
{
  return h.inverse() * *this * h;
}

Perm Perm::pow(long long exponent) const
{
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Perm result(degree());
  while (e) {
    if (e & 1u)
      result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::size_t Perm::order() const
{
  std::size_t result = 1;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t length = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Perm::to_string() const
{
  std::ostringstream out;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    out << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out << ' ';
      out << j + 1;
      first = false;
      j = _images[j];
    }
    out << ')';
  }
  std::string result = out.str();
  return result.empty() ? "()" : result;
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  // FNV-1a over the image sequence
  std::size_t h = 1469598103934665603ull;
  for (Point image : p.images()) {
    h ^= image;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace gencov
