#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdeg {

using Point = std::uint32_t;

/// An element of Sym(n) stored as an image table over the points 0..n-1.
///
/// Products are read left to right: `a * b` applies `a` first, then `b`,
/// so that `(x^a)^b == x^(a*b)`.  Text I/O uses 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;

  /// Takes ownership of an image table; throws InputError if it is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Smallest moved point, or degree() if the permutation is the identity.
  Point first_moved() const;

  /// 1-based disjoint cycle notation; "()" for the identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)" or "()".
/// Commas between points are accepted.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// a then b.  Throws InputError on a degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

/// Least k >= 1 with a^k = 1 (the lcm of the cycle lengths).
std::uint64_t element_order(const Permutation& a);

/// a^k for k >= 0.
Permutation power(const Permutation& a, std::uint64_t k);

/// g^-1 * x * g, the image of x under conjugation by g.
Permutation conjugate(const Permutation& x, const Permutation& g);

bool commute(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fdeg
