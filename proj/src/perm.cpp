#include "fdeg/perm.hpp"

#include <cctype>
#include <numeric>

#include "fdeg/error.hpp"

namespace fdeg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw InputError("image table is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in product");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw InputError("degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  };

  skip_space();
  if (pos == text.size()) throw InputError("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError("expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos == text.size()) throw InputError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw InputError(std::string("unexpected character '") + text[pos] + "'");
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) throw InputError("point out of range");
        ++pos;
      }
      if (value < 1 || value > degree) throw InputError("point out of range");
      Point x = static_cast<Point>(value - 1);
      if (used[x]) throw InputError("repeated point " + std::to_string(value));
      used[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation inverse(const Permutation& a) { return a.inverse(); }

std::uint64_t element_order(const Permutation& a) {
  std::uint64_t order = 1;
  std::vector<bool> done(a.degree(), false);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (done[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !done[x]; x = a[x]) {
      done[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation power(const Permutation& a, std::uint64_t k) {
  Permutation result = Permutation::identity(a.degree());
  Permutation base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& x, const Permutation& g) { return g.inverse() * x * g; }

bool commute(const Permutation& a, const Permutation& b) {
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (b[a[static_cast<Point>(i)]] != a[b[static_cast<Point>(i)]]) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace fdeg
