#ifndef PERMKIT_PERM_HPP
#define PERMKIT_PERM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permkit/numeric.hpp"

namespace permkit {

/// A permutation of {1..n}, stored as an image array. Immutable after
/// construction; all points are 1-based in the public API.
///
/// Products use a single convention throughout the library:
/// compose(p, q)(i) = p(q(i)) — the right factor is applied first.
class Permutation {
public:
  /// Identity permutation of the given degree (degree >= 1).
  explicit Permutation(int degree);

  /// Builds from a 1-based image array: images[i-1] = g(i).
  /// Rejects anything that is not a bijection on {1..degree}.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a point, 1-based.
  int operator()(int point) const { return images_[static_cast<size_t>(point) - 1]; }

  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// g^e via cycle rotation; e may be negative or huge.
  Permutation power(const BigInt &e) const;

  /// Order of the element = lcm of its cycle lengths.
  BigInt order() const;

  /// Disjoint cycles of length >= 2, each starting at its minimum element,
  /// sorted by minimum element. Fixed points are implicit.
  std::vector<std::vector<int>> cycles() const;

  static Permutation from_cycles(int degree, const std::vector<std::vector<int>> &cycles);

  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation &a, const Permutation &b) { return !(a == b); }
  /// Lexicographic order on image arrays (identity is smallest).
  friend bool operator<(const Permutation &a, const Permutation &b);
  friend Permutation compose(const Permutation &p, const Permutation &q);

private:
  explicit Permutation(std::vector<int> images, bool) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// compose(p, q)(i) = p(q(i)); degrees must match.
Permutation compose(const Permutation &p, const Permutation &q);

inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

/// |{i : g(i) = i}|
int fix_count(const Permutation &g);

/// degree - fix_count
int move_count(const Permutation &g);

/// Points moved by g, ascending.
std::vector<int> moved_points(const Permutation &g);

/// Parses whitespace-tolerant cycle notation, e.g. "(1 2 3)(4 5)".
/// "()" and the empty string denote the identity. Commas work as separators.
/// Errors name the offending token.
Permutation parse_cycles(std::string_view text, int degree);

/// Minimal-first, sorted, space-separated cycles; "()" for the identity.
std::string format_cycles(const Permutation &g);

struct PermHash {
  size_t operator()(const Permutation &g) const;
};

} // namespace permkit

#endif
