#ifndef PERMKIT_COSET_HPP
#define PERMKIT_COSET_HPP

#include <optional>

#include "permkit/bsgs.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// A right coset H*rep = {h * rep : h in H}, with H held as a stabilizer
/// chain. Two cosets of the same subgroup are equal iff contains(H, s1*s2^-1).
class RightCoset {
public:
  RightCoset(StabilizerChain subgroup, Permutation rep);

  const StabilizerChain &subgroup() const { return subgroup_; }
  const Permutation &rep() const { return rep_; }
  int degree() const { return rep_.degree(); }

  /// |H*rep| = |H|.
  BigInt size() const { return subgroup_.order(); }

  bool member(const Permutation &x) const;
  bool same_coset(const RightCoset &other) const;

private:
  StabilizerChain subgroup_;
  Permutation rep_;
};

/// The subcoset of G*pi fixing `point`: {x in G*pi : x(point) = point},
/// which is G_point * (tau * pi) for tau in G with tau(pi(point)) = point.
/// Empty (nullopt) iff pi(point) and point lie in different G-orbits.
std::optional<RightCoset> subcoset_fixing(const StabilizerChain &g, const Permutation &pi,
                                          int point);

/// {x in H*rep : x(from) = to}, or nullopt if empty.
std::optional<RightCoset> subcoset_mapping(const RightCoset &coset, int from, int to);

/// H1*s1 intersect H2*s2: empty, or a right coset of H1 intersect H2.
/// Backtracking over the chain of H1 with membership pruning against the
/// other side; exact, intended for desk-scale degrees.
std::optional<RightCoset> coset_intersect(const RightCoset &a, const RightCoset &b);

} // namespace permkit

#endif
