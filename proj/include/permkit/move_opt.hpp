#ifndef PERMKIT_MOVE_OPT_HPP
#define PERMKIT_MOVE_OPT_HPP

#include "permkit/bsgs.hpp"
#include "permkit/numeric.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// Average number of moved points over the coset G*pi, exactly:
/// sum_i N_i / |G| where N_i = |G| if pi(i) and i lie in different G-orbits
/// and |G| - |G_i| otherwise. Never enumerates G.
Rational expected_move(const StabilizerChain &g, const Permutation &pi);

/// An element t of G*pi with move(t) >= expected_move(g, pi), found by the
/// method of conditional expectations: fix points 1..n-1 in sequence, each
/// step entering a subcoset whose average is maximal (ties: smallest image
/// of the current point among the representatives).
Permutation max_move_element(const StabilizerChain &g, const Permutation &pi);

/// A fixed-point-free element of a transitive group with degree >= 2;
/// max_move_element at pi = identity is already guaranteed to produce one.
Permutation fpf_transitive(const StabilizerChain &g);

} // namespace permkit

#endif
