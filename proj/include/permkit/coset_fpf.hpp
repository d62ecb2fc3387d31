#ifndef PERMKIT_COSET_FPF_HPP
#define PERMKIT_COSET_FPF_HPP

#include <optional>

#include "permkit/bsgs.hpp"
#include "permkit/coset.hpp"
#include "permkit/numeric.hpp"
#include "permkit/perm.hpp"

namespace permkit {

struct FpfOptions {
  /// Hard cap on the degree of the 2^n subset enumeration; exceeding it is a
  /// clean resource error.
  int degree_cap = 24;
  /// Cross-branch prune: remember minimal index sets with empty intersection
  /// and skip their supersets. Toggleable only to test that it never changes
  /// any count.
  bool superset_prune = true;
};

/// |{x in G*pi : fix(x) > 0}| by inclusion-exclusion over the subcosets
/// (G*pi)_i that fix a point, with empty-superset pruning.
BigInt count_non_fpf(const StabilizerChain &g, const Permutation &pi,
                     const FpfOptions &opt = {});

/// True iff the union of the (G*pi)_i is a proper subset of G*pi.
bool has_fpf(const StabilizerChain &g, const Permutation &pi, const FpfOptions &opt = {});

/// A fixed-point-free element of G*pi if one exists. Descends by fixing the
/// images of points 1, 2, ... in turn, entering the first subcoset that still
/// contains a derangement.
std::optional<Permutation> find_fpf(const StabilizerChain &g, const Permutation &pi,
                                    const FpfOptions &opt = {});

} // namespace permkit

#endif
