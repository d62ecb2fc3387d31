#ifndef PERMKIT_KMOVE_HPP
#define PERMKIT_KMOVE_HPP

#include <optional>
#include <vector>

#include "permkit/bsgs.hpp"
#include "permkit/coset_fpf.hpp"
#include "permkit/perm.hpp"

namespace permkit {

struct KMoveInstance {
  GroupInput group;
  int k = 1;
};

/// Outcome of kernelization: either an immediate witness (move(G) >= 2k), or
/// the group restricted and relabeled to its support, with a Schreier-Sims
/// reduced generating set. The kernel may have degree 0 (trivial group).
struct KernelResult {
  std::optional<Permutation> witness; // on the original n points, move >= k

  int kernel_degree = 0;
  std::vector<Permutation> kernel_generators; // degree kernel_degree, <= k(2k-1) many
  std::vector<int> support_points;            // ascending; support_points[j] maps to j+1

  bool is_witness() const { return witness.has_value(); }
};

/// Points moved by some generator (= moved by some element), ascending.
std::vector<int> support(const GroupInput &g);

KernelResult kernelize(const KMoveInstance &inst);

/// A witness g in G with move(g) >= k on the original points, iff one exists.
std::optional<Permutation> solve_kmove(const KMoveInstance &inst,
                                       const FpfOptions &opt = {});

} // namespace permkit

#endif
