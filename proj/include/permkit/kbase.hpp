#ifndef PERMKIT_KBASE_HPP
#define PERMKIT_KBASE_HPP

#include <optional>
#include <vector>

#include "permkit/bsgs.hpp"
#include "permkit/numeric.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// One cyclic factor of prime-power order: generator has order prime^exponent.
struct CyclicFactor {
  Permutation generator;
  long long prime = 0;
  int exponent = 0;
};

/// Direct-product decomposition of a cyclic group into factors of coprime
/// prime-power order, sorted by prime. The product of the factor generators
/// has order |G|, certifying cyclicity.
struct CyclicDecomposition {
  std::vector<CyclicFactor> factors;
};

/// A family of point sets to hit with at most `budget` points.
struct HittingInstance {
  int universe_size = 1;
  std::vector<std::vector<int>> sets; // each nonempty, points ascending
  int budget = 1;
};

/// True iff the pointwise stabilizer of the points is trivial.
bool is_base(const StabilizerChain &c, const std::vector<int> &points);

/// Lexicographically-smallest base of size <= k (sizes tried in order 0..k),
/// by exhausting candidate subsets. The trivial baseline and the oracle for
/// the FPT solvers.
std::optional<std::vector<int>> brute_force_kbase(const StabilizerChain &c, int k);

/// Decomposes a cyclic group: for each prime power p^e dividing |G| exactly,
/// the factor generator is the maximal-order element among s^(|G|/p^e) over
/// the input generators. Cyclicity is certified, not assumed.
CyclicDecomposition cyclic_decompose(const GroupInput &g);

/// For each factor, the points lying on cycles of its generator of length
/// exactly p^e. Any base must hit every one of these sets, and conversely.
std::vector<std::vector<int>> critical_sets(const CyclicDecomposition &d, int degree);

/// A hitting set of size <= budget, or nullopt. Backtracks over assignments
/// of sets to at most `budget` groups with running intersections; one point
/// (the smallest) is picked per group.
std::optional<std::vector<int>> hitting_set_k(const HittingInstance &inst);

/// FPT k-BASE for cyclic groups: reject if |G| > n^k, else decompose and hit
/// the critical sets.
std::optional<std::vector<int>> cyclic_kbase(const GroupInput &g, int k);

/// FPT k-BASE for groups with orbits of size <= orbit_bound: reject if
/// |G| > b^k, else enumerate the group and hit the element supports.
std::optional<std::vector<int>> bounded_orbit_kbase(const GroupInput &g, int k,
                                                    int orbit_bound);

} // namespace permkit

#endif
