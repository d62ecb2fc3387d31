#ifndef PERMKIT_ORACLE_HPP
#define PERMKIT_ORACLE_HPP

#include <optional>
#include <vector>

#include "permkit/bsgs.hpp"
#include "permkit/numeric.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// Every element of a group, identity first, the rest sorted lexicographically
/// by image array. Ground truth for the exhaustive statistics below.
struct GroupTable {
  int degree = 1;
  std::vector<Permutation> elements;
};

/// Expands the chain into all products of one transversal element per level.
/// Refuses (before allocating) if the order exceeds the cap.
GroupTable enumerate_group(const StabilizerChain &c, const BigInt &cap = BigInt(1000000));

struct CosetStats {
  BigInt fpf_count = 0; // elements x = g*pi with fix(x) = 0
  BigInt sum_move = 0;  // sum of move(x)
  int max_move = 0;
  std::optional<int> min_base_size; // only for pi = identity; exponential by design
};

/// Exhaustive statistics over the coset {g*pi : g in table}.
CosetStats stats(const GroupTable &t, const Permutation &pi);

} // namespace permkit

#endif
