#include "permkit/coset_fpf.hpp"

#include <cstdint>
#include <vector>

#include "permkit/errors.hpp"

namespace permkit {

namespace {

void check_degrees(const StabilizerChain &g, const Permutation &pi, const FpfOptions &opt) {
  if (pi.degree() != g.degree())
    throw DomainError("degree mismatch between group and permutation");
  if (g.degree() > opt.degree_cap)
    throw ResourceError("degree " + std::to_string(g.degree()) +
                        " exceeds inclusion-exclusion cap " +
                        std::to_string(opt.degree_cap));
}

struct InclusionExclusion {
  int n;
  bool use_registry;
  std::vector<std::uint32_t> empty_masks; // minimal index sets with empty intersection
  BigInt non_fpf = 0;

  bool superset_of_empty(std::uint32_t mask) const {
    if (!use_registry) return false;
    for (std::uint32_t m : empty_masks)
      if ((mask & m) == m) return true;
    return false;
  }

  void record_empty(std::uint32_t mask) {
    if (use_registry) empty_masks.push_back(mask);
  }

  // Subset tree: children extend I by indices larger than max(I). The parent
  // coset is cached on the recursion stack.
  void descend(std::uint32_t mask, int depth, int max_index, const RightCoset &coset) {
    if (coset.rep()(max_index) != max_index)
      throw InternalError("inclusion-exclusion coset does not fix its index set");
    const BigInt term = coset.size();
    if (depth % 2 == 1)
      non_fpf += term;
    else
      non_fpf -= term;
    for (int j = max_index + 1; j <= n; ++j) {
      const std::uint32_t child = mask | (1u << (j - 1));
      if (superset_of_empty(child)) continue;
      auto ext = subcoset_mapping(coset, j, j);
      if (!ext) {
        record_empty(child);
        continue;
      }
      descend(child, depth + 1, j, *ext);
    }
  }
};

BigInt count_non_fpf_coset(const StabilizerChain &g, const Permutation &pi,
                           const FpfOptions &opt) {
  const int n = g.degree();
  InclusionExclusion ie{n, opt.superset_prune, {}, 0};
  for (int i = 1; i <= n; ++i) {
    auto sub = subcoset_fixing(g, pi, i);
    if (!sub) {
      ie.record_empty(1u << (i - 1));
      continue;
    }
    ie.descend(1u << (i - 1), 1, i, *sub);
  }
  if (ie.non_fpf < 0 || ie.non_fpf > g.order())
    throw InternalError("inclusion-exclusion produced an out-of-range count");
  return ie.non_fpf;
}

} // namespace

BigInt count_non_fpf(const StabilizerChain &g, const Permutation &pi,
                     const FpfOptions &opt) {
  check_degrees(g, pi, opt);
  return count_non_fpf_coset(g, pi, opt);
}

bool has_fpf(const StabilizerChain &g, const Permutation &pi, const FpfOptions &opt) {
  check_degrees(g, pi, opt);
  return count_non_fpf_coset(g, pi, opt) < g.order();
}

std::optional<Permutation> find_fpf(const StabilizerChain &g, const Permutation &pi,
                                    const FpfOptions &opt) {
  check_degrees(g, pi, opt);
  const int n = g.degree();
  if (!has_fpf(g, pi, opt)) return std::nullopt;

  auto coset_has_fpf = [&opt](const RightCoset &c) {
    return count_non_fpf_coset(c.subgroup(), c.rep(), opt) < c.size();
  };

  RightCoset cur(g, pi);
  for (int a = 1; a <= n; ++a) {
    if (cur.subgroup().is_trivial()) break;
    bool advanced = false;
    for (int j = 1; j <= n && !advanced; ++j) {
      if (j == a) continue; // a derangement cannot fix a
      auto sub = subcoset_mapping(cur, a, j);
      if (!sub) continue;
      if (coset_has_fpf(*sub)) {
        cur = *sub;
        advanced = true;
      }
    }
    if (!advanced)
      throw InternalError("fpf descent dead-ended although a derangement exists");
  }
  Permutation result = cur.rep();
  if (fix_count(result) != 0 || !g.contains(compose(result, pi.inverse())))
    throw InternalError("fpf descent produced an invalid witness");
  return result;
}

} // namespace permkit
