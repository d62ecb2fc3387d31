#ifndef PERMKIT_TESTS_NAIVE_HPP
#define PERMKIT_TESTS_NAIVE_HPP

// Brute-force ground truth that never touches stabilizer chains: closure by
// repeated multiplication. Deliberately slow and independent of the library's
// algorithmic paths.

#include <algorithm>
#include <set>
#include <vector>

#include "permkit/perm.hpp"

namespace permkit::testing {

/// All elements of <gens> by BFS closure, sorted (identity first).
inline std::vector<Permutation> naive_elements(int degree,
                                               const std::vector<Permutation> &gens,
                                               size_t cap = 2000000) {
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.insert(queue.front());
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto &g : gens) {
      Permutation next = compose(queue[head], g);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw std::runtime_error("naive closure cap exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// {h * rep : h in elements}, sorted.
inline std::vector<Permutation> naive_coset(const std::vector<Permutation> &elements,
                                            const Permutation &rep) {
  std::vector<Permutation> out;
  out.reserve(elements.size());
  for (const auto &h : elements) out.push_back(compose(h, rep));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool naive_member(const std::vector<Permutation> &sorted_elements,
                         const Permutation &x) {
  return std::binary_search(sorted_elements.begin(), sorted_elements.end(), x);
}

/// Number of orbits of <gens> on {1..degree}, by union-find-free BFS.
inline int naive_orbit_count(int degree, const std::vector<Permutation> &gens) {
  std::vector<char> visited(static_cast<size_t>(degree) + 1, 0);
  int count = 0;
  for (int start = 1; start <= degree; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    ++count;
    std::vector<int> stack{start};
    visited[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      for (const auto &g : gens) {
        const int q = g(p);
        if (!visited[static_cast<size_t>(q)]) {
          visited[static_cast<size_t>(q)] = 1;
          stack.push_back(q);
        }
      }
    }
  }
  return count;
}

} // namespace permkit::testing

#endif
