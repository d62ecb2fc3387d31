#include "permkit/oracle.hpp"

#include <algorithm>

#include "permkit/errors.hpp"

namespace permkit {

GroupTable enumerate_group(const StabilizerChain &c, const BigInt &cap) {
  const BigInt order = c.order();
  if (order > cap)
    throw ResourceError("group order " + order.str() + " exceeds enumeration cap " +
                        cap.str());
  GroupTable t;
  t.degree = c.degree();
  std::vector<Permutation> cur{Permutation(c.degree())};
  for (const auto &lvl : c.levels()) {
    std::vector<Permutation> next;
    next.reserve(cur.size() * lvl.transversal.size());
    for (const auto &e : cur)
      for (const auto &u : lvl.transversal) next.push_back(compose(e, u));
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  if (BigInt(cur.size()) != order ||
      std::adjacent_find(cur.begin(), cur.end()) != cur.end())
    throw InternalError("group enumeration does not match the chain order");
  t.elements = std::move(cur);
  return t;
}

namespace {

int exhaustive_min_base(const GroupTable &t) {
  const int n = t.degree;
  std::vector<std::vector<int>> supports;
  for (const auto &g : t.elements)
    if (!g.is_identity()) supports.push_back(moved_points(g));

  std::vector<char> in_b(static_cast<size_t>(n) + 1, 0);
  auto is_base_subset = [&](const std::vector<int> &b) {
    std::fill(in_b.begin(), in_b.end(), 0);
    for (int p : b) in_b[static_cast<size_t>(p)] = 1;
    for (const auto &supp : supports) {
      bool hit = false;
      for (int p : supp)
        if (in_b[static_cast<size_t>(p)]) {
          hit = true;
          break;
        }
      if (!hit) return false; // this element survives fixing b pointwise
    }
    return true;
  };

  for (int size = 0; size <= n; ++size) {
    std::vector<int> b(static_cast<size_t>(size));
    for (int j = 0; j < size; ++j) b[static_cast<size_t>(j)] = j + 1;
    while (true) {
      if (is_base_subset(b)) return size;
      int j = size - 1;
      while (j >= 0 && b[static_cast<size_t>(j)] == n - (size - 1 - j)) --j;
      if (j < 0) break;
      ++b[static_cast<size_t>(j)];
      for (int tt = j + 1; tt < size; ++tt)
        b[static_cast<size_t>(tt)] = b[static_cast<size_t>(tt - 1)] + 1;
    }
  }
  return n; // the full domain is always a base
}

} // namespace

CosetStats stats(const GroupTable &t, const Permutation &pi) {
  if (pi.degree() != t.degree)
    throw DomainError("degree mismatch between table and permutation");
  CosetStats s;
  for (const auto &g : t.elements) {
    const Permutation x = compose(g, pi);
    const int mv = move_count(x);
    if (mv == t.degree) s.fpf_count += 1;
    s.sum_move += mv;
    s.max_move = std::max(s.max_move, mv);
  }
  if (pi.is_identity()) s.min_base_size = exhaustive_min_base(t);
  return s;
}

} // namespace permkit
