#include "permkit/kmove.hpp"

#include <algorithm>

#include "permkit/errors.hpp"
#include "permkit/move_opt.hpp"

namespace permkit {

std::vector<int> support(const GroupInput &g) {
  std::vector<char> moved(static_cast<size_t>(g.degree) + 1, 0);
  for (const auto &gen : g.generators)
    for (int i = 1; i <= g.degree; ++i)
      if (gen(i) != i) moved[static_cast<size_t>(i)] = 1;
  std::vector<int> out;
  for (int i = 1; i <= g.degree; ++i)
    if (moved[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

namespace {

// Restricts p to the listed points (which p must permute among themselves),
// relabeled so points[j] becomes j+1.
Permutation restrict_to(const Permutation &p, const std::vector<int> &points,
                        const std::vector<int> &new_label) {
  std::vector<int> images(points.size());
  for (size_t j = 0; j < points.size(); ++j) {
    const int img = p(points[j]);
    const int lbl = new_label[static_cast<size_t>(img)];
    if (lbl == 0) throw InternalError("restriction point set is not invariant");
    images[j] = lbl;
  }
  return Permutation::from_images(std::move(images));
}

std::vector<int> labels_for(int degree, const std::vector<int> &points) {
  std::vector<int> lbl(static_cast<size_t>(degree) + 1, 0);
  for (size_t j = 0; j < points.size(); ++j)
    lbl[static_cast<size_t>(points[j])] = static_cast<int>(j) + 1;
  return lbl;
}

// Embeds a permutation of the listed points back into degree n, identity
// elsewhere.
Permutation lift_from(const Permutation &p, const std::vector<int> &points, int degree) {
  Permutation id(degree);
  std::vector<int> images = id.images();
  for (size_t j = 0; j < points.size(); ++j)
    images[static_cast<size_t>(points[j]) - 1] = points[static_cast<size_t>(p(static_cast<int>(j) + 1)) - 1];
  return Permutation::from_images(std::move(images));
}

} // namespace

KernelResult kernelize(const KMoveInstance &inst) {
  if (inst.k < 1) throw DomainError("k must be >= 1");
  const auto supp = support(inst.group);

  if (static_cast<int>(supp.size()) >= 2 * inst.k) {
    // E[move] >= move(G)/2 >= k, so the derandomized maximum already wins
    StabilizerChain chain = build_chain(inst.group);
    Permutation w = max_move_element(chain, Permutation(inst.group.degree));
    if (move_count(w) < inst.k)
      throw InternalError("kernelization witness moves fewer than k points");
    KernelResult out;
    out.witness = std::move(w);
    return out;
  }

  KernelResult out;
  out.kernel_degree = static_cast<int>(supp.size());
  out.support_points = supp;
  if (supp.empty()) return out; // trivial group, degree-0 kernel

  const auto lbl = labels_for(inst.group.degree, supp);
  std::vector<Permutation> restricted;
  for (const auto &gen : normalize_generators(inst.group.generators))
    restricted.push_back(restrict_to(gen, supp, lbl));

  // Reduced generating set: the non-identity transversal elements of the
  // restricted chain. Sifting factorizes every element through them, and
  // their count is at most sum(orbit-1) <= m(m-1)/2 < k(2k-1) for m < 2k.
  StabilizerChain rchain = build_chain(GroupInput{out.kernel_degree, restricted});
  for (const auto &lvl : rchain.levels())
    for (const auto &u : lvl.transversal) {
      if (u.is_identity()) continue;
      if (std::find(out.kernel_generators.begin(), out.kernel_generators.end(), u) ==
          out.kernel_generators.end())
        out.kernel_generators.push_back(u);
    }
  if (static_cast<int>(out.kernel_generators.size()) > inst.k * (2 * inst.k - 1))
    throw InternalError("kernel generating set exceeds the k(2k-1) bound");
  if (out.kernel_degree >= 2 * inst.k)
    throw InternalError("kernel degree reaches 2k");
  return out;
}

std::optional<Permutation> solve_kmove(const KMoveInstance &inst, const FpfOptions &opt) {
  KernelResult kr = kernelize(inst);
  if (kr.is_witness()) return kr.witness;

  const int m = kr.kernel_degree;
  if (m < inst.k) return std::nullopt; // cannot move k points within the support

  const GroupInput kernel_group{m, kr.kernel_generators};
  StabilizerChain kchain = build_chain(kernel_group);

  // Subsets delta of the kernel domain with |domain \ delta| >= k, by
  // increasing size and lexicographically within a size: a derangement of
  // G_delta on the complement moves exactly |complement| >= k points.
  std::vector<int> delta;
  std::optional<Permutation> found;

  auto try_delta = [&](const std::vector<int> &d) -> bool {
    StabilizerChain stab = pointwise_stabilizer(kchain, d);
    std::vector<int> rest;
    for (int p = 1; p <= m; ++p)
      if (std::find(d.begin(), d.end(), p) == d.end()) rest.push_back(p);
    const auto lbl = labels_for(m, rest);
    std::vector<Permutation> rgens;
    for (const auto &gen : stab.group_generators())
      rgens.push_back(restrict_to(gen, rest, lbl));
    StabilizerChain rchain = build_chain(GroupInput{static_cast<int>(rest.size()), rgens});
    auto d_fpf = find_fpf(rchain, Permutation(static_cast<int>(rest.size())), opt);
    if (!d_fpf) return false;
    Permutation on_kernel = lift_from(*d_fpf, rest, m);
    if (!kchain.contains(on_kernel) || move_count(on_kernel) < inst.k)
      throw InternalError("k-move witness fails verification on the kernel");
    found = lift_from(on_kernel, kr.support_points, inst.group.degree);
    return true;
  };

  for (int size = 0; size <= m - inst.k; ++size) {
    // lexicographic subsets of {1..m} of the given size
    delta.assign(static_cast<size_t>(size), 0);
    for (int j = 0; j < size; ++j) delta[static_cast<size_t>(j)] = j + 1;
    while (true) {
      if (try_delta(delta)) return found;
      // next combination
      int j = size - 1;
      while (j >= 0 && delta[static_cast<size_t>(j)] == m - (size - 1 - j)) --j;
      if (j < 0) break;
      ++delta[static_cast<size_t>(j)];
      for (int t = j + 1; t < size; ++t)
        delta[static_cast<size_t>(t)] = delta[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return std::nullopt;
}

} // namespace permkit
