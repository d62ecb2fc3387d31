#include "permkit/move_opt.hpp"

#include <vector>

#include "permkit/errors.hpp"

namespace permkit {

Rational expected_move(const StabilizerChain &g, const Permutation &pi) {
  const int n = g.degree();
  if (pi.degree() != n)
    throw DomainError("degree mismatch between group and permutation");

  const auto orbs = orbits(n, g.group_generators());
  std::vector<int> orbit_id(static_cast<size_t>(n) + 1, -1);
  std::vector<size_t> orbit_size(static_cast<size_t>(n) + 1, 0);
  for (size_t b = 0; b < orbs.size(); ++b)
    for (int p : orbs[b]) {
      orbit_id[static_cast<size_t>(p)] = static_cast<int>(b);
      orbit_size[static_cast<size_t>(p)] = orbs[b].size();
    }

  const BigInt order = g.order();
  BigInt total = 0;
  for (int i = 1; i <= n; ++i) {
    if (orbit_id[static_cast<size_t>(pi(i))] != orbit_id[static_cast<size_t>(i)])
      total += order; // no g maps pi(i) to i
    else
      total += order - order / BigInt(orbit_size[static_cast<size_t>(i)]); // |G| - |G_i|
  }
  return Rational(total, order);
}

Permutation max_move_element(const StabilizerChain &g, const Permutation &pi) {
  const int n = g.degree();
  if (pi.degree() != n)
    throw DomainError("degree mismatch between group and permutation");

  StabilizerChain sub = g; // pointwise stabilizer of {1..a-1} within G
  Permutation sigma = pi;  // current subcoset is sub * sigma
  Rational current = expected_move(sub, sigma);

  for (int a = 1; a < n; ++a) {
    if (sub.is_trivial()) break;
    const auto reps = coset_reps(sub, a);
    if (reps.size() == 1) continue; // a is fixed by sub; subcoset unchanged
    StabilizerChain stab = point_stabilizer(sub, a);

    // reps are sorted by image of a, so the first strict maximum realizes the
    // smallest-image tie-break
    bool have_best = false;
    Rational best_mu;
    Permutation best_sigma = sigma;
    for (const auto &rep : reps) {
      Permutation cand = compose(rep, sigma);
      Rational mu = expected_move(stab, cand);
      if (!have_best || mu > best_mu) {
        have_best = true;
        best_mu = mu;
        best_sigma = std::move(cand);
      }
    }
    if (best_mu < current)
      throw InternalError("conditional expectation descent decreased the average");
    current = best_mu;
    sigma = std::move(best_sigma);
    sub = std::move(stab);
  }

  if (Rational(move_count(sigma)) < expected_move(g, pi) ||
      !g.contains(compose(sigma, pi.inverse())))
    throw InternalError("derandomized element fails its move contract");
  return sigma;
}

Permutation fpf_transitive(const StabilizerChain &g) {
  const int n = g.degree();
  if (n < 2)
    throw DomainError("no fixed point free element exists on a single point");
  if (orbits(n, g.group_generators()).size() != 1)
    throw DomainError("group not transitive");
  Permutation result = max_move_element(g, Permutation(n));
  if (fix_count(result) != 0)
    throw InternalError("descent on a transitive group missed a derangement");
  return result;
}

} // namespace permkit
