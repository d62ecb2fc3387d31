#include "permkit/coset.hpp"

#include <algorithm>

#include "permkit/errors.hpp"

namespace permkit {

RightCoset::RightCoset(StabilizerChain subgroup, Permutation rep)
    : subgroup_(std::move(subgroup)), rep_(std::move(rep)) {
  if (subgroup_.degree() != rep_.degree())
    throw DomainError("coset subgroup and representative degrees differ");
}

bool RightCoset::member(const Permutation &x) const {
  if (x.degree() != degree()) return false;
  return subgroup_.contains(compose(x, rep_.inverse()));
}

bool RightCoset::same_coset(const RightCoset &other) const {
  return degree() == other.degree() && size() == other.size() &&
         member(other.rep()) && other.member(rep());
}

std::optional<RightCoset> subcoset_fixing(const StabilizerChain &g, const Permutation &pi,
                                          int point) {
  if (pi.degree() != g.degree())
    throw DomainError("degree mismatch between group and permutation");
  if (point < 1 || point > g.degree())
    throw DomainError("point " + std::to_string(point) + " out of range");
  auto tau = transporter(g, pi(point), point);
  if (!tau) return std::nullopt;
  StabilizerChain stab = point_stabilizer(g, point);
  Permutation rep = compose(*tau, pi);
  if (rep(point) != point)
    throw InternalError("subcoset_fixing representative does not fix its point");
  return RightCoset(std::move(stab), std::move(rep));
}

std::optional<RightCoset> subcoset_mapping(const RightCoset &coset, int from, int to) {
  const int n = coset.degree();
  if (from < 1 || from > n || to < 1 || to > n)
    throw DomainError("subcoset point out of range");
  const int a = coset.rep()(from);
  auto tau = transporter(coset.subgroup(), a, to);
  if (!tau) return std::nullopt;
  StabilizerChain stab = point_stabilizer(coset.subgroup(), to);
  Permutation rep = compose(*tau, coset.rep());
  if (rep(from) != to)
    throw InternalError("subcoset_mapping representative misses its target");
  return RightCoset(std::move(stab), std::move(rep));
}

namespace {

// Searches y in H1 with y in H2*rho, walking H1's chain depth-first and
// shrinking the H2-side coset of candidates consistent with the images fixed
// so far. Orbit points are tried ascending, so the first hit is deterministic.
std::optional<Permutation> find_common_element(const StabilizerChain &h1,
                                               const RightCoset &h2_rho) {
  struct Dfs {
    const StabilizerChain &h1;
    const RightCoset &target;

    std::optional<Permutation> run(size_t level, const Permutation &partial,
                                   const RightCoset &alive) {
      if (level == h1.levels().size()) {
        if (target.member(partial)) return partial;
        return std::nullopt;
      }
      const auto &lvl = h1.levels()[level];
      for (size_t k = 0; k < lvl.orbit.size(); ++k) {
        Permutation next = compose(partial, lvl.transversal[k]);
        // images of base points b_1..b_level under the final element are fixed
        auto narrowed = subcoset_mapping(alive, lvl.base_point, next(lvl.base_point));
        if (!narrowed) continue;
        if (auto hit = run(level + 1, next, *narrowed)) return hit;
      }
      return std::nullopt;
    }
  };
  Dfs dfs{h1, h2_rho};
  return dfs.run(0, Permutation(h1.degree()), h2_rho);
}

// All elements of H1 that lie in H2, collected into a chain by sifting.
StabilizerChain group_intersection(const StabilizerChain &h1, const StabilizerChain &h2) {
  const int n = h1.degree();
  std::vector<Permutation> found_gens;
  StabilizerChain cur = build_chain(GroupInput{n, {}});

  struct Dfs {
    const StabilizerChain &h1;
    const RightCoset &target;
    std::vector<Permutation> &gens;
    StabilizerChain &cur;
    int n;

    void run(size_t level, const Permutation &partial, const RightCoset &alive) {
      if (level == h1.levels().size()) {
        if (target.member(partial) && !cur.contains(partial)) {
          gens.push_back(partial);
          cur = build_chain(GroupInput{n, gens});
        }
        return;
      }
      const auto &lvl = h1.levels()[level];
      for (size_t k = 0; k < lvl.orbit.size(); ++k) {
        Permutation next = compose(partial, lvl.transversal[k]);
        auto narrowed = subcoset_mapping(alive, lvl.base_point, next(lvl.base_point));
        if (!narrowed) continue;
        run(level + 1, next, *narrowed);
      }
    }
  };
  const RightCoset target(h2, Permutation(n));
  Dfs dfs{h1, target, found_gens, cur, n};
  dfs.run(0, Permutation(n), target);
  return cur;
}

} // namespace

std::optional<RightCoset> coset_intersect(const RightCoset &a, const RightCoset &b) {
  if (a.degree() != b.degree())
    throw DomainError("degree mismatch in coset intersection");
  // x = y*s1 with y in H1; x in H2*s2 iff y in H2*(s2*s1^-1)
  const Permutation rho = compose(b.rep(), a.rep().inverse());
  const RightCoset side(b.subgroup(), rho);
  auto y = find_common_element(a.subgroup(), side);
  if (!y) return std::nullopt;
  Permutation x0 = compose(*y, a.rep());
  StabilizerChain meet = group_intersection(a.subgroup(), b.subgroup());
  RightCoset out(std::move(meet), std::move(x0));
  if (!a.member(out.rep()) || !b.member(out.rep()))
    throw InternalError("coset intersection representative fails membership");
  return out;
}

} // namespace permkit
