#include "permkit/bsgs.hpp"

#include <algorithm>
#include <random>

#include "permkit/errors.hpp"

namespace permkit {

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto &lvl : levels_) b.push_back(lvl.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt ord = 1;
  for (const auto &lvl : levels_) ord *= BigInt(lvl.orbit.size());
  return ord;
}

std::pair<Permutation, size_t> StabilizerChain::sift(const Permutation &g) const {
  if (g.degree() != degree_)
    throw DomainError("degree mismatch: permutation of degree " +
                      std::to_string(g.degree()) + " sifted through chain of degree " +
                      std::to_string(degree_));
  Permutation cur = g;
  for (size_t l = 0; l < levels_.size(); ++l) {
    const auto &lvl = levels_[l];
    const int p = cur(lvl.base_point);
    const Permutation *rep = lvl.rep_for(p);
    if (!rep) return {cur, l};
    cur = compose(rep->inverse(), cur); // now fixes base_point
  }
  return {cur, levels_.size()};
}

bool StabilizerChain::contains(const Permutation &g) const {
  auto [residue, passed] = sift(g);
  return passed == levels_.size() && residue.is_identity();
}

std::vector<Permutation> normalize_generators(const std::vector<Permutation> &gens) {
  std::vector<Permutation> out;
  for (const auto &g : gens) {
    if (g.is_identity()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> orbits(int degree, const std::vector<Permutation> &gens) {
  std::vector<int> block(static_cast<size_t>(degree) + 1, 0);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= degree; ++start) {
    if (block[static_cast<size_t>(start)]) continue;
    std::vector<int> orb{start};
    block[static_cast<size_t>(start)] = 1;
    for (size_t head = 0; head < orb.size(); ++head) {
      for (const auto &g : gens) {
        const int q = g(orb[head]);
        if (!block[static_cast<size_t>(q)]) {
          block[static_cast<size_t>(q)] = 1;
          orb.push_back(q);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<int>> orbits(const GroupInput &in) {
  return orbits(in.degree, in.generators);
}

namespace {

// Mutable chain state during Schreier-Sims construction.
struct Builder {
  int degree;
  struct Lvl {
    int base_point;
    std::vector<Permutation> gens;
    std::vector<int> orbit; // BFS discovery order during construction
    std::vector<Permutation> reps;
    std::vector<int> slot; // point -> index into orbit/reps
  };
  std::vector<Lvl> levels;

  void push_level(int base_point) {
    Lvl lvl;
    lvl.base_point = base_point;
    lvl.slot.assign(static_cast<size_t>(degree) + 1, -1);
    levels.push_back(std::move(lvl));
  }

  // Recomputes the orbit of levels[i].base_point and its transversal by BFS
  // over the level's generators, in fixed order.
  void recompute_transversal(size_t i) {
    Lvl &lvl = levels[i];
    lvl.orbit.clear();
    lvl.reps.clear();
    std::fill(lvl.slot.begin(), lvl.slot.end(), -1);
    lvl.orbit.push_back(lvl.base_point);
    lvl.reps.emplace_back(degree); // identity
    lvl.slot[static_cast<size_t>(lvl.base_point)] = 0;
    for (size_t head = 0; head < lvl.orbit.size(); ++head) {
      const int p = lvl.orbit[head];
      for (const auto &s : lvl.gens) {
        const int q = s(p);
        if (lvl.slot[static_cast<size_t>(q)] < 0) {
          lvl.slot[static_cast<size_t>(q)] = static_cast<int>(lvl.orbit.size());
          lvl.reps.push_back(compose(s, lvl.reps[head])); // maps base_point to q
          lvl.orbit.push_back(q);
        }
      }
    }
  }

  // Sift starting at level `from`; returns residue and drop level (== number
  // of levels when the residue survives the whole chain).
  std::pair<Permutation, size_t> sift_from(size_t from, const Permutation &g) const {
    Permutation cur = g;
    for (size_t l = from; l < levels.size(); ++l) {
      const Lvl &lvl = levels[l];
      const int p = cur(lvl.base_point);
      const int s = lvl.slot[static_cast<size_t>(p)];
      if (s < 0) return {cur, l};
      cur = compose(lvl.reps[static_cast<size_t>(s)].inverse(), cur);
    }
    return {cur, levels.size()};
  }

  static int min_moved_point(const Permutation &g) {
    for (int i = 1; i <= g.degree(); ++i)
      if (g(i) != i) return i;
    return 0;
  }

  // Verifies level i: every Schreier generator must sift to the identity
  // through the deeper levels; residues become new strong generators.
  void complete_level(size_t i) {
    recompute_transversal(i);
    Lvl &lvl = levels[i];
    // gens of level i do not change below, so orbit/reps stay valid
    for (size_t head = 0; head < lvl.orbit.size(); ++head) {
      for (size_t gi = 0; gi < lvl.gens.size(); ++gi) {
        const int p = lvl.orbit[head];
        const Permutation &s = lvl.gens[gi];
        const int q = s(p);
        const Permutation schreier =
            compose(lvl.reps[static_cast<size_t>(lvl.slot[static_cast<size_t>(q)])].inverse(),
                    compose(s, lvl.reps[head]));
        if (schreier.is_identity()) continue;
        auto [residue, drop] = sift_from(i + 1, schreier);
        if (residue.is_identity()) continue;
        // New strong generator for levels i+1 .. drop.
        for (size_t l = i + 1; l <= drop; ++l) {
          if (l == levels.size()) push_level(min_moved_point(residue));
          levels[l].gens.push_back(residue);
        }
        for (size_t l = drop; l > i; --l) complete_level(l);
      }
    }
  }
};

StabilizerChain finish(Builder &&b, std::vector<Permutation> norm_gens) {
  std::vector<StabilizerChain::Level> levels;
  levels.reserve(b.levels.size());
  for (auto &lvl : b.levels) {
    StabilizerChain::Level out;
    out.base_point = lvl.base_point;
    out.generators = std::move(lvl.gens);
    // canonical layout: orbit sorted ascending, transversal aligned
    std::vector<size_t> idx(lvl.orbit.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t c) { return lvl.orbit[a] < lvl.orbit[c]; });
    out.slot.assign(static_cast<size_t>(b.degree) + 1, -1);
    for (size_t k = 0; k < idx.size(); ++k) {
      out.orbit.push_back(lvl.orbit[idx[k]]);
      out.transversal.push_back(std::move(lvl.reps[idx[k]]));
      out.slot[static_cast<size_t>(out.orbit.back())] = static_cast<int>(k);
    }
    levels.push_back(std::move(out));
  }
  return StabilizerChain(b.degree, std::move(norm_gens), std::move(levels));
}

StabilizerChain build_chain_impl(const GroupInput &in, const std::vector<int> &prefix) {
  if (in.degree < 1) throw DomainError("group degree must be >= 1");
  for (const auto &g : in.generators)
    if (g.degree() != in.degree)
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(in.degree));
  auto gens = normalize_generators(in.generators);

  Builder b;
  b.degree = in.degree;
  // references into `levels` are held across push_level; never reallocate
  b.levels.reserve(prefix.size() + static_cast<size_t>(in.degree) + 1);
  for (int p : prefix) {
    if (p < 1 || p > in.degree)
      throw DomainError("base point " + std::to_string(p) + " out of range");
    b.push_level(p);
  }
  if (gens.empty()) {
    // trivial group: prefix levels all have singleton orbits
    for (size_t l = 0; l < b.levels.size(); ++l) b.recompute_transversal(l);
    return finish(std::move(b), {});
  }
  if (b.levels.empty()) {
    int first = in.degree + 1;
    for (const auto &g : gens) first = std::min(first, Builder::min_moved_point(g));
    b.push_level(first);
  }
  b.levels[0].gens = gens;
  b.complete_level(0);
  return finish(std::move(b), std::move(gens));
}

} // namespace

StabilizerChain build_chain(const GroupInput &in) { return build_chain_impl(in, {}); }

StabilizerChain build_chain(const GroupInput &in, const std::vector<int> &base_prefix) {
  return build_chain_impl(in, base_prefix);
}

StabilizerChain point_stabilizer(const StabilizerChain &c, int point) {
  return pointwise_stabilizer(c, {point});
}

StabilizerChain pointwise_stabilizer(const StabilizerChain &c, const std::vector<int> &delta) {
  std::vector<int> pts(delta);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (int p : pts)
    if (p < 1 || p > c.degree())
      throw DomainError("stabilized point " + std::to_string(p) + " out of range");
  if (pts.empty()) return c;

  const GroupInput in{c.degree(), c.group_generators()};
  StabilizerChain full = build_chain(in, pts);
  // the suffix of a chain is a chain for the pointwise stabilizer of the prefix
  std::vector<StabilizerChain::Level> rest(full.levels().begin() +
                                               static_cast<long>(pts.size()),
                                           full.levels().end());
  std::vector<Permutation> sub_gens =
      rest.empty() ? std::vector<Permutation>{} : rest.front().generators;
  return StabilizerChain(c.degree(), std::move(sub_gens), std::move(rest));
}

namespace {

// BFS transversal of `point` under `gens`: reps[k](point) == orb[k].
void orbit_transversal(int degree, const std::vector<Permutation> &gens, int point,
                       std::vector<int> &orb, std::vector<Permutation> &reps,
                       std::vector<int> &slot) {
  slot.assign(static_cast<size_t>(degree) + 1, -1);
  orb.clear();
  reps.clear();
  orb.push_back(point);
  reps.emplace_back(degree);
  slot[static_cast<size_t>(point)] = 0;
  for (size_t head = 0; head < orb.size(); ++head) {
    for (const auto &g : gens) {
      const int q = g(orb[head]);
      if (slot[static_cast<size_t>(q)] < 0) {
        slot[static_cast<size_t>(q)] = static_cast<int>(orb.size());
        reps.push_back(compose(g, reps[head]));
        orb.push_back(q);
      }
    }
  }
}

} // namespace

std::vector<Permutation> coset_reps(const StabilizerChain &c, int point) {
  if (point < 1 || point > c.degree())
    throw DomainError("point " + std::to_string(point) + " out of range");
  std::vector<int> orb, slot;
  std::vector<Permutation> reps;
  orbit_transversal(c.degree(), c.group_generators(), point, orb, reps, slot);
  // Transversal elements u_p (u_p(point) = p) are left-coset representatives;
  // their inverses represent the right cosets G_point * g, one each.
  std::vector<Permutation> out;
  out.reserve(reps.size());
  for (const auto &u : reps) out.push_back(u.inverse());
  std::sort(out.begin(), out.end(), [&](const Permutation &a, const Permutation &b) {
    return a(point) < b(point);
  });
  return out;
}

std::optional<Permutation> transporter(const StabilizerChain &c, int from, int to) {
  if (from < 1 || from > c.degree() || to < 1 || to > c.degree())
    throw DomainError("transporter point out of range");
  std::vector<int> orb, slot;
  std::vector<Permutation> reps;
  orbit_transversal(c.degree(), c.group_generators(), from, orb, reps, slot);
  const int s = slot[static_cast<size_t>(to)];
  if (s < 0) return std::nullopt;
  return reps[static_cast<size_t>(s)];
}

Permutation random_element(const StabilizerChain &c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform_below = [&rng](std::uint64_t bound) -> std::uint64_t {
    // rejection sampling: exactly uniform, deterministic per seed
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    return v % bound;
  };
  Permutation acc(c.degree());
  for (const auto &lvl : c.levels()) {
    const auto k = uniform_below(lvl.orbit.size());
    acc = compose(acc, lvl.transversal[static_cast<size_t>(k)]);
  }
  return acc;
}

} // namespace permkit
