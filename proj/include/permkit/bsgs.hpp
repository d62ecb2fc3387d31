#ifndef PERMKIT_BSGS_HPP
#define PERMKIT_BSGS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permkit/numeric.hpp"
#include "permkit/perm.hpp"

namespace permkit {

/// A group given by generators. Duplicate or identity generators are accepted
/// and normalized away by chain construction.
struct GroupInput {
  int degree = 1;
  std::vector<Permutation> generators;
};

/// Base and strong generating set built by deterministic Schreier-Sims with
/// explicit transversal vectors. Immutable once built; all queries are pure.
class StabilizerChain {
public:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators; // strong generators of this level's group
    std::vector<int> orbit;              // of base_point, sorted ascending
    std::vector<Permutation> transversal; // aligned: transversal[k](base_point) == orbit[k]
    std::vector<int> slot;                // point -> index into orbit, -1 if outside

    const Permutation *rep_for(int point) const {
      const int s = slot[static_cast<size_t>(point)];
      return s < 0 ? nullptr : &transversal[static_cast<size_t>(s)];
    }
  };

  StabilizerChain(int degree, std::vector<Permutation> group_gens,
                  std::vector<Level> levels)
      : degree_(degree), gens_(std::move(group_gens)), levels_(std::move(levels)) {}

  int degree() const { return degree_; }
  const std::vector<Level> &levels() const { return levels_; }
  std::vector<int> base() const;

  /// Generators of the whole group this chain describes (normalized; empty
  /// for the trivial group).
  const std::vector<Permutation> &group_generators() const { return gens_; }

  BigInt order() const;
  bool is_trivial() const { return levels_.empty(); }

  /// Sifts g through the transversals. Returns the residue and the number of
  /// levels passed; g is a member iff all levels pass and the residue is the
  /// identity.
  std::pair<Permutation, size_t> sift(const Permutation &g) const;

  bool contains(const Permutation &g) const;

private:
  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
};

/// Drops identity and duplicate generators, keeping first occurrences.
std::vector<Permutation> normalize_generators(const std::vector<Permutation> &gens);

/// Orbit partition of {1..degree}; blocks sorted by minimum element.
std::vector<std::vector<int>> orbits(int degree, const std::vector<Permutation> &gens);
std::vector<std::vector<int>> orbits(const GroupInput &in);

StabilizerChain build_chain(const GroupInput &in);

/// Chain with the given points forced as base prefix, in the given order.
/// Levels beyond the prefix pick the smallest moved point, as usual.
StabilizerChain build_chain(const GroupInput &in, const std::vector<int> &base_prefix);

/// Chain for the subgroup fixing the point.
StabilizerChain point_stabilizer(const StabilizerChain &c, int point);

/// Chain for the subgroup fixing every point of delta individually. Realized
/// by rebuilding with delta (sorted ascending) as base prefix and stripping
/// the prefix levels.
StabilizerChain pointwise_stabilizer(const StabilizerChain &c, const std::vector<int> &delta);

/// Right-coset representatives: G = disjoint union of G_point * rep over the
/// returned reps. One per orbit point; each rep maps `point` to a distinct
/// orbit point, and the list is sorted by that image.
std::vector<Permutation> coset_reps(const StabilizerChain &c, int point);

/// Some element mapping `from` to `to`, or nullopt iff they lie in
/// different orbits.
std::optional<Permutation> transporter(const StabilizerChain &c, int from, int to);

/// Exactly uniform over the group: one uniformly chosen transversal element
/// per level (rejection sampling, so no modulo bias). Deterministic per seed.
Permutation random_element(const StabilizerChain &c, std::uint64_t seed);

} // namespace permkit

#endif
