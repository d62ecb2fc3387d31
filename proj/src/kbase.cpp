#include "permkit/kbase.hpp"

#include <algorithm>

#include "permkit/errors.hpp"
#include "permkit/oracle.hpp"

namespace permkit {

bool is_base(const StabilizerChain &c, const std::vector<int> &points) {
  return pointwise_stabilizer(c, points).order() == 1;
}

std::optional<std::vector<int>> brute_force_kbase(const StabilizerChain &c, int k) {
  if (k < 0) throw DomainError("k must be >= 0");
  const int n = c.degree();
  for (int size = 0; size <= k; ++size) {
    if (size > n) break;
    std::vector<int> b(static_cast<size_t>(size));
    for (int j = 0; j < size; ++j) b[static_cast<size_t>(j)] = j + 1;
    while (true) {
      if (is_base(c, b)) return b;
      int j = size - 1;
      while (j >= 0 && b[static_cast<size_t>(j)] == n - (size - 1 - j)) --j;
      if (j < 0) break;
      ++b[static_cast<size_t>(j)];
      for (int t = j + 1; t < size; ++t)
        b[static_cast<size_t>(t)] = b[static_cast<size_t>(t - 1)] + 1;
    }
  }
  return std::nullopt;
}

namespace {

constexpr long long kPrimeCap = 1000000000LL;

// Trial division; prime factors beyond the cap are a resource error.
std::vector<std::pair<long long, int>> factorize(BigInt n) {
  std::vector<std::pair<long long, int>> out;
  for (long long d = 2; BigInt(d) * d <= n; d == 2 ? d = 3 : d += 2) {
    if (d > kPrimeCap)
      throw ResourceError("group order has a prime factor beyond 10^9");
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) {
    if (n > kPrimeCap)
      throw ResourceError("group order has a prime factor beyond 10^9");
    out.emplace_back(n.convert_to<long long>(), 1);
  }
  return out;
}

} // namespace

CyclicDecomposition cyclic_decompose(const GroupInput &g) {
  const auto gens = normalize_generators(g.generators);
  CyclicDecomposition out;
  if (gens.empty()) return out; // trivial group

  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
        throw DomainError("group is not cyclic: generators do not commute");

  const StabilizerChain chain = build_chain(g);
  const BigInt order = chain.order();
  const auto primes = factorize(order);

  for (const auto &[p, e] : primes) {
    BigInt pe = big_pow(BigInt(p), static_cast<unsigned>(e));
    const BigInt m = order / pe;
    // Power map is a homomorphism (generators commute); in a cyclic p-group
    // the maximal-order image generates, and its order must be exactly p^e.
    bool have = false;
    Permutation best(g.degree);
    BigInt best_order = 0;
    for (const auto &s : gens) {
      Permutation cand = s.power(m);
      BigInt cand_order = cand.order();
      if (!have || cand_order > best_order) {
        have = true;
        best = std::move(cand);
        best_order = cand_order;
      }
    }
    if (best_order != pe)
      throw DomainError("group is not cyclic: Sylow factor for prime " +
                        std::to_string(p) + " is not cyclic");
    out.factors.push_back(CyclicFactor{std::move(best), p, e});
  }

  Permutation product(g.degree);
  for (const auto &f : out.factors) product = compose(product, f.generator);
  if (product.order() != order)
    throw DomainError("group is not cyclic: no single element has full order");
  if (out.factors.size() > bit_length(order))
    throw InternalError("more prime factors than bits in the group order");
  return out;
}

std::vector<std::vector<int>> critical_sets(const CyclicDecomposition &d, int degree) {
  std::vector<std::vector<int>> out;
  for (const auto &f : d.factors) {
    BigInt pe = big_pow(BigInt(f.prime), static_cast<unsigned>(f.exponent));
    std::vector<int> set;
    for (const auto &cyc : f.generator.cycles())
      if (BigInt(cyc.size()) == pe)
        set.insert(set.end(), cyc.begin(), cyc.end());
    std::sort(set.begin(), set.end());
    if (set.empty())
      throw InternalError("cyclic factor has no cycle of its full order");
    if (set.back() > degree)
      throw DomainError("decomposition does not fit the given degree");
    out.push_back(std::move(set));
  }
  return out;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct HittingSearch {
  const std::vector<std::vector<int>> &sets;
  int budget;
  std::vector<std::vector<int>> groups; // running intersections, one per used class

  // Assigns set t to an existing class or opens a new one, in ascending class
  // order; the first complete assignment found wins.
  bool assign(size_t t) {
    if (t == sets.size()) return true;
    for (size_t cls = 0; cls < groups.size(); ++cls) {
      auto meet = intersect_sorted(groups[cls], sets[t]);
      if (meet.empty()) continue;
      std::vector<int> saved = std::move(groups[cls]);
      groups[cls] = std::move(meet);
      if (assign(t + 1)) return true;
      groups[cls] = std::move(saved);
    }
    if (static_cast<int>(groups.size()) < budget) {
      groups.push_back(sets[t]);
      if (assign(t + 1)) return true;
      groups.pop_back();
    }
    return false;
  }
};

} // namespace

std::optional<std::vector<int>> hitting_set_k(const HittingInstance &inst) {
  if (inst.budget < 1) throw DomainError("hitting budget must be >= 1");
  for (const auto &s : inst.sets)
    if (s.empty()) throw DomainError("hitting instance contains an empty set");

  std::vector<std::vector<int>> sorted_sets = inst.sets;
  for (auto &s : sorted_sets) std::sort(s.begin(), s.end());

  HittingSearch search{sorted_sets, inst.budget, {}};
  if (!search.assign(0)) return std::nullopt;
  std::vector<int> picked;
  for (const auto &grp : search.groups) picked.push_back(grp.front()); // smallest point
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  return picked;
}

std::optional<std::vector<int>> cyclic_kbase(const GroupInput &g, int k) {
  if (k < 1) throw DomainError("k must be >= 1");
  const StabilizerChain chain = build_chain(g);
  if (chain.order() > big_pow(BigInt(g.degree), static_cast<unsigned>(k)))
    return std::nullopt; // a size-k base forces |G| <= n^k

  const CyclicDecomposition dec = cyclic_decompose(g);
  if (dec.factors.empty()) return std::vector<int>{}; // trivial group

  HittingInstance inst{g.degree, critical_sets(dec, g.degree), k};
  auto base = hitting_set_k(inst);
  if (!base) return std::nullopt;
  if (!is_base(chain, *base))
    throw InternalError("hitting set of the critical sets is not a base");
  return base;
}

std::optional<std::vector<int>> bounded_orbit_kbase(const GroupInput &g, int k,
                                                    int orbit_bound) {
  if (k < 1) throw DomainError("k must be >= 1");
  if (orbit_bound < 1) throw DomainError("orbit bound must be >= 1");
  for (const auto &orb : orbits(g))
    if (static_cast<int>(orb.size()) > orbit_bound)
      throw DomainError("orbit bound violated: orbit of size " +
                        std::to_string(orb.size()) + " exceeds " +
                        std::to_string(orbit_bound));

  const StabilizerChain chain = build_chain(g);
  const BigInt bound = big_pow(BigInt(orbit_bound), static_cast<unsigned>(k));
  if (chain.order() > bound)
    return std::nullopt; // the stabilizer tower forces |G| <= b^k

  const GroupTable table = enumerate_group(chain, bound);
  std::vector<std::vector<int>> supports;
  for (const auto &x : table.elements) {
    if (x.is_identity()) continue;
    auto supp = moved_points(x);
    if (std::find(supports.begin(), supports.end(), supp) == supports.end())
      supports.push_back(std::move(supp));
  }
  if (supports.empty()) return std::vector<int>{}; // trivial group

  HittingInstance inst{g.degree, std::move(supports), k};
  auto base = hitting_set_k(inst);
  if (!base) return std::nullopt;
  if (!is_base(chain, *base))
    throw InternalError("support hitting set is not a base");
  return base;
}

} // namespace permkit
