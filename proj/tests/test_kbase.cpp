#include <random>

#include "doctest.h"
#include "permkit/errors.hpp"
#include "permkit/kbase.hpp"
#include "support/catalog.hpp"
#include "support/naive.hpp"
#include "support/random_groups.hpp"

using namespace permkit;
using namespace permkit::testing;

namespace {

GroupInput make(int degree, std::initializer_list<const char *> gens) {
  GroupInput g{degree, {}};
  for (const char *c : gens) g.generators.push_back(parse_cycles(c, degree));
  return g;
}

bool hits_all(const std::vector<int> &b, const std::vector<std::vector<int>> &sets) {
  for (const auto &s : sets) {
    bool hit = false;
    for (int p : s)
      if (std::find(b.begin(), b.end(), p) != b.end()) hit = true;
    if (!hit) return false;
  }
  return true;
}

// every subset of {1..n}, as sorted point lists
std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> b;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) b.push_back(i);
    out.push_back(std::move(b));
  }
  return out;
}

} // namespace

TEST_CASE("is_base") {
  const StabilizerChain s3 = build_chain(make(3, {"(1 2)", "(1 2 3)"}));
  CHECK(is_base(s3, {1, 2}));
  const StabilizerChain s4 = build_chain(make(4, {"(1 2)", "(1 2 3 4)"}));
  CHECK(!is_base(s4, {1, 2}));
  CHECK(!is_base(s4, {}));
  const StabilizerChain trivial = build_chain(make(3, {"()"}));
  CHECK(is_base(trivial, {}));
}

TEST_CASE("is_base agrees with exhaustive search") {
  for (const auto &name : {"s4", "a4", "d6", "c3xc2", "klein6", "c3wr2"}) {
    const auto &e = catalog_entry(name);
    const auto elements = naive_elements(e.group.degree, e.group.generators);
    const StabilizerChain chain = build_chain(e.group);
    for (const auto &b : all_subsets(e.group.degree)) {
      bool expected = true;
      for (const auto &x : elements) {
        if (x.is_identity()) continue;
        bool fixes_all = true;
        for (int p : b)
          if (x(p) != p) fixes_all = false;
        if (fixes_all) expected = false;
      }
      CHECK(is_base(chain, b) == expected);
    }
  }
}

TEST_CASE("brute_force_kbase") {
  const StabilizerChain s3 = build_chain(make(3, {"(1 2)", "(1 2 3)"}));
  CHECK(brute_force_kbase(s3, 2) == std::vector<int>{1, 2});
  const StabilizerChain c5 = build_chain(make(5, {"(1 2 3 4 5)"}));
  CHECK(brute_force_kbase(c5, 1) == std::vector<int>{1});
  const StabilizerChain s4 = build_chain(make(4, {"(1 2)", "(1 2 3 4)"}));
  CHECK(!brute_force_kbase(s4, 2).has_value()); // min base of S4 is 3
  CHECK(brute_force_kbase(s4, 3) == std::vector<int>{1, 2, 3});
  const StabilizerChain trivial = build_chain(make(3, {"()"}));
  CHECK(brute_force_kbase(trivial, 0) == std::vector<int>{});
}

TEST_CASE("cyclic_decompose on known groups") {
  const auto d1 = cyclic_decompose(make(5, {"(1 2 3)(4 5)"}));
  REQUIRE(d1.factors.size() == 2);
  CHECK(d1.factors[0].prime == 2);
  CHECK(d1.factors[0].exponent == 1);
  CHECK(d1.factors[0].generator == parse_cycles("(4 5)", 5));
  CHECK(d1.factors[1].prime == 3);
  CHECK(d1.factors[1].exponent == 1);
  CHECK(d1.factors[1].generator == parse_cycles("(1 3 2)", 5));

  const auto d2 = cyclic_decompose(make(6, {"(1 2 3 4 5 6)"}));
  REQUIRE(d2.factors.size() == 2);
  CHECK(d2.factors[0].generator == parse_cycles("(1 4)(2 5)(3 6)", 6));
  CHECK(d2.factors[1].generator == parse_cycles("(1 3 5)(2 4 6)", 6));

  CHECK(cyclic_decompose(make(3, {"()"})).factors.empty());

  CHECK_THROWS_AS(cyclic_decompose(make(4, {"(1 2)", "(3 4)"})), DomainError);
  CHECK_THROWS_AS(cyclic_decompose(make(3, {"(1 2)", "(1 2 3)"})), DomainError);
  CHECK_THROWS_AS(cyclic_decompose(make(4, {"(1 2)(3 4)", "(1 3)(2 4)"})), DomainError);
}

TEST_CASE("cyclic_decompose certifies random cyclic groups") {
  for (const auto &g : random_cyclic_groups(25, 15, 10000)) {
    const StabilizerChain chain = build_chain(g);
    const auto dec = cyclic_decompose(g);
    BigInt product_order = 1;
    Permutation prod(g.degree);
    for (const auto &f : dec.factors) {
      const BigInt pe = big_pow(BigInt(f.prime), static_cast<unsigned>(f.exponent));
      CHECK(f.generator.order() == pe);
      product_order *= pe;
      prod = compose(prod, f.generator);
    }
    CHECK(product_order == chain.order());
    CHECK(prod.order() == chain.order());
    CHECK(BigInt(dec.factors.size()) <= bit_length(chain.order()));
  }
}

TEST_CASE("critical_sets") {
  const auto d1 = cyclic_decompose(make(5, {"(1 2 3)(4 5)"}));
  CHECK(critical_sets(d1, 5) ==
        std::vector<std::vector<int>>{{4, 5}, {1, 2, 3}});

  const auto d2 = cyclic_decompose(make(6, {"(1 2 3 4 5 6)"}));
  CHECK(critical_sets(d2, 6) ==
        std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}});

  const auto d3 = cyclic_decompose(make(5, {"(1 2)"}));
  CHECK(critical_sets(d3, 5) == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("hitting_set_k") {
  CHECK(hitting_set_k({4, {{1, 2}, {3, 4}, {1, 2, 3, 4}}, 2}) ==
        std::vector<int>{1, 3});
  CHECK(!hitting_set_k({4, {{1, 2}, {3, 4}}, 1}).has_value());
  CHECK(hitting_set_k({5, {{5}}, 3}) == std::vector<int>{5});
  CHECK_THROWS_AS(hitting_set_k({3, {{1}}, 0}), DomainError);
}

TEST_CASE("hitting_set_k agrees with exhaustive subset search") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10); // up to 12
    const int nsets = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> sets;
    for (int s = 0; s < nsets; ++s) {
      std::vector<int> set;
      for (int p = 1; p <= n; ++p)
        if (rng() % 3 == 0) set.push_back(p);
      if (set.empty()) set.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
      sets.push_back(std::move(set));
    }
    const int k = 1 + static_cast<int>(rng() % 4);
    bool exists = false;
    for (const auto &b : all_subsets(n))
      if (static_cast<int>(b.size()) <= k && hits_all(b, sets)) exists = true;
    const auto got = hitting_set_k({n, sets, k});
    CHECK(got.has_value() == exists);
    if (got) {
      CHECK(static_cast<int>(got->size()) <= k);
      CHECK(hits_all(*got, sets));
    }
  }
}

TEST_CASE("cyclic_kbase on known groups") {
  const auto g = make(5, {"(1 2 3)(4 5)"});
  const auto b2 = cyclic_kbase(g, 2);
  REQUIRE(b2.has_value());
  CHECK(*b2 == std::vector<int>{1, 4});
  CHECK(!cyclic_kbase(g, 1).has_value()); // |G| = 6 > 5^1

  CHECK(cyclic_kbase(make(6, {"(1 2 3 4 5 6)"}), 1) == std::vector<int>{1});
  CHECK(cyclic_kbase(make(3, {"()"}), 1) == std::vector<int>{});
  CHECK_THROWS_AS(cyclic_kbase(make(4, {"(1 2)", "(3 4)"}), 2), DomainError);
}

TEST_CASE("base <=> hitting set for every subset, exhaustively") {
  int checked = 0;
  for (const auto &g : random_cyclic_groups(30, 15, 10000)) {
    if (g.degree > 10) continue;
    const StabilizerChain chain = build_chain(g);
    const auto sets = critical_sets(cyclic_decompose(g), g.degree);
    for (const auto &b : all_subsets(g.degree))
      CHECK(is_base(chain, b) == hits_all(b, sets));
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("cyclic_kbase agrees with the brute-force baseline") {
  for (const auto &g : random_cyclic_groups(20, 15, 10000)) {
    const StabilizerChain chain = build_chain(g);
    for (int k = 1; k <= 4; ++k) {
      const auto fpt = cyclic_kbase(g, k);
      const auto brute = brute_force_kbase(chain, k);
      CHECK(fpt.has_value() == brute.has_value());
      if (fpt) {
        CHECK(static_cast<int>(fpt->size()) <= k);
        CHECK(is_base(chain, *fpt));
      }
    }
  }
}

TEST_CASE("bounded_orbit_kbase on known groups") {
  const auto g3 = make(6, {"(1 2)", "(3 4)", "(5 6)"});
  CHECK(!bounded_orbit_kbase(g3, 2, 2).has_value()); // |G| = 8 > 2^2
  CHECK(bounded_orbit_kbase(g3, 3, 2) == std::vector<int>{1, 3, 5});

  CHECK(bounded_orbit_kbase(make(4, {"(1 2)(3 4)"}), 1, 2) == std::vector<int>{1});

  CHECK_THROWS_AS(bounded_orbit_kbase(make(5, {"(1 2 3 4 5)"}), 2, 4), DomainError);
  CHECK_THROWS_AS(bounded_orbit_kbase(g3, 0, 2), DomainError);

  // trivial group: the empty base
  CHECK(bounded_orbit_kbase(make(3, {"()"}), 2, 2) == std::vector<int>{});
}

TEST_CASE("bounded_orbit_kbase agrees with the brute-force baseline") {
  // catalog groups whose orbits fit the bound, plus generated products
  std::vector<GroupInput> groups;
  for (const auto &e : catalog()) {
    int largest = 0;
    for (const auto &orb : orbits(e.group))
      largest = std::max(largest, static_cast<int>(orb.size()));
    if (largest <= 4) groups.push_back(e.group);
  }
  for (auto &g : random_bounded_orbit_groups(10, 12)) groups.push_back(std::move(g));
  CHECK(groups.size() >= 20);

  for (const auto &g : groups) {
    int b = 1;
    for (const auto &orb : orbits(g)) b = std::max(b, static_cast<int>(orb.size()));
    b = std::max(b, 2);
    const StabilizerChain chain = build_chain(g);
    for (int k = 1; k <= 4; ++k) {
      const auto fpt = bounded_orbit_kbase(g, k, b);
      const auto brute = brute_force_kbase(chain, k);
      CHECK(fpt.has_value() == brute.has_value());
      if (fpt) {
        CHECK(static_cast<int>(fpt->size()) <= k);
        CHECK(is_base(chain, *fpt));
      }
    }
  }
}
