#include "doctest.h"
#include "permkit/errors.hpp"
#include "permkit/kmove.hpp"
#include "permkit/oracle.hpp"
#include "support/catalog.hpp"
#include "support/naive.hpp"

using namespace permkit;
using namespace permkit::testing;

namespace {

GroupInput make(int degree, std::initializer_list<const char *> gens) {
  GroupInput g{degree, {}};
  for (const char *c : gens) g.generators.push_back(parse_cycles(c, degree));
  return g;
}

int naive_max_move(const std::vector<Permutation> &elements) {
  int best = 0;
  for (const auto &g : elements) best = std::max(best, move_count(g));
  return best;
}

} // namespace

TEST_CASE("support") {
  CHECK(support(make(10, {"(1 2)", "(3 4)"})) == std::vector<int>{1, 2, 3, 4});
  CHECK(support(make(4, {"()"})) == std::vector<int>{});
  CHECK(support(make(9, {"(1 2 3)(7 8)"})) == std::vector<int>{1, 2, 3, 7, 8});
}

TEST_CASE("kernelize: witness branch") {
  GroupInput s10{10, {parse_cycles("(1 2)", 10),
                      parse_cycles("(1 2 3 4 5 6 7 8 9 10)", 10)}};
  const KernelResult kr = kernelize(KMoveInstance{s10, 3});
  REQUIRE(kr.is_witness());
  CHECK(move_count(*kr.witness) >= 5);
  CHECK(build_chain(s10).contains(*kr.witness));
}

TEST_CASE("kernelize: kernel branch") {
  const KernelResult kr = kernelize(KMoveInstance{make(100, {"(1 2)"}), 2});
  REQUIRE(!kr.is_witness());
  CHECK(kr.kernel_degree == 2);
  CHECK(kr.kernel_generators.size() == 1);
  CHECK(kr.support_points == std::vector<int>{1, 2});

  const KernelResult kt = kernelize(KMoveInstance{make(5, {"()"}), 1});
  REQUIRE(!kt.is_witness());
  CHECK(kt.kernel_degree == 0);
  CHECK(kt.kernel_generators.empty());
}

TEST_CASE("kernel bounds hold whenever the kernel branch is taken") {
  for (const auto &e : catalog()) {
    for (int k = 1; k <= e.group.degree; ++k) {
      const KernelResult kr = kernelize(KMoveInstance{e.group, k});
      if (kr.is_witness()) {
        CHECK(move_count(*kr.witness) >= k);
      } else {
        CHECK(kr.kernel_degree < 2 * k);
        CHECK(static_cast<int>(kr.kernel_generators.size()) <= k * (2 * k - 1));
        // the kernel is the restriction: same order as the original group
        if (kr.kernel_degree > 0) {
          const auto korder =
              build_chain(GroupInput{kr.kernel_degree, kr.kernel_generators}).order();
          CHECK(korder == build_chain(e.group).order());
        }
      }
    }
  }
}

TEST_CASE("solve_kmove on small instances") {
  const auto pair = make(4, {"(1 2)", "(3 4)"});
  auto w4 = solve_kmove(KMoveInstance{pair, 4});
  REQUIRE(w4.has_value());
  CHECK(*w4 == parse_cycles("(1 2)(3 4)", 4));
  CHECK(!solve_kmove(KMoveInstance{pair, 5}).has_value());

  auto w3 = solve_kmove(KMoveInstance{make(5, {"(1 2 3)"}), 3});
  REQUIRE(w3.has_value());
  CHECK(move_count(*w3) == 3);
  const bool is_3cycle = *w3 == parse_cycles("(1 2 3)", 5) ||
                         *w3 == parse_cycles("(1 3 2)", 5);
  CHECK(is_3cycle);
}

TEST_CASE("solve_kmove rejects k < 1") {
  CHECK_THROWS_AS(solve_kmove(KMoveInstance{make(3, {"(1 2)"}), 0}), DomainError);
}

TEST_CASE("solve_kmove matches the exhaustive maximum for every k") {
  for (const auto &e : catalog()) {
    const auto elements = naive_elements(e.group.degree, e.group.generators);
    const int best = naive_max_move(elements);
    const StabilizerChain chain = build_chain(e.group);
    for (int k = 1; k <= e.group.degree; ++k) {
      auto w = solve_kmove(KMoveInstance{e.group, k});
      CHECK_MESSAGE(w.has_value() == (best >= k), e.name << " k=" << k);
      if (w) {
        CHECK(move_count(*w) >= k);
        CHECK(chain.contains(*w));
      }
    }
  }
}

TEST_CASE("solving the kernel instance preserves the answer") {
  for (const auto &e : catalog()) {
    for (int k = 1; k <= e.group.degree; ++k) {
      const KernelResult kr = kernelize(KMoveInstance{e.group, k});
      if (kr.is_witness()) continue;
      const bool original = solve_kmove(KMoveInstance{e.group, k}).has_value();
      bool kernel_answer = false;
      if (kr.kernel_degree >= 1) {
        kernel_answer =
            solve_kmove(KMoveInstance{GroupInput{kr.kernel_degree, kr.kernel_generators}, k})
                .has_value();
      }
      CHECK_MESSAGE(original == kernel_answer, e.name << " k=" << k);
    }
  }
}

TEST_CASE("a kernel too large for the subset search is a resource error") {
  // move(G) = 25 < 2k for k = 13, so the kernel keeps all 25 points and the
  // fixed-point-free search exceeds its default degree cap of 24
  GroupInput wide{30, {parse_cycles(
      "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25)", 30)}};
  CHECK_THROWS_AS(solve_kmove(KMoveInstance{wide, 13}), ResourceError);
}
