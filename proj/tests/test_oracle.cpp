#include "doctest.h"
#include "permkit/errors.hpp"
#include "permkit/oracle.hpp"
#include "support/catalog.hpp"
#include "support/naive.hpp"

using namespace permkit;
using namespace permkit::testing;

namespace {

StabilizerChain chain_of(const char *name) {
  return build_chain(catalog_entry(name).group);
}

} // namespace

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_group(chain_of("s3")).elements.size() == 6);
  CHECK(enumerate_group(chain_of("c5")).elements.size() == 5);

  GroupInput s10{10, {parse_cycles("(1 2)", 10), parse_cycles("(1 2 3 4 5 6 7 8 9 10)", 10)}};
  CHECK_THROWS_AS(enumerate_group(build_chain(s10)), ResourceError); // 10! > 10^6
}

TEST_CASE("enumeration is canonical and matches the naive closure") {
  for (const auto &e : catalog()) {
    const StabilizerChain chain = build_chain(e.group);
    const GroupTable t = enumerate_group(chain);
    CHECK(BigInt(t.elements.size()) == chain.order());
    REQUIRE(!t.elements.empty());
    CHECK(t.elements.front().is_identity());
    CHECK(std::is_sorted(t.elements.begin(), t.elements.end()));
    CHECK(t.elements == naive_elements(e.group.degree, e.group.generators));
  }
}

TEST_CASE("group tables are closed under composition (spot check)") {
  const GroupTable t = enumerate_group(chain_of("a5"));
  for (size_t i = 0; i < t.elements.size(); i += 7)
    for (size_t j = 0; j < t.elements.size(); j += 11)
      CHECK(std::binary_search(t.elements.begin(), t.elements.end(),
                               compose(t.elements[i], t.elements[j])));
}

TEST_CASE("stats on known groups") {
  const GroupTable s3 = enumerate_group(chain_of("s3"));
  const CosetStats st = stats(s3, Permutation(3));
  CHECK(st.fpf_count == 2);
  CHECK(st.sum_move == 12);
  CHECK(st.max_move == 3);
  REQUIRE(st.min_base_size.has_value());
  CHECK(*st.min_base_size == 2);

  const GroupTable c4 = enumerate_group(chain_of("c4"));
  const CosetStats st4 = stats(c4, Permutation(4));
  CHECK(st4.fpf_count == 3);
  CHECK(st4.max_move == 4);
  CHECK(*st4.min_base_size == 1);

  const GroupTable triv{2, {Permutation(2)}};
  const CosetStats stt = stats(triv, parse_cycles("(1 2)", 2));
  CHECK(stt.fpf_count == 1);
  CHECK(stt.sum_move == 2);
  CHECK(!stt.min_base_size.has_value());
}

TEST_CASE("orbit-counting identity holds on every catalog table") {
  for (const auto &e : catalog()) {
    const StabilizerChain chain = build_chain(e.group);
    const GroupTable t = enumerate_group(chain, BigInt(20000));
    BigInt fix_sum = 0;
    for (const auto &g : t.elements) fix_sum += fix_count(g);
    const BigInt orb_count(orbits(e.group).size());
    CHECK_MESSAGE(orb_count * chain.order() == fix_sum, e.name);
  }
}
