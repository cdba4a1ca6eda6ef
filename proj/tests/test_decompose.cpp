#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "snrkit/construct.hpp"
#include "snrkit/decompose.hpp"
#include "snrkit/enumerate.hpp"

using namespace snrkit;

namespace {

FiniteSeminearring trivial() {
  return make_seminearring(OpTable(1, {0}), OpTable(1, {0}));
}

std::vector<std::vector<Elem>> h_partition(const FiniteSeminearring& s) {
  return greens_relations(s.add()).h_classes;
}

void check_cover(const FiniteSeminearring& s,
                 const std::vector<Component>& comps) {
  std::set<Elem> seen;
  for (const Component& c : comps)
    for (Elem e : c.elements) CHECK(seen.insert(e).second);
  CHECK(static_cast<int>(seen.size()) == s.order());
}

}  // namespace

TEST_CASE("decomposition of T") {
  const FiniteSeminearring t = left_zero_T();
  const std::vector<Component> comps = h_plus_decomposition(t);
  REQUIRE(comps.size() == 3);
  check_cover(t, comps);

  CHECK(comps[0].elements == std::vector<Elem>{0, 3});
  CHECK(comps[0].flags.is_near_ring);
  CHECK(*comps[0].zero == 0);
  CHECK(comps[0].flags.regular);
  CHECK_FALSE(comps[0].flags.inverse);
  CHECK(comps[0].flags.completely_regular);
  CHECK_FALSE(comps[0].flags.clifford);
  CHECK_FALSE(comps[0].flags.zero_symmetric);  // c*u = c != u
  REQUIRE(comps[0].failure_witness.has_value());
  CHECK(comps[0].failure_witness->flag == "inverse");

  for (int i : {1, 2}) {
    CHECK(comps[i].elements == std::vector<Elem>{i});
    CHECK(comps[i].flags.is_near_ring);
    CHECK(comps[i].flags.regular);
    CHECK(comps[i].flags.inverse);
    CHECK(comps[i].flags.completely_regular);
    CHECK(comps[i].flags.clifford);
    CHECK(comps[i].flags.zero_symmetric);
    CHECK_FALSE(comps[i].failure_witness.has_value());
  }

  const std::vector<Component> one = h_plus_decomposition(trivial());
  REQUIRE(one.size() == 1);
  CHECK(one[0].flags.is_near_ring);
  CHECK(one[0].flags.clifford);
}

TEST_CASE("is_near_ring on subsets of T") {
  const FiniteSeminearring t = left_zero_T();
  CHECK(is_near_ring(t, std::vector<Elem>{0, 3}).holds);
  CHECK(is_near_ring(t, std::vector<Elem>{1}).holds);

  // {u, a} is additively closed but has no inverse for a
  const PredicateResult r = is_near_ring(t, std::vector<Elem>{0, 1});
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<Elem>{1});

  CHECK_THROWS_AS(is_near_ring(t, std::vector<Elem>{0, 9}), DomainError);
}

TEST_CASE("near_ring_flags contract") {
  const FiniteSeminearring t = left_zero_T();
  const ComponentFlags f = near_ring_flags(t, std::vector<Elem>{0, 3});
  CHECK(f.is_near_ring);
  CHECK(f.regular);
  CHECK_FALSE(f.inverse);
  CHECK(f.completely_regular);
  CHECK_FALSE(f.clifford);
  CHECK_FALSE(f.zero_symmetric);

  const ComponentFlags s = near_ring_flags(t, std::vector<Elem>{1});
  CHECK(s.clifford);
  CHECK(s.zero_symmetric);

  CHECK_THROWS_AS(near_ring_flags(t, std::vector<Elem>{0, 1}), DomainError);
}

TEST_CASE("decomposition of example_S(2)") {
  const FiniteSeminearring s = example_S(2);
  const std::vector<Component> comps = h_plus_decomposition(s);
  REQUIRE(comps.size() == 3);
  check_cover(s, comps);
  CHECK(comps[0].elements.size() == 8);
  CHECK(comps[1].elements.size() == 16);
  CHECK(comps[2].elements.size() == 16);

  // S1 = {u,c} x I: a near-ring, not regular, witness (u, [[0,1],[0,0]])
  CHECK(comps[0].flags.is_near_ring);
  CHECK_FALSE(comps[0].flags.regular);
  REQUIRE(comps[0].failure_witness.has_value());
  CHECK(comps[0].failure_witness->flag == "regular");
  CHECK(comps[0].failure_witness->elements == std::vector<Elem>{1});
  CHECK(s.name_of(1) == "u_m0100");
  CHECK(*comps[0].zero == 0);
  CHECK(s.name_of(comps[0].elements[*comps[0].zero]) == "u_m0000");
  CHECK_FALSE(comps[0].flags.zero_symmetric);

  for (int i : {1, 2}) {
    CHECK(comps[i].flags.is_near_ring);
    CHECK(comps[i].flags.regular);
    CHECK_FALSE(comps[i].flags.inverse);
    CHECK_FALSE(comps[i].flags.completely_regular);
    CHECK(comps[i].flags.zero_symmetric);
  }

  // local tables restrict the parent operations
  const Component& c0 = comps[0];
  REQUIRE(c0.add.has_value());
  for (std::size_t i = 0; i < c0.elements.size(); ++i)
    for (std::size_t j = 0; j < c0.elements.size(); ++j) {
      const Elem parent = s.plus(c0.elements[i], c0.elements[j]);
      CHECK(c0.elements[(*c0.add)(static_cast<Elem>(i), static_cast<Elem>(j))] ==
            parent);
    }
}

TEST_CASE("near-ring partitions: frozen small cases") {
  const auto t_parts = near_ring_partitions(left_zero_T());
  REQUIRE(t_parts.size() == 1);
  CHECK(t_parts[0] ==
        std::vector<std::vector<Elem>>{{0, 3}, {1}, {2}});

  const auto l_parts = near_ring_partitions(two_semilattice_L());
  REQUIRE(l_parts.size() == 1);
  CHECK(l_parts[0] == std::vector<std::vector<Elem>>{{0}, {1}});
}

TEST_CASE("every near-ring partition is the H+ partition, order <= 3") {
  // Cross-validates the union reading: GLCR instances admit exactly the H+
  // partition, everything else admits none.
  for (int n = 1; n <= 3; ++n) {
    enumerate_seminearrings(EnumSpec{n, false, {}, {}},
                            [](const FiniteSeminearring& s) {
      const auto parts = near_ring_partitions(s);
      if (is_glcr(s).holds) {
        REQUIRE(parts.size() == 1);
        CHECK(parts[0] == h_partition(s));
      } else {
        CHECK(parts.empty());
      }
      return true;
    });
  }
}

TEST_CASE("partition oracle on an order-4 product") {
  const FiniteSeminearring ll =
      direct_product(two_semilattice_L(), two_semilattice_L());
  REQUIRE(is_glcr(ll).holds);
  const auto parts = near_ring_partitions(ll);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == h_partition(ll));
}

TEST_CASE("near_ring_partitions refuses large carriers") {
  CHECK_THROWS_AS(near_ring_partitions(example_S(2)), DomainError);
}
