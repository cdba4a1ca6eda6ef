#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "snrkit/construct.hpp"
#include "snrkit/op_table.hpp"

using namespace snrkit;

namespace {

const OpTable kTAdd(4, {0, 1, 2, 3,
                        1, 1, 1, 1,
                        2, 2, 2, 2,
                        3, 2, 1, 0});

OpTable left_zero(int n) {
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) e[static_cast<std::size_t>(i) * n + j] = i;
  return OpTable(n, e);
}

OpTable cyclic_group(int n) {
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      e[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return OpTable(n, e);
}

// Composition table of the symmetric group on 3 points.
OpTable sym3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = 6;
  std::vector<Elem> e(36);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      const auto it = std::find(perms.begin(), perms.end(), comp);
      e[static_cast<std::size_t>(i) * n + j] =
          static_cast<Elem>(it - perms.begin());
    }
  return OpTable(n, e);
}

}  // namespace

TEST_CASE("make_table validates and round-trips") {
  const OpTable one = make_table(1, {0});
  CHECK(one.order() == 1);
  CHECK(one(0, 0) == 0);

  CHECK(kTAdd.order() == 4);
  CHECK(kTAdd(0, 3) == 3);   // u + c = c
  CHECK(kTAdd(3, 3) == 0);   // c + c = u
  CHECK(kTAdd(3, 1) == 2);   // c + a = b

  const OpTable lz2 = make_table(2, {0, 0, 1, 1});
  CHECK(lz2(0, 1) == 0);
  CHECK(lz2(1, 0) == 1);

  CHECK_THROWS_AS(make_table(2, {0, 0, 1}), DomainError);
  CHECK_THROWS_AS(make_table(2, {0, 0, 1, 2}), DomainError);
  CHECK_THROWS_AS(make_table(0, {}), DomainError);
  CHECK_THROWS_AS(kTAdd.at(4, 0), DomainError);

  // reading back the entries is the identity
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      const OpTable t = oracles::random_table(n, rng);
      CHECK(make_table(n, t.entries()).entries() == t.entries());
    }
}

TEST_CASE("associativity") {
  CHECK(is_associative(kTAdd).ok);
  CHECK(is_associative(make_table(1, {0})).ok);

  const CheckResult nand = is_associative(make_table(2, {1, 0, 0, 0}));
  CHECK_FALSE(nand.ok);
  REQUIRE(nand.witness.has_value());
  CHECK(nand.witness->kind == ViolationKind::associativity);
  CHECK(nand.witness->elements == std::vector<Elem>{0, 0, 1});
}

TEST_CASE("associativity matches the naive oracle on random tables") {
  std::mt19937_64 rng(20240817);
  int checked = 0;
  while (checked < 1000) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const OpTable t = oracles::random_table(n, rng);
    CHECK(is_associative(t).ok == oracles::naive_associative(t));
    ++checked;
  }
}

TEST_CASE("group tables are associative with only the identity idempotent") {
  for (int n = 1; n <= 6; ++n) {
    const OpTable g = cyclic_group(n);
    CHECK(is_associative(g).ok);
    CHECK(idempotents(g) == std::vector<Elem>{0});
  }
  const OpTable s3 = sym3();
  CHECK(is_associative(s3).ok);
  CHECK(idempotents(s3) == std::vector<Elem>{0});
}

TEST_CASE("commutativity") {
  CHECK(is_commutative(make_table(2, {0, 1, 1, 1})).ok);  // L's +
  CHECK(is_commutative(make_table(1, {0})).ok);

  const CheckResult r = is_commutative(kTAdd);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  // a + b = a while b + a = b
  CHECK(r.witness->elements == std::vector<Elem>{1, 2});
}

TEST_CASE("idempotents") {
  CHECK(idempotents(kTAdd) == std::vector<Elem>{0, 1, 2});   // c+c = u
  CHECK(idempotents(make_table(2, {0, 1, 1, 1})) == std::vector<Elem>{0, 1});
  CHECK(idempotents(left_zero(4)) == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("right distributivity") {
  // left-zero multiplication right-distributes over anything associative:
  // (x+y)*z = x+y = x*z + y*z
  CHECK(is_right_distributive(kTAdd, left_zero(4)).ok);
  CHECK(is_right_distributive(make_table(2, {0, 1, 1, 1}), left_zero(2)).ok);
  CHECK(is_right_distributive(cyclic_group(2), make_table(2, {0, 0, 0, 0})).ok);

  // reusing T's addition as multiplication breaks distributivity
  const CheckResult r = is_right_distributive(kTAdd, kTAdd);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->kind == ViolationKind::right_distributivity);
  CHECK(r.witness->elements == std::vector<Elem>{0, 0, 3});

  CHECK_THROWS_AS(is_right_distributive(kTAdd, left_zero(3)), DomainError);
}

TEST_CASE("left distributivity") {
  const CheckResult r = is_left_distributive(kTAdd, left_zero(4));
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->kind == ViolationKind::left_distributivity);
  CHECK(r.witness->elements == std::vector<Elem>{0, 0, 3});

  CHECK(is_left_distributive(cyclic_group(2), make_table(2, {0, 0, 0, 0})).ok);

  // the matrix ring is two-sided distributive; exhaustive 16^3 triple scan
  const FiniteSeminearring m2 = matrix_ring({2});
  CHECK(is_left_distributive(m2.add(), m2.mul()).ok);
  CHECK(is_right_distributive(m2.add(), m2.mul()).ok);
}

TEST_CASE("random distributivity agrees with the naive oracle") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const OpTable a = oracles::random_table(n, rng);
    const OpTable m = oracles::random_table(n, rng);
    CHECK(is_right_distributive(a, m).ok ==
          oracles::naive_right_distributive(a, m));
  }
}
