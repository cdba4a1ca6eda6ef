#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "snrkit/construct.hpp"
#include "snrkit/enumerate.hpp"
#include "snrkit/greens.hpp"

using namespace snrkit;

namespace {

const OpTable kTAdd(4, {0, 1, 2, 3,
                        1, 1, 1, 1,
                        2, 2, 2, 2,
                        3, 2, 1, 0});
const OpTable kTLeftZero(4, {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3});
const OpTable kLAdd(2, {0, 1, 1, 1});
const OpTable kNull2(2, {0, 0, 0, 0});

OpTable z4() {
  std::vector<Elem> e(16);
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) e[static_cast<std::size_t>(i) * 4 + j] = (i + j) % 4;
  return OpTable(4, e);
}

bool same_partition(const std::vector<std::vector<Elem>>& got,
                    const std::vector<std::vector<Elem>>& want) {
  return got == want;
}

}  // namespace

TEST_CASE("principal ideals of T") {
  const PrincipalIdeals pa = principal_ideals(kTAdd, 1);
  CHECK(pa.left == std::vector<Elem>{1, 2});    // b+a = b, c+a = b
  CHECK(pa.right == std::vector<Elem>{1});
  CHECK(pa.two_sided == std::vector<Elem>{1, 2});

  const PrincipalIdeals pu = principal_ideals(kTAdd, 0);
  CHECK(pu.left == std::vector<Elem>{0, 1, 2, 3});
  CHECK(pu.right == std::vector<Elem>{0, 1, 2, 3});
  CHECK(pu.two_sided == std::vector<Elem>{0, 1, 2, 3});

  const PrincipalIdeals p1 = principal_ideals(OpTable(1, {0}), 0);
  CHECK(p1.left == std::vector<Elem>{0});
  CHECK(p1.right == std::vector<Elem>{0});
  CHECK(p1.two_sided == std::vector<Elem>{0});

  CHECK_THROWS_AS(principal_ideals(kTAdd, 4), DomainError);
  CHECK_THROWS_AS(principal_ideals(kTAdd, -1), DomainError);
}

TEST_CASE("greens relations of T and L") {
  const GreensData g = greens_relations(kTAdd);
  CHECK(same_partition(g.l_classes, {{0, 3}, {1, 2}}));
  CHECK(same_partition(g.r_classes, {{0, 3}, {1}, {2}}));
  CHECK(same_partition(g.h_classes, {{0, 3}, {1}, {2}}));
  CHECK(same_partition(g.j_classes, {{0, 3}, {1, 2}}));
  CHECK(g.h_class[0] == g.h_class[3]);
  CHECK(g.h_class[1] != g.h_class[2]);

  const GreensData gl = greens_relations(kLAdd);
  CHECK(same_partition(gl.h_classes, {{0}, {1}}));
  CHECK(same_partition(gl.j_classes, {{0}, {1}}));

  CHECK_THROWS_AS(greens_relations(OpTable(2, {1, 0, 0, 0})), AxiomError);
}

TEST_CASE("group H-classes") {
  CHECK(is_group_h_class(kTAdd, std::vector<Elem>{0, 3}));  // {u,c} = Z2
  CHECK(is_group_h_class(kTAdd, std::vector<Elem>{1}));
  CHECK_FALSE(is_group_h_class(kNull2, std::vector<Elem>{1}));  // 1o1 = 0
  // {u, a} is not an H-class of (T,+)
  CHECK_THROWS_AS(is_group_h_class(kTAdd, std::vector<Elem>{0, 1}),
                  DomainError);
}

TEST_CASE("regularity predicates, frozen examples") {
  CHECK(is_regular_semigroup(kTLeftZero).holds);
  CHECK(is_regular_semigroup(matrix_ring({2}).mul()).holds);
  const PredicateResult nr = is_regular_semigroup(kNull2);
  CHECK_FALSE(nr.holds);
  CHECK(nr.witness == std::vector<Elem>{1});

  // left-zero idempotents never commute on two or more elements
  const PredicateResult inv = is_inverse_semigroup(kTLeftZero);
  CHECK_FALSE(inv.holds);
  CHECK(inv.witness == std::vector<Elem>{0, 1});
  CHECK(is_inverse_semigroup(z4()).holds);
  CHECK(is_inverse_semigroup(kLAdd).holds);

  CHECK(is_completely_regular_semigroup(kTAdd).holds);
  CHECK(is_completely_regular_semigroup(kTLeftZero).holds);  // band: x = a
  CHECK_FALSE(is_completely_regular_semigroup(kNull2).holds);

  CHECK_FALSE(is_clifford_semigroup(kTLeftZero).holds);
  CHECK(is_clifford_semigroup(z4()).holds);
  CHECK(is_clifford_semigroup(kLAdd).holds);
}

TEST_CASE("inverse fast path equals the unique-inverse oracle, order <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const OpTable& t : oracles::brute_force_semigroups(n))
      CHECK(is_inverse_semigroup(t).holds == oracles::unique_inner_inverse(t));
}

TEST_CASE("complete regularity equals the all-H-groups route, order <= 3") {
  for (int n = 1; n <= 3; ++n)
    for (const OpTable& t : oracles::brute_force_semigroups(n))
      CHECK(is_completely_regular_semigroup(t).holds ==
            oracles::all_h_classes_are_groups(t));
}

TEST_CASE("random semigroups: partitions agree with the pairwise oracle") {
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const OpTable t = random_semigroup(n, rng);
    const GreensData g = greens_relations(t);
    std::vector<oracles::NaiveIdeals> ide;
    for (Elem a = 0; a < n; ++a) ide.push_back(oracles::naive_ideals(t, a));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        CHECK((g.l_class[a] == g.l_class[b]) == (ide[a].left == ide[b].left));
        CHECK((g.r_class[a] == g.r_class[b]) == (ide[a].right == ide[b].right));
        CHECK((g.j_class[a] == g.j_class[b]) ==
              (ide[a].two_sided == ide[b].two_sided));
        // H is the common refinement of L and R
        CHECK((g.h_class[a] == g.h_class[b]) ==
              (g.l_class[a] == g.l_class[b] && g.r_class[a] == g.r_class[b]));
      }
    // every H-class containing an idempotent is a group
    for (const std::vector<Elem>& cls : g.h_classes) {
      bool has_idem = false;
      for (Elem e : cls) has_idem = has_idem || t(e, e) == e;
      if (has_idem) CHECK(forms_group(t, cls));
    }
  }
}
