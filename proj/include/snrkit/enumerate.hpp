#ifndef SNRKIT_ENUMERATE_HPP
#define SNRKIT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "snrkit/seminearring.hpp"

namespace snrkit {

struct EnumSpec {
  int order = 1;  // 1..5
  bool up_to_iso = false;
  std::vector<Flag> filters;
  std::optional<std::uint64_t> limit;  // max results
};

// Every associative table on n labeled elements, in lexicographic table
// order.  The callback returns false to stop early.  n <= 5.
void enumerate_semigroups(int n,
                          const std::function<bool(const OpTable&)>& emit);

std::vector<OpTable> all_semigroups(int n);

// All (add, mul) pairs with both tables associative and right
// distributivity holding, filtered by spec.filters, optionally deduplicated
// by canonical form, in lexicographic (add, mul) order.
void enumerate_seminearrings(
    const EnumSpec& spec,
    const std::function<bool(const FiniteSeminearring&)>& emit);

std::uint64_t count_seminearrings(const EnumSpec& spec);

// Image of s under the simultaneous relabeling i -> perm[i].
FiniteSeminearring relabel(const FiniteSeminearring& s,
                           std::span<const Elem> perm);

// Lexicographically least byte serialization of (add, mul) over all n!
// simultaneous relabelings; equal sequences iff isomorphic.  Full n! scan,
// so n <= 8.
std::string canonical_form(const FiniteSeminearring& s);

using SnrPredicate = std::function<bool(const FiniteSeminearring&)>;

// Structures (seeds first, then the enumeration stream) satisfying the
// hypothesis but not the conclusion, up to spec.limit results.
std::vector<FiniteSeminearring> search_counterexamples(
    const EnumSpec& spec, const SnrPredicate& hypothesis,
    const SnrPredicate& conclusion,
    const std::vector<FiniteSeminearring>& seeds = {});

// Randomized-backtracking samplers.  Non-uniform over valid tables; useful
// for property sweeps at orders past exhaustive reach.
OpTable random_semigroup(int n, std::mt19937_64& rng);
FiniteSeminearring random_seminearring(int n, std::mt19937_64& rng);

}  // namespace snrkit

#endif  // SNRKIT_ENUMERATE_HPP
