#include "snrkit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "snrkit/greens.hpp"

namespace snrkit {

namespace {

constexpr Elem kUnset = -1;

// Incremental associativity: after cell (i, j) is filled, only triples that
// read that cell can newly fail.  Every triple is examined exactly when the
// last of the four products it needs lands, so by induction the filled part
// of the table is always associative.
bool assoc_ok_after(const std::vector<Elem>& t, int n, Elem i, Elem j) {
  const auto get = [&t, n](Elem a, Elem b) {
    return t[static_cast<std::size_t>(a) * n + b];
  };
  const Elem v = get(i, j);
  // (x, y) = (i, j): triples (i, j, z)
  for (Elem z = 0; z < n; ++z) {
    const Elem jz = get(j, z);
    if (jz == kUnset) continue;
    const Elem lhs = get(v, z);
    const Elem rhs = get(i, jz);
    if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
  }
  // (y, z) = (i, j): triples (x, i, j)
  for (Elem x = 0; x < n; ++x) {
    const Elem xi = get(x, i);
    if (xi == kUnset) continue;
    const Elem lhs = get(xi, j);
    const Elem rhs = get(x, v);
    if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = get(x, y);
      if (xy == i) {
        // (xy, z) = (i, j): triple (x, y, j) with lhs already v
        const Elem yj = get(y, j);
        if (yj != kUnset) {
          const Elem rhs = get(x, yj);
          if (rhs != kUnset && rhs != v) return false;
        }
      }
      if (xy == j) {
        // (x', y'z') = (i, j): triple (i, x, y) with rhs already v
        const Elem ix = get(i, x);
        if (ix != kUnset) {
          const Elem lhs = get(ix, y);
          if (lhs != kUnset && lhs != v) return false;
        }
      }
    }
  return true;
}

// Incremental right distributivity of a partial mul over a complete add:
// (x+y)z = xz + yz, checked for the triples whose products read cell (i, j).
bool rdist_ok_after(const std::vector<Elem>& mul, const OpTable& add, int n,
                    Elem i, Elem j) {
  const auto get = [&mul, n](Elem a, Elem b) {
    return mul[static_cast<std::size_t>(a) * n + b];
  };
  const Elem v = get(i, j);
  // (x, z) = (i, j): triples (i, y, j)
  for (Elem y = 0; y < n; ++y) {
    const Elem sk = get(add(i, y), j);
    const Elem yk = get(y, j);
    if (sk != kUnset && yk != kUnset && sk != add(v, yk)) return false;
  }
  // (y, z) = (i, j): triples (x, i, j)
  for (Elem x = 0; x < n; ++x) {
    const Elem sk = get(add(x, i), j);
    const Elem xk = get(x, j);
    if (sk != kUnset && xk != kUnset && sk != add(xk, v)) return false;
  }
  // (x+y, z) = (i, j): triples (x, y, j) with x + y = i
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (add(x, y) == i) {
        const Elem xk = get(x, j);
        const Elem yk = get(y, j);
        if (xk != kUnset && yk != kUnset && v != add(xk, yk)) return false;
      }
  return true;
}

// prune(table, i, j) sees the table right after cell (i, j) was filled.
using CellPrune = std::function<bool(const std::vector<Elem>&, Elem, Elem)>;

bool backtrack_tables(std::vector<Elem>& t, int n, std::size_t pos,
                      const CellPrune& prune, const std::function<bool()>& leaf,
                      std::span<const Elem> value_order) {
  if (pos == t.size()) return leaf();
  const Elem i = static_cast<Elem>(pos) / n;
  const Elem j = static_cast<Elem>(pos) % n;
  for (Elem v : value_order) {
    t[pos] = v;
    if (prune(t, i, j) &&
        !backtrack_tables(t, n, pos + 1, prune, leaf, value_order))
      return false;
    t[pos] = kUnset;
  }
  return true;
}

bool flag_holds(const FiniteSeminearring& s, Flag f) {
  switch (f) {
    case Flag::additively_regular: return is_regular_semigroup(s.add()).holds;
    case Flag::additively_inverse: return is_inverse_semigroup(s.add()).holds;
    case Flag::additively_completely_regular:
      return is_completely_regular_semigroup(s.add()).holds;
    case Flag::additively_clifford: return is_clifford_semigroup(s.add()).holds;
    case Flag::multiplicatively_regular:
      return is_regular_semigroup(s.mul()).holds;
    case Flag::multiplicatively_inverse:
      return is_inverse_semigroup(s.mul()).holds;
    case Flag::multiplicatively_completely_regular:
      return is_completely_regular_semigroup(s.mul()).holds;
    case Flag::multiplicatively_clifford:
      return is_clifford_semigroup(s.mul()).holds;
    case Flag::glcr: return is_glcr(s).holds;
    case Flag::grcr: return is_grcr(s).holds;
    case Flag::lcr: return is_lcr(s).holds;
    case Flag::rcr: return is_rcr(s).holds;
  }
  return false;
}

void check_order(int n) {
  if (n < 1 || n > 5)
    throw DomainError("exhaustive enumeration supports orders 1..5");
}

}  // namespace

void enumerate_semigroups(int n,
                          const std::function<bool(const OpTable&)>& emit) {
  check_order(n);
  std::vector<Elem> t(static_cast<std::size_t>(n) * n, kUnset);
  std::vector<Elem> values(n);
  std::iota(values.begin(), values.end(), 0);
  backtrack_tables(
      t, n, 0,
      [n](const std::vector<Elem>& p, Elem i, Elem j) {
        return assoc_ok_after(p, n, i, j);
      },
      [&]() { return emit(OpTable(n, t)); }, values);
}

std::vector<OpTable> all_semigroups(int n) {
  std::vector<OpTable> out;
  enumerate_semigroups(n, [&out](const OpTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

void enumerate_seminearrings(
    const EnumSpec& spec,
    const std::function<bool(const FiniteSeminearring&)>& emit) {
  check_order(spec.order);
  const int n = spec.order;
  std::uint64_t emitted = 0;
  std::set<std::string> seen;
  std::vector<Elem> values(n);
  std::iota(values.begin(), values.end(), 0);
  bool keep_going = true;
  enumerate_semigroups(n, [&](const OpTable& add) {
    std::vector<Elem> mul(static_cast<std::size_t>(n) * n, kUnset);
    const auto prune = [&](const std::vector<Elem>& p, Elem i, Elem j) {
      return assoc_ok_after(p, n, i, j) && rdist_ok_after(p, add, n, i, j);
    };
    const auto leaf = [&]() {
      // The final pruning pass saw a complete table, so the axioms hold;
      // run the validating constructor anyway so every emitted structure
      // carries the same guarantee as user input.
      FiniteSeminearring s = make_seminearring(add, OpTable(n, mul));
      for (Flag f : spec.filters)
        if (!flag_holds(s, f)) return true;
      if (spec.up_to_iso && !seen.insert(canonical_form(s)).second)
        return true;
      if (!emit(s)) {
        keep_going = false;
        return false;
      }
      ++emitted;
      if (spec.limit && emitted >= *spec.limit) {
        keep_going = false;
        return false;
      }
      return true;
    };
    backtrack_tables(mul, n, 0, prune, leaf, values);
    return keep_going;
  });
}

std::uint64_t count_seminearrings(const EnumSpec& spec) {
  std::uint64_t count = 0;
  enumerate_seminearrings(spec, [&count](const FiniteSeminearring&) {
    ++count;
    return true;
  });
  return count;
}

FiniteSeminearring relabel(const FiniteSeminearring& s,
                           std::span<const Elem> perm) {
  const int n = s.order();
  if (static_cast<int>(perm.size()) != n)
    throw DomainError("permutation size does not match the order");
  std::vector<char> seen(n, 0);
  for (Elem p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw DomainError("not a permutation of the carrier");
    seen[p] = 1;
  }
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      add[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[s.plus(i, j)];
      mul[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[s.times(i, j)];
    }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    names.resize(n);
    for (Elem i = 0; i < n; ++i) names[perm[i]] = s.names()[i];
  }
  return detail::make_unchecked(OpTable(n, std::move(add)),
                                OpTable(n, std::move(mul)), std::move(names));
}

std::string canonical_form(const FiniteSeminearring& s) {
  const int n = s.order();
  if (n > 8)
    throw DomainError("canonical_form scans all n! relabelings; order > 8 unsupported");
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(1 + 2 * static_cast<std::size_t>(n) * n, '\0');
  cur[0] = static_cast<char>(n);
  do {
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) {
        const std::size_t cell =
            static_cast<std::size_t>(perm[i]) * n + perm[j];
        cur[1 + cell] = static_cast<char>(perm[s.plus(i, j)]);
        cur[1 + static_cast<std::size_t>(n) * n + cell] =
            static_cast<char>(perm[s.times(i, j)]);
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteSeminearring> search_counterexamples(
    const EnumSpec& spec, const SnrPredicate& hypothesis,
    const SnrPredicate& conclusion,
    const std::vector<FiniteSeminearring>& seeds) {
  std::vector<FiniteSeminearring> out;
  const auto limit_hit = [&]() {
    return spec.limit && out.size() >= *spec.limit;
  };
  for (const FiniteSeminearring& s : seeds) {
    if (limit_hit()) return out;
    if (hypothesis(s) && !conclusion(s)) out.push_back(s);
  }
  if (limit_hit()) return out;
  EnumSpec inner = spec;
  inner.limit.reset();  // the limit caps counterexamples, not the stream
  enumerate_seminearrings(inner, [&](const FiniteSeminearring& s) {
    if (hypothesis(s) && !conclusion(s)) out.push_back(s);
    return !limit_hit();
  });
  return out;
}

namespace {

// Randomized DFS with a node budget.  A bad early commitment can open an
// exponential refutation subtree, so the search restarts with fresh random
// choices instead of proving the dead end exhaustively.
template <typename Prune>
std::vector<Elem> bounded_random_table(int n, const Prune& prune,
                                       std::mt19937_64& rng) {
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<Elem> values(n);
  std::iota(values.begin(), values.end(), 0);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<Elem> t(cells, kUnset);
    long budget = 20000;
    bool found = false;
    const auto rec = [&](auto&& self, std::size_t pos) -> bool {
      if (pos == cells) {
        found = true;
        return false;
      }
      const Elem i = static_cast<Elem>(pos) / n;
      const Elem j = static_cast<Elem>(pos) % n;
      std::vector<Elem> order = values;
      std::shuffle(order.begin(), order.end(), rng);
      for (Elem v : order) {
        if (--budget < 0) return false;
        t[pos] = v;
        if (prune(t, i, j) && !self(self, pos + 1)) return false;
        t[pos] = kUnset;
      }
      return true;
    };
    rec(rec, 0);
    if (found) return t;
  }
  throw SnrError("randomized table search exhausted its restart budget");
}

}  // namespace

OpTable random_semigroup(int n, std::mt19937_64& rng) {
  if (n < 1 || n > 6)
    throw DomainError("random_semigroup supports orders 1..6");
  return OpTable(
      n, bounded_random_table(
             n,
             [n](const std::vector<Elem>& p, Elem i, Elem j) {
               return assoc_ok_after(p, n, i, j);
             },
             rng));
}

FiniteSeminearring random_seminearring(int n, std::mt19937_64& rng) {
  const OpTable add = random_semigroup(n, rng);
  const std::vector<Elem> mul = bounded_random_table(
      n,
      [&add, n](const std::vector<Elem>& p, Elem i, Elem j) {
        return assoc_ok_after(p, n, i, j) && rdist_ok_after(p, add, n, i, j);
      },
      rng);
  return make_seminearring(add, OpTable(n, mul));
}

}  // namespace snrkit
