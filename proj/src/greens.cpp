#include "snrkit/greens.hpp"

#include <algorithm>
#include <map>

namespace snrkit {

namespace {

// Characteristic vectors keep the closure loops branch-light; orders stay in
// the hundreds, so plain byte vectors beat bitset juggling here.
std::vector<char> left_ideal_mask(const OpTable& t, Elem a) {
  const int n = t.order();
  std::vector<char> in(n, 0);
  in[a] = 1;
  for (Elem s = 0; s < n; ++s) in[t(s, a)] = 1;
  return in;
}

std::vector<char> right_ideal_mask(const OpTable& t, Elem a) {
  const int n = t.order();
  std::vector<char> in(n, 0);
  in[a] = 1;
  for (Elem s = 0; s < n; ++s) in[t(a, s)] = 1;
  return in;
}

std::vector<char> two_sided_mask(const OpTable& t, Elem a) {
  const int n = t.order();
  std::vector<char> in(n, 0);
  std::vector<Elem> work{a};
  in[a] = 1;
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    for (Elem s = 0; s < n; ++s) {
      for (Elem y : {t(s, x), t(x, s)}) {
        if (!in[y]) {
          in[y] = 1;
          work.push_back(y);
        }
      }
    }
  }
  return in;
}

std::vector<Elem> mask_to_sorted(const std::vector<char>& mask) {
  std::vector<Elem> out;
  for (Elem i = 0; i < static_cast<Elem>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

// Assigns class ids in order of least element index.
template <typename Key>
void assign_classes(const std::vector<Key>& keys, std::vector<int>& ids,
                    std::vector<std::vector<Elem>>& classes) {
  const int n = static_cast<int>(keys.size());
  std::map<Key, int> seen;
  ids.assign(n, -1);
  classes.clear();
  for (Elem a = 0; a < n; ++a) {
    auto [it, inserted] = seen.emplace(keys[a], static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    ids[a] = it->second;
    classes[it->second].push_back(a);
  }
}

}  // namespace

PrincipalIdeals principal_ideals(const OpTable& t, Elem a) {
  if (a < 0 || a >= t.order()) throw DomainError("element index out of range");
  return {mask_to_sorted(left_ideal_mask(t, a)),
          mask_to_sorted(right_ideal_mask(t, a)),
          mask_to_sorted(two_sided_mask(t, a))};
}

GreensData greens_relations(const OpTable& t) {
  if (auto chk = is_associative(t); !chk)
    throw AxiomError("table is not associative", *chk.witness);
  const int n = t.order();
  GreensData g;
  g.order = n;
  std::vector<std::vector<char>> lv(n), rv(n), jv(n);
  for (Elem a = 0; a < n; ++a) {
    lv[a] = left_ideal_mask(t, a);
    rv[a] = right_ideal_mask(t, a);
    jv[a] = two_sided_mask(t, a);
  }
  assign_classes(lv, g.l_class, g.l_classes);
  assign_classes(rv, g.r_class, g.r_classes);
  assign_classes(jv, g.j_class, g.j_classes);
  std::vector<std::pair<int, int>> hk(n);
  for (Elem a = 0; a < n; ++a) hk[a] = {g.l_class[a], g.r_class[a]};
  assign_classes(hk, g.h_class, g.h_classes);
  return g;
}

bool forms_group(const OpTable& t, std::span<const Elem> elements) {
  const int n = t.order();
  std::vector<char> in(n, 0);
  for (Elem x : elements) {
    if (x < 0 || x >= n) throw DomainError("element index out of range");
    in[x] = 1;
  }
  for (Elem x : elements)
    for (Elem y : elements)
      if (!in[t(x, y)]) return false;
  Elem ident = -1;
  for (Elem e : elements) {
    bool ok = true;
    for (Elem x : elements)
      if (t(e, x) != x || t(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) {
      ident = e;
      break;
    }
  }
  if (ident < 0) return false;
  for (Elem x : elements) {
    bool has = false;
    for (Elem y : elements)
      if (t(x, y) == ident && t(y, x) == ident) {
        has = true;
        break;
      }
    if (!has) return false;
  }
  return true;
}

bool is_group_h_class(const OpTable& t, std::span<const Elem> h_class) {
  if (h_class.empty()) throw DomainError("empty class");
  const GreensData g = greens_relations(t);
  std::vector<Elem> given(h_class.begin(), h_class.end());
  std::sort(given.begin(), given.end());
  if (given != g.h_class_of(given.front()))
    throw DomainError("input is not an H-class of the table");
  return forms_group(t, given);
}

PredicateResult is_regular_semigroup(const OpTable& t) {
  const int n = t.order();
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem x = 0; x < n && !found; ++x) found = t(t(a, x), a) == a;
    if (!found) return {false, {a}};
  }
  return {};
}

namespace {

std::optional<std::pair<Elem, Elem>> noncommuting_idempotents(
    const OpTable& t) {
  const std::vector<Elem> es = idempotents(t);
  for (Elem e : es)
    for (Elem f : es)
      if (t(e, f) != t(f, e)) return std::make_pair(e, f);
  return std::nullopt;
}

}  // namespace

PredicateResult is_inverse_semigroup(const OpTable& t) {
  // Commuting-idempotents characterization: the O(n^2 |E|^2) fast path.  The
  // unique-inner-inverse definition is kept as a test oracle.
  if (auto reg = is_regular_semigroup(t); !reg) return reg;
  if (auto p = noncommuting_idempotents(t)) return {false, {p->first, p->second}};
  return {};
}

PredicateResult is_completely_regular_semigroup(const OpTable& t) {
  const int n = t.order();
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem x = 0; x < n && !found; ++x)
      found = t(t(a, x), a) == a && t(a, x) == t(x, a);
    if (!found) return {false, {a}};
  }
  return {};
}

PredicateResult is_clifford_semigroup(const OpTable& t) {
  if (auto cr = is_completely_regular_semigroup(t); !cr) return cr;
  if (auto p = noncommuting_idempotents(t)) return {false, {p->first, p->second}};
  return {};
}

}  // namespace snrkit
