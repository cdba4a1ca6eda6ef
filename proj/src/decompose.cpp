#include "snrkit/decompose.hpp"

#include <algorithm>

namespace snrkit {

namespace {

PredicateResult near_ring_check(const FiniteSeminearring& s,
                                std::span<const Elem> cls) {
  const OpTable& add = s.add();
  const OpTable& mul = s.mul();
  std::vector<char> in(s.order(), 0);
  for (Elem x : cls) {
    if (x < 0 || x >= s.order())
      throw DomainError("class element out of range");
    in[x] = 1;
  }
  for (Elem x : cls)
    for (Elem y : cls) {
      if (!in[add(x, y)]) return {false, {x, y}};
      if (!in[mul(x, y)]) return {false, {x, y}};
    }
  // (cls, +) must be a group; associativity and distributivity inherit.
  Elem ident = -1;
  for (Elem e : cls) {
    bool ok = true;
    for (Elem x : cls)
      if (add(e, x) != x || add(x, e) != x) {
        ok = false;
        break;
      }
    if (ok) {
      ident = e;
      break;
    }
  }
  if (ident < 0) return {false, {}};
  for (Elem x : cls) {
    bool has = false;
    for (Elem y : cls)
      if (add(x, y) == ident && add(y, x) == ident) {
        has = true;
        break;
      }
    if (!has) return {false, {x}};
  }
  return {};
}

OpTable restrict_table(const OpTable& t, std::span<const Elem> cls,
                       const std::vector<int>& local) {
  const int k = static_cast<int>(cls.size());
  std::vector<Elem> entries(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      entries[static_cast<std::size_t>(i) * k + j] = local[t(cls[i], cls[j])];
  return OpTable(k, std::move(entries));
}

Component analyze_class(const FiniteSeminearring& s,
                        std::vector<Elem> elements) {
  Component comp;
  comp.elements = std::move(elements);
  const auto set_witness = [&comp](std::string flag, std::vector<Elem> elems) {
    if (!comp.failure_witness)
      comp.failure_witness = FlagWitness{std::move(flag), std::move(elems)};
  };

  const PredicateResult nr = near_ring_check(s, comp.elements);
  comp.flags.is_near_ring = nr.holds;
  if (!nr.holds) {
    set_witness("is_near_ring", nr.witness);
    return comp;
  }

  std::vector<int> local(s.order(), -1);
  for (int i = 0; i < static_cast<int>(comp.elements.size()); ++i)
    local[comp.elements[i]] = i;
  comp.add = restrict_table(s.add(), comp.elements, local);
  comp.mul = restrict_table(s.mul(), comp.elements, local);

  const int k = comp.add->order();
  for (Elem i = 0; i < k; ++i)
    if ((*comp.add)(i, i) == i) {
      bool ident = true;
      for (Elem x = 0; x < k && ident; ++x)
        ident = (*comp.add)(i, x) == x && (*comp.add)(x, i) == x;
      if (ident) {
        comp.zero = i;
        break;
      }
    }

  if (!comp.zero)
    throw SnrError("near-ring class lost its additive identity; tables are corrupt");

  const auto lift = [&comp](const std::vector<Elem>& local_witness) {
    std::vector<Elem> out;
    out.reserve(local_witness.size());
    for (Elem x : local_witness) out.push_back(comp.elements[x]);
    return out;
  };

  const PredicateResult reg = is_regular_semigroup(*comp.mul);
  comp.flags.regular = reg.holds;
  if (!reg.holds) set_witness("regular", lift(reg.witness));
  const PredicateResult inv = is_inverse_semigroup(*comp.mul);
  comp.flags.inverse = inv.holds;
  if (!inv.holds) set_witness("inverse", lift(inv.witness));
  const PredicateResult cr = is_completely_regular_semigroup(*comp.mul);
  comp.flags.completely_regular = cr.holds;
  if (!cr.holds) set_witness("completely_regular", lift(cr.witness));
  const PredicateResult cl = is_clifford_semigroup(*comp.mul);
  comp.flags.clifford = cl.holds;
  if (!cl.holds) set_witness("clifford", lift(cl.witness));

  // Zero symmetry against the parent operation.  0.n = 0 is forced by right
  // distributivity in a group, so a failure there means corrupt tables.
  const Elem z = comp.elements[*comp.zero];
  comp.flags.zero_symmetric = true;
  for (Elem x : comp.elements) {
    if (s.times(z, x) != z)
      throw SnrError("left-zero law 0.n = 0 failed inside a near-ring class; "
                     "tables are corrupt");
    if (s.times(x, z) != z) {
      comp.flags.zero_symmetric = false;
      set_witness("zero_symmetric", {x});
      break;
    }
  }
  return comp;
}

}  // namespace

std::vector<Component> h_plus_decomposition(const FiniteSeminearring& s,
                                            const GreensData& add_greens) {
  std::vector<Component> out;
  out.reserve(add_greens.h_classes.size());
  for (const std::vector<Elem>& cls : add_greens.h_classes)
    out.push_back(analyze_class(s, cls));
  return out;
}

std::vector<Component> h_plus_decomposition(const FiniteSeminearring& s) {
  return h_plus_decomposition(s, greens_relations(s.add()));
}

PredicateResult is_near_ring(const FiniteSeminearring& s,
                             std::span<const Elem> cls) {
  return near_ring_check(s, cls);
}

ComponentFlags near_ring_flags(const FiniteSeminearring& s,
                               std::span<const Elem> cls) {
  if (auto nr = near_ring_check(s, cls); !nr)
    throw DomainError("class is not a near-ring");
  std::vector<Elem> elements(cls.begin(), cls.end());
  return analyze_class(s, std::move(elements)).flags;
}

std::vector<std::vector<std::vector<Elem>>> near_ring_partitions(
    const FiniteSeminearring& s) {
  const int n = s.order();
  if (n > 6)
    throw DomainError("near_ring_partitions is a brute-force oracle for order <= 6");
  std::vector<std::vector<std::vector<Elem>>> out;
  std::vector<std::vector<Elem>> blocks;
  // Restricted-growth enumeration: element k joins an existing block or
  // opens a new one, so each set partition appears exactly once.
  const auto rec = [&](auto&& self, Elem k) -> void {
    if (k == n) {
      for (const auto& b : blocks)
        if (!near_ring_check(s, b)) return;
      out.push_back(blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(k);
      self(self, k + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({k});
    self(self, k + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace snrkit
