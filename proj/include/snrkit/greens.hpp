#ifndef SNRKIT_GREENS_HPP
#define SNRKIT_GREENS_HPP

#include <span>
#include <vector>

#include "snrkit/op_table.hpp"

namespace snrkit {

struct PrincipalIdeals {
  std::vector<Elem> left;       // {a} u {s o a}
  std::vector<Elem> right;      // {a} u {a o s}
  std::vector<Elem> two_sided;  // closure of {a} under both translations

  bool operator==(const PrincipalIdeals&) const = default;
};

// Requires an associative table (not re-checked here).
PrincipalIdeals principal_ideals(const OpTable& t, Elem a);

// The four Green's partitions of a finite semigroup.  Class ids are assigned
// in order of least member, so reports are deterministic.
struct GreensData {
  int order = 0;
  std::vector<int> l_class, r_class, h_class, j_class;  // element -> class id
  std::vector<std::vector<Elem>> l_classes, r_classes, h_classes, j_classes;

  const std::vector<Elem>& h_class_of(Elem a) const { return h_classes[h_class[a]]; }
};

// Throws AxiomError if t is not associative.
GreensData greens_relations(const OpTable& t);

struct PredicateResult {
  bool holds = true;
  std::vector<Elem> witness;

  explicit operator bool() const noexcept { return holds; }
};

// True iff the subset is closed under o and forms a group.  No H-class
// validation; used on arbitrary subsets.
bool forms_group(const OpTable& t, std::span<const Elem> elements);

// Contract form: throws DomainError unless `h_class` is exactly an H-class
// of t.
bool is_group_h_class(const OpTable& t, std::span<const Elem> h_class);

// Every a has some x with axa = a; witness = least a without.
PredicateResult is_regular_semigroup(const OpTable& t);

// Regular with commuting idempotents.  Witness: the non-regular element, or
// the least non-commuting idempotent pair.
PredicateResult is_inverse_semigroup(const OpTable& t);

// Every a has some x with axa = a and ax = xa; witness = least a without.
PredicateResult is_completely_regular_semigroup(const OpTable& t);

// Completely regular with commuting idempotents.
PredicateResult is_clifford_semigroup(const OpTable& t);

}  // namespace snrkit

#endif  // SNRKIT_GREENS_HPP
