#ifndef SNRKIT_DECOMPOSE_HPP
#define SNRKIT_DECOMPOSE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snrkit/seminearring.hpp"

namespace snrkit {

struct ComponentFlags {
  bool is_near_ring = false;
  bool regular = false;
  bool inverse = false;
  bool completely_regular = false;
  bool clifford = false;
  bool zero_symmetric = false;
};

struct FlagWitness {
  std::string flag;            // name of the first failing flag
  std::vector<Elem> elements;  // parent element indices
};

// One H+-class of the parent, with the operations restricted to a local
// reindexing when the class is a near-ring.
struct Component {
  std::vector<Elem> elements;  // parent indices, ascending
  std::optional<OpTable> add;  // local tables, present iff is_near_ring
  std::optional<OpTable> mul;
  std::optional<Elem> zero;    // local index of the additive identity
  ComponentFlags flags;
  std::optional<FlagWitness> failure_witness;
};

// Components in order of least parent element; they cover the carrier and
// are pairwise disjoint.  Non-near-ring classes are reported via flags.
std::vector<Component> h_plus_decomposition(const FiniteSeminearring& s);
std::vector<Component> h_plus_decomposition(const FiniteSeminearring& s,
                                            const GreensData& add_greens);

// Closed under both operations and an additive group.  Witness: the first
// non-closed pair, or the element without an additive inverse.
PredicateResult is_near_ring(const FiniteSeminearring& s,
                             std::span<const Elem> cls);

// Throws DomainError when the class is not a near-ring.  Checks both n.0 = 0
// and 0.n = 0 for zero symmetry and asserts the forced left-zero law 0.n = 0
// never fails.
ComponentFlags near_ring_flags(const FiniteSeminearring& s,
                               std::span<const Elem> cls);

// Brute-force cross-validation oracle for the union reading: every partition
// of the carrier whose blocks are all near-rings.  Order <= 6 only.
std::vector<std::vector<std::vector<Elem>>> near_ring_partitions(
    const FiniteSeminearring& s);

}  // namespace snrkit

#endif  // SNRKIT_DECOMPOSE_HPP
