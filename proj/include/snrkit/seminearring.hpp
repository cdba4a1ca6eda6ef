#ifndef SNRKIT_SEMINEARRING_HPP
#define SNRKIT_SEMINEARRING_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snrkit/greens.hpp"
#include "snrkit/op_table.hpp"

namespace snrkit {

class FiniteSeminearring;

namespace detail {
// Constructs without running the axiom scans.  Only for structurally proven
// constructions (products, closed substructures, modular matrix arithmetic);
// user input must go through make_seminearring.
FiniteSeminearring make_unchecked(OpTable add, OpTable mul,
                                  std::vector<std::string> names);
}  // namespace detail

// Carrier [0, n) with two associative tables where multiplication
// right-distributes over addition: (a+b)c = ac + bc.
class FiniteSeminearring {
 public:
  // Validates both associativity axioms and right distributivity; throws
  // AxiomError with the lexicographically first violating triple.
  FiniteSeminearring(OpTable add, OpTable mul,
                     std::vector<std::string> names = {});

  int order() const noexcept { return add_.order(); }
  const OpTable& add() const noexcept { return add_; }
  const OpTable& mul() const noexcept { return mul_; }

  Elem plus(Elem a, Elem b) const noexcept { return add_(a, b); }
  Elem times(Elem a, Elem b) const noexcept { return mul_(a, b); }

  // Empty when the carrier is unnamed.
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name_of(Elem a) const;

 private:
  struct unchecked_tag {};
  FiniteSeminearring(unchecked_tag, OpTable add, OpTable mul,
                     std::vector<std::string> names);
  friend FiniteSeminearring detail::make_unchecked(OpTable, OpTable,
                                                   std::vector<std::string>);

  OpTable add_;
  OpTable mul_;
  std::vector<std::string> names_;
};

FiniteSeminearring make_seminearring(OpTable add, OpTable mul,
                                     std::vector<std::string> names = {});

enum class Flag {
  additively_regular,
  additively_inverse,
  additively_completely_regular,
  additively_clifford,
  multiplicatively_regular,
  multiplicatively_inverse,
  multiplicatively_completely_regular,
  multiplicatively_clifford,
  glcr,
  grcr,
  lcr,
  rcr,
};

inline constexpr std::array<Flag, 12> kAllFlags = {
    Flag::additively_regular,
    Flag::additively_inverse,
    Flag::additively_completely_regular,
    Flag::additively_clifford,
    Flag::multiplicatively_regular,
    Flag::multiplicatively_inverse,
    Flag::multiplicatively_completely_regular,
    Flag::multiplicatively_clifford,
    Flag::glcr,
    Flag::grcr,
    Flag::lcr,
    Flag::rcr,
};

std::string_view to_string(Flag flag);
std::optional<Flag> flag_from_string(std::string_view name);

struct Classification {
  bool additively_regular = false;
  bool additively_inverse = false;
  bool additively_completely_regular = false;
  bool additively_clifford = false;
  bool multiplicatively_regular = false;
  bool multiplicatively_inverse = false;
  bool multiplicatively_completely_regular = false;
  bool multiplicatively_clifford = false;
  bool glcr = false;
  bool grcr = false;
  bool lcr = false;
  bool rcr = false;

  // flag -> violating tuple, present exactly for the false flags.
  std::map<Flag, std::vector<Elem>> witnesses;

  bool flag(Flag f) const;
};

// E+(S): additive idempotents, sorted.
std::vector<Elem> additive_idempotents(const FiniteSeminearring& s);

// { x : a+x+a = a and a+x = x+a }; may be empty or have several members.
std::vector<Elem> weak_commuting_inverses(const FiniteSeminearring& s, Elem a);

// The unique additive idempotent of H+_a.  Throws DomainError when (H+_a, +)
// is not a group.
Elem class_zero(const FiniteSeminearring& s, Elem a);
Elem class_zero(const FiniteSeminearring& s, Elem a, const GreensData& add_greens);

// a*: the additive group inverse of a in (H+_a, +), checked against the
// defining identities a + a* + a = a, a + a* = a* + a, (a + a*)a = a + a*,
// with uniqueness asserted by scanning H+_a.  Throws DomainError when the
// seminearring is not GLCR; throws SnrError loudly if an identity fails.
Elem star(const FiniteSeminearring& s, Elem a);
Elem star(const FiniteSeminearring& s, Elem a, const GreensData& add_greens);

// Additively completely regular and every a has an x in
// weak_commuting_inverses(a) with (a+x)a = a+x.  Witness: least failing a.
PredicateResult is_glcr(const FiniteSeminearring& s);

// Mirror condition a(a+x) = a+x.
PredicateResult is_grcr(const FiniteSeminearring& s);

// is_glcr plus: be and eb share a J+ class for every b in S, e in E+(S).
// Witness: failing a, or the least failing pair (b, e).
PredicateResult is_lcr(const FiniteSeminearring& s);
PredicateResult is_lcr(const FiniteSeminearring& s, const GreensData& add_greens);

PredicateResult is_rcr(const FiniteSeminearring& s);
PredicateResult is_rcr(const FiniteSeminearring& s, const GreensData& add_greens);

Classification classify(const FiniteSeminearring& s);

}  // namespace snrkit

#endif  // SNRKIT_SEMINEARRING_HPP
