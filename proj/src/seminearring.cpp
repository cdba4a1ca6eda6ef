#include "snrkit/seminearring.hpp"

#include <algorithm>
#include <sstream>

namespace snrkit {

namespace detail {

FiniteSeminearring make_unchecked(OpTable add, OpTable mul,
                                  std::vector<std::string> names) {
  return FiniteSeminearring(FiniteSeminearring::unchecked_tag{},
                            std::move(add), std::move(mul), std::move(names));
}

}  // namespace detail

FiniteSeminearring::FiniteSeminearring(OpTable add, OpTable mul,
                                       std::vector<std::string> names)
    : add_(std::move(add)), mul_(std::move(mul)), names_(std::move(names)) {
  if (add_.order() != mul_.order())
    throw DomainError("addition and multiplication tables differ in order");
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(order()))
    throw DomainError("element name list does not match the order");
  if (auto chk = is_associative(add_); !chk)
    throw AxiomError("addition is not associative", *chk.witness);
  if (auto chk = is_associative(mul_); !chk)
    throw AxiomError("multiplication is not associative", *chk.witness);
  if (auto chk = is_right_distributive(add_, mul_); !chk)
    throw AxiomError("right distributivity fails", *chk.witness);
}

FiniteSeminearring::FiniteSeminearring(unchecked_tag, OpTable add, OpTable mul,
                                       std::vector<std::string> names)
    : add_(std::move(add)), mul_(std::move(mul)), names_(std::move(names)) {}

std::string FiniteSeminearring::name_of(Elem a) const {
  if (a < 0 || a >= order()) throw DomainError("element index out of range");
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

FiniteSeminearring make_seminearring(OpTable add, OpTable mul,
                                     std::vector<std::string> names) {
  return FiniteSeminearring(std::move(add), std::move(mul), std::move(names));
}

std::string_view to_string(Flag flag) {
  switch (flag) {
    case Flag::additively_regular: return "additively_regular";
    case Flag::additively_inverse: return "additively_inverse";
    case Flag::additively_completely_regular:
      return "additively_completely_regular";
    case Flag::additively_clifford: return "additively_clifford";
    case Flag::multiplicatively_regular: return "multiplicatively_regular";
    case Flag::multiplicatively_inverse: return "multiplicatively_inverse";
    case Flag::multiplicatively_completely_regular:
      return "multiplicatively_completely_regular";
    case Flag::multiplicatively_clifford: return "multiplicatively_clifford";
    case Flag::glcr: return "glcr";
    case Flag::grcr: return "grcr";
    case Flag::lcr: return "lcr";
    case Flag::rcr: return "rcr";
  }
  return "?";
}

std::optional<Flag> flag_from_string(std::string_view name) {
  for (Flag f : kAllFlags)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

bool Classification::flag(Flag f) const {
  switch (f) {
    case Flag::additively_regular: return additively_regular;
    case Flag::additively_inverse: return additively_inverse;
    case Flag::additively_completely_regular:
      return additively_completely_regular;
    case Flag::additively_clifford: return additively_clifford;
    case Flag::multiplicatively_regular: return multiplicatively_regular;
    case Flag::multiplicatively_inverse: return multiplicatively_inverse;
    case Flag::multiplicatively_completely_regular:
      return multiplicatively_completely_regular;
    case Flag::multiplicatively_clifford: return multiplicatively_clifford;
    case Flag::glcr: return glcr;
    case Flag::grcr: return grcr;
    case Flag::lcr: return lcr;
    case Flag::rcr: return rcr;
  }
  return false;
}

std::vector<Elem> additive_idempotents(const FiniteSeminearring& s) {
  return idempotents(s.add());
}

std::vector<Elem> weak_commuting_inverses(const FiniteSeminearring& s,
                                          Elem a) {
  if (a < 0 || a >= s.order()) throw DomainError("element index out of range");
  const OpTable& add = s.add();
  std::vector<Elem> out;
  for (Elem x = 0; x < s.order(); ++x)
    if (add(add(a, x), a) == a && add(a, x) == add(x, a)) out.push_back(x);
  return out;
}

Elem class_zero(const FiniteSeminearring& s, Elem a,
                const GreensData& add_greens) {
  if (a < 0 || a >= s.order()) throw DomainError("element index out of range");
  const OpTable& add = s.add();
  Elem zero = -1;
  int count = 0;
  for (Elem e : add_greens.h_class_of(a))
    if (add(e, e) == e) {
      zero = e;
      ++count;
    }
  if (count != 1) {
    std::ostringstream msg;
    msg << "H+ class of element " << a
        << " is not a group (additive idempotents in class: " << count << ")";
    throw DomainError(msg.str());
  }
  return zero;
}

Elem class_zero(const FiniteSeminearring& s, Elem a) {
  return class_zero(s, a, greens_relations(s.add()));
}

Elem star(const FiniteSeminearring& s, Elem a, const GreensData& add_greens) {
  const OpTable& add = s.add();
  const OpTable& mul = s.mul();
  // Group inverse in (H+_a, +); uniqueness is structural, the identities are
  // then re-checked.
  const Elem zero = class_zero(s, a, add_greens);
  Elem inv = -1;
  for (Elem x : add_greens.h_class_of(a))
    if (add(a, x) == zero && add(x, a) == zero) {
      inv = x;
      break;
    }
  if (inv < 0)
    throw DomainError("no additive inverse in the H+ class; class is not a group");
  if (add(add(a, inv), a) != a || add(a, inv) != add(inv, a) ||
      mul(add(a, inv), a) != add(a, inv))
    throw SnrError(
        "star identities fail for element " + std::to_string(a) +
        "; the structure violates the GLCR star laws");
  int solutions = 0;
  for (Elem x : add_greens.h_class_of(a))
    if (add(add(a, x), a) == a && add(a, x) == add(x, a) &&
        mul(add(a, x), a) == add(a, x))
      ++solutions;
  if (solutions != 1)
    throw SnrError("star element is not unique in the H+ class of " +
                   std::to_string(a));
  return inv;
}

Elem star(const FiniteSeminearring& s, Elem a) {
  if (auto g = is_glcr(s); !g)
    throw DomainError("star requires a GLCR seminearring (witness element " +
                      std::to_string(g.witness.at(0)) + ")");
  return star(s, a, greens_relations(s.add()));
}

PredicateResult is_glcr(const FiniteSeminearring& s) {
  const OpTable& add = s.add();
  const OpTable& mul = s.mul();
  for (Elem a = 0; a < s.order(); ++a) {
    bool found = false;
    for (Elem x = 0; x < s.order() && !found; ++x) {
      if (add(add(a, x), a) != a || add(a, x) != add(x, a)) continue;
      found = mul(add(a, x), a) == add(a, x);
    }
    if (!found) return {false, {a}};
  }
  return {};
}

PredicateResult is_grcr(const FiniteSeminearring& s) {
  const OpTable& add = s.add();
  const OpTable& mul = s.mul();
  for (Elem a = 0; a < s.order(); ++a) {
    bool found = false;
    for (Elem x = 0; x < s.order() && !found; ++x) {
      if (add(add(a, x), a) != a || add(a, x) != add(x, a)) continue;
      found = mul(a, add(a, x)) == add(a, x);
    }
    if (!found) return {false, {a}};
  }
  return {};
}

namespace {

// Condition (ii) of the LCR/RCR definitions: be J+ eb for all b, e in E+.
PredicateResult j_condition(const FiniteSeminearring& s,
                            const GreensData& add_greens) {
  const OpTable& mul = s.mul();
  const std::vector<Elem> es = additive_idempotents(s);
  for (Elem b = 0; b < s.order(); ++b)
    for (Elem e : es)
      if (add_greens.j_class[mul(b, e)] != add_greens.j_class[mul(e, b)])
        return {false, {b, e}};
  return {};
}

}  // namespace

PredicateResult is_lcr(const FiniteSeminearring& s,
                       const GreensData& add_greens) {
  if (auto g = is_glcr(s); !g) return g;
  return j_condition(s, add_greens);
}

PredicateResult is_lcr(const FiniteSeminearring& s) {
  if (auto g = is_glcr(s); !g) return g;
  return j_condition(s, greens_relations(s.add()));
}

PredicateResult is_rcr(const FiniteSeminearring& s,
                       const GreensData& add_greens) {
  if (auto g = is_grcr(s); !g) return g;
  return j_condition(s, add_greens);
}

PredicateResult is_rcr(const FiniteSeminearring& s) {
  if (auto g = is_grcr(s); !g) return g;
  return j_condition(s, greens_relations(s.add()));
}

Classification classify(const FiniteSeminearring& s) {
  Classification c;
  const GreensData add_greens = greens_relations(s.add());
  const auto record = [&c](Flag f, const PredicateResult& r, bool& slot) {
    slot = r.holds;
    if (!r.holds) c.witnesses[f] = r.witness;
  };
  record(Flag::additively_regular, is_regular_semigroup(s.add()),
         c.additively_regular);
  record(Flag::additively_inverse, is_inverse_semigroup(s.add()),
         c.additively_inverse);
  record(Flag::additively_completely_regular,
         is_completely_regular_semigroup(s.add()),
         c.additively_completely_regular);
  record(Flag::additively_clifford, is_clifford_semigroup(s.add()),
         c.additively_clifford);
  record(Flag::multiplicatively_regular, is_regular_semigroup(s.mul()),
         c.multiplicatively_regular);
  record(Flag::multiplicatively_inverse, is_inverse_semigroup(s.mul()),
         c.multiplicatively_inverse);
  record(Flag::multiplicatively_completely_regular,
         is_completely_regular_semigroup(s.mul()),
         c.multiplicatively_completely_regular);
  record(Flag::multiplicatively_clifford, is_clifford_semigroup(s.mul()),
         c.multiplicatively_clifford);
  record(Flag::glcr, is_glcr(s), c.glcr);
  record(Flag::grcr, is_grcr(s), c.grcr);
  record(Flag::lcr, is_lcr(s, add_greens), c.lcr);
  record(Flag::rcr, is_rcr(s, add_greens), c.rcr);
  return c;
}

}  // namespace snrkit
