#ifndef SNRKIT_THEOREMS_HPP
#define SNRKIT_THEOREMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snrkit/decompose.hpp"
#include "snrkit/seminearring.hpp"

namespace snrkit {

enum class TheoremId {
  mult_reg,
  mult_reg_zs,
  mult_inv,
  mult_inv_zs,
  compl_reg,
  compl_reg_zs,
  clifford,
};

inline constexpr std::array<TheoremId, 7> kAllTheorems = {
    TheoremId::mult_reg,  TheoremId::mult_reg_zs, TheoremId::mult_inv,
    TheoremId::mult_inv_zs, TheoremId::compl_reg, TheoremId::compl_reg_zs,
    TheoremId::clifford,
};

std::string_view to_string(TheoremId id);

struct TheoremStatement {
  std::string label;
  bool holds = false;
  std::vector<Elem> witness;  // first witness when false
};

struct TheoremReport {
  TheoremId id;
  std::vector<TheoremStatement> statements;
  bool equivalent = false;  // all statement booleans identical
};

// The least b with aba = a, bab = b, and both (a+a*)b and b(a+a*) in the
// H+-class of ba.  Requires a GLCR seminearring (a* must exist); throws
// DomainError otherwise.
std::optional<Elem> compatible_inner_inverse(const FiniteSeminearring& s,
                                             Elem a);

TheoremReport verify_mult_reg(const FiniteSeminearring& s, bool zero_symmetric);
TheoremReport verify_mult_inverse(const FiniteSeminearring& s,
                                  bool zero_symmetric);
TheoremReport verify_compl_reg(const FiniteSeminearring& s,
                               bool zero_symmetric);
TheoremReport verify_clifford(const FiniteSeminearring& s);

// All seven reports, in kAllTheorems order.
std::vector<TheoremReport> verify_all(const FiniteSeminearring& s);

// Facts used as black boxes by the structure theorems, checked by scan:
//   h_plus_right_congruence            a H+ b  =>  ac H+ bc
//   unique_additive_idempotent         (additively completely regular only)
//   glcr_components_are_near_rings
//   glcr_grcr_components_zero_symmetric
//   clifford_components_zero_symmetric
struct LemmaViolation {
  std::string lemma;
  std::vector<Elem> elements;
};

std::vector<LemmaViolation> empirical_lemma_violations(
    const FiniteSeminearring& s);

}  // namespace snrkit

#endif  // SNRKIT_THEOREMS_HPP
