#include "snrkit/theorems.hpp"

namespace snrkit {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::mult_reg: return "mult_reg";
    case TheoremId::mult_reg_zs: return "mult_reg_zs";
    case TheoremId::mult_inv: return "mult_inv";
    case TheoremId::mult_inv_zs: return "mult_inv_zs";
    case TheoremId::compl_reg: return "compl_reg";
    case TheoremId::compl_reg_zs: return "compl_reg_zs";
    case TheoremId::clifford: return "clifford";
  }
  return "?";
}

namespace {

// Everything the seven reports need, computed once per instance.
struct Analysis {
  GreensData greens;
  PredicateResult glcr;
  PredicateResult grcr;
  std::vector<Component> comps;
};

Analysis analyze(const FiniteSeminearring& s) {
  Analysis a{greens_relations(s.add()), is_glcr(s), is_grcr(s), {}};
  a.comps = h_plus_decomposition(s, a.greens);
  return a;
}

std::optional<Elem> inner_inverse_partner(const FiniteSeminearring& s, Elem a,
                                          const GreensData& g) {
  const OpTable& add = s.add();
  const OpTable& mul = s.mul();
  const Elem astar = star(s, a, g);
  const Elem aa = add(a, astar);
  for (Elem b = 0; b < s.order(); ++b) {
    if (mul(mul(a, b), a) != a) continue;
    if (mul(mul(b, a), b) != b) continue;
    const int target = g.h_class[mul(b, a)];
    if (g.h_class[mul(aa, b)] == target && g.h_class[mul(b, aa)] == target)
      return b;
  }
  return std::nullopt;
}

// Statement builders.  The union statement (3) is decided on the H+
// decomposition; the brute-force partition oracle cross-checks that reading
// in the test suite.

TheoremStatement compatible_inverses_stmt(const FiniteSeminearring& s,
                                          const Analysis& an, bool need_grcr,
                                          std::string label) {
  TheoremStatement st{std::move(label), false, {}};
  if (!an.glcr) {
    st.witness = an.glcr.witness;
    return st;
  }
  if (need_grcr && !an.grcr) {
    st.witness = an.grcr.witness;
    return st;
  }
  for (Elem a = 0; a < s.order(); ++a)
    if (!inner_inverse_partner(s, a, an.greens)) {
      st.witness = {a};
      return st;
    }
  st.holds = true;
  return st;
}

TheoremStatement mult_reduct_stmt(const Analysis& an, bool need_grcr,
                                  const PredicateResult& mult_property,
                                  std::string label) {
  TheoremStatement st{std::move(label), false, {}};
  if (!an.glcr) {
    st.witness = an.glcr.witness;
    return st;
  }
  if (need_grcr && !an.grcr) {
    st.witness = an.grcr.witness;
    return st;
  }
  if (!mult_property) {
    st.witness = mult_property.witness;
    return st;
  }
  st.holds = true;
  return st;
}

TheoremStatement components_stmt(const Analysis& an,
                                 bool ComponentFlags::*flag, bool need_zs,
                                 std::string label) {
  TheoremStatement st{std::move(label), true, {}};
  for (const Component& c : an.comps) {
    const bool ok = c.flags.is_near_ring && c.flags.*flag &&
                    (!need_zs || c.flags.zero_symmetric);
    if (!ok) {
      st.holds = false;
      st.witness = {c.elements.front()};
      return st;
    }
  }
  return st;
}

TheoremReport finish(TheoremId id, std::vector<TheoremStatement> stmts) {
  TheoremReport rep{id, std::move(stmts), true};
  for (const TheoremStatement& st : rep.statements)
    if (st.holds != rep.statements.front().holds) {
      rep.equivalent = false;
      break;
    }
  return rep;
}

TheoremReport mult_reg_report(const FiniteSeminearring& s, const Analysis& an,
                              bool zs) {
  const char* prefix = zs ? "glcr_grcr" : "glcr";
  const char* kind = zs ? "zero_symmetric_regular" : "regular";
  std::vector<TheoremStatement> st;
  st.push_back(compatible_inverses_stmt(
      s, an, zs, std::string(prefix) + "_with_compatible_inner_inverses"));
  st.push_back(components_stmt(an, &ComponentFlags::regular, zs,
                               std::string("every_component_") + kind));
  TheoremStatement uni = st.back();
  uni.label = std::string("union_of_") + kind + "_near_rings";
  st.push_back(std::move(uni));
  return finish(zs ? TheoremId::mult_reg_zs : TheoremId::mult_reg,
                std::move(st));
}

TheoremReport mult_property_report(const Analysis& an, bool zs, TheoremId id,
                                   const PredicateResult& mult_property,
                                   const char* property,
                                   bool ComponentFlags::*flag) {
  const std::string prefix = zs ? "glcr_grcr" : "glcr";
  const std::string kind =
      (zs ? std::string("zero_symmetric_") : std::string()) + property;
  std::vector<TheoremStatement> st;
  st.push_back(mult_reduct_stmt(an, zs, mult_property,
                                prefix + "_and_multiplicatively_" + property));
  st.push_back(components_stmt(an, flag, zs, "every_component_" + kind));
  TheoremStatement uni = st.back();
  uni.label = "union_of_" + kind + "_near_rings";
  st.push_back(std::move(uni));
  return finish(id, std::move(st));
}

TheoremReport clifford_report(const FiniteSeminearring& s,
                              const Analysis& an) {
  const PredicateResult cl = is_clifford_semigroup(s.mul());
  std::vector<TheoremStatement> st;
  st.push_back(mult_reduct_stmt(an, false, cl,
                                "glcr_and_multiplicatively_clifford"));
  st.push_back(mult_reduct_stmt(an, true, cl,
                                "glcr_grcr_and_multiplicatively_clifford"));
  st.push_back(components_stmt(an, &ComponentFlags::clifford, false,
                               "every_component_clifford"));
  TheoremStatement uni = st.back();
  uni.label = "union_of_clifford_near_rings";
  st.push_back(std::move(uni));
  return finish(TheoremId::clifford, std::move(st));
}

TheoremReport dispatch(const FiniteSeminearring& s, const Analysis& an,
                       TheoremId id) {
  switch (id) {
    case TheoremId::mult_reg: return mult_reg_report(s, an, false);
    case TheoremId::mult_reg_zs: return mult_reg_report(s, an, true);
    case TheoremId::mult_inv:
    case TheoremId::mult_inv_zs:
      return mult_property_report(an, id == TheoremId::mult_inv_zs, id,
                                  is_inverse_semigroup(s.mul()), "inverse",
                                  &ComponentFlags::inverse);
    case TheoremId::compl_reg:
    case TheoremId::compl_reg_zs:
      return mult_property_report(an, id == TheoremId::compl_reg_zs, id,
                                  is_completely_regular_semigroup(s.mul()),
                                  "completely_regular",
                                  &ComponentFlags::completely_regular);
    case TheoremId::clifford: return clifford_report(s, an);
  }
  throw DomainError("unknown theorem id");
}

}  // namespace

std::optional<Elem> compatible_inner_inverse(const FiniteSeminearring& s,
                                             Elem a) {
  if (a < 0 || a >= s.order()) throw DomainError("element index out of range");
  if (auto g = is_glcr(s); !g)
    throw DomainError("compatible_inner_inverse requires a GLCR seminearring");
  return inner_inverse_partner(s, a, greens_relations(s.add()));
}

TheoremReport verify_mult_reg(const FiniteSeminearring& s,
                              bool zero_symmetric) {
  return dispatch(s, analyze(s),
                  zero_symmetric ? TheoremId::mult_reg_zs : TheoremId::mult_reg);
}

TheoremReport verify_mult_inverse(const FiniteSeminearring& s,
                                  bool zero_symmetric) {
  return dispatch(s, analyze(s),
                  zero_symmetric ? TheoremId::mult_inv_zs : TheoremId::mult_inv);
}

TheoremReport verify_compl_reg(const FiniteSeminearring& s,
                               bool zero_symmetric) {
  return dispatch(
      s, analyze(s),
      zero_symmetric ? TheoremId::compl_reg_zs : TheoremId::compl_reg);
}

TheoremReport verify_clifford(const FiniteSeminearring& s) {
  return dispatch(s, analyze(s), TheoremId::clifford);
}

std::vector<TheoremReport> verify_all(const FiniteSeminearring& s) {
  const Analysis an = analyze(s);
  std::vector<TheoremReport> out;
  out.reserve(kAllTheorems.size());
  for (TheoremId id : kAllTheorems) out.push_back(dispatch(s, an, id));
  return out;
}

std::vector<LemmaViolation> empirical_lemma_violations(
    const FiniteSeminearring& s) {
  std::vector<LemmaViolation> out;
  const int n = s.order();
  const GreensData g = greens_relations(s.add());
  const OpTable& add = s.add();
  const OpTable& mul = s.mul();

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (g.h_class[a] != g.h_class[b]) continue;
      for (Elem c = 0; c < n; ++c)
        if (g.h_class[mul(a, c)] != g.h_class[mul(b, c)])
          out.push_back({"h_plus_right_congruence", {a, b, c}});
    }

  if (is_completely_regular_semigroup(add)) {
    for (const std::vector<Elem>& cls : g.h_classes) {
      int count = 0;
      for (Elem e : cls)
        if (add(e, e) == e) ++count;
      if (count != 1)
        out.push_back({"unique_additive_idempotent", {cls.front()}});
    }
  }

  const bool glcr = is_glcr(s).holds;
  const bool grcr = is_grcr(s).holds;
  const std::vector<Component> comps = h_plus_decomposition(s, g);
  for (const Component& c : comps) {
    if (glcr && !c.flags.is_near_ring)
      out.push_back({"glcr_components_are_near_rings", {c.elements.front()}});
    if (glcr && grcr && c.flags.is_near_ring && !c.flags.zero_symmetric)
      out.push_back(
          {"glcr_grcr_components_zero_symmetric", {c.elements.front()}});
    if (c.flags.is_near_ring && c.flags.clifford && !c.flags.zero_symmetric)
      out.push_back(
          {"clifford_components_zero_symmetric", {c.elements.front()}});
  }
  return out;
}

}  // namespace snrkit
