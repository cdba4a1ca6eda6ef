#include "snrkit/construct.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace snrkit {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!is_prime(p))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
}

OpTable left_zero_table(int n) {
  std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      entries[static_cast<std::size_t>(i) * n + j] = i;
  return OpTable(n, std::move(entries));
}

}  // namespace

FiniteSeminearring left_zero_T() {
  const OpTable add(4, {0, 1, 2, 3,
                        1, 1, 1, 1,
                        2, 2, 2, 2,
                        3, 2, 1, 0});
  return make_seminearring(add, left_zero_table(4), {"u", "a", "b", "c"});
}

FiniteSeminearring two_semilattice_L() {
  const OpTable add(2, {0, 1, 1, 1});
  return make_seminearring(add, left_zero_table(2), {"alpha", "beta"});
}

FiniteSeminearring matrix_ring(MatrixRingSpec spec) {
  require_prime(spec.p);
  if (spec.p > 7)
    throw DomainError("matrix_ring supports p <= 7 (carrier grows as p^4)");
  const int p = spec.p;
  const int n = p * p * p * p;
  const auto index = [p](int a, int b, int c, int d) {
    return ((a * p + b) * p + c) * p + d;
  };
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    int r = i;
    const int d = r % p; r /= p;
    const int c = r % p; r /= p;
    const int b = r % p; r /= p;
    const int a = r;
    names[i] = "m" + std::to_string(a) + std::to_string(b) +
               std::to_string(c) + std::to_string(d);
    for (int j = 0; j < n; ++j) {
      int q = j;
      const int h = q % p; q /= p;
      const int g = q % p; q /= p;
      const int f = q % p; q /= p;
      const int e = q;
      add[static_cast<std::size_t>(i) * n + j] =
          index((a + e) % p, (b + f) % p, (c + g) % p, (d + h) % p);
      mul[static_cast<std::size_t>(i) * n + j] =
          index((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p);
    }
  }
  return detail::make_unchecked(OpTable(n, std::move(add)),
                                OpTable(n, std::move(mul)), std::move(names));
}

std::vector<Elem> upper_row_right_ideal(MatrixRingSpec spec) {
  require_prime(spec.p);
  const int p = spec.p;
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(p) * p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) out.push_back(((a * p + b) * p + 0) * p + 0);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteSeminearring direct_product(const FiniteSeminearring& s1,
                                  const FiniteSeminearring& s2) {
  const int n1 = s1.order();
  const int n2 = s2.order();
  if (static_cast<long long>(n1) * n2 > 4096)
    throw DomainError("direct product carrier would exceed 4096 elements");
  const int n = n1 * n2;
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (Elem i1 = 0; i1 < n1; ++i1)
    for (Elem i2 = 0; i2 < n2; ++i2) {
      const Elem i = i1 * n2 + i2;
      for (Elem j1 = 0; j1 < n1; ++j1)
        for (Elem j2 = 0; j2 < n2; ++j2) {
          const Elem j = j1 * n2 + j2;
          add[static_cast<std::size_t>(i) * n + j] =
              s1.plus(i1, j1) * n2 + s2.plus(i2, j2);
          mul[static_cast<std::size_t>(i) * n + j] =
              s1.times(i1, j1) * n2 + s2.times(i2, j2);
        }
    }
  std::vector<std::string> names;
  if (!s1.names().empty() && !s2.names().empty()) {
    names.reserve(n);
    for (Elem i1 = 0; i1 < n1; ++i1)
      for (Elem i2 = 0; i2 < n2; ++i2)
        names.push_back(s1.names()[i1] + "_" + s2.names()[i2]);
  }
  return detail::make_unchecked(OpTable(n, std::move(add)),
                                OpTable(n, std::move(mul)), std::move(names));
}

FiniteSeminearring sub_seminearring(const FiniteSeminearring& s,
                                    std::span<const Elem> subset) {
  const int k = static_cast<int>(subset.size());
  if (k == 0) throw DomainError("subset must be non-empty");
  std::vector<int> local(s.order(), -1);
  for (int i = 0; i < k; ++i) {
    const Elem x = subset[i];
    if (x < 0 || x >= s.order())
      throw DomainError("subset element out of range");
    if (local[x] >= 0) throw DomainError("subset has duplicate elements");
    local[x] = i;
  }
  std::vector<Elem> add(static_cast<std::size_t>(k) * k);
  std::vector<Elem> mul(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Elem sum = s.plus(subset[i], subset[j]);
      const Elem prod = s.times(subset[i], subset[j]);
      if (local[sum] < 0 || local[prod] < 0)
        throw AxiomError(
            "subset is not closed under the operations",
            Witness{ViolationKind::closure, {subset[i], subset[j]}});
      add[static_cast<std::size_t>(i) * k + j] = local[sum];
      mul[static_cast<std::size_t>(i) * k + j] = local[prod];
    }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    names.reserve(k);
    for (Elem x : subset) names.push_back(s.names()[x]);
  }
  return detail::make_unchecked(OpTable(k, std::move(add)),
                                OpTable(k, std::move(mul)), std::move(names));
}

FiniteSeminearring example_S(int p) {
  require_prime(p);
  const FiniteSeminearring m = matrix_ring({p});
  const FiniteSeminearring prod = direct_product(left_zero_T(), m);
  const int mn = m.order();
  const std::vector<Elem> ideal = upper_row_right_ideal({p});
  // S1 block first ({u,c} x I), then S2 ({a} x M), then S3 ({b} x M); each
  // block ascending, so indices are stable for regression tests.
  std::vector<Elem> subset;
  subset.reserve(2 * ideal.size() + 2 * static_cast<std::size_t>(mn));
  for (Elem x : ideal) subset.push_back(0 * mn + x);
  for (Elem x : ideal) subset.push_back(3 * mn + x);
  for (Elem x = 0; x < mn; ++x) subset.push_back(1 * mn + x);
  for (Elem x = 0; x < mn; ++x) subset.push_back(2 * mn + x);
  return sub_seminearring(prod, subset);
}

FiniteSeminearring example_L(int p) {
  require_prime(p);
  const FiniteSeminearring m = matrix_ring({p});
  const FiniteSeminearring prod = direct_product(two_semilattice_L(), m);
  const int mn = m.order();
  std::vector<Elem> subset;
  for (Elem x : upper_row_right_ideal({p})) subset.push_back(0 * mn + x);
  for (Elem x = 0; x < mn; ++x) subset.push_back(1 * mn + x);
  return sub_seminearring(prod, subset);
}

}  // namespace snrkit
