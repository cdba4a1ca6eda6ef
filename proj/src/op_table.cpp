#include "snrkit/op_table.hpp"

#include <sstream>

namespace snrkit {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::associativity: return "associativity";
    case ViolationKind::commutativity: return "commutativity";
    case ViolationKind::right_distributivity: return "right_distributivity";
    case ViolationKind::left_distributivity: return "left_distributivity";
    case ViolationKind::closure: return "closure";
  }
  return "?";
}

OpTable::OpTable(int order, std::vector<Elem> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ < 1) throw DomainError("table order must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(order_) * order_) {
    std::ostringstream msg;
    msg << "dimension mismatch: order " << order_ << " needs "
        << static_cast<std::size_t>(order_) * order_ << " entries, got "
        << entries_.size();
    throw DomainError(msg.str());
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] >= order_) {
      std::ostringstream msg;
      msg << "entry " << i << " = " << entries_[i]
          << " out of range for order " << order_;
      throw DomainError(msg.str());
    }
  }
}

Elem OpTable::at(Elem i, Elem j) const {
  if (i < 0 || i >= order_ || j < 0 || j >= order_)
    throw DomainError("element index out of range");
  return (*this)(i, j);
}

OpTable make_table(int order, std::vector<Elem> entries) {
  return OpTable(order, std::move(entries));
}

CheckResult is_associative(const OpTable& t) {
  const int n = t.order();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem ij = t(i, j);
      for (Elem k = 0; k < n; ++k)
        if (t(ij, k) != t(i, t(j, k)))
          return {false, Witness{ViolationKind::associativity, {i, j, k}}};
    }
  return {};
}

CheckResult is_commutative(const OpTable& t) {
  const int n = t.order();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (t(i, j) != t(j, i))
        return {false, Witness{ViolationKind::commutativity, {i, j}}};
  return {};
}

std::vector<Elem> idempotents(const OpTable& t) {
  std::vector<Elem> out;
  for (Elem i = 0; i < t.order(); ++i)
    if (t(i, i) == i) out.push_back(i);
  return out;
}

CheckResult is_right_distributive(const OpTable& add, const OpTable& mul) {
  if (add.order() != mul.order())
    throw DomainError("order mismatch between tables");
  const int n = add.order();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem s = add(i, j);
      for (Elem k = 0; k < n; ++k)
        if (mul(s, k) != add(mul(i, k), mul(j, k)))
          return {false,
                  Witness{ViolationKind::right_distributivity, {i, j, k}}};
    }
  return {};
}

CheckResult is_left_distributive(const OpTable& add, const OpTable& mul) {
  if (add.order() != mul.order())
    throw DomainError("order mismatch between tables");
  const int n = add.order();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem s = add(i, j);
      for (Elem k = 0; k < n; ++k)
        if (mul(k, s) != add(mul(k, i), mul(k, j)))
          return {false,
                  Witness{ViolationKind::left_distributivity, {i, j, k}}};
    }
  return {};
}

}  // namespace snrkit
