#ifndef SNRKIT_OP_TABLE_HPP
#define SNRKIT_OP_TABLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snrkit {

using Elem = int;

class SnrError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations: out-of-range elements, order mismatches, bad
// arguments.  Distinct from AxiomError so callers can tell "you misused the
// API" from "your algebra is broken".
class DomainError : public SnrError {
  using SnrError::SnrError;
};

enum class ViolationKind {
  associativity,
  commutativity,
  right_distributivity,
  left_distributivity,
  closure,
};

std::string_view to_string(ViolationKind kind);

// A violating tuple of element indices, lexicographically first for the
// scan that produced it, so failures are stable across runs.
struct Witness {
  ViolationKind kind;
  std::vector<Elem> elements;

  bool operator==(const Witness&) const = default;
};

class AxiomError : public SnrError {
 public:
  AxiomError(const std::string& message, Witness witness)
      : SnrError(message), witness_(std::move(witness)) {}

  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness{};

  explicit operator bool() const noexcept { return ok; }
};

// An n-by-n Cayley table over element indices.  Row-major with the row as
// the LEFT operand: entry(i, j) = i o j.  Immutable once built.
class OpTable {
 public:
  OpTable(int order, std::vector<Elem> entries);

  int order() const noexcept { return order_; }

  Elem operator()(Elem i, Elem j) const noexcept {
    return entries_[static_cast<std::size_t>(i) * order_ + j];
  }

  // Bounds-checked lookup.
  Elem at(Elem i, Elem j) const;

  const std::vector<Elem>& entries() const noexcept { return entries_; }

  bool operator==(const OpTable&) const = default;

 private:
  int order_;
  std::vector<Elem> entries_;
};

OpTable make_table(int order, std::vector<Elem> entries);

CheckResult is_associative(const OpTable& t);
CheckResult is_commutative(const OpTable& t);

// { i : i o i = i }, sorted.
std::vector<Elem> idempotents(const OpTable& t);

// (i+j)k = ik + jk for all triples; witness (i, j, k).
CheckResult is_right_distributive(const OpTable& add, const OpTable& mul);

// k(i+j) = ki + kj for all triples; witness (i, j, k).
CheckResult is_left_distributive(const OpTable& add, const OpTable& mul);

}  // namespace snrkit

#endif  // SNRKIT_OP_TABLE_HPP
