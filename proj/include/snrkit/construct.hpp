#ifndef SNRKIT_CONSTRUCT_HPP
#define SNRKIT_CONSTRUCT_HPP

#include <span>
#include <vector>

#include "snrkit/seminearring.hpp"

namespace snrkit {

// 2x2 matrices over the prime field F_p.
struct MatrixRingSpec {
  int p = 2;
  static constexpr int dim = 2;
};

// T = {u, a, b, c} with the bespoke addition and left-zero multiplication
// x*y = x.  GLCR, multiplicatively regular, H+ classes {u,c} {a} {b}.
FiniteSeminearring left_zero_T();

// The two-element semilattice {alpha, beta} with x*y = x.
FiniteSeminearring two_semilattice_L();

// Full 2x2 matrix ring over Z_p, carrier size p^4.  Matrices are indexed by
// row-major 4-tuples (a,b,c,d) for [[a,b],[c,d]]; the zero matrix has index
// 0.  p must be prime (and <= 7, to bound the tables).
FiniteSeminearring matrix_ring(MatrixRingSpec spec);

// I = { [[a,b],[0,0]] } as indices into matrix_ring(spec), ascending.
std::vector<Elem> upper_row_right_ideal(MatrixRingSpec spec);

// Componentwise operations on the n1*n2 carrier; (i1,i2) -> i1*n2 + i2.
FiniteSeminearring direct_product(const FiniteSeminearring& s1,
                                  const FiniteSeminearring& s2);

// Restriction to a subset closed under both operations (checked; AxiomError
// with the violating pair otherwise).  The given element order becomes the
// local index order, so the subset list is the index map back to the parent.
FiniteSeminearring sub_seminearring(const FiniteSeminearring& s,
                                    std::span<const Elem> subset);

// S = ({u,c} x I) u ({a} x M) u ({b} x M) inside T x M_2(F_p); order
// 2p^2 + 2p^4.  Elements are ordered block-first (S1, S2, S3), each block
// ascending by parent index.
FiniteSeminearring example_S(int p);

// The semiring analogue ({alpha} x I) u ({beta} x M) inside L x M_2(F_p);
// order p^2 + p^4.
FiniteSeminearring example_L(int p);

}  // namespace snrkit

#endif  // SNRKIT_CONSTRUCT_HPP
