#pragma once

#include "toricode/lattice.hpp"

#include <optional>
#include <vector>

namespace toricode {

// Combinatorics of a simplicial projective toric variety in Cox coordinates.
// The rows of phi are the rays of the fan, normalized so the first n rows
// are the identity; the columns u_1..u_n of phi then span the kernel of the
// grading beta (beta * phi = 0), and the total coordinate ring is graded by
// deg(x_j) = column j of beta.
struct ToricVariety {
  IntMat phi;   // r x n ray matrix, first n rows the identity
  IntMat beta;  // d x r grading, d = r - n, surjective
  std::optional<long> hirzebruch_l;  // set when built by hirzebruch()

  Index rays() const { return phi.rows(); }        // r, number of variables
  Index torus_dim() const { return phi.cols(); }   // n
  Index grading_dim() const { return beta.rows(); }  // d

  // The column lattice of phi: exponent differences of degree zero.
  Lattice grading_kernel() const { return Lattice{phi}; }
};

// Derives the grading as the row Hermite basis of the left kernel of phi
// and checks the normalization invariants (identity block, pointedness of
// the grading, surjectivity).
ToricVariety make_toric_variety(const IntMat& phi);

// Hirzebruch surface H_l: rays (1,0), (0,1), (-1,l), (0,-1); the grading is
// pinned to [[1,0,1,l],[0,1,0,1]], which is what the general constructor
// derives for these rays.
ToricVariety hirzebruch(long l);

// Projective n-space: rays e_1..e_n and -(e_1+...+e_n); grading [1 1 ... 1].
ToricVariety projective_space(Index n);

// All monomials of degree alpha: {a in N^r : beta a = alpha}, in ascending
// lexicographic order of the exponent vector. Per-variable search bounds
// come from Fourier-Motzkin elimination on the rational polytope, which the
// pointedness invariant keeps bounded.
std::vector<IntVec> monomial_basis(const ToricVariety& x, const IntVec& alpha);

IntVec degree_of(const ToricVariety& x, const IntVec& exponents);

}  // namespace toricode
