#pragma once

#include "toricode/intmat.hpp"

#include <cstdint>

namespace toricode {

// Sublattice of Z^r described by a basis matrix whose columns are the basis
// vectors. The basis is stored exactly as constructed (callers may care
// about the particular generators, e.g. for binomial presentations);
// operations that need a canonical form reduce internally.
struct Lattice {
  IntMat basis;  // r x k, full column rank k

  Index ambient_dim() const { return basis.rows(); }
  Index rank() const { return basis.cols(); }
};

// Validates full column rank.
Lattice make_lattice(IntMat basis);

// Smallest lattice containing both summands.
Lattice lattice_sum(const Lattice& a, const Lattice& b);

// Intersection; solved through the kernel of [basis_a | -basis_b].
Lattice lattice_intersection(const Lattice& a, const Lattice& b);

// Does v lie in l? Decided exactly by forward substitution on the Hermite
// form of the basis.
bool lattice_membership(const Lattice& l, const IntVec& v);

// Same test amortized over many queries: the Hermite form is computed once.
class LatticeMembership {
 public:
  explicit LatticeMembership(const Lattice& l);
  bool contains(const IntVec& v) const;

 private:
  IntMat h_;
  Index ambient_;
};

// The integer kernel {z : q z = 0} as a lattice with Hermite-reduced basis.
Lattice hermite_kernel(const IntMat& q);

// Integer coordinates of sub's basis in terms of sup's basis, i.e. the x
// with sup.basis * x = sub.basis. Throws precondition_error naming the
// first offending column when sub is not contained in sup.
IntMat coords_in(const Lattice& sub, const Lattice& sup);

// Group index [sup : sub] for equal ranks; throws precondition_error on a
// rank mismatch (the index would be infinite).
Int lattice_index(const Lattice& sub, const Lattice& sup);

// {v : m*v in l} for a positive integer m, computed as (l meet m*Z^r)/m.
Lattice saturate_at(const Lattice& l, const Int& m);

// Equality as sets, decided by mutual membership of basis vectors.
bool lattice_equal(const Lattice& a, const Lattice& b);

namespace detail {
bool has_mixed_square_submatrix(const std::uint64_t* pos, const std::uint64_t* neg,
                                int rows, int cols);
}

// A matrix is "mixed" when every one of its columns carries both a positive
// and a negative entry. This predicate is true when NO square submatrix is
// mixed; for a lattice basis it certifies that the associated binomials cut
// out a complete intersection. Search goes smallest size first over row and
// column subsets (as bitmasks) and stops at the first mixed square block.
template <typename Derived>
bool is_mixed_dominating(const Eigen::MatrixBase<Derived>& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows > 64 || cols > 64)
    throw std::invalid_argument("is_mixed_dominating: more than 64 rows or columns");
  std::uint64_t pos[64] = {0}, neg[64] = {0};
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      if (m(i, j) > 0) pos[j] |= std::uint64_t(1) << i;
      if (m(i, j) < 0) neg[j] |= std::uint64_t(1) << i;
    }
  return !detail::has_mixed_square_submatrix(pos, neg, rows, cols);
}

}  // namespace toricode
