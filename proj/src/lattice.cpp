#include "toricode/lattice.hpp"

#include "toricode/errors.hpp"
#include "toricode/smith.hpp"

#include <bit>
#include <string>

namespace toricode {

Lattice make_lattice(IntMat basis) {
  if (basis.cols() > 0) {
    HermiteForm f = hermite_form(basis);
    if (f.h.cols() != basis.cols())
      throw precondition_error("lattice basis has dependent columns");
  }
  return Lattice{std::move(basis)};
}

static void check_same_ambient(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw precondition_error("lattices live in different ambient dimensions");
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  check_same_ambient(a, b);
  IntMat joined(a.ambient_dim(), a.rank() + b.rank());
  joined << a.basis, b.basis;
  return Lattice{hermite_form(joined).h};
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  check_same_ambient(a, b);
  // a*x = b*y exactly when (x, -y) lies in the kernel of [a | b]; the x part
  // then parameterizes the intersection, injectively since a has full
  // column rank.
  IntMat stacked(a.ambient_dim(), a.rank() + b.rank());
  stacked << a.basis, b.basis;
  IntMat ker = integer_kernel(stacked);
  IntMat xs = ker.topRows(a.rank());
  IntMat meet = a.basis * xs;
  return Lattice{hermite_form(meet).h};
}

// Forward substitution against the Hermite form: pivot rows increase, and
// everything above a pivot in its column is zero, so the coefficient of each
// basis column is forced in turn. Returns false when a division fails or a
// residue survives, i.e. v is outside the lattice.
static bool solve_in_hermite(const IntMat& h, const IntVec& v, IntVec* coeffs) {
  IntVec res = v;
  IntVec w = IntVec::Zero(h.cols());
  for (Index j = 0; j < h.cols(); ++j) {
    Index p = 0;
    while (p < h.rows() && h(p, j) == 0) ++p;
    if (res(p) % h(p, j) != 0) return false;
    w(j) = res(p) / h(p, j);
    if (w(j) != 0) res -= w(j) * h.col(j);
  }
  for (Index i = 0; i < res.size(); ++i)
    if (res(i) != 0) return false;
  if (coeffs) *coeffs = w;
  return true;
}

bool lattice_membership(const Lattice& l, const IntVec& v) {
  if (v.size() != l.ambient_dim())
    throw precondition_error("vector dimension does not match ambient dimension");
  if (l.rank() == 0) {
    for (Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) return false;
    return true;
  }
  return solve_in_hermite(hermite_form(l.basis).h, v, nullptr);
}

LatticeMembership::LatticeMembership(const Lattice& l) : ambient_(l.ambient_dim()) {
  if (l.rank() > 0) h_ = hermite_form(l.basis).h;
}

bool LatticeMembership::contains(const IntVec& v) const {
  if (v.size() != ambient_)
    throw precondition_error("vector dimension does not match ambient dimension");
  if (h_.cols() == 0) {
    for (Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) return false;
    return true;
  }
  return solve_in_hermite(h_, v, nullptr);
}

Lattice hermite_kernel(const IntMat& q) { return Lattice{integer_kernel(q)}; }

IntMat coords_in(const Lattice& sub, const Lattice& sup) {
  check_same_ambient(sub, sup);
  HermiteForm f = hermite_form(sup.basis);
  IntMat x(sup.rank(), sub.rank());
  for (Index j = 0; j < sub.rank(); ++j) {
    IntVec w;
    if (!solve_in_hermite(f.h, sub.basis.col(j), &w))
      throw precondition_error("basis column " + std::to_string(j) +
                               " is not contained in the target lattice");
    // sup.basis * u * w = h * w = column, so u * w are the coordinates.
    x.col(j) = f.u.leftCols(f.h.cols()) * w;
  }
  return x;
}

Int lattice_index(const Lattice& sub, const Lattice& sup) {
  if (sub.rank() != sup.rank())
    throw precondition_error("rank mismatch: the index would be infinite");
  IntMat x = coords_in(sub, sup);
  Int d = determinant(x);
  return d < 0 ? Int(-d) : d;
}

Lattice saturate_at(const Lattice& l, const Int& m) {
  if (m <= 0) throw precondition_error("saturation requires a positive integer");
  IntMat scaled = IntMat::Identity(l.ambient_dim(), l.ambient_dim());
  scaled *= m;
  Lattice meet = lattice_intersection(l, Lattice{scaled});
  IntMat basis = meet.basis;
  for (Index j = 0; j < basis.cols(); ++j)
    for (Index i = 0; i < basis.rows(); ++i)
      basis(i, j) /= m;  // exact: members of the meet have all entries divisible
  return Lattice{std::move(basis)};
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.rank() != b.rank()) return false;
  for (Index j = 0; j < a.rank(); ++j)
    if (!lattice_membership(b, a.basis.col(j))) return false;
  for (Index j = 0; j < b.rank(); ++j)
    if (!lattice_membership(a, b.basis.col(j))) return false;
  return true;
}

namespace detail {

// Exhaustive search for a mixed k x k submatrix, smallest k first. Row and
// column subsets are walked as bitmasks (Gosper's hack); a subset survives
// only if every chosen column meets the chosen rows with both signs.
bool has_mixed_square_submatrix(const std::uint64_t* pos, const std::uint64_t* neg,
                                int rows, int cols) {
  // Only columns carrying both signs somewhere can join a mixed block.
  int eligible[64];
  int ne = 0;
  for (int j = 0; j < cols; ++j)
    if (pos[j] != 0 && neg[j] != 0) eligible[ne++] = j;
  const int kmax = std::min(rows, ne);
  for (int k = 2; k <= kmax; ++k) {
    std::uint64_t cset = (std::uint64_t(1) << k) - 1;
    const std::uint64_t cend = ne == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << ne);
    while (cset < cend) {
      int chosen[64];
      int nc = 0;
      for (std::uint64_t t = cset; t; t &= t - 1)
        chosen[nc++] = eligible[std::countr_zero(t)];
      std::uint64_t rset = (std::uint64_t(1) << k) - 1;
      const std::uint64_t rend = rows == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << rows);
      while (rset < rend) {
        bool mixed = true;
        for (int t = 0; t < nc && mixed; ++t)
          mixed = (pos[chosen[t]] & rset) != 0 && (neg[chosen[t]] & rset) != 0;
        if (mixed) return true;
        std::uint64_t c = rset & -rset, r = rset + c;
        rset = r | (((r ^ rset) >> 2) / c);
      }
      std::uint64_t c = cset & -cset, r = cset + c;
      cset = r | (((r ^ cset) >> 2) / c);
    }
  }
  return false;
}

}  // namespace detail

}  // namespace toricode
