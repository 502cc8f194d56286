#include "toricode/smith.hpp"

#include <stdexcept>

namespace toricode {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor division with positive divisor, used to reduce entries into [0, b).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

// Classic elimination to Smith form. The pivot is always the entry of
// smallest nonzero absolute value in the trailing block, which keeps
// coefficient growth tame; correctness does not depend on the choice.
// Row operations are mirrored into a, column operations into c, so
// a * b * c = d holds at every step.
SmithDecomposition smith_normal_form(const IntMat& b) {
  const Index r = b.rows();
  const Index n = b.cols();
  SmithDecomposition out;
  out.a = IntMat::Identity(r, r);
  out.c = IntMat::Identity(n, n);
  out.d = b;
  IntMat& d = out.d;
  IntMat& a = out.a;
  IntMat& c = out.c;

  const Index steps = std::min(r, n);
  for (Index t = 0; t < steps; ++t) {
    // Locate the smallest nonzero entry in the trailing block.
    Index pi = -1, pj = -1;
    for (Index i = t; i < r; ++i)
      for (Index j = t; j < n; ++j)
        if (d(i, j) != 0 && (pi < 0 || abs_int(d(i, j)) < abs_int(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;  // trailing block is zero, done
    if (pi != t) { d.row(t).swap(d.row(pi)); a.row(t).swap(a.row(pi)); }
    if (pj != t) { d.col(t).swap(d.col(pj)); c.col(t).swap(c.col(pj)); }

    for (;;) {
      // Clear column t below the pivot by Euclidean steps. A nonzero
      // remainder becomes the new, strictly smaller pivot.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (Index i = t + 1; i < r; ++i) {
          if (d(i, t) == 0) continue;
          Int q = d(i, t) / d(t, t);
          if (q != 0) { d.row(i) -= q * d.row(t); a.row(i) -= q * a.row(t); }
          if (d(i, t) != 0) {
            d.row(t).swap(d.row(i));
            a.row(t).swap(a.row(i));
            dirty = true;
          }
        }
        for (Index j = t + 1; j < n; ++j) {
          if (d(t, j) == 0) continue;
          Int q = d(t, j) / d(t, t);
          if (q != 0) { d.col(j) -= q * d.col(t); c.col(j) -= q * c.col(t); }
          if (d(t, j) != 0) {
            d.col(t).swap(d.col(j));
            c.col(t).swap(c.col(j));
            dirty = true;
          }
        }
      }
      // Divisibility pass: the pivot must divide every remaining entry.
      // Folding an offending row into row t restarts the elimination with
      // a strictly smaller gcd, so this terminates.
      bool restart = false;
      for (Index i = t + 1; i < r && !restart; ++i)
        for (Index j = t + 1; j < n && !restart; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            a.row(t) += a.row(i);
            restart = true;
          }
      if (!restart) break;
    }
    if (d(t, t) < 0) { d.row(t) = -d.row(t); a.row(t) = -a.row(t); }
  }

  for (Index t = 0; t < steps; ++t)
    if (d(t, t) != 0) out.invariant_factors.push_back(d(t, t));

  // The transforms are not unique; verify the defining equations here once
  // so downstream code can trust the struct unconditionally.
  if (!same_matrix(IntMat(a * b * c), d)) throw std::logic_error("smith_normal_form: a*b*c != d");
  if (!is_unimodular(a) || !is_unimodular(c))
    throw std::logic_error("smith_normal_form: transform not unimodular");
  for (size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
    if (out.invariant_factors[i + 1] % out.invariant_factors[i] != 0)
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  return out;
}

// Column reduction to Hermite form, top row to bottom. Within each examined
// row, Euclidean column steps shrink the gcd into one pivot column, the
// pivot is made positive, and every earlier column is reduced modulo it.
HermiteForm hermite_form(const IntMat& m) {
  const Index r = m.rows();
  const Index n = m.cols();
  IntMat h = m;
  IntMat u = IntMat::Identity(n, n);
  Index cur = 0;  // next column to receive a pivot
  for (Index i = 0; i < r && cur < n; ++i) {
    // Shrink row i across columns cur..n-1 to a single nonzero entry.
    for (;;) {
      Index best = -1;
      for (Index j = cur; j < n; ++j)
        if (h(i, j) != 0 && (best < 0 || abs_int(h(i, j)) < abs_int(h(i, best)))) best = j;
      if (best < 0) break;  // row has no pivot among the free columns
      if (best != cur) { h.col(cur).swap(h.col(best)); u.col(cur).swap(u.col(best)); }
      bool clear = true;
      for (Index j = cur + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        Int q = h(i, j) / h(i, cur);
        h.col(j) -= q * h.col(cur);
        u.col(j) -= q * u.col(cur);
        if (h(i, j) != 0) clear = false;  // remainder survives, loop again
      }
      if (clear) break;
    }
    if (h(i, cur) == 0) continue;
    if (h(i, cur) < 0) { h.col(cur) = -h.col(cur); u.col(cur) = -u.col(cur); }
    for (Index j = 0; j < cur; ++j) {
      Int q = floor_div(h(i, j), h(i, cur));
      if (q != 0) { h.col(j) -= q * h.col(cur); u.col(j) -= q * u.col(cur); }
    }
    ++cur;
  }
  HermiteForm out;
  out.h = h.leftCols(cur);
  out.u = u;
  IntMat mu = m * u;
  if (!same_matrix(mu.leftCols(cur), out.h) ||
      !same_matrix(mu.rightCols(n - cur), IntMat::Zero(r, n - cur)))
    throw std::logic_error("hermite_form: m*u != [h|0]");
  return out;
}

IntMat integer_kernel(const IntMat& m) {
  HermiteForm f = hermite_form(m);
  const Index rank = f.h.cols();
  // The columns of u that map to zero columns of m*u span the kernel.
  IntMat basis = f.u.rightCols(m.cols() - rank);
  return hermite_form(basis).h;
}

}  // namespace toricode
