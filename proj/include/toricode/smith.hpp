#pragma once

#include "toricode/intmat.hpp"

#include <vector>

namespace toricode {

// Smith decomposition a * b * c = d of an integer matrix b, where a and c
// are unimodular and d is diagonal with nonnegative entries, each dividing
// the next. The transforms are not unique, so code consuming this struct
// must rely only on the defining equations, never on specific a or c.
struct SmithDecomposition {
  IntMat a;  // rows(b) x rows(b), |det| = 1
  IntMat d;  // same shape as b
  IntMat c;  // cols(b) x cols(b), |det| = 1
  std::vector<Int> invariant_factors;  // nonzero diagonal of d, divisibility order
};

SmithDecomposition smith_normal_form(const IntMat& b);

// Column-style Hermite normal form h of m: h = m * u for unimodular u, the
// pivot (first nonzero entry) of each column is positive, pivot rows are
// strictly increasing left to right, and within a pivot row the entries in
// earlier columns are reduced to [0, pivot). Zero columns are dropped from
// h, so h always has full column rank.
struct HermiteForm {
  IntMat h;  // rows(m) x rank(m)
  IntMat u;  // cols(m) x cols(m), |det| = 1, m * u = [h | zero columns]
};

HermiteForm hermite_form(const IntMat& m);

// Basis for the integer kernel {z : m z = 0}, columns in Hermite form.
// The result has cols(m) rows and (cols(m) - rank(m)) columns.
IntMat integer_kernel(const IntMat& m);

}  // namespace toricode
