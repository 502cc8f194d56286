#include "toricode/intmat.hpp"

#include <sstream>

namespace toricode {

IntMat int_mat(std::initializer_list<std::initializer_list<long>> rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMat m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntVec int_vec(std::initializer_list<long> entries) {
  IntVec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

// Bareiss elimination: every intermediate entry is a quotient of minors of
// the input, so the divisions below are exact and the result is the exact
// determinant.
Int determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  Index n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (Index t = 0; t + 1 < n; ++t) {
    if (a(t, t) == 0) {
      Index piv = -1;
      for (Index i = t + 1; i < n; ++i)
        if (a(i, t) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      a.row(t).swap(a.row(piv));
      sign = -sign;
    }
    for (Index i = t + 1; i < n; ++i)
      for (Index j = t + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(t, t) - a(i, t) * a(t, j)) / prev;
    prev = a(t, t);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  Int d = determinant(m);
  return d == 1 || d == -1;
}

std::string to_string(const IntMat& m) {
  std::ostringstream out;
  for (Index i = 0; i < m.rows(); ++i) {
    out << (i == 0 ? "[" : " ");
    for (Index j = 0; j < m.cols(); ++j) out << (j ? " " : "[") << m(i, j);
    out << "]" << (i + 1 == m.rows() ? "]" : "\n");
  }
  if (m.rows() == 0) out << "[]";
  return out.str();
}

}  // namespace toricode
