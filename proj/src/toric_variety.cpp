#include "toricode/toric_variety.hpp"

#include "toricode/errors.hpp"
#include "toricode/smith.hpp"

#include <algorithm>
#include <set>

namespace toricode {

namespace {

// One inequality coeffs . a <= rhs over integer vectors a.
struct Ineq {
  std::vector<Int> coeffs;
  Int rhs;
  bool operator<(const Ineq& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return rhs < o.rhs;
  }
};

// Divide by the gcd of the coefficients, flooring the right hand side;
// integer solution sets are preserved. Returns false when the row became
// 0 <= rhs with rhs < 0, i.e. the system is infeasible.
bool normalize(Ineq& row, bool* trivially_true) {
  Int g = 0;
  for (const Int& c : row.coeffs) g = gcd(g, c);
  *trivially_true = false;
  if (g == 0) {
    if (row.rhs >= 0) *trivially_true = true;
    return row.rhs >= 0;
  }
  for (Int& c : row.coeffs) c /= g;
  // floor division of rhs by positive g
  Int q = row.rhs / g;
  if (row.rhs % g != 0 && row.rhs < 0) --q;
  row.rhs = q;
  return true;
}

struct FmResult {
  bool infeasible = false;
  bool unbounded = false;
  std::vector<Int> upper;  // per variable; meaningful when both flags false
};

// Upper bound for each variable over {a >= 0 : beta a = alpha}: eliminate
// every other variable and read the surviving one-variable rows.
FmResult fm_upper_bounds(const IntMat& beta, const IntVec& alpha) {
  const Index r = beta.cols();
  const Index d = beta.rows();
  std::vector<Ineq> base;
  for (Index i = 0; i < r; ++i) {
    Ineq row{std::vector<Int>(r, 0), 0};
    row.coeffs[i] = -1;
    base.push_back(std::move(row));  // -a_i <= 0
  }
  for (Index g = 0; g < d; ++g) {
    Ineq up{std::vector<Int>(r), alpha(g)}, down{std::vector<Int>(r), -alpha(g)};
    for (Index i = 0; i < r; ++i) {
      up.coeffs[i] = beta(g, i);
      down.coeffs[i] = -beta(g, i);
    }
    base.push_back(std::move(up));
    base.push_back(std::move(down));
  }

  FmResult out;
  out.upper.assign(r, 0);
  for (Index keep = 0; keep < r; ++keep) {
    std::set<Ineq> rows(base.begin(), base.end());
    for (Index elim = 0; elim < r; ++elim) {
      if (elim == keep) continue;
      std::vector<Ineq> pos, neg, rest;
      for (const Ineq& row : rows) {
        if (row.coeffs[elim] > 0) pos.push_back(row);
        else if (row.coeffs[elim] < 0) neg.push_back(row);
        else rest.push_back(row);
      }
      std::set<Ineq> next(rest.begin(), rest.end());
      for (const Ineq& rp : pos)
        for (const Ineq& rn : neg) {
          // rp.c[elim] > 0 > rn.c[elim]; cancel with positive multipliers.
          Int mp = rp.coeffs[elim], mn = -rn.coeffs[elim];
          Ineq comb{std::vector<Int>(r), mn * rp.rhs + mp * rn.rhs};
          for (Index i = 0; i < r; ++i)
            comb.coeffs[i] = mn * rp.coeffs[i] + mp * rn.coeffs[i];
          bool triv = false;
          if (!normalize(comb, &triv)) {
            out.infeasible = true;
            return out;
          }
          if (!triv) next.insert(std::move(comb));
        }
      rows = std::move(next);
    }
    // Surviving rows mention only a_keep.
    bool bounded = false;
    Int best = 0;
    for (const Ineq& row : rows) {
      const Int& c = row.coeffs[keep];
      if (c > 0) {
        Int q = row.rhs / c;
        if (row.rhs % c != 0 && row.rhs < 0) --q;
        if (!bounded || q < best) best = q;
        bounded = true;
      } else if (c == 0 && row.rhs < 0) {
        out.infeasible = true;
        return out;
      }
    }
    if (!bounded) {
      out.unbounded = true;
      return out;
    }
    if (best < 0) {
      out.infeasible = true;  // upper bound below the a_keep >= 0 floor
      return out;
    }
    out.upper[keep] = best;
  }
  return out;
}

ToricVariety finish_variety(IntMat phi, IntMat beta, std::optional<long> hl) {
  const Index r = phi.rows();
  const Index n = phi.cols();
  if (n < 1 || r <= n) throw validation_error("ray matrix must have more rows than columns");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (phi(i, j) != Int(i == j ? 1 : 0))
        throw validation_error("first n rows of the ray matrix must be the identity");
  if (!same_matrix(IntMat(beta * phi), IntMat::Zero(beta.rows(), n)))
    throw std::logic_error("grading does not annihilate the ray matrix");
  // Surjectivity of the grading: all invariant factors 1.
  for (const Int& f : smith_normal_form(beta).invariant_factors)
    if (f != 1) throw std::logic_error("grading is not surjective");
  // Pointedness: only the origin solves beta a = 0 with a >= 0; otherwise
  // graded pieces would be infinite.
  FmResult fm = fm_upper_bounds(beta, IntVec::Zero(beta.rows()));
  if (fm.unbounded) throw precondition_error("grading is not pointed (unbounded degree-zero cone)");
  for (const Int& u : fm.upper)
    if (u != 0) throw precondition_error("grading is not pointed");
  return ToricVariety{std::move(phi), std::move(beta), hl};
}

}  // namespace

ToricVariety make_toric_variety(const IntMat& phi) {
  // Rows of the left kernel of phi, i.e. transposed kernel of phi^T.
  IntMat beta = integer_kernel(phi.transpose()).transpose();
  return finish_variety(phi, std::move(beta), std::nullopt);
}

ToricVariety hirzebruch(long l) {
  if (l < 0) throw validation_error("Hirzebruch parameter must be nonnegative");
  IntMat phi = int_mat({{1, 0}, {0, 1}, {-1, l}, {0, -1}});
  IntMat beta = int_mat({{1, 0, 1, l}, {0, 1, 0, 1}});
  ToricVariety x = finish_variety(std::move(phi), std::move(beta), l);
  return x;
}

ToricVariety projective_space(Index n) {
  if (n < 1) throw validation_error("projective space needs dimension at least 1");
  IntMat phi(n + 1, n);
  phi.topRows(n) = IntMat::Identity(n, n);
  for (Index j = 0; j < n; ++j) phi(n, j) = -1;
  IntMat beta = IntMat::Ones(1, n + 1);
  return finish_variety(std::move(phi), std::move(beta), std::nullopt);
}

std::vector<IntVec> monomial_basis(const ToricVariety& x, const IntVec& alpha) {
  const Index r = x.rays();
  const Index d = x.grading_dim();
  if (alpha.size() != d) throw precondition_error("degree vector has wrong dimension");
  FmResult fm = fm_upper_bounds(x.beta, alpha);
  if (fm.infeasible) return {};
  if (fm.unbounded) throw std::logic_error("unbounded graded piece on a pointed grading");

  // Componentwise range of what suffix variables i..r-1 can still add to
  // the degree; used to prune the search.
  IntMat lo = IntMat::Zero(d, r + 1), hi = IntMat::Zero(d, r + 1);
  for (Index i = r - 1; i >= 0; --i)
    for (Index g = 0; g < d; ++g) {
      Int c = x.beta(g, i) * fm.upper[i];
      lo(g, i) = lo(g, i + 1) + std::min(Int(0), c);
      hi(g, i) = hi(g, i + 1) + std::max(Int(0), c);
    }

  std::vector<IntVec> out;
  IntVec exps = IntVec::Zero(r);
  IntVec residual = alpha;
  // Depth-first over exponents in ascending order per variable, so the
  // output is in ascending lexicographic order.
  auto dfs = [&](auto&& self, Index i) -> void {
    if (i == r) {
      for (Index g = 0; g < d; ++g)
        if (residual(g) != 0) return;
      out.push_back(exps);
      return;
    }
    for (Index g = 0; g < d; ++g)
      if (residual(g) < lo(g, i) || residual(g) > hi(g, i)) return;
    for (Int v = 0; v <= fm.upper[i]; ++v) {
      exps(i) = v;
      self(self, i + 1);
      residual -= x.beta.col(i);
    }
    residual += (fm.upper[i] + 1) * x.beta.col(i);
    exps(i) = 0;
  };
  dfs(dfs, 0);
  return out;
}

IntVec degree_of(const ToricVariety& x, const IntVec& exponents) {
  if (exponents.size() != x.rays()) throw precondition_error("exponent vector has wrong length");
  return x.beta * exponents;
}

}  // namespace toricode
