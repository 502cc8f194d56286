#include "toricode/lattice_ideal.hpp"

#include "toricode/errors.hpp"

#include <numeric>
#include <vector>

namespace toricode {

namespace {

// Highest-index nonzero entry decides the sign convention.
Binomial split_column(const IntVec& m) {
  Index last = -1;
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) != 0) last = i;
  Int flip = (last >= 0 && m(last) < 0) ? -1 : 1;
  Binomial b{IntVec::Zero(m.size()), IntVec::Zero(m.size())};
  for (Index i = 0; i < m.size(); ++i) {
    Int v = flip * m(i);
    if (v > 0)
      b.plus(i) = v;
    else
      b.minus(i) = -v;
  }
  return b;
}

void append_side(std::string* out, const IntVec& side) {
  bool any = false;
  for (Index i = 0; i < side.size(); ++i) {
    if (side(i) == 0) continue;
    if (any) *out += "*";
    any = true;
    *out += "x" + std::to_string(i + 1);
    if (side(i) != 1) *out += "^" + side(i).str();
  }
  if (!any) *out += "1";
}

}  // namespace

std::string to_string(const Binomial& b) {
  std::string out;
  append_side(&out, b.plus);
  out += " - ";
  append_side(&out, b.minus);
  return out;
}

BinomialGenerators binomial_generators(const SubgroupSpec& s) {
  BinomialGenerators out;
  for (Index j = 0; j < s.lattice.rank(); ++j)
    out.gens.push_back(split_column(s.lattice.basis.col(j)));
  out.complete_intersection = is_mixed_dominating(s.lattice.basis);
  return out;
}

std::int64_t eval_binomial(const GaloisField& f, const Binomial& b, const TorusPoint& p) {
  return f.sub(eval_power_product(f, p, b.plus), eval_power_product(f, p, b.minus));
}

Int hilbert_function(const SubgroupSpec& s, const IntVec& alpha) {
  std::vector<IntVec> monomials = monomial_basis(s.variety, alpha);
  const size_t m = monomials.size();
  if (m == 0) return 0;
  LatticeMembership in_lattice(s.lattice);

  // Union-find over the monomial list; two exponent vectors join when their
  // difference lies in the lattice.
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&parent](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      size_t ri = find(i), rj = find(j);
      if (ri == rj) continue;
      if (in_lattice.contains(monomials[i] - monomials[j])) parent[rj] = ri;
    }
  Int classes = 0;
  for (size_t i = 0; i < m; ++i)
    if (find(i) == i) ++classes;
  return classes;
}

Int ideal_degree(const SubgroupSpec& s) { return s.order(); }

Int segment_mixed_volume(const SubgroupSpec& s) {
  Int d = determinant(s.ml);
  return d < 0 ? Int(-d) : d;
}

IntVec regularity_bound(const ToricVariety& x, const Int& c1, const Int& c2) {
  if (!x.hirzebruch_l)
    throw precondition_error("regularity bound is only known for Hirzebruch surfaces");
  if (c1 < 1 || c2 < 1) throw precondition_error("lattice multipliers must be positive");
  IntVec bound(2);
  bound(0) = c1 + c2 * *x.hirzebruch_l;
  bound(1) = c2;
  return bound;
}

}  // namespace toricode
