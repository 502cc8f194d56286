#include "toricode/torus_subgroup.hpp"

#include "toricode/errors.hpp"
#include "toricode/smith.hpp"

#include <numeric>
#include <string>

namespace toricode {

SubgroupSpec make_subgroup(const ToricVariety& x, const IntMat& ml) {
  const Index n = x.torus_dim();
  if (ml.rows() != n || ml.cols() != n)
    throw validation_error("coordinate matrix must be n x n for the torus dimension n");
  if (determinant(ml) == 0)
    throw precondition_error("coordinate matrix is singular (the subgroup would be infinite)");
  SubgroupSpec s{x, Lattice{x.phi * ml}, ml, smith_normal_form(ml).invariant_factors};
  return s;
}

SubgroupSpec make_subgroup_from_ambient(const ToricVariety& x, const IntMat& basis_z) {
  if (basis_z.rows() != x.rays())
    throw validation_error("ambient basis vectors must have one entry per ray");
  Lattice kernel = x.grading_kernel();
  for (Index j = 0; j < basis_z.cols(); ++j)
    if (!lattice_membership(kernel, basis_z.col(j)))
      throw precondition_error("generator " + std::to_string(j) +
                               " is not in the relation lattice of the torus");
  Lattice l{hermite_form(basis_z).h};
  if (l.rank() != x.torus_dim())
    throw precondition_error("generators span rank " + std::to_string(l.rank()) +
                             ", expected " + std::to_string(x.torus_dim()) +
                             " (the subgroup would be infinite)");
  IntMat ml = coords_in(l, kernel);
  SubgroupSpec s{x, std::move(l), ml, smith_normal_form(ml).invariant_factors};
  return s;
}

namespace {

bool is_small_prime(const Int& p) {
  if (p < 2) return false;
  for (Int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

}  // namespace

Int count_points(const SubgroupSpec& s, const FieldSpec& f) {
  Int total = 1;
  for (const Int& d : s.invariant_factors) total *= roots_of_unity_count(f, d);
  return total;
}

bool is_full_over(const SubgroupSpec& s, const Int& q) {
  if (q < 2) throw precondition_error("field size must be at least 2");
  return (q - 1) % s.invariant_factors.back() == 0;
}

Int smallest_field_size(const SubgroupSpec& s, const Int& p) {
  if (p > (Int(1) << 31) || !is_small_prime(p))
    throw validation_error("characteristic must be a prime below 2^31");
  const Int dn = s.invariant_factors.back();
  if (gcd(p, dn) != 1)
    throw precondition_error("characteristic divides the group order");
  // Multiplicative order of p modulo d_n.
  Int q = p;
  Int residue = p % dn;
  while (residue != 1 && dn != 1) {
    residue = residue * p % dn;
    q *= p;
  }
  return q;
}

SubgroupSpec correct_lattice(const SubgroupSpec& s, const Int& q) {
  if (q < 2) throw precondition_error("field size must be at least 2");
  IntMat scaled = s.variety.phi * (q - 1);
  Lattice sum = lattice_sum(s.lattice, Lattice{std::move(scaled)});
  IntMat ml = coords_in(sum, s.variety.grading_kernel());
  return make_subgroup(s.variety, ml);
}

std::int64_t eval_power_product(const GaloisField& f, const TorusPoint& p, const IntVec& u) {
  std::int64_t v = 1;
  for (Index j = 0; j < u.size(); ++j)
    v = f.mul(v, f.pow(p.coords[static_cast<size_t>(j)], u(j)));
  return v;
}

std::vector<std::int64_t> orbit_key(const ToricVariety& x, const GaloisField& f,
                                    const TorusPoint& p) {
  std::vector<std::int64_t> key(static_cast<size_t>(x.torus_dim()));
  for (Index i = 0; i < x.torus_dim(); ++i)
    key[static_cast<size_t>(i)] = eval_power_product(f, p, x.phi.col(i));
  return key;
}

ParamMatrix parameterize(const SubgroupSpec& s, const std::shared_ptr<const GaloisField>& f) {
  const Int q = f->q();
  if (!is_full_over(s, q))
    throw precondition_error("lattice is not full over GF(" + q.str() +
                             "); correct the lattice first");
  const Index r = s.variety.rays();
  const Index n = s.variety.torus_dim();
  SmithDecomposition snf = smith_normal_form(s.lattice.basis);
  if (snf.invariant_factors != s.invariant_factors)
    throw std::logic_error("ambient basis and coordinate matrix disagree on invariant factors");

  ParamMatrix out;
  out.q_matrix.resize(n, r);
  out.generators.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Int& d = s.invariant_factors[static_cast<size_t>(i)];
    Int step = (q - 1) / d;
    std::int64_t eta_i = primitive_root_of_unity(*f, d);
    TorusPoint gen;
    gen.coords.resize(static_cast<size_t>(r));
    for (Index j = 0; j < r; ++j) {
      out.q_matrix(i, j) = step * snf.a(i, j);
      gen.coords[static_cast<size_t>(j)] = f->pow(eta_i, snf.a(i, j));
    }
    // The generator's orbit must have order exactly d_i.
    std::vector<std::int64_t> key = orbit_key(s.variety, *f, gen);
    Int ord = 1;
    for (std::int64_t c : key) ord = lcm(ord, f->order_of(c));
    if (ord != d)
      throw std::logic_error("generator " + std::to_string(i) + " has orbit order " +
                             ord.str() + ", expected " + d.str());
    out.generators.push_back(std::move(gen));
  }
  bool leading_trivial = true;
  for (Index i = 0; i + 1 < n; ++i)
    if (s.invariant_factors[static_cast<size_t>(i)] != 1) leading_trivial = false;
  if (leading_trivial && n >= 1) out.cyclic_row = IntMat(out.q_matrix.bottomRows(1));
  return out;
}

std::vector<TorusPoint> enumerate_points(const SubgroupSpec& s,
                                         const std::shared_ptr<const GaloisField>& f) {
  ParamMatrix pm = parameterize(s, f);
  const Index r = s.variety.rays();
  const Index n = s.variety.torus_dim();
  const std::vector<Int>& d = s.invariant_factors;

  std::vector<TorusPoint> points;
  std::vector<Int> k(static_cast<size_t>(n), 0);
  for (;;) {
    TorusPoint p;
    p.coords.assign(static_cast<size_t>(r), 1);
    for (Index i = 0; i < n; ++i) {
      if (k[static_cast<size_t>(i)] == 0) continue;
      for (Index j = 0; j < r; ++j) {
        std::int64_t pw = f->pow(pm.generators[static_cast<size_t>(i)].coords[static_cast<size_t>(j)],
                                 k[static_cast<size_t>(i)]);
        p.coords[static_cast<size_t>(j)] = f->mul(p.coords[static_cast<size_t>(j)], pw);
      }
    }
    points.push_back(std::move(p));
    // Advance the power tuple in lexicographic order, last index fastest.
    Index i = n - 1;
    while (i >= 0) {
      if (++k[static_cast<size_t>(i)] < d[static_cast<size_t>(i)]) break;
      k[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }

  if (Int(static_cast<long>(points.size())) != s.order())
    throw std::logic_error("enumerated point count disagrees with the group order");
  // Every point must satisfy the binomials of the lattice basis.
  for (const TorusPoint& p : points)
    for (Index j = 0; j < s.lattice.rank(); ++j)
      if (eval_power_product(*f, p, s.lattice.basis.col(j)) != 1)
        throw std::logic_error("enumerated point violates a lattice binomial");
  return points;
}

YqReport check_yq_correspondence(const ToricVariety& x, const IntMat& q_matrix, const Int& q) {
  if (q_matrix.cols() != x.rays())
    throw validation_error("parameterization matrix must have one column per ray (" +
                           std::to_string(x.rays()) + ")");
  if (q < 2) throw precondition_error("field size must be at least 2");
  const Int qm1 = q - 1;
  Lattice kernel_q{integer_kernel(q_matrix)};
  Lattice grading = x.grading_kernel();

  YqReport rep{};
  rep.lq_in_grading_kernel = true;
  for (Index j = 0; j < kernel_q.rank(); ++j)
    if (!lattice_membership(grading, kernel_q.basis.col(j))) {
      rep.lq_in_grading_kernel = false;
      break;
    }

  // Image of the grading kernel under Q, and its saturation at q-1.
  Lattice image{hermite_form(q_matrix * x.phi).h};
  rep.saturation_holds = lattice_equal(image, saturate_at(image, qm1));

  // Lattice combination (ker Q meet grading kernel) + (q-1) grading kernel.
  Lattice meet = lattice_intersection(kernel_q, grading);
  Lattice combined = lattice_sum(meet, Lattice{IntMat(x.phi * qm1)});
  rep.combined = make_subgroup(x, coords_in(combined, grading));

  // True relation lattice of the parameterized points: m = phi*y with
  // Q m = 0 mod q-1, solved through the kernel of [Q*phi | -(q-1) I].
  IntMat m = q_matrix * x.phi;
  IntMat stacked = IntMat::Zero(m.rows(), m.cols() + m.rows());
  stacked.leftCols(m.cols()) = m;
  for (Index i = 0; i < m.rows(); ++i) stacked(i, m.cols() + i) = -qm1;
  IntMat ker = integer_kernel(stacked);
  IntMat ys = hermite_form(ker.topRows(m.cols())).h;
  rep.point_set = make_subgroup(x, ys);

  rep.lattices_agree = lattice_equal(rep.combined.lattice, rep.point_set.lattice);
  return rep;
}

}  // namespace toricode
