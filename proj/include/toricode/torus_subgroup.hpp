#pragma once

#include "toricode/galois.hpp"
#include "toricode/toric_variety.hpp"

#include <optional>
#include <vector>

namespace toricode {

// A point of the torus inside the variety, stored as an explicit coordinate
// tuple (one field element per ray, all nonzero). Two tuples describe the
// same point of the variety exactly when their orbit keys agree.
struct TorusPoint {
  std::vector<std::int64_t> coords;
};

// Finite subgroup of the torus cut out by a finite-index sublattice L of
// the grading kernel. ml holds the coordinates of L's basis in terms of the
// columns of phi; the invariant factors d_1 | d_2 | ... | d_n of ml
// determine the group structure Z_{d_1} x ... x Z_{d_n} of the quotient.
struct SubgroupSpec {
  ToricVariety variety;
  Lattice lattice;  // basis as constructed, r x n
  IntMat ml;        // n x n, nonsingular
  std::vector<Int> invariant_factors;

  Int order() const {
    Int t = 1;
    for (const Int& d : invariant_factors) t *= d;
    return t;
  }
};

// From coordinates in the grading kernel basis (columns of ml are the
// coordinate vectors). Throws precondition_error when ml is singular.
SubgroupSpec make_subgroup(const ToricVariety& x, const IntMat& ml);

// From ambient Z^r vectors (columns of basis_z); each column must lie in
// the grading kernel, otherwise precondition_error names the column.
SubgroupSpec make_subgroup_from_ambient(const ToricVariety& x, const IntMat& basis_z);

// Number of solutions over the given field: the product over the invariant
// factors d_i of the number of d_i-th roots of unity in the field.
Int count_points(const SubgroupSpec& s, const FieldSpec& f);

// The group order is realized over GF(q) exactly when d_n | q-1.
bool is_full_over(const SubgroupSpec& s, const Int& q);

// Smallest power q = p^k with d_n | q-1, i.e. k is the multiplicative order
// of p modulo d_n. Throws precondition_error when p divides the group order.
Int smallest_field_size(const SubgroupSpec& s, const Int& p);

// Replace L by L + (q-1) * (grading kernel): the result is full over GF(q)
// and has the same solutions over GF(q).
SubgroupSpec correct_lattice(const SubgroupSpec& s, const Int& q);

// Multiplicative generators of the subgroup over GF(q). Row i of q_matrix
// is (q-1)/d_i times row i of the Smith row transform of the lattice basis;
// generator i has coordinates eta_i^(that row), eta_i a primitive d_i-th
// root of unity. The row transform is not unique, so callers may rely on
// generator orbit orders and the product decomposition, not on the exact
// entries.
struct ParamMatrix {
  IntMat q_matrix;                      // n x r
  std::vector<TorusPoint> generators;   // orbit order of generator i is d_i
  std::optional<IntMat> cyclic_row;     // 1 x r when d_1 = ... = d_{n-1} = 1
};

ParamMatrix parameterize(const SubgroupSpec& s, const std::shared_ptr<const GaloisField>& f);

// All points, as coordinatewise products of generator powers, ordered
// lexicographically by the power tuple (k_1, ..., k_n), k_i in [0, d_i).
// Each emitted point is checked against the lattice basis binomials.
std::vector<TorusPoint> enumerate_points(const SubgroupSpec& s,
                                         const std::shared_ptr<const GaloisField>& f);

// x^u at the point, u an integer vector indexed by rays (negative entries
// use inverses; all coordinates are units).
std::int64_t eval_power_product(const GaloisField& f, const TorusPoint& p, const IntVec& u);

// (x^{u_1}, ..., x^{u_n}) at the point, the complete orbit invariant.
std::vector<std::int64_t> orbit_key(const ToricVariety& x, const GaloisField& f,
                                    const TorusPoint& p);

// Diagnostic for a proposed parameterization matrix: compares the lattice
// combination (ker Q meet grading kernel) + (q-1) * grading kernel against
// the true relation lattice {m in grading kernel : Q m = 0 mod q-1} of the
// parameterized point set. The two agree exactly when the image of the
// grading kernel under Q is saturated at q-1.
struct YqReport {
  bool lq_in_grading_kernel;  // ker Q contained in the grading kernel
  bool saturation_holds;
  SubgroupSpec combined;      // subgroup spec of the lattice combination
  SubgroupSpec point_set;     // subgroup spec of the true relation lattice
  bool lattices_agree;        // combined == point_set (iff saturation_holds)
};

YqReport check_yq_correspondence(const ToricVariety& x, const IntMat& q_matrix, const Int& q);

}  // namespace toricode
