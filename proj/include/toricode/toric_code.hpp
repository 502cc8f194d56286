#pragma once

#include "toricode/lattice_ideal.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace toricode {

// Matrices over GF(q) store the integer codes of their entries.
using GfMat = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Gauss-Jordan reduction; returns only the nonzero rows, so the row count of
// the result is the rank of m.
GfMat gf_rref(const GaloisField& f, const GfMat& m);

// Evaluation code of the degree-alpha monomials at the points of Y. The rows
// of gen are the evaluations of the monomials in basis, in the same order;
// rref is a reduced row basis of the span, so dim() already accounts for
// monomials that evaluate identically.
struct ToricCode {
  SubgroupSpec subgroup;
  std::shared_ptr<const GaloisField> field;
  IntVec alpha;
  std::vector<IntVec> basis;
  std::vector<TorusPoint> points;
  GfMat gen;
  GfMat rref;

  Index length() const { return gen.cols(); }
  Index dim() const { return rref.rows(); }
};

// Requires the subgroup to be full over GF(q) (run correct_lattice first if
// it is not); alpha may be any degree, an empty monomial basis gives the
// zero code with dim() == 0.
ToricCode build_code(const SubgroupSpec& s, const std::shared_ptr<const GaloisField>& f,
                     const IntVec& alpha);

struct DistanceOptions {
  // Upper bound on the number of codeword evaluations the search is allowed
  // to plan. The plan is checked before each enumeration pass, so the same
  // inputs either succeed or throw budget_error regardless of thread count.
  std::int64_t budget = 10'000'000;
  int threads = 1;
};

// Exact minimum weight. Messages are enumerated in order of weight against a
// chain of information sets with pairwise disjoint fresh columns; once every
// unseen codeword is forced above the best weight found, the search stops.
// Requires dim() >= 1.
Int minimum_distance_exhaustive(const ToricCode& c, const DistanceOptions& opts = {});

// Closed-form parameters for diagonal subgroups diag(c1, c2) on the
// Hirzebruch surface H_l, alpha = (c, d). Valid when c1 and c2 divide q-1
// and c1 <= l*c2. branch records which case of the dimension/distance
// formula applied; a, b, b_prime, mu1, mu2 are the quantities the formula is
// stated in.
struct HirzebruchCodeParams {
  long l = 0;
  long c1 = 0;
  long c2 = 0;
  Int q;
  long c = 0;
  long d = 0;
  long a = 0;
  long b = 0;
  long b_prime = 0;
  long mu1 = 0;
  long mu2 = 0;
  Int n;
  Int k;
  Int delta;
  int branch = 0;
};

HirzebruchCodeParams hirzebruch_code_params(long l, long c1, long c2, const Int& q,
                                            const IntVec& alpha);

// Simplified formulas for l >= c1, where b' collapses to b and the dimension
// count telescopes. Always agrees with hirzebruch_code_params on its domain.
HirzebruchCodeParams hirzebruch_code_params_large_l(long l, long c1, long c2, const Int& q,
                                                    const IntVec& alpha);

// Monomial equivalence test for two codes on the same subgroup and field:
// true when the degrees differ by the degree of a monomial, which rescales
// the evaluation columns and preserves [N, K, delta]. False merely means
// this particular certificate is absent.
bool equivalence_hint(const ToricCode& a, const ToricCode& b);

struct SweepRow {
  long a = 0;
  long b = 0;
  IntVec alpha;
  Int n;
  Int k;
  Int delta;
  // "both" when closed form and brute force both ran, "closed_form" when the
  // brute-force search hit the budget, "brute" when c1 > l*c2 puts the
  // closed form out of scope.
  std::string method;
  bool mismatch = false;
};

// One row per degree (a + l*b, b) with 0 <= a < c1, 0 <= b < c2, b varying
// slowest. Every row that can be computed both ways is cross-checked and
// flags any disagreement in mismatch.
std::vector<SweepRow> table_sweep(long l, long c1, long c2, std::int64_t q,
                                  const DistanceOptions& opts = {});

}  // namespace toricode
