#pragma once

#include "toricode/torus_subgroup.hpp"

#include <string>
#include <vector>

namespace toricode {

// x^plus - x^minus for a lattice vector m = plus - minus split into its
// positive and negative parts; the supports are disjoint by construction.
// Signs are normalized so the highest-index variable in the support sits on
// the plus side.
struct Binomial {
  IntVec plus;
  IntVec minus;
};

// "x3^2 - x1*x2" style, variables ascending on each side, empty side = "1".
std::string to_string(const Binomial& b);

struct BinomialGenerators {
  std::vector<Binomial> gens;  // one per stored lattice basis column
  // True when the basis matrix is mixed dominating, which certifies the
  // binomials generate the whole ideal (a complete intersection). When
  // false the list may generate a proper sub-ideal; consumers should fall
  // back to point enumeration.
  bool complete_intersection = false;
};

BinomialGenerators binomial_generators(const SubgroupSpec& s);

// Evaluates the binomial at a torus point (plus side minus minus side).
std::int64_t eval_binomial(const GaloisField& f, const Binomial& b, const TorusPoint& p);

// Number of classes of degree-alpha monomials under a ~ a' iff a - a' lies
// in the lattice: the dimension of the degree-alpha piece of the quotient
// ring, and the dimension K of the evaluation code. Field independent.
Int hilbert_function(const SubgroupSpec& s, const IntVec& alpha);

// Product of the invariant factors = index of the lattice in the relation
// lattice of the torus.
Int ideal_degree(const SubgroupSpec& s);

// n! times the mixed volume of the Newton segments of the generators,
// computed determinantally from the coordinate matrix; always equals
// ideal_degree.
Int segment_mixed_volume(const SubgroupSpec& s);

// Degree (c1 + c2*l, c2) on the Hirzebruch surface H_l: every alpha
// coordinatewise at or above it has hilbert_function equal to c1*c2.
IntVec regularity_bound(const ToricVariety& x, const Int& c1, const Int& c2);

}  // namespace toricode
