#include "doctest.h"
#include "oracles.hpp"

#include "toricode/errors.hpp"
#include "toricode/lattice_ideal.hpp"

#include <memory>
#include <random>
#include <vector>

using namespace toricode;

namespace {

IntMat diag2(long a, long b) { return int_mat({{a, 0}, {0, b}}); }

std::shared_ptr<const GaloisField> field_of(std::int64_t q) {
  const auto [p, k] = factor_prime_power(q);
  return std::make_shared<const GaloisField>(p, k);
}

}  // namespace

TEST_CASE("binomial generators of the Hirzebruch complete intersections") {
  const SubgroupSpec s33 = make_subgroup(hirzebruch(3), diag2(3, 3));
  const BinomialGenerators bg = binomial_generators(s33);
  REQUIRE(bg.gens.size() == 2);
  CHECK(bg.complete_intersection);
  CHECK(to_string(bg.gens[0]) == "x3^3 - x1^3");
  CHECK(to_string(bg.gens[1]) == "x4^3 - x2^3*x3^9");

  const SubgroupSpec lbeta = make_subgroup(hirzebruch(2), IntMat(IntMat::Identity(2, 2)));
  const BinomialGenerators unit = binomial_generators(lbeta);
  REQUIRE(unit.gens.size() == 2);
  CHECK(unit.complete_intersection);
  CHECK(to_string(unit.gens[0]) == "x3 - x1");
  CHECK(to_string(unit.gens[1]) == "x4 - x2*x3^2");
}

TEST_CASE("binomials split cleanly and stay homogeneous") {
  std::mt19937 rng(20240822);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<long> pick(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const ToricVariety h = hirzebruch(pick(rng));
    IntMat ml(2, 2);
    do {
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) ml(i, j) = entry(rng);
    } while (determinant(ml) == 0);
    const SubgroupSpec s = make_subgroup(h, ml);
    const BinomialGenerators bg = binomial_generators(s);
    REQUIRE(static_cast<Index>(bg.gens.size()) == s.lattice.rank());
    for (Index j = 0; j < s.lattice.rank(); ++j) {
      const Binomial& b = bg.gens[static_cast<std::size_t>(j)];
      const IntVec diff = b.plus - b.minus;
      const IntVec& col = s.lattice.basis.col(j);
      CHECK((same_matrix(diff, col) || same_matrix(diff, IntVec(-col))));
      Index top = -1;
      for (Index i = 0; i < diff.size(); ++i) {
        CHECK(b.plus(i) >= 0);
        CHECK(b.minus(i) >= 0);
        CHECK((b.plus(i) == 0 || b.minus(i) == 0));
        if (diff(i) != 0) top = i;
      }
      REQUIRE(top >= 0);
      CHECK(b.plus(top) > 0);
      CHECK(same_matrix(degree_of(h, b.plus), degree_of(h, b.minus)));
    }
  }
}

TEST_CASE("the complete-intersection flag follows the dominating test") {
  CHECK(binomial_generators(make_subgroup(hirzebruch(2), diag2(2, 2))).complete_intersection);
  CHECK(binomial_generators(make_subgroup(hirzebruch(1), diag2(4, 2))).complete_intersection);
  // [[2,1],[1,2]] produces a mixed 2x2 block in the ambient basis
  const SubgroupSpec skew = make_subgroup(hirzebruch(3), int_mat({{2, 1}, {1, 2}}));
  CHECK_FALSE(binomial_generators(skew).complete_intersection);
  CHECK_FALSE(is_mixed_dominating(skew.lattice.basis));
}

TEST_CASE("every generator vanishes on every subgroup point") {
  struct Case {
    long l, c1, c2;
    std::int64_t q;
  };
  for (const Case& c : {Case{3, 3, 3, 7}, Case{2, 3, 5, 16}, Case{1, 2, 6, 13}}) {
    const ToricVariety h = hirzebruch(c.l);
    const SubgroupSpec s = make_subgroup(h, diag2(c.c1, c.c2));
    const auto f = field_of(c.q);
    const BinomialGenerators bg = binomial_generators(s);
    for (const TorusPoint& p : enumerate_points(s, f))
      for (const Binomial& b : bg.gens) CHECK(eval_binomial(*f, b, p) == 0);
  }
}

TEST_CASE("eval_binomial fixture") {
  const GaloisField f(7, 1);
  Binomial b;
  b.plus = int_vec({1, 0});
  b.minus = int_vec({0, 1});
  CHECK(eval_binomial(f, b, TorusPoint{{3, 3}}) == 0);
  CHECK(eval_binomial(f, b, TorusPoint{{3, 2}}) == 1);
}

TEST_CASE("hilbert function reproduces the nine-point dimension column") {
  const SubgroupSpec s33 = make_subgroup(hirzebruch(3), diag2(3, 3));
  const long alphas[9][2] = {{0, 0}, {1, 0}, {2, 0}, {3, 1}, {4, 1},
                             {5, 1}, {6, 2}, {7, 2}, {8, 2}};
  for (long k = 0; k < 9; ++k)
    CHECK(hilbert_function(s33, int_vec({alphas[k][0], alphas[k][1]})) == k + 1);
}

TEST_CASE("hilbert function agrees with canonical-representative counting") {
  std::mt19937 rng(20240823);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<long> pick(1, 3);
  std::uniform_int_distribution<long> cdeg(0, 8);
  std::uniform_int_distribution<long> ddeg(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const ToricVariety h = hirzebruch(pick(rng));
    IntMat ml(2, 2);
    do {
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) ml(i, j) = entry(rng);
    } while (determinant(ml) == 0);
    const SubgroupSpec s = make_subgroup(h, ml);
    const IntVec alpha = int_vec({cdeg(rng), ddeg(rng)});
    CHECK(hilbert_function(s, alpha) == oracles::hilbert_by_reduction(s, alpha));
  }
}

TEST_CASE("hilbert function is monotone and caps at the group order") {
  for (long l : {1L, 3L}) {
    const ToricVariety h = hirzebruch(l);
    for (long c1 : {1L, 2L, 4L}) {
      for (long c2 : {1L, 2L, 4L}) {
        const SubgroupSpec s = make_subgroup(h, diag2(c1, c2));
        const IntVec bound = regularity_bound(h, c1, c2);
        const long bc = bound(0).convert_to<long>();
        const long bd = bound(1).convert_to<long>();
        Int prev_row_start = 0;
        for (long dd = 0; dd <= bd + 2; ++dd) {
          Int prev = -1;
          for (long cc = 0; cc <= bc + 2; ++cc) {
            const Int value = hilbert_function(s, int_vec({cc, dd}));
            CHECK(value <= s.order());
            if (cc > 0) CHECK(value >= prev);
            if (cc == 0) {
              CHECK(value >= prev_row_start);
              prev_row_start = value;
            }
            if (cc >= bc && dd >= bd) CHECK(value == s.order());
            prev = value;
          }
        }
      }
    }
  }
}

TEST_CASE("degree fixtures") {
  const ToricVariety h2 = hirzebruch(2);
  CHECK(ideal_degree(make_subgroup(h2, diag2(3, 5))) == 15);
  CHECK(ideal_degree(make_subgroup(h2, IntMat(IntMat::Identity(2, 2)))) == 1);
  CHECK(ideal_degree(make_subgroup(h2, diag2(1, 5))) == 5);

  CHECK(segment_mixed_volume(make_subgroup(h2, diag2(3, 5))) == 15);
  CHECK(segment_mixed_volume(make_subgroup(h2, IntMat(IntMat::Identity(2, 2)))) == 1);
  CHECK(segment_mixed_volume(make_subgroup(h2, int_mat({{2, 1}, {0, 3}}))) == 6);
}

TEST_CASE("degree equals mixed volume equals the factor product") {
  std::mt19937 rng(20240824);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::uniform_int_distribution<long> pick(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const ToricVariety h = hirzebruch(pick(rng));
    IntMat ml(2, 2);
    do {
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) ml(i, j) = entry(rng);
    } while (determinant(ml) == 0);
    const SubgroupSpec s = make_subgroup(h, ml);
    const Int deg = ideal_degree(s);
    CHECK(deg == segment_mixed_volume(s));
    CHECK(deg == s.order());
    CHECK(deg == lattice_index(s.lattice, h.grading_kernel()));
  }
}

TEST_CASE("regularity bound fixtures") {
  CHECK(same_matrix(regularity_bound(hirzebruch(3), 3, 3), int_vec({12, 3})));
  CHECK(same_matrix(regularity_bound(hirzebruch(0), 1, 1), int_vec({1, 1})));
  const IntVec b = regularity_bound(hirzebruch(2), 3, 5);
  CHECK(same_matrix(b, int_vec({13, 5})));
  CHECK(hilbert_function(make_subgroup(hirzebruch(2), diag2(3, 5)), b) == 15);

  CHECK_THROWS_AS(regularity_bound(projective_space(2), 1, 1), precondition_error);
  // the flag travels with the constructor, not the ray set
  CHECK_THROWS_AS(
      regularity_bound(make_toric_variety(int_mat({{1, 0}, {0, 1}, {-1, 2}, {0, -1}})), 2, 2),
      precondition_error);
  CHECK_THROWS_AS(regularity_bound(hirzebruch(2), 0, 1), precondition_error);
}
