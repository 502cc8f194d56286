#include "doctest.h"
#include "oracles.hpp"

#include "toricode/smith.hpp"

#include <random>

using namespace toricode;

namespace {

IntMat random_matrix(std::mt19937& rng, Index rows, Index cols, int span) {
  std::uniform_int_distribution<int> dist(-span, span);
  IntMat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on the rank-2 golden matrix") {
  // [2 u1 | 3 u2] for the rays (1,0), (0,1), (-1,2), (0,-1)
  const IntMat m = int_mat({{2, 0}, {0, 3}, {-2, 6}, {0, -3}});
  const auto s = smith_normal_form(m);
  const IntMat expected = int_mat({{1, 0}, {0, 6}, {0, 0}, {0, 0}});
  CHECK(same_matrix(s.d, expected));
  CHECK(same_matrix(IntMat(s.a * m * s.c), s.d));
  CHECK(is_unimodular(s.a));
  CHECK(is_unimodular(s.c));
  REQUIRE(s.invariant_factors.size() == 2);
  CHECK(s.invariant_factors[0] == 1);
  CHECK(s.invariant_factors[1] == 6);
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat m = random_matrix(rng, dim(rng), dim(rng), 6);
    const auto s = smith_normal_form(m);
    CHECK(same_matrix(IntMat(s.a * m * s.c), s.d));
    CHECK(is_unimodular(s.a));
    CHECK(is_unimodular(s.c));
    // diagonal, nonnegative, divisibility chain
    for (Index i = 0; i < s.d.rows(); ++i)
      for (Index j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      CHECK(s.invariant_factors[i] > 0);
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    }
    // factors match the gcd-of-minors definition
    const auto expected = oracles::invariant_factors_by_minors(m);
    REQUIRE(s.invariant_factors.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(s.invariant_factors[i] == expected[i]);
  }
}

TEST_CASE("smith normal form of identity and zero") {
  const auto id = smith_normal_form(IntMat(IntMat::Identity(3, 3)));
  REQUIRE(id.invariant_factors.size() == 3);
  for (const Int& f : id.invariant_factors) CHECK(f == 1);

  const auto zero = smith_normal_form(IntMat(IntMat::Zero(2, 3)));
  CHECK(zero.invariant_factors.empty());
  CHECK(same_matrix(zero.d, IntMat(IntMat::Zero(2, 3))));
}

TEST_CASE("hermite form reproduces the corrected-lattice basis exactly") {
  // [3 u1 | 5 u2 | 10 u1 | 10 u2] on the rays of H_2; the column Hermite
  // basis collapses to [u1 | 5 u2].
  const IntMat m = int_mat({{3, 0, 10, 0},
                            {0, 5, 0, 10},
                            {-3, 10, -10, 20},
                            {0, -5, 0, -10}});
  const auto h = hermite_form(m);
  const IntMat expected = int_mat({{1, 0}, {0, 5}, {-1, 10}, {0, -5}});
  CHECK(same_matrix(h.h, expected));
}

TEST_CASE("hermite form properties on random matrices") {
  std::mt19937 rng(20240812);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat m = random_matrix(rng, dim(rng), dim(rng), 6);
    const auto h = hermite_form(m);
    CHECK(is_unimodular(h.u));
    // m * u = [h | 0]
    const IntMat mu = m * h.u;
    for (Index j = 0; j < mu.cols(); ++j) {
      for (Index i = 0; i < mu.rows(); ++i) {
        if (j < h.h.cols())
          CHECK(mu(i, j) == h.h(i, j));
        else
          CHECK(mu(i, j) == 0);
      }
    }
    // pivots positive, pivot rows strictly increasing, entries in a pivot
    // row reduced to [0, pivot) in all earlier columns
    Index prev_row = -1;
    for (Index j = 0; j < h.h.cols(); ++j) {
      Index pr = 0;
      while (pr < h.h.rows() && h.h(pr, j) == 0) ++pr;
      REQUIRE(pr < h.h.rows());
      CHECK(pr > prev_row);
      prev_row = pr;
      CHECK(h.h(pr, j) > 0);
      for (Index e = 0; e < j; ++e) {
        CHECK(h.h(pr, e) >= 0);
        CHECK(h.h(pr, e) < h.h(pr, j));
      }
    }
  }
}

TEST_CASE("integer kernel really is the kernel") {
  std::mt19937 rng(20240813);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMat m = random_matrix(rng, dim(rng), dim(rng), 5);
    const IntMat k = integer_kernel(m);
    const IntMat prod = m * k;
    for (Index i = 0; i < prod.rows(); ++i)
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    // rank-nullity against the invariant factor count
    const auto s = smith_normal_form(m);
    CHECK(k.cols() == m.cols() - static_cast<Index>(s.invariant_factors.size()));
  }
}

TEST_CASE("integer kernel is saturated: small solutions lie in its span") {
  // every kernel vector with entries in [-4, 4] must be an integer
  // combination of the returned basis
  std::mt19937 rng(20240814);
  std::uniform_int_distribution<int> dim(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMat m = random_matrix(rng, dim(rng), dim(rng), 2);
    const IntMat k = integer_kernel(m);
    const Index n = m.cols();
    std::vector<long> v(static_cast<std::size_t>(n), -4);
    for (;;) {
      IntVec x(n);
      for (Index i = 0; i < n; ++i) x(i) = v[static_cast<std::size_t>(i)];
      const IntVec mx = m * x;
      bool in_kernel = true;
      for (Index i = 0; i < mx.size(); ++i)
        if (mx(i) != 0) {
          in_kernel = false;
          break;
        }
      if (in_kernel) CHECK(oracles::member_by_search(k, x, 8));
      Index t = 0;
      while (t < n && v[static_cast<std::size_t>(t)] == 4) {
        v[static_cast<std::size_t>(t)] = -4;
        ++t;
      }
      if (t == n) break;
      ++v[static_cast<std::size_t>(t)];
    }
  }
}
