#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <initializer_list>
#include <string>

namespace toricode {

// All exact linear algebra runs over arbitrary precision integers so that
// coefficient growth inside normal form eliminations can never overflow.
// (The GMP backend is used rather than cpp_int because the latter's byte
// container constructor trips over Eigen 3.4 expression types during
// overload resolution.)
using Int = boost::multiprecision::mpz_int;

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Literal builders, mostly for tests and small fixed matrices.
IntMat int_mat(std::initializer_list<std::initializer_list<long>> rows);
IntVec int_vec(std::initializer_list<long> entries);

// Exact entrywise equality (Eigen's == is cwise and not defined for Matrix).
template <typename A, typename B>
bool same_matrix(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i)
      if (x(i, j) != y(i, j)) return false;
  return true;
}

// Exact determinant by Bareiss fraction-free elimination.
Int determinant(const IntMat& m);

bool is_unimodular(const IntMat& m);

std::string to_string(const IntMat& m);

}  // namespace toricode
