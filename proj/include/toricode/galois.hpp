#pragma once

#include "toricode/intmat.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace toricode {

// GF(p^k) as residues modulo a monic irreducible of degree k over GF(p).
// Elements are encoded as integers in [0, q): the base-p digits of the code
// are the residue's coefficients, constant term first. Field sizes are
// capped so q fits comfortably in int64; discrete-log tables are kept for
// q <= table_limit, which makes mul/inv/pow a couple of array lookups.
class GaloisField {
 public:
  static constexpr std::int64_t table_limit = 1 << 16;

  // Picks the lexicographically smallest monic irreducible modulus of
  // degree k (coefficient tuples compared constant term first).
  GaloisField(std::int64_t p, std::int64_t k);
  // Explicit modulus, constant term first with leading coefficient 1;
  // verified irreducible.
  GaloisField(std::int64_t p, std::int64_t k, std::vector<std::int64_t> modulus);

  std::int64_t p() const { return p_; }
  std::int64_t k() const { return k_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return mod_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, Int e) const;

  // Fixed primitive element: the first candidate of full multiplicative
  // order when elements are walked in lexicographic coefficient order.
  std::int64_t generator() const { return eta_; }
  Int order_of(std::int64_t a) const;
  std::int64_t dlog(std::int64_t a) const;  // generator()^result == a, a != 0

  std::vector<std::int64_t> coeffs(std::int64_t a) const;
  std::int64_t from_coeffs(const std::vector<std::int64_t>& c) const;
  std::string to_string(std::int64_t a) const;  // "0" or "g^t"

  bool same_field(const GaloisField& other) const {
    return p_ == other.p_ && k_ == other.k_ && mod_ == other.mod_;
  }

 private:
  void init_tables();
  std::int64_t mul_nocache(std::int64_t a, std::int64_t b) const;

  std::int64_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::int64_t> mod_;
  std::int64_t eta_ = 0;
  std::vector<std::int32_t> exp_, log_;  // empty when q > table_limit
};

// Ground field of a problem: a finite field, the reals, or the complexes.
// The real and complex cases only ever feed root-of-unity counting.
struct FieldSpec {
  enum class Kind { finite, real, complex };
  Kind kind = Kind::finite;
  std::shared_ptr<const GaloisField> field;  // set iff kind == finite

  static FieldSpec finite_field(std::int64_t p, std::int64_t k);
  static FieldSpec finite_field(std::int64_t p, std::int64_t k,
                                std::vector<std::int64_t> modulus);
  static FieldSpec reals();
  static FieldSpec complexes();
};

// Number of d-th roots of unity in the field: gcd(d, q-1) for GF(q),
// gcd(d, 2) for the reals, d for the complexes.
Int roots_of_unity_count(const FieldSpec& f, const Int& d);

// generator()^((q-1)/d), the canonical d-th root of unity; requires d | q-1.
std::int64_t primitive_root_of_unity(const GaloisField& f, const Int& d);

// Splits q = p^k with p prime; rejects anything that is not a prime power.
std::pair<std::int64_t, std::int64_t> factor_prime_power(std::int64_t q);

}  // namespace toricode
