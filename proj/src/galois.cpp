#include "toricode/galois.hpp"

#include "toricode/errors.hpp"

#include <algorithm>
#include <numeric>

namespace toricode {

namespace {

using poly = std::vector<std::int64_t>;  // coefficients mod p, constant first

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void poly_trim(poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

poly poly_mod(poly a, const poly& f, std::int64_t p) {
  // f is monic, so long division needs no inversions.
  const std::int64_t deg_f = static_cast<std::int64_t>(f.size()) - 1;
  poly_trim(a);
  while (static_cast<std::int64_t>(a.size()) - 1 >= deg_f) {
    std::int64_t shift = static_cast<std::int64_t>(a.size()) - 1 - deg_f;
    std::int64_t c = a.back();
    for (std::int64_t i = 0; i <= deg_f; ++i) {
      std::int64_t& t = a[shift + i];
      t = (t - c * f[i]) % p;
      if (t < 0) t += p;
    }
    poly_trim(a);
  }
  return a;
}

poly poly_mulmod(const poly& a, const poly& b, const poly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), f, p);
}

poly poly_powmod(poly base, Int e, const poly& f, std::int64_t p) {
  poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

poly poly_gcd(poly a, poly b, std::int64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    std::int64_t lead = b.back();
    if (lead != 1) {
      std::int64_t inv = 1;  // lead^(p-2) by square and multiply
      std::int64_t base = lead, ex = p - 2;
      while (ex) {
        if (ex & 1) inv = inv * base % p;
        base = base * base % p;
        ex >>= 1;
      }
      for (auto& c : b) c = c * inv % p;
    }
    poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const poly& f, std::int64_t p, std::int64_t k) {
  if (k == 1) return true;
  if (k <= 4) {
    // No roots rules out linear factors; that settles degrees 2 and 3.
    for (std::int64_t a = 0; a < p; ++a) {
      std::int64_t v = 0;
      for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * a + *it) % p;
      if (v == 0) return false;
    }
    if (k == 4) {
      // Degree 4 can still split into two quadratics; trial-divide by all
      // monic quadratics.
      for (std::int64_t c1 = 0; c1 < p; ++c1)
        for (std::int64_t c0 = 0; c0 < p; ++c0) {
          poly g{c0, c1, 1};
          if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
  }
  // Rabin's test: x^(p^k) == x mod f, and x^(p^(k/t)) - x coprime to f for
  // every prime divisor t of k.
  poly x{0, 1};
  Int pk = 1;
  for (std::int64_t i = 0; i < k; ++i) pk *= p;
  poly xq = poly_powmod(x, pk, f, p);
  poly diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] - 1 + p) % p;
  poly_trim(diff);
  if (!diff.empty()) return false;
  for (std::int64_t t = 2; t <= k; ++t) {
    if (k % t != 0 || !is_prime(t)) continue;
    Int e = 1;
    for (std::int64_t i = 0; i < k / t; ++i) e *= p;
    poly xe = poly_powmod(x, e, f, p);
    poly d = xe;
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (d[1] - 1 + p) % p;
    poly g = poly_gcd(f, d, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

// Digits of the lex candidate index t, constant coefficient most
// significant, so walking t = 0,1,2,... visits coefficient tuples in
// lexicographic order.
std::vector<std::int64_t> lex_tuple(std::int64_t t, std::int64_t p, std::int64_t k) {
  std::vector<std::int64_t> c(k, 0);
  for (std::int64_t i = k - 1; i >= 0; --i) {
    c[i] = t % p;
    t /= p;
  }
  return c;
}

}  // namespace

GaloisField::GaloisField(std::int64_t p, std::int64_t k, std::vector<std::int64_t> modulus)
    : p_(p), k_(k), mod_(std::move(modulus)) {
  if (p > (std::int64_t(1) << 31)) throw validation_error("field characteristic too large");
  if (!is_prime(p)) throw validation_error("field characteristic must be prime");
  if (k < 1) throw validation_error("field extension degree must be at least 1");
  q_ = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > (std::int64_t(1) << 31)) throw validation_error("field too large (q > 2^31)");
  }
  if (static_cast<std::int64_t>(mod_.size()) != k + 1 || mod_.back() != 1)
    throw validation_error("modulus must be monic of degree k, constant term first");
  for (auto c : mod_)
    if (c < 0 || c >= p) throw validation_error("modulus coefficients must lie in [0, p)");
  if (!is_irreducible(mod_, p_, k_)) throw validation_error("modulus is reducible");
  init_tables();
}

GaloisField::GaloisField(std::int64_t p, std::int64_t k) : p_(p), k_(k) {
  if (p > (std::int64_t(1) << 31)) throw validation_error("field characteristic too large");
  if (!is_prime(p)) throw validation_error("field characteristic must be prime");
  if (k < 1) throw validation_error("field extension degree must be at least 1");
  q_ = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > (std::int64_t(1) << 31)) throw validation_error("field too large (q > 2^31)");
  }
  // First irreducible candidate in lexicographic coefficient order.
  for (std::int64_t t = 0; t < q_; ++t) {
    poly f = lex_tuple(t, p, k);
    f.push_back(1);
    if (is_irreducible(f, p, k)) {
      mod_ = std::move(f);
      break;
    }
  }
  init_tables();
}

// Builds exp/log tables for small fields (eagerly: the table is at most
// 2^16 entries and keeping construction the only mutating phase makes the
// object freely shareable across threads) and fixes the generator.
void GaloisField::init_tables() {
  const bool cache = q_ <= table_limit;
  // Find the generator by order-testing candidates in lexicographic
  // coefficient order.
  for (std::int64_t t = 1; t < q_; ++t) {
    std::int64_t cand = from_coeffs(lex_tuple(t, p_, k_));
    if (cand == 0) continue;
    if (order_of(cand) == q_ - 1) {
      eta_ = cand;
      break;
    }
  }
  if (eta_ == 0 && q_ > 1) throw std::logic_error("no primitive element found");
  if (cache) {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    std::int64_t acc = 1;
    for (std::int64_t t = 0; t < q_ - 1; ++t) {
      exp_[t] = static_cast<std::int32_t>(acc);
      log_[acc] = static_cast<std::int32_t>(t);
      acc = mul_nocache(acc, eta_);
    }
  }
}

std::int64_t GaloisField::add(std::int64_t a, std::int64_t b) const {
  if (k_ == 1) return (a + b) % p_;
  // Digitwise: polynomial addition has no carries.
  std::int64_t r = 0, mult = 1;
  for (std::int64_t i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

std::int64_t GaloisField::neg(std::int64_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  std::int64_t r = 0, mult = 1;
  for (std::int64_t i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

std::int64_t GaloisField::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t GaloisField::mul_nocache(std::int64_t a, std::int64_t b) const {
  if (k_ == 1) return a * b % p_;
  poly pa = coeffs(a), pb = coeffs(b);
  poly_trim(pa);
  poly_trim(pb);
  poly pr = poly_mulmod(pa, pb, mod_, p_);
  pr.resize(k_, 0);
  return from_coeffs(pr);
}

std::int64_t GaloisField::mul(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::int64_t t = log_[a] + log_[b];
    if (t >= q_ - 1) t -= q_ - 1;
    return exp_[t];
  }
  return mul_nocache(a, b);
}

std::int64_t GaloisField::inv(std::int64_t a) const {
  if (a == 0) throw precondition_error("inverse of zero");
  if (!exp_.empty()) {
    std::int64_t t = log_[a];
    return exp_[t == 0 ? 0 : q_ - 1 - t];
  }
  return pow(a, q_ - 2);
}

std::int64_t GaloisField::pow(std::int64_t a, Int e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw precondition_error("negative power of zero");
    return 0;
  }
  Int em = e % (q_ - 1);
  if (em < 0) em += q_ - 1;
  std::int64_t ex = em.convert_to<std::int64_t>();
  if (!exp_.empty()) {
    std::int64_t t = log_[a];
    return exp_[static_cast<std::int64_t>(static_cast<unsigned __int128>(t) * ex % (q_ - 1))];
  }
  std::int64_t result = 1, base = a;
  while (ex) {
    if (ex & 1) result = mul_nocache(result, base);
    base = mul_nocache(base, base);
    ex >>= 1;
  }
  return result;
}

Int GaloisField::order_of(std::int64_t a) const {
  if (a == 0) throw precondition_error("order of zero");
  Int order = q_ - 1;
  // Divide out prime factors of q-1 while the power stays 1.
  std::int64_t m = q_ - 1;
  for (std::int64_t f = 2; f * f <= m; ++f)
    while (m % f == 0) {
      m /= f;
      while (order % f == 0 && pow(a, order / f) == 1) order /= f;
    }
  if (m > 1)
    while (order % m == 0 && pow(a, order / m) == 1) order /= m;
  return order;
}

std::int64_t GaloisField::dlog(std::int64_t a) const {
  if (a == 0) throw precondition_error("discrete log of zero");
  if (!log_.empty()) return log_[a];
  std::int64_t acc = 1;
  for (std::int64_t t = 0; t < q_ - 1; ++t) {
    if (acc == a) return t;
    acc = mul_nocache(acc, eta_);
  }
  throw std::logic_error("dlog: generator does not reach element");
}

std::vector<std::int64_t> GaloisField::coeffs(std::int64_t a) const {
  std::vector<std::int64_t> c(k_);
  for (std::int64_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::int64_t GaloisField::from_coeffs(const std::vector<std::int64_t>& c) const {
  std::int64_t v = 0, mult = 1;
  for (std::int64_t i = 0; i < k_ && i < static_cast<std::int64_t>(c.size()); ++i) {
    v += (c[i] % p_ + p_) % p_ * mult;
    mult *= p_;
  }
  return v;
}

std::string GaloisField::to_string(std::int64_t a) const {
  if (a == 0) return "0";
  return "g^" + std::to_string(dlog(a));
}

FieldSpec FieldSpec::finite_field(std::int64_t p, std::int64_t k) {
  return FieldSpec{Kind::finite, std::make_shared<GaloisField>(p, k)};
}

FieldSpec FieldSpec::finite_field(std::int64_t p, std::int64_t k,
                                  std::vector<std::int64_t> modulus) {
  return FieldSpec{Kind::finite, std::make_shared<GaloisField>(p, k, std::move(modulus))};
}

FieldSpec FieldSpec::reals() { return FieldSpec{Kind::real, nullptr}; }
FieldSpec FieldSpec::complexes() { return FieldSpec{Kind::complex, nullptr}; }

Int roots_of_unity_count(const FieldSpec& f, const Int& d) {
  if (d <= 0) throw precondition_error("root-of-unity order must be positive");
  switch (f.kind) {
    case FieldSpec::Kind::finite:
      return gcd(d, Int(f.field->q() - 1));
    case FieldSpec::Kind::real:
      return gcd(d, Int(2));
    case FieldSpec::Kind::complex:
      return d;
  }
  throw std::logic_error("unreachable");
}

std::int64_t primitive_root_of_unity(const GaloisField& f, const Int& d) {
  if (d <= 0 || Int(f.q() - 1) % d != 0)
    throw precondition_error("order does not divide q-1, no such root of unity");
  return f.pow(f.generator(), Int(f.q() - 1) / d);
}

std::pair<std::int64_t, std::int64_t> factor_prime_power(std::int64_t q) {
  if (q < 2) throw validation_error("field size must be at least 2");
  std::int64_t p = q;
  for (std::int64_t c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  std::int64_t k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1)
    throw validation_error("field size " + std::to_string(q) + " is not a prime power");
  return {p, k};
}

}  // namespace toricode
