#include "toricode/toric_code.hpp"

#include "toricode/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace toricode {

namespace {

long degree_entry(const Int& v, const char* what) {
  if (v < 0) throw precondition_error(std::string(what) + " must be nonnegative");
  if (v > 1000000000) throw validation_error(std::string(what) + " is implausibly large");
  return v.convert_to<long>();
}

// x * y / 2 with the evenness asserted; every halved product in the
// dimension formulas contains an even factor, so a failure here is a bug.
Int half_product(long x, long y) {
  Int t = Int(x) * y;
  if (t % 2 != 0) throw std::logic_error("dimension formula parity failure");
  return t / 2;
}

void check_hirzebruch_args(long l, long c1, long c2, const Int& q) {
  if (l < 1) throw validation_error("Hirzebruch parameter l must be at least 1");
  if (c1 < 1 || c2 < 1) throw validation_error("cyclic orders c1, c2 must be positive");
  if (q < 2) throw validation_error("field size must be at least 2");
  if ((q - 1) % c1 != 0 || (q - 1) % c2 != 0)
    throw precondition_error("c1 and c2 must divide q-1");
}

std::pair<long, long> degree_pair(const IntVec& alpha) {
  if (alpha.size() != 2)
    throw validation_error("degree on a Hirzebruch surface has two entries");
  return {degree_entry(alpha(0), "degree entry c"), degree_entry(alpha(1), "degree entry d")};
}

}  // namespace

GfMat gf_rref(const GaloisField& f, const GfMat& m) {
  GfMat a = m;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const std::int64_t inv = f.inv(a(r, c));
    for (Index j = c; j < cols; ++j)
      a(r, j) = static_cast<std::int32_t>(f.mul(inv, a(r, j)));
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const std::int64_t s = a(i, c);
      for (Index j = c; j < cols; ++j)
        a(i, j) = static_cast<std::int32_t>(f.sub(a(i, j), f.mul(s, a(r, j))));
    }
    ++r;
  }
  return a.topRows(r);
}

ToricCode build_code(const SubgroupSpec& s, const std::shared_ptr<const GaloisField>& f,
                     const IntVec& alpha) {
  if (!f) throw validation_error("build_code needs a finite field");
  if (alpha.size() != s.variety.grading_dim())
    throw validation_error("degree vector has wrong length for this grading");
  if (!is_full_over(s, Int(f->q())))
    throw precondition_error(
        "the subgroup is not full over GF(q); correct the lattice first");
  ToricCode code;
  code.subgroup = s;
  code.field = f;
  code.alpha = alpha;
  code.basis = monomial_basis(s.variety, alpha);
  code.points = enumerate_points(s, f);
  code.gen.resize(static_cast<Index>(code.basis.size()),
                  static_cast<Index>(code.points.size()));
  for (Index i = 0; i < code.gen.rows(); ++i)
    for (Index j = 0; j < code.gen.cols(); ++j)
      code.gen(i, j) = static_cast<std::int32_t>(
          eval_power_product(*f, code.points[j], code.basis[i]));
  code.rref = gf_rref(*f, code.gen);
  return code;
}

namespace {

// One information set of the code: a reduced row basis whose pivot columns
// restrict codewords to their message vectors. defect counts pivots that
// were already claimed by earlier sets; done is the last message weight
// fully enumerated against this set.
struct InfoSet {
  std::vector<std::int32_t> rows;  // k x n, row-major
  int defect = 0;
  int done = 0;
  std::vector<std::int32_t> scaled;  // k x q x n multiples, built on demand
};

// Repeated Gauss-Jordan passes that prefer pivot columns no earlier set has
// used. Fresh pivot sets are pairwise disjoint, which is what makes the
// weight lower bounds of the sets add up.
std::vector<InfoSet> information_chain(const GaloisField& f, const GfMat& rref) {
  const Index kk = rref.rows();
  const Index nn = rref.cols();
  std::vector<char> used(static_cast<std::size_t>(nn), 0);
  std::vector<InfoSet> chain;
  Index remaining = nn;
  while (remaining > 0) {
    GfMat m = rref;
    std::vector<Index> order;
    order.reserve(static_cast<std::size_t>(nn));
    for (Index c = 0; c < nn; ++c)
      if (!used[static_cast<std::size_t>(c)]) order.push_back(c);
    const std::size_t unused_count = order.size();
    for (Index c = 0; c < nn; ++c)
      if (used[static_cast<std::size_t>(c)]) order.push_back(c);
    Index r = 0;
    int fresh = 0;
    for (std::size_t oi = 0; oi < order.size() && r < kk; ++oi) {
      const Index col = order[oi];
      Index piv = -1;
      for (Index i = r; i < kk; ++i) {
        if (m(i, col) != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      if (piv != r) m.row(piv).swap(m.row(r));
      const std::int64_t inv = f.inv(m(r, col));
      for (Index j = 0; j < nn; ++j)
        m(r, j) = static_cast<std::int32_t>(f.mul(inv, m(r, j)));
      for (Index i = 0; i < kk; ++i) {
        if (i == r || m(i, col) == 0) continue;
        const std::int64_t sc = m(i, col);
        for (Index j = 0; j < nn; ++j)
          m(i, j) = static_cast<std::int32_t>(f.sub(m(i, j), f.mul(sc, m(r, j))));
      }
      if (oi < unused_count) {
        used[static_cast<std::size_t>(col)] = 1;
        ++fresh;
        --remaining;
      }
      ++r;
    }
    if (r != kk) throw std::logic_error("information set lost rank");
    // No fresh pivot means every remaining column is zero in the whole
    // code; such columns never carry weight, so the chain is complete.
    if (fresh == 0) break;
    InfoSet is;
    is.rows.assign(m.data(), m.data() + kk * nn);
    is.defect = static_cast<int>(kk) - fresh;
    chain.push_back(std::move(is));
  }
  return chain;
}

// C(kk, w) * (q-1)^(w-1): pinned-leading-coefficient messages of weight w.
Int pass_cost(int kk, int w, std::int64_t q) {
  Int c = 1;
  for (int i = 0; i < w; ++i) {
    c *= kk - i;
    c /= i + 1;
  }
  for (int i = 0; i + 1 < w; ++i) c *= q - 1;
  return c;
}

// Array-lookup field ops for small q: one add table plus every scalar
// multiple of every row, precomputed.
struct TableOps {
  std::int64_t q = 0;
  Index nn = 0;
  const std::int32_t* add_table = nullptr;
  const std::int32_t* scaled = nullptr;

  std::int32_t add(std::int32_t x, std::int32_t y) const {
    return add_table[static_cast<std::size_t>(x) * static_cast<std::size_t>(q) + y];
  }
  const std::int32_t* row(int i, std::int64_t s) const {
    return scaled + (static_cast<std::size_t>(i) * static_cast<std::size_t>(q) + s) *
                        static_cast<std::size_t>(nn);
  }
};

// Fallback for large q: field calls per entry, scalar multiples built into
// a scratch row on demand.
struct GenericOps {
  const GaloisField* f = nullptr;
  const std::vector<std::int32_t>* rows = nullptr;
  Index nn = 0;
  mutable std::vector<std::int32_t> scratch;

  std::int32_t add(std::int32_t x, std::int32_t y) const {
    return static_cast<std::int32_t>(f->add(x, y));
  }
  const std::int32_t* row(int i, std::int64_t s) const {
    scratch.resize(static_cast<std::size_t>(nn));
    const std::int32_t* src = rows->data() + static_cast<std::size_t>(i) * nn;
    for (Index c = 0; c < nn; ++c)
      scratch[static_cast<std::size_t>(c)] =
          static_cast<std::int32_t>(f->mul(s, src[c]));
    return scratch.data();
  }
};

// All weight-w messages against one information set, leading support
// coefficient pinned to 1 (scalar multiples share their weight). Supports
// are dealt round-robin to threads; the codeword is updated incrementally,
// one row multiple per odometer step.
template <typename Ops>
void weight_pass(const Ops& ops, int kk, Index nn, std::int64_t q, int w,
                 const std::vector<std::int64_t>& step_delta, std::int64_t reset_delta,
                 int tid, int nthreads, std::int64_t& best_io) {
  std::vector<int> idx(static_cast<std::size_t>(w));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::int32_t> cw(static_cast<std::size_t>(nn));
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(w));
  std::int64_t counter = 0;
  std::int64_t best = best_io;
  const auto apply = [&](int row_index, std::int64_t s, int& wt) {
    const std::int32_t* rp = ops.row(row_index, s);
    for (Index c = 0; c < nn; ++c) {
      const std::int32_t before = cw[static_cast<std::size_t>(c)];
      const std::int32_t after = ops.add(before, rp[c]);
      wt += (after != 0) - (before != 0);
      cw[static_cast<std::size_t>(c)] = after;
    }
  };
  for (;;) {
    if (counter % nthreads == tid) {
      std::fill(cw.begin(), cw.end(), 0);
      int wt = 0;
      for (int t = 0; t < w; ++t) apply(idx[static_cast<std::size_t>(t)], 1, wt);
      std::fill(coeff.begin(), coeff.end(), 1);
      if (wt < best) best = wt;
      for (;;) {
        int t = w - 1;
        while (t >= 1 && coeff[static_cast<std::size_t>(t)] == q - 1) --t;
        if (t < 1) break;
        apply(idx[static_cast<std::size_t>(t)],
              step_delta[static_cast<std::size_t>(coeff[static_cast<std::size_t>(t)])], wt);
        ++coeff[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < w; ++u) {
          apply(idx[static_cast<std::size_t>(u)], reset_delta, wt);
          coeff[static_cast<std::size_t>(u)] = 1;
        }
        if (wt < best) best = wt;
      }
    }
    ++counter;
    int t = w - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == kk - w + t) --t;
    if (t < 0) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < w; ++u)
      idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
  best_io = best;
}

}  // namespace

Int minimum_distance_exhaustive(const ToricCode& code, const DistanceOptions& opts) {
  if (code.dim() < 1)
    throw precondition_error("the zero code has no minimum distance");
  const GaloisField& f = *code.field;
  const std::int64_t q = f.q();
  const int kk = static_cast<int>(code.rref.rows());
  const Index nn = code.rref.cols();
  const int nthreads = std::max(1, opts.threads);
  const Int budget = opts.budget;

  // The naive message space q^K is the documented budget contract; when it
  // fits, the chain plan below (which can only be cheaper per set, but uses
  // several sets) is never cut off.
  Int naive = 1;
  for (int i = 0; i < kk; ++i) naive *= q;
  const bool within_naive = naive <= budget;

  auto chain = information_chain(f, code.rref);

  // Walking a coefficient v -> v+1 adds sub(v+1, v) times the row to the
  // codeword; the odometer carry q-1 -> 1 adds sub(1, q-1) times it.
  std::vector<std::int64_t> step_delta(static_cast<std::size_t>(std::max<std::int64_t>(q - 1, 1)), 0);
  for (std::int64_t v = 1; v + 1 <= q - 1; ++v)
    step_delta[static_cast<std::size_t>(v)] = f.sub(v + 1, v);
  const std::int64_t reset_delta = f.sub(1, q - 1);

  const bool tabled = q <= 256;
  std::vector<std::int32_t> add_table;
  if (tabled) {
    add_table.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (std::int64_t x = 0; x < q; ++x)
      for (std::int64_t y = 0; y < q; ++y)
        add_table[static_cast<std::size_t>(x * q + y)] =
            static_cast<std::int32_t>(f.add(x, y));
  }

  std::int64_t best = static_cast<std::int64_t>(nn) + 1;
  Int planned = 0;

  const auto run_pass = [&](InfoSet& is, int w) {
    planned += pass_cost(kk, w, q);
    if (!within_naive && planned > budget)
      throw budget_error("minimum distance search would plan " + planned.str() +
                         " codeword evaluations, over the budget of " + budget.str());
    if (tabled && is.scaled.empty()) {
      is.scaled.resize(static_cast<std::size_t>(kk) * static_cast<std::size_t>(q) *
                       static_cast<std::size_t>(nn));
      for (int i = 0; i < kk; ++i) {
        const std::int32_t* src = is.rows.data() + static_cast<std::size_t>(i) * nn;
        for (std::int64_t s = 0; s < q; ++s) {
          std::int32_t* dst =
              is.scaled.data() +
              (static_cast<std::size_t>(i) * static_cast<std::size_t>(q) + s) *
                  static_cast<std::size_t>(nn);
          for (Index c = 0; c < nn; ++c)
            dst[c] = static_cast<std::int32_t>(f.mul(s, src[c]));
        }
      }
    }
    std::vector<std::int64_t> bests(static_cast<std::size_t>(nthreads), best);
    const auto body = [&](int tid) {
      if (tabled) {
        TableOps ops{q, nn, add_table.data(), is.scaled.data()};
        weight_pass(ops, kk, nn, q, w, step_delta, reset_delta, tid, nthreads,
                    bests[static_cast<std::size_t>(tid)]);
      } else {
        GenericOps ops{&f, &is.rows, nn, {}};
        weight_pass(ops, kk, nn, q, w, step_delta, reset_delta, tid, nthreads,
                    bests[static_cast<std::size_t>(tid)]);
      }
    };
    if (nthreads == 1) {
      body(0);
    } else {
      std::vector<std::thread> workers;
      workers.reserve(static_cast<std::size_t>(nthreads));
      for (int tid = 0; tid < nthreads; ++tid) workers.emplace_back(body, tid);
      for (auto& t : workers) t.join();
    }
    for (const std::int64_t b : bests) best = std::min(best, b);
    is.done = w;
  };

  for (int w = 1; w <= kk; ++w) {
    for (auto& is : chain) {
      if (is.defect > w) continue;
      for (int wc = is.done + 1; wc <= w; ++wc) run_pass(is, wc);
    }
    // Any codeword no pass has produced has weight at least w+1-defect on
    // each set's fresh columns, and fresh columns never overlap.
    Int lower = 0;
    for (const auto& is : chain)
      if (is.done >= w && w + 1 - is.defect > 0) lower += w + 1 - is.defect;
    if (Int(best) <= lower) return best;
  }
  return best;
}

HirzebruchCodeParams hirzebruch_code_params(long l, long c1, long c2, const Int& q,
                                            const IntVec& alpha) {
  check_hirzebruch_args(l, c1, c2, q);
  if (c1 > l * c2)
    throw precondition_error("the closed form requires c1 <= l*c2; use the brute-force search");
  HirzebruchCodeParams r;
  r.l = l;
  r.c1 = c1;
  r.c2 = c2;
  r.q = q;
  std::tie(r.c, r.d) = degree_pair(alpha);
  r.b = std::min(r.c / l, r.d);
  r.a = r.c - l * r.b;
  r.mu1 = std::min(r.c, c1 - 1);
  r.mu2 = std::min(r.b, c2 - 1);
  r.n = Int(c1) * c2;
  if (r.c < c1) {
    r.delta = Int(c2) * (c1 - r.c);
    if (r.b <= c2 - 1) {
      r.branch = 1;
      r.k = Int(r.b + 1) * (r.c + 1) - Int(l) * half_product(r.b, r.b + 1);
    } else {
      r.branch = 2;
      r.k = Int(c2) * (r.c + 1) - Int(l) * half_product(c2, c2 - 1);
    }
  } else {
    r.b_prime = std::min((r.c - c1 + 1) / l, r.d);
    if (r.b_prime >= c2 - 1) {
      r.branch = 5;
      r.k = r.n;
      r.delta = 1;
    } else if (r.b < c2 - 1) {
      r.branch = 3;
      r.k = Int(c1) * (r.b_prime + 1) + Int(r.b - r.b_prime) * (r.c + 1) -
            Int(l) * half_product(r.b - r.b_prime, r.b + r.b_prime + 1);
      r.delta = c2 - r.b_prime;
    } else {
      r.branch = 4;
      r.k = Int(c1) * (r.b_prime + 1) + Int(c2 - 1 - r.b_prime) * (r.c + 1) -
            Int(l) * half_product(c2 - 1 - r.b_prime, c2 + r.b_prime);
      r.delta = c2 - r.b_prime;
    }
  }
  return r;
}

HirzebruchCodeParams hirzebruch_code_params_large_l(long l, long c1, long c2, const Int& q,
                                                    const IntVec& alpha) {
  check_hirzebruch_args(l, c1, c2, q);
  if (l < c1)
    throw precondition_error("the simplified formulas require l >= c1");
  HirzebruchCodeParams r;
  r.l = l;
  r.c1 = c1;
  r.c2 = c2;
  r.q = q;
  std::tie(r.c, r.d) = degree_pair(alpha);
  r.b = std::min(r.c / l, r.d);
  r.a = r.c - l * r.b;
  r.mu1 = std::min(r.c, c1 - 1);
  r.mu2 = std::min(r.b, c2 - 1);
  r.n = Int(c1) * c2;
  if (r.c >= c1) r.b_prime = std::min((r.c - c1 + 1) / l, r.d);
  if (r.c < c1) {
    // b = 0 since c < c1 <= l, so K = c+1 = a+1
    r.branch = 1;
    r.k = r.a + 1;
    r.delta = Int(c2) * (c1 - r.a);
  } else if (r.b_prime >= c2 - 1) {
    r.branch = 5;
    r.k = r.n;
    r.delta = 1;
  } else if (r.a >= c1 - 1) {
    // l >= c1 collapses b' to b, and the middle dimension sum telescopes
    r.branch = 3;
    r.k = Int(c1) * (r.b + 1);
    r.delta = c2 - r.b;
  } else {
    // a < c1-1 <= l-1 collapses b' to b-1 (and c >= c1 forces b >= 1)
    r.branch = (r.b < c2 - 1) ? 3 : 4;
    r.k = Int(c1) * r.b + 1 + r.a;
    r.delta = Int(c2) - r.b + 1;
  }
  return r;
}

bool equivalence_hint(const ToricCode& x, const ToricCode& y) {
  if (!x.field || !y.field || !x.field->same_field(*y.field))
    throw precondition_error("equivalence hint needs codes over the same field");
  if (!same_matrix(x.subgroup.variety.phi, y.subgroup.variety.phi) ||
      !lattice_equal(x.subgroup.lattice, y.subgroup.lattice))
    throw precondition_error("equivalence hint needs codes on the same subgroup");
  if (x.dim() != y.dim()) return false;
  IntVec diff = x.alpha - y.alpha;
  bool zero = true;
  for (Index i = 0; i < diff.size(); ++i) {
    if (diff(i) != 0) {
      zero = false;
      break;
    }
  }
  if (zero) return true;
  if (!monomial_basis(x.subgroup.variety, diff).empty()) return true;
  const IntVec neg = -diff;
  return !monomial_basis(x.subgroup.variety, neg).empty();
}

std::vector<SweepRow> table_sweep(long l, long c1, long c2, std::int64_t q,
                                  const DistanceOptions& opts) {
  check_hirzebruch_args(l, c1, c2, Int(q));
  const auto [p, k] = factor_prime_power(q);
  const auto f = std::make_shared<const GaloisField>(p, k);
  const bool closed_ok = c1 <= l * c2;
  const ToricVariety x = hirzebruch(l);
  IntMat ml = IntMat::Zero(2, 2);
  ml(0, 0) = c1;
  ml(1, 1) = c2;
  const SubgroupSpec s = make_subgroup(x, ml);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(c1) * static_cast<std::size_t>(c2));
  for (long b = 0; b < c2; ++b) {
    for (long a = 0; a < c1; ++a) {
      SweepRow row;
      row.a = a;
      row.b = b;
      row.alpha = IntVec(2);
      row.alpha(0) = a + l * b;
      row.alpha(1) = b;
      const ToricCode code = build_code(s, f, row.alpha);
      row.n = code.length();
      const Int k_rank = code.dim();
      bool have_brute = false;
      Int delta_brute = 0;
      try {
        delta_brute = minimum_distance_exhaustive(code, opts);
        have_brute = true;
      } catch (const budget_error&) {
        if (!closed_ok) throw;  // no closed form to fall back on
      }
      if (have_brute) {
        row.k = k_rank;
        row.delta = delta_brute;
        row.method = closed_ok ? "both" : "brute";
      }
      if (closed_ok) {
        const HirzebruchCodeParams cf = hirzebruch_code_params(l, c1, c2, Int(q), row.alpha);
        if (!have_brute) {
          row.k = cf.k;
          row.delta = cf.delta;
          row.method = "closed_form";
          row.mismatch = cf.n != row.n || cf.k != k_rank;
        } else {
          row.mismatch = cf.n != row.n || cf.k != row.k || cf.delta != row.delta;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace toricode
