#include "cremona/groebner.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace cremona {

Ideal::Ideal(Ring ring, std::vector<Poly> gens) : ring_(ring) {
  for (auto& g : gens) {
    if (!(g.ring() == ring)) throw Error(ErrorKind::Shape, "generator from another ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (!(ring_ == o.ring_)) throw Error(ErrorKind::Shape, "sum of ideals in different rings");
  auto gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Poly& f) const {
  auto gens = gens_;
  gens.push_back(f);
  return Ideal(ring_, std::move(gens));
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis) out.push_back(g.lead_monomial());
  return out;
}

long long monomial_count(int nvars, int d) {
  if (d < 0 || nvars <= 0) return (d == 0 && nvars == 0) ? 1 : 0;
  // C(d + n - 1, n - 1)
  long long r = 1;
  for (int i = 1; i < nvars; ++i) r = r * (d + i) / i;
  return r;
}

namespace {

std::uint32_t divmask(const Monomial& m, int nvars) {
  std::uint32_t mask = 0;
  for (int i = 0; i < nvars; ++i)
    if (m.e[i]) mask |= 1u << i;
  return mask;
}

/// Degree used for pair selection: the tag variable weighs nothing.
int weighted_degree(const Monomial& m, MonoOrder order) {
  return order == MonoOrder::TagElim ? m.deg - m.e[0] : m.deg;
}

int sugar_of(const Poly& f) {
  int s = 0;
  for (const auto& t : f.terms()) s = std::max(s, weighted_degree(t.m, f.ring().order));
  return s;
}

bool has_all_pure_powers(const std::vector<Monomial>& lms, int nvars) {
  std::vector<bool> seen(nvars, false);
  for (const auto& m : lms) {
    int support = -1, count = 0;
    for (int i = 0; i < nvars; ++i)
      if (m.e[i]) {
        support = i;
        ++count;
      }
    if (count == 1) seen[support] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

/// Monomial ranking consistent with monomials_of_degree (descending grevlex).
class DegreeIndex {
 public:
  explicit DegreeIndex(int nvars) : n_(nvars) {
    // skip_[v][rd][e] = sum_{k<e} monomial_count(v, rd - k)
    skip_.assign(static_cast<std::size_t>(n_) * kSpan * kSpan, 0);
    for (int v = 1; v < n_; ++v)
      for (int rd = 0; rd < kSpan; ++rd)
        for (int e = 1; e <= rd && e < kSpan; ++e)
          at(v, rd, e) = at(v, rd, e - 1) + monomial_count(v, rd - e + 1);
  }

  long long rank(const Monomial& m) const {
    if (m.deg >= kSpan) return slow_rank(m);
    long long r = 0;
    int rd = m.deg;
    for (int v = n_ - 1; v >= 1; --v) {
      const int e = m.e[v];
      r += skip_[(static_cast<std::size_t>(v) * kSpan + rd) * kSpan + e];
      rd -= e;
    }
    return r;
  }

 private:
  static constexpr int kSpan = 64;

  long long& at(int v, int rd, int e) {
    return skip_[(static_cast<std::size_t>(v) * kSpan + rd) * kSpan + e];
  }

  long long slow_rank(const Monomial& m) const {
    long long r = 0;
    int rd = m.deg;
    for (int v = n_ - 1; v >= 1; --v) {
      const int e = m.e[v];
      for (int k = 0; k < e; ++k) r += monomial_count(v, rd - k);
      rd -= e;
    }
    return r;
  }

  int n_;
  std::vector<long long> skip_;
};

class Engine {
 public:
  Engine(const Ring& ring, const GroebnerOptions& opt)
      : ring_(ring), F_(ring.p), opt_(opt), index_(ring.nvars) {
    dense_ = ring.order == MonoOrder::Grevlex;
  }

  GroebnerBasis run(std::vector<Poly> input) {
    for (const auto& g : input)
      if (!g.is_homogeneous()) dense_ = false;
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
      const int sa = sugar_of(a), sb = sugar_of(b);
      if (sa != sb) return sa < sb;
      return ring_.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    GroebnerBasis out;
    out.ring = ring_;
    // feed the generators through the pair queue as pseudo-pairs (i, -1)
    for (auto& g : input) pending_.push_back(std::move(g));
    std::size_t next_input = 0;
    while (true) {
      // choose the smaller of the next input and the next pair
      const bool have_pair = !pairs_.empty();
      const bool have_input = next_input < pending_.size();
      if (!have_pair && !have_input) break;
      bool take_input = have_input;
      if (have_pair && have_input) {
        const auto& top = pairs_.front();
        take_input = sugar_of(pending_[next_input]) <= top.sugar;
      }
      Poly h(ring_);
      int deg = 0;
      if (take_input) {
        h = pending_[next_input++];
        deg = sugar_of(h);
        if (deg > opt_.budget.max_degree) {
          truncate(out, deg);
          continue;
        }
        h = reduce(h, deg);
      } else {
        std::pop_heap(pairs_.begin(), pairs_.end(), PairCmp{this});
        Pair pr = pairs_.back();
        pairs_.pop_back();
        if (pr.sugar > opt_.budget.max_degree) {
          truncate(out, pr.sugar);
          continue;
        }
        if (++out.pairs_processed > opt_.budget.max_pairs) {
          out.complete = false;
          out.valid_through_degree = std::min(out.valid_through_degree, pr.sugar - 1);
          break;
        }
        deg = pr.sugar;
        h = reduce(spoly(pr), deg);
      }
      if (h.is_zero()) continue;
      insert(h.monic(), deg);
      if (opt_.stop_when_empty && has_all_pure_powers(lms_, ring_.nvars)) {
        out.empty_certified = true;
        out.complete = false;
        break;
      }
    }
    if (has_all_pure_powers(lms_, ring_.nvars)) out.empty_certified = true;
    out.basis = interreduce();
    return out;
  }

 private:
  struct PairCmp {
    const Engine* e;
    // heap ordering: smallest sugar, then smallest lcm, on top
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar > b.sugar;
      const int c = e->ring_.compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };

  void truncate(GroebnerBasis& out, int deg) {
    out.complete = false;
    out.valid_through_degree = std::min(out.valid_through_degree, deg - 1);
  }

  Poly spoly(const Pair& pr) const {
    const Poly& a = g_[pr.i];
    const Poly& b = g_[pr.j];
    const Monomial ma = quotient(pr.lcm, a.lead_monomial());
    const Monomial mb = quotient(pr.lcm, b.lead_monomial());
    // both monic
    return a.mul_term(ma, 1).sub_mul(1, mb, b);
  }

  int find_reducer(const Monomial& m) const {
    const std::uint32_t mm = divmask(m, ring_.nvars);
    for (std::size_t k = 0; k < lms_.size(); ++k)
      if ((masks_[k] & ~mm) == 0 && divides(lms_[k], m)) return static_cast<int>(k);
    return -1;
  }

  Poly reduce(const Poly& f, int deg) {
    if (f.is_zero()) return f;
    if (dense_) {
      const long long count = monomial_count(ring_.nvars, deg);
      if (count <= kDenseLimit && f.is_homogeneous()) return reduce_dense(f, deg);
    }
    return reduce_sparse(f);
  }

  Poly reduce_sparse(const Poly& f) const {
    Poly rem = f;
    std::vector<Term> done;
    const PrimeField& F = F_;
    while (!rem.is_zero()) {
      const Monomial lm = rem.lead_monomial();
      const int k = find_reducer(lm);
      if (k < 0) {
        done.push_back(rem.terms().front());
        Poly rest(ring_);
        rest = rem.sub_mul(1, Monomial{}, Poly::monomial(ring_, lm, rem.lead_coeff()));
        rem = std::move(rest);
        continue;
      }
      rem = rem.sub_mul(F.mul(rem.lead_coeff(), 1), quotient(lm, lms_[k]), g_[k]);
    }
    return Poly(ring_, std::move(done));
  }

  /// Tail of a cached pivot row; columns ascending, all after the pivot.
  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<std::uint32_t> vals;
  };

  struct DenseDegree {
    std::vector<Monomial> monos;
    std::vector<int> reducer;  // >= 0 index, otherwise -(checked count) - 1
    // Macaulay-style pivot rows, tail reduced when built (small degrees only)
    bool cached = false;
    std::vector<int> row_of;
    std::vector<Row> rows;
    std::size_t synced = 0;  // leading monomials already expanded into rows
  };

  DenseDegree& degree_table(int deg) {
    auto it = tables_.find(deg);
    if (it != tables_.end()) return it->second;
    // degrees are processed in increasing order; drop the rows of lower ones
    for (auto& [d, t] : tables_)
      if (d < deg) {
        t.rows.clear();
        t.rows.shrink_to_fit();
        t.row_of.assign(t.row_of.size(), -1);
        t.synced = 0;
      }
    DenseDegree t;
    t.monos = monomials_of_degree(ring_.nvars, deg);
    t.reducer.assign(t.monos.size(), -1);
    t.cached = t.monos.size() <= kRowLimit;
    if (t.cached) t.row_of.assign(t.monos.size(), -1);
    return tables_.emplace(deg, std::move(t)).first->second;
  }

  int dense_reducer(DenseDegree& t, std::size_t idx) {
    int v = t.reducer[idx];
    if (v >= 0) return v;
    const std::size_t checked = static_cast<std::size_t>(-v - 1);
    const Monomial& m = t.monos[idx];
    const std::uint32_t mm = divmask(m, ring_.nvars);
    for (std::size_t k = checked; k < lms_.size(); ++k)
      if ((masks_[k] & ~mm) == 0 && divides(lms_[k], m)) {
        t.reducer[idx] = static_cast<int>(k);
        return static_cast<int>(k);
      }
    t.reducer[idx] = -static_cast<int>(lms_.size()) - 1;
    return -1;
  }

  // Sparse accumulator over one degree, drained in increasing column order.
  void touch(std::uint32_t j, std::uint64_t v, bool lazy) {
    if (!mark_[j]) {
      mark_[j] = 1;
      heap_.push(j);
    }
    acc_[j] = lazy ? acc_[j] + v : (acc_[j] + v) % ring_.p;
  }

  // Eliminates every cached pivot; what is left goes to out (column, coefficient).
  void drain_rows(const DenseDegree& t, bool lazy, Row& out) {
    const std::uint64_t p = ring_.p;
    while (!heap_.empty()) {
      const std::uint32_t j = heap_.top();
      heap_.pop();
      mark_[j] = 0;
      const std::uint64_t c = acc_[j] % p;
      acc_[j] = 0;
      if (c == 0) continue;
      const int r = t.row_of[j];
      if (r < 0) {
        out.cols.push_back(j);
        out.vals.push_back(static_cast<std::uint32_t>(c));
        continue;
      }
      const Row& row = t.rows[r];
      const std::uint64_t negc = p - c;
      for (std::size_t s = 0; s < row.cols.size(); ++s) touch(row.cols[s], negc * row.vals[s], lazy);
    }
  }

  void prepare_scratch(std::size_t n) {
    if (acc_.size() != n) {
      acc_.assign(n, 0);
      mark_.assign(n, 0);
    }
  }

  // Expands the leading monomials not yet seen into tail-reduced pivot rows.
  void sync_rows(DenseDegree& t, int deg) {
    if (t.synced == lms_.size()) return;
    std::vector<std::pair<std::uint32_t, int>> fresh;
    for (std::size_t k = t.synced; k < lms_.size(); ++k) {
      const int rest = deg - lms_[k].deg;
      if (rest < 0) continue;
      for (const auto& q : monomials_of_degree(ring_.nvars, rest)) {
        const auto idx = static_cast<std::uint32_t>(index_.rank(q * lms_[k]));
        if (t.row_of[idx] == -1) {
          t.row_of[idx] = -2;  // claimed
          fresh.emplace_back(idx, static_cast<int>(k));
        }
      }
    }
    t.synced = lms_.size();
    // build from the smallest monomial up so each tail meets finished rows only
    std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [idx, k] : fresh) t.row_of[idx] = -1;
    prepare_scratch(t.monos.size());
    const bool lazy = ring_.p < (1u << 20) && t.monos.size() < (1u << 22);
    for (const auto& [idx, k] : fresh) {
      const Monomial mult = quotient(t.monos[idx], lms_[k]);
      const auto& terms = g_[k].terms();
      for (std::size_t s = 1; s < terms.size(); ++s)
        touch(static_cast<std::uint32_t>(index_.rank(terms[s].m * mult)), terms[s].c, lazy);
      Row row;
      drain_rows(t, lazy, row);
      t.row_of[idx] = static_cast<int>(t.rows.size());
      t.rows.push_back(std::move(row));
    }
  }

  Poly reduce_dense(const Poly& f, int deg) {
    DenseDegree& t = degree_table(deg);
    if (t.cached) {
      sync_rows(t, deg);
      prepare_scratch(t.monos.size());
      const bool lazy = ring_.p < (1u << 20) && t.monos.size() < (1u << 22);
      for (const auto& term : f.terms())
        touch(static_cast<std::uint32_t>(index_.rank(term.m)), term.c, lazy);
      Row rest;
      drain_rows(t, lazy, rest);
      std::vector<Term> out;
      out.reserve(rest.cols.size());
      for (std::size_t s = 0; s < rest.cols.size(); ++s) out.push_back({t.monos[rest.cols[s]], rest.vals[s]});
      return out.empty() ? Poly(ring_) : Poly(ring_, std::move(out));
    }
    prepare_scratch(t.monos.size());
    const std::uint64_t p = ring_.p;
    const bool lazy = p < (1u << 20) && acc_.size() < (1u << 22);
    for (const auto& term : f.terms()) acc_[index_.rank(term.m)] = term.c;
    std::vector<Term> out;
    for (std::size_t idx = 0; idx < acc_.size(); ++idx) {
      const std::uint64_t c = acc_[idx] % p;
      acc_[idx] = 0;
      if (c == 0) continue;
      const int k = dense_reducer(t, idx);
      if (k < 0) {
        out.push_back({t.monos[idx], static_cast<std::uint32_t>(c)});
        continue;
      }
      const Monomial mult = quotient(t.monos[idx], lms_[k]);
      const std::uint64_t negc = p - c;
      const auto& terms = g_[k].terms();
      if (lazy) {
        // each slot takes at most one product per pivot, so no overflow for p < 2^20
        for (std::size_t s = 1; s < terms.size(); ++s) acc_[index_.rank(terms[s].m * mult)] += negc * terms[s].c;
      } else {
        for (std::size_t s = 1; s < terms.size(); ++s) {
          const long long r = index_.rank(terms[s].m * mult);
          acc_[r] = (acc_[r] + negc * terms[s].c) % p;
        }
      }
    }
    Poly r(ring_);
    if (!out.empty()) r = Poly(ring_, std::move(out));
    return r;
  }

  void insert(Poly h, int deg) {
    const int hi = static_cast<int>(g_.size());
    const Monomial hlm = h.lead_monomial();
    g_.push_back(std::move(h));
    lms_.push_back(hlm);
    masks_.push_back(divmask(hlm, ring_.nvars));
    sugars_.push_back(deg);

    // Gebauer-Moeller update
    std::vector<Pair> cands;
    for (int k = 0; k < hi; ++k) {
      if (!active_[k]) continue;
      const Monomial l = lcm(lms_[k], hlm);
      const int s = std::max(sugars_[k] + weighted_degree(quotient(l, lms_[k]), ring_.order),
                             deg + weighted_degree(quotient(l, hlm), ring_.order));
      cands.push_back({k, hi, l, s});
    }
    std::vector<bool> coprime_flag(cands.size());
    for (std::size_t a = 0; a < cands.size(); ++a)
      coprime_flag[a] = coprime(lms_[cands[a].i], hlm);
    // keep (h,g1) if coprime or no other candidate's lcm divides its lcm
    std::vector<int> kept;
    std::vector<bool> removed(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (coprime_flag[a]) {
        kept.push_back(static_cast<int>(a));
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
        if (b == a || removed[b]) continue;
        if (divides(cands[b].lcm, cands[a].lcm)) {
          // equal lcms: keep only the first survivor
          if (cands[b].lcm == cands[a].lcm && b > a && !coprime_flag[b]) continue;
          dominated = true;
        }
      }
      if (dominated)
        removed[a] = true;
      else
        kept.push_back(static_cast<int>(a));
    }
    // drop old pairs made redundant by h
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size());
    for (const auto& pr : pairs_) {
      if (divides(hlm, pr.lcm) && !(lcm(lms_[pr.i], hlm) == pr.lcm) &&
          !(lcm(lms_[pr.j], hlm) == pr.lcm))
        continue;
      survivors.push_back(pr);
    }
    pairs_ = std::move(survivors);
    for (int a : kept)
      if (!coprime_flag[a]) pairs_.push_back(cands[a]);
    std::make_heap(pairs_.begin(), pairs_.end(), PairCmp{this});

    for (int k = 0; k < hi; ++k)
      if (active_[k] && divides(hlm, lms_[k])) active_[k] = false;
    active_.push_back(true);
  }

  std::vector<Poly> interreduce() const {
    std::vector<int> minimal;
    for (std::size_t k = 0; k < g_.size(); ++k) {
      bool redundant = false;
      for (std::size_t l = 0; l < g_.size() && !redundant; ++l) {
        if (l == k || !divides(lms_[l], lms_[k])) continue;
        if (!(lms_[l] == lms_[k]) || l < k) redundant = true;
      }
      if (!redundant) minimal.push_back(static_cast<int>(k));
    }
    std::vector<Poly> basis;
    for (int k : minimal) basis.push_back(g_[k]);
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
      return ring_.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    // tail reduction; leading terms are untouched since the set is minimal
    std::vector<Poly> reduced;
    reduced.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Poly> others;
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (l != k) others.push_back(basis[l]);
      reduced.push_back(normal_form(basis[k], others).monic());
    }
    return reduced;
  }

  static constexpr long long kDenseLimit = 4000000;
  static constexpr std::size_t kRowLimit = 20000;

  Ring ring_;
  PrimeField F_;
  GroebnerOptions opt_;
  DegreeIndex index_;
  bool dense_;
  std::vector<Poly> pending_;
  std::vector<Poly> g_;
  std::vector<Monomial> lms_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> sugars_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::unordered_map<int, DenseDegree> tables_;
  std::vector<std::uint64_t> acc_;
  std::vector<char> mark_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options) {
  const Ring& ring = ideal.ring();
  if (ring.p < 2) throw Error(ErrorKind::CharZeroUnsupported, "Groebner bases need a prime field");
  if (ring.nvars > kMaxVars) throw Error(ErrorKind::Arity, "too many variables");
  Engine engine(ring, options);
  return engine.run(ideal.gens());
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  const Ring& ring = f.ring();
  const PrimeField F = ring.field();
  std::vector<std::uint32_t> masks;
  for (const auto& g : basis) masks.push_back(divmask(g.lead_monomial(), ring.nvars));
  Poly rem = f;
  std::vector<Term> done;
  while (!rem.is_zero()) {
    const Monomial lm = rem.lead_monomial();
    const std::uint32_t mm = divmask(lm, ring.nvars);
    int k = -1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((masks[i] & ~mm) == 0 && divides(basis[i].lead_monomial(), lm)) {
        k = static_cast<int>(i);
        break;
      }
    if (k < 0) {
      done.push_back(rem.terms().front());
      rem = rem.sub_mul(1, Monomial{}, Poly::monomial(ring, lm, rem.lead_coeff()));
      continue;
    }
    const auto c = F.mul(rem.lead_coeff(), F.inv(basis[k].lead_coeff()));
    rem = rem.sub_mul(c, quotient(lm, basis[k].lead_monomial()), basis[k]);
  }
  return Poly(ring, std::move(done));
}

bool projective_emptiness(const GroebnerBasis& gb) {
  if (gb.empty_certified) return true;
  if (!gb.complete) throw Error(ErrorKind::IncompleteBasis, "basis was truncated by the budget");
  return false;
}

std::optional<bool> certify_projectively_empty(const Ideal& ideal, const Budget& budget) {
  GroebnerOptions opt;
  opt.budget = budget;
  opt.stop_when_empty = true;
  const auto gb = groebner_basis(ideal, opt);
  if (gb.empty_certified) return true;
  if (gb.complete) return false;
  return std::nullopt;
}

Ideal eliminate_tag(const GroebnerBasis& gb, Ring target) {
  if (gb.ring.order != MonoOrder::TagElim)
    throw Error(ErrorKind::Shape, "elimination needs the tag order");
  std::vector<Poly> out;
  for (const auto& g : gb.basis) {
    const bool tag_free = std::all_of(g.terms().begin(), g.terms().end(),
                                      [](const Term& t) { return t.m.e[0] == 0; });
    if (tag_free) out.push_back(g.in_ring(target, -1));
  }
  return Ideal(target, std::move(out));
}

namespace {

Ring tag_ring(const Ring& r) { return Ring{r.p, r.nvars + 1, MonoOrder::TagElim}; }

GroebnerBasis complete_basis(const Ideal& ideal, const Budget& budget) {
  GroebnerOptions opt;
  opt.budget = budget;
  auto gb = groebner_basis(ideal, opt);
  if (!gb.complete) throw Error(ErrorKind::BudgetExceeded, "Groebner budget exhausted");
  return gb;
}

}  // namespace

Ideal intersection(const Ideal& a, const Ideal& b, const Budget& budget) {
  const Ring ring = a.ring();
  const Ring big = tag_ring(ring);
  const Poly t = Poly::var(big, 0);
  const Poly one_minus_t = Poly::constant(big, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : a.gens()) gens.push_back(t * g.in_ring(big, 1));
  for (const auto& g : b.gens()) gens.push_back(one_minus_t * g.in_ring(big, 1));
  const auto gb = complete_basis(Ideal(big, std::move(gens)), budget);
  return eliminate_tag(gb, ring);
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j, const Budget& budget) {
  const Ring ring = i.ring();
  std::optional<Ideal> result;
  for (const auto& g : j.gens()) {
    if (g.degree() == 0) {
      // unit generator: (I : 1) = I
      if (!result) result = i;
      continue;
    }
    const Ideal meet = intersection(i, Ideal(ring, {g}), budget);
    std::vector<Poly> divided;
    for (const auto& f : meet.gens()) divided.push_back(f.exact_div(g));
    Ideal q(ring, std::move(divided));
    result = result ? intersection(*result, q, budget) : q;
  }
  if (!result) return Ideal(ring, {Poly::constant(ring, 1)});
  return minimalize(*result, budget);
}

Ideal minimalize(const Ideal& ideal, const Budget& budget) {
  const auto gb = complete_basis(ideal, budget);
  return Ideal(ideal.ring(), gb.basis);
}

long long ideal_dimension_in_degree(const GroebnerBasis& gb, int d) {
  if (d > gb.valid_through_degree)
    throw Error(ErrorKind::IncompleteBasis, "basis not valid in degree " + std::to_string(d));
  long long in_ideal = 0;
  const auto lms = gb.leading_monomials();
  for (const auto& m : monomials_of_degree(gb.ring.nvars, d)) {
    for (const auto& l : lms)
      if (divides(l, m)) {
        ++in_ideal;
        break;
      }
  }
  return in_ideal;
}

}  // namespace cremona
