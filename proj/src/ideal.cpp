#include "tfr/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace tfr {

int degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Expo& a, const Expo& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("exponent size mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_add(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::logic_error("expo_sub: not divisible");
  }
  return r;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool expo_coprime(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::vector<int> support(const Expo& e) {
  std::vector<int> s;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) s.push_back(int(i));
  return s;
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder TermOrder::lex(int nvars) {
  std::vector<int> seq(nvars);
  std::iota(seq.begin(), seq.end(), 0);
  return lex(nvars, std::move(seq));
}

TermOrder TermOrder::grevlex(int nvars) {
  std::vector<int> seq(nvars);
  std::iota(seq.begin(), seq.end(), 0);
  return grevlex(nvars, std::move(seq));
}

namespace {
void check_sequence(int nvars, const std::vector<int>& seq) {
  if (int(seq.size()) != nvars) throw std::invalid_argument("order sequence must list every variable");
  std::vector<bool> seen(nvars, false);
  for (int v : seq) {
    if (v < 0 || v >= nvars || seen[v]) throw std::invalid_argument("order sequence is not a permutation");
    seen[v] = true;
  }
}
} // namespace

TermOrder TermOrder::lex(int nvars, std::vector<int> sequence) {
  check_sequence(nvars, sequence);
  TermOrder o;
  o.nvars_ = nvars;
  o.blocks_.push_back({OrderKind::Lex, std::move(sequence)});
  return o;
}

TermOrder TermOrder::grevlex(int nvars, std::vector<int> sequence) {
  check_sequence(nvars, sequence);
  TermOrder o;
  o.nvars_ = nvars;
  o.blocks_.push_back({OrderKind::Grevlex, std::move(sequence)});
  return o;
}

TermOrder TermOrder::elimination(const TermOrder& base, const std::vector<int>& lead_vars) {
  TermOrder o;
  o.nvars_ = base.nvars_;
  o.blocks_.push_back({OrderKind::Lex, lead_vars});
  for (const Block& b : base.blocks_) {
    Block nb{b.kind, {}};
    for (int v : b.seq)
      if (std::find(lead_vars.begin(), lead_vars.end(), v) == lead_vars.end()) nb.seq.push_back(v);
    if (!nb.seq.empty()) o.blocks_.push_back(std::move(nb));
  }
  return o;
}

int TermOrder::compare(const Expo& a, const Expo& b) const {
  if (int(a.size()) != nvars_ || int(b.size()) != nvars_)
    throw DimensionMismatchError("term order arity mismatch");
  for (const Block& blk : blocks_) {
    if (blk.kind == OrderKind::Lex) {
      for (int v : blk.seq)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    } else {
      int da = 0, db = 0;
      for (int v : blk.seq) { da += a[v]; db += b[v]; }
      if (da != db) return da > db ? 1 : -1;
      for (auto it = blk.seq.rbegin(); it != blk.seq.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    }
  }
  return 0;
}

TermOrder TermOrder::restricted(const std::vector<int>& vars) const {
  std::vector<int> local(nvars_, -1);
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i > 0 && vars[i] <= vars[i - 1]) throw std::invalid_argument("restricted: vars must be ascending");
    local.at(vars[i]) = int(i);
  }
  TermOrder o;
  o.nvars_ = int(vars.size());
  for (const Block& b : blocks_) {
    Block nb{b.kind, {}};
    for (int v : b.seq)
      if (local[v] >= 0) nb.seq.push_back(local[v]);
    if (!nb.seq.empty()) o.blocks_.push_back(std::move(nb));
  }
  return o;
}

std::string TermOrder::key() const {
  std::ostringstream os;
  for (const Block& b : blocks_) {
    os << (b.kind == OrderKind::Lex ? "lex" : "grevlex") << '[';
    for (size_t i = 0; i < b.seq.size(); ++i) os << (i ? "," : "") << b.seq[i];
    os << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// IdealElement

namespace {
void check_expo(const Expo& e) {
  for (int x : e)
    if (x < 0) throw UnsupportedGeneratorError("negative exponent");
}
} // namespace

IdealElement::IdealElement(Expo monomial) : a_(std::move(monomial)) { check_expo(a_); }

IdealElement::IdealElement(Expo a, Expo b) : a_(std::move(a)), b_(std::move(b)) {
  check_expo(a_);
  check_expo(*b_);
  if (a_.size() != b_->size()) throw DimensionMismatchError("binomial exponent size mismatch");
  if (a_ == *b_) throw UnsupportedGeneratorError("binomial of two equal monomials is zero");
  if (a_ < *b_) std::swap(a_, *b_);
}

int IdealElement::max_degree() const {
  int d = degree(a_);
  if (b_) d = std::max(d, degree(*b_));
  return d;
}

bool IdealElement::operator<(const IdealElement& o) const {
  if (is_monomial() != o.is_monomial()) return is_monomial();
  if (a_ != o.a_) return a_ < o.a_;
  if (is_monomial()) return false;
  return *b_ < *o.b_;
}

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const GBElement& e : elems_) {
    d = std::max(d, degree(e.lead));
    if (e.tail) d = std::max(d, degree(*e.tail));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Buchberger engine

namespace {

GBElement orient(const IdealElement& e, const TermOrder& order) {
  if (e.is_monomial()) return {e.a(), std::nullopt};
  int c = order.compare(e.a(), e.b());
  assert(c != 0);
  if (c > 0) return {e.a(), e.b()};
  return {e.b(), e.a()};
}

// Working element; semantically X^hi - X^lo up to a global sign, or a single
// monomial when lo is absent.
struct Work {
  bool zero = true;
  Expo hi;
  std::optional<Expo> lo;
};

Work make_work(Expo hi, std::optional<Expo> lo, const TermOrder& order) {
  Work w;
  if (lo && *lo == hi) return w; // cancels to zero
  w.zero = false;
  if (lo && order.greater(*lo, hi)) std::swap(hi, *lo);
  w.hi = std::move(hi);
  w.lo = std::move(lo);
  return w;
}

const GBElement* find_reducer(const Expo& m, const std::vector<GBElement>& basis) {
  for (const GBElement& g : basis)
    if (divides(g.lead, m)) return &g;
  return nullptr;
}

void reduce_full(Work& w, const std::vector<GBElement>& basis, const TermOrder& order) {
  for (;;) {
    if (w.zero) return;
    if (const GBElement* g = find_reducer(w.hi, basis)) {
      if (g->is_monomial()) {
        if (!w.lo) { w.zero = true; return; }
        w.hi = std::move(*w.lo);
        w.lo.reset();
      } else {
        Expo h2 = expo_add(expo_sub(w.hi, g->lead), *g->tail);
        if (!w.lo) {
          w.hi = std::move(h2);
        } else if (h2 == *w.lo) {
          w.zero = true;
          return;
        } else if (order.greater(h2, *w.lo)) {
          w.hi = std::move(h2);
        } else {
          w.hi = std::move(*w.lo);
          w.lo = std::move(h2);
        }
      }
      continue;
    }
    if (w.lo) {
      if (const GBElement* g = find_reducer(*w.lo, basis)) {
        if (g->is_monomial()) {
          w.lo.reset();
        } else {
          Expo l2 = expo_add(expo_sub(*w.lo, g->lead), *g->tail);
          assert(order.less(l2, w.hi));
          w.lo = std::move(l2);
        }
        continue;
      }
    }
    return;
  }
}

Work spair(const GBElement& f, const GBElement& g, const TermOrder& order) {
  Work w;
  if (f.is_monomial() && g.is_monomial()) return w; // reduces to zero
  Expo l = expo_lcm(f.lead, g.lead);
  std::optional<Expo> mf, mg;
  if (f.tail) mf = expo_add(expo_sub(l, f.lead), *f.tail);
  if (g.tail) mg = expo_add(expo_sub(l, g.lead), *g.tail);
  if (mf && mg) return make_work(std::move(*mg), std::move(mf), order);
  if (mf) return make_work(std::move(*mf), std::nullopt, order);
  return make_work(std::move(*mg), std::nullopt, order);
}

} // namespace

GroebnerBasis buchberger(int nvars, const std::vector<IdealElement>& gens, const TermOrder& order) {
  if (order.nvars() != nvars) throw DimensionMismatchError("order arity != variable count");
  std::vector<GBElement> basis;
  for (const IdealElement& e : gens) {
    if (int(e.a().size()) != nvars) throw DimensionMismatchError("generator arity mismatch");
    basis.push_back(orient(e, order));
  }

  struct PairCmp {
    const TermOrder* order;
    bool operator()(const std::tuple<Expo, int, int>& x, const std::tuple<Expo, int, int>& y) const {
      int c = order->compare(std::get<0>(x), std::get<0>(y));
      if (c != 0) return c < 0;
      if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
      return std::get<2>(x) < std::get<2>(y);
    }
  };
  std::set<std::tuple<Expo, int, int>, PairCmp> queue(PairCmp{&order});
  auto enqueue_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (expo_coprime(basis[i].lead, basis[j].lead)) continue; // product criterion
      queue.insert({expo_lcm(basis[i].lead, basis[j].lead), i, j});
    }
  };
  for (int j = 0; j < int(basis.size()); ++j) enqueue_pairs(j);

  while (!queue.empty()) {
    auto [l, i, j] = *queue.begin();
    queue.erase(queue.begin());
    Work w = spair(basis[i], basis[j], order);
    reduce_full(w, basis, order);
    if (w.zero) continue;
    basis.push_back({std::move(w.hi), std::move(w.lo)});
    enqueue_pairs(int(basis.size()) - 1);
  }

  // Minimalize: keep one element per minimal leading term.
  std::vector<int> idx(basis.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    int c = order.compare(basis[x].lead, basis[y].lead);
    if (c != 0) return c < 0;
    if (basis[x].is_monomial() != basis[y].is_monomial()) return basis[x].is_monomial();
    if (basis[x].is_monomial()) return false;
    return order.less(*basis[x].tail, *basis[y].tail);
  });
  std::vector<GBElement> kept;
  for (int id : idx) {
    bool redundant = false;
    for (const GBElement& k : kept)
      if (divides(k.lead, basis[id].lead)) { redundant = true; break; }
    if (!redundant) kept.push_back(basis[id]);
  }

  // Tail reduction against the minimal set.
  for (GBElement& e : kept) {
    if (!e.tail) continue;
    Work w;
    w.zero = false;
    w.hi = *e.tail;
    reduce_full(w, kept, order);
    if (w.zero) e.tail.reset();
    else e.tail = std::move(w.hi);
  }

  std::sort(kept.begin(), kept.end(),
            [&](const GBElement& x, const GBElement& y) { return order.greater(x.lead, y.lead); });
  return GroebnerBasis(order, std::move(kept));
}

std::optional<IdealElement> normal_form(const IdealElement& e, const GroebnerBasis& gb) {
  Work w = make_work(e.a(), e.is_monomial() ? std::nullopt : std::optional<Expo>(e.b()), gb.order());
  reduce_full(w, gb.elements(), gb.order());
  if (w.zero) return std::nullopt;
  if (!w.lo) return IdealElement(std::move(w.hi));
  return IdealElement(std::move(w.hi), std::move(*w.lo));
}

std::optional<Expo> normal_form_monomial(const Expo& m, const GroebnerBasis& gb) {
  Work w;
  w.zero = false;
  w.hi = m;
  reduce_full(w, gb.elements(), gb.order());
  if (w.zero) return std::nullopt;
  assert(!w.lo);
  return std::move(w.hi);
}

bool in_ideal(const IdealElement& e, const GroebnerBasis& gb) {
  return !normal_form(e, gb).has_value();
}

// ---------------------------------------------------------------------------
// PresentedIdeal

PresentedIdeal::PresentedIdeal(int nvars, std::vector<IdealElement> gens)
    : nvars_(nvars), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const IdealElement& e : gens_)
    if (int(e.a().size()) != nvars_) throw DimensionMismatchError("generator arity mismatch");
}

bool PresentedIdeal::has_binomial_generator() const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const IdealElement& e) { return !e.is_monomial(); });
}

const GroebnerBasis& PresentedIdeal::groebner(const TermOrder& order) const {
  std::string k = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(k);
    if (it != cache_->by_order.end()) return *it->second;
  }
  auto gb = std::make_shared<const GroebnerBasis>(buchberger(nvars_, gens_, order));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->by_order.emplace(std::move(k), std::move(gb));
  return *it->second;
}

// ---------------------------------------------------------------------------
// Derived ideal operations

namespace {

int to_int_checked(const Int& v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw std::overflow_error("lattice vector entry does not fit an int");
  return v.convert_to<int>();
}

Expo pad(const Expo& e, int nvars) {
  Expo r(nvars, 0);
  std::copy(e.begin(), e.end(), r.begin());
  return r;
}

IdealElement pad_elem(const IdealElement& e, int nvars) {
  if (e.is_monomial()) return IdealElement(pad(e.a(), nvars));
  return IdealElement(pad(e.a(), nvars), pad(e.b(), nvars));
}

} // namespace

PresentedIdeal toric_ideal(const std::vector<std::vector<Int>>& monoid_generators) {
  int n = int(monoid_generators.size());
  if (n == 0) return PresentedIdeal::zero(0);
  IntMatrix m = IntMatrix::from_cols(monoid_generators);
  auto kernel = integer_kernel(m);
  std::vector<IdealElement> gens;
  for (const auto& u : kernel) {
    Expo a(n, 0), b(n, 0);
    for (int i = 0; i < n; ++i) {
      int x = to_int_checked(u[i]);
      if (x > 0) a[i] = x;
      else b[i] = -x;
    }
    gens.emplace_back(std::move(a), std::move(b));
  }
  if (gens.empty()) return PresentedIdeal::zero(n);
  PresentedIdeal lattice(n, std::move(gens));
  return saturate(lattice, Expo(n, 1));
}

PresentedIdeal saturate(const PresentedIdeal& ideal, const Expo& f) {
  int n = ideal.nvars();
  if (int(f.size()) != n) throw DimensionMismatchError("saturate: monomial arity mismatch");
  int t = n;
  std::vector<IdealElement> gens;
  for (const IdealElement& e : ideal.generators()) gens.push_back(pad_elem(e, n + 1));
  Expo a = pad(f, n + 1);
  a[t] = 1;
  gens.emplace_back(std::move(a), Expo(n + 1, 0)); // t*f - 1
  TermOrder elim = TermOrder::elimination(TermOrder::grevlex(n + 1), {t});
  GroebnerBasis gb = buchberger(n + 1, gens, elim);
  std::vector<IdealElement> out;
  for (const GBElement& e : gb.elements()) {
    if (e.lead[t] != 0) continue;
    assert(!e.tail || (*e.tail)[t] == 0);
    Expo a2(e.lead.begin(), e.lead.begin() + n);
    if (e.tail) out.emplace_back(std::move(a2), Expo(e.tail->begin(), e.tail->begin() + n));
    else out.emplace_back(std::move(a2));
  }
  return PresentedIdeal(n, std::move(out));
}

PresentedIdeal colon(const PresentedIdeal& ideal, const Expo& f) {
  int n = ideal.nvars();
  if (int(f.size()) != n) throw DimensionMismatchError("colon: monomial arity mismatch");
  int t = n;
  std::vector<IdealElement> gens;
  for (const IdealElement& e : ideal.generators()) {
    // t * e
    Expo a = pad(e.a(), n + 1);
    a[t] = 1;
    if (e.is_monomial()) {
      gens.emplace_back(std::move(a));
    } else {
      Expo b = pad(e.b(), n + 1);
      b[t] = 1;
      gens.emplace_back(std::move(a), std::move(b));
    }
  }
  // (1 - t) * f = f - t*f
  Expo fa = pad(f, n + 1);
  Expo fb = fa;
  fb[t] = 1;
  gens.emplace_back(std::move(fa), std::move(fb));
  TermOrder elim = TermOrder::elimination(TermOrder::grevlex(n + 1), {t});
  GroebnerBasis gb = buchberger(n + 1, gens, elim);
  std::vector<IdealElement> out;
  for (const GBElement& e : gb.elements()) {
    if (e.lead[t] != 0) continue;
    assert(!e.tail || (*e.tail)[t] == 0);
    Expo a2 = expo_sub(Expo(e.lead.begin(), e.lead.begin() + n), f);
    if (e.tail)
      out.emplace_back(std::move(a2), expo_sub(Expo(e.tail->begin(), e.tail->begin() + n), f));
    else
      out.emplace_back(std::move(a2));
  }
  return PresentedIdeal(n, std::move(out));
}

PresentedIdeal colon_by_var(const PresentedIdeal& ideal, int var) {
  Expo f(ideal.nvars(), 0);
  f.at(var) = 1;
  return colon(ideal, f);
}

bool ideal_equal(const PresentedIdeal& lhs, const PresentedIdeal& rhs, const TermOrder& order) {
  if (lhs.nvars() != rhs.nvars()) return false;
  return lhs.groebner(order).elements() == rhs.groebner(order).elements();
}

std::vector<Expo> minimal_monomial_generators(std::vector<Expo> monomials) {
  std::sort(monomials.begin(), monomials.end(), [](const Expo& a, const Expo& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Expo> out;
  for (const Expo& m : monomials) {
    bool redundant = false;
    for (const Expo& k : out)
      if (divides(k, m)) { redundant = true; break; }
    if (!redundant) out.push_back(m);
  }
  return out;
}

PresentedIdeal initial_ideal(const PresentedIdeal& ideal, const TermOrder& order) {
  const GroebnerBasis& gb = ideal.groebner(order);
  std::vector<Expo> leads;
  for (const GBElement& e : gb.elements()) leads.push_back(e.lead);
  std::vector<IdealElement> gens;
  for (Expo& m : minimal_monomial_generators(std::move(leads))) gens.emplace_back(std::move(m));
  return PresentedIdeal(ideal.nvars(), std::move(gens));
}

PresentedIdeal ideal_sum(const PresentedIdeal& lhs, const PresentedIdeal& rhs) {
  if (lhs.nvars() != rhs.nvars()) throw DimensionMismatchError("ideal_sum: arity mismatch");
  std::vector<IdealElement> gens = lhs.generators();
  gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
  return PresentedIdeal(lhs.nvars(), std::move(gens));
}

PresentedIdeal embed_ideal(const PresentedIdeal& ideal, int nvars, const std::vector<int>& var_map) {
  if (int(var_map.size()) != ideal.nvars()) throw DimensionMismatchError("embed_ideal: map arity");
  auto remap = [&](const Expo& e) {
    Expo r(nvars, 0);
    for (size_t i = 0; i < e.size(); ++i) r.at(var_map[i]) = e[i];
    return r;
  };
  std::vector<IdealElement> gens;
  for (const IdealElement& e : ideal.generators()) {
    if (e.is_monomial()) gens.emplace_back(remap(e.a()));
    else gens.emplace_back(remap(e.a()), remap(e.b()));
  }
  return PresentedIdeal(nvars, std::move(gens));
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_monomial(const Expo& e) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << 'X' << (i + 1);
    if (e[i] > 1) os << '^' << e[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string render_element(const GBElement& e) {
  if (e.is_monomial()) return render_monomial(e.lead);
  return render_monomial(e.lead) + " - " + render_monomial(*e.tail);
}

std::string render_element(const IdealElement& e, const TermOrder& order) {
  return render_element(orient(e, order));
}

std::string render_ideal(const PresentedIdeal& ideal, const TermOrder& order) {
  std::vector<GBElement> elems;
  for (const IdealElement& e : ideal.generators()) elems.push_back(orient(e, order));
  std::sort(elems.begin(), elems.end(), [&](const GBElement& x, const GBElement& y) {
    int c = order.compare(x.lead, y.lead);
    if (c != 0) return c > 0;
    if (x.is_monomial() != y.is_monomial()) return x.is_monomial();
    if (x.is_monomial()) return false;
    return order.greater(*x.tail, *y.tail);
  });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < elems.size(); ++i) os << (i ? ", " : "") << render_element(elems[i]);
  os << ')';
  return os.str();
}

std::string render_basis(const GroebnerBasis& gb) {
  if (gb.zero()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < gb.elements().size(); ++i)
    os << (i ? ", " : "") << render_element(gb.elements()[i]);
  os << ')';
  return os.str();
}

} // namespace tfr
