#include "mvstone/algebra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace mvstone {

// --------------------------------------------------------------------------
// IndexSet
// --------------------------------------------------------------------------

IndexSet IndexSet::full(size_t capacity) {
  IndexSet s(capacity);
  for (size_t i = 0; i < capacity; ++i) s.set(i);
  return s;
}

size_t IndexSet::count() const {
  size_t c = 0;
  for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

bool IndexSet::subset_of(const IndexSet& o) const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

IndexSet& IndexSet::operator&=(const IndexSet& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

IndexSet& IndexSet::operator|=(const IndexSet& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

bool IndexSet::operator<(const IndexSet& o) const {
  return to_indices() < o.to_indices();
}

std::vector<int> IndexSet::to_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(static_cast<int>(i));
  return out;
}

// --------------------------------------------------------------------------
// Signature
// --------------------------------------------------------------------------

Signature::Signature(std::vector<int> ords) : orders(std::move(ords)) {
  if (orders.empty()) throw InvalidArgumentError("empty product signature");
  for (int n : orders)
    if (n < 2) throw InvalidArgumentError("factor order must be >= 2");
}

bool Signature::valid(const Elem& a) const {
  if (a.size() != orders.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] > orders[i] - 1) return false;
  return true;
}

Signature::Elem Signature::one() const {
  Elem e(orders.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = orders[i] - 1;
  return e;
}

namespace {
template <typename F>
Signature::Elem zip(const Signature& s, const Signature::Elem& a,
                    const Signature::Elem& b, F&& f) {
  Signature::Elem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f(s.orders[i] - 1, a[i], b[i]);
  return out;
}
}  // namespace

Signature::Elem Signature::oplus(const Elem& a, const Elem& b) const {
  return zip(*this, a, b, [](int t, int x, int y) { return ops::oplus(t, x, y); });
}
Signature::Elem Signature::odot(const Elem& a, const Elem& b) const {
  return zip(*this, a, b, [](int t, int x, int y) { return ops::odot(t, x, y); });
}
Signature::Elem Signature::neg(const Elem& a) const {
  Elem out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ops::neg(orders[i] - 1, a[i]);
  return out;
}
Signature::Elem Signature::ominus(const Elem& a, const Elem& b) const {
  return zip(*this, a, b, [](int t, int x, int y) { return ops::ominus(t, x, y); });
}
Signature::Elem Signature::join(const Elem& a, const Elem& b) const {
  return zip(*this, a, b, [](int, int x, int y) { return ops::join(x, y); });
}
Signature::Elem Signature::meet(const Elem& a, const Elem& b) const {
  return zip(*this, a, b, [](int, int x, int y) { return ops::meet(x, y); });
}
Signature::Elem Signature::dist(const Elem& a, const Elem& b) const {
  return zip(*this, a, b, [](int t, int x, int y) { return ops::dist(t, x, y); });
}

bool Signature::leq(const Elem& a, const Elem& b) const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool Signature::idempotent(const Elem& a) const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && a[i] != orders[i] - 1) return false;
  return true;
}

std::string Signature::str(const Elem& a) const {
  if (a.size() == 1) return Rat(a[0], orders[0] - 1).str();
  std::string out = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += Rat(a[i], orders[i] - 1).str();
  }
  return out + ")";
}

// --------------------------------------------------------------------------
// MvAlgebra
// --------------------------------------------------------------------------

MvAlgebra::MvAlgebra(Signature sig, std::vector<MvElem> elems)
    : sig_(std::move(sig)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  zero_ = index_of(sig_.zero());
  one_ = index_of(sig_.one());
  if (elems_.size() <= 512) build_tables();
}

void MvAlgebra::build_tables() {
  size_t n = elems_.size();
  t_neg_.resize(n);
  leq_.resize(n * n);
  t_oplus_.resize(n * n);
  t_odot_.resize(n * n);
  t_ominus_.resize(n * n);
  t_join_.resize(n * n);
  t_meet_.resize(n * n);
  for (size_t i = 0; i < n; ++i) {
    t_neg_[i] = index_of(sig_.neg(elems_[i]));
    for (size_t j = 0; j < n; ++j) {
      size_t at = i * n + j;
      leq_[at] = sig_.leq(elems_[i], elems_[j]) ? 1 : 0;
      t_oplus_[at] = index_of(sig_.oplus(elems_[i], elems_[j]));
      t_odot_[at] = index_of(sig_.odot(elems_[i], elems_[j]));
      t_ominus_[at] = index_of(sig_.ominus(elems_[i], elems_[j]));
      t_join_[at] = index_of(sig_.join(elems_[i], elems_[j]));
      t_meet_[at] = index_of(sig_.meet(elems_[i], elems_[j]));
    }
  }
}

int MvAlgebra::index_of(const MvElem& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || *it != e) return -1;
  return static_cast<int>(it - elems_.begin());
}

MvAlgebra MvAlgebra::generate(Signature sig, const std::vector<MvElem>& generators) {
  for (const auto& g : generators)
    if (!sig.valid(g))
      throw InvalidArgumentError("generator does not fit the signature");
  std::set<MvElem> carrier{sig.zero(), sig.one()};
  std::queue<MvElem> work;
  for (const auto& g : generators)
    if (carrier.insert(g).second) work.push(g);
  for (const auto& e : carrier) work.push(e);
  while (!work.empty()) {
    if (carrier.size() > kCarrierCap)
      throw ResourceLimitError("generated carrier exceeds the size guard");
    MvElem e = work.front();
    work.pop();
    MvElem n = sig.neg(e);
    if (carrier.insert(n).second) work.push(n);
    std::vector<MvElem> snapshot(carrier.begin(), carrier.end());
    for (const auto& f : snapshot) {
      MvElem s = sig.oplus(e, f);
      if (carrier.insert(s).second) work.push(s);
    }
  }
  return from_carrier(std::move(sig), {carrier.begin(), carrier.end()});
}

MvAlgebra MvAlgebra::full_product(Signature sig) {
  size_t total = 1;
  for (int n : sig.orders) {
    total *= static_cast<size_t>(n);
    if (total > kCarrierCap)
      throw ResourceLimitError("full product exceeds the size guard");
  }
  std::vector<MvElem> elems;
  MvElem cur(sig.arity(), 0);
  for (;;) {
    elems.push_back(cur);
    size_t i = 0;
    while (i < cur.size()) {
      if (++cur[i] <= sig.orders[i] - 1) break;
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
  }
  return MvAlgebra(std::move(sig), std::move(elems));
}

MvAlgebra MvAlgebra::chain_algebra(int order) {
  return full_product(Signature({order}));
}

MvAlgebra MvAlgebra::from_carrier(Signature sig, std::vector<MvElem> carrier) {
  MvAlgebra a(std::move(sig), std::move(carrier));
  const Signature& s = a.signature();
  for (const auto& e : a.elems())
    if (!s.valid(e)) throw InvalidArgumentError("carrier element off the signature grid");
  if (a.zero() < 0 || a.one() < 0)
    throw InvalidArgumentError("carrier must contain 0 and 1");
  if (a.size() < 2) throw InvalidArgumentError("carrier must have at least 2 elements");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.index_of(s.neg(a.elem(i))) < 0)
      throw InvalidArgumentError("carrier not closed under negation");
    for (size_t j = i; j < a.size(); ++j)
      if (a.index_of(s.oplus(a.elem(i), a.elem(j))) < 0)
        throw InvalidArgumentError("carrier not closed under oplus");
  }
  return a;
}

bool MvAlgebra::is_full_product() const {
  size_t prod = 1;
  for (int n : sig_.orders) {
    prod *= static_cast<size_t>(n);
    if (prod > size()) return false;
  }
  return prod == size();
}

// --------------------------------------------------------------------------
// Ideals
// --------------------------------------------------------------------------

namespace {

IndexSet down_closure_mask(const MvAlgebra& a, const IndexSet& s) {
  IndexSet out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!s.test(i)) continue;
    for (size_t j = 0; j < a.size(); ++j)
      if (a.leq(static_cast<int>(j), static_cast<int>(i))) out.set(j);
  }
  return out;
}

IndexSet close_ideal(const MvAlgebra& a, IndexSet members) {
  members.set(static_cast<size_t>(a.zero()));
  bool changed = true;
  while (changed) {
    changed = false;
    IndexSet down = down_closure_mask(a, members);
    if (!down.subset_of(members)) {
      members |= down;
      changed = true;
    }
    std::vector<int> idx = members.to_indices();
    for (size_t x = 0; x < idx.size(); ++x)
      for (size_t y = x; y < idx.size(); ++y) {
        int k = a.op_oplus(idx[x], idx[y]);
        if (!members.test(static_cast<size_t>(k))) {
          members.set(static_cast<size_t>(k));
          changed = true;
        }
      }
  }
  return members;
}

}  // namespace

GeneratedIdeal generate_ideal(const MvAlgebra& a, const std::vector<int>& seed) {
  IndexSet m(a.size());
  for (int s : seed) {
    if (s < 0 || static_cast<size_t>(s) >= a.size())
      throw InvalidArgumentError("ideal seed index out of range");
    m.set(static_cast<size_t>(s));
  }
  Ideal ideal{&a, close_ideal(a, std::move(m))};
  bool proper = ideal.proper();
  return GeneratedIdeal{std::move(ideal), proper};
}

bool is_ideal(const MvAlgebra& a, const IndexSet& members) {
  if (!members.test(static_cast<size_t>(a.zero()))) return false;
  std::vector<int> idx = members.to_indices();
  for (int i : idx)
    for (size_t j = 0; j < a.size(); ++j)
      if (a.leq(static_cast<int>(j), i) && !members.test(j)) return false;
  for (int i : idx)
    for (int j : idx)
      if (!members.test(static_cast<size_t>(a.op_oplus(i, j)))) return false;
  return true;
}

std::vector<Ideal> all_ideals(const MvAlgebra& a, size_t cap) {
  std::set<IndexSet> found;
  if (a.is_full_product()) {
    // Ideals of a full product are products of coordinate ideals: pick the
    // coordinates pinned to zero.
    size_t arity = a.signature().arity();
    for (uint64_t mask = 1; mask < (uint64_t(1) << arity); ++mask) {
      IndexSet m(a.size());
      for (size_t i = 0; i < a.size(); ++i) {
        bool in = true;
        for (size_t c = 0; c < arity && in; ++c)
          if ((mask >> c) & 1) in = a.elem(i)[c] == 0;
        if (in) m.set(i);
      }
      found.insert(std::move(m));
    }
  } else {
    if (a.size() > cap)
      throw ResourceLimitError("ideal enumeration capped at carrier size " +
                               std::to_string(cap));
    IndexSet start = generate_ideal(a, {}).ideal.members;
    std::set<IndexSet> seen{start};
    std::queue<IndexSet> work;
    work.push(start);
    found.insert(start);
    while (!work.empty()) {
      IndexSet cur = work.front();
      work.pop();
      for (size_t i = 0; i < a.size(); ++i) {
        if (cur.test(i)) continue;
        IndexSet next = cur;
        next.set(i);
        next = close_ideal(a, std::move(next));
        if (next.test(static_cast<size_t>(a.one()))) continue;
        if (seen.insert(next).second) {
          found.insert(next);
          work.push(next);
        }
      }
    }
  }
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (const auto& m : found) out.push_back(Ideal{&a, m});
  return out;
}

int maximality_exponent(const MvAlgebra& a, const IndexSet& ideal, int elem) {
  int y = a.op_neg(elem);
  int p = y;
  for (int n = 1;; ++n) {
    if (ideal.test(static_cast<size_t>(p))) return n;
    int next = a.op_odot(p, y);
    if (next == p) return -1;
    p = next;
  }
}

std::vector<MaximalIdeal> maximal_ideals(const MvAlgebra& a, size_t cap) {
  std::vector<Ideal> ideals = all_ideals(a, cap);
  std::vector<MaximalIdeal> out;
  for (const Ideal& candidate : ideals) {
    bool maximal = true;
    for (const Ideal& other : ideals)
      if (!(other.members == candidate.members) &&
          candidate.members.subset_of(other.members)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    MaximalIdeal m{candidate, {}};
    for (size_t i = 0; i < a.size(); ++i) {
      if (candidate.members.test(i)) continue;
      int n = maximality_exponent(a, candidate.members, static_cast<int>(i));
      if (n < 0)
        throw InternalConsistencyError(
            "maximality certificate failed for a supposedly maximal ideal");
      m.certificate.emplace_back(static_cast<int>(i), n);
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const MaximalIdeal& x, const MaximalIdeal& y) {
    return x.ideal.members < y.ideal.members;
  });
  return out;
}

bool is_prime(const MvAlgebra& a, const Ideal& ideal) {
  if (!ideal.proper()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i; j < a.size(); ++j) {
      int m = a.op_meet(static_cast<int>(i), static_cast<int>(j));
      if (ideal.members.test(static_cast<size_t>(m)) && !ideal.members.test(i) &&
          !ideal.members.test(j))
        return false;
    }
  return true;
}

std::vector<Ideal> prime_ideals(const MvAlgebra& a, size_t cap) {
  std::vector<Ideal> out;
  for (const Ideal& ideal : all_ideals(a, cap))
    if (is_prime(a, ideal)) out.push_back(ideal);
  return out;
}

// --------------------------------------------------------------------------
// Boolean center
// --------------------------------------------------------------------------

MvAlgebra boolean_center(const MvAlgebra& a) {
  std::vector<MvElem> idem;
  for (const auto& e : a.elems())
    if (a.signature().idempotent(e)) idem.push_back(e);
  MvAlgebra center = MvAlgebra::from_carrier(a.signature(), std::move(idem));
  for (size_t i = 0; i < center.size(); ++i) {
    int m = center.op_meet(static_cast<int>(i), center.op_neg(static_cast<int>(i)));
    if (m != center.zero())
      throw InternalConsistencyError("Boolean center element with a /\\ a* != 0");
  }
  return center;
}

bool is_boolean(const MvAlgebra& a) {
  for (const auto& e : a.elems())
    if (!a.signature().idempotent(e)) return false;
  return true;
}

// --------------------------------------------------------------------------
// Quotients and the spectrum
// --------------------------------------------------------------------------

namespace {

/// Rank of every element in the totally ordered quotient modulo a maximal
/// ideal; `order` is the number of classes.
struct RankMap {
  int order;
  std::vector<int> rank;
};

RankMap quotient_ranks(const MvAlgebra& a, const IndexSet& maximal) {
  size_t n = a.size();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
    cls[i] = id;
    for (size_t j = i + 1; j < n; ++j)
      if (cls[j] < 0 &&
          maximal.test(static_cast<size_t>(a.op_dist(static_cast<int>(i),
                                                     static_cast<int>(j)))))
        cls[j] = id;
  }
  // Class order: C <= D iff rep_C (-) rep_D falls in the ideal.
  auto class_leq = [&](int c, int d) {
    return maximal.test(static_cast<size_t>(a.op_ominus(reps[c], reps[d])));
  };
  std::vector<int> order_of(reps.size());
  std::vector<int> sorted(reps.size());
  std::iota(sorted.begin(), sorted.end(), 0);
  for (size_t x = 0; x < sorted.size(); ++x)
    for (size_t y = x + 1; y < sorted.size(); ++y)
      if (!class_leq(sorted[x], sorted[y])) {
        if (!class_leq(sorted[y], sorted[x]))
          throw InternalConsistencyError(
              "quotient by a maximal ideal is not totally ordered");
        std::swap(sorted[x], sorted[y]);
      }
  for (size_t r = 0; r < sorted.size(); ++r) order_of[sorted[r]] = static_cast<int>(r);
  RankMap rm{static_cast<int>(reps.size()), std::vector<int>(n)};
  for (size_t i = 0; i < n; ++i) rm.rank[i] = order_of[cls[i]];
  // The rank map must be the unique chain isomorphism.
  int top = rm.order - 1;
  for (size_t i = 0; i < n; ++i) {
    if (rm.rank[a.op_neg(static_cast<int>(i))] != top - rm.rank[i])
      throw InternalConsistencyError("quotient rank map does not respect negation");
    for (size_t j = 0; j < n; ++j) {
      int k = a.op_oplus(static_cast<int>(i), static_cast<int>(j));
      if (rm.rank[k] != ops::oplus(top, rm.rank[i], rm.rank[j]))
        throw InternalConsistencyError("quotient rank map does not respect oplus");
    }
  }
  return rm;
}

struct Spectrum {
  std::vector<MaximalIdeal> maximals;
  std::vector<int> orders;
  std::vector<RankMap> ranks;
};

Spectrum compute_spectrum(const MvAlgebra& a, size_t cap) {
  Spectrum s;
  s.maximals = maximal_ideals(a, cap);
  if (s.maximals.empty())
    throw InternalConsistencyError("algebra with empty maximal spectrum");
  for (const auto& m : s.maximals) {
    s.ranks.push_back(quotient_ranks(a, m.ideal.members));
    s.orders.push_back(s.ranks.back().order);
  }
  return s;
}

}  // namespace

QuotientResult quotient(const MvAlgebra& a, const Ideal& ideal, size_t cap) {
  if (!ideal.proper()) throw InvalidArgumentError("quotient by an improper ideal");
  size_t n = a.size();
  // Congruence classes of d(a,b) in I.
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes;
    for (size_t j = i + 1; j < n; ++j)
      if (cls[j] < 0 &&
          ideal.members.test(static_cast<size_t>(a.op_dist(static_cast<int>(i),
                                                           static_cast<int>(j)))))
        cls[j] = classes;
    ++classes;
  }
  // Realize the quotient inside the product of the chains A/M, M >= I.
  std::vector<RankMap> coords;
  std::vector<int> coord_orders;
  for (const MaximalIdeal& m : maximal_ideals(a, cap)) {
    if (!ideal.members.subset_of(m.ideal.members)) continue;
    coords.push_back(quotient_ranks(a, m.ideal.members));
    coord_orders.push_back(coords.back().order);
  }
  if (coords.empty())
    throw InternalConsistencyError("proper ideal not below any maximal ideal");
  std::vector<MvElem> image(n);
  for (size_t i = 0; i < n; ++i) {
    MvElem v(coords.size());
    for (size_t c = 0; c < coords.size(); ++c) v[c] = coords[c].rank[i];
    image[i] = std::move(v);
  }
  std::vector<MvElem> carrier = image;
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (static_cast<int>(carrier.size()) != classes)
    throw InternalConsistencyError(
        "quotient realization does not separate the congruence classes");
  MvAlgebra q = MvAlgebra::from_carrier(Signature(coord_orders), std::move(carrier));
  std::vector<int> projection(n);
  for (size_t i = 0; i < n; ++i) projection[i] = q.index_of(image[i]);
  return QuotientResult{std::move(q), std::move(projection)};
}

Ideal radical(const MvAlgebra& a, size_t cap) {
  IndexSet m = IndexSet::full(a.size());
  for (const MaximalIdeal& mi : maximal_ideals(a, cap)) m &= mi.ideal.members;
  return Ideal{&a, std::move(m)};
}

bool is_semisimple(const MvAlgebra& a, size_t cap) {
  return radical(a, cap).members.count() == 1;
}

ArchimedeanReport is_hyper_archimedean(const MvAlgebra& a) {
  ArchimedeanReport rep;
  rep.pass = true;
  rep.witnesses_agree = true;
  int limit = static_cast<int>(a.size()) + 2;
  for (size_t i = 0; i < a.size(); ++i) {
    std::array<int, 3> w{-1, -1, -1};
    int multiple = static_cast<int>(i);
    for (int n = 1; n <= limit; ++n) {
      if (w[0] < 0 && a.signature().idempotent(a.elem(multiple))) w[0] = n;
      if (w[1] < 0 &&
          a.op_join(a.op_neg(static_cast<int>(i)), multiple) == a.one())
        w[1] = n;
      int next = a.op_oplus(multiple, static_cast<int>(i));
      if (w[2] < 0 && next == multiple) w[2] = n;
      if (w[0] >= 0 && w[1] >= 0 && w[2] >= 0) break;
      multiple = next;
    }
    if (w[0] < 0 || w[1] < 0 || w[2] < 0) rep.pass = false;
    if (!(w[0] == w[1] && w[1] == w[2])) rep.witnesses_agree = false;
    rep.witnesses.push_back(w);
  }
  return rep;
}

bool is_liminary(const MvAlgebra& a, size_t cap) {
  for (const Ideal& p : prime_ideals(a, cap)) {
    QuotientResult q = quotient(a, p, cap);
    if (q.algebra.size() < 2)
      throw InternalConsistencyError("degenerate prime quotient");
  }
  return true;  // every prime quotient of a finite algebra is finite
}

MaxEmbedding embed_max(const MvAlgebra& a, size_t cap) {
  Spectrum s = compute_spectrum(a, cap);
  long long hat_top = 1;
  for (int k : s.orders) hat_top = lcm_ll(hat_top, k - 1);
  MaxEmbedding out{std::move(s.maximals),
                   s.orders,
                   Chain(static_cast<int>(hat_top) + 1),
                   make_indexed_universe(s.orders.size()),
                   {}};
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<int> vals(s.orders.size());
    for (size_t m = 0; m < s.orders.size(); ++m)
      vals[m] = s.ranks[m].rank[i] * static_cast<int>(hat_top / (s.orders[m] - 1));
    out.hat.emplace_back(out.dual_points, out.hat_chain, std::move(vals));
  }
  // ker(hat) must be {0}: duplicate hats would collapse distinct elements.
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (out.hat[i] == out.hat[j])
        throw InternalConsistencyError("spectrum embedding is not injective");
  return out;
}

std::vector<int> chain_factorization(const MvAlgebra& a, size_t cap) {
  MaxEmbedding emb = embed_max(a, cap);
  size_t prod = 1;
  for (int k : emb.quotient_orders) prod *= static_cast<size_t>(k);
  if (prod != a.size())
    throw InternalConsistencyError(
        "spectrum embedding is not onto the product of its quotient chains");
  std::vector<int> orders = emb.quotient_orders;
  std::sort(orders.begin(), orders.end());
  return orders;
}

// --------------------------------------------------------------------------
// Homomorphisms
// --------------------------------------------------------------------------

bool verify_hom(const MvHom& h) {
  const MvAlgebra& a = *h.domain;
  const MvAlgebra& b = *h.codomain;
  if (h.table.size() != a.size()) return false;
  for (int v : h.table)
    if (v < 0 || static_cast<size_t>(v) >= b.size()) return false;
  if (h.table[a.zero()] != b.zero()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (h.table[a.op_neg(static_cast<int>(i))] != b.op_neg(h.table[i])) return false;
    for (size_t j = i; j < a.size(); ++j)
      if (h.table[a.op_oplus(static_cast<int>(i), static_cast<int>(j))] !=
          b.op_oplus(h.table[i], h.table[j]))
        return false;
  }
  return true;
}

bool hom_bijective(const MvHom& h) {
  if (h.domain->size() != h.codomain->size()) return false;
  std::vector<bool> hit(h.codomain->size(), false);
  for (int v : h.table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

MvHom identity_hom(const MvAlgebra& a) {
  std::vector<int> t(a.size());
  std::iota(t.begin(), t.end(), 0);
  return MvHom{&a, &a, std::move(t)};
}

MvHom compose_hom(const MvHom& g, const MvHom& h) {
  if (h.codomain != g.domain && !(*h.codomain == *g.domain))
    throw InvalidArgumentError("composing homomorphisms over mismatched algebras");
  std::vector<int> t(h.table.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = g.table[h.table[i]];
  return MvHom{h.domain, g.codomain, std::move(t)};
}

std::optional<MvHom> find_isomorphism(const MvAlgebra& a, const MvAlgebra& b) {
  std::vector<int> fa = chain_factorization(a);
  std::vector<int> fb = chain_factorization(b);
  if (fa != fb) return std::nullopt;
  Spectrum sa = compute_spectrum(a, kIdealEnumerationCap);
  Spectrum sb = compute_spectrum(b, kIdealEnumerationCap);
  // Align coordinates of equal quotient order.
  auto argsort = [](const std::vector<int>& v) {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int x, int y) { return v[x] < v[y]; });
    return idx;
  };
  std::vector<int> ia = argsort(sa.orders), ib = argsort(sb.orders);
  // Rank vector of each b element, keyed for lookup.
  std::map<std::vector<int>, int> b_by_ranks;
  for (size_t j = 0; j < b.size(); ++j) {
    std::vector<int> key(sb.orders.size());
    for (size_t m = 0; m < sb.orders.size(); ++m) key[m] = sb.ranks[m].rank[j];
    b_by_ranks[std::move(key)] = static_cast<int>(j);
  }
  std::vector<int> table(a.size(), -1);
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<int> key(sb.orders.size());
    for (size_t t = 0; t < ia.size(); ++t)
      key[ib[t]] = sa.ranks[ia[t]].rank[i];
    auto it = b_by_ranks.find(key);
    if (it == b_by_ranks.end()) return std::nullopt;
    table[i] = it->second;
  }
  MvHom h{&a, &b, std::move(table)};
  if (!verify_hom(h) || !hom_bijective(h))
    throw InternalConsistencyError("aligned factorizations produced a bad isomorphism");
  return h;
}

std::vector<int> generating_set(const MvAlgebra& a) {
  auto closure = [&a](const std::vector<int>& gens) {
    IndexSet in(a.size());
    in.set(static_cast<size_t>(a.zero()));
    in.set(static_cast<size_t>(a.one()));
    for (int g : gens) in.set(static_cast<size_t>(g));
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> idx = in.to_indices();
      for (int i : idx) {
        int n = a.op_neg(i);
        if (!in.test(static_cast<size_t>(n))) {
          in.set(static_cast<size_t>(n));
          changed = true;
        }
        for (int j : idx) {
          int k = a.op_oplus(i, j);
          if (!in.test(static_cast<size_t>(k))) {
            in.set(static_cast<size_t>(k));
            changed = true;
          }
        }
      }
    }
    return in;
  };
  std::vector<int> gens;
  IndexSet have = closure(gens);
  while (have.count() < a.size()) {
    for (size_t i = 0; i < a.size(); ++i)
      if (!have.test(i)) {
        gens.push_back(static_cast<int>(i));
        break;
      }
    have = closure(gens);
  }
  return gens;
}

std::vector<MvHom> enumerate_homomorphisms(const MvAlgebra& a, const MvAlgebra& b,
                                           size_t cap) {
  std::vector<int> gens = generating_set(a);
  size_t total = 1;
  for (size_t g = 0; g < gens.size(); ++g) {
    total *= b.size();
    if (total > cap)
      throw ResourceLimitError("homomorphism search space exceeds cap");
  }
  std::vector<MvHom> out;
  std::vector<int> choice(gens.size(), 0);
  for (size_t tick = 0; tick < total; ++tick) {
    std::vector<int> img(a.size(), -1);
    img[a.zero()] = b.zero();
    bool ok = true;
    for (size_t g = 0; g < gens.size() && ok; ++g) {
      if (img[gens[g]] >= 0 && img[gens[g]] != choice[g]) ok = false;
      img[gens[g]] = choice[g];
    }
    // Extend by closing the partial map under neg and oplus.
    bool changed = ok;
    while (changed && ok) {
      changed = false;
      for (size_t i = 0; i < a.size() && ok; ++i) {
        if (img[i] < 0) continue;
        int k = a.op_neg(static_cast<int>(i));
        int v = b.op_neg(img[i]);
        if (img[k] < 0) {
          img[k] = v;
          changed = true;
        } else if (img[k] != v) {
          ok = false;
        }
        for (size_t j = 0; j <= i && ok; ++j) {
          if (img[j] < 0) continue;
          int k2 = a.op_oplus(static_cast<int>(i), static_cast<int>(j));
          int v2 = b.op_oplus(img[i], img[j]);
          if (img[k2] < 0) {
            img[k2] = v2;
            changed = true;
          } else if (img[k2] != v2) {
            ok = false;
          }
        }
      }
    }
    if (ok && std::find(img.begin(), img.end(), -1) == img.end()) {
      MvHom h{&a, &b, img};
      if (verify_hom(h)) out.push_back(std::move(h));
    }
    // Odometer step.
    for (size_t g = 0; g < gens.size(); ++g) {
      if (++choice[g] < static_cast<int>(b.size())) break;
      choice[g] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const MvHom& x, const MvHom& y) { return x.table < y.table; });
  return out;
}

}  // namespace mvstone
