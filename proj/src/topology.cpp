#include "mvstone/topology.hpp"

#include <algorithm>
#include <set>

namespace mvstone {

namespace {

std::vector<FuzzySubset> canonical(std::vector<FuzzySubset> fams) {
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());
  return fams;
}

std::vector<std::vector<int>> all_tables(size_t points, int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(points, 0);
  for (;;) {
    out.push_back(cur);
    size_t i = 0;
    while (i < points) {
      if (++cur[i] <= order - 1) break;
      cur[i] = 0;
      ++i;
    }
    if (i == points) break;
  }
  return out;
}

/// Fixpoint closure of a table set under a list of binary operations.
std::vector<FuzzySubset> close_under(std::vector<FuzzySubset> seed, bool with_join,
                                     bool with_oplus, bool with_odot,
                                     bool with_meet) {
  std::set<std::vector<int>> seen;
  std::vector<FuzzySubset> work;
  for (auto& f : seed)
    if (seen.insert(f.vals()).second) work.push_back(std::move(f));
  for (size_t head = 0; head < work.size(); ++head) {
    for (size_t j = 0; j <= head; ++j) {
      // Copies: pushing below may reallocate the worklist.
      FuzzySubset a = work[head];
      FuzzySubset b = work[j];
      auto push = [&](FuzzySubset f) {
        if (seen.insert(f.vals()).second) work.push_back(std::move(f));
      };
      if (with_join) push(f_join(a, b));
      if (with_oplus) push(f_oplus(a, b));
      if (with_odot) push(f_odot(a, b));
      if (with_meet) push(f_meet(a, b));
    }
  }
  return canonical(std::move(work));
}

}  // namespace

MvTopology::MvTopology(UniversePtr uni, Chain chain, std::vector<FuzzySubset> opens)
    : uni_(std::move(uni)), chain_(chain), opens_(canonical(std::move(opens))) {
  if (!uni_) throw InvalidArgumentError("null universe");
  for (const auto& o : opens_) {
    if (!same_universe(o.universe(), uni_))
      throw UniverseMismatchError("open over a different universe");
    if (o.chain() != chain_)
      throw ChainMismatchError("open over a different chain");
  }
}

MvTopology MvTopology::indiscrete(UniversePtr uni, Chain chain) {
  std::vector<FuzzySubset> opens{FuzzySubset::zero(uni, chain),
                                 FuzzySubset::one(uni, chain)};
  return MvTopology(uni, chain, std::move(opens));
}

MvTopology MvTopology::full(UniversePtr uni, Chain chain, size_t cap) {
  size_t count = 1;
  for (size_t i = 0; i < uni->size(); ++i) {
    count *= static_cast<size_t>(chain.order);
    if (count > cap) throw ResourceLimitError("full topology too large");
  }
  std::vector<FuzzySubset> opens;
  for (auto& v : all_tables(uni->size(), chain.order))
    opens.emplace_back(uni, chain, std::move(v));
  return MvTopology(uni, chain, std::move(opens));
}

MvTopology MvTopology::discrete_crisp(UniversePtr uni, Chain chain) {
  size_t n = uni->size();
  if (n > 20) throw ResourceLimitError("discrete topology too large");
  std::vector<FuzzySubset> opens;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<bool> mem(n);
    for (size_t i = 0; i < n; ++i) mem[i] = (mask >> i) & 1;
    opens.push_back(FuzzySubset::crisp(uni, chain, mem));
  }
  return MvTopology(uni, chain, std::move(opens));
}

bool MvTopology::contains(const FuzzySubset& f) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), f);
  return it != opens_.end() && *it == f;
}

bool MvTopology::contains_rational(const FuzzySubset& f) const {
  if (f.chain() == chain_) return contains(f);
  for (const auto& o : opens_)
    if (equal_as_rationals(o, f)) return true;
  return false;
}

bool MvTopology::operator==(const MvTopology& o) const {
  return same_universe(uni_, o.uni_) && chain_ == o.chain_ && opens_ == o.opens_;
}

TopologyVerdict check_mv_topology(const MvTopology& t) {
  TopologyVerdict v;
  FuzzySubset zero = FuzzySubset::zero(t.universe(), t.chain());
  FuzzySubset one = FuzzySubset::one(t.universe(), t.chain());
  if (!t.contains(zero) || !t.contains(one)) {
    v.clause = "(i)";
    return v;
  }
  struct Op {
    const char* clause;
    FuzzySubset (*fn)(const FuzzySubset&, const FuzzySubset&);
  };
  const Op ops[] = {{"(ii)", f_join}, {"(iii)", f_odot}, {"(iv)", f_oplus},
                    {"(v)", f_meet}};
  for (const Op& op : ops)
    for (const auto& a : t.opens())
      for (const auto& b : t.opens()) {
        FuzzySubset r = op.fn(a, b);
        if (!t.contains(r)) {
          v.clause = op.clause;
          v.offenders = {a, b};
          return v;
        }
      }
  v.pass = true;
  return v;
}

std::vector<FuzzySubset> closed_sets(const MvTopology& t) {
  std::vector<FuzzySubset> out;
  out.reserve(t.size());
  for (const auto& o : t.opens()) out.push_back(f_neg(o));
  return canonical(std::move(out));
}

std::vector<FuzzySubset> clopen_tables(const MvTopology& t) {
  std::vector<FuzzySubset> closed = closed_sets(t);
  std::vector<FuzzySubset> out;
  for (const auto& o : t.opens())
    if (std::binary_search(closed.begin(), closed.end(), o)) out.push_back(o);
  return out;
}

FuzzySubset subset_from_elem(const UniversePtr& uni, Chain chain, const MvElem& e) {
  return FuzzySubset(uni, chain, e);
}

MvAlgebra clopen_algebra(const MvTopology& t) {
  TopologyVerdict v = check_mv_topology(t);
  if (!v.pass)
    throw InvalidArgumentError("clopen algebra of an invalid topology: clause " +
                               v.clause + " fails");
  std::vector<MvElem> carrier;
  for (const auto& c : clopen_tables(t)) carrier.push_back(c.vals());
  Signature sig(std::vector<int>(t.universe()->size(), t.chain().order));
  return MvAlgebra::from_carrier(std::move(sig), std::move(carrier));
}

MvTopology generate_from_base(UniversePtr uni, Chain chain,
                              const std::vector<FuzzySubset>& base) {
  if (!is_covering(uni, chain, base)) {
    // Report the first uncovered point.
    for (size_t i = 0; i < uni->size(); ++i) {
      int best = 0;
      for (const auto& f : base) best = std::max(best, f.at(i));
      if (best < chain.top())
        throw InvalidArgumentError("base is not a covering: point '" +
                                   uni->point(i) + "' never reaches 1");
    }
    throw InvalidArgumentError("base is not a covering");
  }
  struct Op {
    const char* name;
    FuzzySubset (*fn)(const FuzzySubset&, const FuzzySubset&);
  };
  const Op ops[] = {{"oplus", f_oplus}, {"odot", f_odot}, {"meet", f_meet}};
  std::vector<FuzzySubset> fam = canonical(base);
  for (const Op& op : ops)
    for (const auto& a : fam)
      for (const auto& b : fam) {
        FuzzySubset r = op.fn(a, b);
        if (!std::binary_search(fam.begin(), fam.end(), r))
          throw InvalidArgumentError("base not closed under " + std::string(op.name) +
                                     " at " + a.str() + ", " + b.str());
      }
  std::vector<FuzzySubset> opens = fam;
  opens.push_back(FuzzySubset::zero(uni, chain));
  opens = close_under(std::move(opens), /*join*/ true, false, false, false);
  MvTopology t(uni, chain, std::move(opens));
  TopologyVerdict v = check_mv_topology(t);
  if (!v.pass)
    throw InternalConsistencyError("generated family violates clause " + v.clause);
  return t;
}

MvTopology skeleton(const MvTopology& t) {
  std::vector<FuzzySubset> crisp;
  for (const auto& o : t.opens())
    if (o.is_crisp()) crisp.push_back(o);
  std::vector<FuzzySubset> via_delta;
  for (const auto& o : t.opens()) via_delta.push_back(f_delta(o));
  via_delta = canonical(std::move(via_delta));
  if (canonical(crisp) != via_delta)
    throw InternalConsistencyError(
        "skeleton mismatch: crisp opens differ from the delta image");
  return MvTopology(t.universe(), t.chain(), std::move(crisp));
}

MvTopology subspace(const MvTopology& t, const std::vector<int>& point_indices) {
  if (point_indices.empty()) throw InvalidArgumentError("empty subspace");
  std::vector<std::string> names;
  for (int i : point_indices) {
    if (i < 0 || static_cast<size_t>(i) >= t.universe()->size())
      throw InvalidArgumentError("subspace point index out of range");
    names.push_back(t.universe()->point(i));
  }
  UniversePtr sub = make_universe(std::move(names));
  std::vector<FuzzySubset> opens;
  for (const auto& o : t.opens()) {
    std::vector<int> vals(point_indices.size());
    for (size_t j = 0; j < point_indices.size(); ++j) vals[j] = o.at(point_indices[j]);
    opens.emplace_back(sub, t.chain(), std::move(vals));
  }
  MvTopology s(sub, t.chain(), std::move(opens));
  TopologyVerdict v = check_mv_topology(s);
  if (!v.pass)
    throw InternalConsistencyError("subspace violates clause " + v.clause);
  return s;
}

bool is_covering(UniversePtr uni, Chain chain, const std::vector<FuzzySubset>& family) {
  FuzzySubset join = family_join(std::move(uni), chain, family);
  return join.is_one();
}

bool is_additive_covering(UniversePtr uni, Chain chain, const WeightedFamily& family) {
  FuzzySubset acc = FuzzySubset::zero(std::move(uni), chain);
  for (const auto& [f, mult] : family) {
    if (mult < 1) throw InvalidArgumentError("multiplicities must be >= 1");
    acc = f_oplus(acc, f_nat_multiple(mult, f));
  }
  return acc.is_one();
}

std::optional<WeightedFamily> extract_additive_subcover(
    UniversePtr uni, Chain chain, const std::vector<FuzzySubset>& family,
    size_t exhaustive_bound) {
  if (!is_covering(uni, chain, family)) return std::nullopt;
  // Greedy: the covering property pins value 1 at each point, so picking one
  // witness per point already gives an additive covering.
  std::vector<size_t> picked;
  bool greedy_ok = true;
  for (size_t i = 0; i < uni->size() && greedy_ok; ++i) {
    bool found = false;
    for (size_t k = 0; k < family.size(); ++k)
      if (family[k].at(i) == chain.top()) {
        if (std::find(picked.begin(), picked.end(), k) == picked.end())
          picked.push_back(k);
        found = true;
        break;
      }
    greedy_ok = found;
  }
  if (greedy_ok) {
    WeightedFamily out;
    for (size_t k : picked) out.emplace_back(family[k], 1);
    if (is_additive_covering(uni, chain, out)) return out;
  }
  // Exhaustive fallback over multiplicity vectors, capped at chain.top() per
  // member since larger multiples cannot saturate any further coordinate.
  size_t states = 1;
  for (size_t k = 0; k < family.size(); ++k) {
    states *= static_cast<size_t>(chain.top()) + 1;
    if (states > exhaustive_bound)
      throw ResourceLimitError("additive subcover search space exceeds bound");
  }
  std::vector<int> mult(family.size(), 0);
  for (size_t tick = 0; tick < states; ++tick) {
    WeightedFamily out;
    for (size_t k = 0; k < family.size(); ++k)
      if (mult[k] > 0) out.emplace_back(family[k], mult[k]);
    if (!out.empty() && is_additive_covering(uni, chain, out)) return out;
    for (size_t k = 0; k < family.size(); ++k) {
      if (++mult[k] <= chain.top()) break;
      mult[k] = 0;
    }
  }
  return std::nullopt;
}

CompactnessVerdict check_compactness(const MvTopology& t) {
  CompactnessVerdict v;
  size_t n = t.universe()->size();
  // Candidates: opens attaining 1 somewhere (others never sit in a minimal
  // covering), with their 1-point masks.
  std::vector<size_t> cand;
  std::vector<uint64_t> ones;
  for (size_t k = 0; k < t.size(); ++k) {
    uint64_t m = 0;
    for (size_t i = 0; i < n; ++i)
      if (t.opens()[k].at(i) == t.chain().top()) m |= uint64_t(1) << i;
    if (m) {
      cand.push_back(k);
      ones.push_back(m);
    }
  }
  const uint64_t full = (n >= 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  v.compact = true;
  v.strongly_compact = true;
  // Minimal coverings have at most |X| members (each needs a private point).
  std::vector<size_t> pick;
  auto minimal = [&](const std::vector<size_t>& sel) {
    for (size_t d = 0; d < sel.size(); ++d) {
      uint64_t rest = 0;
      for (size_t e = 0; e < sel.size(); ++e)
        if (e != d) rest |= ones[sel[e]];
      if ((rest & full) == full) return false;
    }
    return true;
  };
  auto certify = [&](const std::vector<size_t>& sel) {
    ++v.minimal_coverings;
    std::vector<FuzzySubset> covering;
    for (size_t s : sel) covering.push_back(t.opens()[cand[s]]);
    // strongly compact: the covering is its own finite subcover.
    if (!is_covering(t.universe(), t.chain(), covering)) v.strongly_compact = false;
    if (!extract_additive_subcover(t.universe(), t.chain(), covering))
      v.compact = false;
  };
  // Enumerate subsets of size <= n over candidate list.
  std::vector<size_t> idx;
  auto rec = [&](auto&& self, size_t start, uint64_t acc) -> void {
    if ((acc & full) == full) {
      std::vector<size_t> sel = idx;
      if (minimal(sel)) certify(sel);
      return;  // supersets are not minimal
    }
    if (idx.size() == n) return;
    for (size_t k = start; k < cand.size(); ++k) {
      if ((ones[k] & ~acc) == 0) continue;  // adds nothing new
      idx.push_back(k);
      self(self, k + 1, acc | ones[k]);
      idx.pop_back();
    }
  };
  rec(rec, 0, 0);
  return v;
}

HausdorffVerdict check_hausdorff(const MvTopology& t) {
  HausdorffVerdict v;
  v.separated = true;
  v.separated_odot = true;
  size_t n = t.universe()->size();
  int top = t.chain().top();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) {
      HausdorffVerdict::PairWitness w;
      w.x = static_cast<int>(x);
      w.y = static_cast<int>(y);
      for (size_t i = 0; i < t.size() && !(w.separated && w.separated_odot); ++i) {
        if (t.opens()[i].at(x) != top) continue;
        for (size_t j = 0; j < t.size(); ++j) {
          if (t.opens()[j].at(y) != top) continue;
          if (!w.separated && f_meet(t.opens()[i], t.opens()[j]).is_zero()) {
            w.separated = true;
            w.ox = static_cast<int>(i);
            w.oy = static_cast<int>(j);
          }
          if (!w.separated_odot && f_odot(t.opens()[i], t.opens()[j]).is_zero()) {
            w.separated_odot = true;
            w.px = static_cast<int>(i);
            w.py = static_cast<int>(j);
          }
          if (w.separated && w.separated_odot) break;
        }
      }
      v.separated = v.separated && w.separated;
      v.separated_odot = v.separated_odot && w.separated_odot;
      v.pairs.push_back(w);
    }
  v.variants_agree = v.separated == v.separated_odot;
  return v;
}

bool is_zero_dimensional(const MvTopology& t) {
  std::vector<FuzzySubset> clop = clopen_tables(t);
  for (const auto& o : t.opens()) {
    FuzzySubset acc = FuzzySubset::zero(t.universe(), t.chain());
    for (const auto& c : clop)
      if (c.leq(o)) acc = f_join(acc, c);
    if (!(acc == o)) return false;
  }
  return true;
}

StoneVerdict check_stone(const MvTopology& t) {
  StoneVerdict v;
  CompactnessVerdict c = check_compactness(t);
  v.compact = c.compact;
  v.strongly_compact = c.strongly_compact;
  HausdorffVerdict h = check_hausdorff(t);
  if (!h.variants_agree)
    throw InternalConsistencyError("Hausdorff variants disagree");
  v.hausdorff = h.separated;
  v.zero_dimensional = is_zero_dimensional(t);
  v.stone = v.compact && v.hausdorff && v.zero_dimensional;
  if (v.hausdorff) {
    v.crisp_singletons_closed = true;
    std::vector<FuzzySubset> closed = closed_sets(t);
    for (size_t i = 0; i < t.universe()->size(); ++i) {
      std::vector<bool> mem(t.universe()->size(), false);
      mem[i] = true;
      FuzzySubset singleton = FuzzySubset::crisp(t.universe(), t.chain(), mem);
      if (!std::binary_search(closed.begin(), closed.end(), singleton)) {
        v.crisp_singletons_closed = false;
        break;
      }
    }
    if (!v.crisp_singletons_closed)
      throw InternalConsistencyError(
          "Hausdorff space with a non-closed crisp singleton");
  }
  return v;
}

ContinuityVerdict check_continuous(const PointMap& f, const MvTopology& src,
                                   const MvTopology& tgt) {
  if (!same_universe(f.source(), src.universe()) ||
      !same_universe(f.target(), tgt.universe()))
    throw UniverseMismatchError("continuity check over mismatched universes");
  ContinuityVerdict v;
  for (const auto& o : tgt.opens()) {
    FuzzySubset pre = preimage_map(f, o);
    if (!src.contains_rational(pre)) {
      v.offender = o;
      return v;
    }
  }
  v.continuous = true;
  return v;
}

ContinuityVerdict check_continuous_via_base(const PointMap& f, const MvTopology& src,
                                            const std::vector<FuzzySubset>& base) {
  ContinuityVerdict v;
  for (const auto& o : base) {
    FuzzySubset pre = preimage_map(f, o);
    if (!src.contains_rational(pre)) {
      v.offender = o;
      return v;
    }
  }
  v.continuous = true;
  return v;
}

bool is_open_map(const PointMap& f, const MvTopology& src, const MvTopology& tgt) {
  for (const auto& o : src.opens())
    if (!tgt.contains_rational(image_map(f, o))) return false;
  return true;
}

bool is_closed_map(const PointMap& f, const MvTopology& src, const MvTopology& tgt) {
  std::vector<FuzzySubset> tgt_closed = closed_sets(tgt);
  for (const auto& c : closed_sets(src)) {
    FuzzySubset img = image_map(f, c);
    bool found = false;
    for (const auto& tc : tgt_closed)
      if (equal_as_rationals(tc, img)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

FuzzySubset FuzzyPoint::table(const UniversePtr& uni) const {
  std::vector<int> vals(uni->size(), 0);
  if (support < 0 || static_cast<size_t>(support) >= uni->size())
    throw InvalidArgumentError("fuzzy point support off the universe");
  vals[static_cast<size_t>(support)] = value.num;
  return FuzzySubset(uni, value.chain, std::move(vals));
}

std::vector<FuzzyPoint> all_fuzzy_points(const UniversePtr& uni, Chain chain) {
  std::vector<FuzzyPoint> out;
  for (size_t x = 0; x < uni->size(); ++x)
    for (int v = 1; v <= chain.top(); ++v)
      out.emplace_back(static_cast<int>(x), ChainValue(v, chain));
  return out;
}

FuzzySubset open_ball(const MetricTable& metric, Chain chain, const FuzzyPoint& center,
                      const Rat& radius) {
  if (center.value.chain != chain)
    throw ChainMismatchError("ball center value off the chain");
  size_t n = metric.uni->size();
  std::vector<int> vals(n, 0);
  for (size_t y = 0; y < n; ++y)
    if (metric.at(static_cast<size_t>(center.support), y) < radius)
      vals[y] = center.value.num;
  return FuzzySubset(metric.uni, chain, std::move(vals));
}

void validate_metric(const MetricTable& m) {
  size_t n = m.uni->size();
  if (m.d.size() != n * n) throw InvalidArgumentError("metric table size mismatch");
  Rat zero(0, 1);
  for (size_t i = 0; i < n; ++i) {
    if (!(m.at(i, i) == zero))
      throw InvalidArgumentError("metric with d(x,x) != 0 at '" + m.uni->point(i) + "'");
    for (size_t j = 0; j < n; ++j) {
      if (i != j && !(zero < m.at(i, j)))
        throw InvalidArgumentError("metric not positive at distinct points");
      if (!(m.at(i, j) == m.at(j, i)))
        throw InvalidArgumentError("metric not symmetric");
      for (size_t k = 0; k < n; ++k)
        if (!(m.at(i, k) <= m.at(i, j) + m.at(j, k)))
          throw InvalidArgumentError("metric violates the triangle inequality");
    }
  }
}

MetricBallResult metric_ball_base(const MetricTable& metric, Chain chain,
                                  const std::vector<Rat>& radii) {
  validate_metric(metric);
  for (const Rat& r : radii)
    if (!(Rat(0, 1) < r)) throw InvalidArgumentError("radii must be positive");
  UniversePtr uni = metric.uni;
  std::vector<FuzzySubset> balls;
  for (const FuzzyPoint& center : all_fuzzy_points(uni, chain))
    for (const Rat& r : radii) balls.push_back(open_ball(metric, chain, center, r));
  balls = canonical(std::move(balls));
  // Literal construction: joins of balls.
  std::vector<FuzzySubset> literal = balls;
  literal.push_back(FuzzySubset::zero(uni, chain));
  literal = close_under(std::move(literal), true, false, false, false);
  MvTopology literal_topology(uni, chain, literal);
  bool literal_ok = check_mv_topology(literal_topology).pass;
  // Closed construction: saturate the base first, then generate.
  std::vector<FuzzySubset> base = close_under(balls, false, true, true, true);
  MvTopology closed = generate_from_base(uni, chain, base);
  return MetricBallResult{std::move(balls), std::move(base), std::move(closed),
                          std::move(literal_topology), literal_ok};
}

std::vector<MvTopology> enumerate_topologies(UniversePtr uni, Chain chain,
                                             size_t max_tables) {
  std::vector<std::vector<int>> tables = all_tables(uni->size(), chain.order);
  if (tables.size() > max_tables)
    throw ResourceLimitError("topology enumeration space too large");
  std::vector<int> zero_idx = std::vector<int>(uni->size(), 0);
  std::vector<int> one_idx = std::vector<int>(uni->size(), chain.top());
  // Free positions: every table except 0 and 1.
  std::vector<size_t> free_pos;
  for (size_t i = 0; i < tables.size(); ++i)
    if (tables[i] != zero_idx && tables[i] != one_idx) free_pos.push_back(i);
  std::vector<MvTopology> out;
  for (size_t mask = 0; mask < (size_t(1) << free_pos.size()); ++mask) {
    std::vector<FuzzySubset> fam{FuzzySubset::zero(uni, chain),
                                 FuzzySubset::one(uni, chain)};
    for (size_t b = 0; b < free_pos.size(); ++b)
      if ((mask >> b) & 1) fam.emplace_back(uni, chain, tables[free_pos[b]]);
    MvTopology t(uni, chain, std::move(fam));
    if (check_mv_topology(t).pass) out.push_back(std::move(t));
  }
  return out;
}

MvTopology random_topology(UniversePtr uni, Chain chain, std::mt19937& rng,
                           int max_seeds) {
  std::uniform_int_distribution<int> nseeds(0, max_seeds);
  std::uniform_int_distribution<int> val(0, chain.top());
  std::vector<FuzzySubset> fam{FuzzySubset::zero(uni, chain),
                               FuzzySubset::one(uni, chain)};
  int k = nseeds(rng);
  for (int s = 0; s < k; ++s) {
    std::vector<int> vals(uni->size());
    for (auto& v : vals) v = val(rng);
    fam.emplace_back(uni, chain, std::move(vals));
  }
  std::vector<FuzzySubset> opens = close_under(std::move(fam), true, true, true, true);
  MvTopology t(uni, chain, std::move(opens));
  TopologyVerdict v = check_mv_topology(t);
  if (!v.pass)
    throw InternalConsistencyError("random closure violates clause " + v.clause);
  return t;
}

}  // namespace mvstone
