#include "mvstone/duality.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace mvstone {

DualSpace max_space(const MvAlgebra& a, size_t cap) {
  MaxEmbedding emb = embed_max(a, cap);
  MvTopology space =
      generate_from_base(emb.dual_points, emb.hat_chain, emb.hat);
  StoneVerdict sv = check_stone(space);
  if (!sv.stone)
    throw InternalConsistencyError("dual space of an algebra is not a Stone MV-space");
  return DualSpace{a, std::move(emb), std::move(space)};
}

PointMap dualize_hom(const MvHom& h, const DualSpace& da, const DualSpace& db) {
  if (!verify_hom(h)) throw InvalidArgumentError("dualize_hom: not a homomorphism");
  if (!(*h.domain == da.algebra) || !(*h.codomain == db.algebra))
    throw InvalidArgumentError("dualize_hom: dual spaces do not match the hom");
  const MvAlgebra& a = *h.domain;
  std::vector<int> assignment(db.embedding.maximals.size(), -1);
  for (size_t nb = 0; nb < db.embedding.maximals.size(); ++nb) {
    IndexSet pre(a.size());
    for (size_t i = 0; i < a.size(); ++i)
      if (db.embedding.maximals[nb].ideal.members.test(
              static_cast<size_t>(h.table[i])))
        pre.set(i);
    int hit = -1;
    for (size_t ma = 0; ma < da.embedding.maximals.size(); ++ma)
      if (da.embedding.maximals[ma].ideal.members == pre) {
        hit = static_cast<int>(ma);
        break;
      }
    if (hit < 0)
      throw InternalConsistencyError(
          "preimage of a maximal ideal is not a maximal ideal");
    assignment[nb] = hit;
  }
  PointMap dual(db.embedding.dual_points, da.embedding.dual_points,
                std::move(assignment));
  // Hat compatibility: pulling back a-hat along the dual map gives h(a)-hat.
  for (size_t i = 0; i < a.size(); ++i) {
    FuzzySubset pulled = preimage_map(dual, da.embedding.hat[i]);
    if (!equal_as_rationals(pulled, db.embedding.hat[h.table[i]]))
      throw InternalConsistencyError("dual map is not compatible with hats");
  }
  ContinuityVerdict cv = check_continuous(dual, db.space, da.space);
  ContinuityVerdict cb = check_continuous_via_base(dual, db.space, da.embedding.hat);
  if (!cv.continuous || !cb.continuous || cv.continuous != cb.continuous)
    throw InternalConsistencyError("dual of a homomorphism is not continuous");
  return dual;
}

MapDual dualize_map(const PointMap& f, const MvTopology& src, const MvTopology& tgt) {
  ContinuityVerdict cv = check_continuous(f, src, tgt);
  if (!cv.continuous)
    throw InvalidArgumentError("dualize_map: the map is not continuous");
  MapDual out{clopen_algebra(src), clopen_algebra(tgt), {}};
  out.table.resize(out.clop_tgt.size(), -1);
  for (size_t e = 0; e < out.clop_tgt.size(); ++e) {
    FuzzySubset table(tgt.universe(), tgt.chain(), out.clop_tgt.elem(e));
    FuzzySubset pre = preimage_map(f, table);
    // Landing in Clop(src) can require re-gridding onto src's chain.
    int hit = -1;
    for (size_t c = 0; c < out.clop_src.size(); ++c) {
      FuzzySubset cand(src.universe(), src.chain(), out.clop_src.elem(c));
      if (equal_as_rationals(cand, pre)) {
        hit = static_cast<int>(c);
        break;
      }
    }
    if (hit < 0)
      throw InternalConsistencyError(
          "preimage of a clopen under a continuous map is not clopen");
    out.table[e] = hit;
  }
  if (!verify_hom(out.hom()))
    throw InternalConsistencyError("dualized map is not a homomorphism");
  return out;
}

AlgebraRoundtrip unit_iso_algebra(const MvAlgebra& a, size_t cap) {
  DualSpace dual = max_space(a, cap);
  MvAlgebra clop = clopen_algebra(dual.space);
  if (clop.size() != a.size())
    throw InternalConsistencyError("Clop Max A has the wrong cardinality");
  std::vector<int> iso(a.size(), -1);
  for (size_t i = 0; i < a.size(); ++i) {
    int e = clop.index_of(dual.embedding.hat[i].vals());
    if (e < 0)
      throw InternalConsistencyError("hat image is not clopen in the dual space");
    iso[i] = e;
  }
  AlgebraRoundtrip rt{std::move(dual), std::move(clop), std::move(iso)};
  MvHom h = rt.hom();
  if (!verify_hom(h) || !hom_bijective(h))
    throw InternalConsistencyError("hat map is not a bijective homomorphism");
  return rt;
}

SpaceRoundtrip unit_iso_space(const MvTopology& t, size_t cap) {
  StoneVerdict sv = check_stone(t);
  if (!sv.stone)
    throw InvalidArgumentError("unit_iso_space requires a Stone MV-space");
  MvAlgebra clop = clopen_algebra(t);
  DualSpace dual = max_space(clop, cap);
  size_t n = t.universe()->size();
  std::vector<int> assignment(n, -1);
  for (size_t x = 0; x < n; ++x) {
    IndexSet vanish(clop.size());
    for (size_t e = 0; e < clop.size(); ++e)
      if (clop.elem(e)[x] == 0) vanish.set(e);
    if (!is_ideal(clop, vanish))
      throw InternalConsistencyError("vanishing clopens do not form an ideal");
    for (size_t e = 0; e < clop.size(); ++e)
      if (!vanish.test(e) &&
          maximality_exponent(clop, vanish, static_cast<int>(e)) < 0)
        throw InternalConsistencyError("vanishing ideal is not maximal");
    int hit = -1;
    for (size_t m = 0; m < dual.embedding.maximals.size(); ++m)
      if (dual.embedding.maximals[m].ideal.members == vanish) {
        hit = static_cast<int>(m);
        break;
      }
    if (hit < 0)
      throw InternalConsistencyError("vanishing ideal missing from the spectrum");
    assignment[x] = hit;
  }
  PointMap f(t.universe(), dual.embedding.dual_points, std::move(assignment));
  if (!f.is_bijective())
    throw InternalConsistencyError("unit map on points is not bijective");
  ContinuityVerdict fwd = check_continuous(f, t, dual.space);
  ContinuityVerdict bwd = check_continuous(f.inverse(), dual.space, t);
  if (!fwd.continuous || !bwd.continuous)
    throw InternalConsistencyError("unit map is not a homeomorphism");
  // Evaluation identity: hat(o) at f(x) equals o at x, as rationals.
  long long t_top = t.chain().top();
  long long d_top = dual.embedding.hat_chain.top();
  for (size_t e = 0; e < clop.size(); ++e)
    for (size_t x = 0; x < n; ++x) {
      long long lhs = dual.embedding.hat[e].at(f.apply(x));
      long long rhs = clop.elem(e)[x];
      if (lhs * t_top != rhs * d_top)
        throw InternalConsistencyError("evaluation identity fails");
    }
  return SpaceRoundtrip{std::move(clop), std::move(dual), std::move(f)};
}

namespace {

std::vector<std::vector<int>> table_set(const std::vector<FuzzySubset>& fams) {
  std::vector<std::vector<int>> out;
  out.reserve(fams.size());
  for (const auto& f : fams) out.push_back(f.vals());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SquareReport check_square(const MvAlgebra& a, size_t cap) {
  SquareReport rep;
  DualSpace dual = max_space(a, cap);
  MvAlgebra clop = clopen_algebra(dual.space);
  MvTopology sk = skeleton(dual.space);

  // Left square: idempotent clopens of the dual = classical clopens of the
  // skeleton.
  MvAlgebra clop_center = boolean_center(clop);
  std::vector<std::vector<int>> center_tables(clop_center.elems().begin(),
                                              clop_center.elems().end());
  std::sort(center_tables.begin(), center_tables.end());
  rep.center_equals_skeleton_clop = center_tables == table_set(clopen_tables(sk));

  // Right square: M -> M /\ B(A) carries the skeleton to the dual of B(A).
  MvAlgebra center = boolean_center(a);
  DualSpace dual_center = max_space(center, cap);
  std::vector<int> assignment(dual.embedding.maximals.size(), -1);
  bool ok = true;
  for (size_t m = 0; m < dual.embedding.maximals.size() && ok; ++m) {
    IndexSet restricted(center.size());
    for (size_t e = 0; e < center.size(); ++e) {
      int ai = a.index_of(center.elem(e));
      if (ai >= 0 &&
          dual.embedding.maximals[m].ideal.members.test(static_cast<size_t>(ai)))
        restricted.set(e);
    }
    int hit = -1;
    for (size_t c = 0; c < dual_center.embedding.maximals.size(); ++c)
      if (dual_center.embedding.maximals[c].ideal.members == restricted) {
        hit = static_cast<int>(c);
        break;
      }
    if (hit < 0) ok = false;
    assignment[m] = hit;
  }
  if (ok) {
    PointMap g(dual.embedding.dual_points, dual_center.embedding.dual_points,
               std::move(assignment));
    ok = g.is_bijective();
    if (ok) {
      ContinuityVerdict fwd = check_continuous(g, sk, dual_center.space);
      ContinuityVerdict bwd = check_continuous(g.inverse(), dual_center.space, sk);
      ok = fwd.continuous && bwd.continuous;
    }
  }
  rep.skeleton_equals_center_dual = ok;
  rep.pass = rep.center_equals_skeleton_clop && rep.skeleton_equals_center_dual;
  return rep;
}

// ---------------------------------------------------------------------------
// Cuts
// ---------------------------------------------------------------------------

IndexSet lower_bounds(const MvAlgebra& a, const IndexSet& s) {
  IndexSet out = IndexSet::full(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!s.test(i)) continue;
    IndexSet below(a.size());
    for (size_t j = 0; j < a.size(); ++j)
      if (a.leq(static_cast<int>(j), static_cast<int>(i))) below.set(j);
    out &= below;
  }
  return out;
}

IndexSet upper_bounds(const MvAlgebra& a, const IndexSet& s) {
  IndexSet out = IndexSet::full(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!s.test(i)) continue;
    IndexSet above(a.size());
    for (size_t j = 0; j < a.size(); ++j)
      if (a.leq(static_cast<int>(i), static_cast<int>(j))) above.set(j);
    out &= above;
  }
  return out;
}

IndexSet cut_closure(const MvAlgebra& a, const IndexSet& s) {
  return lower_bounds(a, upper_bounds(a, s));
}

bool is_cut(const MvAlgebra& a, const IndexSet& s) {
  return cut_closure(a, s) == s;
}

Cut as_cut(const MvAlgebra& a, IndexSet members) {
  if (!is_cut(a, members))
    throw InvalidArgumentError("subset is not fixed by the lu closure");
  return Cut{&a, std::move(members)};
}

std::vector<Cut> enumerate_cuts(const MvAlgebra& a, size_t exhaustive_limit) {
  size_t n = a.size();
  std::set<IndexSet> cuts;
  if (n <= exhaustive_limit && n <= 31) {
    // Subset sweep with packed up/down masks.
    std::vector<uint32_t> up(n, 0), down(n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (a.leq(static_cast<int>(j), static_cast<int>(i))) {
          down[i] |= uint32_t(1) << j;
          up[j] |= uint32_t(1) << i;
        }
    uint32_t full = (n == 31) ? 0x7fffffffu : ((uint32_t(1) << n) - 1);
    for (uint32_t s = 0; s <= full; ++s) {
      uint32_t u = full;
      for (uint32_t rest = s; rest;) {
        uint32_t bit = rest & (~rest + 1);
        u &= up[static_cast<size_t>(std::countr_zero(bit))];
        rest ^= bit;
      }
      uint32_t lu = full;
      for (uint32_t rest = u; rest;) {
        uint32_t bit = rest & (~rest + 1);
        lu &= down[static_cast<size_t>(std::countr_zero(bit))];
        rest ^= bit;
      }
      if (lu != s) continue;
      IndexSet cut(n);
      for (size_t i = 0; i < n; ++i)
        if ((s >> i) & 1) cut.set(i);
      cuts.insert(std::move(cut));
    }
  } else {
    cuts.insert(cut_closure(a, IndexSet(n)));
    for (size_t i = 0; i < n; ++i) {
      IndexSet seed(n);
      seed.set(i);
      cuts.insert(cut_closure(a, seed));
    }
  }
  std::vector<Cut> out;
  out.reserve(cuts.size());
  for (const IndexSet& m : cuts) out.push_back(Cut{&a, m});
  return out;
}

Cut limit_cut_partner(const Cut& cut) {
  const MvAlgebra& a = *cut.parent;
  IndexSet u = upper_bounds(a, cut.members);
  IndexSet partner(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (u.test(i)) partner.set(static_cast<size_t>(a.op_neg(static_cast<int>(i))));
  return as_cut(a, std::move(partner));
}

LimitCutReport limit_cut_check(const MvAlgebra& a, const MaxEmbedding& emb,
                               const Cut& cut) {
  if (cut.parent != &a && !(*cut.parent == a))
    throw InvalidArgumentError("cut belongs to a different algebra");
  if (!is_cut(a, cut.members))
    throw InvalidArgumentError("limit_cut_check requires a cut");
  LimitCutReport rep{false, -1, Cut{&a, IndexSet(a.size())}, false, false};
  std::vector<int> members = cut.members.to_indices();
  std::vector<int> uppers = upper_bounds(a, cut.members).to_indices();
  if (members.empty() || uppers.empty())
    throw InternalConsistencyError("cut without members or upper bounds");
  // Vanishing-distance table in the hat image, cross-checked against the
  // meet computed inside the algebra.
  FuzzySubset hat_meet = FuzzySubset::one(emb.dual_points, emb.hat_chain);
  int alg_meet = a.one();
  for (int b : uppers)
    for (int x : members) {
      hat_meet = f_meet(hat_meet, f_ominus(emb.hat[b], emb.hat[x]));
      alg_meet = a.op_meet(alg_meet, a.op_ominus(b, x));
    }
  if (!(emb.hat[alg_meet] == hat_meet))
    throw InternalConsistencyError(
        "hat-image meet differs from the in-algebra meet");
  rep.limit = hat_meet.is_zero();
  int sup = a.zero();
  for (int x : members) sup = a.op_join(sup, x);
  rep.sup = sup;
  rep.partner = limit_cut_partner(cut);
  // Join of hats over the cut vs meet of negated-partner hats.
  FuzzySubset join_x = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
  for (int x : members) join_x = f_join(join_x, emb.hat[x]);
  FuzzySubset meet_y = FuzzySubset::one(emb.dual_points, emb.hat_chain);
  for (int y : rep.partner.members.to_indices())
    meet_y = f_meet(meet_y, f_neg(emb.hat[y]));
  rep.join_meets_partner = join_x == meet_y;
  if (rep.join_meets_partner != rep.limit)
    throw InternalConsistencyError(
        "join/meet characterization disagrees with the distance condition");
  if (rep.limit) {
    // Partner of a limit cut is a limit cut.
    FuzzySubset partner_meet = FuzzySubset::one(emb.dual_points, emb.hat_chain);
    std::vector<int> p_members = rep.partner.members.to_indices();
    std::vector<int> p_uppers = upper_bounds(a, rep.partner.members).to_indices();
    for (int b : p_uppers)
      for (int x : p_members)
        partner_meet = f_meet(partner_meet, f_ominus(emb.hat[b], emb.hat[x]));
    rep.partner_limit = partner_meet.is_zero();
    if (!rep.partner_limit)
      throw InternalConsistencyError("partner of a limit cut is not a limit cut");
  }
  return rep;
}

LccReport check_lcc(const MvAlgebra& a, size_t exhaustive_limit, size_t cap) {
  MaxEmbedding emb = embed_max(a, cap);
  LccReport rep;
  rep.lcc = true;
  for (const Cut& cut : enumerate_cuts(a, exhaustive_limit)) {
    ++rep.cuts;
    LimitCutReport r = limit_cut_check(a, emb, cut);
    if (!r.limit) continue;
    ++rep.limit_cuts;
    // The supremum must exist in the algebra and match the pointwise join
    // of the hat image.
    FuzzySubset join_x = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
    for (int x : cut.members.to_indices()) join_x = f_join(join_x, emb.hat[x]);
    if (!(emb.hat[r.sup] == join_x)) rep.lcc = false;
  }
  return rep;
}

AlgebraRoundtrip lc_completion(const MvAlgebra& a, size_t cap) {
  AlgebraRoundtrip rt = unit_iso_algebra(a, cap);
  // The embedded copy of A: every hat must be an element of the completion.
  for (size_t i = 0; i < a.size(); ++i)
    if (rt.clop.index_of(rt.dual.embedding.hat[i].vals()) < 0)
      throw InternalConsistencyError("completion does not contain the hat image");
  return rt;
}

SfcReport check_sfc(const MvAlgebra& a, size_t cap) {
  SfcReport rep;
  MaxEmbedding emb = embed_max(a, cap);
  rep.quotient_orders = emb.quotient_orders;
  rep.sfc = true;  // finite chains are complete
  for (int k : rep.quotient_orders)
    if (k < 2) throw InternalConsistencyError("degenerate quotient chain");
  return rep;
}

LiminaryDualityReport check_liminary_duality(const MvAlgebra& a, size_t cap) {
  LiminaryDualityReport rep;
  rep.liminary = is_liminary(a, cap);
  DualSpace dual = max_space(a, cap);
  rep.dual_strongly_compact = check_compactness(dual.space).strongly_compact;
  rep.clop_liminary = is_liminary(clopen_algebra(dual.space), cap);
  rep.lcc = check_lcc(a, kCutExhaustiveLimit, cap).lcc;
  rep.implications_hold = (!rep.liminary || rep.dual_strongly_compact) &&
                          (!rep.dual_strongly_compact || rep.clop_liminary) &&
                          (!rep.clop_liminary || rep.lcc);
  return rep;
}

}  // namespace mvstone
