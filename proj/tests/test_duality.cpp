#include <random>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "mvstone/duality.hpp"

using namespace mvstone;
using mvstone::testing::corpus;
using mvstone::testing::corpus_up_to;

namespace {

IndexSet set_of(const MvAlgebra& a, std::initializer_list<MvElem> elems) {
  IndexSet s(a.size());
  for (const MvElem& e : elems) {
    int i = a.index_of(e);
    REQUIRE(i >= 0);
    s.set(static_cast<size_t>(i));
  }
  return s;
}

}  // namespace

TEST_CASE("max_space of the smallest chains") {
  DualSpace d2 = max_space(MvAlgebra::chain_algebra(2));
  CHECK(d2.embedding.dual_points->size() == 1);
  CHECK(d2.space.size() == 2);
  DualSpace d3 = max_space(MvAlgebra::chain_algebra(3));
  CHECK(d3.embedding.dual_points->size() == 1);
  CHECK(d3.space.size() == 3);  // 0, 1/2, 1 on one point
  DualSpace sq = max_space(MvAlgebra::full_product(Signature({2, 2})));
  CHECK(sq.embedding.dual_points->size() == 2);
  CHECK(sq.space == MvTopology::discrete_crisp(sq.embedding.dual_points,
                                               sq.embedding.hat_chain));
}

TEST_CASE("dual spaces are Stone MV-spaces across the corpus") {
  for (const auto* e : corpus_up_to(16)) {
    DualSpace d = max_space(e->algebra);
    StoneVerdict v = check_stone(d.space);
    CHECK(v.stone);
    CHECK(v.strongly_compact);
  }
}

TEST_CASE("skeletons of Stone MV-spaces are classical Stone spaces") {
  for (const auto* e : corpus_up_to(16)) {
    MvTopology sk = skeleton(max_space(e->algebra).space);
    for (const auto& o : sk.opens()) CHECK(o.is_crisp());
    StoneVerdict v = check_stone(sk);
    CHECK(v.stone);
  }
}

TEST_CASE("dualize_hom: identity and projection") {
  MvAlgebra a = MvAlgebra::full_product(Signature({2, 3}));
  DualSpace da = max_space(a);
  PointMap dual_id = dualize_hom(identity_hom(a), da, da);
  CHECK(dual_id.table() == PointMap::identity(da.embedding.dual_points).table());

  // Projection onto the L3 coordinate.
  MvAlgebra l3 = MvAlgebra::chain_algebra(3);
  DualSpace dl3 = max_space(l3);
  std::vector<int> table(a.size());
  for (size_t i = 0; i < a.size(); ++i) table[i] = l3.index_of({a.elem(i)[1]});
  MvHom proj{&a, &l3, table};
  REQUIRE(verify_hom(proj));
  PointMap dual = dualize_hom(proj, da, dl3);
  // One point lands in the two-point spectrum of a.
  CHECK(dual.source()->size() == 1);
  CHECK(dual.target()->size() == 2);
  // It lands on the maximal ideal vanishing in coordinate 1.
  int m = dual.apply(0);
  const IndexSet& ideal = da.embedding.maximals[m].ideal.members;
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(ideal.test(i) == (a.elem(i)[1] == 0));
}

TEST_CASE("Max is functorial on composable corpus homs") {
  MvAlgebra l2 = MvAlgebra::chain_algebra(2);
  MvAlgebra sq = MvAlgebra::full_product(Signature({2, 2}));
  MvAlgebra l3l2 = MvAlgebra::full_product(Signature({3, 2}));
  DualSpace d_l2 = max_space(l2), d_sq = max_space(sq), d_l3l2 = max_space(l3l2);
  for (const MvHom& g : enumerate_homomorphisms(l2, sq))
    for (const MvHom& h : enumerate_homomorphisms(sq, l3l2)) {
      MvHom hg = compose_hom(h, g);
      PointMap lhs = dualize_hom(hg, d_l2, d_l3l2);
      PointMap rhs = PointMap::compose(dualize_hom(g, d_l2, d_sq),
                                       dualize_hom(h, d_sq, d_l3l2));
      CHECK(lhs.table() == rhs.table());
    }
}

TEST_CASE("naturality: hats intertwine homs and dual maps") {
  MvAlgebra a = MvAlgebra::full_product(Signature({2, 2}));
  MvAlgebra b = MvAlgebra::full_product(Signature({3, 2}));
  DualSpace da = max_space(a), db = max_space(b);
  for (const MvHom& h : enumerate_homomorphisms(a, b)) {
    PointMap dual = dualize_hom(h, da, db);
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(equal_as_rationals(preimage_map(dual, da.embedding.hat[i]),
                               db.embedding.hat[h.table[i]]));
  }
}

TEST_CASE("dualize_map: identity and evaluation at a point") {
  UniversePtr u = make_universe({"p", "q"});
  Chain c(3);
  MvTopology full = MvTopology::full(u, c);
  MapDual id = dualize_map(PointMap::identity(u), full, full);
  for (size_t i = 0; i < id.clop_tgt.size(); ++i) CHECK(id.table[i] == (int)i);

  // Constant map at p: the dual hom evaluates each clopen at p.
  MapDual ev = dualize_map(PointMap::constant(u, u, 0), full, full);
  for (size_t e = 0; e < ev.clop_tgt.size(); ++e) {
    const MvElem& src = ev.clop_tgt.elem(e);
    const MvElem& img = ev.clop_src.elem(ev.table[e]);
    for (int v : img) CHECK(v == src[0]);
  }
}

TEST_CASE("Clop is functorial on continuous maps") {
  UniversePtr u = make_universe({"p", "q"});
  Chain c(3);
  MvTopology full = MvTopology::full(u, c);
  std::vector<PointMap> maps{PointMap::identity(u), PointMap::constant(u, u, 0),
                             PointMap(u, u, {1, 0}), PointMap::constant(u, u, 1)};
  for (const PointMap& f : maps)
    for (const PointMap& g : maps) {
      PointMap gf = PointMap::compose(g, f);
      MapDual lhs = dualize_map(gf, full, full);
      MapDual df = dualize_map(f, full, full);
      MapDual dg = dualize_map(g, full, full);
      // Clop(g o f) = Clop f o Clop g.
      for (size_t e = 0; e < lhs.clop_tgt.size(); ++e)
        CHECK(lhs.table[e] == df.table[dg.table[e]]);
    }
}

TEST_CASE("unit_iso_algebra certifies the corpus") {
  for (const auto* e : corpus_up_to(16)) {
    AlgebraRoundtrip rt = unit_iso_algebra(e->algebra);
    CHECK(rt.clop.size() == e->algebra.size());
    MvHom h = rt.hom();
    CHECK(verify_hom(h));
    CHECK(hom_bijective(h));
  }
}

TEST_CASE("roundtrip recovers specific algebras") {
  AlgebraRoundtrip l4 = unit_iso_algebra(MvAlgebra::chain_algebra(4));
  CHECK(find_isomorphism(l4.dual.algebra, l4.clop).has_value());
  AlgebraRoundtrip big = unit_iso_algebra(MvAlgebra::full_product(Signature({2, 3, 5})));
  CHECK(chain_factorization(big.clop) == std::vector<int>{2, 3, 5});
}

TEST_CASE("unit_iso_space on hand-built spaces") {
  UniversePtr u1 = make_universe({"x"});
  MvTopology one_point = MvTopology::full(u1, Chain(3));
  SpaceRoundtrip rt = unit_iso_space(one_point);
  CHECK(rt.clop.size() == 3);
  CHECK(rt.dual.embedding.dual_points->size() == 1);

  UniversePtr u2 = make_universe({"p", "q"});
  MvTopology crisp = MvTopology::discrete_crisp(u2, Chain(2));
  SpaceRoundtrip rt2 = unit_iso_space(crisp);
  CHECK(rt2.clop.size() == 4);
  CHECK(rt2.to_dual.is_bijective());

  // Not Stone: rejected.
  CHECK_THROWS_AS(unit_iso_space(MvTopology::indiscrete(u2, Chain(3))),
                  InvalidArgumentError);

  // A crisp space declared over a finer grid: the evaluation identity has
  // to compare values across chains.
  SpaceRoundtrip regrid = unit_iso_space(MvTopology::discrete_crisp(u2, Chain(3)));
  CHECK(regrid.clop.size() == 4);
  CHECK(regrid.dual.embedding.hat_chain.order == 2);
  CHECK(regrid.to_dual.is_bijective());
}

TEST_CASE("space roundtrip composes with the algebra roundtrip") {
  for (const auto* e : corpus_up_to(12)) {
    DualSpace d = max_space(e->algebra);
    SpaceRoundtrip rt = unit_iso_space(d.space);
    // Pulling every clopen's hat back along to_dual recovers the clopen.
    for (size_t c = 0; c < rt.clop.size(); ++c) {
      FuzzySubset pulled = preimage_map(rt.to_dual, rt.dual.embedding.hat[c]);
      CHECK(equal_as_rationals(
          pulled, FuzzySubset(d.space.universe(), d.space.chain(), rt.clop.elem(c))));
    }
  }
}

TEST_CASE("commuting square on Boolean algebras and chains") {
  CHECK(check_square(MvAlgebra::full_product(Signature({2, 2, 2}))).pass);
  CHECK(check_square(MvAlgebra::chain_algebra(3)).pass);
  for (const auto* e : corpus_up_to(16)) CHECK(check_square(e->algebra).pass);
}

TEST_CASE("bounds of the empty set and the worked L3 cut") {
  MvAlgebra l3 = MvAlgebra::chain_algebra(3);
  IndexSet empty(l3.size());
  CHECK(upper_bounds(l3, empty).count() == l3.size());
  IndexSet lu = cut_closure(l3, empty);
  CHECK(lu.count() == 1);
  CHECK(lu.test(static_cast<size_t>(l3.zero())));

  IndexSet x = set_of(l3, {{0}, {1}});
  IndexSet ux = upper_bounds(l3, x);
  CHECK(ux == set_of(l3, {{1}, {2}}));
  CHECK(is_cut(l3, x));
  MaxEmbedding emb = embed_max(l3);
  LimitCutReport rep = limit_cut_check(l3, emb, as_cut(l3, x));
  CHECK(rep.limit);
  CHECK(l3.elem(rep.sup) == MvElem{1});
  CHECK(rep.partner_limit);
  CHECK(rep.join_meets_partner);
}

TEST_CASE("bottom cut is a limit cut with supremum zero") {
  MvAlgebra l3 = MvAlgebra::chain_algebra(3);
  IndexSet bottom = set_of(l3, {{0}});
  CHECK(is_cut(l3, bottom));
  LimitCutReport rep = limit_cut_check(l3, embed_max(l3), as_cut(l3, bottom));
  CHECK(rep.limit);
  CHECK(rep.sup == l3.zero());
}

TEST_CASE("the validating cut constructor rejects non-cuts") {
  MvAlgebra l4 = MvAlgebra::chain_algebra(4);
  IndexSet gap(l4.size());
  gap.set(static_cast<size_t>(l4.index_of({2})));  // missing the bottom
  CHECK_THROWS_AS(as_cut(l4, gap), InvalidArgumentError);
  IndexSet down(l4.size());
  down.set(static_cast<size_t>(l4.index_of({0})));
  down.set(static_cast<size_t>(l4.index_of({1})));
  down.set(static_cast<size_t>(l4.index_of({2})));
  Cut c = as_cut(l4, down);
  CHECK(c.members.count() == 3);
  CHECK(limit_cut_partner(c).members.count() == 2);  // negations of {2/3, 1}
}

TEST_CASE("cut closure is idempotent on random subsets") {
  std::mt19937 rng(41);
  for (const auto* e : corpus_up_to(12)) {
    const MvAlgebra& a = e->algebra;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(a.size()) - 1);
    for (int trial = 0; trial < 50; ++trial) {
      IndexSet s(a.size());
      int k = trial % 4;
      for (int i = 0; i < k; ++i) s.set(static_cast<size_t>(pick(rng)));
      IndexSet c1 = cut_closure(a, s);
      CHECK(cut_closure(a, c1) == c1);
      CHECK(is_cut(a, c1));
      // Join of hats is invariant under taking the closure.
      MaxEmbedding emb = embed_max(a);
      FuzzySubset js = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
      for (int i : s.to_indices()) js = f_join(js, emb.hat[i]);
      FuzzySubset jc = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
      for (int i : c1.to_indices()) jc = f_join(jc, emb.hat[i]);
      CHECK(js == jc);
    }
  }
}

TEST_CASE("partner of the partner preserves the join") {
  MvAlgebra a = MvAlgebra::full_product(Signature({3, 3}));
  MaxEmbedding emb = embed_max(a);
  for (const Cut& cut : enumerate_cuts(a)) {
    LimitCutReport rep = limit_cut_check(a, emb, cut);
    if (!rep.limit) continue;
    LimitCutReport back = limit_cut_check(a, emb, rep.partner);
    REQUIRE(back.limit);
    LimitCutReport again = limit_cut_check(a, emb, back.partner);
    CHECK(a.op_join(rep.sup, again.sup) == a.op_join(rep.sup, rep.sup));
    CHECK(again.sup == rep.sup);
  }
}

TEST_CASE("every finite algebra is lcc, with a cut census") {
  for (const auto* e : corpus_up_to(20)) {
    LccReport rep = check_lcc(e->algebra);
    CHECK(rep.lcc);
    CHECK(rep.cuts >= 2);
    CHECK(rep.limit_cuts >= 1);
    CHECK(rep.limit_cuts <= rep.cuts);
  }
}

TEST_CASE("cut enumeration: chains have exactly their principal cuts plus bottom") {
  // In a chain every cut is a principal down-set (including {0}).
  for (int order = 2; order <= 7; ++order) {
    MvAlgebra c = MvAlgebra::chain_algebra(order);
    std::vector<Cut> cuts = enumerate_cuts(c);
    CHECK(cuts.size() == static_cast<size_t>(order));
  }
}

TEST_CASE("lc-completion adds nothing at finite scale") {
  for (const auto* e : corpus_up_to(12)) {
    AlgebraRoundtrip rt = lc_completion(e->algebra);
    CHECK(rt.clop.size() == e->algebra.size());
    CHECK(find_isomorphism(e->algebra, rt.clop).has_value());
  }
}

TEST_CASE("lc-completion has the finite universal extension property") {
  MvAlgebra a = MvAlgebra::full_product(Signature({2, 2}));
  MvAlgebra b = MvAlgebra::full_product(Signature({3, 2}));
  AlgebraRoundtrip ca = lc_completion(a);
  AlgebraRoundtrip cb = lc_completion(b);
  for (const MvHom& f : enumerate_homomorphisms(a, b)) {
    // Transport f along the unit isos.
    std::vector<int> ext(ca.clop.size(), -1);
    for (size_t i = 0; i < a.size(); ++i) ext[ca.iso[i]] = cb.iso[f.table[i]];
    // The completion is exactly the hat image, so the transport is total.
    CHECK(std::find(ext.begin(), ext.end(), -1) == ext.end());
    MvHom flcc{&ca.clop, &cb.clop, ext};
    CHECK(verify_hom(flcc));
    // Restriction along the embedding recovers f, and any two extensions
    // agreeing on the embedded copy are equal on the whole carrier.
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(flcc.table[ca.iso[i]] == cb.iso[f.table[i]]);
  }
}

TEST_CASE("sfc reports the quotient orders") {
  SfcReport rep = check_sfc(MvAlgebra::full_product(Signature({3, 2})));
  CHECK(rep.sfc);
  std::multiset<int> orders(rep.quotient_orders.begin(), rep.quotient_orders.end());
  CHECK(orders == std::multiset<int>{2, 3});
  for (const auto* e : corpus_up_to(16)) CHECK(check_sfc(e->algebra).sfc);
}

TEST_CASE("liminary duality chain holds leg by leg") {
  for (const auto* e : corpus_up_to(16)) {
    LiminaryDualityReport rep = check_liminary_duality(e->algebra);
    CHECK(rep.liminary);
    CHECK(rep.dual_strongly_compact);
    CHECK(rep.clop_liminary);
    CHECK(rep.lcc);
    CHECK(rep.implications_hold);
  }
}

TEST_CASE("factorization is stable under the duality roundtrip") {
  for (const auto* e : corpus_up_to(16)) {
    AlgebraRoundtrip rt = unit_iso_algebra(e->algebra);
    CHECK(chain_factorization(e->algebra) == chain_factorization(rt.clop));
  }
}

TEST_CASE("join over a set equals join over its cut closure (hat side)") {
  std::mt19937 rng(59);
  MvAlgebra a = MvAlgebra::full_product(Signature({2, 4}));
  MaxEmbedding emb = embed_max(a);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(a.size()) - 1);
  for (int trial = 0; trial < 100; ++trial) {
    IndexSet s(a.size());
    for (int i = 0; i < trial % 5; ++i) s.set(static_cast<size_t>(pick(rng)));
    IndexSet closed = cut_closure(a, s);
    FuzzySubset js = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
    for (int i : s.to_indices()) js = f_join(js, emb.hat[i]);
    FuzzySubset jc = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
    for (int i : closed.to_indices()) jc = f_join(jc, emb.hat[i]);
    CHECK(js == jc);
  }
}

TEST_CASE("interval images are exactly the hat intervals") {
  for (const auto* e : corpus_up_to(12)) {
    const MvAlgebra& a = e->algebra;
    MaxEmbedding emb = embed_max(a);
    for (size_t lo = 0; lo < a.size(); ++lo)
      for (size_t hi = 0; hi < a.size(); ++hi) {
        if (!a.leq(static_cast<int>(lo), static_cast<int>(hi))) continue;
        std::set<std::vector<int>> image, interval;
        for (size_t c = 0; c < a.size(); ++c) {
          bool in_interval = a.leq(static_cast<int>(lo), static_cast<int>(c)) &&
                             a.leq(static_cast<int>(c), static_cast<int>(hi));
          if (in_interval) image.insert(emb.hat[c].vals());
          if (emb.hat[lo].leq(emb.hat[c]) && emb.hat[c].leq(emb.hat[hi]))
            interval.insert(emb.hat[c].vals());
        }
        CHECK(image == interval);
      }
  }
}
