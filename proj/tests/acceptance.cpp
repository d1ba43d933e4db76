// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "mvstone/runner.hpp"

using namespace mvstone;
using mvstone::testing::corpus;
using mvstone::testing::corpus_up_to;
using mvstone::testing::full_products;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

// --------------------------------------------------------------------------
// 1. MV axioms and the separation quasi-equation, exhaustive on L2..L7.
// --------------------------------------------------------------------------
void axioms() {
  for (int order = 2; order <= 7; ++order) {
    Chain c(order);
    for (int a = 0; a < order; ++a) {
      ChainValue x(a, c);
      require(neg(neg(x)) == x, "double negation");
      require(oplus(x, ChainValue::zero(c)) == x, "unit");
      require(oplus(x, ChainValue::one(c)).is_one(), "absorption by one");
      for (int b = 0; b < order; ++b) {
        ChainValue y(b, c);
        require(oplus(x, y) == oplus(y, x), "commutativity");
        require(oplus(neg(oplus(neg(x), y)), y) == oplus(neg(oplus(neg(y), x)), x),
                "Lukasiewicz axiom");
        if (odot(x, y).is_zero())
          require(meet(nat_power(x, 2), nat_power(y, 2)).is_zero(),
                  "quasi-equation x*y=0 => x^2 /\\ y^2 = 0");
        for (int d = 0; d < order; ++d) {
          ChainValue z(d, c);
          require(oplus(oplus(x, y), z) == oplus(x, oplus(y, z)), "associativity");
        }
      }
    }
  }
}

// --------------------------------------------------------------------------
// 2. Algebra-side duality roundtrip on full products and the corpus.
// --------------------------------------------------------------------------
void roundtrip_algebras() {
  size_t count = 0;
  for (const MvAlgebra& a : full_products({2, 3, 4, 5}, 3)) {
    AlgebraRoundtrip rt = unit_iso_algebra(a);
    MvHom h = rt.hom();
    require(verify_hom(h) && hom_bijective(h), "full product roundtrip");
    ++count;
  }
  require(count == 84, "expected 84 full products");
  require(corpus().size() == 20, "curated corpus has 20 algebras");
  for (const auto& e : corpus()) {
    AlgebraRoundtrip rt = unit_iso_algebra(e.algebra);
    MvHom h = rt.hom();
    require(verify_hom(h) && hom_bijective(h), "corpus roundtrip: " + e.name);
  }
}

// --------------------------------------------------------------------------
// 3. Space-side duality roundtrip.
// --------------------------------------------------------------------------
void roundtrip_spaces() {
  for (const MvAlgebra& a : full_products({2, 3, 4, 5}, 3)) {
    // Clopens of the dual land on the lcm grid, where mixed products stop
    // being full products; give the ideal search the room it needs.
    SpaceRoundtrip rt = unit_iso_space(max_space(a).space, 160);
    require(rt.to_dual.is_bijective(), "space roundtrip on a full-product dual");
  }
  for (const auto& e : corpus()) {
    DualSpace d = max_space(e.algebra);
    SpaceRoundtrip rt = unit_iso_space(d.space);
    require(rt.to_dual.is_bijective(), "space roundtrip: " + e.name);
  }
  for (size_t n = 1; n <= 4; ++n) {
    UniversePtr u = make_indexed_universe(n, "x");
    SpaceRoundtrip rt = unit_iso_space(MvTopology::discrete_crisp(u, Chain(2)));
    require(rt.clop.size() == (size_t(1) << n), "discrete clopens");
    require(rt.to_dual.is_bijective(), "discrete roundtrip");
  }
}

// --------------------------------------------------------------------------
// 4. Classical restriction: Boolean algebras reproduce finite Stone duality.
// --------------------------------------------------------------------------
void classical_restriction() {
  for (int k = 1; k <= 4; ++k) {
    MvAlgebra b = MvAlgebra::full_product(Signature(std::vector<int>(k, 2)));
    DualSpace d = max_space(b);
    require(d.embedding.dual_points->size() == static_cast<size_t>(k),
            "dual has k points");
    require(d.embedding.hat_chain.order == 2, "dual is crisp");
    require(d.space == MvTopology::discrete_crisp(d.embedding.dual_points,
                                                  d.embedding.hat_chain),
            "dual is the discrete space");
    MvAlgebra clop = clopen_algebra(d.space);
    require(clop.size() == (size_t(1) << k), "Clop is the full powerset");
    AlgebraRoundtrip rt = unit_iso_algebra(b);
    require(hom_bijective(rt.hom()), "classical roundtrip");
  }
}

// --------------------------------------------------------------------------
// 5. The skeleton / Boolean-center square commutes on the corpus.
// --------------------------------------------------------------------------
void commuting_square() {
  for (const auto& e : corpus())
    require(check_square(e.algebra).pass, "square: " + e.name);
}

// --------------------------------------------------------------------------
// 6. The two Hausdorff variants agree: exhaustively over |X| = 2 on L3,
//    then on 500 seeded random spaces with |X| <= 3 and chains up to L4.
// --------------------------------------------------------------------------
void hausdorff_equivalence() {
  UniversePtr u2 = make_universe({"p", "q"});
  size_t enumerated = 0;
  for (const MvTopology& t : enumerate_topologies(u2, Chain(3))) {
    HausdorffVerdict v = check_hausdorff(t);
    require(v.variants_agree, "variant mismatch on enumerated space");
    ++enumerated;
  }
  require(enumerated >= 4, "enumeration too small");
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> npoints(1, 3), order(2, 4);
  for (int trial = 0; trial < 500; ++trial) {
    UniversePtr u = make_indexed_universe(static_cast<size_t>(npoints(rng)), "x");
    MvTopology t = random_topology(u, Chain(order(rng)), rng);
    require(check_hausdorff(t).variants_agree, "variant mismatch on random space");
  }
}

// --------------------------------------------------------------------------
// 7. Skeleton identity: crisp opens = delta image, both computed here.
// --------------------------------------------------------------------------
void skeleton_identity() {
  std::vector<MvTopology> spaces;
  for (const auto* e : corpus_up_to(30)) spaces.push_back(max_space(e->algebra).space);
  UniversePtr u = make_universe({"p", "q"});
  spaces.push_back(MvTopology::full(u, Chain(4)));
  spaces.push_back(MvTopology::indiscrete(u, Chain(3)));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial)
    spaces.push_back(random_topology(u, Chain(4), rng));
  for (const MvTopology& t : spaces) {
    std::set<std::vector<int>> crisp, delta;
    for (const auto& o : t.opens()) {
      if (o.is_crisp()) crisp.insert(o.vals());
      delta.insert(f_delta(o).vals());
    }
    require(crisp == delta, "skeleton identity");
  }
}

// --------------------------------------------------------------------------
// 8. Limit cuts: exhaustive over subsets on corpus algebras up to 20
//    elements, with the vanishing-distance condition evaluated directly.
// --------------------------------------------------------------------------
void limit_cuts() {
  for (const auto* e : corpus_up_to(20)) {
    const MvAlgebra& a = e->algebra;
    MaxEmbedding emb = embed_max(a);
    size_t n = a.size();
    require(n <= 20, "corpus size filter");
    size_t cuts_seen = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      IndexSet s(n);
      for (size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1) s.set(i);
      if (!is_cut(a, s)) continue;
      ++cuts_seen;
      // Direct evaluation of the vanishing-distance condition.
      std::vector<int> members = s.to_indices();
      std::vector<int> uppers = upper_bounds(a, s).to_indices();
      FuzzySubset direct = FuzzySubset::one(emb.dual_points, emb.hat_chain);
      for (int b : uppers)
        for (int x : members)
          direct = f_meet(direct, f_ominus(emb.hat[b], emb.hat[x]));
      LimitCutReport rep = limit_cut_check(a, emb, as_cut(a, s));
      require(rep.limit == direct.is_zero(), "limit condition agreement");
      if (rep.limit) {
        require(rep.partner_limit, "partner is a limit cut");
        require(rep.join_meets_partner, "join equals partner meet");
        require(is_cut(a, rep.partner.members), "partner is a cut");
      }
    }
    require(cuts_seen >= 2, "cut sweep degenerate");
    require(check_lcc(a).lcc, "lcc: " + e->name);
  }
}

// --------------------------------------------------------------------------
// 9. Liminary chain: each implication leg computed independently.
// --------------------------------------------------------------------------
void liminary_chain() {
  for (const auto& e : corpus()) {
    LiminaryDualityReport rep = check_liminary_duality(e.algebra);
    require(rep.liminary, "liminary: " + e.name);
    require(rep.dual_strongly_compact, "strongly compact dual: " + e.name);
    require(rep.clop_liminary, "liminary Clop: " + e.name);
    require(rep.lcc, "lcc: " + e.name);
    require(rep.implications_hold, "implication chain: " + e.name);
  }
}

// --------------------------------------------------------------------------
// 10. Ideal-sequence / relation roundtrips, exhaustive for k <= 3, n <= 4.
// --------------------------------------------------------------------------
void boole_n_roundtrips() {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n)
      for (const BooleN& bn : enumerate_boole_n(k, n)) {
        require(roundtrip_ideals(bn).pass, "ideal roundtrip");
        BRn r = relation_from_ideals(bn);
        require(validate_brn(r).pass, "relation axioms");
        require(roundtrip_relation(r).pass, "relation roundtrip");
      }
  // Worked example: 2^2, n = 3, J1 = J2 = {0, a}.
  BooleN worked{BooleanAlgebra(2), 3, {0b01, 0b01}};
  BRn r = relation_from_ideals(worked);
  std::vector<std::vector<uint32_t>> sets = ideal_sets_from_relation(r);
  require(sets[0] == std::vector<uint32_t>{0, 0b01}, "worked J1");
  require(sets[1] == std::vector<uint32_t>{0, 0b01}, "worked J2");
  require(r.contains({0b11, 0b10, 0b10}), "worked witness tuple");
  require(!r.contains({0b11, 0b01, 0b00}), "worked excluded tuple");
}

// --------------------------------------------------------------------------
// 11. Sequenced Stone duality: object roundtrips plus the four ideal/open
//     order properties.
// --------------------------------------------------------------------------
void stone_n_duality() {
  for (int k = 1; k <= 3; ++k)
    for (int n = 2; n <= 4; ++n)
      for (const BooleN& bn : enumerate_boole_n(k, n)) {
        require(roundtrip_boole_n(bn).pass, "Boole_n object roundtrip");
        require(roundtrip_stone_n(max_n(bn)).pass, "Stone_n object roundtrip");
      }
  for (int k = 1; k <= 4; ++k)
    require(verify_ideal_open_duality(BooleanAlgebra(k)).pass,
            "ideal/open order properties");
}

// --------------------------------------------------------------------------
// 12. Multisets are a complete isomorphism invariant on the corpus.
// --------------------------------------------------------------------------
void multiset_invariant() {
  const auto& all = corpus();
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      bool same = multiset_of(all[i].algebra) == multiset_of(all[j].algebra);
      bool iso = find_isomorphism(all[i].algebra, all[j].algebra).has_value();
      require(same == iso,
              "multiset invariant: " + all[i].name + " vs " + all[j].name);
    }
}

// --------------------------------------------------------------------------
// 13. Finite scale forecloses the infinite counterexamples: compactness
//     flavors coincide, and the hat-image distance meet is computed inside
//     the algebra.
// --------------------------------------------------------------------------
void out_of_scope_guards() {
  // Compact iff strongly compact on every finite space we can build.
  std::vector<MvTopology> spaces;
  for (const auto* e : corpus_up_to(30)) spaces.push_back(max_space(e->algebra).space);
  UniversePtr u = make_universe({"p", "q"});
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial)
    spaces.push_back(random_topology(u, Chain(4), rng));
  for (const MvTopology& t : spaces) {
    CompactnessVerdict v = check_compactness(t);
    require(v.compact && v.strongly_compact, "compactness flavors coincide");
  }
  // Hat-image meets match in-algebra meets over all cuts of small algebras.
  for (const auto* e : corpus_up_to(12)) {
    const MvAlgebra& a = e->algebra;
    MaxEmbedding emb = embed_max(a);
    for (const Cut& cut : enumerate_cuts(a)) {
      std::vector<int> members = cut.members.to_indices();
      std::vector<int> uppers = upper_bounds(a, cut.members).to_indices();
      FuzzySubset hat_side = FuzzySubset::one(emb.dual_points, emb.hat_chain);
      int alg_side = a.one();
      for (int b : uppers)
        for (int x : members) {
          hat_side = f_meet(hat_side, f_ominus(emb.hat[b], emb.hat[x]));
          alg_side = a.op_meet(alg_side, a.op_ominus(b, x));
        }
      require(emb.hat[alg_side] == hat_side, "hat meet equals algebra meet");
    }
    // Finite interval density degenerates to equality.
    for (size_t lo = 0; lo < a.size(); ++lo)
      for (size_t hi = 0; hi < a.size(); ++hi) {
        if (!a.leq(static_cast<int>(lo), static_cast<int>(hi))) continue;
        std::set<std::vector<int>> image, interval;
        for (size_t c = 0; c < a.size(); ++c) {
          if (a.leq(static_cast<int>(lo), static_cast<int>(c)) &&
              a.leq(static_cast<int>(c), static_cast<int>(hi)))
            image.insert(emb.hat[c].vals());
          if (emb.hat[lo].leq(emb.hat[c]) && emb.hat[c].leq(emb.hat[hi]))
            interval.insert(emb.hat[c].vals());
        }
        require(image == interval, "interval image equality");
      }
  }
}

// --------------------------------------------------------------------------
// 14. CLI determinism over the golden suite.
// --------------------------------------------------------------------------
void cli_determinism() {
  std::vector<std::filesystem::path> specs;
  for (const auto& entry :
       std::filesystem::directory_iterator(MVSTONE_GOLDEN_DIR))
    if (entry.path().extension() == ".mvs") specs.push_back(entry.path());
  std::sort(specs.begin(), specs.end());
  require(specs.size() >= 10, "golden suite too small");
  std::set<std::string> commands;
  for (const auto& spec : specs) {
    std::ifstream in(spec, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    for (const CheckStmt& c : parse_spec(text).checks) commands.insert(c.command);
    Report r1 = run_document(parse_spec(text), RunOptions{});
    Report r2 = run_document(parse_spec(text), RunOptions{});
    require(r1.to_kv() == r2.to_kv(), "kv output not reproducible");
    std::filesystem::path kv = spec;
    kv.replace_extension(".kv");
    std::ifstream gin(kv, std::ios::binary);
    std::ostringstream gss;
    gss << gin.rdbuf();
    require(r1.to_kv() == gss.str(),
            "kv output differs from golden " + kv.filename().string());
  }
  require(commands.size() == 20, "golden suite must cover every command");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"mv-axioms-exhaustive-L2-L7", axioms},
      {"duality-roundtrip-algebras", roundtrip_algebras},
      {"duality-roundtrip-spaces", roundtrip_spaces},
      {"classical-stone-restriction", classical_restriction},
      {"skeleton-center-square", commuting_square},
      {"hausdorff-variant-equivalence", hausdorff_equivalence},
      {"skeleton-identity", skeleton_identity},
      {"limit-cuts-exhaustive", limit_cuts},
      {"liminary-chain", liminary_chain},
      {"boole-n-roundtrips", boole_n_roundtrips},
      {"stone-n-duality", stone_n_duality},
      {"multiset-invariant", multiset_invariant},
      {"finite-scale-guards", out_of_scope_guards},
      {"cli-determinism", cli_determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "[" << verdict << "] " << c.name << " (" << ms << " ms)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: FAILURES PRESENT")
            << " (" << criteria.size() - failures << "/" << criteria.size() << ")\n";
  return failures == 0 ? 0 : 1;
}
