#include "mvstone/stone_n.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace mvstone {

std::vector<uint32_t> BooleanAlgebra::down_set(uint32_t gen) const {
  if (!valid(gen)) throw InvalidArgumentError("element off the algebra");
  std::vector<uint32_t> out;
  uint32_t s = gen;
  for (;;) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & gen;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ObjectVerdict validate_boole_n(const BooleN& bn) {
  ObjectVerdict v;
  if (bn.n < 2) {
    v.reason = "n must be >= 2";
    return v;
  }
  if (bn.gens.size() != static_cast<size_t>(bn.n - 1)) {
    v.reason = "expected n-1 ideals";
    return v;
  }
  for (uint32_t g : bn.gens)
    if (!bn.algebra.valid(g)) {
      v.reason = "ideal generator off the algebra";
      return v;
    }
  // (i) J_i = J_{n-i}, as member sets.
  for (int i = 1; i <= bn.n - 1; ++i)
    if (bn.gens[i - 1] != bn.gens[bn.n - i - 1]) {
      v.reason = "symmetry fails at index " + std::to_string(i);
      return v;
    }
  // (ii) J_h /\ J_{i-h} within J_i, checked element by element.
  for (int i = 2; i <= bn.n - 1; ++i)
    for (int h = 1; h <= i - 1; ++h)
      for (uint32_t x = 0; x <= bn.algebra.top(); ++x)
        if (bn.ideal_contains(h, x) && bn.ideal_contains(i - h, x) &&
            !bn.ideal_contains(i, x)) {
          v.reason = "intersection condition fails at (i,h) = (" +
                     std::to_string(i) + "," + std::to_string(h) + ")";
          return v;
        }
  v.pass = true;
  return v;
}

bool BRn::contains(const std::vector<uint32_t>& t) const {
  return std::binary_search(tuples.begin(), tuples.end(), t);
}

ObjectVerdict validate_brn(const BRn& r) {
  ObjectVerdict v;
  if (r.n < 2) {
    v.reason = "n must be >= 2";
    return v;
  }
  for (const auto& t : r.tuples) {
    if (t.size() != static_cast<size_t>(r.n)) {
      v.reason = "tuple arity mismatch";
      return v;
    }
    for (size_t i = 1; i < t.size(); ++i)
      if ((t[i] & ~t[i - 1]) != 0) {
        v.reason = "monotonicity fails";
        return v;
      }
    std::vector<uint32_t> rev(t.size());
    for (size_t i = 0; i < t.size(); ++i)
      rev[i] = r.algebra.top() & ~t[t.size() - 1 - i];
    if (!r.contains(rev)) {
      v.reason = "star-reversal fails";
      return v;
    }
  }
  for (uint32_t a = 0; a <= r.algebra.top(); ++a) {
    std::vector<uint32_t> diag(static_cast<size_t>(r.n), a);
    if (!r.contains(diag)) {
      v.reason = "diagonal tuple missing";
      return v;
    }
  }
  for (const auto& a : r.tuples)
    for (const auto& b : r.tuples) {
      std::vector<uint32_t> c(static_cast<size_t>(r.n));
      for (int i = 0; i < r.n; ++i) {
        uint32_t acc = a[i] | b[i];
        for (int h = 0; h + 1 <= i; ++h) {
          int k = i - 1 - h;
          acc |= a[h] & b[k];
        }
        c[static_cast<size_t>(i)] = acc;
      }
      // The composite must stay monotone before membership even makes sense.
      for (size_t i = 1; i < c.size(); ++i)
        if ((c[i] & ~c[i - 1]) != 0) {
          v.reason = "join-closure composite is not monotone";
          return v;
        }
      if (!r.contains(c)) {
        v.reason = "join-closure fails";
        return v;
      }
    }
  v.pass = true;
  return v;
}

namespace {

void descend_tuples(const BooleN& bn, std::vector<uint32_t>& cur,
                    std::vector<std::vector<uint32_t>>& out) {
  size_t depth = cur.size();
  if (depth == static_cast<size_t>(bn.n)) {
    out.push_back(cur);
    return;
  }
  uint32_t prev = depth == 0 ? bn.algebra.top() : cur.back();
  // Submasks of prev, including prev and 0, filtered by the step condition.
  uint32_t s = prev;
  for (;;) {
    if (depth == 0 || bn.ideal_contains(static_cast<int>(depth), prev & ~s)) {
      cur.push_back(s);
      descend_tuples(bn, cur, out);
      cur.pop_back();
    }
    if (s == 0) break;
    s = (s - 1) & prev;
  }
}

}  // namespace

BRn relation_from_ideals(const BooleN& bn) {
  ObjectVerdict v = validate_boole_n(bn);
  if (!v.pass) throw InvalidArgumentError("relation_from_ideals: " + v.reason);
  std::vector<std::vector<uint32_t>> tuples;
  std::vector<uint32_t> cur;
  descend_tuples(bn, cur, tuples);
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  BRn r{bn.algebra, bn.n, std::move(tuples)};
  ObjectVerdict rv = validate_brn(r);
  if (!rv.pass)
    throw InternalConsistencyError("generated relation fails axiom: " + rv.reason);
  return r;
}

std::vector<std::vector<uint32_t>> ideal_sets_from_relation(const BRn& r) {
  ObjectVerdict v = validate_brn(r);
  if (!v.pass) throw InvalidArgumentError("ideal_sets_from_relation: " + v.reason);
  std::vector<std::vector<uint32_t>> out;
  for (int i = 1; i <= r.n - 1; ++i) {
    std::set<uint32_t> members;
    for (const auto& t : r.tuples)
      members.insert(t[static_cast<size_t>(i - 1)] & ~t[static_cast<size_t>(i)] &
                     r.algebra.top());
    out.emplace_back(members.begin(), members.end());
  }
  return out;
}

BooleN boole_n_from_relation(const BRn& r) {
  std::vector<std::vector<uint32_t>> sets = ideal_sets_from_relation(r);
  std::vector<uint32_t> gens;
  for (const auto& members : sets) {
    uint32_t gen = 0;
    for (uint32_t m : members) gen |= m;
    if (members != r.algebra.down_set(gen))
      throw InternalConsistencyError("extracted ideal is not a principal down-set");
    gens.push_back(gen);
  }
  BooleN bn{r.algebra, r.n, std::move(gens)};
  ObjectVerdict v = validate_boole_n(bn);
  if (!v.pass)
    throw InternalConsistencyError("extracted ideal sequence invalid: " + v.reason);
  return bn;
}

RoundtripVerdict roundtrip_ideals(const BooleN& bn) {
  RoundtripVerdict out;
  BRn r = relation_from_ideals(bn);
  std::vector<std::vector<uint32_t>> sets = ideal_sets_from_relation(r);
  for (int i = 1; i <= bn.n - 1; ++i) {
    if (sets[static_cast<size_t>(i - 1)] != bn.algebra.down_set(bn.gens[i - 1])) {
      out.detail = "J_" + std::to_string(i) + " not recovered";
      return out;
    }
  }
  out.pass = true;
  return out;
}

RoundtripVerdict roundtrip_relation(const BRn& r) {
  RoundtripVerdict out;
  BooleN bn = boole_n_from_relation(r);
  BRn back = relation_from_ideals(bn);
  if (back.tuples != r.tuples) {
    out.detail = "relation not recovered";
    return out;
  }
  out.pass = true;
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

bool verify_bool_hom(const BoolHom& f) {
  if (f.table.size() != f.domain.size()) return false;
  for (uint32_t v : f.table)
    if (!f.codomain.valid(v)) return false;
  if (f.table[0] != 0) return false;
  for (uint32_t x = 0; x <= f.domain.top(); ++x) {
    if (f.table[f.domain.top() & ~x] != (f.codomain.top() & ~f.table[x]))
      return false;
    for (uint32_t y = x; y <= f.domain.top(); ++y)
      if (f.table[x | y] != (f.table[x] | f.table[y])) return false;
  }
  return true;
}

BoolHom hom_from_atom_map(const BooleanAlgebra& dom, const BooleanAlgebra& cod,
                          const std::vector<int>& atom_map) {
  if (atom_map.size() != static_cast<size_t>(cod.atoms))
    throw InvalidArgumentError("atom map must assign every codomain atom");
  std::vector<uint32_t> table(dom.size(), 0);
  for (uint32_t x = 0; x <= dom.top(); ++x) {
    uint32_t img = 0;
    for (int q = 0; q < cod.atoms; ++q) {
      int p = atom_map[static_cast<size_t>(q)];
      if (p < 0 || p >= dom.atoms)
        throw InvalidArgumentError("atom map out of range");
      if ((x >> p) & 1) img |= uint32_t(1) << q;
    }
    table[x] = img;
  }
  BoolHom f{dom, cod, std::move(table)};
  if (!verify_bool_hom(f))
    throw InternalConsistencyError("atom map produced a non-homomorphism");
  return f;
}

bool is_boole_n_morphism(const BoolHom& f, const BooleN& from, const BooleN& to,
                         std::string* witness) {
  if (!(f.domain == from.algebra) || !(f.codomain == to.algebra) ||
      from.n != to.n || !verify_bool_hom(f)) {
    if (witness) *witness = "not a homomorphism between the underlying algebras";
    return false;
  }
  for (int i = 1; i <= from.n - 1; ++i)
    for (uint32_t x : from.algebra.down_set(from.gens[i - 1]))
      if (!to.ideal_contains(i, f.apply(x))) {
        if (witness)
          *witness = "f does not map J_" + std::to_string(i) + " into J'_" +
                     std::to_string(i) + " (element " + std::to_string(x) + ")";
        return false;
      }
  return true;
}

bool is_brn_morphism(const BoolHom& f, const BRn& from, const BRn& to,
                     std::string* witness) {
  if (!(f.domain == from.algebra) || !(f.codomain == to.algebra) ||
      from.n != to.n || !verify_bool_hom(f)) {
    if (witness) *witness = "not a homomorphism between the underlying algebras";
    return false;
  }
  for (const auto& t : from.tuples) {
    std::vector<uint32_t> img(t.size());
    for (size_t i = 0; i < t.size(); ++i) img[i] = f.apply(t[i]);
    if (!to.contains(img)) {
      if (witness) *witness = "image tuple missing from the target relation";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Stone_n
// ---------------------------------------------------------------------------

ObjectVerdict validate_stone_n(const StoneN& sn) {
  ObjectVerdict v;
  if (sn.n < 2) {
    v.reason = "n must be >= 2";
    return v;
  }
  if (!sn.points || sn.points->size() == 0) {
    v.reason = "empty point set";
    return v;
  }
  if (sn.points->size() > 31) {
    v.reason = "too many points for mask representation";
    return v;
  }
  if (sn.opens.size() != static_cast<size_t>(sn.n - 1)) {
    v.reason = "expected n-1 opens";
    return v;
  }
  uint32_t full = (uint32_t(1) << sn.points->size()) - 1;
  for (uint32_t o : sn.opens)
    if (o & ~full) {
      v.reason = "open mask off the point set";
      return v;
    }
  for (int i = 1; i <= sn.n - 1; ++i)
    if (sn.opens[i - 1] != sn.opens[sn.n - i - 1]) {
      v.reason = "symmetry fails at index " + std::to_string(i);
      return v;
    }
  for (int i = 2; i <= sn.n - 1; ++i)
    for (int h = 1; h <= i - 1; ++h)
      if (sn.opens[h - 1] & sn.opens[i - h - 1] & ~sn.opens[i - 1]) {
        v.reason = "intersection condition fails at (i,h) = (" + std::to_string(i) +
                   "," + std::to_string(h) + ")";
        return v;
      }
  v.pass = true;
  return v;
}

bool is_stone_n_morphism(const PointMap& g, const StoneN& from, const StoneN& to,
                         std::string* witness) {
  if (!same_universe(g.source(), from.points) ||
      !same_universe(g.target(), to.points) || from.n != to.n) {
    if (witness) *witness = "map does not connect the two point sets";
    return false;
  }
  for (int i = 1; i <= from.n - 1; ++i) {
    uint32_t pre = 0;
    for (size_t x = 0; x < from.points->size(); ++x)
      if ((to.opens[i - 1] >> g.apply(x)) & 1) pre |= uint32_t(1) << x;
    if (pre & ~from.opens[i - 1]) {
      if (witness)
        *witness = "preimage of o'_" + std::to_string(i) + " escapes o_" +
                   std::to_string(i);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Classical duality leg
// ---------------------------------------------------------------------------

BooleDual boolean_dual(const BooleanAlgebra& b) {
  Signature sig(std::vector<int>(static_cast<size_t>(b.atoms), 2));
  MvAlgebra mv = MvAlgebra::full_product(sig);
  DualSpace dual = max_space(mv);
  std::vector<int> elem_index(b.size());
  for (uint32_t x = 0; x <= b.top(); ++x) {
    MvElem e(static_cast<size_t>(b.atoms));
    for (int i = 0; i < b.atoms; ++i) e[static_cast<size_t>(i)] = (x >> i) & 1;
    elem_index[x] = mv.index_of(e);
    if (elem_index[x] < 0)
      throw InternalConsistencyError("powerset element missing from the product");
  }
  std::vector<uint32_t> atom_of_point(dual.embedding.maximals.size(), 0);
  for (size_t p = 0; p < dual.embedding.maximals.size(); ++p) {
    int found = -1;
    for (int t = 0; t < b.atoms; ++t) {
      int idx = elem_index[uint32_t(1) << t];
      if (!dual.embedding.maximals[p].ideal.members.test(static_cast<size_t>(idx))) {
        if (found >= 0)
          throw InternalConsistencyError("dual point excludes two atoms");
        found = t;
      }
    }
    if (found < 0)
      throw InternalConsistencyError("dual point excludes no atom");
    atom_of_point[p] = uint32_t(1) << found;
  }
  return BooleDual{std::move(mv), std::move(dual), std::move(elem_index),
                   std::move(atom_of_point)};
}

uint32_t ideal_to_open(const BooleDual& bd, uint32_t ideal_gen) {
  const MaxEmbedding& emb = bd.dual.embedding;
  FuzzySubset join = FuzzySubset::zero(emb.dual_points, emb.hat_chain);
  BooleanAlgebra b(static_cast<int>(std::countr_zero(bd.elem_index.size())));
  for (uint32_t m : b.down_set(ideal_gen))
    join = f_join(join, emb.hat[bd.elem_index[m]]);
  uint32_t mask = 0;
  for (size_t p = 0; p < emb.dual_points->size(); ++p) {
    int v = join.at(p);
    if (v != 0 && v != emb.hat_chain.top())
      throw InternalConsistencyError("ideal join is not crisp");
    if (v != 0) mask |= uint32_t(1) << p;
  }
  return mask;
}

uint32_t open_to_ideal(const BooleDual& bd, uint32_t open_mask) {
  const MaxEmbedding& emb = bd.dual.embedding;
  std::vector<uint32_t> members;
  for (uint32_t x = 0; x < bd.elem_index.size(); ++x) {
    const FuzzySubset& hat = emb.hat[bd.elem_index[x]];
    bool below = true;
    for (size_t p = 0; p < emb.dual_points->size() && below; ++p)
      if (hat.at(p) != 0 && !((open_mask >> p) & 1)) below = false;
    if (below) members.push_back(x);
  }
  uint32_t gen = 0;
  for (uint32_t m : members) gen |= m;
  BooleanAlgebra b(static_cast<int>(std::countr_zero(bd.elem_index.size())));
  if (members != b.down_set(gen))
    throw InternalConsistencyError("clopens below the open are not a principal ideal");
  return gen;
}

ObjectVerdict verify_ideal_open_duality(const BooleanAlgebra& b) {
  ObjectVerdict v;
  BooleDual bd = boolean_dual(b);
  uint32_t point_full = (uint32_t(1) << bd.atom_of_point.size()) - 1;
  for (uint32_t g = 0; g <= b.top(); ++g) {
    if (open_to_ideal(bd, ideal_to_open(bd, g)) != g) {
      v.reason = "I_{o_I} != I at generator " + std::to_string(g);
      return v;
    }
    for (uint32_t g2 = 0; g2 <= b.top(); ++g2)
      if ((g & ~g2) == 0 &&
          (ideal_to_open(bd, g) & ~ideal_to_open(bd, g2)) != 0) {
        v.reason = "ideal_to_open is not monotone";
        return v;
      }
  }
  for (uint32_t o = 0; o <= point_full; ++o) {
    if (ideal_to_open(bd, open_to_ideal(bd, o)) != o) {
      v.reason = "o_{I_o} != o at open " + std::to_string(o);
      return v;
    }
    for (uint32_t o2 = 0; o2 <= point_full; ++o2)
      if ((o & ~o2) == 0 &&
          (open_to_ideal(bd, o) & ~open_to_ideal(bd, o2)) != 0) {
        v.reason = "open_to_ideal is not monotone";
        return v;
      }
  }
  v.pass = true;
  return v;
}

StoneN max_n(const BooleN& bn) {
  ObjectVerdict v = validate_boole_n(bn);
  if (!v.pass) throw InvalidArgumentError("max_n: " + v.reason);
  BooleDual bd = boolean_dual(bn.algebra);
  std::vector<uint32_t> opens;
  for (uint32_t g : bn.gens) opens.push_back(ideal_to_open(bd, g));
  StoneN sn{bd.dual.embedding.dual_points, bn.n, std::move(opens)};
  ObjectVerdict sv = validate_stone_n(sn);
  if (!sv.pass)
    throw InternalConsistencyError("dualized object invalid: " + sv.reason);
  return sn;
}

BooleN clop_n(const StoneN& sn) {
  ObjectVerdict v = validate_stone_n(sn);
  if (!v.pass) throw InvalidArgumentError("clop_n: " + v.reason);
  // The clopen algebra of a finite discrete space is the full powerset on
  // its points; run it through the engine to keep the leg honest.
  MvTopology discrete = MvTopology::discrete_crisp(sn.points, Chain(2));
  MvAlgebra clop = clopen_algebra(discrete);
  if (clop.size() != (size_t(1) << sn.points->size()))
    throw InternalConsistencyError("discrete clopen algebra is not the powerset");
  BooleanAlgebra b(static_cast<int>(sn.points->size()));
  BooleDual bd = boolean_dual(b);
  // Transport each open along the canonical point identification, then take
  // the ideal of clopens below it.
  std::vector<uint32_t> gens;
  for (uint32_t o : sn.opens) {
    uint32_t transported = 0;
    for (size_t p = 0; p < bd.atom_of_point.size(); ++p) {
      uint32_t atom = bd.atom_of_point[p];
      int atom_pos = std::countr_zero(atom);
      if ((o >> atom_pos) & 1) transported |= uint32_t(1) << p;
    }
    gens.push_back(open_to_ideal(bd, transported));
  }
  BooleN bn{b, sn.n, std::move(gens)};
  ObjectVerdict bv = validate_boole_n(bn);
  if (!bv.pass)
    throw InternalConsistencyError("dualized object invalid: " + bv.reason);
  return bn;
}

RoundtripVerdict roundtrip_boole_n(const BooleN& bn) {
  RoundtripVerdict out;
  StoneN sn = max_n(bn);
  BooleN back = clop_n(sn);
  // The certified iso: atom p of `back` corresponds to dual point p, whose
  // atom in bn.algebra is atom_of_point[p].
  BooleDual bd = boolean_dual(bn.algebra);
  std::vector<int> atom_map(bd.atom_of_point.size());
  for (size_t p = 0; p < bd.atom_of_point.size(); ++p)
    atom_map[p] = std::countr_zero(bd.atom_of_point[p]);
  BoolHom iso = hom_from_atom_map(bn.algebra, back.algebra, atom_map);
  // Bijective by construction (atom_of_point is a bijection); verify.
  std::vector<bool> hit(iso.codomain.size(), false);
  for (uint32_t x = 0; x <= iso.domain.top(); ++x) {
    if (hit[iso.apply(x)]) {
      out.detail = "transport map is not injective";
      return out;
    }
    hit[iso.apply(x)] = true;
  }
  if (!is_boole_n_morphism(iso, bn, back, &out.detail)) return out;
  // And the inverse direction, so the ideals correspond exactly.
  std::vector<int> inverse_map(static_cast<size_t>(bn.algebra.atoms), -1);
  for (size_t p = 0; p < atom_map.size(); ++p)
    inverse_map[static_cast<size_t>(atom_map[p])] = static_cast<int>(p);
  BoolHom inv = hom_from_atom_map(back.algebra, bn.algebra, inverse_map);
  if (!is_boole_n_morphism(inv, back, bn, &out.detail)) return out;
  out.pass = true;
  return out;
}

RoundtripVerdict roundtrip_stone_n(const StoneN& sn) {
  RoundtripVerdict out;
  BooleN bn = clop_n(sn);
  StoneN back = max_n(bn);
  if (sn.points->size() != back.points->size()) {
    out.detail = "point counts differ";
    return out;
  }
  // Dual points of the discrete clopen algebra correspond to original
  // points through atom positions.
  BooleDual bd = boolean_dual(bn.algebra);
  std::vector<int> fwd(sn.points->size(), -1);
  for (size_t p = 0; p < bd.atom_of_point.size(); ++p) {
    int original = std::countr_zero(bd.atom_of_point[p]);
    fwd[static_cast<size_t>(original)] = static_cast<int>(p);
  }
  PointMap g(sn.points, back.points, fwd);
  if (!g.is_bijective()) {
    out.detail = "point transport is not bijective";
    return out;
  }
  if (!is_stone_n_morphism(g, sn, back, &out.detail)) return out;
  if (!is_stone_n_morphism(g.inverse(), back, sn, &out.detail)) return out;
  out.pass = true;
  return out;
}

std::vector<BooleN> enumerate_boole_n(int atoms, int n) {
  BooleanAlgebra b(atoms);
  std::vector<BooleN> out;
  size_t total = 1;
  for (int i = 0; i < n - 1; ++i) {
    total *= b.size();
    if (total > (size_t(1) << 24))
      throw ResourceLimitError("Boole_n enumeration too large");
  }
  std::vector<uint32_t> gens(static_cast<size_t>(n - 1), 0);
  for (size_t tick = 0; tick < total; ++tick) {
    BooleN bn{b, n, gens};
    if (validate_boole_n(bn).pass) out.push_back(bn);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (++gens[i] <= b.top()) break;
      gens[i] = 0;
    }
  }
  return out;
}

std::optional<StoneN> stone_n_profile(const MvAlgebra& a, int n, size_t cap) {
  if (n < 2) throw InvalidArgumentError("profile requires n >= 2");
  MaxEmbedding emb = embed_max(a, cap);
  if (emb.dual_points->size() > 31) return std::nullopt;
  // The category index n is the grid denominator: every quotient value
  // chain {i/(k-1)} must sit inside {i/n}.
  for (int k : emb.quotient_orders)
    if (n % (k - 1) != 0) return std::nullopt;
  // o_i: dual points whose value chain attains i/n.
  std::vector<uint32_t> opens;
  for (int i = 1; i <= n - 1; ++i) {
    uint32_t mask = 0;
    for (size_t p = 0; p < emb.quotient_orders.size(); ++p) {
      int step = n / (emb.quotient_orders[p] - 1);
      if (i % step == 0) mask |= uint32_t(1) << p;
    }
    opens.push_back(mask);
  }
  StoneN sn{emb.dual_points, n, std::move(opens)};
  ObjectVerdict v = validate_stone_n(sn);
  if (!v.pass)
    throw InternalConsistencyError("level-set profile invalid: " + v.reason);
  return sn;
}

}  // namespace mvstone
