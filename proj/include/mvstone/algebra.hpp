#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mvstone/fuzzy.hpp"

namespace mvstone {

/// Small set of element indices, used for ideals, cuts and enumeration.
class IndexSet {
 public:
  explicit IndexSet(size_t capacity)
      : n_(capacity), w_((capacity + 63) / 64, 0) {}
  static IndexSet full(size_t capacity);

  size_t capacity() const { return n_; }
  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  size_t count() const;
  bool subset_of(const IndexSet& o) const;
  IndexSet& operator&=(const IndexSet& o);
  IndexSet& operator|=(const IndexSet& o);

  bool operator==(const IndexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  /// Canonical order: lexicographic on the sorted member list.
  bool operator<(const IndexSet& o) const;

  std::vector<int> to_indices() const;

 private:
  size_t n_;
  std::vector<uint64_t> w_;
};

/// One chain order per coordinate of a product of chains.
struct Signature {
  std::vector<int> orders;

  explicit Signature(std::vector<int> ords);
  size_t arity() const { return orders.size(); }
  bool operator==(const Signature& o) const { return orders == o.orders; }

  using Elem = std::vector<int>;
  bool valid(const Elem& a) const;
  Elem zero() const { return Elem(orders.size(), 0); }
  Elem one() const;
  Elem oplus(const Elem& a, const Elem& b) const;
  Elem odot(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem ominus(const Elem& a, const Elem& b) const;
  Elem join(const Elem& a, const Elem& b) const;
  Elem meet(const Elem& a, const Elem& b) const;
  Elem dist(const Elem& a, const Elem& b) const;
  bool leq(const Elem& a, const Elem& b) const;
  bool idempotent(const Elem& a) const;
  std::string str(const Elem& a) const;
};

using MvElem = Signature::Elem;

// ---------------------------------------------------------------------------
// Finite MV-algebras: an explicitly enumerated carrier inside a product of
// chains, closed under oplus and negation. Carrier is sorted; the index of
// an element is its canonical label everywhere (ideals, reports, quotients).
// ---------------------------------------------------------------------------

class MvAlgebra {
 public:
  /// Least carrier containing the generators plus 0, 1, closed under
  /// oplus and negation (fixpoint iteration).
  static MvAlgebra generate(Signature sig, const std::vector<MvElem>& generators);
  static MvAlgebra full_product(Signature sig);
  static MvAlgebra chain_algebra(int order);
  /// Wrap an explicit carrier; validates the closure invariants.
  static MvAlgebra from_carrier(Signature sig, std::vector<MvElem> carrier);

  const Signature& signature() const { return sig_; }
  size_t size() const { return elems_.size(); }
  const MvElem& elem(size_t i) const { return elems_[i]; }
  const std::vector<MvElem>& elems() const { return elems_; }
  /// Index of an element, or -1 if not in the carrier.
  int index_of(const MvElem& e) const;

  int zero() const { return zero_; }
  int one() const { return one_; }
  int op_oplus(int i, int j) const { return binop(t_oplus_, i, j, &Signature::oplus); }
  int op_odot(int i, int j) const { return binop(t_odot_, i, j, &Signature::odot); }
  int op_neg(int i) const {
    return t_neg_.empty() ? index_of(sig_.neg(elems_[i])) : t_neg_[i];
  }
  int op_ominus(int i, int j) const {
    return binop(t_ominus_, i, j, &Signature::ominus);
  }
  int op_join(int i, int j) const { return binop(t_join_, i, j, &Signature::join); }
  int op_meet(int i, int j) const { return binop(t_meet_, i, j, &Signature::meet); }
  int op_dist(int i, int j) const { return op_oplus(op_ominus(i, j), op_ominus(j, i)); }
  bool leq(int i, int j) const {
    return leq_.empty() ? sig_.leq(elems_[i], elems_[j])
                        : leq_[static_cast<size_t>(i) * elems_.size() + j] != 0;
  }

  bool is_full_product() const;
  bool operator==(const MvAlgebra& o) const {
    return sig_ == o.sig_ && elems_ == o.elems_;
  }

 private:
  MvAlgebra(Signature sig, std::vector<MvElem> elems);
  using BinSig = MvElem (Signature::*)(const MvElem&, const MvElem&) const;
  int binop(const std::vector<int>& table, int i, int j, BinSig fn) const {
    if (!table.empty()) return table[static_cast<size_t>(i) * elems_.size() + j];
    return index_of((sig_.*fn)(elems_[i], elems_[j]));
  }
  void build_tables();

  Signature sig_;
  std::vector<MvElem> elems_;
  int zero_ = -1, one_ = -1;
  // Eager operation tables for small carriers; empty entries mean the
  // carrier is not closed, which only validation paths ever observe.
  std::vector<int> t_oplus_, t_odot_, t_ominus_, t_join_, t_meet_, t_neg_;
  std::vector<uint8_t> leq_;
};

inline constexpr size_t kIdealEnumerationCap = 64;
/// Hard carrier-size guard for algebra construction.
inline constexpr size_t kCarrierCap = 4096;

// ---------------------------------------------------------------------------
// Ideals. The parent algebra must outlive the ideal.
// ---------------------------------------------------------------------------

struct Ideal {
  const MvAlgebra* parent;
  IndexSet members;

  bool contains(int i) const { return members.test(static_cast<size_t>(i)); }
  bool proper() const { return !contains(parent->one()); }
  std::vector<int> member_indices() const { return members.to_indices(); }
};

/// Proper maximal ideal with its witness table: for every a outside the
/// ideal, the least n such that (a*)^n falls inside.
struct MaximalIdeal {
  Ideal ideal;
  std::vector<std::pair<int, int>> certificate;
};

struct GeneratedIdeal {
  Ideal ideal;
  bool proper;
};

/// Least ideal containing the seed: downward plus oplus closure to fixpoint.
GeneratedIdeal generate_ideal(const MvAlgebra& a, const std::vector<int>& seed);

/// Exhaustive check of the ideal conditions (contains 0, downward closed,
/// oplus closed) against the raw definition.
bool is_ideal(const MvAlgebra& a, const IndexSet& members);

/// Least n with (a*)^n inside the ideal, or -1 when the powers stabilize
/// outside it. An ideal is maximal iff this succeeds for every non-member.
int maximality_exponent(const MvAlgebra& a, const IndexSet& ideal, int elem);

/// All proper ideals, canonically ordered. Non-full-product carriers above
/// the cap raise ResourceLimitError; full products use the coordinate-ideal
/// shortcut.
std::vector<Ideal> all_ideals(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);
std::vector<MaximalIdeal> maximal_ideals(const MvAlgebra& a,
                                         size_t cap = kIdealEnumerationCap);
std::vector<Ideal> prime_ideals(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);
bool is_prime(const MvAlgebra& a, const Ideal& ideal);

/// Sub-Boolean-algebra of idempotents.
MvAlgebra boolean_center(const MvAlgebra& a);
bool is_boolean(const MvAlgebra& a);

struct QuotientResult {
  MvAlgebra algebra;
  std::vector<int> projection;  // parent index -> quotient index
};

/// Quotient by the congruence a ~ b iff d(a,b) in I, realized inside the
/// product of the quotient chains of the maximal ideals above I.
QuotientResult quotient(const MvAlgebra& a, const Ideal& ideal,
                        size_t cap = kIdealEnumerationCap);

Ideal radical(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);
bool is_semisimple(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

struct ArchimedeanReport {
  bool pass = false;
  bool witnesses_agree = false;
  /// Per element: least n for each of the three conditions
  /// (n a Boolean | a* v na = 1 | na = (n+1)a).
  std::vector<std::array<int, 3>> witnesses;
  int witness_for(int elem) const { return witnesses[elem][0]; }
};
ArchimedeanReport is_hyper_archimedean(const MvAlgebra& a);

/// All quotients by prime ideals are finite; trivially so here, but the
/// predicate runs the prime enumeration and quotient pipeline for real.
bool is_liminary(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

// ---------------------------------------------------------------------------
// The maximal-spectrum embedding a -> a-hat.
// ---------------------------------------------------------------------------

struct MaxEmbedding {
  std::vector<MaximalIdeal> maximals;  // canonical order
  std::vector<int> quotient_orders;    // chain order of A/M per maximal
  Chain hat_chain;                     // top = lcm of (order - 1)
  UniversePtr dual_points;             // "M0", "M1", ...
  std::vector<FuzzySubset> hat;        // per element index
};

MaxEmbedding embed_max(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

/// Multiset of quotient chain orders, sorted ascending. Also certifies that
/// the spectrum embedding is onto the full product of the quotient chains.
std::vector<int> chain_factorization(const MvAlgebra& a,
                                     size_t cap = kIdealEnumerationCap);

// ---------------------------------------------------------------------------
// Homomorphisms.
// ---------------------------------------------------------------------------

struct MvHom {
  const MvAlgebra* domain;
  const MvAlgebra* codomain;
  std::vector<int> table;  // domain index -> codomain index

  int apply(int i) const { return table[i]; }
};

/// Exhaustive check: preserves 0, oplus and negation on every pair.
bool verify_hom(const MvHom& h);
bool hom_bijective(const MvHom& h);
MvHom identity_hom(const MvAlgebra& a);
MvHom compose_hom(const MvHom& g, const MvHom& h);

/// Certified isomorphism, or nothing. Fast-rejects on factorization
/// multisets, then aligns quotient chains.
std::optional<MvHom> find_isomorphism(const MvAlgebra& a, const MvAlgebra& b);

/// All homomorphisms a -> b, found by extending generator images; intended
/// for small algebras. `cap` bounds the candidate image tuples tried.
std::vector<MvHom> enumerate_homomorphisms(const MvAlgebra& a, const MvAlgebra& b,
                                           size_t cap = 1u << 20);

/// Greedy generating set, smallest-first; used by the hom search.
std::vector<int> generating_set(const MvAlgebra& a);

}  // namespace mvstone
