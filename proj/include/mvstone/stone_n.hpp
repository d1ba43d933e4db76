#pragma once

#include "mvstone/duality.hpp"

namespace mvstone {

// ---------------------------------------------------------------------------
// Finite Boolean algebras as powersets of an atom set; elements are atom
// bitmasks. Every ideal is a principal down-set.
// ---------------------------------------------------------------------------

struct BooleanAlgebra {
  int atoms;

  explicit BooleanAlgebra(int k) : atoms(k) {
    if (k < 1 || k > 20) throw InvalidArgumentError("atom count out of range");
  }
  size_t size() const { return size_t(1) << atoms; }
  uint32_t top() const { return static_cast<uint32_t>(size() - 1); }
  bool valid(uint32_t x) const { return (x & ~top()) == 0; }
  /// Members of the principal ideal generated by `gen`, ascending.
  std::vector<uint32_t> down_set(uint32_t gen) const;
  bool operator==(const BooleanAlgebra& o) const { return atoms == o.atoms; }
};

/// Boolean algebra with a symmetric, meet-compatible ideal sequence
/// J_1 ... J_{n-1}, each stored by its principal generator.
struct BooleN {
  BooleanAlgebra algebra;
  int n;
  std::vector<uint32_t> gens;  // gens[i-1] generates J_i

  bool ideal_contains(int i, uint32_t x) const {  // 1-based i
    return (x & ~gens[i - 1]) == 0;
  }
};

struct ObjectVerdict {
  bool pass = false;
  std::string reason;
};

/// Set-level check of the two ideal-sequence conditions.
ObjectVerdict validate_boole_n(const BooleN& bn);

/// Boolean algebra with an n-ary relation of weakly decreasing tuples.
struct BRn {
  BooleanAlgebra algebra;
  int n;
  std::vector<std::vector<uint32_t>> tuples;  // sorted, unique

  bool contains(const std::vector<uint32_t>& t) const;
};

/// The four relation axioms (monotone, star-reversal, diagonal,
/// join-closure), each checked exhaustively. Reports the first failure.
ObjectVerdict validate_brn(const BRn& r);

/// All weakly decreasing n-tuples with stepwise differences in the ideals.
BRn relation_from_ideals(const BooleN& bn);

/// Raw ideal member sets from the stepwise differences of relation tuples.
std::vector<std::vector<uint32_t>> ideal_sets_from_relation(const BRn& r);

/// Wraps ideal extraction, verifying each set is a principal ideal and the
/// sequence satisfies the ideal-sequence conditions.
BooleN boole_n_from_relation(const BRn& r);

struct RoundtripVerdict {
  bool pass = false;
  std::string detail;
};

/// J_i(R_J) = J_i exactly, per index.
RoundtripVerdict roundtrip_ideals(const BooleN& bn);
/// R = R_{J(R)} exactly.
RoundtripVerdict roundtrip_relation(const BRn& r);

// ---------------------------------------------------------------------------
// Morphisms, as full element tables.
// ---------------------------------------------------------------------------

struct BoolHom {
  BooleanAlgebra domain;
  BooleanAlgebra codomain;
  std::vector<uint32_t> table;  // indexed by domain element

  uint32_t apply(uint32_t x) const { return table[x]; }
};

bool verify_bool_hom(const BoolHom& f);
/// The hom dual to a point/atom assignment: codomain atom -> domain atom.
BoolHom hom_from_atom_map(const BooleanAlgebra& dom, const BooleanAlgebra& cod,
                          const std::vector<int>& atom_map);

bool is_boole_n_morphism(const BoolHom& f, const BooleN& from, const BooleN& to,
                         std::string* witness = nullptr);
bool is_brn_morphism(const BoolHom& f, const BRn& from, const BRn& to,
                     std::string* witness = nullptr);

// ---------------------------------------------------------------------------
// Stone_n objects: a finite (discrete) Stone space with a symmetric,
// intersection-compatible sequence of opens, stored as point masks.
// ---------------------------------------------------------------------------

struct StoneN {
  UniversePtr points;
  int n;
  std::vector<uint32_t> opens;  // opens[i-1] is o_i, a point mask
};

ObjectVerdict validate_stone_n(const StoneN& sn);

/// g must be a function between the point sets; the side condition is
/// g^{-1}[o'_i] within o_i for every i.
bool is_stone_n_morphism(const PointMap& g, const StoneN& from, const StoneN& to,
                         std::string* witness = nullptr);

// ---------------------------------------------------------------------------
// The classical finite Stone duality leg, reusing the MV duality engine on
// the crisp special case.
// ---------------------------------------------------------------------------

struct BooleDual {
  MvAlgebra mv;                        // the powerset as a product of 2-chains
  DualSpace dual;                      // its Stone MV-space (crisp)
  std::vector<int> elem_index;         // bitmask -> mv carrier index
  std::vector<uint32_t> atom_of_point; // dual point -> atom bitmask
};

BooleDual boolean_dual(const BooleanAlgebra& b);

/// Open of the dual space corresponding to an ideal: the join of the hat
/// tables of its members, returned as a point mask.
uint32_t ideal_to_open(const BooleDual& bd, uint32_t ideal_gen);
/// Ideal of clopens below an open; certified principal, returns the generator.
uint32_t open_to_ideal(const BooleDual& bd, uint32_t open_mask);

/// The four order properties of the ideal/open correspondence, checked for
/// every ideal and every open.
ObjectVerdict verify_ideal_open_duality(const BooleanAlgebra& b);

StoneN max_n(const BooleN& bn);
BooleN clop_n(const StoneN& sn);

/// Composite roundtrips with certified isomorphisms (atom/point bijections
/// transported along the duality).
RoundtripVerdict roundtrip_boole_n(const BooleN& bn);
RoundtripVerdict roundtrip_stone_n(const StoneN& sn);

/// All ideal sequences over 2^k satisfying the object conditions.
std::vector<BooleN> enumerate_boole_n(int atoms, int n);

/// Level-set profile of a finite MV-algebra whose quotient chains divide
/// L_n: the dual points where each grid value is attained. Nothing is
/// claimed beyond the object conditions, which are verified.
std::optional<StoneN> stone_n_profile(const MvAlgebra& a, int n,
                                      size_t cap = kIdealEnumerationCap);

}  // namespace mvstone
