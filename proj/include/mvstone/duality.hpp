#pragma once

#include "mvstone/topology.hpp"

namespace mvstone {

// ---------------------------------------------------------------------------
// The Clop / Max functor pair. The dual space of a finite algebra is the
// topology generated over its maximal spectrum by the hat image, certified
// to be a Stone MV-space at construction.
// ---------------------------------------------------------------------------

struct DualSpace {
  MvAlgebra algebra;
  MaxEmbedding embedding;
  MvTopology space;
};

DualSpace max_space(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

/// Dual of h : A -> B under Max: the point map Max B -> Max A sending an
/// ideal to its preimage. Certified continuous (full and base checks) and
/// compatible with the hat tables.
PointMap dualize_hom(const MvHom& h, const DualSpace& da, const DualSpace& db);

/// Dual of a continuous map f : src -> tgt under Clop: the restriction of
/// the fuzzy preimage to clopens, as a hom Clop(tgt) -> Clop(src).
struct MapDual {
  MvAlgebra clop_src;
  MvAlgebra clop_tgt;
  std::vector<int> table;  // clop_tgt index -> clop_src index

  MvHom hom() const { return MvHom{&clop_tgt, &clop_src, table}; }
};

MapDual dualize_map(const PointMap& f, const MvTopology& src, const MvTopology& tgt);

/// A certified iso A -> Clop Max A (the hat map). Throws
/// InternalConsistencyError if anything fails to verify.
struct AlgebraRoundtrip {
  DualSpace dual;
  MvAlgebra clop;         // Clop Max A
  std::vector<int> iso;   // A index -> clop index

  MvHom hom() const { return MvHom{&dual.algebra, &clop, iso}; }
};

AlgebraRoundtrip unit_iso_algebra(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

/// A certified MV-homeomorphism t -> Max(Clop t) for a Stone MV-space t:
/// x maps to the maximal ideal of clopens vanishing at x. Verifies ideal
/// maximality via exponent certificates, bijectivity, continuity both ways,
/// and the evaluation identity.
struct SpaceRoundtrip {
  MvAlgebra clop;  // Clop t
  DualSpace dual;  // Max(Clop t)
  PointMap to_dual;
};

SpaceRoundtrip unit_iso_space(const MvTopology& t, size_t cap = kIdealEnumerationCap);

/// Both halves of the skeleton / Boolean-center commuting square.
struct SquareReport {
  bool center_equals_skeleton_clop = false;  // B(Clop Max A) = Clop(Sk(Max A))
  bool skeleton_equals_center_dual = false;  // Sk(Max A) ~ Max(B(A))
  bool pass = false;
};

SquareReport check_square(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

// ---------------------------------------------------------------------------
// Cuts and limit cuts.
// ---------------------------------------------------------------------------

IndexSet lower_bounds(const MvAlgebra& a, const IndexSet& s);
IndexSet upper_bounds(const MvAlgebra& a, const IndexSet& s);
bool is_cut(const MvAlgebra& a, const IndexSet& s);
/// lu(S); a closure operator onto cuts.
IndexSet cut_closure(const MvAlgebra& a, const IndexSet& s);

/// A subset fixed by the lu closure. The parent must outlive the cut.
struct Cut {
  const MvAlgebra* parent;
  IndexSet members;

  bool operator==(const Cut& o) const { return members == o.members; }
  bool operator<(const Cut& o) const { return members < o.members; }
};

/// Validating constructor; rejects subsets that are not lu-fixed.
Cut as_cut(const MvAlgebra& a, IndexSet members);

inline constexpr size_t kCutExhaustiveLimit = 20;

/// All cuts. Exhaustive over subsets up to the limit; principal-cut seeds
/// (closures of singletons and of the empty set) beyond it.
std::vector<Cut> enumerate_cuts(const MvAlgebra& a,
                                size_t exhaustive_limit = kCutExhaustiveLimit);

struct LimitCutReport {
  bool limit = false;          // vanishing-distance condition
  int sup = -1;                // index of the join of the cut
  Cut partner;                 // (uX)*, certified to be a cut
  bool partner_limit = false;  // partner satisfies the condition too
  bool join_meets_partner = false;  // join of hats = meet of partner-star hats
};

/// Evaluates the vanishing-distance condition in the hat image, cross-checks
/// it against the in-algebra meet, and reports the partner cut.
LimitCutReport limit_cut_check(const MvAlgebra& a, const MaxEmbedding& emb,
                               const Cut& cut);
Cut limit_cut_partner(const Cut& cut);

struct LccReport {
  bool lcc = false;
  size_t cuts = 0;
  size_t limit_cuts = 0;
};

LccReport check_lcc(const MvAlgebra& a,
                    size_t exhaustive_limit = kCutExhaustiveLimit,
                    size_t cap = kIdealEnumerationCap);

/// Limit cut completion, realized as Clop Max A; at this scale the
/// completion is certified isomorphic to the algebra itself.
AlgebraRoundtrip lc_completion(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

struct SfcReport {
  bool sfc = false;
  std::vector<int> quotient_orders;
};

/// Subdirect factor completeness: every maximal quotient is a complete
/// chain. Reports the quotient orders.
SfcReport check_sfc(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

struct LiminaryDualityReport {
  bool liminary = false;
  bool dual_strongly_compact = false;
  bool clop_liminary = false;
  bool lcc = false;
  bool implications_hold = false;
};

/// Runs the liminary / strongly-compact / lcc chain with every leg computed
/// independently.
LiminaryDualityReport check_liminary_duality(const MvAlgebra& a,
                                             size_t cap = kIdealEnumerationCap);

}  // namespace mvstone
