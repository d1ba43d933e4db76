#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mvstone/algebra.hpp"

namespace mvstone {

// ---------------------------------------------------------------------------
// Finite MV-topological spaces: a family of fuzzy subsets over one universe
// and one chain. Opens are kept sorted in canonical (value-table) order.
// Arbitrary joins reduce to binary-join closure plus the empty join 0,
// which is complete because the family is finite.
// ---------------------------------------------------------------------------

class MvTopology {
 public:
  MvTopology(UniversePtr uni, Chain chain, std::vector<FuzzySubset> opens);

  static MvTopology indiscrete(UniversePtr uni, Chain chain);
  /// All chain-valued tables; order^|X| must stay under `cap`.
  static MvTopology full(UniversePtr uni, Chain chain, size_t cap = 1u << 20);
  /// All crisp tables.
  static MvTopology discrete_crisp(UniversePtr uni, Chain chain);

  const UniversePtr& universe() const { return uni_; }
  Chain chain() const { return chain_; }
  const std::vector<FuzzySubset>& opens() const { return opens_; }
  size_t size() const { return opens_.size(); }

  bool contains(const FuzzySubset& f) const;
  /// Membership up to rational equality; tolerates a different chain grid.
  bool contains_rational(const FuzzySubset& f) const;

  bool operator==(const MvTopology& o) const;

 private:
  UniversePtr uni_;
  Chain chain_;
  std::vector<FuzzySubset> opens_;
};

struct TopologyVerdict {
  bool pass = false;
  std::string clause;  // violated clause on failure: "(i)".."(v)"
  std::vector<FuzzySubset> offenders;
};

/// Def-level check of the five axioms; clause (ii) is binary-join closure.
TopologyVerdict check_mv_topology(const MvTopology& t);

/// The closed family {o* : o in Omega}.
std::vector<FuzzySubset> closed_sets(const MvTopology& t);
std::vector<FuzzySubset> clopen_tables(const MvTopology& t);
/// Clopens packaged as an algebra over the uniform per-point signature.
MvAlgebra clopen_algebra(const MvTopology& t);
/// Table view of a clopen-algebra element.
FuzzySubset subset_from_elem(const UniversePtr& uni, Chain chain, const MvElem& e);

/// Covering closed under oplus, odot and meet generates a topology by
/// binary-join closure. Throws InvalidArgumentError with a witness when the
/// base conditions fail.
MvTopology generate_from_base(UniversePtr uni, Chain chain,
                              const std::vector<FuzzySubset>& base);

/// Crisp opens; certified equal to the Baaz-delta image of Omega.
MvTopology skeleton(const MvTopology& t);

MvTopology subspace(const MvTopology& t, const std::vector<int>& point_indices);

bool is_covering(UniversePtr uni, Chain chain, const std::vector<FuzzySubset>& family);
using WeightedFamily = std::vector<std::pair<FuzzySubset, int>>;
bool is_additive_covering(UniversePtr uni, Chain chain, const WeightedFamily& family);
/// A finite multiset from the family whose truncated sum is 1. Requires the
/// family to be a covering; multiplicities are capped at chain.top().
std::optional<WeightedFamily> extract_additive_subcover(
    UniversePtr uni, Chain chain, const std::vector<FuzzySubset>& family,
    size_t exhaustive_bound = 1u << 16);

struct CompactnessVerdict {
  bool compact = false;
  bool strongly_compact = false;
  size_t minimal_coverings = 0;  // how many were certified
};

/// Certifies compactness on every inclusion-minimal open covering. On
/// finite spaces both flavors hold; the value is the per-covering
/// certificate sweep, not suspense about the verdict.
CompactnessVerdict check_compactness(const MvTopology& t);

struct HausdorffVerdict {
  struct PairWitness {
    int x = -1, y = -1;    // point indices
    int ox = -1, oy = -1;  // open indices (meet variant), -1 when unseparated
    int px = -1, py = -1;  // open indices (odot variant)
    bool separated = false;
    bool separated_odot = false;
  };
  bool separated = false;
  bool separated_odot = false;
  bool variants_agree = false;
  std::vector<PairWitness> pairs;
};

HausdorffVerdict check_hausdorff(const MvTopology& t);

bool is_zero_dimensional(const MvTopology& t);

struct StoneVerdict {
  bool compact = false;
  bool strongly_compact = false;
  bool hausdorff = false;
  bool zero_dimensional = false;
  bool stone = false;
  bool crisp_singletons_closed = false;  // checked when hausdorff
};

StoneVerdict check_stone(const MvTopology& t);

struct ContinuityVerdict {
  bool continuous = false;
  std::optional<FuzzySubset> offender;  // open whose preimage is not open
};

ContinuityVerdict check_continuous(const PointMap& f, const MvTopology& src,
                                   const MvTopology& tgt);
ContinuityVerdict check_continuous_via_base(const PointMap& f, const MvTopology& src,
                                            const std::vector<FuzzySubset>& base);
bool is_open_map(const PointMap& f, const MvTopology& src, const MvTopology& tgt);
bool is_closed_map(const PointMap& f, const MvTopology& src, const MvTopology& tgt);

// ---------------------------------------------------------------------------
// Metric-ball topologies.
// ---------------------------------------------------------------------------

/// A single-point fuzzy subset with a positive membership value.
struct FuzzyPoint {
  int support;
  ChainValue value;

  FuzzyPoint(int support_index, ChainValue v) : support(support_index), value(v) {
    if (v.is_zero()) throw InvalidArgumentError("fuzzy points carry a positive value");
  }
  FuzzySubset table(const UniversePtr& uni) const;
};

/// Every fuzzy point of the space, in canonical (point, value) order.
std::vector<FuzzyPoint> all_fuzzy_points(const UniversePtr& uni, Chain chain);

struct MetricTable {
  UniversePtr uni;
  std::vector<Rat> d;  // row-major |X| x |X|

  const Rat& at(size_t i, size_t j) const { return d[i * uni->size() + j]; }
};

/// Throws InvalidArgumentError if the table fails the metric axioms.
void validate_metric(const MetricTable& m);

/// Membership rule: the point's value inside the open radius, 0 at or
/// beyond it.
FuzzySubset open_ball(const MetricTable& metric, Chain chain, const FuzzyPoint& center,
                      const Rat& radius);

struct MetricBallResult {
  std::vector<FuzzySubset> balls;
  /// Balls closed under oplus, odot, meet; base of `closed_variant`.
  std::vector<FuzzySubset> base;
  MvTopology closed_variant;
  /// Joins of raw balls only, as in the motivating construction.
  MvTopology literal_variant;
  bool literal_is_topology = false;
};

MetricBallResult metric_ball_base(const MetricTable& metric, Chain chain,
                                  const std::vector<Rat>& radii);

// ---------------------------------------------------------------------------
// Enumeration and sampling helpers for property suites.
// ---------------------------------------------------------------------------

/// Every MV-topology over the space, by filtering all op-closed families.
/// Guarded: order^|X| must stay small.
std::vector<MvTopology> enumerate_topologies(UniversePtr uni, Chain chain,
                                             size_t max_tables = 16);

/// Topology generated by closing random seed tables; always valid.
MvTopology random_topology(UniversePtr uni, Chain chain, std::mt19937& rng,
                           int max_seeds = 3);

}  // namespace mvstone
