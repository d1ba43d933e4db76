#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mvstone/core.hpp"

namespace mvstone {

// ---------------------------------------------------------------------------
// Universes: finite, nonempty, ordered point sets. Declaration order is the
// canonical order used by every enumeration and report.
// ---------------------------------------------------------------------------

class Universe {
 public:
  explicit Universe(std::vector<std::string> points);

  size_t size() const { return points_.size(); }
  const std::string& point(size_t i) const { return points_[i]; }
  const std::vector<std::string>& points() const { return points_; }
  /// Index of the named point, or -1.
  int index_of(const std::string& name) const;

  bool operator==(const Universe& o) const { return points_ == o.points_; }

 private:
  std::vector<std::string> points_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> points);
/// Points named "M0", "M1", ... (dual-space spelling) or a custom prefix.
UniversePtr make_indexed_universe(size_t n, const std::string& prefix = "M");

bool same_universe(const UniversePtr& a, const UniversePtr& b);

// ---------------------------------------------------------------------------
// Fuzzy subsets: total value tables X -> L_n, all values on one chain.
// Stored as numerators in universe point order.
// ---------------------------------------------------------------------------

class FuzzySubset {
 public:
  FuzzySubset(UniversePtr uni, Chain chain, std::vector<int> vals);

  static FuzzySubset constant(UniversePtr uni, Chain chain, int num);
  static FuzzySubset zero(UniversePtr uni, Chain chain) { return constant(uni, chain, 0); }
  static FuzzySubset one(UniversePtr uni, Chain chain) {
    return constant(uni, chain, chain.top());
  }
  /// Crisp characteristic table of a point set.
  static FuzzySubset crisp(UniversePtr uni, Chain chain, const std::vector<bool>& members);

  const UniversePtr& universe() const { return uni_; }
  Chain chain() const { return chain_; }
  const std::vector<int>& vals() const { return vals_; }
  int at(size_t i) const { return vals_[i]; }
  ChainValue value_at(size_t i) const { return ChainValue(vals_[i], chain_); }

  bool is_crisp() const;
  bool is_zero() const;
  bool is_one() const;
  /// Points with nonzero value.
  std::vector<bool> support() const;

  bool operator==(const FuzzySubset& o) const;
  /// Canonical order: lexicographic on value tables; requires same space.
  bool operator<(const FuzzySubset& o) const;
  /// Pointwise order.
  bool leq(const FuzzySubset& o) const;

  std::string str() const;

 private:
  UniversePtr uni_;
  Chain chain_;
  std::vector<int> vals_;
};

FuzzySubset f_oplus(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset f_odot(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset f_neg(const FuzzySubset& a);
FuzzySubset f_ominus(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset f_join(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset f_meet(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset f_distance(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset f_delta(const FuzzySubset& a);
FuzzySubset f_nat_multiple(int n, const FuzzySubset& a);
FuzzySubset f_nat_power(const FuzzySubset& a, int n);

/// Join of a finite family; the empty family gives 0.
FuzzySubset family_join(UniversePtr uni, Chain chain, const std::vector<FuzzySubset>& family);
/// Meet of a finite family; the empty family gives 1.
FuzzySubset family_meet(UniversePtr uni, Chain chain, const std::vector<FuzzySubset>& family);

/// Same table on the refined grid; target.top() must be a multiple.
FuzzySubset f_embed_into(const FuzzySubset& a, Chain target);
/// Pointwise equality as rationals, chains may differ.
bool equal_as_rationals(const FuzzySubset& a, const FuzzySubset& b);

// ---------------------------------------------------------------------------
// Point maps and the fuzzy preimage / image they induce.
// ---------------------------------------------------------------------------

class PointMap {
 public:
  PointMap(UniversePtr source, UniversePtr target, std::vector<int> target_index);

  static PointMap identity(UniversePtr uni);
  static PointMap constant(UniversePtr source, UniversePtr target, int target_point);

  const UniversePtr& source() const { return src_; }
  const UniversePtr& target() const { return tgt_; }
  int apply(size_t i) const { return map_[i]; }
  const std::vector<int>& table() const { return map_; }

  bool is_bijective() const;
  /// Inverse of a bijective map.
  PointMap inverse() const;
  /// g(f(x)); f.target must equal g.source.
  static PointMap compose(const PointMap& g, const PointMap& f);

 private:
  UniversePtr src_, tgt_;
  std::vector<int> map_;
};

/// (f <= alpha)(x) = alpha(f(x)); alpha lives over f's target.
FuzzySubset preimage_map(const PointMap& f, const FuzzySubset& alpha);
/// (f -> alpha)(y) = join of alpha over the fiber of y; empty fiber gives 0.
FuzzySubset image_map(const PointMap& f, const FuzzySubset& alpha);

}  // namespace mvstone
