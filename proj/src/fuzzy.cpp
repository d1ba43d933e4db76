#include "mvstone/fuzzy.hpp"

#include <algorithm>
#include <set>

namespace mvstone {

Universe::Universe(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgumentError("empty universe");
  std::set<std::string> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second)
      throw InvalidArgumentError("duplicate point '" + p + "' in universe");
}

int Universe::index_of(const std::string& name) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return static_cast<int>(i);
  return -1;
}

UniversePtr make_universe(std::vector<std::string> points) {
  return std::make_shared<const Universe>(std::move(points));
}

UniversePtr make_indexed_universe(size_t n, const std::string& prefix) {
  std::vector<std::string> pts;
  pts.reserve(n);
  for (size_t i = 0; i < n; ++i) pts.push_back(prefix + std::to_string(i));
  return make_universe(std::move(pts));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {
void require_space(const FuzzySubset& a, const FuzzySubset& b) {
  if (!same_universe(a.universe(), b.universe()))
    throw UniverseMismatchError("fuzzy subsets over different universes");
  if (a.chain() != b.chain())
    throw ChainMismatchError("fuzzy subsets over chains of order " +
                             std::to_string(a.chain().order) + " and " +
                             std::to_string(b.chain().order));
}

template <typename F>
FuzzySubset pointwise(const FuzzySubset& a, const FuzzySubset& b, F&& f) {
  require_space(a, b);
  std::vector<int> out(a.vals().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f(a.at(i), b.at(i));
  return FuzzySubset(a.universe(), a.chain(), std::move(out));
}
}  // namespace

FuzzySubset::FuzzySubset(UniversePtr uni, Chain chain, std::vector<int> vals)
    : uni_(std::move(uni)), chain_(chain), vals_(std::move(vals)) {
  if (!uni_) throw InvalidArgumentError("null universe");
  if (vals_.size() != uni_->size())
    throw UniverseMismatchError("value table size does not match universe");
  for (int v : vals_)
    if (v < 0 || v > chain_.top())
      throw InvalidArgumentError("fuzzy value off the chain grid");
}

FuzzySubset FuzzySubset::constant(UniversePtr uni, Chain chain, int num) {
  if (!uni) throw InvalidArgumentError("null universe");
  return FuzzySubset(uni, chain, std::vector<int>(uni->size(), num));
}

FuzzySubset FuzzySubset::crisp(UniversePtr uni, Chain chain,
                               const std::vector<bool>& members) {
  if (!uni || members.size() != uni->size())
    throw UniverseMismatchError("crisp table size does not match universe");
  std::vector<int> vals(members.size());
  for (size_t i = 0; i < members.size(); ++i) vals[i] = members[i] ? chain.top() : 0;
  return FuzzySubset(uni, chain, std::move(vals));
}

bool FuzzySubset::is_crisp() const {
  for (int v : vals_)
    if (v != 0 && v != chain_.top()) return false;
  return true;
}

bool FuzzySubset::is_zero() const {
  return std::all_of(vals_.begin(), vals_.end(), [](int v) { return v == 0; });
}

bool FuzzySubset::is_one() const {
  return std::all_of(vals_.begin(), vals_.end(),
                     [this](int v) { return v == chain_.top(); });
}

std::vector<bool> FuzzySubset::support() const {
  std::vector<bool> s(vals_.size());
  for (size_t i = 0; i < vals_.size(); ++i) s[i] = vals_[i] != 0;
  return s;
}

bool FuzzySubset::operator==(const FuzzySubset& o) const {
  return same_universe(uni_, o.uni_) && chain_ == o.chain_ && vals_ == o.vals_;
}

bool FuzzySubset::operator<(const FuzzySubset& o) const {
  return vals_ < o.vals_;
}

bool FuzzySubset::leq(const FuzzySubset& o) const {
  require_space(*this, o);
  for (size_t i = 0; i < vals_.size(); ++i)
    if (vals_[i] > o.vals_[i]) return false;
  return true;
}

std::string FuzzySubset::str() const {
  std::string out = "{";
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ", ";
    out += uni_->point(i) + ": " + ChainValue(vals_[i], chain_).str();
  }
  return out + "}";
}

FuzzySubset f_oplus(const FuzzySubset& a, const FuzzySubset& b) {
  int top = a.chain().top();
  return pointwise(a, b, [top](int x, int y) { return ops::oplus(top, x, y); });
}

FuzzySubset f_odot(const FuzzySubset& a, const FuzzySubset& b) {
  int top = a.chain().top();
  return pointwise(a, b, [top](int x, int y) { return ops::odot(top, x, y); });
}

FuzzySubset f_neg(const FuzzySubset& a) {
  std::vector<int> out(a.vals().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = ops::neg(a.chain().top(), a.at(i));
  return FuzzySubset(a.universe(), a.chain(), std::move(out));
}

FuzzySubset f_ominus(const FuzzySubset& a, const FuzzySubset& b) {
  int top = a.chain().top();
  return pointwise(a, b, [top](int x, int y) { return ops::ominus(top, x, y); });
}

FuzzySubset f_join(const FuzzySubset& a, const FuzzySubset& b) {
  return pointwise(a, b, [](int x, int y) { return ops::join(x, y); });
}

FuzzySubset f_meet(const FuzzySubset& a, const FuzzySubset& b) {
  return pointwise(a, b, [](int x, int y) { return ops::meet(x, y); });
}

FuzzySubset f_distance(const FuzzySubset& a, const FuzzySubset& b) {
  int top = a.chain().top();
  return pointwise(a, b, [top](int x, int y) { return ops::dist(top, x, y); });
}

FuzzySubset f_delta(const FuzzySubset& a) {
  std::vector<int> out(a.vals().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = ops::delta(a.chain().top(), a.at(i));
  return FuzzySubset(a.universe(), a.chain(), std::move(out));
}

FuzzySubset f_nat_multiple(int n, const FuzzySubset& a) {
  if (n < 1) throw InvalidArgumentError("nat_multiple requires n >= 1");
  std::vector<int> out(a.vals().size());
  int top = a.chain().top();
  for (size_t i = 0; i < out.size(); ++i) {
    long long s = static_cast<long long>(n) * a.at(i);
    out[i] = s > top ? top : static_cast<int>(s);
  }
  return FuzzySubset(a.universe(), a.chain(), std::move(out));
}

FuzzySubset f_nat_power(const FuzzySubset& a, int n) {
  if (n < 1) throw InvalidArgumentError("nat_power requires n >= 1");
  std::vector<int> out(a.vals().size());
  int top = a.chain().top();
  for (size_t i = 0; i < out.size(); ++i) {
    long long s = static_cast<long long>(top) -
                  static_cast<long long>(n) * (top - a.at(i));
    out[i] = s < 0 ? 0 : static_cast<int>(s);
  }
  return FuzzySubset(a.universe(), a.chain(), std::move(out));
}

FuzzySubset family_join(UniversePtr uni, Chain chain,
                        const std::vector<FuzzySubset>& family) {
  FuzzySubset acc = FuzzySubset::zero(std::move(uni), chain);
  for (const auto& f : family) acc = f_join(acc, f);
  return acc;
}

FuzzySubset family_meet(UniversePtr uni, Chain chain,
                        const std::vector<FuzzySubset>& family) {
  FuzzySubset acc = FuzzySubset::one(std::move(uni), chain);
  for (const auto& f : family) acc = f_meet(acc, f);
  return acc;
}

FuzzySubset f_embed_into(const FuzzySubset& a, Chain target) {
  int from = a.chain().top();
  int to = target.top();
  if (to % from != 0)
    throw ChainMismatchError("no grid embedding of order " +
                             std::to_string(a.chain().order) + " into order " +
                             std::to_string(target.order));
  int scale = to / from;
  std::vector<int> out(a.vals().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.at(i) * scale;
  return FuzzySubset(a.universe(), target, std::move(out));
}

bool equal_as_rationals(const FuzzySubset& a, const FuzzySubset& b) {
  if (!same_universe(a.universe(), b.universe())) return false;
  long long ta = a.chain().top(), tb = b.chain().top();
  for (size_t i = 0; i < a.vals().size(); ++i)
    if (a.at(i) * tb != b.at(i) * ta) return false;
  return true;
}

PointMap::PointMap(UniversePtr source, UniversePtr target, std::vector<int> target_index)
    : src_(std::move(source)), tgt_(std::move(target)), map_(std::move(target_index)) {
  if (!src_ || !tgt_) throw InvalidArgumentError("null universe in point map");
  if (map_.size() != src_->size())
    throw UniverseMismatchError("point map table size does not match source");
  for (int t : map_)
    if (t < 0 || static_cast<size_t>(t) >= tgt_->size())
      throw UniverseMismatchError("point map image out of target range");
}

PointMap PointMap::identity(UniversePtr uni) {
  std::vector<int> m(uni->size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
  return PointMap(uni, uni, std::move(m));
}

PointMap PointMap::constant(UniversePtr source, UniversePtr target, int target_point) {
  return PointMap(source, target, std::vector<int>(source->size(), target_point));
}

bool PointMap::is_bijective() const {
  if (src_->size() != tgt_->size()) return false;
  std::vector<bool> hit(tgt_->size(), false);
  for (int t : map_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

PointMap PointMap::inverse() const {
  if (!is_bijective()) throw InvalidArgumentError("inverse of a non-bijective map");
  std::vector<int> inv(src_->size());
  for (size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<int>(i);
  return PointMap(tgt_, src_, std::move(inv));
}

PointMap PointMap::compose(const PointMap& g, const PointMap& f) {
  if (!same_universe(f.target(), g.source()))
    throw UniverseMismatchError("composition over mismatched universes");
  std::vector<int> m(f.source()->size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = g.apply(f.apply(i));
  return PointMap(f.source(), g.target(), std::move(m));
}

FuzzySubset preimage_map(const PointMap& f, const FuzzySubset& alpha) {
  if (!same_universe(alpha.universe(), f.target()))
    throw UniverseMismatchError("preimage: subset not over the map's target");
  std::vector<int> out(f.source()->size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = alpha.at(f.apply(i));
  return FuzzySubset(f.source(), alpha.chain(), std::move(out));
}

FuzzySubset image_map(const PointMap& f, const FuzzySubset& alpha) {
  if (!same_universe(alpha.universe(), f.source()))
    throw UniverseMismatchError("image: subset not over the map's source");
  std::vector<int> out(f.target()->size(), 0);
  for (size_t i = 0; i < alpha.vals().size(); ++i) {
    int y = f.apply(i);
    out[y] = ops::join(out[y], alpha.at(i));
  }
  return FuzzySubset(f.target(), alpha.chain(), std::move(out));
}

}  // namespace mvstone
