#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvstone {

// ---------------------------------------------------------------------------
// Error taxonomy. Everything downstream throws one of these.
// ---------------------------------------------------------------------------

struct MvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values from different chains were combined.
struct ChainMismatchError : MvError {
  using MvError::MvError;
};

/// Two fuzzy subsets (or a map and a subset) over different universes.
struct UniverseMismatchError : MvError {
  using MvError::MvError;
};

/// A precondition on user input failed (bad order, empty set, improper ideal...).
struct InvalidArgumentError : MvError {
  using MvError::MvError;
};

/// An enumeration exceeded its configured bound.
struct ResourceLimitError : MvError {
  using MvError::MvError;
};

/// A certified identity failed; signals a construction bug, never user error.
struct InternalConsistencyError : MvError {
  using MvError::MvError;
};

// ---------------------------------------------------------------------------
// Exact rationals. Only what the kernel needs: normalization, order, printing.
// ---------------------------------------------------------------------------

struct Rat {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) == 1

  Rat() = default;
  Rat(long long n, long long d);
  static Rat of(long long n) { return Rat(n, 1); }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this == o || *this < o; }
  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }

  std::string str() const;
};

// ---------------------------------------------------------------------------
// Finite Lukasiewicz chains. A chain of order n has carrier {k/(n-1)}.
// All arithmetic is exact on numerators.
// ---------------------------------------------------------------------------

struct Chain {
  int order;  // number of elements, >= 2

  explicit Chain(int n) : order(n) {
    if (n < 2) throw InvalidArgumentError("chain order must be >= 2");
  }
  int top() const { return order - 1; }  // numerator of 1
  bool operator==(const Chain& o) const { return order == o.order; }
  bool operator!=(const Chain& o) const { return order != o.order; }
};

struct ChainValue {
  int num;  // 0 <= num <= chain.top()
  Chain chain;

  ChainValue(int k, Chain c) : num(k), chain(c) {
    if (k < 0 || k > c.top())
      throw InvalidArgumentError("chain value numerator out of range");
  }
  static ChainValue zero(Chain c) { return ChainValue(0, c); }
  static ChainValue one(Chain c) { return ChainValue(c.top(), c); }

  Rat rational() const { return Rat(num, chain.top()); }
  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == chain.top(); }

  bool operator==(const ChainValue& o) const {
    return chain == o.chain && num == o.num;
  }
  std::string str() const { return rational().str(); }
};

// Raw numerator arithmetic shared by chain values, product elements and
// fuzzy subsets: `top` is the numerator of 1.
namespace ops {
inline int oplus(int top, int x, int y) { return x + y > top ? top : x + y; }
inline int odot(int top, int x, int y) { return x + y - top < 0 ? 0 : x + y - top; }
inline int neg(int top, int x) { return top - x; }
inline int ominus(int top, int x, int y) { return odot(top, x, neg(top, y)); }
inline int join(int x, int y) { return x > y ? x : y; }
inline int meet(int x, int y) { return x < y ? x : y; }
inline int dist(int top, int x, int y) {
  return oplus(top, ominus(top, x, y), ominus(top, y, x));
}
inline int delta(int top, int x) { return x == top ? top : 0; }
}  // namespace ops

ChainValue oplus(const ChainValue& x, const ChainValue& y);
ChainValue odot(const ChainValue& x, const ChainValue& y);
ChainValue neg(const ChainValue& x);
ChainValue ominus(const ChainValue& x, const ChainValue& y);
ChainValue join(const ChainValue& x, const ChainValue& y);
ChainValue meet(const ChainValue& x, const ChainValue& y);
ChainValue distance(const ChainValue& x, const ChainValue& y);

/// 1 if x = 1, else 0, in x's chain.
ChainValue baaz_delta(const ChainValue& x);

/// n-fold truncated sum x + ... + x, n >= 1.
ChainValue nat_multiple(int n, const ChainValue& x);
/// n-fold strong product x * ... * x, n >= 1.
ChainValue nat_power(const ChainValue& x, int n);

/// Re-express x on a coarser-or-equal grid; `target.top()` must be a
/// multiple of x.chain.top().
ChainValue embed_into(const ChainValue& x, Chain target);

/// Smallest chain whose grid refines both: top = lcm of the two tops.
Chain common_refinement(Chain a, Chain b);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace mvstone
