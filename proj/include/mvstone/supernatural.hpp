#pragma once

#include <map>

#include "mvstone/algebra.hpp"

namespace mvstone {

// ---------------------------------------------------------------------------
// Supernatural numbers: formal products of prime powers with exponents in
// omega + 1, ordered by pointwise exponent comparison. Representation is
// finite-support; an absent prime has exponent 0.
// ---------------------------------------------------------------------------

class Supernatural {
 public:
  static constexpr long long omega = -1;  // sentinel, compares above all

  Supernatural() = default;
  /// Prime factorization; n >= 1.
  static Supernatural from_natural(long long n);
  /// exponents: prime -> exponent (>= 1, or omega).
  static Supernatural from_exponents(std::map<long long, long long> exponents);

  long long exponent(long long p) const;
  const std::map<long long, long long>& exponents() const { return exp_; }

  bool operator==(const Supernatural& o) const { return exp_ == o.exp_; }
  bool operator!=(const Supernatural& o) const { return exp_ != o.exp_; }

  std::string str() const;

 private:
  std::map<long long, long long> exp_;
};

bool sn_leq(const Supernatural& a, const Supernatural& b);
/// Pointwise max of exponents (lcm); omega absorbs.
Supernatural sn_join(const Supernatural& a, const Supernatural& b);
/// Pointwise min of exponents (gcd); omega yields to any finite exponent.
Supernatural sn_meet(const Supernatural& a, const Supernatural& b);

/// Membership in the basic open U_n = { v : v > n }: strict divisibility.
bool in_basic_open(const Supernatural& v, long long n);

// ---------------------------------------------------------------------------
// Finite multisets of chain lengths, the object-level invariant of finite
// algebras under the duality.
// ---------------------------------------------------------------------------

struct FiniteMultiset {
  std::map<int, int> counts;  // label -> multiplicity >= 1

  bool operator==(const FiniteMultiset& o) const { return counts == o.counts; }
  std::string str() const;
};

/// Multiset of quotient chain lengths (order - 1 per maximal ideal).
FiniteMultiset multiset_of(const MvAlgebra& a, size_t cap = kIdealEnumerationCap);

bool is_prime_number(long long p);

}  // namespace mvstone
