#include "mvstone/core.hpp"

namespace mvstone {

long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_ll(a, b) * b;
}

Rat::Rat(long long n, long long d) {
  if (d == 0) throw InvalidArgumentError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = gcd_ll(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

bool Rat::operator<(const Rat& o) const {
  return num * o.den < o.num * den;
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {
Chain require_same(const ChainValue& x, const ChainValue& y) {
  if (x.chain != y.chain)
    throw ChainMismatchError("values from chains of order " +
                             std::to_string(x.chain.order) + " and " +
                             std::to_string(y.chain.order));
  return x.chain;
}
}  // namespace

ChainValue oplus(const ChainValue& x, const ChainValue& y) {
  Chain c = require_same(x, y);
  return ChainValue(ops::oplus(c.top(), x.num, y.num), c);
}

ChainValue odot(const ChainValue& x, const ChainValue& y) {
  Chain c = require_same(x, y);
  return ChainValue(ops::odot(c.top(), x.num, y.num), c);
}

ChainValue neg(const ChainValue& x) {
  return ChainValue(ops::neg(x.chain.top(), x.num), x.chain);
}

ChainValue ominus(const ChainValue& x, const ChainValue& y) {
  Chain c = require_same(x, y);
  return ChainValue(ops::ominus(c.top(), x.num, y.num), c);
}

ChainValue join(const ChainValue& x, const ChainValue& y) {
  Chain c = require_same(x, y);
  return ChainValue(ops::join(x.num, y.num), c);
}

ChainValue meet(const ChainValue& x, const ChainValue& y) {
  Chain c = require_same(x, y);
  return ChainValue(ops::meet(x.num, y.num), c);
}

ChainValue distance(const ChainValue& x, const ChainValue& y) {
  Chain c = require_same(x, y);
  return ChainValue(ops::dist(c.top(), x.num, y.num), c);
}

ChainValue baaz_delta(const ChainValue& x) {
  return ChainValue(ops::delta(x.chain.top(), x.num), x.chain);
}

ChainValue nat_multiple(int n, const ChainValue& x) {
  if (n < 1) throw InvalidArgumentError("nat_multiple requires n >= 1");
  long long s = static_cast<long long>(n) * x.num;
  int top = x.chain.top();
  return ChainValue(s > top ? top : static_cast<int>(s), x.chain);
}

ChainValue nat_power(const ChainValue& x, int n) {
  if (n < 1) throw InvalidArgumentError("nat_power requires n >= 1");
  int top = x.chain.top();
  long long s = static_cast<long long>(top) - static_cast<long long>(n) * (top - x.num);
  return ChainValue(s < 0 ? 0 : static_cast<int>(s), x.chain);
}

ChainValue embed_into(const ChainValue& x, Chain target) {
  int from = x.chain.top();
  int to = target.top();
  if (to % from != 0)
    throw ChainMismatchError("no grid embedding of order " +
                             std::to_string(x.chain.order) + " into order " +
                             std::to_string(target.order));
  return ChainValue(x.num * (to / from), target);
}

Chain common_refinement(Chain a, Chain b) {
  return Chain(static_cast<int>(lcm_ll(a.top(), b.top())) + 1);
}

}  // namespace mvstone
