#include "mvstone/supernatural.hpp"

namespace mvstone {

bool is_prime_number(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Supernatural Supernatural::from_natural(long long n) {
  if (n < 1) throw InvalidArgumentError("from_natural requires n >= 1");
  Supernatural s;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++s.exp_[p];
      n /= p;
    }
  if (n > 1) ++s.exp_[n];
  return s;
}

Supernatural Supernatural::from_exponents(std::map<long long, long long> exponents) {
  Supernatural s;
  for (const auto& [p, e] : exponents) {
    if (!is_prime_number(p))
      throw InvalidArgumentError(std::to_string(p) + " is not prime");
    if (e != omega && e < 1)
      throw InvalidArgumentError("exponents must be >= 1 or omega");
    s.exp_[p] = e;
  }
  return s;
}

long long Supernatural::exponent(long long p) const {
  auto it = exp_.find(p);
  return it == exp_.end() ? 0 : it->second;
}

std::string Supernatural::str() const {
  if (exp_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : exp_) {
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e == omega)
      out += "^w";
    else if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

namespace {
bool exp_leq(long long a, long long b) {
  if (b == Supernatural::omega) return true;
  if (a == Supernatural::omega) return false;
  return a <= b;
}
long long exp_max(long long a, long long b) { return exp_leq(a, b) ? b : a; }
long long exp_min(long long a, long long b) { return exp_leq(a, b) ? a : b; }
}  // namespace

bool sn_leq(const Supernatural& a, const Supernatural& b) {
  for (const auto& [p, e] : a.exponents())
    if (!exp_leq(e, b.exponent(p))) return false;
  return true;
}

Supernatural sn_join(const Supernatural& a, const Supernatural& b) {
  std::map<long long, long long> out = a.exponents();
  for (const auto& [p, e] : b.exponents()) {
    auto it = out.find(p);
    if (it == out.end())
      out[p] = e;
    else
      it->second = exp_max(it->second, e);
  }
  return Supernatural::from_exponents(std::move(out));
}

Supernatural sn_meet(const Supernatural& a, const Supernatural& b) {
  std::map<long long, long long> out;
  for (const auto& [p, e] : a.exponents()) {
    long long m = exp_min(e, b.exponent(p));
    if (m != 0) out[p] = m;
  }
  return Supernatural::from_exponents(std::move(out));
}

bool in_basic_open(const Supernatural& v, long long n) {
  if (n < 1) throw InvalidArgumentError("U_n requires n >= 1");
  Supernatural base = Supernatural::from_natural(n);
  return sn_leq(base, v) && base != v;
}

std::string FiniteMultiset::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [label, mult] : counts) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(label) + ":" + std::to_string(mult);
  }
  return out + "}";
}

FiniteMultiset multiset_of(const MvAlgebra& a, size_t cap) {
  FiniteMultiset m;
  MaxEmbedding emb = embed_max(a, cap);
  for (int k : emb.quotient_orders) ++m.counts[k - 1];
  return m;
}

}  // namespace mvstone
