#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

#include "loghh/error.hpp"

namespace loghh {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

// Coefficient field: Q (p == 0) or F_p, p prime.  Elements of F_p are kept
// as Rat values with denominator 1 and numerator in [0, p); reduce() is the
// canonicalizer and every arithmetic helper routes through it, so the same
// polynomial/matrix code serves both fields.
class Field {
 public:
  Field() : p_(0) {}
  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }

  Rat reduce(const Rat& x) const {
    if (p_ == 0) return x;
    Int n = num(x) % p_, d = den(x) % p_;
    if (n < 0) n += p_;
    if (d == 0) fail(ErrorKind::Internal, "division by p in F_p");
    if (d == 1) return Rat(n);
    return Rat(n * inv_mod(d) % p_);
  }
  Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
  Rat neg(const Rat& a) const { return reduce(-a); }
  Rat inv(const Rat& a) const {
    if (a == 0) fail(ErrorKind::Internal, "inverse of zero");
    if (p_ == 0) return Rat(1) / a;
    return Rat(inv_mod(num(reduce(a))));
  }
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  bool is_zero(const Rat& a) const { return reduce(a) == 0; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

 private:
  std::int64_t p_;
  Int inv_mod(Int a) const;  // extended Euclid mod p_
};

}  // namespace loghh
