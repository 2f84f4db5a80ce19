#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace trunsym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact field element. Over Q this is an arbitrary-precision rational
// (always stored reduced, positive denominator). Over F_p the value is an
// integer residue in [0, p); all reduction goes through FieldSpec.
using Scalar = Rational;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSymmetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CollapseRangeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime(unsigned long m) {
  if (m < 2) return false;
  for (unsigned long q = 2; q * q <= m; ++q)
    if (m % q == 0) return false;
  return true;
}

// A coefficient field: Q (characteristic 0) or F_p for prime p.
class FieldSpec {
 public:
  explicit FieldSpec(unsigned long characteristic) : char_(characteristic) {
    if (char_ != 0 && !is_prime(char_))
      throw std::invalid_argument("FieldSpec: characteristic must be 0 or a prime, got " +
                                  std::to_string(char_));
  }

  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(unsigned long p) { return FieldSpec(p); }

  unsigned long characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }

  bool operator==(const FieldSpec& o) const { return char_ == o.char_; }
  bool operator!=(const FieldSpec& o) const { return char_ != o.char_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar from_integer(const Int& v) const {
    if (char_ == 0) return Scalar(v);
    Int r = v % Int(char_);
    if (r < 0) r += Int(char_);
    return Scalar(r);
  }

  Scalar from_int(long v) const { return from_integer(Int(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }

  Scalar inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("FieldSpec::inv: division by zero");
    if (char_ == 0) return Scalar(1) / a;
    return from_integer(inv_mod(residue(a), Int(char_)));
  }

  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // Canonicalize an externally supplied value (reduces mod p over F_p).
  Scalar reduce_entry(const Scalar& v) const { return reduce(v); }

  std::string to_string() const {
    return char_ == 0 ? std::string("Q") : "F_" + std::to_string(char_);
  }

 private:
  Scalar reduce(const Scalar& v) const {
    if (char_ == 0) return v;
    return from_integer(residue(v));
  }

  // F_p elements always have denominator 1.
  static Int residue(const Scalar& v) { return boost::multiprecision::numerator(v); }

  static Int inv_mod(Int a, const Int& p) {
    // extended Euclid
    Int t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
      Int q = r / newr;
      Int tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw std::domain_error("inv_mod: element not invertible");
    if (t < 0) t += p;
    return t;
  }

  unsigned long char_;
};

// Exact binomial coefficient.
inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return Int(0);
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= Int(n - k + i);
    r /= Int(i);
  }
  return r;
}

}  // namespace trunsym
