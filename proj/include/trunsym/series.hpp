#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "trunsym/field.hpp"

namespace trunsym {

// Integer-coefficient polynomial in t, optionally truncated (coefficients
// above the truncation degree are unknown and silently dropped).
class SeriesPoly {
 public:
  SeriesPoly() = default;
  explicit SeriesPoly(std::optional<int> truncation) : trunc_(truncation) {}

  static SeriesPoly one(std::optional<int> truncation = std::nullopt) {
    SeriesPoly s(truncation);
    s.set(0, 1);
    return s;
  }

  static SeriesPoly term(int k, long long c, std::optional<int> truncation = std::nullopt) {
    SeriesPoly s(truncation);
    s.set(k, c);
    return s;
  }

  // 1 - t^k
  static SeriesPoly one_minus_tk(int k) {
    SeriesPoly s;
    s.set(0, 1);
    s.set(k, -1);
    return s;
  }

  void set(int k, long long c) {
    if (k < 0) throw std::invalid_argument("SeriesPoly: negative exponent");
    if (trunc_ && k > *trunc_) return;
    if (c == 0) coeffs_.erase(k);
    else coeffs_[k] = c;
  }

  long long coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
  }

  const std::map<int, long long>& coeffs() const { return coeffs_; }
  std::optional<int> truncation() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  SeriesPoly truncated(int up_to) const {
    SeriesPoly s(trunc_ ? std::min(*trunc_, up_to) : up_to);
    for (const auto& [k, c] : coeffs_)
      if (k <= up_to) s.set(k, c);
    return s;
  }

  SeriesPoly operator+(const SeriesPoly& o) const {
    SeriesPoly s(min_trunc(o));
    for (const auto& [k, c] : coeffs_) s.set(k, c);
    for (const auto& [k, c] : o.coeffs_) s.set(k, s.coeff(k) + c);
    return s;
  }

  SeriesPoly operator-(const SeriesPoly& o) const {
    SeriesPoly s(min_trunc(o));
    for (const auto& [k, c] : coeffs_) s.set(k, c);
    for (const auto& [k, c] : o.coeffs_) s.set(k, s.coeff(k) - c);
    return s;
  }

  SeriesPoly operator*(const SeriesPoly& o) const {
    SeriesPoly s(min_trunc(o));
    for (const auto& [k1, c1] : coeffs_)
      for (const auto& [k2, c2] : o.coeffs_) {
        if (s.trunc_ && k1 + k2 > *s.trunc_) break;
        s.set(k1 + k2, s.coeff(k1 + k2) + c1 * c2);
      }
    return s;
  }

  // Exact division by (1 - t^k): multiplication by the geometric series,
  // valid for polynomials (truncated inputs keep their truncation).
  SeriesPoly div_one_minus_tk(int k, int up_to) const {
    SeriesPoly s(trunc_ ? std::min(*trunc_, up_to) : up_to);
    // quotient coefficients satisfy q_j = c_j + q_{j-k}
    for (int j = 0; j <= (s.trunc_ ? *s.trunc_ : up_to); ++j)
      s.set(j, coeff(j) + (j >= k ? s.coeff(j - k) : 0));
    return s;
  }

  long long eval_at_one() const {
    long long v = 0;
    for (const auto& [k, c] : coeffs_) v += c;
    return v;
  }

  bool is_palindromic() const {
    int top = degree();
    for (const auto& [k, c] : coeffs_)
      if (coeff(top - k) != c) return false;
    return true;
  }

  // exponents scaled: algebraic degree -> cohomological-complex degree
  SeriesPoly scaled_exponents(int factor) const {
    SeriesPoly s(trunc_ ? std::optional<int>(*trunc_ * factor) : std::nullopt);
    for (const auto& [k, c] : coeffs_) s.set(k * factor, c);
    return s;
  }

  bool operator==(const SeriesPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const SeriesPoly& o) const { return coeffs_ != o.coeffs_; }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      long long a = c < 0 ? -c : c;
      if (k == 0) os << a;
      else {
        if (a != 1) os << a << "*";
        os << "t";
        if (k != 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::optional<int> min_trunc(const SeriesPoly& o) const {
    if (trunc_ && o.trunc_) return std::min(*trunc_, *o.trunc_);
    return trunc_ ? trunc_ : o.trunc_;
  }

  std::map<int, long long> coeffs_;
  std::optional<int> trunc_;
};

// Hilbert series of R_n = F[s_1..s_n]: truncation of prod 1/(1 - t^i).
inline SeriesPoly hilbert_Rn(int n, int up_to) {
  SeriesPoly s = SeriesPoly::one(up_to);
  for (int i = 1; i <= n; ++i) s = s.div_one_minus_tk(i, up_to);
  return s;
}

// Hilbert series of R_n / I(n,d): the Gaussian binomial [n+d choose n]_t,
// computed as prod (1 - t^{d+i}) / (1 - t^i). Exact polynomial of degree n*d.
inline SeriesPoly quotient_series(int n, int d) {
  int top = n * d;
  SeriesPoly s = SeriesPoly::one(top);
  for (int i = 1; i <= n; ++i) s = s * SeriesPoly::one_minus_tk(d + i);
  for (int i = 1; i <= n; ++i) s = s.div_one_minus_tk(i, top);
  return s;
}

// prod (1 - t^{e_i}) / prod_{i=1..n} (1 - t^i) as a power series. When the
// result is the Hilbert series of a graded complete intersection it is a
// polynomial with non-negative coefficients; otherwise `polynomial` is false.
struct CompleteIntersectionSeries {
  SeriesPoly series;
  bool polynomial;
};

inline CompleteIntersectionSeries complete_intersection_series(const std::vector<int>& degrees,
                                                               int n) {
  int sum = 0;
  for (int e : degrees) {
    if (e < 1) throw std::invalid_argument("complete_intersection_series: degrees must be >= 1");
    sum += e;
  }
  int bound = sum + n + 1;  // past any possible polynomial top degree
  SeriesPoly s = SeriesPoly::one(bound);
  for (int e : degrees) s = s * SeriesPoly::one_minus_tk(e);
  for (int i = 1; i <= n; ++i) s = s.div_one_minus_tk(i, bound);
  int expected_top = sum - n * (n + 1) / 2;
  bool poly = true;
  for (const auto& [k, c] : s.coeffs())
    if (c < 0 || k > std::max(expected_top, 0)) poly = false;
  return {s, poly};
}

// Poincare series of the exterior algebra on classes of dimension 2(d+i)-1:
// prod_{i=1..n} (1 + t^{2(d+i)-1}). Cohomological grading.
inline SeriesPoly exterior_series(int n, int d) {
  SeriesPoly s = SeriesPoly::one();
  for (int i = 1; i <= n; ++i)
    s = s * (SeriesPoly::one() + SeriesPoly::term(2 * (d + i) - 1, 1));
  return s;
}

// Poincare polynomial of the flag manifold U(n)/T: prod (1 - t^{2i})/(1 - t^2).
inline SeriesPoly flag_series(int n) {
  int top = n * (n - 1);  // real dimension of U(n)/T
  SeriesPoly s = SeriesPoly::one(top);
  for (int i = 1; i <= n; ++i) s = s * SeriesPoly::one_minus_tk(2 * i);
  for (int i = 1; i <= n; ++i) s = s.div_one_minus_tk(2, top);
  return s;
}

// Additive Poincare series of W(n,d) in the collapse range d >= n-1:
// flag_series(n) * (1 + t^{2d+1})^n.
inline SeriesPoly w_series(int n, int d) {
  if (d < n - 1)
    throw CollapseRangeViolation("w_series: requires d >= n-1 (got n=" + std::to_string(n) +
                                 ", d=" + std::to_string(d) + ")");
  SeriesPoly s = flag_series(n);
  // drop the truncation before multiplying by the sphere factors
  SeriesPoly flat;
  for (const auto& [k, c] : s.coeffs()) flat.set(k, c);
  for (int i = 0; i < n; ++i)
    flat = flat * (SeriesPoly::one() + SeriesPoly::term(2 * d + 1, 1));
  return flat;
}

// Literature value, not computed by this engine: the mod-2 Poincare series of
// the (2,1) orbit-space example. Shipped for reference output only.
inline SeriesPoly x22_mod2_poincare_reference() {
  SeriesPoly s;
  for (int k : {0, 1, 2, 3, 5, 6, 7, 8}) s.set(k, 1);
  return s;
}

}  // namespace trunsym
