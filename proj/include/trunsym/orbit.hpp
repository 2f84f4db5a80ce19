#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "trunsym/field.hpp"
#include "trunsym/partition.hpp"

namespace trunsym {

// Element of R_n = F[x_1..x_n]^{S_n} in the orbit-sum basis.
class SymPolynomial {
 public:
  using TermMap = std::map<Partition, Scalar, PartitionLess>;

  SymPolynomial(int n, FieldSpec field) : n_(n), field_(std::move(field)) {}

  static SymPolynomial zero(int n, const FieldSpec& field) { return SymPolynomial(n, field); }

  static SymPolynomial monomial(const Partition& a, const Scalar& c, const FieldSpec& field) {
    SymPolynomial f(a.n(), field);
    f.add_term(a, c);
    return f;
  }

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& a, const Scalar& c) {
    if (a.n() != n_) throw DimensionMismatch("SymPolynomial: partition length mismatch");
    auto it = terms_.find(a);
    Scalar v = field_.add(it == terms_.end() ? field_.zero() : it->second, field_.reduce_entry(c));
    if (v == 0) {
      if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
      terms_.emplace(a, std::move(v));
    } else {
      it->second = std::move(v);
    }
  }

  Scalar coeff(const Partition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  // -1 for the zero polynomial
  int degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [a, c] : terms_) {
      if (d < 0) d = a.degree();
      else if (a.degree() != d) return false;
    }
    return true;
  }

  SymPolynomial operator+(const SymPolynomial& o) const {
    check_compatible(o);
    SymPolynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
  }

  SymPolynomial operator-(const SymPolynomial& o) const {
    check_compatible(o);
    SymPolynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, field_.neg(c));
    return r;
  }

  SymPolynomial scaled(const Scalar& c) const {
    SymPolynomial r(n_, field_);
    for (const auto& [a, v] : terms_) r.add_term(a, field_.mul(c, v));
    return r;
  }

  bool operator==(const SymPolynomial& o) const {
    return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const SymPolynomial& o) const { return !(*this == o); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [a, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (c != 1) {
        std::ostringstream os;
        os << c;
        s += os.str() + "*";
      }
      s += a.to_string();
    }
    return s;
  }

  void check_compatible(const SymPolynomial& o) const {
    if (n_ != o.n_ || field_ != o.field_)
      throw DimensionMismatch("SymPolynomial: mixed variable counts or fields");
  }

 private:
  TermMap terms_;
  int n_;
  FieldSpec field_;
};

// Element of F[x_1..x_n]: raw exponent tuples, used by poly_ring and the
// brute-force oracle.
class DensePolynomial {
 public:
  using TermMap = std::map<std::vector<int>, Scalar>;

  DensePolynomial(int n, FieldSpec field) : n_(n), field_(std::move(field)) {}

  int n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != n_)
      throw DimensionMismatch("DensePolynomial: exponent tuple length mismatch");
    auto it = terms_.find(e);
    Scalar v = field_.add(it == terms_.end() ? field_.zero() : it->second, field_.reduce_entry(c));
    if (v == 0) {
      if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
      terms_.emplace(e, std::move(v));
    } else {
      it->second = std::move(v);
    }
  }

  Scalar coeff(const std::vector<int>& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (d < 0) d = s;
      else if (s != d) return false;
    }
    return true;
  }

  bool operator==(const DensePolynomial& o) const {
    return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const DensePolynomial& o) const { return !(*this == o); }

 private:
  TermMap terms_;
  int n_;
  FieldSpec field_;
};

namespace detail {

// Integer structure constants of P_a * P_b, memoized across all fields.
// Computed by enumerating the distinct permutations b' of b against the fixed
// sorted representative a, tallying c = sort(a + b'), then converting tallies
// to pair counts: k_c = tally_c * |orbit(a)| / |orbit(c)|.
struct OrbitMulCache {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  using Value = std::vector<std::pair<std::vector<int>, Int>>;

  const Value& get(const Partition& a, const Partition& b) {
    // commutative, so canonicalize the key order
    Key key = a.parts() <= b.parts() ? Key{a.parts(), b.parts()} : Key{b.parts(), a.parts()};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, compute(Partition(key.first), Partition(key.second)))
        .first->second;
  }

  static Value compute(const Partition& a, const Partition& b) {
    std::map<std::vector<int>, Int> tally;
    for (const auto& bp : b.distinct_permutations()) {
      std::vector<int> c(a.parts());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += bp[i];
      std::sort(c.begin(), c.end(), std::greater<int>());
      tally[c] += 1;
    }
    Int orb_a = a.orbit_size();
    Value out;
    out.reserve(tally.size());
    for (auto& [c, t] : tally) {
      Int orb_c = Partition(c).orbit_size();
      Int num = t * orb_a;
      // pair count is an exact multiple of the orbit size of c
      if (num % orb_c != 0) throw std::logic_error("orbit_mul: non-integral structure constant");
      out.emplace_back(c, num / orb_c);
    }
    return out;
  }

  static OrbitMulCache& instance() {
    static OrbitMulCache c;
    return c;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> cache_;
};

}  // namespace detail

// P_a * P_b = sum k_c P_c, where k_c counts the ways to write c as a
// permutation of a plus a permutation of b. Coefficients reduced into field.
inline SymPolynomial orbit_mul(const Partition& a, const Partition& b, const FieldSpec& field) {
  if (a.n() != b.n()) throw DimensionMismatch("orbit_mul: partition length mismatch");
  SymPolynomial r(a.n(), field);
  for (const auto& [c, k] : detail::OrbitMulCache::instance().get(a, b))
    r.add_term(Partition(c), field.from_integer(k));
  return r;
}

inline SymPolynomial sym_mul(const SymPolynomial& f, const SymPolynomial& g) {
  f.check_compatible(g);
  SymPolynomial r(f.n(), f.field());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      Scalar c = f.field().mul(ca, cb);
      for (const auto& [p, k] : detail::OrbitMulCache::instance().get(a, b))
        r.add_term(Partition(p), f.field().mul(c, f.field().from_integer(k)));
    }
  return r;
}

inline SymPolynomial sym_pow(const SymPolynomial& f, int e) {
  SymPolynomial r = SymPolynomial::monomial(Partition(std::vector<int>(f.n(), 0)),
                                            f.field().one(), f.field());
  for (int i = 0; i < e; ++i) r = sym_mul(r, f);
  return r;
}

// P_i = x_1^i + ... + x_n^i
inline SymPolynomial power_sum(int i, int n, const FieldSpec& field) {
  if (i < 1) throw std::invalid_argument("power_sum: degree must be positive");
  std::vector<int> parts(n, 0);
  parts[0] = i;
  return SymPolynomial::monomial(Partition(std::move(parts)), field.one(), field);
}

// s_k = P_{1,...,1} (k ones)
inline SymPolynomial elementary_symmetric(int k, int n, const FieldSpec& field) {
  if (k < 1 || k > n) throw std::invalid_argument("elementary_symmetric: k out of range");
  std::vector<int> parts(n, 0);
  std::fill(parts.begin(), parts.begin() + k, 1);
  return SymPolynomial::monomial(Partition(std::move(parts)), field.one(), field);
}

// Given n consecutive power sums P_{m+1}..P_{m+n}, returns
// P_{m+n+1} = s_1 P_{m+n} - s_2 P_{m+n-1} + ... + (-1)^{n+1} s_n P_{m+1}.
inline SymPolynomial newton_next(const std::vector<SymPolynomial>& known, int n,
                                 const FieldSpec& field) {
  if (static_cast<int>(known.size()) != n)
    throw std::invalid_argument("newton_next: expected exactly n power sums");
  int m = -1;
  for (int j = 0; j < n; ++j) {
    const SymPolynomial& f = known[j];
    if (f.n() != n || f.field() != field || f.terms().size() != 1)
      throw std::invalid_argument("newton_next: input is not a power sum list");
    const auto& [a, c] = *f.terms().begin();
    if (a.weight() != 1 || c != field.one())
      throw std::invalid_argument("newton_next: input is not a power sum list");
    if (j == 0) m = a[0] - 1;
    else if (a[0] != m + 1 + j)
      throw std::invalid_argument("newton_next: power sums not consecutive");
  }
  if (m < 0) throw std::invalid_argument("newton_next: degrees must be positive");
  SymPolynomial r(n, field);
  for (int i = 1; i <= n; ++i) {
    SymPolynomial term = sym_mul(elementary_symmetric(i, n, field), known[n - i]);
    r = (i % 2 == 1) ? r + term : r - term;
  }
  return r;
}

// Full monomial expansion: each orbit sum contributes its distinct
// permutations with coefficient 1.
inline DensePolynomial expand_to_monomials(const SymPolynomial& f) {
  DensePolynomial g(f.n(), f.field());
  for (const auto& [a, c] : f.terms())
    for (const auto& e : a.distinct_permutations()) g.add_term(e, c);
  return g;
}

// Inverse of expand_to_monomials; throws NotSymmetricError if g is not
// invariant under permuting the variables.
inline SymPolynomial symmetrize(const DensePolynomial& g) {
  SymPolynomial f(g.n(), g.field());
  std::map<Partition, Scalar, PartitionLess> seen;
  for (const auto& [e, c] : g.terms()) {
    Partition a = Partition::from_unsorted(e);
    auto it = seen.find(a);
    if (it == seen.end()) seen.emplace(a, c);
    else if (it->second != c)
      throw NotSymmetricError("symmetrize: inconsistent coefficients in orbit of " + a.to_string());
  }
  for (const auto& [a, c] : seen) {
    // every monomial of the orbit must be present
    for (const auto& e : a.distinct_permutations())
      if (g.coeff(e) != c)
        throw NotSymmetricError("symmetrize: incomplete orbit of " + a.to_string());
    f.add_term(a, c);
  }
  return f;
}

inline DensePolynomial dense_mul(const DensePolynomial& f, const DensePolynomial& g) {
  if (f.n() != g.n() || f.field() != g.field())
    throw DimensionMismatch("dense_mul: mixed variable counts or fields");
  DensePolynomial r(f.n(), f.field());
  for (const auto& [e1, c1] : f.terms())
    for (const auto& [e2, c2] : g.terms()) {
      std::vector<int> e(e1);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, f.field().mul(c1, c2));
    }
  return r;
}

}  // namespace trunsym
