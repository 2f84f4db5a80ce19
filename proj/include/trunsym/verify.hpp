#pragma once

#include <string>
#include <vector>

#include "trunsym/poly_ring.hpp"
#include "trunsym/truncated_ideal.hpp"

namespace trunsym {

enum class TheoremCase { Thm1a, Thm1b, Thm2a, Thm2b, Cor, Rem, Serre };

inline const char* theorem_case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::Thm1a: return "thm1a";
    case TheoremCase::Thm1b: return "thm1b";
    case TheoremCase::Thm2a: return "thm2a";
    case TheoremCase::Thm2b: return "thm2b";
    case TheoremCase::Cor: return "cor";
    case TheoremCase::Rem: return "rem";
    case TheoremCase::Serre: return "serre";
  }
  return "?";
}

inline TheoremCase parse_theorem_case(const std::string& s) {
  if (s == "thm1a") return TheoremCase::Thm1a;
  if (s == "thm1b") return TheoremCase::Thm1b;
  if (s == "thm2a") return TheoremCase::Thm2a;
  if (s == "thm2b") return TheoremCase::Thm2b;
  if (s == "cor") return TheoremCase::Cor;
  if (s == "rem") return TheoremCase::Rem;
  if (s == "serre") return TheoremCase::Serre;
  throw std::invalid_argument("unknown case '" + s +
                              "' (expected thm1a|thm1b|thm2a|thm2b|cor|rem|serre)");
}

// P_{d+1}, ..., P_{d+n}
inline std::vector<SymPolynomial> power_sum_generators(const TruncatedIdeal& t) {
  std::vector<SymPolynomial> gens;
  for (int i = 1; i <= t.n; ++i) gens.push_back(power_sum(t.d + i, t.n, t.field));
  return gens;
}

// P_{d+1, ..., d+1} (p times); requires p <= n
inline SymPolynomial p_fold_generator(const TruncatedIdeal& t) {
  int p = static_cast<int>(t.field.characteristic());
  if (p < 2 || p > t.n)
    throw std::invalid_argument("p_fold_generator: requires a prime characteristic p <= n");
  std::vector<int> parts(t.n, 0);
  std::fill(parts.begin(), parts.begin() + p, t.d + 1);
  return SymPolynomial::monomial(Partition(std::move(parts)), t.field.one(), t.field);
}

// Generator set prescribed for (n, d, char): the n power sums, plus the
// p-fold orbit sum when 0 < p <= n <= 2p-1. Throws HypothesisViolation when
// no generating set is prescribed (n > 2p-1 in positive characteristic).
inline std::vector<SymPolynomial> prescribed_generators(const TruncatedIdeal& t) {
  long p = static_cast<long>(t.field.characteristic());
  std::vector<SymPolynomial> gens = power_sum_generators(t);
  if (p == 0 || t.n < p) return gens;
  if (t.n > 2 * p - 1)
    throw HypothesisViolation("no prescribed generating set: requires n <= 2p-1, got n=" +
                              std::to_string(t.n) + ", p=" + std::to_string(p));
  gens.push_back(p_fold_generator(t));
  return gens;
}

// The explicit socle coset exhibited for the non-regular cases: for
// n = pq + r with r in [0, p-2] the exponent vector (d^{pq-1}, (d-1)^{n-pq+1});
// for n = pq + p - 1 the vector (d^{pq-1}, (d-1)^{p-1}, d-2).
inline Partition socle_witness(int n, int d, long p) {
  int r = n % static_cast<int>(p);
  std::vector<int> parts;
  if (r != p - 1) {
    int q = n / static_cast<int>(p);
    parts.insert(parts.end(), static_cast<int>(p) * q - 1, d);
    parts.insert(parts.end(), n - static_cast<int>(p) * q + 1, d - 1);
  } else {
    int q = (n - (static_cast<int>(p) - 1)) / static_cast<int>(p);
    parts.insert(parts.end(), static_cast<int>(p) * q - 1, d);
    parts.insert(parts.end(), static_cast<int>(p) - 1, d - 1);
    parts.push_back(d - 2);
  }
  return Partition(std::move(parts));
}

struct VerifyResult {
  bool agree;
  std::string detail;
};

inline VerifyResult verify_theorem(TheoremCase which, int n, int d, const FieldSpec& field) {
  if (n < 1 || d < 0) throw HypothesisViolation("need n >= 1 and d >= 0");
  long p = static_cast<long>(field.characteristic());
  TruncatedIdeal t(n, d, field);

  switch (which) {
    case TheoremCase::Thm1a: {
      if (!(p == 0 || n < p))
        throw HypothesisViolation("thm1a requires char 0 or n < p");
      auto cert = certify_generation(power_sum_generators(t), t);
      return {cert.generates, "generation certificate: " + cert.verdict()};
    }
    case TheoremCase::Thm1b: {
      if (p == 0) throw HypothesisViolation("thm1b requires positive characteristic");
      if (n > 2 * p - 1) throw HypothesisViolation("thm1b requires n <= 2p-1");
      auto cert = certify_generation(prescribed_generators(t), t);
      return {cert.generates, "generation certificate: " + cert.verdict()};
    }
    case TheoremCase::Thm2a: {
      if (!(p == 0 || n < p))
        throw HypothesisViolation("thm2a requires n! invertible (char 0 or n < p)");
      auto gens = power_sum_generators(t);
      bool reg = is_regular_sequence(gens, n, field);
      bool gen = certify_generation(gens, t).generates;
      return {reg && gen, std::string("regular sequence: ") + (reg ? "yes" : "no") +
                              ", generates: " + (gen ? "yes" : "no")};
    }
    case TheoremCase::Thm2b: {
      if (p == 0 || n < p) throw HypothesisViolation("thm2b requires n >= p > 0");
      int r = n % static_cast<int>(p);
      if (r != p - 1 && d < 1)
        throw HypothesisViolation("thm2b(i) requires d >= 1");
      if (r == p - 1 && d < 2)
        throw HypothesisViolation("thm2b(ii) (n = -1 mod p) requires d >= 2");
      Partition w = socle_witness(n, d, p);
      bool in_socle = true;
      for (int j = 1; j <= n && in_socle; ++j) {
        SymPolynomial prod = sym_mul(elementary_symmetric(j, n, field),
                                     SymPolynomial::monomial(w, field.one(), field));
        in_socle = contains(t, prod);
      }
      std::size_t dim = socle(t).total;
      return {in_socle && dim >= 2,
              "socle dim " + std::to_string(dim) + ", witness " + w.to_string() +
                  (in_socle ? " verified" : " NOT in socle")};
    }
    case TheoremCase::Cor: {
      if (p == 0) throw HypothesisViolation("cor requires positive characteristic");
      bool hyp = (p <= n && n <= 2 * p - 2 && d >= 1) || (n == 2 * p - 1 && d >= 2);
      if (!hyp)
        throw HypothesisViolation("cor requires p <= n <= 2p-2, d >= 1 or n = 2p-1, d >= 2");
      auto mg = min_generators(t);
      bool gen = certify_generation(prescribed_generators(t), t).generates;
      return {mg.total == static_cast<std::size_t>(n + 1) && gen,
              "min generators " + std::to_string(mg.total) + " (expected " +
                  std::to_string(n + 1) + ")"};
    }
    case TheoremCase::Rem: {
      if (p == 0 || n != 2 * p - 1 || d != 1)
        throw HypothesisViolation("rem requires d = 1 and n = 2p-1");
      std::vector<SymPolynomial> gens;
      for (int i = 2; i <= n; ++i) gens.push_back(power_sum(i, n, field));
      gens.push_back(p_fold_generator(t));
      auto mg = min_generators(t);
      bool reg = is_regular_sequence(gens, n, field);
      bool gen = certify_generation(gens, t).generates;
      bool frob = sym_pow(power_sum(2, n, field), static_cast<int>(p)) ==
                  power_sum(2 * static_cast<int>(p), n, field);
      return {mg.total == static_cast<std::size_t>(n) && reg && gen && frob,
              "min generators " + std::to_string(mg.total) + ", regular sequence: " +
                  (reg ? "yes" : "no") + ", P_2^p == P_2p: " + (frob ? "yes" : "no")};
    }
    case TheoremCase::Serre: {
      if (d < 1) throw HypothesisViolation("serre requires d >= 1");
      bool collapse = serre_collapses(n, d, field);
      bool expected = d >= n - 1;
      return {collapse == expected,
              std::string("collapse predicate ") + (collapse ? "true" : "false") +
                  ", d >= n-1 is " + (expected ? "true" : "false")};
    }
  }
  throw std::logic_error("verify_theorem: unhandled case");
}

}  // namespace trunsym
