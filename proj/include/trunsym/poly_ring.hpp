#pragma once

#include <map>
#include <vector>

#include "trunsym/matrix.hpp"
#include "trunsym/orbit.hpp"

namespace trunsym {

// Exponent tuples of degree k in n variables, descending lexicographic
// (x_1^k first). Fixed globally so echelon forms are reproducible.
inline std::vector<std::vector<int>> monomials_of_degree(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int rem, int slots) -> void {
    if (slots == 1) {
      acc.push_back(rem);
      out.push_back(acc);
      acc.pop_back();
      return;
    }
    for (int e = rem; e >= 0; --e) {
      acc.push_back(e);
      self(self, rem - e, slots - 1);
      acc.pop_back();
    }
  };
  if (k >= 0 && n >= 1) rec(rec, k, n);
  return out;
}

// Echelonized degree-k slice of the ideal generated by homogeneous dense
// polynomials, with columns indexed by degree-k monomials.
struct GradedIdealSlice {
  int degree;
  std::vector<std::vector<int>> monomials;  // column order
  ExactMatrix basis;                        // echelonized
  std::vector<DensePolynomial> generators;
};

namespace detail {

inline SparseRow dense_to_row(const DensePolynomial& f,
                              const std::map<std::vector<int>, std::size_t>& col_of) {
  SparseRow r;
  for (const auto& [e, c] : f.terms()) {
    auto it = col_of.find(e);
    if (it == col_of.end())
      throw DimensionMismatch("dense_to_row: term outside the graded slice");
    r.emplace_back(it->second, c);
  }
  std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

}  // namespace detail

inline GradedIdealSlice ideal_slice(const std::vector<DensePolynomial>& gens, int k, int n,
                                    const FieldSpec& field) {
  for (const auto& g : gens) {
    if (g.n() != n || g.field() != field)
      throw DimensionMismatch("ideal_slice: generator dimension/field mismatch");
    if (!g.is_homogeneous() || g.is_zero())
      throw std::invalid_argument("ideal_slice: generators must be nonzero homogeneous");
  }
  auto monomials = monomials_of_degree(k, n);
  std::map<std::vector<int>, std::size_t> col_of;
  for (std::size_t j = 0; j < monomials.size(); ++j) col_of[monomials[j]] = j;

  ExactMatrix m(monomials.size(), field);
  for (const auto& g : gens) {
    int e = g.degree();
    if (e > k) continue;
    for (const auto& mono : monomials_of_degree(k - e, n)) {
      DensePolynomial shifted(n, field);
      for (const auto& [t, c] : g.terms()) {
        std::vector<int> te(t);
        for (int i = 0; i < n; ++i) te[i] += mono[i];
        shifted.add_term(te, c);
      }
      m.add_row(detail::dense_to_row(shifted, col_of));
    }
  }
  return GradedIdealSlice{k, std::move(monomials), echelonize(m), gens};
}

inline DensePolynomial variable_power(int var, int e, int n, const FieldSpec& field) {
  DensePolynomial f(n, field);
  std::vector<int> t(n, 0);
  t[var] = e;
  f.add_term(t, field.one());
  return f;
}

inline std::vector<DensePolynomial> elementary_symmetric_dense(int n, const FieldSpec& field) {
  std::vector<DensePolynomial> gens;
  for (int k = 1; k <= n; ++k)
    gens.push_back(expand_to_monomials(elementary_symmetric(k, n, field)));
  return gens;
}

inline bool slice_contains(const GradedIdealSlice& slice, const DensePolynomial& f) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous() || f.degree() != slice.degree)
    throw DimensionMismatch("slice_contains: polynomial not homogeneous of the slice degree");
  std::map<std::vector<int>, std::size_t> col_of;
  for (std::size_t j = 0; j < slice.monomials.size(); ++j) col_of[slice.monomials[j]] = j;
  return in_row_space(slice.basis, detail::dense_to_row(f, col_of));
}

// Membership of x_1^n and x_1^{n-1} in (s_1, ..., s_n); the expected answer
// is (true, false) over any field.
inline std::pair<bool, bool> powers_lemma_check(int n, const FieldSpec& field) {
  if (n < 1) throw std::invalid_argument("powers_lemma_check: need n >= 1");
  auto gens = elementary_symmetric_dense(n, field);
  bool hi = slice_contains(ideal_slice(gens, n, n, field), variable_power(0, n, n, field));
  bool lo = slice_contains(ideal_slice(gens, n - 1, n, field),
                           variable_power(0, n - 1, n, field));
  return {hi, lo};
}

// Collapse predicate of the associated spectral sequence: membership of
// x_1^{d+1} in (s_1, ..., s_n). Computed, not assumed; it should coincide
// with d >= n-1.
inline bool serre_collapses(int n, int d, const FieldSpec& field = FieldSpec::rationals()) {
  if (n < 1 || d < 1) throw std::invalid_argument("serre_collapses: need n, d >= 1");
  auto gens = elementary_symmetric_dense(n, field);
  return slice_contains(ideal_slice(gens, d + 1, n, field), variable_power(0, d + 1, n, field));
}

}  // namespace trunsym
