#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "trunsym/field.hpp"

namespace trunsym {

// Sparse row: (column, value) pairs sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseRow sparse_from_dense(const std::vector<Scalar>& v) {
  SparseRow r;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) r.emplace_back(j, v[j]);
  return r;
}

// Sparse matrix over an exact field. Rows share one column dimension; an
// echelonized matrix has strictly increasing pivot columns and unit pivots.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t ncols, FieldSpec field)
      : ncols_(ncols), field_(std::move(field)) {}

  void add_row(SparseRow row) {
    for (const auto& [c, v] : row)
      if (c >= ncols_) throw DimensionMismatch("ExactMatrix::add_row: column out of range");
    rows_.push_back(std::move(row));  // zero rows kept so row indices stay stable
  }

  std::size_t ncols() const { return ncols_; }
  std::size_t nrows() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const FieldSpec& field() const { return field_; }

 private:
  std::vector<SparseRow> rows_;
  std::size_t ncols_;
  FieldSpec field_;
};

namespace detail {

// r := r + c*s, sparse merge.
inline SparseRow row_axpy(const FieldSpec& F, const SparseRow& r, const Scalar& c,
                          const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      Scalar v = F.mul(c, s[j].second);
      if (v != 0) out.emplace_back(s[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = F.add(r[i].second, F.mul(c, s[j].second));
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Over Q: rescale a row so its entries are integers with content 1 and the
// leading entry is positive. Keeps forward elimination fraction-free.
inline void normalize_content(const FieldSpec& F, SparseRow& r) {
  if (!F.is_rationals() || r.empty()) return;
  Int den_lcm = 1;
  for (const auto& [c, v] : r)
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v));
  Int num_gcd = 0;
  for (const auto& [c, v] : r)
    num_gcd = boost::multiprecision::gcd(
        num_gcd, Int(boost::multiprecision::numerator(v) * (den_lcm / boost::multiprecision::denominator(v))));
  Scalar factor(den_lcm, num_gcd);
  if (r.front().second < 0) factor = -factor;
  for (auto& [c, v] : r) v *= factor;
}

// Bit-size proxy used for pivot selection over Q.
inline std::size_t scalar_size(const Scalar& v) {
  using boost::multiprecision::msb;
  Int n = boost::multiprecision::numerator(v);
  Int d = boost::multiprecision::denominator(v);
  if (n < 0) n = -n;
  std::size_t bits = 0;
  if (n != 0) bits += static_cast<std::size_t>(msb(n)) + 1;
  if (d != 0) bits += static_cast<std::size_t>(msb(d)) + 1;
  return bits;
}

}  // namespace detail

// Reduced row-echelon form of the row space. Pivots: leftmost column first;
// among candidates, the entry of smallest bit-size over Q (first candidate
// over F_p). Deterministic.
inline ExactMatrix echelonize(const ExactMatrix& m) {
  const FieldSpec& F = m.field();
  std::vector<SparseRow> work;
  for (const auto& r : m.rows())
    if (!r.empty()) work.push_back(r);
  for (auto& r : work) detail::normalize_content(F, r);

  std::vector<SparseRow> pivots;  // forward-eliminated rows, increasing pivot col
  while (!work.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      std::size_t ci = work[i].front().first, cb = work[best].front().first;
      if (ci < cb) {
        best = i;
      } else if (ci == cb && F.is_rationals() &&
                 detail::scalar_size(work[i].front().second) <
                     detail::scalar_size(work[best].front().second)) {
        best = i;
      }
    }
    SparseRow piv = std::move(work[best]);
    work.erase(work.begin() + best);
    std::size_t pc = piv.front().first;

    std::vector<SparseRow> next;
    next.reserve(work.size());
    for (auto& r : work) {
      if (r.front().first == pc) {
        Scalar c = F.neg(F.div(r.front().second, piv.front().second));
        SparseRow reduced = detail::row_axpy(F, r, c, piv);
        detail::normalize_content(F, reduced);
        if (!reduced.empty()) next.push_back(std::move(reduced));
      } else {
        next.push_back(std::move(r));
      }
    }
    work = std::move(next);
    pivots.push_back(std::move(piv));
  }

  // back-substitution and pivot normalization
  for (std::size_t i = pivots.size(); i-- > 0;) {
    Scalar pv = pivots[i].front().second;
    if (pv != F.one()) {
      Scalar s = F.inv(pv);
      for (auto& [c, v] : pivots[i]) v = F.mul(s, v);
    }
    std::size_t pc = pivots[i].front().first;
    for (std::size_t j = 0; j < i; ++j) {
      auto it = std::lower_bound(pivots[j].begin(), pivots[j].end(), pc,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != pivots[j].end() && it->first == pc)
        pivots[j] = detail::row_axpy(F, pivots[j], F.neg(it->second), pivots[i]);
    }
  }

  ExactMatrix out(m.ncols(), F);
  for (auto& r : pivots) out.add_row(std::move(r));
  return out;
}

inline std::size_t rank(const ExactMatrix& m) { return echelonize(m).nrows(); }

// Reduce v against an echelonized matrix; returns the remainder.
inline SparseRow reduce_against(const ExactMatrix& ech, SparseRow v) {
  const FieldSpec& F = ech.field();
  for (const auto& row : ech.rows()) {
    if (v.empty()) break;
    std::size_t pc = row.front().first;
    auto it = std::lower_bound(v.begin(), v.end(), pc,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != v.end() && it->first == pc)
      v = detail::row_axpy(F, v, F.neg(F.div(it->second, row.front().second)), row);
  }
  return v;
}

// True iff v lies in the row space of the echelonized matrix m.
inline bool in_row_space(const ExactMatrix& m, const SparseRow& v) {
  for (const auto& [c, val] : v)
    if (c >= m.ncols()) throw DimensionMismatch("in_row_space: vector dimension mismatch");
  return reduce_against(m, v).empty();
}

inline bool in_row_space(const ExactMatrix& m, const std::vector<Scalar>& v) {
  if (v.size() != m.ncols()) throw DimensionMismatch("in_row_space: vector dimension mismatch");
  return in_row_space(m, sparse_from_dense(v));
}

// Basis of the left kernel { x : x * m = 0 }, echelonized, with coordinates
// indexed by the rows of m. Computed by echelonizing [m | I] and keeping the
// identity halves of rows whose m-half vanished.
inline ExactMatrix left_kernel(const ExactMatrix& m) {
  const FieldSpec& F = m.field();
  std::size_t nc = m.ncols(), nr = m.nrows();
  ExactMatrix aug(nc + nr, F);
  for (std::size_t i = 0; i < nr; ++i) {
    SparseRow r = m.rows()[i];
    r.emplace_back(nc + i, F.one());
    aug.add_row(std::move(r));
  }
  ExactMatrix ech = echelonize(aug);
  ExactMatrix ker(nr, F);
  for (const auto& row : ech.rows()) {
    if (row.front().first < nc) continue;
    SparseRow shifted;
    shifted.reserve(row.size());
    for (const auto& [c, v] : row) shifted.emplace_back(c - nc, v);
    ker.add_row(std::move(shifted));
  }
  return ker;
}

}  // namespace trunsym
