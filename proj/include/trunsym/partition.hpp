#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "trunsym/field.hpp"

namespace trunsym {

// Weakly decreasing exponent vector of fixed length n, indexing the orbit sum
// P_{a_1..a_n}. Trailing zeros are stored explicitly; display drops them.
class Partition {
 public:
  Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    if (parts_.empty()) throw std::invalid_argument("Partition: n must be positive");
  }

  static Partition from_unsorted(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return Partition(std::move(v));
  }

  // "P[a1,...,ar]" with trailing zeros dropped; pads with zeros to length n.
  static Partition parse(const std::string& s, int n) {
    auto lb = s.find('['), rb = s.rfind(']');
    if (s.substr(0, lb) != "P" || lb == std::string::npos || rb == std::string::npos || rb < lb)
      throw std::invalid_argument("Partition::parse: expected P[a1,a2,...], got " + s);
    std::vector<int> parts;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      parts.push_back(std::stoi(tok));
    }
    if (static_cast<int>(parts.size()) > n)
      throw std::invalid_argument("Partition::parse: more than n parts in " + s);
    parts.resize(n, 0);
    return Partition(std::move(parts));
  }

  int n() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](int i) const { return parts_[i]; }

  int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  // number of nonzero parts
  int weight() const {
    int r = 0;
    while (r < n() && parts_[r] >= 1) ++r;
    return r;
  }

  // multiplicity of the largest part
  int leading_multiplicity() const {
    int s = 1;
    while (s < n() && parts_[s] == parts_[0]) ++s;
    return s;
  }

  // n! / prod(multiplicities!) = number of distinct permutations of parts
  Int orbit_size() const {
    Int r = 1;
    for (int i = 2; i <= n(); ++i) r *= i;
    int i = 0;
    while (i < n()) {
      int j = i;
      while (j < n() && parts_[j] == parts_[i]) ++j;
      for (int m = 2; m <= j - i; ++m) r /= m;
      i = j;
    }
    return r;
  }

  // All distinct permutations of the parts, in lexicographic order.
  std::vector<std::vector<int>> distinct_permutations() const {
    std::vector<int> v = parts_;
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
      out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::string to_string() const {
    std::string s = "P[";
    int w = weight();
    if (w == 0) {
      s += "0";
    } else {
      for (int i = 0; i < w; ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
      }
    }
    return s + "]";
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

 private:
  std::vector<int> parts_;
};

// Canonical ordering: by degree, then parts in descending lexicographic order
// (so P[3] precedes P[2,1]). All reported bases and coordinate columns follow it.
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.parts() > b.parts();
  }
};

namespace detail {

inline void partitions_rec(int k, int slots, int cap, std::vector<int>& acc,
                           std::vector<Partition>& out) {
  if (slots == 0) {
    if (k == 0) {
      std::vector<int> parts = acc;
      out.emplace_back(std::move(parts));
    }
    return;
  }
  int hi = std::min(k, cap);
  for (int p = hi; p >= 0; --p) {
    if (p * slots < k) break;  // remaining slots cannot absorb k
    acc.push_back(p);
    partitions_rec(k - p, slots - 1, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

// Partitions of k into at most n parts (each <= max_part if given), as length-n
// vectors in canonical (descending lexicographic) order.
inline std::vector<Partition> partitions_of(int k, int n, int max_part = -1) {
  if (k < 0 || n < 1) return {};
  int cap = max_part < 0 ? k : max_part;
  std::vector<Partition> out;
  std::vector<int> acc;
  detail::partitions_rec(k, n, cap, acc, out);
  return out;
}

}  // namespace trunsym
