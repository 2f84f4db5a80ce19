// Acceptance gate: twelve end-to-end checks, one pass/fail line each.
// Exit status is the number of failing checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "trunsym/trunsym.hpp"

using namespace trunsym;

namespace {

int failures = 0;

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("AC%02d %-28s %s  (%.1fs%s%s)\n", id, name.c_str(), ok ? "PASS" : "FAIL", sec,
              detail.empty() ? "" : "; ", detail.c_str());
  if (!ok) ++failures;
}

Partition random_partition(std::mt19937& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  int k = deg(rng);
  std::vector<int> parts;
  int cap = k;
  for (int i = 0; i < n && k > 0; ++i) {
    std::uniform_int_distribution<int> part(k / (n - i) + (k % (n - i) ? 1 : 0), cap);
    int p = part(rng);
    parts.push_back(p);
    cap = p;
    k -= p;
  }
  parts.resize(n, 0);
  return Partition(std::move(parts));
}

SymPolynomial P(std::vector<int> parts, const FieldSpec& F) {
  return SymPolynomial::monomial(Partition(std::move(parts)), F.one(), F);
}

bool within(double seconds, double budget, std::string& detail) {
  if (seconds <= budget) return true;
  detail = "budget " + std::to_string(budget) + "s exceeded";
  return false;
}

}  // namespace

int main() {
  run(1, "oracle-equivalence", [](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260824);
    const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec(2), FieldSpec(3)};
    for (int trial = 0; trial < 500; ++trial) {
      const FieldSpec& F = fields[trial % 3];
      int n = 2 + trial % 3 + (trial % 7 == 0 ? 1 : 0);  // n in 2..4
      if (n > 4) n = 4;
      Partition a = random_partition(rng, n, 6), b = random_partition(rng, n, 6);
      auto direct = orbit_mul(a, b, F);
      auto oracle = symmetrize(dense_mul(
          expand_to_monomials(SymPolynomial::monomial(a, F.one(), F)),
          expand_to_monomials(SymPolynomial::monomial(b, F.one(), F))));
      if (direct != oracle) {
        detail = "mismatch at " + a.to_string() + " * " + b.to_string();
        return false;
      }
    }
    double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return within(sec, 30.0, detail);
  });

  run(2, "power-sum-generation", [](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 5; ++n)
      for (int d = 0; d <= 4; ++d)
        for (long p : {0L, 5L}) {
          if (p == 5 && n > 4) continue;
          FieldSpec F(p);
          TruncatedIdeal t(n, d, F);
          auto cert = certify_generation(power_sum_generators(t), t);
          if (!cert.generates || !cert.complete) {
            detail = "(" + std::to_string(n) + "," + std::to_string(d) + ") char " +
                     std::to_string(p) + ": " + cert.verdict();
            return false;
          }
        }
    double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return within(sec, 120.0, detail);
  });

  run(3, "p-fold-generator-needed", [](std::string& detail) {
    const std::pair<long, int> cases[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}};
    for (auto [p, n] : cases)
      for (int d = 1; d <= 3; ++d) {
        FieldSpec F(p);
        TruncatedIdeal t(n, d, F);
        auto without = certify_generation(power_sum_generators(t), t);
        auto with = certify_generation(prescribed_generators(t), t);
        if (without.generates || !with.generates || !with.complete) {
          detail = "(p,n,d)=(" + std::to_string(p) + "," + std::to_string(n) + "," +
                   std::to_string(d) + "): without=" + without.verdict() +
                   ", with=" + with.verdict();
          return false;
        }
      }
    return true;
  });

  run(4, "regular-sequences", [](std::string& detail) {
    for (int n = 1; n <= 5; ++n)
      for (int d = 0; d <= 4; ++d)
        for (long p : {0L, 5L}) {
          if (p == 5 && n > 4) continue;
          FieldSpec F(p);
          TruncatedIdeal t(n, d, F);
          if (!is_regular_sequence(power_sum_generators(t), n, F)) {
            detail = "(" + std::to_string(n) + "," + std::to_string(d) + ") char " +
                     std::to_string(p) + ": not regular";
            return false;
          }
        }
    return true;
  });

  run(5, "socle-obstructions", [](std::string& detail) {
    const std::tuple<long, int, int> cases[] = {
        {2, 2, 1}, {2, 4, 1}, {3, 3, 1}, {2, 3, 2}, {3, 5, 2}};
    for (auto [p, n, dmin] : cases)
      for (int d = dmin; d <= 3; ++d) {
        auto res = verify_theorem(TheoremCase::Thm2b, n, d, FieldSpec(p));
        if (!res.agree) {
          detail = "(p,n,d)=(" + std::to_string(p) + "," + std::to_string(n) + "," +
                   std::to_string(d) + "): " + res.detail;
          return false;
        }
      }
    return true;
  });

  run(6, "minimal-generator-counts", [](std::string& detail) {
    for (long p : {2L, 3L}) {
      std::vector<std::pair<int, int>> grid;
      for (int n = static_cast<int>(p); n <= 2 * static_cast<int>(p) - 2; ++n)
        for (int d : {1, 2}) grid.emplace_back(n, d);
      grid.emplace_back(2 * static_cast<int>(p) - 1, 2);
      for (auto [n, d] : grid) {
        auto mg = min_generators(TruncatedIdeal(n, d, FieldSpec(p)));
        if (mg.total != static_cast<std::size_t>(n + 1)) {
          detail = "(p,n,d)=(" + std::to_string(p) + "," + std::to_string(n) + "," +
                   std::to_string(d) + "): got " + std::to_string(mg.total);
          return false;
        }
      }
    }
    return true;
  });

  run(7, "d1-boundary-case", [](std::string& detail) {
    for (auto [p, n] : {std::pair<long, int>{2, 3}, {3, 5}}) {
      auto res = verify_theorem(TheoremCase::Rem, n, 1, FieldSpec(p));
      if (!res.agree) {
        detail = "(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + "): " + res.detail;
        return false;
      }
    }
    return true;
  });

  run(8, "variable-power-membership", [](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& F : {FieldSpec::rationals(), FieldSpec(2), FieldSpec(3), FieldSpec(5)})
      for (int n = 1; n <= 6; ++n) {
        auto [hi, lo] = powers_lemma_check(n, F);
        if (!hi || lo) {
          detail = "n=" + std::to_string(n) + " char " +
                   std::to_string(static_cast<long>(F.characteristic())) + ": got (" +
                   (hi ? "true" : "false") + "," + (lo ? "true" : "false") + ")";
          return false;
        }
      }
    double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return within(sec, 60.0, detail);
  });

  run(9, "collapse-criterion", [](std::string& detail) {
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= 6; ++d)
        if (serre_collapses(n, d) != (d >= n - 1)) {
          detail = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
          return false;
        }
    return true;
  });

  run(10, "series-identities", [](std::string& detail) {
    if (exterior_series(2, 1).to_string() != "1 + t^3 + t^5 + t^8") {
      detail = "exterior(2,1) = " + exterior_series(2, 1).to_string();
      return false;
    }
    for (int n = 1; n <= 5; ++n)
      for (int d = 0; d <= 4; ++d) {
        auto q = quotient_series(n, d);
        std::vector<int> degs;
        for (int i = 1; i <= n; ++i) degs.push_back(d + i);
        auto ci = complete_intersection_series(degs, n);
        if (!ci.polynomial || ci.series != q) {
          detail = "ci series mismatch at (" + std::to_string(n) + "," + std::to_string(d) + ")";
          return false;
        }
        auto qb = quotient_basis(TruncatedIdeal(n, d, FieldSpec::rationals()));
        for (int k = 0; k <= n * d; ++k)
          if (q.coeff(k) != static_cast<long long>(qb.by_degree.at(k).size())) {
            detail = "basis count mismatch at (" + std::to_string(n) + "," +
                     std::to_string(d) + ") degree " + std::to_string(k);
            return false;
          }
        auto e = exterior_series(n, d);
        if (e.eval_at_one() != (1LL << n) || !e.is_palindromic() ||
            e.degree() != n * (n + 2 * d)) {
          detail = "exterior series property failed at (" + std::to_string(n) + "," +
                   std::to_string(d) + ")";
          return false;
        }
      }
    return true;
  });

  run(11, "worked-example-vectors", [](std::string& detail) {
    FieldSpec F2(2);
    TruncatedIdeal t21(2, 1, F2);
    auto cert = certify_generation(
        {power_sum(2, 2, F2), power_sum(3, 2, F2), P({2, 2}, F2)}, t21);
    if (!cert.generates || !cert.complete) {
      detail = "F_2 (2,1) kernel certificate: " + cert.verdict();
      return false;
    }

    FieldSpec Q = FieldSpec::rationals();
    auto lhs = P({2, 2}, Q).scaled(Scalar(2));
    auto rhs = sym_mul(power_sum(2, 2, Q), power_sum(2, 2, Q)) -
               sym_mul(power_sum(1, 2, Q), power_sum(3, 2, Q)) +
               sym_mul(P({1, 1}, Q), power_sum(2, 2, Q));
    if (lhs != rhs) {
      detail = "redundancy identity failed: rhs = " + rhs.to_string();
      return false;
    }

    for (int d = 1; d <= 3; ++d) {
      TruncatedIdeal t(2, d, F2);
      auto c = certify_generation(
          {power_sum(d + 1, 2, F2), power_sum(d + 2, 2, F2), P({d + 1, d + 1}, F2)}, t);
      if (!c.generates || !c.complete) {
        detail = "(2," + std::to_string(d) + ") over F_2: " + c.verdict();
        return false;
      }
    }
    return true;
  });

  run(12, "binomial-divisibility", [](std::string& detail) {
    for (long p : {2L, 3L, 5L})
      for (long q : {1L, 2L}) {
        for (long s = 1; s <= p - 1; ++s)
          if (binomial(p * q + s - 1, s) % p != 0) {
            detail = "family A at p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                     ", s=" + std::to_string(s);
            return false;
          }
        for (long t = 0; t <= p - 1; ++t)
          if ((Int(p * q + t) * binomial(p * q + t - 1, t)) % p != 0) {
            detail = "family B at p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                     ", t=" + std::to_string(t);
            return false;
          }
        for (long s = 1; s <= p; ++s)
          if ((binomial(p * q + s - 2, s - 1) * Int(p - s + 1)) % p != 0) {
            detail = "family C at p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                     ", s=" + std::to_string(s);
            return false;
          }
      }
    return true;
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "OK", failures);
  return failures;
}
