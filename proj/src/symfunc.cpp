#include "parkspace/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parkspace {

Poly spec_h_q(long r, long k) {
  if (r < 0) return Poly();
  return q_binomial(k + r - 1, r);
}

Integer spec_h_ones(long r, long k) {
  if (r < 0) return 0;
  return binomial(k + r - 1, r);
}

Integer spec_e_ones(const Partition& lambda, long k) {
  Integer v = 1;
  for (long p : lambda.parts()) v *= binomial(k, p);
  return v;
}

Integer spec_m_ones(const Partition& lambda, long k) {
  if (lambda.length() > k) return 0;
  // number of distinct monomials with exponent multiset lambda in k variables
  Integer v = factorial(k) / factorial(k - lambda.length());
  long prev = -1;
  for (long p : lambda.parts()) {
    if (p != prev) {
      v /= factorial(lambda.multiplicity(p));
      prev = p;
    }
  }
  return v;
}

Integer spec_h_list_ones(const Partition& lambda, long k) {
  Integer v = 1;
  for (long p : lambda.parts()) v *= binomial(k + p - 1, p);
  return v;
}

Poly spec_schur_q(const Partition& lambda, long k) {
  if (k <= 0) return lambda.empty() ? Poly(1) : Poly();
  if (lambda.length() > k) return Poly();
  CellData cd = hooks_and_contents(lambda);
  Poly num(1), den(1);
  for (std::size_t i = 0; i < cd.hooks.size(); ++i) {
    num *= q_int_poly(k + cd.contents[i]);
    den *= q_int_poly(cd.hooks[i]);
  }
  return num.shifted(cd.n_stat).divexact(den);
}

namespace {
Poly jt_det(const std::vector<std::vector<Poly>>& m, std::size_t row, unsigned colmask,
            std::map<unsigned, Poly>& memo) {
  std::size_t l = m.size();
  if (row == l) return Poly(1);
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Poly det;
  bool neg = false;
  for (std::size_t j = 0; j < l; ++j) {
    if (colmask & (1u << j)) continue;
    Poly sub = jt_det(m, row + 1, colmask | (1u << j), memo);
    det += neg ? -(m[row][j] * sub) : m[row][j] * sub;
    neg = !neg;
  }
  memo.emplace(colmask, det);
  return det;
}
}  // namespace

Poly jacobi_trudi_oracle(const Partition& lambda, long k) {
  long l = lambda.length();
  if (l == 0) return Poly(1);
  std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
  for (long i = 0; i < l; ++i)
    for (long j = 0; j < l; ++j) m[i][j] = spec_h_q(lambda.part(i) - (i + 1) + (j + 1), k);
  std::map<unsigned, Poly> memo;
  return jt_det(m, 0, 0, memo);
}

Integer spec_schur_ones(const Partition& lambda, long k) {
  if (lambda.length() > k) return 0;
  CellData cd = hooks_and_contents(lambda);
  Rational v(1);
  for (std::size_t i = 0; i < cd.hooks.size(); ++i) {
    Rational f(k + cd.contents[i], cd.hooks[i]);
    f.canonicalize();  // mpq_class(n, d) does not reduce
    v *= f;
  }
  if (v.get_den() != 1 || v < 0)
    throw std::logic_error("spec_schur_ones: hook-content product not a nonnegative integer");
  return v.get_num();
}

Integer gcd_int_schur(long n, long k) {
  Integer g = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    Integer v = spec_schur_ones(lambda, k);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

Poly gcd_poly_schur(long n, long k) {
  auto partitions = enumerate_partitions(n);
  std::vector<Poly> specs(partitions.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(partitions.size()); ++i)
    specs[i] = spec_schur_q(partitions[i], k);
  // fold in enumeration order; gcd is associative so order only fixes ties
  Poly g;
  for (const auto& s : specs) {
    if (s.is_zero()) continue;
    g = g.is_zero() ? s.monic() : gcd_monic(g, s);
    if (g.degree() == 0) break;
  }
  return g;
}

Poly schur_quotient(const Partition& lambda, long k) {
  long d = std::gcd(lambda.size(), k);
  Poly divisor = q_int_poly(k).divexact(q_int_poly(d));
  Poly spec = spec_schur_q(lambda, k);
  if (spec.is_zero()) return spec;
  Poly quot = spec.divexact(divisor);
  if (!has_nonneg_integer_coeffs(quot))
    throw std::logic_error("schur_quotient: quotient leaves N[q]");
  return quot;
}

bool is_unimodal(const std::vector<Rational>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i - 1] <= seq[i]) ++i;
  while (i < seq.size() && seq[i - 1] >= seq[i]) ++i;
  return i >= seq.size();
}

UnimodalityVerdict unimodality_check(const Partition& lambda, long k) {
  Poly f = schur_quotient(lambda, k);
  std::vector<Rational> even, odd;
  for (long i = 0; i <= f.degree(); ++i)
    (i % 2 == 0 ? even : odd).push_back(f.coeff(i));
  UnimodalityVerdict v;
  v.even_ok = is_unimodal(even);
  v.odd_ok = is_unimodal(odd);
  v.whole_ok = is_unimodal(std::vector<Rational>(f.coeffs()));
  return v;
}

namespace {
using MnKey = std::pair<std::vector<long>, std::vector<long>>;
std::map<MnKey, Integer> g_mn_cache;
std::mutex g_mn_mutex;

Partition from_beta(std::vector<long> beta) {
  // beta numbers are distinct and sorted ascending; width = beta.size()
  std::sort(beta.begin(), beta.end());
  std::vector<long> parts;
  long L = static_cast<long>(beta.size());
  for (long i = L - 1; i >= 0; --i) {
    long part = beta[i] - i;
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Integer mn_rec(const Partition& lambda, const std::vector<long>& mu_rest) {
  if (lambda.size() == 0) return 1;
  MnKey key{lambda.parts(), mu_rest};
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    auto it = g_mn_cache.find(key);
    if (it != g_mn_cache.end()) return it->second;
  }
  long t = mu_rest.front();
  std::vector<long> rest(mu_rest.begin() + 1, mu_rest.end());
  // beta numbers: b_i = lambda_i + (L - i), rows enumerated top to bottom
  long L = lambda.length();
  std::vector<long> beta(L);
  for (long i = 0; i < L; ++i) beta[i] = lambda.part(i) + (L - 1 - i);
  Integer total = 0;
  for (long i = 0; i < L; ++i) {
    long nb = beta[i] - t;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    long height = static_cast<long>(
        std::count_if(beta.begin(), beta.end(), [&](long b) { return nb < b && b < beta[i]; }));
    std::vector<long> nbeta = beta;
    nbeta[i] = nb;
    Integer sub = mn_rec(from_beta(std::move(nbeta)), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  std::lock_guard<std::mutex> lock(g_mn_mutex);
  g_mn_cache.emplace(std::move(key), total);
  return total;
}
}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return mn_rec(lambda, mu.parts());
}

}  // namespace parkspace
