#include "parkspace/exact.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace parkspace {

LaurentPoly q_int(long a) {
  if (a == 0) return LaurentPoly();
  if (a > 0) return LaurentPoly(0, Poly(std::vector<Rational>(a, Rational(1))));
  // [-a]_q = -q^{-a} [a]_q, i.e. coefficients -1 from q^{a} up to q^{-1}
  return LaurentPoly(a, Poly(std::vector<Rational>(-a, Rational(-1))));
}

Poly q_int_poly(long a) {
  if (a < 0) throw std::domain_error("q_int_poly: negative argument");
  return Poly(std::vector<Rational>(a, Rational(1)));
}

Poly one_minus_q_pow(long a) {
  Poly p = Poly(1) - Poly::monomial(Rational(1), a);
  return p;
}

namespace {
std::map<long, Poly> g_cyclotomic_cache;
std::mutex g_cyclotomic_mutex;

Poly compute_cyclotomic(long d);

const Poly& cyclotomic_locked(long d) {
  auto it = g_cyclotomic_cache.find(d);
  if (it != g_cyclotomic_cache.end()) return it->second;
  Poly p = compute_cyclotomic(d);
  return g_cyclotomic_cache.emplace(d, std::move(p)).first->second;
}

Poly compute_cyclotomic(long d) {
  // q^d - 1 divided by the product of Phi_e over proper divisors e of d
  Poly p = Poly::monomial(Rational(1), d) - Poly(1);
  for (long e : divisors(d)) {
    if (e == d) continue;
    p = p.divexact(cyclotomic_locked(e));
  }
  return p;
}
}  // namespace

const Poly& cyclotomic(long d) {
  if (d < 1) throw std::domain_error("cyclotomic: d must be >= 1");
  std::lock_guard<std::mutex> lock(g_cyclotomic_mutex);
  return cyclotomic_locked(d);
}

Poly q_binomial(long i, long j, long base_exp) {
  if (j < 0 || j > i) throw std::domain_error("q_binomial: need 0 <= j <= i");
  if (base_exp < 1) throw std::domain_error("q_binomial: base exponent must be >= 1");
  // grow [i-j+t choose t] for t = 1..j; every intermediate is a polynomial
  Poly r(1);
  for (long t = 1; t <= j; ++t) {
    r = (r * one_minus_q_pow((i - j + t) * base_exp)).divexact(one_minus_q_pow(t * base_exp));
  }
  return r;
}

long cyclotomic_valuation(const Poly& p, long d) {
  if (p.is_zero()) throw std::domain_error("cyclotomic_valuation of zero polynomial");
  const Poly& phi = cyclotomic(d);
  Poly cur = p;
  long v = 0;
  while (true) {
    auto [q, r] = cur.divmod(phi);
    if (!r.is_zero()) return v;
    cur = std::move(q);
    ++v;
  }
}

LaurentQuotientResult laurent_quotient_test(const std::vector<long>& a,
                                            const std::vector<long>& b) {
  LaurentQuotientResult res;
  for (long bi : b)
    if (bi <= 0) throw std::domain_error("laurent_quotient_test: b_i must be positive");
  for (long ai : a) {
    if (ai == 0) {
      res.is_laurent = true;
      res.zero_factor = true;
      return res;
    }
  }
  std::set<long> T;
  for (long bi : b)
    for (long d : divisors(bi))
      if (d > 1) T.insert(d);
  res.is_laurent = true;
  for (long d : T) {
    long N = std::count_if(a.begin(), a.end(), [d](long ai) { return std::labs(ai) % d == 0; });
    long D = std::count_if(b.begin(), b.end(), [d](long bi) { return bi % d == 0; });
    res.table.push_back({d, N, D});
    if (N < D && res.is_laurent) {
      res.is_laurent = false;
      res.failing_divisor = d;
    }
  }
  return res;
}

bool has_integer_coeffs(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

bool has_nonneg_integer_coeffs(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(Integer n, long k) {
  if (k < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace parkspace
