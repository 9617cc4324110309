#ifndef PARKSPACE_EXACT_HPP
#define PARKSPACE_EXACT_HPP

#include <gmpxx.h>

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parkspace {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over a field K.  Coefficient i is the
/// coefficient of x^i; the zero polynomial is the empty vector and no
/// trailing zero coefficient is stored, so equality is structural.
template <class K>
class PolyT {
 public:
  PolyT() = default;
  PolyT(long v) {
    K k(v);
    if (!(k == K(0))) coeffs_.push_back(std::move(k));
  }
  explicit PolyT(K v) {
    if (!(v == K(0))) coeffs_.push_back(std::move(v));
  }
  explicit PolyT(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyT monomial(K coeff, std::size_t deg) {
    PolyT p;
    if (coeff == K(0)) return p;
    p.coeffs_.assign(deg + 1, K(0));
    p.coeffs_[deg] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const K& coeff(std::size_t i) const {
    static const K kzero = K(0);
    return i < coeffs_.size() ? coeffs_[i] : kzero;
  }
  const std::vector<K>& coeffs() const { return coeffs_; }

  const K& lead() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
  }

  friend bool operator==(const PolyT& a, const PolyT& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  PolyT& operator+=(const PolyT& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  PolyT& operator-=(const PolyT& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator-(const PolyT& a) {
    PolyT r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return PolyT();
    PolyT r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == K(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

  PolyT scaled(const K& c) const {
    if (c == K(0)) return PolyT();
    PolyT r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  // quotient/remainder with deg(rem) < deg(divisor); requires K division
  std::pair<PolyT, PolyT> divmod(const PolyT& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyT rem = *this;
    PolyT quot;
    long dd = divisor.degree();
    if (rem.degree() >= dd)
      quot.coeffs_.assign(rem.degree() - dd + 1, K(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
      K f = rem.lead() / divisor.lead();
      long shift = rem.degree() - dd;
      quot.coeffs_[shift] = f;
      for (long i = 0; i <= dd; ++i)
        rem.coeffs_[shift + i] -= f * divisor.coeffs_[i];
      rem.trim();
    }
    quot.trim();
    return {quot, rem};
  }

  // exact division; throws if the remainder is nonzero
  PolyT divexact(const PolyT& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  PolyT monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / lead());
  }

  K eval(const K& x) const {
    K r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
  }

  // substitute x -> x^m
  PolyT compose_power(std::size_t m) const {
    if (is_zero()) return *this;
    PolyT r;
    r.coeffs_.assign((coeffs_.size() - 1) * m + 1, K(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * m] = coeffs_[i];
    r.trim();
    return r;
  }

  // multiply by x^s
  PolyT shifted(std::size_t s) const {
    if (is_zero()) return *this;
    PolyT r;
    r.coeffs_.assign(coeffs_.size() + s, K(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + s] = coeffs_[i];
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
  }
  std::vector<K> coeffs_;
};

template <class K>
PolyT<K> gcd_monic(PolyT<K> a, PolyT<K> b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using Poly = PolyT<Rational>;

/// Laurent polynomial: coefficient list starting at q^{min_deg}.  When the
/// value is nonzero the constant term of `p` is nonzero; zero is represented
/// by a zero `p` and min_deg 0.
struct LaurentPoly {
  long min_deg = 0;
  Poly p;

  LaurentPoly() = default;
  LaurentPoly(long min_deg_, Poly p_) : min_deg(min_deg_), p(std::move(p_)) {
    normalize();
  }
  explicit LaurentPoly(Poly p_) : LaurentPoly(0, std::move(p_)) {}

  bool is_zero() const { return p.is_zero(); }
  long max_deg() const { return min_deg + p.degree(); }

  void normalize() {
    if (p.is_zero()) {
      min_deg = 0;
      return;
    }
    std::size_t low = 0;
    while (p.coeff(low) == Rational(0)) ++low;
    if (low > 0) {
      std::vector<Rational> c(p.coeffs().begin() + low, p.coeffs().end());
      p = Poly(std::move(c));
      min_deg += static_cast<long>(low);
    }
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg == b.min_deg && a.p == b.p;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.min_deg + b.min_deg, a.p * b.p);
  }
};

/// Reduced fraction of polynomials over Q; the denominator is monic and
/// coprime to the numerator, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long v) : num_(v), den_(1) {}
  explicit RationalFunction(Rational v) : num_(std::move(v)), den_(1) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
  }
  static RationalFunction from_laurent(const LaurentPoly& l) {
    if (l.is_zero()) return RationalFunction();
    if (l.min_deg >= 0) return RationalFunction(l.p.shifted(l.min_deg));
    return RationalFunction(l.p, Poly::monomial(Rational(1), -l.min_deg));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  const Poly& as_poly() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
    return num_;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  // substitute q -> q^m
  RationalFunction compose_power(std::size_t m) const {
    return RationalFunction(num_.compose_power(m), den_.compose_power(m));
  }

  // evaluate at a point where the reduced denominator does not vanish
  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole of rational function");
    return num_.eval(x) / d;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = gcd_monic(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    Rational lc = den_.lead();
    if (lc != 1) {
      Rational inv = Rational(1) / lc;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
  Poly num_, den_;
};

/// Polynomial in u with coefficients in Q(q).
using UPoly = PolyT<RationalFunction>;

inline RationalFunction substitute_u(const UPoly& h, const RationalFunction& u) {
  RationalFunction r;
  for (std::size_t i = h.coeffs().size(); i-- > 0;) r = r * u + h.coeff(i);
  return r;
}

// ---- q-series primitives ----

/// q-integer [a]_q; for a < 0 this is the Laurent polynomial -q^{-a}[-a]_q.
LaurentPoly q_int(long a);

/// [a]_q as an ordinary polynomial; requires a >= 0.
Poly q_int_poly(long a);

/// q^d - 1 style helper: the polynomial 1 - q^a (a >= 1).
Poly one_minus_q_pow(long a);

/// d-th cyclotomic polynomial, memoized (safe for concurrent reads).
const Poly& cyclotomic(long d);

/// Gaussian binomial [i choose j] in base q^M; polynomial with nonnegative
/// integer coefficients.
Poly q_binomial(long i, long j, long base_exp = 1);

/// Multiplicity of Phi_d in a nonzero polynomial.
long cyclotomic_valuation(const Poly& p, long d);

struct LaurentQuotientResult {
  bool is_laurent = false;
  bool zero_factor = false;
  long failing_divisor = 0;  // 0 when none
  // per-divisor table (d, N(d), D(d))
  std::vector<std::array<long, 3>> table;
};

/// Lemma-style test: is prod [a_i]_q / prod [b_i]_q a Laurent polynomial?
LaurentQuotientResult laurent_quotient_test(const std::vector<long>& a,
                                            const std::vector<long>& b);

// ---- coefficient predicates ----

bool has_integer_coeffs(const Poly& p);
bool has_nonneg_integer_coeffs(const Poly& p);

// ---- misc small-number helpers ----

Integer factorial(long n);
Integer binomial(Integer n, long k);
std::vector<long> divisors(long n);
bool is_prime(long p);

}  // namespace parkspace

#endif  // PARKSPACE_EXACT_HPP
