#ifndef PARKSPACE_CERTIFY_HPP
#define PARKSPACE_CERTIFY_HPP

#include <optional>
#include <vector>

#include "parkspace/exact.hpp"
#include "parkspace/groups.hpp"
#include "parkspace/serialize.hpp"

namespace parkspace {

/// Expansion g(t) = sum_i b_i binom(t, i); if every b_i is a nonnegative
/// integer then g maps N to N (sufficient, not necessary).
struct BinomialCertificate {
  std::vector<Rational> coeffs;
  bool all_nonneg_integers = false;
};
BinomialCertificate binomial_basis(const Poly& g);
/// Reconstruct sum_i b_i binom(t, i) as a polynomial in t.
Poly binomial_basis_reconstruct(const std::vector<Rational>& coeffs);

/// Expansion h(u) = sum_i c_i B_i(u) with basis elements
/// B_i(u) = prod_{l=1}^{i} (1 - u q^{(1-l)M}) / (1 - q^{lM});
/// substituting u = q^{pM} turns B_i into the Gaussian binomial [p choose i]
/// in base q^M.  If every c_i lies in N[q] then h(q^{pM}) is in N[q] for all
/// nonnegative p.
struct QBinomialCertificate {
  long base_exp = 1;  // M
  std::vector<RationalFunction> coeffs;
  bool all_in_nq = false;
};
QBinomialCertificate q_binomial_basis(const UPoly& h, long base_exp);
UPoly q_binomial_basis_element(long i, long base_exp);

/// Substitute u -> s u (coefficient of u^i picks up s^i).
UPoly scale_u(const UPoly& h, const RationalFunction& s);
/// Substitute t -> t + shift.
Poly shift_variable(const Poly& f, long shift);

/// When f(t+L) - f(t) certifies as N -> N, the set {k >= 1 : f(k) in N} is
/// periodic with period L; returns it as a residue condition, or nullopt when
/// the certificate fails (indeterminate, not refuted).
std::optional<ResidueCondition> period_enumerate(const Poly& f, long period, long modulus_hint);

/// Cat_k(W,1) (dual: Cat*_k(W,1)) as a polynomial in k.
Poly catalan_counting_polynomial(const ReflectionGroupData& w, bool dual);

Json binomial_certificate_to_json(const BinomialCertificate& c);
Json q_binomial_certificate_to_json(const QBinomialCertificate& c);

}  // namespace parkspace

#endif  // PARKSPACE_CERTIFY_HPP
