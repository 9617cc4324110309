#include "parkspace/certify.hpp"

#include <stdexcept>

namespace parkspace {

BinomialCertificate binomial_basis(const Poly& g) {
  BinomialCertificate cert;
  long r = std::max<long>(g.degree(), 0);
  cert.coeffs.resize(r + 1);
  cert.all_nonneg_integers = true;
  for (long i = 0; i <= r; ++i) {
    Rational v = g.eval(Rational(i));
    for (long j = 0; j < i; ++j) v -= cert.coeffs[j] * Rational(binomial(Integer(i), j));
    cert.coeffs[i] = v;
    cert.all_nonneg_integers =
        cert.all_nonneg_integers && v.get_den() == 1 && v >= 0;
  }
  return cert;
}

Poly binomial_basis_reconstruct(const std::vector<Rational>& coeffs) {
  Poly total;
  Poly basis(1);  // binom(t, 0)
  Poly t = Poly::monomial(Rational(1), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0)
      basis = basis * (t - Poly(Rational(static_cast<long>(i) - 1)))
                  .scaled(Rational(1, static_cast<long>(i)));
    total += basis.scaled(coeffs[i]);
  }
  return total;
}

UPoly q_binomial_basis_element(long i, long base_exp) {
  UPoly b(1);
  for (long l = 1; l <= i; ++l) {
    // (1 - u q^{(1-l)M}) / (1 - q^{lM}): the monomial q^{(1-l)M} has a
    // nonpositive exponent for l >= 1, so build it as a fraction
    RationalFunction top = l == 1 ? RationalFunction(1)
                                  : RationalFunction(Poly(1),
                                                     Poly::monomial(Rational(1), (l - 1) * base_exp));
    RationalFunction den(one_minus_q_pow(l * base_exp));
    UPoly factor(std::vector<RationalFunction>{RationalFunction(1) / den, -top / den});
    b *= factor;
  }
  return b;
}

QBinomialCertificate q_binomial_basis(const UPoly& h, long base_exp) {
  if (base_exp < 1) throw std::invalid_argument("q_binomial_basis needs base_exp >= 1");
  QBinomialCertificate cert;
  cert.base_exp = base_exp;
  long r = std::max<long>(h.degree(), 0);
  cert.coeffs.resize(r + 1);
  cert.all_in_nq = true;
  for (long i = 0; i <= r; ++i) {
    RationalFunction v =
        substitute_u(h, RationalFunction(Poly::monomial(Rational(1), i * base_exp)));
    for (long j = 0; j < i; ++j)
      v -= RationalFunction(q_binomial(i, j, base_exp)) * cert.coeffs[j];
    cert.coeffs[i] = v;
    cert.all_in_nq =
        cert.all_in_nq && v.is_polynomial() && has_nonneg_integer_coeffs(v.as_poly());
  }
  return cert;
}

UPoly scale_u(const UPoly& h, const RationalFunction& s) {
  std::vector<RationalFunction> c(h.coeffs());
  RationalFunction pw(1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= pw;
    pw *= s;
  }
  return UPoly(std::move(c));
}

Poly shift_variable(const Poly& f, long shift) {
  Poly result;
  Poly t_plus = Poly::monomial(Rational(1), 1) + Poly(Rational(shift));
  for (long i = f.degree(); i >= 0; --i) result = result * t_plus + Poly(f.coeff(i));
  return result;
}

std::optional<ResidueCondition> period_enumerate(const Poly& f, long period, long modulus_hint) {
  if (period < 1 || modulus_hint < 1 || period % modulus_hint != 0)
    throw std::invalid_argument("period must be a positive multiple of the modulus");
  Poly g = shift_variable(f, period) - f;
  if (!binomial_basis(g).all_nonneg_integers) return std::nullopt;
  ResidueCondition c;
  c.modulus = period;
  for (long i = 1; i <= period; ++i) {
    Rational v = f.eval(Rational(i));
    if (v.get_den() == 1 && v >= 0) c.residues.push_back(i);
  }
  c.canonicalize();
  return c;
}

Poly catalan_counting_polynomial(const ReflectionGroupData& w, bool dual) {
  Poly t = Poly::monomial(Rational(1), 1);
  Poly v(1);
  Rational scale(1);
  for (std::size_t i = 0; i < w.degrees.size(); ++i) {
    long off = dual ? -w.codegrees[i] - 1 : w.degrees[i] - 1;
    v *= t + Poly(Rational(off));
    scale /= Rational(w.degrees[i]);
  }
  return v.scaled(scale);
}

Json binomial_certificate_to_json(const BinomialCertificate& c) {
  Json coeffs = Json::array();
  for (const auto& v : c.coeffs) coeffs.push_back(rational_to_json(v));
  return Json{{"basis", "binomial"},
              {"coeffs", coeffs},
              {"certified", c.all_nonneg_integers}};
}

Json q_binomial_certificate_to_json(const QBinomialCertificate& c) {
  Json coeffs = Json::array();
  for (const auto& v : c.coeffs) coeffs.push_back(rational_function_to_json(v));
  return Json{{"basis", "q-binomial"},
              {"base_exp", c.base_exp},
              {"coeffs", coeffs},
              {"certified", c.all_in_nq}};
}

}  // namespace parkspace
