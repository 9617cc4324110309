#include "parkspace/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parkspace {

// ---- symmetric groups ----

Integer phi_sym(const Partition& mu, long k) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(mu.length() - 1));
  return v;
}

RationalFunction phi_sym_graded(const Partition& mu, long k) {
  // prod_i [k]_{q^{mu_i}} divided by a single [k]_q (dimension n-1)
  RationalFunction v(1);
  Poly kq = q_int_poly(k);
  for (long a : mu.parts()) v *= RationalFunction(kq.compose_power(a));
  return v / RationalFunction(kq);
}

UPoly phi_hat_sym(const Partition& mu) {
  // prod_i (1 - u^{mu_i})/(1 - q^{mu_i}) divided by (1-u)/(1-q)
  UPoly num(1);
  RationalFunction scale(1);
  for (long a : mu.parts()) {
    UPoly factor = UPoly(1) - UPoly::monomial(RationalFunction(1), a);
    num *= factor;
    scale /= RationalFunction(one_minus_q_pow(a));
  }
  UPoly den = UPoly(1) - UPoly::monomial(RationalFunction(1), 1);
  return num.divexact(den).scaled(scale * RationalFunction(one_minus_q_pow(1)));
}

namespace {
bool coeff_is_valid(const RationalFunction& c) {
  return c.is_polynomial() && has_nonneg_integer_coeffs(c.as_poly());
}

void finalize(Decomposition& d) {
  d.representation_valid = true;
  for (auto& e : d.entries) {
    e.valid = coeff_is_valid(e.coeff);
    d.representation_valid = d.representation_valid && e.valid;
  }
}
}  // namespace

Decomposition sym_irr_decomposition(long n, long k, bool graded) {
  Decomposition d;
  d.group = "S" + std::to_string(n);
  d.k = k;
  d.basis = "irreducible";
  d.graded = graded;
  for (const auto& lambda : enumerate_partitions(n)) {
    RationalFunction c;
    if (graded) {
      c = RationalFunction(spec_schur_q(lambda, k)) / RationalFunction(q_int_poly(k));
    } else {
      c = RationalFunction(Rational(spec_schur_ones(lambda, k)) / Rational(k));
    }
    d.entries.push_back({lambda.to_string(), c, false});
  }
  finalize(d);
  return d;
}

Decomposition sym_perm_decomposition(long n, long k) {
  Decomposition d;
  d.group = "S" + std::to_string(n);
  d.k = k;
  d.basis = "permutation";
  d.graded = false;
  for (const auto& lambda : enumerate_partitions(n)) {
    Rational c = Rational(spec_m_ones(lambda, k)) / Rational(k);
    d.entries.push_back({lambda.to_string(), RationalFunction(c), false});
  }
  finalize(d);
  return d;
}

namespace {
// assignments of the cycles of mu to the blocks of lambda filling each block
Integer count_block_fillings(const std::vector<long>& cycles, std::size_t idx,
                             std::vector<long>& room) {
  if (idx == cycles.size()) {
    for (long r : room)
      if (r != 0) return 0;
    return 1;
  }
  Integer total = 0;
  for (std::size_t j = 0; j < room.size(); ++j) {
    if (room[j] < cycles[idx]) continue;
    room[j] -= cycles[idx];
    total += count_block_fillings(cycles, idx + 1, room);
    room[j] += cycles[idx];
  }
  return total;
}
}  // namespace

Integer sym_perm_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("sym_perm_character: sizes differ");
  std::vector<long> room = lambda.parts();
  return count_block_fillings(mu.parts(), 0, room);
}

// ---- wreath products ----

Integer phi_wreath(const MultiPartition& mu, long k) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(mu.component(0).length()));
  return v;
}

namespace {
// pi-hat image of the power sum p_l in the r-th variable set (m components):
// a linear polynomial in u^l over Q(q)
UPoly pi_hat_power_sum(long l, long r, long m) {
  RationalFunction den(one_minus_q_pow(m * l));
  std::vector<RationalFunction> c(l + 1);
  if (r == 0) {
    c[0] = RationalFunction(1) / den;
    c[l] = -RationalFunction(Poly::monomial(Rational(1), (m - 1) * l)) / den;
  } else {
    c[0] = RationalFunction(Poly::monomial(Rational(1), r * l)) / den;
    c[l] = -RationalFunction(Poly::monomial(Rational(1), (r - 1) * l)) / den;
  }
  return UPoly(std::move(c));
}

// pi-hat image of s_lambda(x^{(r)}) via s_lambda = sum_mu chi^lambda_mu p_mu / z_mu
UPoly pi_hat_schur(const Partition& lambda, long r, long m) {
  UPoly total;
  for (const auto& mu : enumerate_partitions(lambda.size())) {
    Integer chi = mn_character(lambda, mu);
    if (chi == 0) continue;
    UPoly term(1);
    for (long l : mu.parts()) term *= pi_hat_power_sum(l, r, m);
    total += term.scaled(RationalFunction(Rational(chi) / Rational(z_lambda(mu))));
  }
  return lambda.empty() ? UPoly(1) : total;
}
}  // namespace

UPoly g_m1n_hat_multiplicity(const MultiPartition& lambda) {
  long m = lambda.component_count();
  UPoly total(1);
  for (long r = 0; r < m; ++r) total *= pi_hat_schur(lambda.component(r), r, m);
  return total;
}

RationalFunction g_m1n_hat_at(const MultiPartition& lambda, long k) {
  return substitute_u(g_m1n_hat_multiplicity(lambda),
                      RationalFunction(Poly::monomial(Rational(1), k)));
}

Rational g_m1n_mult_ungraded(const MultiPartition& lambda, long k) {
  long m = lambda.component_count();
  Rational v(1);
  for (long r = 0; r < m; ++r) {
    CellData cd = hooks_and_contents(lambda.component(r));
    Rational top = r == 0 ? Rational(m + k - 1, m) : Rational(k - 1, m);
    top.canonicalize();  // mpq_class(n, d) does not reduce
    for (std::size_t i = 0; i < cd.hooks.size(); ++i)
      v *= (top + Rational(cd.contents[i])) / Rational(cd.hooks[i]);
  }
  return v;
}

Poly g_m1n_mult_graded_fuss(const MultiPartition& lambda, long k) {
  long m = lambda.component_count();
  if (k < 1 || (k - 1) % m != 0)
    throw std::invalid_argument("graded Fuss multiplicity needs k = pm + 1");
  long p = (k - 1) / m;
  Poly v = spec_schur_q(lambda.component(0), p + 1).compose_power(m);
  for (long r = 1; r < m; ++r) {
    Poly s = spec_schur_q(lambda.component(r), p).compose_power(m);
    v *= s.shifted(r * lambda.component(r).size());
  }
  return v;
}

Decomposition g_m1n_irr_decomposition(long m, long n, long k, bool graded) {
  Decomposition d;
  d.group = "G(" + std::to_string(m) + ",1," + std::to_string(n) + ")";
  d.k = k;
  d.basis = "irreducible";
  d.graded = graded;
  for (const auto& lambda : enumerate_multipartitions(m, n)) {
    RationalFunction c = graded ? g_m1n_hat_at(lambda, k)
                                : RationalFunction(g_m1n_mult_ungraded(lambda, k));
    d.entries.push_back({lambda.to_string(), c, false});
  }
  finalize(d);
  return d;
}

Decomposition g_m1n_perm_decomposition(long m, long n, long k) {
  if (k < 1 || (k - 1) % m != 0)
    throw std::invalid_argument("permutation decomposition needs k = pm + 1");
  long p = (k - 1) / m;
  Decomposition d;
  d.group = "G(" + std::to_string(m) + ",1," + std::to_string(n) + ")";
  d.k = k;
  d.basis = "permutation";
  d.graded = false;
  for (long r = 0; r <= n; ++r) {
    for (const auto& lambda : enumerate_partitions(n - r)) {
      // m_lambda in p variables; p = 0 leaves only the empty partition
      Integer c = p == 0 ? Integer(lambda.empty() ? 1 : 0) : spec_m_ones(lambda, p);
      d.entries.push_back({std::to_string(r) + ":" + lambda.to_string(),
                           RationalFunction(Rational(c)), false});
    }
  }
  finalize(d);
  return d;
}

Integer g_m1n_perm_character(long m, long n, long r, const Partition& lambda,
                             const MultiPartition& mu) {
  if (mu.component_count() != m || mu.size() != n || r + lambda.size() != n)
    throw std::invalid_argument("g_m1n_perm_character: inconsistent parameters");
  // class representative: sigma as next-in-cycle map, with the color of each
  // cycle placed on its first letter
  std::vector<long> sigma(n), color_at(n, 0), cycle_of(n), cycle_color, cycle_len;
  long pos = 0;
  for (long i = 0; i < m; ++i) {
    for (long l : mu.component(i).parts()) {
      long c = static_cast<long>(cycle_len.size());
      for (long j = 0; j < l; ++j) {
        sigma[pos + j] = pos + (j + 1) % l;
        cycle_of[pos + j] = c;
      }
      color_at[pos] = i;
      cycle_color.push_back(i);
      cycle_len.push_back(l);
      pos += l;
    }
  }
  // enumerate labelings: label -1 puts a letter in the w-invariant part A,
  // label j >= 0 puts it in the j-th block of lambda
  long nblocks = lambda.length();
  std::vector<long> label(n, -2);
  std::vector<long> room = lambda.parts();
  long room_a = r;
  Integer total = 0;
  std::function<void(long)> rec = [&](long x) {
    if (x == n) {
      // sigma-invariance of the labeling
      for (long y = 0; y < n; ++y)
        if (label[y] != label[sigma[y]]) return;
      // phases: each cycle outside A needs color 0 and then admits m phase
      // assignments; cycles inside A are unconstrained (phases absorbed)
      Integer ways = 1;
      for (std::size_t c = 0; c < cycle_len.size(); ++c) {
        long some_letter = 0;
        while (cycle_of[some_letter] != static_cast<long>(c)) ++some_letter;
        if (label[some_letter] >= 0) {
          if (cycle_color[c] != 0) return;
          ways *= m;
        }
      }
      total += ways;
      return;
    }
    if (room_a > 0) {
      --room_a;
      label[x] = -1;
      rec(x + 1);
      ++room_a;
    }
    for (long j = 0; j < nblocks; ++j) {
      if (room[j] == 0) continue;
      --room[j];
      label[x] = j;
      rec(x + 1);
      ++room[j];
    }
    label[x] = -2;
  };
  rec(0);
  return total;
}

// ---- G(m,p,n) restriction ----

ShiftOrbit shift_orbit(const MultiPartition& lambda, long p) {
  long m = lambda.component_count();
  if (p < 1 || m % p != 0) throw std::invalid_argument("shift_orbit: p must divide m");
  long step = m / p;
  ShiftOrbit o;
  o.rep = lambda;
  MultiPartition cur = lambda;
  do {
    o.orbit.push_back(cur);
    cur = cur.shifted(step);
  } while (!(cur == lambda));
  o.stabilizer_order = p / static_cast<long>(o.orbit.size());
  return o;
}

Rational gmpn_restricted_multiplicity(const ShiftOrbit& orbit, long k) {
  Rational v(0);
  for (const auto& mu : orbit.orbit) v += g_m1n_mult_ungraded(mu, k);
  return v;
}

std::pair<Rational, Rational> g_mmn_triv_det_multiplicities(long m, long n, long k) {
  Rational scale = Rational(1);
  for (long i = 0; i < n - 1; ++i) scale /= Rational(m);
  scale /= Rational(factorial(n));
  Rational triv = scale, det = scale;
  for (long i = 1; i <= n - 1; ++i) {
    triv *= Rational(k + i * m - 1);
    det *= Rational(k - i * m + m - 1);
  }
  triv *= Rational(k + n - 1);
  det *= Rational(k - (n - 1) * m + (n - 1));
  return {triv, det};
}

ProofPolynomials g_mmn_proof_polynomials(long m, long n) {
  ProofPolynomials r;
  Poly z = Poly::monomial(Rational(1), 1);
  Poly f(1), g(1);
  for (long i = 1; i <= n - 1; ++i) {
    f *= z + Poly(Rational(i));
    g *= z + Poly(Rational(1 - i));
  }
  f *= z.scaled(Rational(m)) + Poly(Rational(n));
  g *= z.scaled(Rational(m)) + Poly(Rational(n - m * (n - 1)));
  Rational inv_nfact = Rational(1) / Rational(factorial(n));
  r.f = f.scaled(inv_nfact);
  r.g = g.scaled(inv_nfact);
  Poly sum = (r.f + r.g).scaled(Rational(factorial(n)) / Rational(2));
  Poly diff = (z * (r.f - r.g)).scaled(Rational(factorial(n - 2)));
  r.h = sum - diff;
  return r;
}

// ---- dihedral groups ----

DihedralDecomposition dihedral_decomposition(long m) {
  if (m < 2) throw std::invalid_argument("dihedral_decomposition needs m >= 2");
  DihedralDecomposition d;
  d.m = m;
  RationalFunction den =
      RationalFunction(one_minus_q_pow(2)) * RationalFunction(one_minus_q_pow(m));
  auto qpow = [](long e) { return RationalFunction(Poly::monomial(Rational(1), e)); };
  auto linear_pair = [&](long e1, long e2, const RationalFunction& scale) {
    // scale * (1 - u q^{e1})(1 - u q^{e2}) / den, with e_i possibly shifted
    // into the scale to stay polynomial
    std::vector<RationalFunction> c = {scale / den, -(qpow(e1) + qpow(e2)) * scale / den,
                                       qpow(e1 + e2) * scale / den};
    return UPoly(std::move(c));
  };
  d.labels.push_back("xi0");
  d.dims.push_back(1);
  d.hat.push_back(linear_pair(1, m - 1, RationalFunction(1)));
  d.labels.push_back("xi1");
  d.dims.push_back(1);
  // q^m (1 - u q^{-1})(1 - u q^{-m+1}) = q^m - u (q^{m-1} + q) + u^2
  d.hat.push_back(UPoly(std::vector<RationalFunction>{
      qpow(m) / den, -(qpow(m - 1) + qpow(1)) / den, RationalFunction(1) / den}));
  if (m % 2 == 0) {
    // q^{m/2} (1 - u q)(1 - u q^{-1}) = q^{m/2} - u (q^{m/2+1} + q^{m/2-1}) + u^2 q^{m/2}
    UPoly xi23(std::vector<RationalFunction>{
        qpow(m / 2) / den, -(qpow(m / 2 + 1) + qpow(m / 2 - 1)) / den, qpow(m / 2) / den});
    d.labels.push_back("xi2");
    d.dims.push_back(1);
    d.hat.push_back(xi23);
    d.labels.push_back("xi3");
    d.dims.push_back(1);
    d.hat.push_back(xi23);
  }
  // (q^j + q^{m-j})(1 - uq)(1 - uq^{-1}) = s - u (q^{j+1} + q^{j-1} +
  // q^{m-j+1} + q^{m-j-1}) + u^2 s with s = q^j + q^{m-j}
  long jmax = m % 2 == 0 ? m / 2 - 1 : (m - 1) / 2;
  for (long j = 1; j <= jmax; ++j) {
    RationalFunction s = qpow(j) + qpow(m - j);
    RationalFunction mid = qpow(j + 1) + qpow(j - 1) + qpow(m - j + 1) + qpow(m - j - 1);
    d.labels.push_back("chi" + std::to_string(j));
    d.dims.push_back(2);
    d.hat.push_back(UPoly(std::vector<RationalFunction>{s / den, -mid / den, s / den}));
  }
  return d;
}

std::vector<Rational> dihedral_mult_ungraded(long m, long k) {
  DihedralDecomposition d = dihedral_decomposition(m);
  std::vector<Rational> vals;
  RationalFunction u = RationalFunction(Poly::monomial(Rational(1), k));
  for (const auto& h : d.hat) vals.push_back(substitute_u(h, u).eval(Rational(1)));
  return vals;
}

namespace {
using ZPoly = PolyT<UPoly>;  // polynomials in the root of unity z

ZPoly reduce_mod_cyclotomic(ZPoly f, long m) {
  const Poly& phi = cyclotomic(m);
  long d = phi.degree();
  while (f.degree() >= d) {
    UPoly lead = f.lead();
    long shift = f.degree() - d;
    ZPoly sub;
    {
      std::vector<UPoly> c(shift + d + 1);
      for (long i = 0; i <= d; ++i)
        c[shift + i] = UPoly(RationalFunction(Rational(phi.coeff(i)))) * lead;
      sub = ZPoly(std::move(c));
    }
    f -= sub;
  }
  return f;
}

ZPoly zpow(long e, long m) {
  return ZPoly::monomial(UPoly(1), ((e % m) + m) % m);
}
}  // namespace

namespace {
bool dihedral_closure_rotation(const DihedralDecomposition& d, long i) {
  long m = d.m;
  auto qrf = [](long e) { return UPoly(RationalFunction(Poly::monomial(Rational(1), e))); };
  // sum over characters of mhat^chi(u) chi(a^i), as a z-polynomial
  ZPoly lhs;
  for (std::size_t t = 0; t < d.labels.size(); ++t) {
    const std::string& lb = d.labels[t];
    ZPoly chi;
    if (lb == "xi0" || lb == "xi1") {
      chi = ZPoly(UPoly(1));
    } else if (lb == "xi2" || lb == "xi3") {
      chi = ZPoly(UPoly(i % 2 == 0 ? 1 : -1));
    } else {
      long j = std::stol(lb.substr(3));
      chi = zpow(i * j, m) + zpow(-i * j, m);
    }
    lhs += chi.scaled(d.hat[t]);
  }
  // check lhs * (1 - c q + q^2) == 1 - c u + u^2 with c = z^i + z^{-i}
  ZPoly c = zpow(i, m) + zpow(-i, m);
  ZPoly qfac = ZPoly(qrf(0) + qrf(2)) - c.scaled(qrf(1));
  ZPoly rhs = ZPoly(UPoly(std::vector<RationalFunction>{RationalFunction(1), RationalFunction(0),
                                                        RationalFunction(1)})) -
              c.scaled(UPoly::monomial(RationalFunction(1), 1));
  ZPoly delta = reduce_mod_cyclotomic(lhs * qfac - rhs, m);
  return delta.is_zero();
}
}  // namespace

bool dihedral_closure_check(long m) {
  DihedralDecomposition d = dihedral_decomposition(m);
  // identity class: sum dims * mhat = (1-u)^2/(1-q)^2
  UPoly id_sum;
  for (std::size_t t = 0; t < d.labels.size(); ++t)
    id_sum += d.hat[t].scaled(RationalFunction(Rational(d.dims[t])));
  RationalFunction inv = RationalFunction(1) / RationalFunction(one_minus_q_pow(1));
  UPoly one_minus_u = UPoly(1) - UPoly::monomial(RationalFunction(1), 1);
  UPoly id_expect = (one_minus_u * one_minus_u).scaled(inv * inv);
  if (id_sum != id_expect) return false;
  // reflection classes b (and ab for even m): xi-signs, chi_j vanish
  UPoly b_sum = d.hat[0] - d.hat[1];
  if (m % 2 == 0) {
    UPoly ab_sum = d.hat[0] - d.hat[1] - d.hat[2] + d.hat[3];
    UPoly b_even = d.hat[0] - d.hat[1] + d.hat[2] - d.hat[3];
    if (!(ab_sum == b_even)) return false;
    b_sum = b_even;
  }
  UPoly one_plus_u = UPoly(1) + UPoly::monomial(RationalFunction(1), 1);
  RationalFunction invb = RationalFunction(1) /
                          (RationalFunction(one_minus_q_pow(1)) *
                           RationalFunction(Poly(1) + Poly::monomial(Rational(1), 1)));
  UPoly b_expect = (one_minus_u * one_plus_u).scaled(invb);
  if (b_sum != b_expect) return false;
  // rotation classes
  for (long i = 1; i < m; ++i)
    if (!dihedral_closure_rotation(d, i)) return false;
  return true;
}

std::pair<bool, bool> dihedral_condition_check(long m, long k) {
  auto is_nat = [](const Rational& v) { return v.get_den() == 1 && v >= 0; };
  bool is_char = true;
  for (const Rational& v : dihedral_mult_ungraded(m, k)) is_char = is_char && is_nat(v);
  std::vector<Rational> eta_coeffs;
  Rational reg = Rational((k - 1) * (k - m + 1)) / Rational(2 * m);
  if (m % 2 == 0) {
    Rational half(k - 1, 2);
    half.canonicalize();  // mpq_class(n, d) does not reduce
    eta_coeffs = {Rational(1), half, half, reg};
  } else {
    eta_coeffs = {Rational(1), Rational(k - 1), reg};
  }
  bool is_perm = true;
  for (const Rational& v : eta_coeffs) is_perm = is_perm && is_nat(v);
  return {is_char, is_perm};
}

// ---- serialization ----

Json decomposition_to_json(const Decomposition& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries) {
    Json coeff;
    if (!d.graded) {
      const Poly& p = e.coeff.as_poly();
      if (p.degree() > 0) throw std::logic_error("ungraded coefficient not constant");
      coeff = rational_to_json(p.is_zero() ? Rational(0) : p.coeff(0));
    } else if (e.coeff.is_polynomial()) {
      coeff = poly_to_json(e.coeff.as_poly());
    } else {
      coeff = rational_function_to_json(e.coeff);
    }
    entries.push_back({{"label", e.label}, {"coeff", coeff}, {"valid", e.valid}});
  }
  return Json{{"group", d.group},
              {"k", d.k},
              {"basis", d.basis},
              {"graded", d.graded},
              {"entries", entries},
              {"representation_valid", d.representation_valid}};
}

}  // namespace parkspace
