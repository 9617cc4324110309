#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "parkspace/characters.hpp"

using namespace parkspace;

namespace {

Poly P(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}

RationalFunction qpow(long e) {
  return RationalFunction(Poly::monomial(Rational(1), e));
}

RationalFunction find_coeff(const Decomposition& d, const std::string& label) {
  for (const auto& e : d.entries)
    if (e.label == label) return e.coeff;
  throw std::runtime_error("label not found: " + label);
}

bool is_nat(const Rational& v) { return v.get_den() == 1 && v >= 0; }

MultiPartition trivial_label(long m, long n) {
  std::vector<Partition> comps(m);
  comps[0] = Partition({n});
  return MultiPartition(std::move(comps));
}

MultiPartition det_label(long m, long n) {
  std::vector<Partition> comps(m);
  comps[1 % m] = Partition(std::vector<long>(n, 1));
  return MultiPartition(std::move(comps));
}

}  // namespace

TEST_CASE("symmetric group phi values") {
  CHECK(phi_sym(Partition({1, 1}), 3) == 3);
  for (long n = 1; n <= 6; ++n)
    for (long k = 1; k <= 5; ++k) CHECK(phi_sym(Partition({n}), k) == 1);
  CHECK(phi_sym_graded(Partition({2}), 3) == RationalFunction(P({1, -1, 1})));
}

TEST_CASE("phi-hat for the symmetric group") {
  for (long n = 2; n <= 5; ++n) {
    UPoly got = phi_hat_sym(Partition(std::vector<long>(n, 1)));
    RationalFunction inv = RationalFunction(1) / RationalFunction(one_minus_q_pow(1));
    UPoly base = (UPoly(1) - UPoly::monomial(RationalFunction(1), 1)).scaled(inv);
    UPoly expect(1);
    for (long i = 0; i < n - 1; ++i) expect *= base;
    CHECK(got == expect);
  }
  // substituting u = q^k recovers the graded value; u = q gives 1
  for (long n = 1; n <= 5; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      CHECK(substitute_u(phi_hat_sym(mu), qpow(1)) == RationalFunction(1));
      for (long k = 2; k <= 5; ++k)
        CHECK(substitute_u(phi_hat_sym(mu), qpow(k)) == phi_sym_graded(mu, k));
    }
}

TEST_CASE("irreducible decomposition for the symmetric group") {
  Decomposition d = sym_irr_decomposition(2, 3, true);
  CHECK(find_coeff(d, "2") == RationalFunction(P({1, 0, 1})));
  CHECK(find_coeff(d, "1,1") == RationalFunction(P({0, 1})));
  CHECK(d.representation_valid);

  Decomposition bad = sym_irr_decomposition(2, 2, false);
  CHECK(find_coeff(bad, "2") == RationalFunction(Rational(3, 2)));
  CHECK(find_coeff(bad, "1,1") == RationalFunction(Rational(1, 2)));
  CHECK(!bad.representation_valid);

  Decomposition d34 = sym_irr_decomposition(3, 4, false);
  CHECK(find_coeff(d34, "3") == RationalFunction(Rational(5)));
}

TEST_CASE("permutation decomposition for the symmetric group") {
  Decomposition d = sym_perm_decomposition(2, 3);
  CHECK(find_coeff(d, "2") == RationalFunction(1));
  CHECK(find_coeff(d, "1,1") == RationalFunction(1));

  Decomposition d31 = sym_perm_decomposition(3, 1);
  CHECK(find_coeff(d31, "3") == RationalFunction(1));
  CHECK(find_coeff(d31, "2,1").is_zero());
  CHECK(find_coeff(d31, "1,1,1").is_zero());

  Decomposition d34 = sym_perm_decomposition(3, 4);
  CHECK(find_coeff(d34, "3") == RationalFunction(1));
  CHECK(find_coeff(d34, "2,1") == RationalFunction(3));
  // coefficient m_{(1,1,1)}(1^4)/4 = C(4,3)/4 = 1
  CHECK(find_coeff(d34, "1,1,1") == RationalFunction(1));
}

TEST_CASE("permutation characters reconstruct phi_k pointwise") {
  for (long n = 2; n <= 5; ++n)
    for (long k = 1; k <= 6; ++k) {
      Decomposition d = sym_perm_decomposition(n, k);
      for (const auto& mu : enumerate_partitions(n)) {
        Rational total(0);
        for (const auto& e : d.entries) {
          Rational c = e.coeff.as_poly().is_zero() ? Rational(0) : e.coeff.as_poly().coeff(0);
          total += c * Rational(sym_perm_character(Partition::parse(e.label), mu));
        }
        CHECK(total == Rational(phi_sym(mu, k)));
      }
    }
}

TEST_CASE("decomposition coefficients equal direct inner products") {
  for (long n = 2; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (long k = 1; k <= 8; ++k) {
      Decomposition d = sym_irr_decomposition(n, k, true);
      for (const auto& lambda : parts) {
        RationalFunction inner;
        for (const auto& mu : parts)
          inner += phi_sym_graded(mu, k) *
                   RationalFunction(Rational(class_size(mu) * mn_character(lambda, mu)));
        inner *= RationalFunction(Rational(1) / Rational(factorial(n)));
        CHECK(find_coeff(d, lambda.to_string()) == inner);
      }
    }
  }
}

TEST_CASE("trivial and determinant coefficients are the Catalan numbers") {
  for (long n = 2; n <= 6; ++n) {
    auto w = group_data("S" + std::to_string(n));
    for (long k = 1; k <= 10; ++k) {
      Decomposition d = sym_irr_decomposition(n, k, true);
      CHECK(find_coeff(d, Partition({n}).to_string()) == catalan_q(w, k));
      CHECK(find_coeff(d, Partition(std::vector<long>(n, 1)).to_string()) ==
            catalan_star_q(w, k));
    }
  }
  for (long m = 2; m <= 4; ++m)
    for (long n = 2; n <= 4; ++n) {
      auto w = group_data("G(" + std::to_string(m) + ",1," + std::to_string(n) + ")");
      for (long k = 1; k <= 10; ++k) {
        CHECK(g_m1n_hat_at(trivial_label(m, n), k) == catalan_q(w, k));
        CHECK(g_m1n_hat_at(det_label(m, n), k) == catalan_star_q(w, k));
      }
    }
  for (long m = 2; m <= 12; ++m) {
    auto w = group_data("D" + std::to_string(m));
    DihedralDecomposition d = dihedral_decomposition(m);
    for (long k = 1; k <= 10; ++k) {
      CHECK(substitute_u(d.hat[0], qpow(k)) == catalan_q(w, k));
      CHECK(substitute_u(d.hat[1], qpow(k)) == catalan_star_q(w, k));
    }
  }
}

TEST_CASE("wreath product hat multiplicities") {
  MultiPartition lam = MultiPartition::parse("-;1");
  CHECK(g_m1n_hat_at(lam, 3) == qpow(1));
  // u = q leaves only the trivial character
  for (long m = 2; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n)
      for (const auto& mp : enumerate_multipartitions(m, n)) {
        RationalFunction v = substitute_u(g_m1n_hat_multiplicity(mp), qpow(1));
        if (mp == trivial_label(m, n))
          CHECK(v == RationalFunction(1));
        else
          CHECK(v.is_zero());
      }
}

TEST_CASE("ungraded wreath multiplicities") {
  CHECK(g_m1n_mult_ungraded(MultiPartition::parse("2;-"), 3) == Rational(3));
  CHECK(g_m1n_mult_ungraded(MultiPartition::parse("-;1,1"), 3) == Rational(0));
  CHECK(catalan_at_one(group_data("G(2,1,2)"), 3) == Rational(3));
  // ungraded value is the graded one at q = 1
  for (long m = 2; m <= 3; ++m)
    for (const auto& mp : enumerate_multipartitions(m, 3))
      for (long k = 1; k <= 2 * m + 1; k += m) {
        Poly graded = g_m1n_mult_graded_fuss(mp, k);
        CHECK(Rational(graded.eval(Rational(1))) == g_m1n_mult_ungraded(mp, k));
      }
}

TEST_CASE("graded Fuss multiplicities") {
  CHECK(g_m1n_mult_graded_fuss(MultiPartition::parse("2;-"), 3) == P({1, 0, 1, 0, 1}));
  CHECK(g_m1n_mult_graded_fuss(MultiPartition::parse("-;1"), 3) == P({0, 1}));
  for (long m = 2; m <= 3; ++m)
    for (long n = 1; n <= 3; ++n)
      for (const auto& mp : enumerate_multipartitions(m, n)) {
        CHECK(g_m1n_mult_graded_fuss(mp, 1) ==
              (mp == trivial_label(m, n) ? Poly(1) : Poly()));
        for (long p = 0; p <= 2; ++p) {
          Poly v = g_m1n_mult_graded_fuss(mp, p * m + 1);
          CHECK(has_nonneg_integer_coeffs(v));
          CHECK(RationalFunction(v) == g_m1n_hat_at(mp, p * m + 1));
        }
      }
  CHECK_THROWS_AS(g_m1n_mult_graded_fuss(MultiPartition::parse("2;-"), 2),
                  std::invalid_argument);
}

TEST_CASE("wreath permutation decomposition") {
  Decomposition d1 = g_m1n_perm_decomposition(3, 3, 1);
  for (const auto& e : d1.entries) {
    if (e.label == "3:-")
      CHECK(e.coeff == RationalFunction(1));
    else
      CHECK(e.coeff.is_zero());
  }
  Decomposition d = g_m1n_perm_decomposition(2, 2, 3);
  CHECK(find_coeff(d, "2:-") == RationalFunction(1));
  CHECK(find_coeff(d, "1:1") == RationalFunction(1));
  CHECK(find_coeff(d, "0:2") == RationalFunction(1));
  CHECK(find_coeff(d, "0:1,1").is_zero());
  CHECK_THROWS_AS(g_m1n_perm_decomposition(2, 2, 2), std::invalid_argument);
}

TEST_CASE("wreath permutation characters reconstruct phi_k pointwise") {
  for (long m = 2; m <= 4; ++m)
    for (long n = 2; n <= 4; ++n)
      for (long k = 1; k <= 4 * m + 1; k += m) {
        Decomposition d = g_m1n_perm_decomposition(m, n, k);
        for (const auto& mu : enumerate_multipartitions(m, n)) {
          Rational total(0);
          for (const auto& e : d.entries) {
            Rational c = e.coeff.as_poly().is_zero() ? Rational(0) : e.coeff.as_poly().coeff(0);
            if (c == 0) continue;
            auto colon = e.label.find(':');
            long r = std::stol(e.label.substr(0, colon));
            Partition lam = Partition::parse(e.label.substr(colon + 1));
            total += c * Rational(g_m1n_perm_character(m, n, r, lam, mu));
          }
          CHECK(total == Rational(phi_wreath(mu, k)));
        }
      }
}

TEST_CASE("shift orbits") {
  MultiPartition lam = MultiPartition::parse("2;-;-;-");
  ShiftOrbit o = shift_orbit(lam, 2);  // G(4,2,2): shift step 2
  REQUIRE(o.orbit.size() == 2);
  CHECK(o.orbit[0] == lam);
  CHECK(o.orbit[1] == MultiPartition::parse("-;-;2;-"));
  CHECK(o.stabilizer_order == 1);
  for (long k = 1; k <= 9; ++k)
    CHECK(gmpn_restricted_multiplicity(o, k) ==
          g_m1n_mult_ungraded(lam, k) + g_m1n_mult_ungraded(MultiPartition::parse("-;-;2;-"), k));

  // sh^{m/p}-fixed labels give singleton orbits
  ShiftOrbit fixed = shift_orbit(MultiPartition::parse("1;-;1;-"), 2);
  CHECK(fixed.orbit.size() == 1);
  CHECK(fixed.stabilizer_order == 2);
}

TEST_CASE("distinguished character difference for G(m,p,2)") {
  for (long m = 2; m <= 8; ++m)
    for (long p = 1; p < m; ++p) {
      if (m % p != 0) continue;
      std::vector<Partition> chi_comps(m), eta_comps(m);
      chi_comps[0] = Partition({2});
      eta_comps[1] = Partition({2});
      ShiftOrbit chi = shift_orbit(MultiPartition(chi_comps), p);
      ShiftOrbit eta = shift_orbit(MultiPartition(eta_comps), p);
      // difference of the orbit sums: ((k+m-1)(k+2m-1) - (k-1)(k+m-1))/(2m^2)
      // = (k+m-1)/m, an integer exactly when (k-1)/m is
      for (long k = 1; k <= 3 * m; ++k)
        CHECK(gmpn_restricted_multiplicity(chi, k) - gmpn_restricted_multiplicity(eta, k) ==
              Rational(k + m - 1) / Rational(m));
    }
}

TEST_CASE("trivial and determinant multiplicities for G(m,m,n)") {
  auto [t1, d1] = g_mmn_triv_det_multiplicities(2, 3, 3);
  CHECK(t1 == Rational(5));
  CHECK(t1 == catalan_at_one(group_data("G(2,2,3)"), 3));
  for (long m = 2; m <= 6; ++m)
    for (long n = 2; n <= 5; ++n) {
      auto [triv, det] = g_mmn_triv_det_multiplicities(m, n, 1);
      CHECK(triv == Rational(1));
      CHECK(det == Rational(0));
      auto w = group_data("G(" + std::to_string(m) + "," + std::to_string(m) + "," +
                          std::to_string(n) + ")");
      for (long k = 1; k <= 10; ++k) {
        auto [tk, dk] = g_mmn_triv_det_multiplicities(m, n, k);
        CHECK(tk == catalan_at_one(w, k));
        CHECK(dk == catalan_star_at_one(w, k));
      }
    }
}

TEST_CASE("proof polynomials for G(m,m,n)") {
  for (long m = 2; m <= 12; ++m)
    for (long n = 2; n <= 8; ++n) {
      ProofPolynomials pp = g_mmn_proof_polynomials(m, n);
      CHECK(pp.h.degree() == n - 1);
      CHECK(pp.h.lead() == Rational(1));
      CHECK(has_integer_coeffs(pp.h));
      for (long k = 1; k <= 6; ++k) {
        auto [triv, det] = g_mmn_triv_det_multiplicities(m, n, k);
        Rational z = Rational(k - 1) / Rational(m);
        CHECK(pp.f.eval(z) == triv);
        CHECK(pp.g.eval(z) == det);
      }
    }
}

TEST_CASE("character condition matches the closed form for covered families") {
  // ungraded multiplicities are all nonnegative integers exactly on the
  // embedded condition set
  for (long n = 2; n <= 8; ++n) {
    auto cond = main_condition(group_data("S" + std::to_string(n)));
    for (long k = 1; k <= 4 * cond.modulus; ++k) {
      bool all_nat = true;
      for (const auto& lambda : enumerate_partitions(n))
        all_nat = all_nat && is_nat(Rational(spec_schur_ones(lambda, k)) / Rational(k));
      CHECK(all_nat == cond.contains(k));
    }
  }
  for (long m = 2; m <= 6; ++m)
    for (long p = 1; p <= m; ++p) {
      if (m % p != 0) continue;
      for (long n = 2; n <= 4; ++n) {
        if (p == m && n == 2) continue;  // dihedral case handled separately
        auto w = group_data("G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                            std::to_string(n) + ")");
        auto cond = main_condition(w);
        for (long k = 1; k <= 4 * cond.modulus; ++k) {
          bool all_nat = true;
          for (const auto& lambda : enumerate_multipartitions(m, n)) {
            ShiftOrbit o = shift_orbit(lambda, p);
            if (!(o.orbit.front() == lambda)) continue;  // one representative per orbit
            all_nat = all_nat && is_nat(gmpn_restricted_multiplicity(o, k));
          }
          CHECK(all_nat == cond.contains(k));
        }
      }
    }
}

TEST_CASE("dihedral decomposition formulas") {
  for (long m : {4L, 5L, 6L, 9L}) {
    DihedralDecomposition d = dihedral_decomposition(m);
    RationalFunction den =
        RationalFunction(one_minus_q_pow(2)) * RationalFunction(one_minus_q_pow(m));
    UPoly xi0(std::vector<RationalFunction>{RationalFunction(1) / den,
                                            -(qpow(1) + qpow(m - 1)) / den, qpow(m) / den});
    CHECK(d.labels[0] == "xi0");
    CHECK(d.hat[0] == xi0);
    // u = q: trivial multiplicity 1, everything else 0
    CHECK(substitute_u(d.hat[0], qpow(1)) == RationalFunction(1));
    for (std::size_t t = 1; t < d.hat.size(); ++t)
      CHECK(substitute_u(d.hat[t], qpow(1)).is_zero());
    // dimension bookkeeping per parity
    long class_fn_dim = std::accumulate(d.dims.begin(), d.dims.end(), 0L,
                                        [](long a, long b) { return a + b * b; });
    CHECK(class_fn_dim == 2 * m);
  }
  std::vector<Rational> m4k3 = dihedral_mult_ungraded(4, 3);
  CHECK(m4k3 == std::vector<Rational>{Rational(3), Rational(0), Rational(1), Rational(1),
                                      Rational(2)});
}

TEST_CASE("dihedral closure of the hat decomposition") {
  for (long m = 2; m <= 12; ++m) CHECK(dihedral_closure_check(m));
}

TEST_CASE("dihedral condition checks") {
  auto [c43, p43] = dihedral_condition_check(4, 3);
  CHECK(c43);
  CHECK(p43);
  CHECK(dihedral_condition_check(4, 5).first);
  CHECK(dihedral_condition_check(5, 4).first);
  CHECK(!dihedral_condition_check(5, 2).first);
  for (long m = 2; m <= 12; ++m) {
    ResidueCondition cond = dihedral_square_condition(m);
    for (long k = 1; k <= 4 * m; ++k) {
      auto [is_char, is_perm] = dihedral_condition_check(m, k);
      CHECK(is_char == cond.contains(k));
      CHECK(is_perm == cond.contains(k));
    }
  }
}

TEST_CASE("decomposition JSON shape") {
  Json j = decomposition_to_json(sym_irr_decomposition(2, 3, true));
  CHECK(j["group"] == "S2");
  CHECK(j["basis"] == "irreducible");
  CHECK(j["representation_valid"] == true);
  CHECK(j["entries"].size() == 2);
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("label"));
    CHECK(e.contains("coeff"));
    CHECK(e.contains("valid"));
  }
}
