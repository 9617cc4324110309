#ifndef PARKSPACE_CHARACTERS_HPP
#define PARKSPACE_CHARACTERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "parkspace/exact.hpp"
#include "parkspace/groups.hpp"
#include "parkspace/partitions.hpp"
#include "parkspace/serialize.hpp"
#include "parkspace/symfunc.hpp"

namespace parkspace {

// ---- symmetric groups ----

/// phi_k at cycle type mu: k^{l(mu)-1} (reflection representation of Sym_n).
Integer phi_sym(const Partition& mu, long k);
/// Graded value: prod_i [k]_{q^{mu_i}} / [k]_q, reduced.
RationalFunction phi_sym_graded(const Partition& mu, long k);
/// phi-hat at cycle type mu: polynomial in u over Q(q); u = q^k recovers the
/// graded value.
UPoly phi_hat_sym(const Partition& mu);

struct DecompEntry {
  std::string label;
  RationalFunction coeff;
  bool valid = false;  // nonnegative integer / polynomial in N[q]
};

struct Decomposition {
  std::string group;
  long k = 0;
  std::string basis;  // "irreducible" or "permutation"
  bool graded = false;
  std::vector<DecompEntry> entries;
  bool representation_valid = false;
};

Json decomposition_to_json(const Decomposition& d);

Decomposition sym_irr_decomposition(long n, long k, bool graded);
Decomposition sym_perm_decomposition(long n, long k);
/// Permutation character eta_lambda of Sym_n on Sym_n/Sym_lambda, at class mu.
Integer sym_perm_character(const Partition& lambda, const Partition& mu);

// ---- wreath products G(m,1,n) ----

/// phi_k at the class of cycle type mu (m components): k^{l(mu^(0))}.
Integer phi_wreath(const MultiPartition& mu, long k);

/// Multiplicity of chi^lambda in phi-hat for G(m,1,n), as a polynomial in u
/// over Q(q), via the power-sum expansion of S_lambda.
UPoly g_m1n_hat_multiplicity(const MultiPartition& lambda);
/// The same with u = q^k substituted.
RationalFunction g_m1n_hat_at(const MultiPartition& lambda, long k);

/// Ungraded multiplicity: hook-content closed form.
Rational g_m1n_mult_ungraded(const MultiPartition& lambda, long k);

/// Graded multiplicity for k = pm+1: product of principal specializations in
/// base q^m; a polynomial with nonnegative integer coefficients.
Poly g_m1n_mult_graded_fuss(const MultiPartition& lambda, long k);

Decomposition g_m1n_irr_decomposition(long m, long n, long k, bool graded);
Decomposition g_m1n_perm_decomposition(long m, long n, long k);

/// Permutation character of G(m,1,n) on G(m,1,n)/(G(m,1,r) x Sym_lambda),
/// at the class of cycle type mu, by direct fixed-point counting.
Integer g_m1n_perm_character(long m, long n, long r, const Partition& lambda,
                             const MultiPartition& mu);

// ---- G(m,p,n) via Clifford restriction ----

struct ShiftOrbit {
  MultiPartition rep;
  std::vector<MultiPartition> orbit;
  long stabilizer_order = 1;
};
/// Orbit of lambda under the shift by m/p components (p | m).
ShiftOrbit shift_orbit(const MultiPartition& lambda, long p);

/// Multiplicity in phi_k of an irreducible of G(m,p,n) below chi^lambda:
/// the sum of ungraded multiplicities over the shift orbit.
Rational gmpn_restricted_multiplicity(const ShiftOrbit& orbit, long k);

/// Closed forms for the trivial / determinant multiplicities in phi_k of
/// G(m,m,n).
std::pair<Rational, Rational> g_mmn_triv_det_multiplicities(long m, long n, long k);

struct ProofPolynomials {
  Poly f, g, h;  // polynomials in z; h = (n!/2)(f+g) - (n-2)! z (f-g)
};
ProofPolynomials g_mmn_proof_polynomials(long m, long n);

// ---- dihedral groups D_{2m} = G(m,m,2) ----

struct DihedralDecomposition {
  long m = 0;
  std::vector<std::string> labels;  // xi0, xi1 (, xi2, xi3), chi_1, ...
  std::vector<long> dims;           // aligned character degrees
  std::vector<UPoly> hat;           // multiplicities of phi-hat, in u over Q(q)
};
DihedralDecomposition dihedral_decomposition(long m);

/// Ungraded multiplicities at k, aligned with dihedral_decomposition labels.
std::vector<Rational> dihedral_mult_ungraded(long m, long k);

/// Symbolic check of sum_chi mhat^chi(u) chi(w) = phi-hat(w) on every class,
/// working modulo the m-th cyclotomic polynomial for the rotation classes.
bool dihedral_closure_check(long m);

/// (is_character, is_perm_decomposable) for phi_k of D_{2m}.
std::pair<bool, bool> dihedral_condition_check(long m, long k);

}  // namespace parkspace

#endif  // PARKSPACE_CHARACTERS_HPP
