#ifndef PARKSPACE_GROUPS_HPP
#define PARKSPACE_GROUPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "parkspace/exact.hpp"

namespace parkspace {

/// Number of scan threads used by the parallel kernels (0 = library default).
void set_thread_count(int n);
int thread_count();

struct GroupLabel {
  enum class Kind { Sym, Imprimitive, Cyclic, Dihedral, Exceptional };
  Kind kind = Kind::Sym;
  long m = 0, p = 0, n = 0;  // Imprimitive: G(m,p,n); Sym/Cyclic/Dihedral use n or m; Exceptional uses n = Shephard-Todd number
  static GroupLabel parse(const std::string& text);
  std::string to_string() const;
};

struct ReflectionGroupData {
  GroupLabel label;
  long rank = 0;
  std::vector<long> degrees;    // ascending
  std::vector<long> codegrees;  // ascending
  Integer order;                // prod degrees
  long n_hyperplanes = 0;       // sum (codegree_i + 1)
};

ReflectionGroupData group_data(const GroupLabel& label);
ReflectionGroupData group_data(const std::string& label);

/// "k mod H in residues", optionally restricted to k >= min_k with a short
/// list of extra k-values admitted below the floor.
struct ResidueCondition {
  long modulus = 1;
  std::vector<long> residues;  // sorted, values in [1..modulus]
  std::optional<long> min_k;
  std::vector<long> extra_k;  // isolated admissible values below min_k

  bool contains(long k) const;
  /// Reduce the modulus to the minimal period for the residue set.
  void canonicalize();
  static ResidueCondition all_k();

  friend bool operator==(const ResidueCondition& a, const ResidueCondition& b) {
    return a.modulus == b.modulus && a.residues == b.residues && a.min_k == b.min_k &&
           a.extra_k == b.extra_k;
  }
};

/// Same set of k >= 1, compared extensionally over one common period.
bool same_condition(const ResidueCondition& a, const ResidueCondition& b);

RationalFunction catalan_q(const ReflectionGroupData& w, long k);
RationalFunction catalan_star_q(const ReflectionGroupData& w, long k);
Rational catalan_at_one(const ReflectionGroupData& w, long k);
Rational catalan_star_at_one(const ReflectionGroupData& w, long k);

/// Equality of the codegree-product definition of Cat* with its rewriting
/// prod (q^{d*_i+1} - q^k)/(1 - q^{d_i}); also pins n_hyperplanes.
bool catalan_star_identity_check(const ReflectionGroupData& w, long k);

struct PolynomialityResult {
  ResidueCondition cat;
  ResidueCondition cat_star;  // residue part only
  ResidueCondition both;
  std::vector<long> star_zero_k;     // k = codegree + 1: Cat*_k = 0
  std::vector<long> star_zero_only;  // zero cases outside the residue set
};

/// Characterize the k for which Cat_k(W,q) / Cat*_k(W,q) are polynomials,
/// by a scan over one period with the Laurent-quotient divisor test.
PolynomialityResult q_polynomiality_condition(const ReflectionGroupData& w);

/// Scan kernels behind q_polynomiality_condition; pass[r-1] says whether the
/// test succeeds at k = r + k_shift, for r = 1..period.  `offsets` holds the
/// numerator shifts (degree - 1, or -codegree - 1 for the dual).
std::vector<char> polynomiality_scan_serial(const std::vector<long>& degrees,
                                            const std::vector<long>& offsets, long period,
                                            long k_shift);
std::vector<char> polynomiality_scan_parallel(const std::vector<long>& degrees,
                                              const std::vector<long>& offsets, long period,
                                              long k_shift);

/// Exact set of k with Cat_k(W,1) (dual: Cat*_k(W,1)) an integer, via
/// per-prime residue enumeration combined by CRT.
ResidueCondition integrality_condition(const ReflectionGroupData& w, bool dual);
/// Reference implementation scanning a full period |W| (small groups only).
ResidueCondition integrality_condition_naive(const ReflectionGroupData& w, bool dual);

/// The closed-form condition on k attached to each group (dihedral groups:
/// k congruent to +-1 mod m).
ResidueCondition main_condition(const ReflectionGroupData& w);

/// Dihedral floor-form condition: k = 1, or k >= m-1 and k^2 == 1 modulo 2m
/// (m even) / m (m odd).  Same set as main_condition for m <= 8 but not in
/// general.
ResidueCondition dihedral_square_condition(long m);

/// Known closed-form condition tables, keyed by Shephard-Todd number.
/// Groups absent from a table follow the default (main_condition).
const std::vector<std::pair<int, ResidueCondition>>& cat_polynomiality_exceptions();   // Table of Cat-only rows
const std::vector<std::pair<int, ResidueCondition>>& integrality_exceptions();         // Cat at q=1
const std::vector<std::pair<int, ResidueCondition>>& dual_integrality_exceptions();    // Cat* at q=1

struct TableVerification {
  bool conditions_ok = false;    // polynomiality condition vs closed form, all families
  bool cat_rows_ok = false;      // Cat-only polynomiality rows
  bool integrality_ok = false;   // Cat integrality rows
  bool dual_integrality_ok = false;  // Cat* integrality rows
  bool all_ok() const {
    return conditions_ok && cat_rows_ok && integrality_ok && dual_integrality_ok;
  }
};
TableVerification verify_condition_tables(std::string* report = nullptr);

}  // namespace parkspace

#endif  // PARKSPACE_GROUPS_HPP
