#ifndef PARKSPACE_SYMFUNC_HPP
#define PARKSPACE_SYMFUNC_HPP

#include "parkspace/exact.hpp"
#include "parkspace/partitions.hpp"

namespace parkspace {

/// h_r(1, q, ..., q^{k-1}) = [k+r-1 choose r]_q.
Poly spec_h_q(long r, long k);
/// h_r(1^k) = binom(k+r-1, r).
Integer spec_h_ones(long r, long k);

/// e_lambda(1^k) = prod binom(k, lambda_i).
Integer spec_e_ones(const Partition& lambda, long k);
/// m_lambda(1^k); zero when l(lambda) > k.
Integer spec_m_ones(const Partition& lambda, long k);
/// h_lambda(1^k) = prod binom(k+lambda_i-1, lambda_i).
Integer spec_h_list_ones(const Partition& lambda, long k);

/// Principal specialization s_lambda(1, q, ..., q^{k-1}) via the
/// q-hook-content product; zero when l(lambda) > k.  k = 0 is allowed and
/// gives 1 for the empty partition, 0 otherwise.
Poly spec_schur_q(const Partition& lambda, long k);

/// Independent oracle: Jacobi-Trudi determinant of h-specializations.
Poly jacobi_trudi_oracle(const Partition& lambda, long k);

/// s_lambda(1^k) by the hook-content product; a nonnegative integer.
Integer spec_schur_ones(const Partition& lambda, long k);

/// gcd over Z of { s_lambda(1^k) : lambda |- n }.
Integer gcd_int_schur(long n, long k);
/// monic gcd over Q[q] of the principal specializations.
Poly gcd_poly_schur(long n, long k);

/// s_lambda(1,q,...,q^{k-1}) / ([k]_q/[d]_q) with d = gcd(|lambda|, k);
/// asserts exact division and nonnegative integer coefficients.
Poly schur_quotient(const Partition& lambda, long k);

struct UnimodalityVerdict {
  bool even_ok = true;
  bool odd_ok = true;
  bool whole_ok = true;
};
UnimodalityVerdict unimodality_check(const Partition& lambda, long k);

bool is_unimodal(const std::vector<Rational>& seq);

/// Symmetric group character value chi^lambda_mu (Murnaghan-Nakayama),
/// memoized.
Integer mn_character(const Partition& lambda, const Partition& mu);

}  // namespace parkspace

#endif  // PARKSPACE_SYMFUNC_HPP
