#ifndef PARKSPACE_PARTITIONS_HPP
#define PARKSPACE_PARTITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "parkspace/exact.hpp"

namespace parkspace {

/// Integer partition: weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long size() const;                // |lambda|
  long length() const { return static_cast<long>(parts_.size()); }
  long part(std::size_t i) const {  // 0 beyond the length
    return i < parts_.size() ? parts_[i] : 0;
  }
  bool empty() const { return parts_.empty(); }

  /// multiplicity of i among the parts
  long multiplicity(long i) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  // text format: comma-separated parts, "-" for the empty partition
  std::string to_string() const;
  static Partition parse(const std::string& s);

 private:
  std::vector<long> parts_;
};

/// m-tuple of partitions.
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components)
      : components_(std::move(components)) {}

  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(std::size_t i) const { return components_[i]; }
  long component_count() const { return static_cast<long>(components_.size()); }
  long size() const;

  /// cyclic shift by s: component i of the result is component (i+s) mod m
  MultiPartition shifted(long s) const;

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.components_ == b.components_;
  }
  friend bool operator<(const MultiPartition& a, const MultiPartition& b) {
    return a.components_ < b.components_;
  }

  // text format: semicolon-separated components, "-" for an empty component
  std::string to_string() const;
  static MultiPartition parse(const std::string& s);

 private:
  std::vector<Partition> components_;
};

/// Hook lengths, contents (column - row, zero-based) and n(lambda).
struct CellData {
  std::vector<long> hooks;
  std::vector<long> contents;
  long n_stat = 0;  // n(lambda) = sum (i-1) lambda_i
};

/// All partitions of n (length <= max_length if given), reverse-lexicographic.
std::vector<Partition> enumerate_partitions(long n,
                                            std::optional<long> max_length = std::nullopt);

/// All m-tuples of partitions of total size n, in lexicographic tuple order.
std::vector<MultiPartition> enumerate_multipartitions(long m, long n);

CellData hooks_and_contents(const Partition& lambda);

Integer z_lambda(const Partition& mu);
Integer class_size(const Partition& mu);  // n!/z_mu in Sym_n, n = |mu|

/// Signless Stirling numbers of the first kind, memoized.
Integer stirling_first(long n, long j);

/// Lemma-style check: binom(n,2) divides c(n,j) whenever n-j is odd.
bool stirling_divisibility_check(long n);

/// Refined check for a single class; requires lambda to have an even part
/// with odd multiplicity (throws std::invalid_argument otherwise).
bool class_divisibility_check(const Partition& lambda);

/// nu_p(binom(m,r)) by counting base-p borrows.
long kummer_valuation(long p, long m, long r);

long padic_valuation(long p, const Integer& x);

}  // namespace parkspace

#endif  // PARKSPACE_PARTITIONS_HPP
