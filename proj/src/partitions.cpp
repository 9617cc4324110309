#include "parkspace/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parkspace {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Partition::multiplicity(long i) const {
  return std::count(parts_.begin(), parts_.end(), i);
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "-") return Partition();
  std::vector<long> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) parts.push_back(std::stol(tok));
  return Partition(std::move(parts));
}

long MultiPartition::size() const {
  long n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

MultiPartition MultiPartition::shifted(long s) const {
  long m = component_count();
  std::vector<Partition> comps(m);
  for (long i = 0; i < m; ++i) comps[i] = components_[(i + s) % m];
  return MultiPartition(std::move(comps));
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ';';
    os << components_[i].to_string();
  }
  return os.str();
}

MultiPartition MultiPartition::parse(const std::string& s) {
  std::vector<Partition> comps;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ';')) comps.push_back(Partition::parse(tok));
  return MultiPartition(std::move(comps));
}

namespace {
void enumerate_rec(long n, long max_part, long remaining_len, std::vector<long>& cur,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (remaining_len == 0) return;
  for (long p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_rec(n - p, p, remaining_len - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(long n, std::optional<long> max_length) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<long> cur;
  enumerate_rec(n, n, max_length.value_or(n), cur, out);
  if (n == 0) out.assign(1, Partition());
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions(long m, long n) {
  std::vector<MultiPartition> out;
  std::vector<Partition> cur(m);
  // distribute n over m components, lexicographic in the tuple of partitions
  struct Rec {
    long m;
    std::vector<MultiPartition>& out;
    std::vector<Partition>& cur;
    void go(long comp, long left) {
      if (comp == m) {
        if (left == 0) out.emplace_back(cur);
        return;
      }
      for (long sz = 0; sz <= left; ++sz) {
        for (const auto& p : enumerate_partitions(sz)) {
          cur[comp] = p;
          go(comp + 1, left - sz);
        }
      }
      cur[comp] = Partition();
    }
  } rec{m, out, cur};
  rec.go(0, n);
  return out;
}

CellData hooks_and_contents(const Partition& lambda) {
  CellData cd;
  const auto& parts = lambda.parts();
  long len = lambda.length();
  // conjugate column lengths
  std::vector<long> colLen(parts.empty() ? 0 : parts[0], 0);
  for (long i = 0; i < len; ++i)
    for (long j = 0; j < parts[i]; ++j) ++colLen[j];
  for (long i = 0; i < len; ++i) {
    cd.n_stat += i * parts[i];
    for (long j = 0; j < parts[i]; ++j) {
      cd.hooks.push_back((parts[i] - j) + (colLen[j] - i) - 1);
      cd.contents.push_back(j - i);
    }
  }
  return cd;
}

Integer z_lambda(const Partition& mu) {
  Integer z = 1;
  long prev = -1;
  for (long p : mu.parts()) {
    if (p != prev) {
      Integer f = factorial(mu.multiplicity(p));
      Integer ipow;
      mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(p),
                    static_cast<unsigned long>(mu.multiplicity(p)));
      z *= f * ipow;
      prev = p;
    }
  }
  return z;
}

Integer class_size(const Partition& mu) { return factorial(mu.size()) / z_lambda(mu); }

namespace {
std::map<std::pair<long, long>, Integer> g_stirling_cache;
std::mutex g_stirling_mutex;

Integer stirling_locked(long n, long j) {
  if (j == n) return 1;
  if (j == 0 || j > n) return 0;
  auto key = std::make_pair(n, j);
  auto it = g_stirling_cache.find(key);
  if (it != g_stirling_cache.end()) return it->second;
  Integer v = stirling_locked(n - 1, j - 1) + Integer(n - 1) * stirling_locked(n - 1, j);
  g_stirling_cache.emplace(key, v);
  return v;
}
}  // namespace

Integer stirling_first(long n, long j) {
  if (j < 0 || j > n) throw std::invalid_argument("stirling_first: j out of range");
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  return stirling_locked(n, j);
}

bool stirling_divisibility_check(long n) {
  if (n < 2) throw std::invalid_argument("stirling_divisibility_check: n must be >= 2");
  Integer b = binomial(n, 2);
  for (long j = n - 1; j >= 1; j -= 2) {
    if (stirling_first(n, j) % b != 0) return false;
  }
  return true;
}

bool class_divisibility_check(const Partition& lambda) {
  bool eligible = false;
  long prev = -1;
  for (long p : lambda.parts()) {
    if (p != prev && p % 2 == 0 && lambda.multiplicity(p) % 2 == 1) eligible = true;
    prev = p;
  }
  if (!eligible)
    throw std::invalid_argument(
        "class_divisibility_check: partition has no even part with odd multiplicity");
  return class_size(lambda) % binomial(lambda.size(), 2) == 0;
}

long kummer_valuation(long p, long m, long r) {
  if (!is_prime(p)) throw std::invalid_argument("kummer_valuation: p must be prime");
  if (r < 0 || r > m) throw std::invalid_argument("kummer_valuation: need 0 <= r <= m");
  long borrows = 0, carry = 0;
  long a = m, b = r;
  while (b > 0 || carry > 0) {
    long da = a % p, db = b % p + carry;
    if (da < db) {
      ++borrows;
      carry = 1;
    } else {
      carry = 0;
    }
    a /= p;
    b /= p;
  }
  return borrows;
}

long padic_valuation(long p, const Integer& x) {
  if (x == 0) throw std::invalid_argument("padic_valuation of zero");
  Integer cur = abs(x);
  long v = 0;
  while (cur % p == 0) {
    cur /= p;
    ++v;
  }
  return v;
}

}  // namespace parkspace
