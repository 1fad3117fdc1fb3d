#ifndef PPRIME_PARTITIONS_HPP
#define PPRIME_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pprime/bigint.hpp"

namespace pprime
{

/// Values of the partition function pi(0..max_size), exact.
class PartitionTable
{
public:
  explicit PartitionTable(std::size_t max_size);

  std::size_t max_size() const { return pi_.size() - 1; }
  const BigInt &operator[](std::size_t m) const { return pi_.at(m); }
  const std::vector<BigInt> &values() const { return pi_; }

private:
  std::vector<BigInt> pi_;
};

/// k(m, s) for a fixed m and all s <= max_s, where k(m, s) is the number of
/// m-tuples of partitions of total size s.
class SplitCountTable
{
public:
  SplitCountTable(std::uint64_t m, std::size_t max_s);

  std::uint64_t m() const { return m_; }
  std::size_t max_s() const { return k_.size() - 1; }
  const BigInt &operator[](std::size_t s) const { return k_.at(s); }
  const std::vector<BigInt> &values() const { return k_; }

private:
  std::uint64_t m_;
  std::vector<BigInt> k_;
};

// pi(m). Backed by a process-wide table that grows geometrically on demand.
BigInt partition_count(std::size_t m);

// k(m, s): coefficient of x^s in (sum_j pi(j) x^j)^m.
BigInt split_count(std::uint64_t m, std::size_t s);

// Upper limit on the number of m-splits split_count_naive will walk.
inline constexpr std::uint64_t kNaiveSplitLimit = 10'000'000;

// Literal sum over all m-splits (s_1..s_m) of s of pi(s_1)...pi(s_m).
// Throws SizeError when the number of splits exceeds kNaiveSplitLimit.
BigInt split_count_naive(std::uint64_t m, std::size_t s);

// Number of m-splits of s, i.e. binom(s + m - 1, m - 1).
BigInt split_total(std::uint64_t m, std::size_t s);

// binom(k + t - 1, t): multisets of size t drawn from k labels. Lower bound
// on the p'-characters of a wreath product whose base has k orbits.
inline BigInt multiset_count(std::uint64_t k, std::size_t t) { return split_total(k, t); }

}  // namespace pprime

#endif  // PPRIME_PARTITIONS_HPP
