#include "pprime/partitions.hpp"

#include <algorithm>
#include <mutex>

#include "pprime/errors.hpp"

namespace pprime
{

PartitionTable::PartitionTable(std::size_t max_size) : pi_(max_size + 1, BigInt(0))
{
  pi_[0] = 1;
  // Standard coin-change recurrence over part sizes.
  for (std::size_t part = 1; part <= max_size; ++part)
  {
    for (std::size_t m = part; m <= max_size; ++m)
    {
      pi_[m] += pi_[m - part];
    }
  }
}

namespace
{

std::mutex cache_mutex;
std::vector<BigInt> cache{BigInt(1)};

// Truncated product of two power series of length len.
std::vector<BigInt> truncated_mul(const std::vector<BigInt> &a, const std::vector<BigInt> &b,
                                  std::size_t len)
{
  std::vector<BigInt> c(len, BigInt(0));
  for (std::size_t i = 0; i < len && i < a.size(); ++i)
  {
    if (a[i] == 0)
    {
      continue;
    }
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j)
    {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

std::vector<BigInt> partition_prefix(std::size_t n)
{
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.size() <= n)
  {
    cache = PartitionTable(std::max(n, 2 * cache.size())).values();
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

void walk_splits(std::uint64_t parts_left, std::size_t remaining, const std::vector<BigInt> &pi,
                 const BigInt &product, BigInt &sum)
{
  if (parts_left == 1)
  {
    sum += product * pi[remaining];
    return;
  }
  for (std::size_t first = 0; first <= remaining; ++first)
  {
    walk_splits(parts_left - 1, remaining - first, pi, product * pi[first], sum);
  }
}

}  // namespace

BigInt partition_count(std::size_t m)
{
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (m < cache.size())
    {
      return cache[m];
    }
  }
  return partition_prefix(m)[m];
}

SplitCountTable::SplitCountTable(std::uint64_t m, std::size_t max_s) : m_(m)
{
  if (m == 0)
  {
    throw ParameterError("split count needs m >= 1");
  }
  const std::size_t len = max_s + 1;
  std::vector<BigInt> base = partition_prefix(max_s);
  std::vector<BigInt> result(len, BigInt(0));
  result[0] = 1;
  // Square-and-multiply on truncated series; m can be a large prime power.
  for (std::uint64_t e = m; e > 0; e >>= 1)
  {
    if (e & 1U)
    {
      result = truncated_mul(result, base, len);
    }
    if (e > 1)
    {
      base = truncated_mul(base, base, len);
    }
  }
  k_ = std::move(result);
}

BigInt split_count(std::uint64_t m, std::size_t s) { return SplitCountTable(m, s)[s]; }

BigInt split_total(std::uint64_t m, std::size_t s)
{
  if (m == 0)
  {
    return s == 0 ? BigInt(1) : BigInt(0);
  }
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(s + m - 1),
               static_cast<unsigned long>(m - 1));
  return r;
}

BigInt split_count_naive(std::uint64_t m, std::size_t s)
{
  if (m == 0)
  {
    throw ParameterError("split count needs m >= 1");
  }
  if (split_total(m, s) > big(kNaiveSplitLimit))
  {
    throw SizeError("naive split enumeration over " + split_total(m, s).get_str() +
                    " splits exceeds the limit");
  }
  if (s == 0)
  {
    return 1;
  }
  const std::vector<BigInt> pi = partition_prefix(s);
  BigInt sum = 0;
  walk_splits(m, s, pi, BigInt(1), sum);
  return sum;
}

}  // namespace pprime
