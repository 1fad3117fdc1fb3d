#include "doctest.h"

#include <functional>
#include <vector>

#include "pprime/errors.hpp"
#include "pprime/partitions.hpp"

using namespace pprime;

namespace
{

// Brute force: count weakly decreasing sequences of positive parts.
std::uint64_t enumerate_partitions(unsigned n, unsigned max_part)
{
  if (n == 0)
  {
    return 1;
  }
  std::uint64_t total = 0;
  for (unsigned part = 1; part <= std::min(n, max_part); ++part)
  {
    total += enumerate_partitions(n - part, part);
  }
  return total;
}

}  // namespace

TEST_CASE("partition_count small values")
{
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(10) == 42);
  CHECK(enumerate_partitions(5, 5) == 7);
  CHECK(enumerate_partitions(10, 10) == 42);
}

TEST_CASE("partition_count agrees with brute-force enumeration up to 30")
{
  for (unsigned m = 0; m <= 30; ++m)
  {
    CAPTURE(m);
    CHECK(partition_count(m) == big(enumerate_partitions(m, m)));
  }
}

TEST_CASE("partition table is exact for large arguments")
{
  PartitionTable t(1000);
  CHECK(t[0] == 1);
  CHECK(t[1] == 1);
  CHECK(t[2] == 2);
  CHECK(t[3] == 3);
  CHECK(t[4] == 5);
  CHECK(t[5] == 7);
  CHECK(t[100] == BigInt("190569292"));
  // Far beyond 64 bits.
  CHECK(t[1000] == BigInt("24061467864032622473692149727991"));
  CHECK(partition_count(1000) == t[1000]);
}

TEST_CASE("split_count examples")
{
  CHECK(split_count(5, 0) == 1);
  CHECK(split_count(5, 1) == 5);
  CHECK(split_count(1, 6) == 11);
  CHECK(split_count_naive(2, 2) == 5);
  CHECK(split_count_naive(3, 0) == 1);
  CHECK(split_count_naive(5, 1) == 5);
}

TEST_CASE("split_count matches the literal split sum on the grid")
{
  for (std::uint64_t m = 1; m <= 8; ++m)
  {
    for (std::size_t s = 0; s <= 12; ++s)
    {
      CAPTURE(m);
      CAPTURE(s);
      CHECK(split_count(m, s) == split_count_naive(m, s));
    }
  }
}

TEST_CASE("split count table invariants")
{
  for (std::uint64_t m = 1; m <= 8; ++m)
  {
    SplitCountTable t(m, 12);
    CHECK(t[0] == 1);
    for (std::size_t s = 0; s <= 12; ++s)
    {
      CAPTURE(m);
      CAPTURE(s);
      CHECK(big(m * s) <= t[s]);
      if (m == 1)
      {
        CHECK(t[s] == partition_count(s));
      }
      if (s >= 1)
      {
        CHECK(t[s - 1] <= t[s]);
        if (m >= 2)
        {
          CHECK(split_count(m - 1, s) <= t[s]);
        }
      }
    }
  }
}

TEST_CASE("split_count handles large m by repeated squaring")
{
  // k(p^3, 1) = p^3 and k(m, 2) = m(m+3)/2
  CHECK(split_count(125, 1) == 125);
  CHECK(split_count(1000, 2) == 1000 * 1003 / 2);
}

TEST_CASE("naive split enumeration refuses oversized requests")
{
  CHECK_THROWS_AS(split_count_naive(40, 40), SizeError);
  CHECK_THROWS_AS(split_count(0, 3), ParameterError);
  CHECK(split_total(3, 2) == 6);
  CHECK(multiset_count(4, 2) == 10);
}
