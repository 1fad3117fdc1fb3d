#include "doctest.h"

#include <algorithm>

#include "pprime/errors.hpp"
#include "pprime/landau.hpp"

using namespace pprime;

namespace
{

bool trial_division_prime(std::uint64_t n)
{
  if (n < 2)
  {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d)
  {
    if (n % d == 0)
    {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("is_prime")
{
  CHECK(is_prime(257));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1001));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  for (std::uint64_t n = 0; n < 20000; ++n)
  {
    REQUIRE(is_prime(n) == trial_division_prime(n));
  }
}

TEST_CASE("factorize and divisors")
{
  const auto f = factorize(2ULL * 2 * 3 * 1000003ULL * 1000003ULL);
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 2);
  CHECK(f[2].prime == 1000003);
  CHECK(f[2].exponent == 2);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(prime_divisors(1023) == std::vector<std::uint64_t>{3, 11, 31});
}

TEST_CASE("landau_primes")
{
  auto list = landau_primes(300);
  std::vector<std::uint64_t> ps;
  for (const auto &lp : list)
  {
    ps.push_back(lp.p);
  }
  CHECK(ps == std::vector<std::uint64_t>{2, 5, 17, 37, 101, 197, 257});
  CHECK(list.front().degenerate);
  CHECK(std::none_of(list.begin() + 1, list.end(), [](const LandauPrime &l) { return l.degenerate; }));

  std::vector<std::uint64_t> small;
  for (const auto &lp : landau_primes(4))
  {
    small.push_back(lp.p);
  }
  CHECK(small == std::vector<std::uint64_t>{2});

  std::vector<std::uint64_t> thousand;
  for (const auto &lp : landau_primes(1000))
  {
    thousand.push_back(lp.p);
  }
  CHECK(thousand == std::vector<std::uint64_t>{2, 5, 17, 37, 101, 197, 257, 401, 577, 677});
}

TEST_CASE("landau_primes equals the trial-division set and m is even")
{
  const std::uint64_t limit = 200000;
  std::vector<std::uint64_t> expected;
  for (std::uint64_t m = 1; m * m + 1 <= limit; ++m)
  {
    if (trial_division_prime(m * m + 1))
    {
      expected.push_back(m * m + 1);
    }
  }
  std::vector<std::uint64_t> got;
  for (const auto &lp : landau_primes(limit))
  {
    got.push_back(lp.p);
    CHECK(lp.m * lp.m + 1 == lp.p);
    if (lp.m > 1)
    {
      CHECK(lp.m % 2 == 0);
    }
  }
  CHECK(got == expected);
}

TEST_CASE("multiplicative_order")
{
  CHECK(multiplicative_order(19, 5) == 2);
  CHECK(multiplicative_order(1, 7) == 1);
  CHECK(multiplicative_order(3, 7) == 6);
  CHECK_THROWS_AS(multiplicative_order(6, 9), ParameterError);
}

TEST_CASE("multiplicative_order divides the brute-force unit group order")
{
  for (std::uint64_t n = 2; n <= 400; ++n)
  {
    std::uint64_t units = 0;
    for (std::uint64_t a = 1; a < n; ++a)
    {
      units += gcd(a, n) == 1;
    }
    for (std::uint64_t a = 1; a < n; ++a)
    {
      if (gcd(a, n) != 1)
      {
        continue;
      }
      const std::uint64_t t = multiplicative_order(a, n);
      // brute force least t
      std::uint64_t x = a % n;
      std::uint64_t brute = 1;
      while (x != 1 % n)
      {
        x = x * a % n;
        ++brute;
      }
      REQUIRE(t == brute);
      REQUIRE(units % t == 0);
    }
  }
}

TEST_CASE("prime_powers")
{
  const std::vector<PrimePower> nine{{2, 1, 2}, {3, 1, 3}, {2, 2, 4}, {5, 1, 5},
                                     {7, 1, 7}, {2, 3, 8}, {3, 2, 9}};
  CHECK(prime_powers(9) == nine);
  const auto sixteen = prime_powers(16);
  CHECK(std::find(sixteen.begin(), sixteen.end(), PrimePower{2, 4, 16}) != sixteen.end());
  const auto big = prime_powers(256);
  CHECK(std::find(big.begin(), big.end(), PrimePower{2, 8, 256}) != big.end());
  CHECK(as_prime_power(1001).f == 0);
  CHECK(as_prime_power(1024).f == 10);
}
