#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "pprime/errors.hpp"
#include "pprime/landau.hpp"
#include "pprime/partitions.hpp"
#include "pprime/symmetric_chars.hpp"

using namespace pprime;

TEST_CASE("p_adic_expansion")
{
  CHECK(p_adic_expansion(7, 5).digits == std::vector<std::uint64_t>{2, 1});
  CHECK(p_adic_expansion(5, 5).digits == std::vector<std::uint64_t>{0, 1});
  CHECK(p_adic_expansion(17, 17).digits == std::vector<std::uint64_t>{0, 1});
  CHECK_THROWS_AS(p_adic_expansion(10, 4), ParameterError);
  for (std::uint64_t p : {2, 3, 5, 7})
  {
    for (std::uint64_t n = 1; n < 500; ++n)
    {
      const auto e = p_adic_expansion(n, p);
      std::uint64_t value = 0;
      std::uint64_t w = 1;
      for (std::uint64_t d : e.digits)
      {
        REQUIRE(d < p);
        value += d * w;
        w *= p;
      }
      REQUIRE(value == n);
      REQUIRE(e.digits.back() != 0);
    }
  }
}

TEST_CASE("macdonald_count on the three exceptional cases")
{
  CHECK(macdonald_count(5, 5) == 5);   // n = p
  CHECK(macdonald_count(8, 7) == 7);   // n = p + 1
  CHECK(macdonald_count(7, 5) == 10);  // n = p + 2
  for (std::uint64_t p : {5, 7, 11, 13, 17})
  {
    CHECK(macdonald_count(p, p) == big(p));
  }
  for (std::uint64_t p : {7, 11, 13})
  {
    CHECK(macdonald_count(p + 1, p) == big(p));
  }
  for (std::uint64_t p : {5, 7, 11, 13})
  {
    CHECK(macdonald_count(p + 2, p) == big(2 * p));
  }
}

TEST_CASE("hook_degree")
{
  CHECK(hook_degree(PartitionShape({5})) == 1);
  CHECK(hook_degree(PartitionShape({4, 1})) == 4);
  CHECK(hook_degree(PartitionShape({2, 2, 1})) == 5);
  CHECK(hook_degree(PartitionShape({3, 2, 1})) == 16);
  CHECK_THROWS_AS(PartitionShape({1, 2}), ParameterError);
}

TEST_CASE("partition shapes")
{
  const auto shapes = all_partitions(6);
  CHECK(shapes.size() == 11);
  CHECK(shapes.front() == PartitionShape({6}));
  CHECK(PartitionShape({3, 1}).conjugate() == PartitionShape({2, 1, 1}));
  CHECK(PartitionShape({3, 2, 1}).self_conjugate());
}

TEST_CASE("oracle examples")
{
  CHECK(irr_pprime_count_sym_oracle(5, 5) == 5);
  CHECK(irr_pprime_count_sym_oracle(7, 5) == 10);
  CHECK(irr_pprime_count_sym_oracle(4, 5) == 5);
  // A_6 degrees 1,5,5,8,8,9,10; the 5'-entries are 1,8,8,9.
  const auto a6 = alternating_degrees(6);
  std::vector<std::uint64_t> degs;
  for (const auto &d : a6)
  {
    degs.push_back(d.get_ui());
  }
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<std::uint64_t>{1, 5, 5, 8, 8, 9, 10});
  CHECK(irr_pprime_count_alt_oracle(6, 5) == 4);
  CHECK(irr_pprime_count_alt_oracle(5, 5) == 4);
  CHECK(irr_pprime_count_alt_oracle(7, 7) == 5);
  CHECK_THROWS_AS(irr_pprime_count_alt_oracle(4, 3), ParameterError);
  CHECK_THROWS_AS(irr_pprime_count_sym_oracle(31, 5), SizeError);
  CHECK(irr_pprime_count_sym_oracle(31, 5, 40) > 0);
}

TEST_CASE("sum of squared hook degrees is n!")
{
  for (unsigned n = 1; n <= 25; ++n)
  {
    BigInt sum = 0;
    for (const auto &d : symmetric_degrees(n))
    {
      sum += d * d;
    }
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    CAPTURE(n);
    CHECK(sum == fact);
  }
}

TEST_CASE("alternating degrees: class count and sum of squares")
{
  for (unsigned n = 2; n <= 20; ++n)
  {
    std::size_t pairs = 0;
    std::size_t self = 0;
    for (const auto &shape : all_partitions(n))
    {
      if (shape.self_conjugate())
      {
        ++self;
      }
      else
      {
        ++pairs;
      }
    }
    pairs /= 2;
    const auto alt = alternating_degrees(n);
    CAPTURE(n);
    CHECK(alt.size() == pairs + 2 * self);
    BigInt sum = 0;
    for (const auto &d : alt)
    {
      sum += d * d;
    }
    BigInt half_fact;
    mpz_fac_ui(half_fact.get_mpz_t(), n);
    half_fact /= 2;
    CHECK(sum == half_fact);
  }
}

TEST_CASE("Macdonald equals the hook-length oracle and the lower bound holds")
{
  for (unsigned n = 1; n <= 25; ++n)
  {
    for (std::uint64_t p : primes_up_to(n))
    {
      CAPTURE(n);
      CAPTURE(p);
      const BigInt m = macdonald_count(n, p);
      CHECK(m == big(irr_pprime_count_sym_oracle(n, p)));
      CHECK(m >= big(n - 1));
    }
  }
}

TEST_CASE("verify_symmetric_bounds: sweep and specific primes")
{
  const auto report = verify_symmetric_bounds(25, std::nullopt);
  CHECK(report.violations() == 0);
  CHECK(!report.rows.empty());
  const auto serial = verify_symmetric_bounds(25, std::nullopt, Execution::Serial);
  REQUIRE(serial.rows.size() == report.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i)
  {
    CHECK(serial.rows[i].n == report.rows[i].n);
    CHECK(serial.rows[i].p == report.rows[i].p);
    CHECK(serial.rows[i].macdonald == report.rows[i].macdonald);
    CHECK(serial.rows[i].oracle == report.rows[i].oracle);
  }

  const auto r13 = verify_symmetric_bounds(14, std::vector<std::uint64_t>{13});
  REQUIRE(r13.rows.size() == 2);
  CHECK(r13.rows[0].n == 13);
  CHECK(r13.rows[0].macdonald == 13);
  CHECK(r13.rows[1].n == 14);
  CHECK(r13.rows[1].macdonald == 13);

  const auto with6 = verify_symmetric_bounds(6, std::vector<std::uint64_t>{5});
  REQUIRE(with6.rows.size() == 2);
  CHECK(with6.rows[1].flagged_n6);
  CHECK(with6.rows[1].alternating == 4);
  CHECK_THROWS_AS(verify_symmetric_bounds(10, std::vector<std::uint64_t>{4}), ParameterError);
}
