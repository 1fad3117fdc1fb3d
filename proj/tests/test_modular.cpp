#include "doctest.h"

#include <algorithm>
#include <random>

#include "pprime/errors.hpp"
#include "pprime/modular.hpp"

using namespace pprime;

TEST_CASE("PrimeField arithmetic")
{
  const PrimeField k(101);
  CHECK(k.mul(k.inv(7), 7) == 1);
  CHECK(k.pow(3, 100) == 1);
  CHECK(k.neg(0) == 0);
  CHECK(k.sub(3, 5) == 99);
}

TEST_CASE("polynomial division and gcd")
{
  const PrimeField k(13);
  const Poly f{1, 2, 1};   // (x + 1)^2
  const Poly g{12, 0, 1};  // (x - 1)(x + 1)
  CHECK(poly::gcd(k, f, g) == Poly{1, 1});
  Poly q;
  Poly r;
  poly::divmod(k, poly::mul(k, f, g), g, q, r);
  CHECK(q == f);
  CHECK(r.empty());
}

TEST_CASE("roots over F_L")
{
  std::mt19937_64 rng(7);
  const PrimeField k(1'000'003);
  const std::vector<std::uint64_t> want{2, 17, 999, 500'000};
  Poly f{1};
  for (std::uint64_t a : want)
  {
    f = poly::mul(k, f, Poly{k.neg(a), 1});
  }
  f = poly::mul(k, f, Poly{1, 0, 1});  // x^2 + 1 has no roots since L = 3 mod 4
  auto got = poly::roots(k, f, rng);
  std::sort(got.begin(), got.end());
  CHECK(got == want);

  const PrimeField small(31);
  auto few = poly::roots(small, Poly{small.neg(4), 0, 1}, rng);
  std::sort(few.begin(), few.end());
  CHECK(few == std::vector<std::uint64_t>{2, 29});
}

TEST_CASE("irreducibility")
{
  const PrimeField k(2);
  CHECK(poly::is_irreducible(k, Poly{1, 1, 1}));
  CHECK(!poly::is_irreducible(k, Poly{1, 0, 1}));
  CHECK(poly::is_irreducible(k, Poly{1, 1, 0, 0, 1}));
  const PrimeField k19(19);
  CHECK(!poly::is_irreducible(k19, Poly{1, 0, 1, 0, 1}));  // x^4+x^2+1 = (x^2+x+1)(x^2-x+1)
}

TEST_CASE("charpoly satisfies Cayley-Hamilton")
{
  const PrimeField k(10007);
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 2, 5, 9})
  {
    FpMatrix m(n, n);
    for (auto &x : m.a)
    {
      x = rng() % 10007;
    }
    const Poly chi = linalg::charpoly(k, m);
    REQUIRE(poly::degree(chi) == static_cast<int>(n));
    CHECK(chi.back() == 1);
    FpMatrix acc(n, n);
    FpMatrix power = FpMatrix::identity(n);
    for (std::size_t i = 0; i < chi.size(); ++i)
    {
      for (std::size_t j = 0; j < acc.a.size(); ++j)
      {
        acc.a[j] = k.add(acc.a[j], k.mul(chi[i], power.a[j]));
      }
      power = linalg::mul(k, power, m);
    }
    CHECK(std::all_of(acc.a.begin(), acc.a.end(), [](std::uint64_t v) { return v == 0; }));
  }
}

TEST_CASE("rank, nullspace and inverse")
{
  const PrimeField k(7);
  FpMatrix m(3, 3);
  m.a = {1, 2, 3, 2, 4, 6, 0, 1, 1};
  CHECK(linalg::rank(k, m) == 2);
  const FpMatrix ns = linalg::nullspace(k, m);
  REQUIRE(ns.rows == 1);
  const auto image = linalg::apply(k, m, std::vector<std::uint64_t>(ns.a.begin(), ns.a.end()));
  CHECK(std::all_of(image.begin(), image.end(), [](std::uint64_t v) { return v == 0; }));
  CHECK_THROWS_AS(linalg::inverse(k, m), ParameterError);

  FpMatrix b(2, 2);
  b.a = {2, 1, 1, 1};
  CHECK(linalg::mul(k, b, linalg::inverse(k, b)) == FpMatrix::identity(2));
}
