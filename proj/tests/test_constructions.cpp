#include "doctest.h"

#include <numeric>

#include "pprime/constructions.hpp"
#include "pprime/errors.hpp"
#include "pprime/landau.hpp"

using namespace pprime;

TEST_CASE("build_frobenius")
{
  const auto h10 = build_frobenius(5, 2);
  CHECK(h10.group.order() == 10);
  CHECK(h10.params.a == 4);
  CHECK(check_group_axioms(h10.group.table(), 10).ok());
  CHECK(irreducible_degrees(h10.group) == make_multiset({1, 1, 2, 2}));

  const auto h68 = build_frobenius(17, 4);
  CHECK(conjugacy_classes(h68.group).count() == 8);
  CHECK(check_group_axioms(h68.group.table(), 68).ok());

  const auto c5 = build_frobenius(5, 1);
  CHECK(c5.group.is_abelian());
  CHECK(frobenius_degree_multiset(c5.params) == make_multiset({1, 1, 1, 1, 1}));

  CHECK_THROWS_AS(build_frobenius(5, 3), ParameterError);
  CHECK_THROWS_AS(build_frobenius(9, 2), ParameterError);
}

TEST_CASE("frobenius params have the exact order")
{
  for (std::uint64_t p : {5, 13, 17, 37, 101})
  {
    for (std::uint64_t m : divisors(p - 1))
    {
      const auto params = frobenius_params(p, m);
      CHECK(multiplicative_order(params.a, p) == m);
    }
  }
}

TEST_CASE("closed-form Frobenius multiset matches the engine")
{
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {5, 2}, {7, 3}, {7, 6}, {11, 5}, {13, 4}, {17, 4}, {37, 6}})
  {
    const auto h = build_frobenius(p, m);
    CAPTURE(p);
    CAPTURE(m);
    CHECK(irreducible_degrees(h.group) == frobenius_degree_multiset(h.params));
  }
  CHECK(frobenius_degree_multiset(frobenius_params(17, 4)) ==
        make_multiset({1, 1, 1, 1, 4, 4, 4, 4}));
}

TEST_CASE("extremal_count equals twice the square root")
{
  for (std::uint64_t p : {5, 17, 37, 101, 197, 257})
  {
    CHECK(extremal_count(p) == 2 * isqrt(p - 1));
  }
  CHECK_THROWS_AS(extremal_count(7), ParameterError);
  CHECK_THROWS_AS(extremal_count(2), ParameterError);
}

TEST_CASE("find_construction_prime")
{
  CHECK(find_construction_prime(5) == 19);
  CHECK(find_construction_prime(17) == 13);
  CHECK(multiplicative_order(find_construction_prime(37) % 37, 37) == 6);
  CHECK_THROWS_AS(find_construction_prime(5, 10), SearchExhausted);
}

TEST_CASE("smallest irreducible")
{
  CHECK(smallest_irreducible(2, 2) == Poly{1, 1, 1});
  CHECK(smallest_irreducible(19, 2) == Poly{1, 0, 1});
  CHECK(smallest_irreducible(3, 1) == Poly{0, 1});
}

TEST_CASE("matrix group actions")
{
  CHECK_THROWS_AS(matrix_group_action(4, {FpMatrix::identity(1)}), ParameterError);
  FpMatrix singular(2, 2);
  CHECK_THROWS_AS(matrix_group_action(5, {singular}), ParameterError);
  FpMatrix unipotent = FpMatrix::identity(2);
  unipotent(0, 1) = 1;
  CHECK_THROWS_AS(matrix_group_action(5, {unipotent}), ParameterError);

  const auto c4 = frobenius_action(17, 4);
  CHECK(c4.group.order() == 4);
  CHECK(c4.space_size() == 17);
}

TEST_CASE("Clifford count on small actions")
{
  FpMatrix neg(1, 1);
  neg(0, 0) = 1;  // trivial action of C_1
  const auto trivial = matrix_group_action(3, {neg});
  CHECK(clifford_pprime_count(trivial, 5).degrees == make_multiset({1, 1, 1}));

  // C_2 acting trivially on F_3 via the identity of GL_1(3) is not faithful,
  // so model C_3 x C_2 with V = F_3 and A = {1} on a second factor instead:
  // here the 2-dimensional space F_3^2 with A = <diag(1, -1)> gives C_3 x S_3.
  FpMatrix diag = FpMatrix::identity(2);
  diag(1, 1) = 2;
  const auto r = clifford_pprime_count(matrix_group_action(3, {diag}), 5);
  CHECK(r.degrees.sum_of_squares() == 18);
  CHECK(r.degrees == make_multiset({1, 1, 1, 1, 1, 1, 2, 2, 2}));

  const auto h10 = clifford_pprime_count(frobenius_action(5, 2), 5);
  CHECK(h10.degrees == make_multiset({1, 1, 2, 2}));
  CHECK(h10.pprime_count == 4);
  const auto h68 = clifford_pprime_count(frobenius_action(17, 4), 17);
  CHECK(h68.degrees == make_multiset({1, 1, 1, 1, 4, 4, 4, 4}));
}

TEST_CASE("semilinear construction for p = 5")
{
  const auto c = build_gamma_l(5, 19);
  CHECK(c.m == 2);
  CHECK(c.action.group.order() == 10);
  CHECK(c.action.space_size() == 361);
  CHECK(multiplier_fixed_point_free(c));
  CHECK(multiplier_fixed_point_free(c, 0));
  CHECK(frobenius_normalizes_without_centralizing(c));
  CHECK_THROWS_AS(build_gamma_l(5, 11), ParameterError);
  CHECK_THROWS_AS(build_gamma_l(7, 13), ParameterError);

  const auto serial = clifford_pprime_count(c.action, 5, Execution::Serial);
  const auto parallel = clifford_pprime_count(c.action, 5, Execution::Parallel);
  CHECK(serial.degrees == parallel.degrees);
  CHECK(serial.orbits.size() == parallel.orbits.size());
  CHECK(serial.pprime_count == 4);
  CHECK(serial.degrees.sum_of_squares() == 3610);
  CHECK(serial.degrees.size() == 67);
  // Nonzero dual orbits only carry degrees divisible by p.
  for (std::size_t i = 1; i < serial.orbits.size(); ++i)
  {
    for (auto d : serial.orbits[i].contribution.degrees)
    {
      CHECK(d % 5 == 0);
    }
  }
  CHECK(serial.orbits[0].contribution == make_multiset({1, 1, 2, 2}));
}

TEST_CASE("engine cross-check")
{
  const auto c = build_gamma_l(5, 19);
  const auto x = engine_cross_check(c.action, 5);
  CHECK(x.group_order == 3610);
  CHECK(x.class_count == 67);
  CHECK(x.engine == x.clifford.degrees);
  CHECK(x.engine_pprime_count == 4);

  const auto h = engine_cross_check(frobenius_action(17, 4), 17);
  CHECK(h.engine == make_multiset({1, 1, 1, 1, 4, 4, 4, 4}));
}

TEST_CASE("semilinear construction for p = 17")
{
  const auto c = build_gamma_l(17, 13);
  CHECK(c.action.group.order() == 68);
  const auto r = clifford_pprime_count(c.action, 17);
  CHECK(r.pprime_count == 8);
  CHECK(r.degrees.sum_of_squares() == 28561ULL * 68);
  CHECK_THROWS_AS(engine_cross_check(c.action, 17), SizeError);
}
