#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "pprime/errors.hpp"
#include "pprime/group_engine.hpp"

using namespace pprime;

namespace
{

PermutationGroup named(const std::string &name)
{
  const auto gens = builtin_generators(name);
  return group_from_permutations(gens);
}

std::vector<std::size_t> sorted_sizes(const ConjugacyClasses &cc)
{
  auto s = cc.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

// Affine maps x -> a x + b on Z/p with a in the subgroup generated by g.
std::vector<Permutation> affine_generators(std::uint32_t p, std::uint32_t g)
{
  Permutation shift(p);
  Permutation scale(p);
  for (std::uint32_t x = 0; x < p; ++x)
  {
    shift[x] = (x + 1) % p;
    scale[x] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * g) % p);
  }
  return {shift, scale};
}

}  // namespace

TEST_CASE("permutation closure orders")
{
  CHECK(named("C5").group.order() == 5);
  CHECK(named("D10").group.order() == 10);
  CHECK(named("S4").group.order() == 24);
  CHECK(named("A5").group.order() == 60);
  CHECK(permutation_group_order(builtin_generators("S6")) == 720);
  CHECK(permutation_group_order(builtin_generators("A7")) == 2520);
  CHECK_THROWS_AS(builtin_generators("Q8"), ParameterError);
  const std::vector<Permutation> bad{{0, 0, 1}};
  CHECK_THROWS_AS(group_from_permutations(bad), ParameterError);
  EngineLimits tight;
  tight.closure_bound = 100;
  CHECK_THROWS_AS(group_from_permutations(builtin_generators("S5"), tight), SizeError);
}

TEST_CASE("tables satisfy the group axioms")
{
  for (const char *name : {"C5", "D10", "S4", "A5", "S5"})
  {
    const auto pg = named(name);
    const auto axioms = check_group_axioms(pg.group.table(), pg.group.order());
    CAPTURE(name);
    CHECK(axioms.ok());
    CHECK(axioms.associativity_exhaustive);
    // The table agrees with composing permutations.
    for (Element a = 0; a < pg.group.order(); a += 3)
    {
      for (Element b = 0; b < pg.group.order(); b += 5)
      {
        Permutation ab(pg.degree);
        for (std::size_t x = 0; x < pg.degree; ++x)
        {
          ab[x] = pg.elements[b][pg.elements[a][x]];
        }
        REQUIRE(pg.elements[pg.group.mul(a, b)] == ab);
      }
    }
  }
}

TEST_CASE("from_table rejects non-groups")
{
  // Z/3 with one entry swapped breaks the Latin square.
  std::vector<Element> t{0, 1, 2, 1, 2, 0, 2, 0, 0};
  CHECK_THROWS_AS(FiniteGroup::from_table(t, 3), ParameterError);
  // A Latin square with identity that is not associative (order 5 loop).
  std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                            3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const auto ax = check_group_axioms(loop, 5);
  CHECK(ax.latin_square);
  CHECK(!ax.associative);
  CHECK_THROWS_AS(FiniteGroup::from_table(loop, 5), ParameterError);
  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1}, 2), ParameterError);
  const auto z3 = FiniteGroup::from_table({0, 1, 2, 1, 2, 0, 2, 0, 1}, 3);
  CHECK(z3.is_abelian());
  CHECK(z3.exponent() == 3);
}

TEST_CASE("conjugacy classes")
{
  const auto d10 = named("D10");
  const auto cc = conjugacy_classes(d10.group);
  CHECK(sorted_sizes(cc) == std::vector<std::size_t>{1, 2, 2, 5});
  CHECK(cc.reps[0] == d10.group.identity());

  const auto a5 = named("A5");
  CHECK(sorted_sizes(conjugacy_classes(a5.group)) == std::vector<std::size_t>{1, 12, 12, 15, 20});

  const auto s5 = named("S5");
  const auto cs5 = conjugacy_classes(s5.group);
  CHECK(cs5.count() == 7);
  for (std::size_t i = 0; i < cs5.count(); ++i)
  {
    const Element x = cs5.reps[i];
    CHECK(s5.group.order() == cs5.sizes[i] * s5.group.centralizer(x).size());
    CHECK(cs5.class_of[s5.group.inverse(x)] == cs5.inverse_class[i]);
  }
}

TEST_CASE("derived subgroups")
{
  CHECK(derived_subgroup_index(named("S4").group) == 2);
  CHECK(derived_subgroup_index(named("A5").group) == 1);
  CHECK(derived_subgroup_index(named("C5").group) == 5);
  CHECK(derived_subgroup_index(named("D10").group) == 2);
  const auto fr = group_from_permutations(affine_generators(17, 4));
  CHECK(fr.group.order() == 68);
  CHECK(derived_subgroup_index(fr.group) == 4);
}

TEST_CASE("splitting prime")
{
  const auto l = splitting_prime(60, 30);
  CHECK(l > 60);
  CHECK(l % 30 == 1);
  CHECK(l == 61);
  CHECK(splitting_prime(24, 12) == 37);
}

TEST_CASE("class coefficients of D10 satisfy the counting identity")
{
  const auto g = named("D10").group;
  const auto cc = conjugacy_classes(g);
  const auto a = class_coefficients(g, cc);
  const std::size_t c = cc.count();
  // sum_k a_ijk |C_k| = |C_i| |C_j|
  for (std::size_t i = 0; i < c; ++i)
  {
    for (std::size_t j = 0; j < c; ++j)
    {
      std::size_t total = 0;
      for (std::size_t k = 0; k < c; ++k)
      {
        total += a[(i * c + j) * c + k] * cc.sizes[k];
      }
      CHECK(total == cc.sizes[i] * cc.sizes[j]);
    }
  }
}

TEST_CASE("irreducible degrees of small groups")
{
  CHECK(irreducible_degrees(named("C5").group) == make_multiset({1, 1, 1, 1, 1}));
  CHECK(irreducible_degrees(named("D10").group) == make_multiset({1, 1, 2, 2}));
  CHECK(irreducible_degrees(named("S4").group) == make_multiset({1, 1, 2, 3, 3}));
  CHECK(irreducible_degrees(named("A5").group) == make_multiset({1, 3, 3, 4, 5}));
  CHECK(irreducible_degrees(named("S5").group) == make_multiset({1, 1, 4, 4, 5, 5, 6}));
  const auto fr = group_from_permutations(affine_generators(17, 4));
  CHECK(irreducible_degrees(fr.group) == make_multiset({1, 1, 1, 1, 4, 4, 4, 4}));
  CHECK(to_string(make_multiset({2, 1, 2, 1})) == "{1^2,2^2}");
}

TEST_CASE("A6 and A7 against known degree lists")
{
  const auto a6 = irreducible_degrees(named("A6").group);
  CHECK(a6 == make_multiset({1, 5, 5, 8, 8, 9, 10}));
  CHECK(pprime_degree_count(a6, 5) == 4);
  const auto a7 = irreducible_degrees(named("A7").group);
  CHECK(a7 == make_multiset({1, 6, 10, 10, 14, 14, 15, 21, 35}));
  CHECK(pprime_degree_count(a7, 7) == 5);
  CHECK(a7.sum_of_squares() == 2520);
}

TEST_CASE("degree invariants and determinism")
{
  for (const char *name : {"D10", "S4", "A5", "D14", "C6"})
  {
    const auto g = named(name).group;
    const auto cc = conjugacy_classes(g);
    const auto d = irreducible_degrees(g, cc);
    CAPTURE(name);
    CHECK(d.sum_of_squares() == g.order());
    CHECK(d.size() == cc.count());
    CHECK(d.linear_count() == derived_subgroup_index(g));
    for (auto x : d.degrees)
    {
      CHECK(g.order() % x == 0);
    }
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL})
    {
      DixonOptions opt;
      opt.seed = seed;
      CHECK(irreducible_degrees(g, cc, opt) == d);
    }
  }
}

TEST_CASE("engine limits")
{
  DixonOptions opt;
  opt.limits.max_classes = 3;
  CHECK_THROWS_AS(irreducible_degrees(named("S4").group, opt), SizeError);
}
