#include "doctest.h"

#include <algorithm>

#include "pprime/landau.hpp"
#include "pprime/torus_search.hpp"

using namespace pprime;

namespace
{

const TorusHit *find(const std::vector<TorusHit> &hits, const std::string &label)
{
  auto it = std::find_if(hits.begin(), hits.end(),
                         [&](const TorusHit &h) { return h.label == label; });
  return it == hits.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("classical search contains the documented hits")
{
  const auto hits = search(256, 12);
  const auto *s44 = find(hits, "S4(4)");
  REQUIRE(s44 != nullptr);
  CHECK(s44->family == "bc");
  CHECK(s44->p == 17);
  CHECK(s44->m == 4);
  CHECK(s44->u == 1);

  const auto *o18 = find(hits, "O18^-(2)");
  REQUIRE(o18 != nullptr);
  CHECK(o18->n == 9);
  CHECK(o18->p == 257);
  CHECK(o18->m == 16);

  const auto *l2 = find(hits, "L2(256).8");
  REQUIRE(l2 != nullptr);
  CHECK(l2->u == 8);
  CHECK(l2->m == 16);

  const auto *l211 = find(hits, "L2(11)");
  REQUIRE(l211 != nullptr);
  CHECK(l211->p == 5);
  CHECK(l211->formula == "(q^(n-1)-1)/gcd(n,q-1)");

  const auto *l34 = find(hits, "L3(4)");
  REQUIRE(l34 != nullptr);
  CHECK(l34->m == 2);

  const auto *u311 = find(hits, "U3(11).2");
  REQUIRE(u311 != nullptr);
  CHECK(u311->p == 37);
  CHECK(u311->m == 6);

  CHECK(find(hits, "L2(4)")->identified == "A5");
  CHECK(find(hits, "L2(9)")->identified == "A6");
}

TEST_CASE("every hit satisfies m^2 + 1 = p with p prime")
{
  for (const auto &h : lie_type_hits(512, 16))
  {
    CAPTURE(h.label);
    CHECK(h.m * h.m + 1 == h.p);
    CHECK(is_prime(h.p));
    CHECK(h.p >= 5);
    CHECK((2 * h.f) % h.u == 0);
  }
}

TEST_CASE("serial and parallel search agree")
{
  const auto a = search(128, 10, Execution::Parallel);
  const auto b = search(128, 10, Execution::Serial);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].p == b[i].p);
  }
}

TEST_CASE("exceptional series")
{
  const auto hits = exceptional_series_hits();
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].label == "2G2(27)");
  CHECK(hits[0].p == 37);
  CHECK(hits[0].formula == "q+sqrt(3q)+1");
  CHECK(hits[1].label == "F4(4).2");
  CHECK(hits[1].p == 257);
  CHECK(std::none_of(hits.begin(), hits.end(), [](const TorusHit &h) { return h.family == "E8"; }));
}

TEST_CASE("defining characteristic and alternating groups")
{
  const auto def = defining_characteristic_hits();
  REQUIRE(def.size() == 1);
  CHECK(def[0].label == "L2(5)");
  CHECK(def[0].identified == "A5");

  const auto rows = alternating_check(300);
  REQUIRE(rows.size() == 7);
  for (const auto &row : rows)
  {
    CAPTURE(row.p);
    CHECK(row.holds == (row.p == 2 || row.p == 5));
  }
  CHECK(rows[1].p == 5);
  CHECK(rows[1].candidates == std::vector<std::string>{"A5", "A6"});
  CHECK(rows[2].half == 8);
  CHECK(rows[2].root == 4);
}

TEST_CASE("reconciliation")
{
  const auto hits = lie_type_hits(256, 12);
  const auto rec = reconcile_with_theorem(hits);
  CHECK(rec.missing.empty());
  CHECK(rec.extra.empty());
  CHECK(rec.ok());
  CHECK(rec.computed.size() == expected_lie_type_hits().size());

  auto fewer = hits;
  fewer.erase(std::remove_if(fewer.begin(), fewer.end(),
                             [](const TorusHit &h) { return h.label == "S16(2)"; }),
              fewer.end());
  TorusHit bogus;
  bogus.p = 101;
  bogus.label = "L2(101)";
  fewer.push_back(bogus);
  const auto bad = reconcile_with_theorem(fewer);
  CHECK(!bad.ok());
  CHECK(bad.missing == std::vector<LabelledPrime>{{257, "S16(2)"}});
  CHECK(bad.extra == std::vector<LabelledPrime>{{101, "L2(101)"}});
}

TEST_CASE("larger bounds add nothing at the known primes")
{
  const auto small = lie_type_hits(256, 12);
  const auto large = lie_type_hits(512, 16);
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (const auto &h : small)
  {
    a.push_back(h.label);
  }
  for (const auto &h : large)
  {
    if (h.p <= 257)
    {
      b.push_back(h.label);
    }
  }
  CHECK(a == b);
}
