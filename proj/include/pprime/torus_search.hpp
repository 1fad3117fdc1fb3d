#ifndef PPRIME_TORUS_SEARCH_HPP
#define PPRIME_TORUS_SEARCH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pprime/parallel.hpp"

namespace pprime
{

/// A cyclic maximal torus of prime order p whose automizer has order m with
/// m^2 + 1 = p.
struct TorusHit
{
  std::string family;   // bc, d, 2d, a, 2a or an exceptional series tag
  std::string formula;  // which torus of the family fired
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t f = 0;
  std::uint64_t n = 0;  // rank parameter; 0 for exceptional series
  std::uint64_t u = 1;  // field or graph-field extension degree
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::string label;        // e.g. L2(256).8
  std::string identified;   // isomorphic alternating group, if any (A5, A6)
};

// Classical families over all prime powers q <= q_max and ranks n <= n_max.
// Sorted by p then label, one hit per label.
std::vector<TorusHit> search(std::uint64_t q_max, std::uint64_t n_max,
                             Execution exec = Execution::Parallel);

// Exceptional series (Suzuki and Ree groups, G2, 3D4, F4, E6, 2E6, E7, E8)
// over q <= q_max.
std::vector<TorusHit> exceptional_series_hits(std::uint64_t q_max = 1 << 16);

// Groups of Lie type in their defining characteristic: only L2(p) has a Sylow
// p-normalizer with automizer (p - 1)/gcd(p - 1, 2); hits for Landau p <= limit.
std::vector<TorusHit> defining_characteristic_hits(std::uint64_t limit = 1'000'000);

struct AlternatingRow
{
  std::uint64_t p = 0;
  std::uint64_t half = 0;  // (p - 1)/2
  std::uint64_t root = 0;  // sqrt(p - 1)
  bool holds = false;      // (p - 1)/2 <= sqrt(p - 1)
  std::vector<std::string> candidates;
};

// (p - 1)/2 <= sqrt(p - 1) over Landau primes p <= limit (and the degenerate
// p = 2); candidates A5, A6 recorded where it holds for p >= 5.
std::vector<AlternatingRow> alternating_check(std::uint64_t limit = 300);

using LabelledPrime = std::pair<std::uint64_t, std::string>;

// The published list of almost simple groups, Lie-type entries only, with
// L2(4), L2(5) written as A5 and L2(9) as A6.
const std::vector<LabelledPrime> &expected_lie_type_hits();

struct Reconciliation
{
  std::vector<LabelledPrime> computed;  // after the A5/A6 identifications
  std::vector<LabelledPrime> missing;
  std::vector<LabelledPrime> extra;
  bool ok() const { return missing.empty() && extra.empty(); }
};

Reconciliation reconcile_with_theorem(const std::vector<TorusHit> &hits);

// search + exceptional_series_hits + defining_characteristic_hits, merged.
std::vector<TorusHit> lie_type_hits(std::uint64_t q_max, std::uint64_t n_max,
                                    Execution exec = Execution::Parallel);

}  // namespace pprime

#endif  // PPRIME_TORUS_SEARCH_HPP
