#ifndef PPRIME_CONSTRUCTIONS_HPP
#define PPRIME_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pprime/group_engine.hpp"
#include "pprime/modular.hpp"
#include "pprime/parallel.hpp"

namespace pprime
{

/// Affine group x -> a^j x + b on Z/p, with a of multiplicative order m.
struct FrobeniusParams
{
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t a = 0;
};

struct FrobeniusGroup
{
  FrobeniusParams params;
  FiniteGroup group;  // element j*p + b is x -> a^j x + b
};

// Throws ParameterError unless p is prime and m divides p-1. The multiplier
// is the smallest residue of order exactly m.
FrobeniusParams frobenius_params(std::uint64_t p, std::uint64_t m);
FrobeniusGroup build_frobenius(std::uint64_t p, std::uint64_t m);

// m ones and (p-1)/m copies of m.
DegreeMultiset frobenius_degree_multiset(const FrobeniusParams &params);

// Number of p'-degree characters of C_p : C_sqrt(p-1). Throws ParameterError
// unless p - 1 is a square and p >= 5.
std::uint64_t extremal_count(std::uint64_t p);

/// A finite group acting linearly on F_ell^dim. Matrices act on column
/// vectors; matrices[mul(a, b)] = matrices[b] * matrices[a].
struct LinearGroupAction
{
  std::uint64_t ell = 0;
  std::size_t dim = 0;
  FiniteGroup group;
  std::vector<FpMatrix> matrices;

  // ell^dim; throws SizeError above 2^32.
  std::uint64_t space_size() const;
};

// Enumerates the matrix group generated by gens and tabulates it. Checks
// invertibility, coprimality of the group order with ell, and the
// homomorphism property (exhaustive up to order 512, sampled above).
// Throws ParameterError on bad input and SizeError past limits.closure_bound.
LinearGroupAction matrix_group_action(std::uint64_t ell, std::vector<FpMatrix> gens,
                                      const EngineLimits &limits = {});

// V = Z/p (dimension 1) with C_m acting by multiplication.
LinearGroupAction frobenius_action(std::uint64_t p, std::uint64_t m);

// Smallest prime r <= search_limit with ord_p(r) = sqrt(p - 1). Throws
// SearchExhausted if there is none.
std::uint64_t find_construction_prime(std::uint64_t p, std::uint64_t search_limit = 1'000'000);

// Smallest monic irreducible polynomial of degree m over F_r, ordering
// coefficient vectors as base-r integers with the constant term least
// significant.
Poly smallest_irreducible(std::uint64_t r, std::size_t m);

struct GammaLConstruction
{
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  Poly modulus;           // defines F_{r^m} = F_r[x] / (modulus)
  FpMatrix multiplier;    // multiplication by a field element of order p
  FpMatrix frobenius;     // x -> x^r
  LinearGroupAction action;
};

// Multiplication by the field element with the given coefficients.
FpMatrix field_multiplication_matrix(const PrimeField &k, const Poly &modulus,
                                     const std::vector<std::uint64_t> &element);

// Throws ParameterError unless ord_p(r) = sqrt(p - 1), and ConsistencyError
// if the built action fails its checks.
GammaLConstruction build_gamma_l(std::uint64_t p, std::uint64_t r);

// No nontrivial power of the multiplier fixes a nonzero vector. Vectors are
// enumerated when |V| * (p - 1) is below exhaustive_limit; otherwise the
// fixed space is computed by linear algebra.
bool multiplier_fixed_point_free(const GammaLConstruction &c,
                                 std::uint64_t exhaustive_limit = 50'000'000);
// The Frobenius map conjugates the multiplier into the group it generates and
// commutes with none of its nontrivial powers.
bool frobenius_normalizes_without_centralizing(const GammaLConstruction &c);

struct DualOrbit
{
  std::uint64_t representative = 0;  // base-ell encoding of a dual vector
  std::size_t size = 0;
  std::size_t inertia_order = 0;
  DegreeMultiset contribution;
};

struct CliffordResult
{
  std::vector<DualOrbit> orbits;  // sorted by representative; 0 first
  DegreeMultiset degrees;
  std::size_t pprime_count = 0;
};

// Degrees of V : A by orbits of A on the dual of V and the degrees of the
// inertia groups. Requires gcd(|A|, ell) = 1. Throws SizeError when |V|
// exceeds space_limit.
CliffordResult clifford_pprime_count(const LinearGroupAction &action, std::uint64_t p,
                                     Execution exec = Execution::Parallel,
                                     const DixonOptions &options = {},
                                     std::uint64_t space_limit = 20'000'000);

// V : A as affine permutations of V.
PermutationGroup semidirect_permutation_group(const LinearGroupAction &action,
                                              const EngineLimits &limits = {});

struct CrossCheck
{
  CliffordResult clifford;
  DegreeMultiset engine;
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  std::size_t engine_pprime_count = 0;
};

// Runs both the Clifford count and the degree engine on V : A. Throws
// ConsistencyError if they disagree.
CrossCheck engine_cross_check(const LinearGroupAction &action, std::uint64_t p,
                              const DixonOptions &options = {});

}  // namespace pprime

#endif  // PPRIME_CONSTRUCTIONS_HPP
