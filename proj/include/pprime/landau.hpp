#ifndef PPRIME_LANDAU_HPP
#define PPRIME_LANDAU_HPP

#include <cstdint>
#include <vector>

namespace pprime
{

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);

// Deterministic Miller-Rabin; the witness set is valid for every 64-bit input.
bool is_prime(std::uint64_t n);

// Prime factorization (Pollard rho + Miller-Rabin), primes ascending with
// multiplicity.
struct PrimeFactor
{
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<PrimeFactor> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Least t >= 1 with a^t = 1 (mod n). Throws ParameterError if gcd(a, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// A prime p with p - 1 = m^2. p = 2 (m = 1) satisfies the formula but
/// carries the degenerate flag; every construction downstream needs p >= 5.
struct LandauPrime
{
  std::uint64_t p;
  std::uint64_t m;
  bool degenerate;

  friend bool operator==(const LandauPrime &, const LandauPrime &) = default;
};

std::vector<LandauPrime> landau_primes(std::uint64_t limit);

// True iff p is prime, p >= 5 and p - 1 is a perfect square.
bool is_landau_prime(std::uint64_t p);

struct PrimePower
{
  std::uint64_t r;
  unsigned f;
  std::uint64_t q;

  friend bool operator==(const PrimePower &, const PrimePower &) = default;
};

// All prime powers q = r^f <= limit, ascending in q.
std::vector<PrimePower> prime_powers(std::uint64_t limit);

// Returns (r, f) if n is a prime power, f = 0 otherwise.
PrimePower as_prime_power(std::uint64_t n);

}  // namespace pprime

#endif  // PPRIME_LANDAU_HPP
