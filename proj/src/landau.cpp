#include "pprime/landau.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pprime/errors.hpp"

namespace pprime
{

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n)
{
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp > 0)
  {
    if (exp & 1U)
    {
      result = mulmod(result, base, n);
    }
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::uint64_t isqrt(std::uint64_t n)
{
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<unsigned __int128>(r) * r > n)
  {
    --r;
  }
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
  {
    ++r;
  }
  return r;
}

bool is_square(std::uint64_t n)
{
  const std::uint64_t r = isqrt(n);
  return r * r == n;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
  {
    return false;
  }
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
  {
    if (n % small == 0)
    {
      return n == small;
    }
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0)
  {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
  {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
    {
      continue;
    }
    bool composite = true;
    for (unsigned i = 1; i < s; ++i)
    {
      x = mulmod(x, x, n);
      if (x == n - 1)
      {
        composite = false;
        break;
      }
    }
    if (composite)
    {
      return false;
    }
  }
  return true;
}

namespace
{

std::uint64_t pollard_rho(std::uint64_t n)
{
  if (n % 2 == 0)
  {
    return 2;
  }
  std::mt19937_64 rng(n);
  for (;;)
  {
    const std::uint64_t c = rng() % (n - 1) + 1;
    std::uint64_t x = rng() % n;
    std::uint64_t y = x;
    std::uint64_t d = 1;
    auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1)
    {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n)
    {
      return d;
    }
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t> &out)
{
  if (n == 1)
  {
    return;
  }
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13})
  {
    if (n % small == 0)
    {
      out.push_back(small);
      factor_into(n / small, out);
      return;
    }
  }
  if (is_prime(n))
  {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<PrimeFactor> factorize(std::uint64_t n)
{
  std::vector<std::uint64_t> raw;
  if (n > 1)
  {
    factor_into(n, raw);
  }
  std::sort(raw.begin(), raw.end());
  std::vector<PrimeFactor> out;
  for (std::uint64_t p : raw)
  {
    if (!out.empty() && out.back().prime == p)
    {
      ++out.back().exponent;
    }
    else
    {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (const auto &pf : factorize(n))
  {
    out.push_back(pf.prime);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out{1};
  for (const auto &pf : factorize(n))
  {
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= pf.exponent; ++e)
    {
      pk *= pf.prime;
      for (std::size_t i = 0; i < existing; ++i)
      {
        out.push_back(out[i] * pk);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
  std::vector<std::uint64_t> out;
  if (limit < 2)
  {
    return out;
  }
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i)
  {
    if (composite[i])
    {
      continue;
    }
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
    {
      composite[j] = true;
    }
  }
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n)
{
  if (n < 2)
  {
    throw ParameterError("multiplicative order needs modulus >= 2");
  }
  if (std::gcd(a % n, n) != 1)
  {
    throw ParameterError("multiplicative order needs gcd(a, n) = 1");
  }
  // phi(n), then strip prime factors while the power stays 1.
  std::uint64_t phi = n;
  for (const auto &pf : factorize(n))
  {
    phi = phi / pf.prime * (pf.prime - 1);
  }
  std::uint64_t order = phi;
  for (const auto &pf : factorize(phi))
  {
    for (unsigned e = 0; e < pf.exponent; ++e)
    {
      if (powmod(a, order / pf.prime, n) == 1)
      {
        order /= pf.prime;
      }
      else
      {
        break;
      }
    }
  }
  return order;
}

std::vector<LandauPrime> landau_primes(std::uint64_t limit)
{
  std::vector<LandauPrime> out;
  for (std::uint64_t m = 1; m * m + 1 <= limit; ++m)
  {
    const std::uint64_t p = m * m + 1;
    if (is_prime(p))
    {
      out.push_back({p, m, p == 2});
    }
  }
  return out;
}

bool is_landau_prime(std::uint64_t p) { return p >= 5 && is_prime(p) && is_square(p - 1); }

std::vector<PrimePower> prime_powers(std::uint64_t limit)
{
  std::vector<PrimePower> out;
  for (std::uint64_t r : primes_up_to(limit))
  {
    std::uint64_t q = r;
    for (unsigned f = 1;; ++f)
    {
      out.push_back({r, f, q});
      if (q > limit / r)
      {
        break;
      }
      q *= r;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower &a, const PrimePower &b) { return a.q < b.q; });
  return out;
}

PrimePower as_prime_power(std::uint64_t n)
{
  if (n < 2)
  {
    return {0, 0, n};
  }
  const auto factors = factorize(n);
  if (factors.size() != 1)
  {
    return {0, 0, n};
  }
  return {factors[0].prime, factors[0].exponent, n};
}

}  // namespace pprime
