#ifndef PPRIME_BIGINT_HPP
#define PPRIME_BIGINT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pprime
{

using BigInt = mpz_class;

inline BigInt big(std::uint64_t v)
{
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(v));
}

inline BigInt pow(const BigInt &base, unsigned long exp)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool divisible_by(const BigInt &v, std::uint64_t d)
{
  return mpz_divisible_ui_p(v.get_mpz_t(), d) != 0;
}

inline std::string to_string(const BigInt &v) { return v.get_str(); }

}  // namespace pprime

#endif  // PPRIME_BIGINT_HPP
