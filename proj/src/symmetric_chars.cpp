#include "pprime/symmetric_chars.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "pprime/errors.hpp"
#include "pprime/landau.hpp"
#include "pprime/partitions.hpp"

namespace pprime
{

PAdicExpansion p_adic_expansion(std::uint64_t n, std::uint64_t p)
{
  if (!is_prime(p))
  {
    throw ParameterError("p-adic expansion needs a prime base, got " + std::to_string(p));
  }
  if (n == 0)
  {
    throw ParameterError("p-adic expansion needs n >= 1");
  }
  PAdicExpansion e{n, p, {}};
  for (std::uint64_t rest = n; rest > 0; rest /= p)
  {
    e.digits.push_back(rest % p);
  }
  return e;
}

BigInt macdonald_count(std::uint64_t n, std::uint64_t p)
{
  const PAdicExpansion e = p_adic_expansion(n, p);
  BigInt product = 1;
  std::uint64_t weight = 1;
  for (std::uint64_t digit : e.digits)
  {
    product *= split_count(weight, digit);
    weight *= p;
  }
  return product;
}

PartitionShape::PartitionShape(std::vector<unsigned> parts) : parts_(std::move(parts))
{
  if (std::find(parts_.begin(), parts_.end(), 0U) != parts_.end() ||
      !std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
  {
    throw ParameterError("partition parts must be positive and weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

PartitionShape PartitionShape::conjugate() const
{
  std::vector<unsigned> cols;
  if (!parts_.empty())
  {
    cols.assign(parts_.front(), 0);
    for (unsigned row : parts_)
    {
      for (unsigned j = 0; j < row; ++j)
      {
        ++cols[j];
      }
    }
  }
  return PartitionShape(std::move(cols));
}

namespace
{

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned> &prefix,
              std::vector<PartitionShape> &out)
{
  if (remaining == 0)
  {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part)
  {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void check_bound(unsigned n, unsigned bound)
{
  if (n > bound)
  {
    throw SizeError("oracle bound exceeded: n = " + std::to_string(n) + " > " +
                    std::to_string(bound));
  }
}

std::uint64_t count_coprime(const std::vector<BigInt> &degrees, std::uint64_t p)
{
  return static_cast<std::uint64_t>(std::count_if(
      degrees.begin(), degrees.end(), [p](const BigInt &d) { return !divisible_by(d, p); }));
}

}  // namespace

std::vector<PartitionShape> all_partitions(unsigned n)
{
  std::vector<PartitionShape> out;
  std::vector<unsigned> prefix;
  generate(n, n, prefix, out);
  return out;
}

BigInt hook_degree(const PartitionShape &shape)
{
  const auto &rows = shape.parts();
  const auto cols = shape.conjugate().parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    for (unsigned j = 0; j < rows[i]; ++j)
    {
      const unsigned arm = rows[i] - j - 1;
      const unsigned leg = cols[j] - static_cast<unsigned>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), shape.size());
  if (!mpz_divisible_p(factorial.get_mpz_t(), hooks.get_mpz_t()))
  {
    throw ConsistencyError("hook product does not divide n!");
  }
  BigInt degree;
  mpz_divexact(degree.get_mpz_t(), factorial.get_mpz_t(), hooks.get_mpz_t());
  return degree;
}

std::vector<BigInt> symmetric_degrees(unsigned n, unsigned bound)
{
  check_bound(n, bound);
  std::vector<BigInt> out;
  for (const auto &shape : all_partitions(n))
  {
    out.push_back(hook_degree(shape));
  }
  return out;
}

std::vector<BigInt> alternating_degrees(unsigned n, unsigned bound)
{
  check_bound(n, bound);
  if (n < 2)
  {
    return {BigInt(1)};
  }
  std::vector<BigInt> out;
  for (const auto &shape : all_partitions(n))
  {
    const PartitionShape conj = shape.conjugate();
    if (conj == shape)
    {
      const BigInt d = hook_degree(shape);
      if (!divisible_by(d, 2))
      {
        throw ConsistencyError("self-conjugate degree is odd");
      }
      out.push_back(d / 2);
      out.push_back(d / 2);
    }
    else if (shape < conj)
    {
      // One representative per conjugate pair.
      out.push_back(hook_degree(shape));
    }
  }
  return out;
}

std::uint64_t irr_pprime_count_sym_oracle(unsigned n, std::uint64_t p, unsigned bound)
{
  return count_coprime(symmetric_degrees(n, bound), p);
}

std::uint64_t irr_pprime_count_alt_oracle(unsigned n, std::uint64_t p, unsigned bound)
{
  if (n < 5)
  {
    throw ParameterError("alternating oracle covers n >= 5");
  }
  return count_coprime(alternating_degrees(n, bound), p);
}

std::size_t SymmetricReport::violations() const
{
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SymmetricRow &r) { return !r.ok(); }));
}

namespace
{

std::vector<SymmetricRow> rows_for(unsigned n, const std::vector<std::uint64_t> &primes,
                                   unsigned bound)
{
  std::vector<SymmetricRow> rows;
  if (primes.empty())
  {
    return rows;
  }
  const auto sym = symmetric_degrees(n, bound);
  const auto alt = alternating_degrees(n, bound);
  for (std::uint64_t p : primes)
  {
    SymmetricRow row{n, p, macdonald_count(n, p), count_coprime(sym, p), count_coprime(alt, p),
                     n == 6, false, false, true};
    row.matches = row.macdonald == big(row.oracle);
    row.lower_bound = row.macdonald >= big(n - 1) && n >= p;
    if (n >= 5)
    {
      // 2 * count >= n - 1
      row.alt_bound = 2 * row.alternating >= n - 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SymmetricReport verify_symmetric_bounds(unsigned n_max,
                                        const std::optional<std::vector<std::uint64_t>> &primes,
                                        Execution exec, unsigned bound)
{
  check_bound(n_max, bound);
  if (primes)
  {
    for (std::uint64_t p : *primes)
    {
      if (!is_prime(p))
      {
        throw ParameterError("not a prime: " + std::to_string(p));
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> per_n(n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n)
  {
    for (std::uint64_t p : primes_up_to(n))
    {
      if (!primes || std::find(primes->begin(), primes->end(), p) != primes->end())
      {
        per_n[n].push_back(p);
      }
    }
  }

  std::vector<std::vector<SymmetricRow>> chunks(n_max + 1);
  if (exec == Execution::Parallel)
  {
    ExceptionSlot errors;
    // Larger n costs more; dynamic scheduling balances the tail.
    PPRIME_OMP(parallel for schedule(dynamic, 1))
    for (int n = static_cast<int>(n_max); n >= 1; --n)
    {
      errors.run([&] { chunks[n] = rows_for(static_cast<unsigned>(n), per_n[n], bound); });
    }
    errors.rethrow();
  }
  else
  {
    for (unsigned n = 1; n <= n_max; ++n)
    {
      chunks[n] = rows_for(n, per_n[n], bound);
    }
  }

  SymmetricReport report{n_max, {}};
  for (auto &chunk : chunks)
  {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(report.rows));
  }
  return report;
}

}  // namespace pprime
