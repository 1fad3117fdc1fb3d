#include "pprime/lie_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "pprime/errors.hpp"
#include "pprime/landau.hpp"
#include "pprime/partitions.hpp"

namespace pprime
{

namespace
{

int mobius(std::uint64_t n)
{
  int sign = 1;
  for (const auto &pf : factorize(n))
  {
    if (pf.exponent > 1)
    {
      return 0;
    }
    sign = -sign;
  }
  return sign;
}

BigInt factorial(std::uint64_t n)
{
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

double to_double(const BigInt &x) { return x.get_d(); }

// Smallest t with p^t >= q.
std::uint64_t ceil_log(std::uint64_t q, std::uint64_t p)
{
  std::uint64_t t = 0;
  BigInt power = 1;
  while (power < big(q))
  {
    power *= p;
    ++t;
  }
  return t;
}

struct FamilyShape
{
  std::uint64_t min_rank;
  bool doubled;  // wreath product over C_{2d} rather than C_d
  bool halved;   // relative Weyl group may be an index-two subgroup
};

FamilyShape shape_of(ClassicalFamily family)
{
  switch (family)
  {
    case ClassicalFamily::BC:
      return {2, true, false};
    case ClassicalFamily::D:
    case ClassicalFamily::D2:
      return {4, true, true};
    case ClassicalFamily::A:
    case ClassicalFamily::A2:
      return {3, false, false};
  }
  return {};
}

// Signed torus factor q^d - 1 or q^d + 1 carrying p, for the family.
BigInt torus_factor(ClassicalFamily family, std::uint64_t q, std::uint64_t d, std::uint64_t p)
{
  const BigInt qd = pow(big(q), static_cast<unsigned long>(d));
  switch (family)
  {
    case ClassicalFamily::A:
      return qd - 1;
    case ClassicalFamily::A2:
      return d % 2 == 0 ? BigInt(qd - 1) : BigInt(qd + 1);
    default:
      return divisible_by(qd - 1, p) ? BigInt(qd - 1) : BigInt(qd + 1);
  }
}

std::uint64_t family_gcd(ClassicalFamily family, std::uint64_t q, std::uint64_t n)
{
  switch (family)
  {
    case ClassicalFamily::A:
      return gcd(n, q - 1);
    case ClassicalFamily::A2:
      return gcd(n, q + 1);
    default:
      return gcd(2, q - 1);
  }
}

// Primes p >= 5, p != r, with torus_index(family, q, p) == d.
std::vector<std::uint64_t> primes_at_index(ClassicalFamily family, const PrimePower &pp,
                                           std::uint64_t d)
{
  std::vector<std::uint64_t> candidates;
  BigInt qd = pow(big(pp.q), static_cast<unsigned long>(d));
  for (const BigInt &value : {BigInt(qd - 1), BigInt(qd + 1)})
  {
    if (!value.fits_ulong_p())
    {
      throw SizeError("torus factor exceeds 64 bits");
    }
    for (std::uint64_t p : prime_divisors(value.get_ui()))
    {
      if (p >= 5 && p != pp.r && torus_index(family, pp.q, p) == d)
      {
        candidates.push_back(p);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

std::vector<InequalityRow> classical_rows(ClassicalFamily family, const PrimePower &pp,
                                          const ClassicalGrid &grid)
{
  const FamilyShape shape = shape_of(family);
  std::vector<InequalityRow> rows;
  for (std::uint64_t d = 1; 2 * d <= grid.rank_max; ++d)
  {
    for (std::uint64_t p : primes_at_index(family, pp, d))
    {
      const BigInt torus = torus_factor(family, pp.q, d, p);
      const std::uint64_t c = shape.doubled ? 2 * d : d;
      for (std::uint64_t a = 2; a * d <= grid.rank_max; ++a)
      {
        if (p <= a)
        {
          continue;  // Sylow subgroups are non-abelian; handled by the unipotent count
        }
        BigInt wreath = wreath_class_count(c, a);
        if (shape.halved)
        {
          wreath /= 2;
        }
        const BigInt den = pow(big(c), static_cast<unsigned long>(a)) * factorial(a);
        const BigInt semisimple = pow(torus, static_cast<unsigned long>(a));
        const BigInt lhs_num = wreath * den + semisimple;
        for (std::uint64_t s = 0; s < d; ++s)
        {
          const std::uint64_t n = a * d + s;
          if (n < shape.min_rank || n > grid.rank_max)
          {
            continue;
          }
          const std::uint64_t g = family_gcd(family, pp.q, n);
          const BigInt rhs_sq = den * den * 4 * pp.f * pp.f * g * g * (p - 1);
          InequalityRow row;
          row.family = to_string(family);
          row.q = pp.q;
          row.r = pp.r;
          row.f = pp.f;
          row.d = d;
          row.a = a;
          row.n = n;
          row.p = p;
          row.lhs = to_double(lhs_num) / to_double(den);
          row.rhs = 2.0 * static_cast<double>(pp.f * g) * std::sqrt(static_cast<double>(p - 1));
          row.holds = lhs_num * lhs_num > rhs_sq;
          row.flagged = shape.halved;
          if (shape.halved)
          {
            row.note = "half the wreath-product count";
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

template <typename RowsFor>
std::vector<InequalityRow> sweep(std::size_t count, Execution exec, RowsFor rows_for)
{
  std::vector<std::vector<InequalityRow>> chunks(count);
  if (exec == Execution::Parallel)
  {
    ExceptionSlot errors;
    const auto total = static_cast<std::int64_t>(count);
    PPRIME_OMP(parallel for schedule(dynamic, 1))
    for (std::int64_t i = 0; i < total; ++i)
    {
      errors.run([&] { chunks[i] = rows_for(static_cast<std::size_t>(i)); });
    }
    errors.rethrow();
  }
  else
  {
    for (std::size_t i = 0; i < count; ++i)
    {
      chunks[i] = rows_for(i);
    }
  }
  std::vector<InequalityRow> rows;
  for (auto &chunk : chunks)
  {
    rows.insert(rows.end(), std::make_move_iterator(chunk.begin()),
                std::make_move_iterator(chunk.end()));
  }
  return rows;
}

}  // namespace

BigInt cyclotomic_value(std::uint64_t d, std::uint64_t q)
{
  if (d == 0 || q < 2)
  {
    throw ParameterError("cyclotomic value needs d >= 1 and q >= 2");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t e : divisors(d))
  {
    const int mu = mobius(d / e);
    if (mu == 0)
    {
      continue;
    }
    const BigInt term = pow(big(q), static_cast<unsigned long>(e)) - 1;
    (mu > 0 ? num : den) *= term;
  }
  if (num % den != 0)
  {
    throw ConsistencyError("cyclotomic quotient is not exact");
  }
  return num / den;
}

std::uint64_t lemma_easy_bound(std::uint64_t k, bool cyclic_sylow)
{
  if (k == 0 || k > 60'000)
  {
    throw ParameterError("count out of range");
  }
  if (cyclic_sylow)
  {
    return k * k * k * k / 16 + 1;
  }
  return k * k / 4 + 1;
}

std::uint64_t lemma_easy_strict_bound(std::uint64_t k, bool cyclic_sylow)
{
  const std::uint64_t b = lemma_easy_bound(k, cyclic_sylow);
  return !cyclic_sylow && (k * k) % 4 == 0 ? b - 1 : b;
}

const std::vector<InvariantCharRow> &table2_rows()
{
  static const std::vector<InvariantCharRow> rows{
      {"G2", "1,2", 6, false, false, 10},
      {"G2", "3,6", 6, false, true, 82},
      {"3D4", "1,2", 6, false, false, 10},
      {"3D4", "3,6", 7, false, false, 13},
      {"3D4", "12", 4, false, true, 17},
      {"2F4", "1,4,8',8''", 7, false, false, 13},
      {"2F4", "12,24',24''", 12, false, true, 1297},
      {"F4", "1,2", 11, false, false, 31},
      {"F4", "8,12", 8, true, true, 257},
      {"F4", "3,6", 9, false, false, 21},
      {"(2)E6", "1,2,3,4,6", 16, true, false, 65},
      {"(2)E6", "5,8,9,12,(10,18)", 5, true, true, 40},
      {"E7", "1,2,3,4,6", 48, true, false, 577},
      {"E7", "5,7,8,9,10,12,14,18", 14, true, true, 2402},
      {"E8", "1,2,3,4,6", 59, true, false, 871},
      {"E8", "7,9,14,18", 28, true, true, 38417},
      {"E8", "5,8,10,12", 32, true, false, 257},
      {"E8", "15,20,24,30", 20, true, true, 10001},
  };
  return rows;
}

std::size_t Table2Report::mismatches() const
{
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const Table2Check &c) { return !c.matches; }));
}

Table2Report verify_table2()
{
  Table2Report report;
  for (const auto &row : table2_rows())
  {
    Table2Check c;
    c.row = row;
    c.computed = lemma_easy_bound(row.count, row.cyclic_sylow);
    c.strict = lemma_easy_strict_bound(row.count, row.cyclic_sylow);
    c.matches = c.computed == row.stated_p_bound;
    c.strict_differs = c.strict != row.stated_p_bound;
    report.rows.push_back(std::move(c));
  }
  return report;
}

std::vector<Table1Row> table1_data()
{
  std::vector<Table1Row> rows{
      {"(2)E6", 5, 10}, {"E7", 5, 30}, {"E8", 5, 20}, {"E7", 7, 14}, {"E8", 7, 28},
  };
  for (auto &row : rows)
  {
    row.holds = row.count * row.count + 4 > 4 * row.p;
  }
  return rows;
}

std::size_t InequalityReport::violations() const
{
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const InequalityRow &r) { return !r.holds; }));
}

InequalityReport defining_char_check(const DefiningGrid &grid, Execution exec)
{
  std::vector<std::uint64_t> primes;
  for (std::uint64_t r : primes_up_to(grid.r_max))
  {
    if (r >= 5)
    {
      primes.push_back(r);
    }
  }
  InequalityReport report;
  report.name = "defining";
  report.rows = sweep(primes.size(), exec, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    std::vector<InequalityRow> rows;
    for (std::uint64_t l = 2; l <= grid.rank_max; ++l)
    {
      for (std::uint64_t f = 1; f <= grid.f_max; ++f)
      {
        const bool exceptional = f == 1 && l == 2 && (p == 5 || p == 7);
        const std::uint64_t out = exceptional ? (p == 5 ? 6 : 8) : (6 * l + 3) * f;
        const BigInt q = pow(big(p), static_cast<unsigned long>(f));
        const BigInt ql = pow(q, static_cast<unsigned long>(l));
        InequalityRow row;
        row.family = "defining";
        row.q = q.fits_ulong_p() ? q.get_ui() : 0;
        row.r = p;
        row.f = f;
        row.n = l;
        row.p = p;
        row.lhs = to_double(ql) / static_cast<double>(out);
        row.rhs = 2.0 * std::sqrt(static_cast<double>(p - 1));
        row.holds = ql * ql > big(4) * out * out * (p - 1);
        row.flagged = exceptional;
        if (exceptional)
        {
          row.note = "|Out| <= " + std::to_string(out);
        }
        rows.push_back(std::move(row));
      }
    }
    return rows;
  });
  return report;
}

std::string to_string(ClassicalFamily family)
{
  switch (family)
  {
    case ClassicalFamily::BC:
      return "bc";
    case ClassicalFamily::D:
      return "d";
    case ClassicalFamily::D2:
      return "2d";
    case ClassicalFamily::A:
      return "a";
    case ClassicalFamily::A2:
      return "2a";
  }
  return "?";
}

ClassicalFamily parse_classical_family(const std::string &name)
{
  for (auto f : {ClassicalFamily::BC, ClassicalFamily::D, ClassicalFamily::D2, ClassicalFamily::A,
                 ClassicalFamily::A2})
  {
    if (to_string(f) == name)
    {
      return f;
    }
  }
  throw ParameterError("unknown family '" + name + "' (expected bc, d, 2d, a or 2a)");
}

BigInt wreath_class_count(std::uint64_t d, std::uint64_t a)
{
  return split_count(d, static_cast<std::size_t>(a));
}

std::uint64_t torus_index(ClassicalFamily family, std::uint64_t q, std::uint64_t p)
{
  if (q % p == 0)
  {
    throw ParameterError("p divides q");
  }
  const std::uint64_t e = multiplicative_order(q % p, p);
  switch (family)
  {
    case ClassicalFamily::A:
      return e;
    case ClassicalFamily::A2:
      // q^d - (-1)^d = (-1)^d ((-q)^d - 1)
      return multiplicative_order(p - q % p, p);
    default:
      return e % 2 == 1 ? e : e / 2;
  }
}

InequalityReport classical_inequality_check(ClassicalFamily family, const ClassicalGrid &grid,
                                            Execution exec)
{
  std::vector<PrimePower> qs;
  for (const auto &pp : prime_powers(grid.q_max))
  {
    if (pp.f <= grid.f_max)
    {
      qs.push_back(pp);
    }
  }
  InequalityReport report;
  report.name = "classical-" + to_string(family);
  report.rows = sweep(qs.size(), exec,
                      [&](std::size_t i) { return classical_rows(family, qs[i], grid); });
  return report;
}

InequalityReport e8_d1_check(std::uint64_t q_min, std::uint64_t q_max)
{
  InequalityReport report;
  report.name = "e8-d1";
  const BigInt weyl_sq = big(kE8WeylOrder) * kE8WeylOrder;
  for (const auto &pp : prime_powers(q_max))
  {
    if (pp.q < q_min)
    {
      continue;
    }
    for (std::uint64_t p : prime_divisors(pp.q - 1))
    {
      if (p < 5)
      {
        continue;
      }
      const std::uint64_t t = std::max<std::uint64_t>(pp.f, ceil_log(pp.q, p));
      const BigInt lhs = pow(big(pp.q - 1), 16);
      const BigInt rhs = weyl_sq * 4 * t * t * (p - 1);
      InequalityRow row;
      row.family = "e8-d1";
      row.q = pp.q;
      row.r = pp.r;
      row.f = pp.f;
      row.d = 1;
      row.p = p;
      row.lhs = std::pow(static_cast<double>(pp.q - 1), 8) / static_cast<double>(kE8WeylOrder);
      row.rhs = 2.0 * static_cast<double>(t) * std::sqrt(static_cast<double>(p - 1));
      row.holds = lhs > rhs;
      row.note = "log bound " + std::to_string(t);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace pprime
