#include "pprime/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <unordered_map>

#include "pprime/errors.hpp"
#include "pprime/landau.hpp"

namespace pprime
{

namespace
{

struct MatrixHash
{
  std::size_t operator()(const std::vector<std::uint64_t> &a) const noexcept
  {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t x : a)
    {
      h = (h ^ x) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t landau_root(std::uint64_t p)
{
  if (!is_landau_prime(p))
  {
    throw ParameterError("p = " + std::to_string(p) + " is not a prime >= 5 with p - 1 a square");
  }
  return isqrt(p - 1);
}

std::vector<std::uint64_t> decode(std::uint64_t code, std::uint64_t ell, std::size_t dim)
{
  std::vector<std::uint64_t> v(dim);
  for (std::size_t i = 0; i < dim; ++i)
  {
    v[i] = code % ell;
    code /= ell;
  }
  return v;
}

std::uint64_t encode(const std::vector<std::uint64_t> &v, std::uint64_t ell)
{
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;)
  {
    code = code * ell + v[i];
  }
  return code;
}

// Row vector times matrix.
std::vector<std::uint64_t> row_apply(const PrimeField &k, const std::vector<std::uint64_t> &row,
                                     const FpMatrix &m)
{
  std::vector<std::uint64_t> out(m.cols, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
  {
    if (row[i] == 0)
    {
      continue;
    }
    for (std::size_t j = 0; j < m.cols; ++j)
    {
      out[j] = k.add(out[j], k.mul(row[i], m(i, j)));
    }
  }
  return out;
}

FpMatrix matrix_power(const PrimeField &k, const FpMatrix &x, std::uint64_t e)
{
  FpMatrix result = FpMatrix::identity(x.rows);
  FpMatrix base = x;
  while (e > 0)
  {
    if (e & 1)
    {
      result = linalg::mul(k, result, base);
    }
    base = linalg::mul(k, base, base);
    e >>= 1;
  }
  return result;
}

DegreeMultiset inertia_degrees(const FiniteGroup &a, const std::vector<Element> &inertia,
                               const DixonOptions &options)
{
  const FiniteGroup sub = a.subgroup(inertia);
  if (sub.is_abelian())
  {
    return make_multiset(std::vector<std::uint64_t>(sub.order(), 1));
  }
  return irreducible_degrees(sub, options);
}

}  // namespace

FrobeniusParams frobenius_params(std::uint64_t p, std::uint64_t m)
{
  if (!is_prime(p))
  {
    throw ParameterError("p = " + std::to_string(p) + " is not prime");
  }
  if (m == 0 || (p - 1) % m != 0)
  {
    throw ParameterError("m = " + std::to_string(m) + " does not divide p - 1");
  }
  for (std::uint64_t a = 1; a < p; ++a)
  {
    if (multiplicative_order(a, p) == m)
    {
      return {p, m, a};
    }
  }
  throw ConsistencyError("no residue of the required order");
}

FrobeniusGroup build_frobenius(std::uint64_t p, std::uint64_t m)
{
  const FrobeniusParams params = frobenius_params(p, m);
  std::vector<std::uint64_t> apow(m);
  apow[0] = 1;
  for (std::uint64_t j = 1; j < m; ++j)
  {
    apow[j] = apow[j - 1] * params.a % p;
  }
  // (j1, b1) then (j2, b2): x -> a^{j1+j2} x + a^{j2} b1 + b2.
  const std::size_t n = p * m;
  std::vector<Element> table(n * n);
  for (std::uint64_t j1 = 0; j1 < m; ++j1)
  {
    for (std::uint64_t b1 = 0; b1 < p; ++b1)
    {
      const std::size_t row = (j1 * p + b1) * n;
      for (std::uint64_t j2 = 0; j2 < m; ++j2)
      {
        const std::uint64_t shift = apow[j2] * b1 % p;
        const std::uint64_t j = (j1 + j2) % m;
        for (std::uint64_t b2 = 0; b2 < p; ++b2)
        {
          table[row + j2 * p + b2] = static_cast<Element>(j * p + (shift + b2) % p);
        }
      }
    }
  }
  std::vector<Element> gens{1};
  if (m > 1)
  {
    gens.push_back(static_cast<Element>(p));
  }
  return {params, FiniteGroup::from_trusted_table(std::move(table), n, std::move(gens))};
}

DegreeMultiset frobenius_degree_multiset(const FrobeniusParams &params)
{
  std::vector<std::uint64_t> d(params.m, 1);
  d.insert(d.end(), (params.p - 1) / params.m, params.m);
  return make_multiset(std::move(d));
}

std::uint64_t extremal_count(std::uint64_t p)
{
  const std::uint64_t m = landau_root(p);
  return frobenius_degree_multiset(frobenius_params(p, m)).count_coprime(p);
}

std::uint64_t LinearGroupAction::space_size() const
{
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i)
  {
    if (n > (std::uint64_t{1} << 32) / ell)
    {
      throw SizeError("vector space too large to enumerate");
    }
    n *= ell;
  }
  return n;
}

LinearGroupAction matrix_group_action(std::uint64_t ell, std::vector<FpMatrix> gens,
                                      const EngineLimits &limits)
{
  if (!is_prime(ell) || ell >= (std::uint64_t{1} << 32))
  {
    throw ParameterError("field characteristic must be a prime below 2^32");
  }
  if (gens.empty())
  {
    throw ParameterError("no generators");
  }
  const std::size_t dim = gens.front().rows;
  const PrimeField k(ell);
  for (const auto &g : gens)
  {
    if (g.rows != dim || g.cols != dim || dim == 0)
    {
      throw ParameterError("generators must be square matrices of one size");
    }
    if (std::any_of(g.a.begin(), g.a.end(), [ell](std::uint64_t x) { return x >= ell; }))
    {
      throw ParameterError("matrix entry out of range");
    }
    if (linalg::rank(k, g) != dim)
    {
      throw ParameterError("generator is singular");
    }
  }

  std::vector<FpMatrix> elems{FpMatrix::identity(dim)};
  std::unordered_map<std::vector<std::uint64_t>, Element, MatrixHash> index;
  index.emplace(elems[0].a, 0);
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<std::vector<Element>> right;  // right[x][g] = mul(x, gens[g])
  for (std::size_t x = 0; x < elems.size(); ++x)
  {
    std::vector<Element> row(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
    {
      FpMatrix y = linalg::mul(k, gens[g], elems[x]);
      auto [it, fresh] = index.emplace(y.a, static_cast<Element>(elems.size()));
      if (fresh)
      {
        if (elems.size() >= limits.closure_bound)
        {
          throw SizeError("matrix group exceeds the closure bound");
        }
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Element>(x));
        via.push_back(static_cast<std::uint32_t>(g));
      }
      row[g] = it->second;
    }
    right.push_back(std::move(row));
  }
  const std::size_t n = elems.size();
  if (n > limits.table_bound)
  {
    throw SizeError("matrix group exceeds the table bound");
  }
  if (gcd(n, ell) != 1)
  {
    throw ParameterError("group order is not coprime to the characteristic");
  }

  // mul(a, b) = mul(mul(a, parent[b]), via[b]), filled in discovery order.
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
  {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b)
    {
      table[a * n + b] = right[table[a * n + parent[b]]][via[b]];
    }
  }

  std::vector<Element> gen_index;
  for (const auto &g : gens)
  {
    gen_index.push_back(index.at(g.a));
  }
  LinearGroupAction action{ell, dim, FiniteGroup::from_trusted_table(std::move(table), n, gen_index),
                           std::move(elems)};

  auto check = [&](Element a, Element b) {
    const FpMatrix prod = linalg::mul(k, action.matrices[b], action.matrices[a]);
    if (prod != action.matrices[action.group.mul(a, b)])
    {
      throw ConsistencyError("matrix table is not a homomorphism");
    }
  };
  if (n <= 512)
  {
    for (Element a = 0; a < n; ++a)
    {
      for (Element b = 0; b < n; ++b)
      {
        check(a, b);
      }
    }
  }
  else
  {
    std::mt19937_64 rng(n);
    for (int i = 0; i < 4096; ++i)
    {
      check(static_cast<Element>(rng() % n), static_cast<Element>(rng() % n));
    }
  }
  return action;
}

LinearGroupAction frobenius_action(std::uint64_t p, std::uint64_t m)
{
  const FrobeniusParams params = frobenius_params(p, m);
  FpMatrix g(1, 1);
  g(0, 0) = params.a;
  return matrix_group_action(p, {g});
}

std::uint64_t find_construction_prime(std::uint64_t p, std::uint64_t search_limit)
{
  const std::uint64_t m = landau_root(p);
  for (std::uint64_t r = 2; r <= search_limit; ++r)
  {
    if (r != p && is_prime(r) && multiplicative_order(r % p, p) == m)
    {
      return r;
    }
  }
  throw SearchExhausted("no prime r <= " + std::to_string(search_limit) +
                        " with multiplicative order " + std::to_string(m) + " modulo " +
                        std::to_string(p));
}

Poly smallest_irreducible(std::uint64_t r, std::size_t m)
{
  if (!is_prime(r) || m == 0)
  {
    throw ParameterError("need a prime field and positive degree");
  }
  const PrimeField k(r);
  std::vector<std::uint64_t> low(m, 0);
  while (true)
  {
    Poly f(low);
    f.push_back(1);
    if (poly::is_irreducible(k, f))
    {
      return f;
    }
    std::size_t i = 0;
    while (i < m && ++low[i] == r)
    {
      low[i++] = 0;
    }
    if (i == m)
    {
      throw ConsistencyError("no irreducible polynomial found");
    }
  }
}

FpMatrix field_multiplication_matrix(const PrimeField &k, const Poly &modulus,
                                     const std::vector<std::uint64_t> &element)
{
  const std::size_t m = static_cast<std::size_t>(poly::degree(modulus));
  FpMatrix out(m, m);
  Poly e(element);
  poly::trim(e);
  for (std::size_t i = 0; i < m; ++i)
  {
    Poly basis(i + 1, 0);
    basis[i] = 1;
    const Poly col = poly::mod(k, poly::mul(k, e, basis), modulus);
    for (std::size_t j = 0; j < col.size(); ++j)
    {
      out(j, i) = col[j];
    }
  }
  return out;
}

GammaLConstruction build_gamma_l(std::uint64_t p, std::uint64_t r)
{
  const std::uint64_t m = landau_root(p);
  if (!is_prime(r) || r == p || multiplicative_order(r % p, p) != m)
  {
    throw ParameterError("r = " + std::to_string(r) + " must be a prime of multiplicative order " +
                         std::to_string(m) + " modulo " + std::to_string(p));
  }
  std::uint64_t field_order = 1;
  for (std::uint64_t i = 0; i < m; ++i)
  {
    if (field_order > (std::uint64_t{1} << 40) / r)
    {
      throw SizeError("field too large");
    }
    field_order *= r;
  }

  GammaLConstruction c;
  c.p = p;
  c.m = m;
  c.r = r;
  const PrimeField k(r);
  c.modulus = smallest_irreducible(r, m);
  if ((field_order - 1) % p != 0)
  {
    throw ConsistencyError("p does not divide r^m - 1");
  }

  // First element (in base-r order) whose ((r^m - 1)/p)-th power is not 1.
  const std::uint64_t cofactor = (field_order - 1) / p;
  Poly generator;
  for (std::uint64_t code = 2; code < field_order; ++code)
  {
    Poly x(decode(code, r, m));
    poly::trim(x);
    Poly y = poly::powmod(k, x, cofactor, c.modulus);
    if (y != Poly{1})
    {
      generator = std::move(y);
      break;
    }
  }
  if (generator.empty())
  {
    throw ConsistencyError("no element of order p");
  }
  c.multiplier = field_multiplication_matrix(k, c.modulus, generator);

  c.frobenius = FpMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
  {
    const Poly col = poly::powmod(k, Poly{0, 1}, i * r, c.modulus);
    for (std::size_t j = 0; j < col.size(); ++j)
    {
      c.frobenius(j, i) = col[j];
    }
  }

  c.action = matrix_group_action(r, {c.multiplier, c.frobenius});
  if (c.action.group.order() != p * m)
  {
    throw ConsistencyError("semilinear group has order " + std::to_string(c.action.group.order()) +
                           ", expected " + std::to_string(p * m));
  }
  if (!multiplier_fixed_point_free(c))
  {
    throw ConsistencyError("the order-p multiplier fixes a nonzero vector");
  }
  if (!frobenius_normalizes_without_centralizing(c))
  {
    throw ConsistencyError("the Frobenius map does not act as required on the multiplier group");
  }
  return c;
}

bool multiplier_fixed_point_free(const GammaLConstruction &c, std::uint64_t exhaustive_limit)
{
  const PrimeField k(c.r);
  const std::uint64_t space = c.action.space_size();
  const bool exhaustive = space <= exhaustive_limit / (c.p - 1);
  FpMatrix power = FpMatrix::identity(c.m);
  for (std::uint64_t j = 1; j < c.p; ++j)
  {
    power = linalg::mul(k, power, c.multiplier);
    if (exhaustive)
    {
      for (std::uint64_t code = 1; code < space; ++code)
      {
        const auto v = decode(code, c.r, c.m);
        if (linalg::apply(k, power, v) == v)
        {
          return false;
        }
      }
    }
    else
    {
      FpMatrix diff = power;
      for (std::size_t i = 0; i < c.m; ++i)
      {
        diff(i, i) = k.sub(diff(i, i), 1);
      }
      if (linalg::nullspace(k, diff).rows != 0)
      {
        return false;
      }
    }
  }
  return matrix_power(k, c.multiplier, c.p) == FpMatrix::identity(c.m);
}

bool frobenius_normalizes_without_centralizing(const GammaLConstruction &c)
{
  const PrimeField k(c.r);
  const FpMatrix finv = linalg::inverse(k, c.frobenius);
  const FpMatrix conj = linalg::mul(k, linalg::mul(k, finv, c.multiplier), c.frobenius);
  bool normalizes = false;
  FpMatrix power = FpMatrix::identity(c.m);
  for (std::uint64_t j = 1; j < c.p; ++j)
  {
    power = linalg::mul(k, power, c.multiplier);
    if (power == conj)
    {
      normalizes = true;
    }
    if (linalg::mul(k, c.frobenius, power) == linalg::mul(k, power, c.frobenius))
    {
      return false;
    }
  }
  return normalizes;
}

CliffordResult clifford_pprime_count(const LinearGroupAction &action, std::uint64_t p,
                                     Execution exec, const DixonOptions &options,
                                     std::uint64_t space_limit)
{
  const std::uint64_t ell = action.ell;
  const std::size_t dim = action.dim;
  const std::size_t order = action.group.order();
  if (gcd(order, ell) != 1)
  {
    throw ParameterError("group order is not coprime to the characteristic");
  }
  const std::uint64_t space = action.space_size();
  if (space > space_limit)
  {
    throw SizeError("dual space has " + std::to_string(space) + " vectors");
  }
  const PrimeField k(ell);
  auto image = [&](std::uint64_t code, std::size_t a) {
    return encode(row_apply(k, decode(code, ell, dim), action.matrices[a]), ell);
  };
  auto inertia_of = [&](std::uint64_t code) {
    std::vector<Element> inertia;
    for (std::size_t a = 0; a < order; ++a)
    {
      if (image(code, a) == code)
      {
        inertia.push_back(static_cast<Element>(a));
      }
    }
    return inertia;
  };

  // Representatives are the smallest codes in their orbits.
  std::vector<std::uint64_t> reps;
  std::vector<std::size_t> sizes;
  if (exec == Execution::Parallel)
  {
    std::vector<char> is_rep(space, 0);
    const auto total = static_cast<std::int64_t>(space);
    PPRIME_OMP(parallel for schedule(static))
    for (std::int64_t i = 0; i < total; ++i)
    {
      const auto code = static_cast<std::uint64_t>(i);
      bool smallest = true;
      for (std::size_t a = 1; a < order && smallest; ++a)
      {
        smallest = image(code, a) >= code;
      }
      is_rep[i] = smallest ? 1 : 0;
    }
    for (std::uint64_t code = 0; code < space; ++code)
    {
      if (is_rep[code])
      {
        reps.push_back(code);
      }
    }
    sizes.assign(reps.size(), 0);
  }
  else
  {
    std::vector<bool> seen(space, false);
    const auto &gens = action.group.generators();
    for (std::uint64_t code = 0; code < space; ++code)
    {
      if (seen[code])
      {
        continue;
      }
      reps.push_back(code);
      std::vector<std::uint64_t> queue{code};
      seen[code] = true;
      for (std::size_t i = 0; i < queue.size(); ++i)
      {
        for (Element g : gens)
        {
          const std::uint64_t next = image(queue[i], g);
          if (!seen[next])
          {
            seen[next] = true;
            queue.push_back(next);
          }
        }
      }
      sizes.push_back(queue.size());
    }
  }

  std::vector<std::vector<Element>> inertia(reps.size());
  {
    const auto count = static_cast<std::int64_t>(reps.size());
    ExceptionSlot slot;
    PPRIME_OMP(parallel for schedule(dynamic) if (exec == Execution::Parallel))
    for (std::int64_t i = 0; i < count; ++i)
    {
      slot.run([&] { inertia[i] = inertia_of(reps[i]); });
    }
    slot.rethrow();
  }

  CliffordResult result;
  std::map<std::vector<Element>, DegreeMultiset> cache;
  std::vector<std::uint64_t> all;
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
  {
    const std::size_t index = order / inertia[i].size();
    if (sizes[i] == 0)
    {
      sizes[i] = index;
    }
    else if (sizes[i] != index)
    {
      throw ConsistencyError("orbit size disagrees with the inertia index");
    }
    covered += sizes[i];
    auto it = cache.find(inertia[i]);
    if (it == cache.end())
    {
      it = cache.emplace(inertia[i], inertia_degrees(action.group, inertia[i], options)).first;
    }
    std::vector<std::uint64_t> contribution;
    for (std::uint64_t d : it->second.degrees)
    {
      contribution.push_back(index * d);
    }
    all.insert(all.end(), contribution.begin(), contribution.end());
    result.orbits.push_back(
        {reps[i], sizes[i], inertia[i].size(), make_multiset(std::move(contribution))});
  }
  if (covered != space)
  {
    throw ConsistencyError("orbits do not partition the dual space");
  }
  result.degrees = make_multiset(std::move(all));
  if (result.degrees.sum_of_squares() != space * order)
  {
    throw ConsistencyError("Clifford degrees violate the sum-of-squares identity");
  }
  result.pprime_count = result.degrees.count_coprime(p);
  return result;
}

PermutationGroup semidirect_permutation_group(const LinearGroupAction &action,
                                              const EngineLimits &limits)
{
  const std::uint64_t space = action.space_size();
  if (space > limits.closure_bound)
  {
    throw SizeError("vector space too large for a permutation model");
  }
  const PrimeField k(action.ell);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < action.dim; ++i)
  {
    Permutation t(space);
    for (std::uint64_t code = 0; code < space; ++code)
    {
      auto v = decode(code, action.ell, action.dim);
      v[i] = k.add(v[i], 1);
      t[code] = static_cast<std::uint32_t>(encode(v, action.ell));
    }
    gens.push_back(std::move(t));
  }
  for (Element g : action.group.generators())
  {
    Permutation t(space);
    for (std::uint64_t code = 0; code < space; ++code)
    {
      const auto v = linalg::apply(k, action.matrices[g], decode(code, action.ell, action.dim));
      t[code] = static_cast<std::uint32_t>(encode(v, action.ell));
    }
    gens.push_back(std::move(t));
  }
  return group_from_permutations(gens, limits);
}

CrossCheck engine_cross_check(const LinearGroupAction &action, std::uint64_t p,
                              const DixonOptions &options)
{
  CrossCheck out;
  out.clifford = clifford_pprime_count(action, p, Execution::Parallel, options);
  const PermutationGroup g = semidirect_permutation_group(action, options.limits);
  const ConjugacyClasses cc = conjugacy_classes(g.group);
  out.group_order = g.group.order();
  out.class_count = cc.count();
  out.engine = irreducible_degrees(g.group, cc, options);
  out.engine_pprime_count = out.engine.count_coprime(p);
  if (out.engine != out.clifford.degrees)
  {
    throw ConsistencyError("engine degrees " + to_string(out.engine) +
                           " disagree with Clifford degrees " + to_string(out.clifford.degrees));
  }
  return out;
}

}  // namespace pprime
