#include "pprime/group_engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "pprime/errors.hpp"
#include "pprime/landau.hpp"
#include "pprime/modular.hpp"

namespace pprime
{

// ---------------------------------------------------------------------------
// FiniteGroup

GroupAxioms check_group_axioms(std::span<const Element> table, std::size_t order,
                               std::uint64_t seed, std::size_t samples)
{
  GroupAxioms ax;
  if (order == 0 || table.size() != order * order)
  {
    return ax;
  }
  auto mul = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };

  ax.latin_square = true;
  std::vector<std::uint32_t> seen(order, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < order && ax.latin_square; ++a)
  {
    ++stamp;
    for (std::size_t b = 0; b < order; ++b)
    {
      const Element x = mul(a, b);
      if (x >= order || seen[x] == stamp)
      {
        ax.latin_square = false;
        break;
      }
      seen[x] = stamp;
    }
  }
  for (std::size_t b = 0; b < order && ax.latin_square; ++b)
  {
    ++stamp;
    for (std::size_t a = 0; a < order; ++a)
    {
      const Element x = mul(a, b);
      if (seen[x] == stamp)
      {
        ax.latin_square = false;
        break;
      }
      seen[x] = stamp;
    }
  }
  if (!ax.latin_square)
  {
    return ax;
  }

  std::size_t e = order;
  for (std::size_t a = 0; a < order; ++a)
  {
    if (mul(a, a) == a)
    {
      e = a;
      break;
    }
  }
  ax.identity = e < order;
  for (std::size_t a = 0; a < order && ax.identity; ++a)
  {
    ax.identity = mul(e, a) == a && mul(a, e) == a;
  }
  if (!ax.identity)
  {
    return ax;
  }
  // Latin rows guarantee a unique right inverse; check it is two-sided.
  ax.inverses = true;
  for (std::size_t a = 0; a < order && ax.inverses; ++a)
  {
    for (std::size_t b = 0; b < order; ++b)
    {
      if (mul(a, b) == e)
      {
        ax.inverses = mul(b, a) == e;
        break;
      }
    }
  }

  ax.associative = true;
  if (order <= 512)
  {
    ax.associativity_exhaustive = true;
    for (std::size_t a = 0; a < order && ax.associative; ++a)
    {
      for (std::size_t b = 0; b < order && ax.associative; ++b)
      {
        const Element ab = mul(a, b);
        for (std::size_t c = 0; c < order; ++c)
        {
          if (mul(ab, c) != mul(a, mul(b, c)))
          {
            ax.associative = false;
            break;
          }
        }
      }
    }
  }
  else
  {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i)
    {
      const std::size_t a = rng() % order;
      const std::size_t b = rng() % order;
      const std::size_t c = rng() % order;
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      {
        ax.associative = false;
        break;
      }
    }
  }
  return ax;
}

FiniteGroup FiniteGroup::from_table(std::vector<Element> table, std::size_t order,
                                    std::vector<Element> generators)
{
  const GroupAxioms ax = check_group_axioms(table, order);
  if (!ax.ok())
  {
    throw ParameterError(std::string("multiplication table violates the group axioms (") +
                         (!ax.latin_square ? "latin square"
                          : !ax.identity   ? "identity"
                          : !ax.inverses   ? "inverses"
                                           : "associativity") +
                         ")");
  }
  for (Element g : generators)
  {
    if (g >= order)
    {
      throw ParameterError("generator index out of range");
    }
  }
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.finish(std::move(generators));
  return g;
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<Element> table, std::size_t order,
                                            std::vector<Element> generators)
{
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.finish(std::move(generators));
  return g;
}

void FiniteGroup::finish(std::vector<Element> generators)
{
  identity_ = 0;
  for (Element a = 0; a < order_; ++a)
  {
    if (mul(a, a) == a)
    {
      identity_ = a;
      break;
    }
  }
  inverse_.assign(order_, 0);
  for (Element a = 0; a < order_; ++a)
  {
    for (Element b = 0; b < order_; ++b)
    {
      if (mul(a, b) == identity_)
      {
        inverse_[a] = b;
        break;
      }
    }
  }
  if (generators.empty())
  {
    // Greedy: add the first element outside the current subgroup.
    std::vector<bool> in(order_, false);
    in[identity_] = true;
    std::size_t covered = 1;
    for (Element a = 0; a < order_ && covered < order_; ++a)
    {
      if (in[a])
      {
        continue;
      }
      generators.push_back(a);
      const auto h = closure(generators);
      std::fill(in.begin(), in.end(), false);
      for (Element x : h)
      {
        in[x] = true;
      }
      covered = h.size();
    }
  }
  generators_ = std::move(generators);
}

std::uint64_t FiniteGroup::element_order(Element a) const
{
  std::uint64_t n = 1;
  for (Element x = a; x != identity_; x = mul(x, a))
  {
    ++n;
  }
  return n;
}

std::uint64_t FiniteGroup::exponent() const
{
  std::uint64_t e = 1;
  for (Element a = 0; a < order_; ++a)
  {
    e = lcm(e, element_order(a));
  }
  return e;
}

bool FiniteGroup::is_abelian() const
{
  for (Element a : generators_)
  {
    for (Element b : generators_)
    {
      if (mul(a, b) != mul(b, a))
      {
        return false;
      }
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::closure(std::span<const Element> gens) const
{
  std::vector<bool> in(order_, false);
  std::vector<Element> out{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
  {
    for (Element s : gens)
    {
      const Element y = mul(out[i], s);
      if (!in[y])
      {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> FiniteGroup::centralizer(Element x) const
{
  std::vector<Element> out;
  for (Element a = 0; a < order_; ++a)
  {
    if (mul(a, x) == mul(x, a))
    {
      out.push_back(a);
    }
  }
  return out;
}

FiniteGroup FiniteGroup::subgroup(std::span<const Element> elements) const
{
  std::vector<Element> elems(elements.begin(), elements.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::int64_t> index(order_, -1);
  for (std::size_t i = 0; i < elems.size(); ++i)
  {
    index[elems[i]] = static_cast<std::int64_t>(i);
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      const std::int64_t k = index[mul(elems[i], elems[j])];
      if (k < 0)
      {
        throw ParameterError("element list is not closed under multiplication");
      }
      table[i * n + j] = static_cast<Element>(k);
    }
  }
  return from_trusted_table(std::move(table), n, {});
}

// ---------------------------------------------------------------------------
// Permutation groups

namespace
{

// Cap on stored permutation entries during closure (1 GiB of images).
constexpr std::size_t kEnumerationWords = std::size_t{1} << 28;

struct PermHash
{
  std::size_t operator()(const Permutation &p) const noexcept
  {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t x : p)
    {
      h = (h ^ x) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::size_t validate_permutations(std::span<const Permutation> generators)
{
  if (generators.empty())
  {
    throw ParameterError("need at least one generator");
  }
  const std::size_t n = generators.front().size();
  if (n == 0)
  {
    throw ParameterError("permutations must act on a nonempty set");
  }
  for (const auto &g : generators)
  {
    if (g.size() != n)
    {
      throw ParameterError("generators act on domains of different sizes");
    }
    std::vector<bool> hit(n, false);
    for (std::uint32_t x : g)
    {
      if (x >= n || hit[x])
      {
        throw ParameterError("generator is not a bijection");
      }
      hit[x] = true;
    }
  }
  return n;
}

Permutation compose(const Permutation &a, const Permutation &b)
{
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
  {
    c[x] = b[a[x]];
  }
  return c;
}

std::vector<Permutation> enumerate(std::span<const Permutation> generators, std::size_t bound,
                                   std::vector<std::uint32_t> *generator_index)
{
  const std::size_t n = validate_permutations(generators);
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0U);
  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, std::uint32_t, PermHash> index{{id, 0}};
  std::vector<std::uint32_t> gen_index;
  for (const auto &g : generators)
  {
    auto it = index.find(g);
    if (it == index.end())
    {
      it = index.emplace(g, static_cast<std::uint32_t>(elems.size())).first;
      elems.push_back(g);
    }
    gen_index.push_back(it->second);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
  {
    for (const auto &g : generators)
    {
      Permutation y = compose(elems[i], g);
      if (index.find(y) == index.end())
      {
        if (elems.size() >= bound || (elems.size() + 1) * y.size() > kEnumerationWords)
        {
          throw SizeError("permutation group closure exceeds " + std::to_string(bound) +
                          " elements");
        }
        index.emplace(y, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  if (generator_index)
  {
    *generator_index = std::move(gen_index);
  }
  return elems;
}

}  // namespace

std::size_t permutation_group_order(std::span<const Permutation> generators,
                                    const EngineLimits &limits)
{
  return enumerate(generators, limits.closure_bound, nullptr).size();
}

PermutationGroup group_from_permutations(std::span<const Permutation> generators,
                                         const EngineLimits &limits)
{
  std::vector<std::uint32_t> gen_index;
  // Anything past the table bound is rejected below, so stop enumerating there.
  std::vector<Permutation> elems =
      enumerate(generators, std::min(limits.closure_bound, limits.table_bound + 1), &gen_index);
  const std::size_t order = elems.size();
  if (order > limits.table_bound)
  {
    throw SizeError("group of order " + std::to_string(order) + " exceeds the table bound " +
                    std::to_string(limits.table_bound));
  }
  const std::size_t n = elems.front().size();

  // A base: points whose images determine an element uniquely.
  std::vector<std::uint32_t> base;
  std::vector<std::size_t> fixing(order);
  std::iota(fixing.begin(), fixing.end(), std::size_t{0});
  for (std::uint32_t x = 0; x < n && fixing.size() > 1; ++x)
  {
    std::vector<std::size_t> still;
    for (std::size_t e : fixing)
    {
      if (elems[e][x] == x)
      {
        still.push_back(e);
      }
    }
    if (still.size() < fixing.size())
    {
      base.push_back(x);
      fixing = std::move(still);
    }
  }

  std::map<std::vector<std::uint32_t>, Element> by_image;
  std::vector<std::uint32_t> key(base.size());
  for (std::size_t e = 0; e < order; ++e)
  {
    for (std::size_t i = 0; i < base.size(); ++i)
    {
      key[i] = elems[e][base[i]];
    }
    by_image.emplace(key, static_cast<Element>(e));
  }
  // Packed keys are much faster than the map when they fit in 64 bits.
  bool packable = true;
  {
    unsigned __int128 span = 1;
    for (std::size_t i = 0; i < base.size() && packable; ++i)
    {
      span *= n;
      packable = span <= ~std::uint64_t{0};
    }
  }
  std::unordered_map<std::uint64_t, Element> packed;
  if (packable)
  {
    for (const auto &[k, e] : by_image)
    {
      std::uint64_t code = 0;
      for (std::uint32_t v : k)
      {
        code = code * n + v;
      }
      packed.emplace(code, e);
    }
  }

  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
  {
    for (std::size_t b = 0; b < order; ++b)
    {
      Element prod;
      if (packable)
      {
        std::uint64_t code = 0;
        for (std::uint32_t x : base)
        {
          code = code * n + elems[b][elems[a][x]];
        }
        prod = packed.at(code);
      }
      else
      {
        for (std::size_t i = 0; i < base.size(); ++i)
        {
          key[i] = elems[b][elems[a][base[i]]];
        }
        prod = by_image.at(key);
      }
      table[a * order + b] = prod;
    }
  }
  PermutationGroup pg;
  pg.group = FiniteGroup::from_trusted_table(std::move(table), order,
                                             {gen_index.begin(), gen_index.end()});
  pg.elements = std::move(elems);
  pg.degree = n;
  return pg;
}

// ---------------------------------------------------------------------------
// Classes and commutators

ConjugacyClasses conjugacy_classes(const FiniteGroup &g)
{
  const std::size_t n = g.order();
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  ConjugacyClasses cc;
  cc.class_of.assign(n, unset);
  const auto &gens = g.generators();

  auto sweep = [&](Element start) {
    const auto c = static_cast<std::uint32_t>(cc.reps.size());
    cc.reps.push_back(start);
    std::vector<Element> orbit{start};
    cc.class_of[start] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
    {
      for (Element s : gens)
      {
        const Element y = g.conjugate(orbit[i], s);
        if (cc.class_of[y] == unset)
        {
          cc.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    }
    cc.sizes.push_back(orbit.size());
  };

  sweep(g.identity());
  for (Element x = 0; x < n; ++x)
  {
    if (cc.class_of[x] == unset)
    {
      sweep(x);
    }
  }
  cc.inverse_class.resize(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c)
  {
    cc.inverse_class[c] = cc.class_of[g.inverse(cc.reps[c])];
  }
  return cc;
}

std::vector<Element> derived_subgroup(const FiniteGroup &g)
{
  // Normal closure of the commutators of generators: close under right
  // multiplication by those commutators and conjugation by generators.
  const auto &gens = g.generators();
  std::vector<Element> seeds;
  for (Element a : gens)
  {
    for (Element b : gens)
    {
      const Element c = g.commutator(a, b);
      if (c != g.identity())
      {
        seeds.push_back(c);
      }
    }
  }
  std::vector<bool> in(g.order(), false);
  std::vector<Element> out{g.identity()};
  in[g.identity()] = true;
  auto visit = [&](Element y) {
    if (!in[y])
    {
      in[y] = true;
      out.push_back(y);
    }
  };
  for (std::size_t i = 0; i < out.size(); ++i)
  {
    const Element x = out[i];
    for (Element s : seeds)
    {
      visit(g.mul(x, s));
    }
    for (Element s : gens)
    {
      visit(g.conjugate(x, s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t derived_subgroup_index(const FiniteGroup &g) { return g.order() / derived_subgroup(g).size(); }

// ---------------------------------------------------------------------------
// Degree multisets

std::uint64_t DegreeMultiset::sum_of_squares() const
{
  std::uint64_t s = 0;
  for (std::uint64_t d : degrees)
  {
    s += d * d;
  }
  return s;
}

std::size_t DegreeMultiset::linear_count() const
{
  return static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), 1U));
}

std::size_t DegreeMultiset::count_coprime(std::uint64_t p) const
{
  return static_cast<std::size_t>(
      std::count_if(degrees.begin(), degrees.end(), [p](std::uint64_t d) { return d % p != 0; }));
}

DegreeMultiset make_multiset(std::vector<std::uint64_t> degrees)
{
  std::sort(degrees.begin(), degrees.end());
  return DegreeMultiset{std::move(degrees)};
}

std::string to_string(const DegreeMultiset &d)
{
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < d.degrees.size();)
  {
    std::size_t j = i;
    while (j < d.degrees.size() && d.degrees[j] == d.degrees[i])
    {
      ++j;
    }
    if (i > 0)
    {
      os << ',';
    }
    os << d.degrees[i];
    if (j - i > 1)
    {
      os << '^' << (j - i);
    }
    i = j;
  }
  os << '}';
  return os.str();
}

std::size_t pprime_degree_count(const DegreeMultiset &d, std::uint64_t p) { return d.count_coprime(p); }

// ---------------------------------------------------------------------------
// Dixon-style degree computation

std::uint64_t splitting_prime(std::uint64_t order, std::uint64_t exponent)
{
  for (std::uint64_t k = order / exponent;; ++k)
  {
    const std::uint64_t l = k * exponent + 1;
    if (l > order && is_prime(l))
    {
      if (l >= (std::uint64_t{1} << 32))
      {
        throw SizeError("splitting prime does not fit the 32-bit field");
      }
      return l;
    }
  }
}

std::vector<std::uint32_t> class_coefficients(const FiniteGroup &g, const ConjugacyClasses &cc)
{
  const std::size_t c = cc.count();
  std::vector<std::uint32_t> a(c * c * c, 0);
  for (std::size_t k = 0; k < c; ++k)
  {
    const Element z = cc.reps[k];
    for (Element x = 0; x < g.order(); ++x)
    {
      const Element y = g.mul(g.inverse(x), z);
      ++a[(cc.class_of[x] * c + cc.class_of[y]) * c + k];
    }
  }
  return a;
}

namespace
{

struct Subspace
{
  FpMatrix basis;  // rows in reduced echelon form
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const PrimeField &k, FpMatrix rows)
{
  Subspace s;
  s.pivots = linalg::rref(k, rows);
  s.basis = std::move(rows);
  return s;
}

}  // namespace

DegreeMultiset irreducible_degrees(const FiniteGroup &g, const DixonOptions &options)
{
  if (g.order() > options.limits.table_bound)
  {
    throw SizeError("group order exceeds the engine bound");
  }
  return irreducible_degrees(g, conjugacy_classes(g), options);
}

DegreeMultiset irreducible_degrees(const FiniteGroup &g, const ConjugacyClasses &cc,
                                   const DixonOptions &options)
{
  const std::size_t c = cc.count();
  if (c > options.limits.max_classes)
  {
    throw SizeError("class count " + std::to_string(c) + " exceeds the engine bound " +
                    std::to_string(options.limits.max_classes));
  }
  if (g.order() > options.limits.table_bound)
  {
    throw SizeError("group order exceeds the engine bound");
  }
  std::uint64_t exponent = 1;
  for (Element r : cc.reps)
  {
    exponent = lcm(exponent, g.element_order(r));
  }
  const PrimeField k(splitting_prime(g.order(), exponent));
  const std::vector<std::uint32_t> coef = class_coefficients(g, cc);
  auto a = [&](std::size_t i, std::size_t j, std::size_t l) { return coef[(i * c + j) * c + l]; };

  std::mt19937_64 rng(options.seed);
  std::vector<Subspace> pending{make_subspace(k, FpMatrix::identity(c))};
  std::vector<std::vector<std::uint64_t>> eigenvectors;

  while (!pending.empty())
  {
    Subspace w = std::move(pending.back());
    pending.pop_back();
    const std::size_t d = w.basis.rows;
    if (d == 1)
    {
      eigenvectors.emplace_back(w.basis.a.begin(), w.basis.a.end());
      continue;
    }
    bool split = false;
    for (unsigned attempt = 0; attempt < options.max_attempts && !split; ++attempt)
    {
      // M[j][l] = sum_i r_i a_{ijl}; only the pivot rows are needed.
      std::vector<std::uint64_t> r(c);
      for (auto &x : r)
      {
        x = rng() % k.modulus();
      }
      FpMatrix m(d, c);
      for (std::size_t s = 0; s < d; ++s)
      {
        const std::size_t j = w.pivots[s];
        for (std::size_t i = 0; i < c; ++i)
        {
          if (r[i] == 0)
          {
            continue;
          }
          for (std::size_t l = 0; l < c; ++l)
          {
            const std::uint32_t v = a(i, j, l);
            if (v != 0)
            {
              m(s, l) = k.add(m(s, l), k.mul(r[i], v));
            }
          }
        }
      }
      // Restriction to w in the echelon basis: R[s][t] = (M b_t)[pivot_s].
      FpMatrix restricted(d, d);
      for (std::size_t s = 0; s < d; ++s)
      {
        for (std::size_t t = 0; t < d; ++t)
        {
          std::uint64_t acc = 0;
          for (std::size_t l = 0; l < c; ++l)
          {
            acc = k.add(acc, k.mul(m(s, l), w.basis(t, l)));
          }
          restricted(s, t) = acc;
        }
      }
      const Poly chi = linalg::charpoly(k, restricted);
      const std::vector<std::uint64_t> eig = poly::roots(k, chi, rng);
      if (eig.size() < 2)
      {
        continue;
      }
      std::size_t total = 0;
      std::vector<Subspace> parts;
      for (std::uint64_t lambda : eig)
      {
        FpMatrix shifted = restricted;
        for (std::size_t s = 0; s < d; ++s)
        {
          shifted(s, s) = k.sub(shifted(s, s), lambda);
        }
        const FpMatrix kernel = linalg::nullspace(k, shifted);
        FpMatrix vectors(kernel.rows, c);
        for (std::size_t v = 0; v < kernel.rows; ++v)
        {
          for (std::size_t t = 0; t < d; ++t)
          {
            const std::uint64_t coeff = kernel(v, t);
            if (coeff == 0)
            {
              continue;
            }
            for (std::size_t l = 0; l < c; ++l)
            {
              vectors(v, l) = k.add(vectors(v, l), k.mul(coeff, w.basis(t, l)));
            }
          }
        }
        total += kernel.rows;
        parts.push_back(make_subspace(k, std::move(vectors)));
      }
      if (total != d)
      {
        throw ConsistencyError("class matrix combination is not diagonalizable over F_L");
      }
      for (auto &part : parts)
      {
        pending.push_back(std::move(part));
      }
      split = true;
    }
    if (!split)
    {
      throw EngineError("common eigenspace of dimension " + std::to_string(d) +
                        " did not split after " + std::to_string(options.max_attempts) +
                        " random combinations");
    }
  }

  if (eigenvectors.size() != c)
  {
    throw ConsistencyError("number of common eigenvectors differs from the class count");
  }
  const std::uint64_t order_mod = k.reduce(g.order());
  std::vector<std::uint64_t> degrees;
  for (auto &w : eigenvectors)
  {
    if (w[0] == 0)
    {
      throw ConsistencyError("central character vanishes on the identity class");
    }
    const std::uint64_t norm = k.inv(w[0]);
    for (auto &x : w)
    {
      x = k.mul(x, norm);
    }
    // omega_i omega_j = sum_l a_{ijl} omega_l
    for (std::size_t i = 0; i < c; ++i)
    {
      for (std::size_t j = i; j < c; ++j)
      {
        std::uint64_t acc = 0;
        for (std::size_t l = 0; l < c; ++l)
        {
          const std::uint32_t v = a(i, j, l);
          if (v != 0)
          {
            acc = k.add(acc, k.mul(v, w[l]));
          }
        }
        if (acc != k.mul(w[i], w[j]))
        {
          throw ConsistencyError("eigenvector fails the class algebra relations");
        }
      }
    }
    // chi(1)^2 = |G| / sum_j omega_j omega_{j*} / |C_j|
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < c; ++j)
    {
      const std::uint64_t term = k.mul(w[j], w[cc.inverse_class[j]]);
      s = k.add(s, k.mul(term, k.inv(k.reduce(cc.sizes[j]))));
    }
    if (s == 0)
    {
      throw ConsistencyError("degree norm vanishes");
    }
    const std::uint64_t square = k.mul(order_mod, k.inv(s));
    const std::uint64_t root = isqrt(square);
    if (square > g.order() || root * root != square || g.order() % root != 0)
    {
      throw ConsistencyError("recovered chi(1)^2 = " + std::to_string(square) +
                             " is not a square degree dividing |G|");
    }
    degrees.push_back(root);
  }
  DegreeMultiset result = make_multiset(std::move(degrees));
  if (result.sum_of_squares() != g.order())
  {
    throw ConsistencyError("sum of squared degrees differs from |G|");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Builtin generators

std::vector<Permutation> cyclic_generators(std::uint32_t n)
{
  if (n == 0)
  {
    throw ParameterError("cyclic group needs n >= 1");
  }
  Permutation p(n);
  for (std::uint32_t x = 0; x < n; ++x)
  {
    p[x] = (x + 1) % n;
  }
  return {p};
}

std::vector<Permutation> dihedral_generators(std::uint32_t order)
{
  if (order < 6 || order % 2 != 0)
  {
    throw ParameterError("dihedral group order must be even and >= 6");
  }
  const std::uint32_t n = order / 2;
  Permutation rot(n);
  Permutation ref(n);
  for (std::uint32_t x = 0; x < n; ++x)
  {
    rot[x] = (x + 1) % n;
    ref[x] = (n - x) % n;
  }
  return {rot, ref};
}

std::vector<Permutation> symmetric_generators(std::uint32_t n)
{
  if (n == 0)
  {
    throw ParameterError("symmetric group needs n >= 1");
  }
  Permutation cycle(n);
  Permutation swap(n);
  std::iota(swap.begin(), swap.end(), 0U);
  for (std::uint32_t x = 0; x < n; ++x)
  {
    cycle[x] = (x + 1) % n;
  }
  if (n >= 2)
  {
    std::swap(swap[0], swap[1]);
  }
  return {cycle, swap};
}

std::vector<Permutation> alternating_generators(std::uint32_t n)
{
  if (n < 3)
  {
    Permutation id(std::max<std::uint32_t>(n, 1));
    std::iota(id.begin(), id.end(), 0U);
    return {id};
  }
  // 3-cycles (0 1 k) for k = 2..n-1 generate A_n.
  std::vector<Permutation> gens;
  for (std::uint32_t t = 2; t < n; ++t)
  {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0U);
    p[0] = 1;
    p[1] = t;
    p[t] = 0;
    gens.push_back(p);
  }
  return gens;
}

std::vector<Permutation> builtin_generators(const std::string &name)
{
  if (name.size() >= 2)
  {
    const char kind = name[0];
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
        digits.size() <= 6)
    {
      const auto n = static_cast<std::uint32_t>(std::stoul(digits));
      switch (kind)
      {
      case 'C':
        return cyclic_generators(n);
      case 'D':
        return dihedral_generators(n);
      case 'S':
        return symmetric_generators(n);
      case 'A':
        return alternating_generators(n);
      default:
        break;
      }
    }
  }
  throw ParameterError("unknown builtin group '" + name + "' (expected C<n>, D<order>, S<n>, A<n>)");
}

}  // namespace pprime
