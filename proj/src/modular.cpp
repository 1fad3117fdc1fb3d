#include "pprime/modular.hpp"

#include <algorithm>
#include <string>

#include "pprime/errors.hpp"

namespace pprime
{

PrimeField::PrimeField(std::uint64_t modulus) : l_(modulus)
{
  if (modulus < 2 || modulus >= (std::uint64_t{1} << 32))
  {
    throw ParameterError("prime field modulus out of range: " + std::to_string(modulus));
  }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const
{
  std::uint64_t r = 1 % l_;
  a %= l_;
  while (e > 0)
  {
    if (e & 1U)
    {
      r = mul(r, a);
    }
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
  if (a % l_ == 0)
  {
    throw ConsistencyError("inverse of zero in prime field");
  }
  return pow(a, l_ - 2);
}

namespace poly
{

void trim(Poly &f)
{
  while (!f.empty() && f.back() == 0)
  {
    f.pop_back();
  }
}

int degree(const Poly &f) { return static_cast<int>(f.size()) - 1; }

Poly add(const PrimeField &k, const Poly &f, const Poly &g)
{
  Poly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
  {
    h[i] = k.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  }
  trim(h);
  return h;
}

Poly sub(const PrimeField &k, const Poly &f, const Poly &g)
{
  Poly h(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
  {
    h[i] = k.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  }
  trim(h);
  return h;
}

Poly mul(const PrimeField &k, const Poly &f, const Poly &g)
{
  if (f.empty() || g.empty())
  {
    return {};
  }
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
  {
    if (f[i] == 0)
    {
      continue;
    }
    for (std::size_t j = 0; j < g.size(); ++j)
    {
      h[i + j] = k.add(h[i + j], k.mul(f[i], g[j]));
    }
  }
  trim(h);
  return h;
}

void divmod(const PrimeField &k, const Poly &f, const Poly &g, Poly &quot, Poly &rem)
{
  if (g.empty())
  {
    throw ConsistencyError("polynomial division by zero");
  }
  rem = f;
  trim(rem);
  quot.clear();
  const int dg = degree(g);
  if (degree(rem) < dg)
  {
    return;
  }
  quot.assign(static_cast<std::size_t>(degree(rem) - dg + 1), 0);
  const std::uint64_t lead_inv = k.inv(g.back());
  while (degree(rem) >= dg)
  {
    const std::size_t shift = static_cast<std::size_t>(degree(rem) - dg);
    const std::uint64_t c = k.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j)
    {
      rem[shift + j] = k.sub(rem[shift + j], k.mul(c, g[j]));
    }
    trim(rem);
  }
}

Poly mod(const PrimeField &k, const Poly &f, const Poly &g)
{
  Poly q;
  Poly r;
  divmod(k, f, g, q, r);
  return r;
}

Poly monic(const PrimeField &k, const Poly &f)
{
  if (f.empty())
  {
    return f;
  }
  const std::uint64_t c = k.inv(f.back());
  Poly h(f);
  for (auto &x : h)
  {
    x = k.mul(x, c);
  }
  return h;
}

Poly gcd(const PrimeField &k, Poly f, Poly g)
{
  trim(f);
  trim(g);
  while (!g.empty())
  {
    Poly r = mod(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(k, f);
}

Poly powmod(const PrimeField &k, const Poly &base, std::uint64_t e, const Poly &m)
{
  Poly result = mod(k, Poly{1}, m);
  Poly b = mod(k, base, m);
  while (e > 0)
  {
    if (e & 1U)
    {
      result = mod(k, mul(k, result, b), m);
    }
    e >>= 1;
    if (e > 0)
    {
      b = mod(k, mul(k, b, b), m);
    }
  }
  return result;
}

std::uint64_t evaluate(const PrimeField &k, const Poly &f, std::uint64_t x)
{
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
  {
    acc = k.add(k.mul(acc, x), *it);
  }
  return acc;
}

bool is_irreducible(const PrimeField &k, const Poly &f)
{
  const int n = degree(f);
  if (n < 1)
  {
    return false;
  }
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= n / 2; ++i)
  {
    h = powmod(k, h, k.modulus(), f);
    if (degree(gcd(k, f, sub(k, h, x))) > 0)
    {
      return false;
    }
  }
  return true;
}

namespace
{

void split_roots(const PrimeField &k, const Poly &g, std::mt19937_64 &rng,
                 std::vector<std::uint64_t> &out)
{
  const int d = degree(g);
  if (d <= 0)
  {
    return;
  }
  if (d == 1)
  {
    // g is monic: x + c
    out.push_back(k.neg(g[0]));
    return;
  }
  const std::uint64_t half = (k.modulus() - 1) / 2;
  for (int attempt = 0; attempt < 256; ++attempt)
  {
    const Poly shifted{rng() % k.modulus(), 1};
    Poly h = powmod(k, shifted, half, g);
    h = sub(k, h, Poly{1});
    const Poly common = gcd(k, g, h);
    const int dc = degree(common);
    if (dc > 0 && dc < d)
    {
      Poly quot;
      Poly rem;
      divmod(k, g, common, quot, rem);
      split_roots(k, common, rng, out);
      split_roots(k, monic(k, quot), rng, out);
      return;
    }
  }
  throw EngineError("equal-degree root splitting did not converge");
}

}  // namespace

std::vector<std::uint64_t> roots(const PrimeField &k, const Poly &f, std::mt19937_64 &rng)
{
  std::vector<std::uint64_t> out;
  if (degree(f) < 1)
  {
    return out;
  }
  if (k.modulus() <= 64)
  {
    for (std::uint64_t x = 0; x < k.modulus(); ++x)
    {
      if (evaluate(k, f, x) == 0)
      {
        out.push_back(x);
      }
    }
    return out;
  }
  const Poly fm = monic(k, f);
  const Poly x{0, 1};
  const Poly frob = powmod(k, x, k.modulus(), fm);
  const Poly g = gcd(k, fm, sub(k, frob, x));
  split_roots(k, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace poly

FpMatrix FpMatrix::identity(std::size_t n)
{
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
  {
    m(i, i) = 1;
  }
  return m;
}

namespace linalg
{

FpMatrix mul(const PrimeField &k, const FpMatrix &x, const FpMatrix &y)
{
  FpMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
  {
    for (std::size_t t = 0; t < x.cols; ++t)
    {
      const std::uint64_t c = x(i, t);
      if (c == 0)
      {
        continue;
      }
      for (std::size_t j = 0; j < y.cols; ++j)
      {
        z(i, j) = k.add(z(i, j), k.mul(c, y(t, j)));
      }
    }
  }
  return z;
}

std::vector<std::uint64_t> apply(const PrimeField &k, const FpMatrix &x,
                                 const std::vector<std::uint64_t> &v)
{
  std::vector<std::uint64_t> out(x.rows, 0);
  for (std::size_t i = 0; i < x.rows; ++i)
  {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < x.cols; ++j)
    {
      acc = k.add(acc, k.mul(x(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

FpMatrix transpose(const FpMatrix &x)
{
  FpMatrix t(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
  {
    for (std::size_t j = 0; j < x.cols; ++j)
    {
      t(j, i) = x(i, j);
    }
  }
  return t;
}

std::vector<std::size_t> rref(const PrimeField &k, FpMatrix &x)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < x.cols && row < x.rows; ++col)
  {
    std::size_t sel = row;
    while (sel < x.rows && x(sel, col) == 0)
    {
      ++sel;
    }
    if (sel == x.rows)
    {
      continue;
    }
    if (sel != row)
    {
      for (std::size_t j = 0; j < x.cols; ++j)
      {
        std::swap(x(sel, j), x(row, j));
      }
    }
    const std::uint64_t inv = k.inv(x(row, col));
    for (std::size_t j = col; j < x.cols; ++j)
    {
      x(row, j) = k.mul(x(row, j), inv);
    }
    for (std::size_t i = 0; i < x.rows; ++i)
    {
      if (i == row || x(i, col) == 0)
      {
        continue;
      }
      const std::uint64_t c = x(i, col);
      for (std::size_t j = col; j < x.cols; ++j)
      {
        x(i, j) = k.sub(x(i, j), k.mul(c, x(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  x.rows = row;
  x.a.resize(row * x.cols);
  return pivots;
}

std::size_t rank(const PrimeField &k, FpMatrix x) { return rref(k, x).size(); }

FpMatrix nullspace(const PrimeField &k, FpMatrix x)
{
  const std::size_t n = x.cols;
  const auto pivots = rref(k, x);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots)
  {
    is_pivot[c] = true;
  }
  FpMatrix basis(n - pivots.size(), n);
  std::size_t b = 0;
  for (std::size_t free = 0; free < n; ++free)
  {
    if (is_pivot[free])
    {
      continue;
    }
    basis(b, free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
    {
      basis(b, pivots[r]) = k.neg(x(r, free));
    }
    ++b;
  }
  return basis;
}

FpMatrix inverse(const PrimeField &k, const FpMatrix &x)
{
  const std::size_t n = x.rows;
  FpMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      aug(i, j) = x(i, j);
    }
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(k, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
  {
    throw ParameterError("matrix is singular");
  }
  FpMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      inv(i, j) = aug(i, n + j);
    }
  }
  return inv;
}

Poly charpoly(const PrimeField &k, FpMatrix h)
{
  const std::size_t n = h.rows;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m)
  {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0)
    {
      ++i;
    }
    if (i == n)
    {
      continue;
    }
    if (i != m)
    {
      for (std::size_t j = 0; j < n; ++j)
      {
        std::swap(h(i, j), h(m, j));
      }
      for (std::size_t j = 0; j < n; ++j)
      {
        std::swap(h(j, i), h(j, m));
      }
    }
    const std::uint64_t inv = k.inv(h(m, m - 1));
    for (i = m + 1; i < n; ++i)
    {
      const std::uint64_t u = k.mul(h(i, m - 1), inv);
      if (u == 0)
      {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
      {
        h(i, j) = k.sub(h(i, j), k.mul(u, h(m, j)));
      }
      for (std::size_t j = 0; j < n; ++j)
      {
        h(j, m) = k.add(h(j, m), k.mul(u, h(j, i)));
      }
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod h_{j,j-1}) p_{m-i-1}
  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m)
  {
    p[m] = poly::mul(k, Poly{k.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i)
    {
      t = k.mul(t, h(m - i, m - i - 1));
      if (t == 0)
      {
        break;
      }
      const std::uint64_t c = k.mul(t, h(m - i - 1, m - 1));
      Poly scaled = p[m - i - 1];
      for (auto &coef : scaled)
      {
        coef = k.mul(coef, c);
      }
      p[m] = poly::sub(k, p[m], scaled);
    }
  }
  return p[n];
}

}  // namespace linalg

}  // namespace pprime
