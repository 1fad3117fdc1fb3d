#ifndef PPRIME_MODULAR_HPP
#define PPRIME_MODULAR_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pprime
{

/// Arithmetic in Z/LZ for a prime L < 2^32, values kept in [0, L).
class PrimeField
{
public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return l_; }
  std::uint64_t reduce(std::uint64_t a) const { return a % l_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const
  {
    const std::uint64_t s = a + b;
    return s >= l_ ? s - l_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + l_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : l_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

private:
  std::uint64_t l_;
};

// Dense polynomial, coefficient i multiplies x^i. The zero polynomial is empty.
using Poly = std::vector<std::uint64_t>;

namespace poly
{

void trim(Poly &f);
// -1 for the zero polynomial.
int degree(const Poly &f);
Poly add(const PrimeField &k, const Poly &f, const Poly &g);
Poly sub(const PrimeField &k, const Poly &f, const Poly &g);
Poly mul(const PrimeField &k, const Poly &f, const Poly &g);
// Quotient and remainder; g must be nonzero.
void divmod(const PrimeField &k, const Poly &f, const Poly &g, Poly &quot, Poly &rem);
Poly mod(const PrimeField &k, const Poly &f, const Poly &g);
Poly monic(const PrimeField &k, const Poly &f);
// Monic gcd.
Poly gcd(const PrimeField &k, Poly f, Poly g);
// base^e mod m.
Poly powmod(const PrimeField &k, const Poly &base, std::uint64_t e, const Poly &m);
std::uint64_t evaluate(const PrimeField &k, const Poly &f, std::uint64_t x);

// Rabin/Ben-Or: monic f of degree >= 1 is irreducible over k.
bool is_irreducible(const PrimeField &k, const Poly &f);

// Distinct roots of f in k, ascending. Uses gcd with x^L - x followed by
// random equal-degree splitting.
std::vector<std::uint64_t> roots(const PrimeField &k, const Poly &f, std::mt19937_64 &rng);

}  // namespace poly

/// Row-major dense matrix over a prime field.
struct FpMatrix
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static FpMatrix identity(std::size_t n);

  std::uint64_t &operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  friend bool operator==(const FpMatrix &, const FpMatrix &) = default;
};

namespace linalg
{

FpMatrix mul(const PrimeField &k, const FpMatrix &x, const FpMatrix &y);
std::vector<std::uint64_t> apply(const PrimeField &k, const FpMatrix &x,
                                 const std::vector<std::uint64_t> &v);
FpMatrix transpose(const FpMatrix &x);

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row (zero rows are dropped).
std::vector<std::size_t> rref(const PrimeField &k, FpMatrix &x);
std::size_t rank(const PrimeField &k, FpMatrix x);
// Basis of {v : x v = 0} as the rows of the result.
FpMatrix nullspace(const PrimeField &k, FpMatrix x);
// Throws ParameterError if singular.
FpMatrix inverse(const PrimeField &k, const FpMatrix &x);

// Characteristic polynomial det(tI - x), monic, via Hessenberg reduction.
Poly charpoly(const PrimeField &k, FpMatrix x);

}  // namespace linalg

}  // namespace pprime

#endif  // PPRIME_MODULAR_HPP
