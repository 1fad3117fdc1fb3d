#ifndef PPRIME_SYMMETRIC_CHARS_HPP
#define PPRIME_SYMMETRIC_CHARS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pprime/bigint.hpp"
#include "pprime/parallel.hpp"

namespace pprime
{

/// Base-p digits of n, least significant first. The top digit is nonzero.
struct PAdicExpansion
{
  std::uint64_t n;
  std::uint64_t p;
  std::vector<std::uint64_t> digits;
};

PAdicExpansion p_adic_expansion(std::uint64_t n, std::uint64_t p);

// |Irr_{p'}(S_n)| as the product over base-p digits a_i of k(p^i, a_i).
BigInt macdonald_count(std::uint64_t n, std::uint64_t p);

/// A partition of n as a weakly decreasing list of positive parts.
class PartitionShape
{
public:
  PartitionShape() = default;
  explicit PartitionShape(std::vector<unsigned> parts);

  const std::vector<unsigned> &parts() const { return parts_; }
  unsigned size() const { return n_; }
  PartitionShape conjugate() const;
  bool self_conjugate() const { return conjugate() == *this; }

  friend bool operator==(const PartitionShape &, const PartitionShape &) = default;
  friend auto operator<=>(const PartitionShape &, const PartitionShape &) = default;

private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

// Every partition of n, in reverse lexicographic order starting from [n].
std::vector<PartitionShape> all_partitions(unsigned n);

// n! / (product of hook lengths). Throws ConsistencyError if the division is
// not exact.
BigInt hook_degree(const PartitionShape &shape);

inline constexpr unsigned kDefaultOracleBound = 30;

// Hook-length degrees of every irreducible of S_n, one per partition.
std::vector<BigInt> symmetric_degrees(unsigned n, unsigned bound = kDefaultOracleBound);

// Degrees of A_n obtained from S_n by restriction: a self-conjugate shape
// splits into two characters of half degree, a conjugate pair restricts to one.
std::vector<BigInt> alternating_degrees(unsigned n, unsigned bound = kDefaultOracleBound);

std::uint64_t irr_pprime_count_sym_oracle(unsigned n, std::uint64_t p,
                                          unsigned bound = kDefaultOracleBound);
std::uint64_t irr_pprime_count_alt_oracle(unsigned n, std::uint64_t p,
                                          unsigned bound = kDefaultOracleBound);

struct SymmetricRow
{
  unsigned n;
  std::uint64_t p;
  BigInt macdonald;
  std::uint64_t oracle;
  std::uint64_t alternating;
  // n = 6: Aut(A_6) is not S_6, so the S_n-orbit argument does not apply.
  bool flagged_n6;
  bool matches;      // macdonald == oracle
  bool lower_bound;  // macdonald >= n - 1 >= p - 1
  bool alt_bound;    // |Irr_{p'}(A_n)| >= (n - 1) / 2, only meaningful for n >= 5

  bool ok() const { return matches && lower_bound && alt_bound; }
};

struct SymmetricReport
{
  unsigned n_max;
  std::vector<SymmetricRow> rows;
  std::size_t violations() const;
};

// Sweeps 1 <= n <= n_max against every prime p <= n (restricted to `primes`
// when given).
SymmetricReport verify_symmetric_bounds(unsigned n_max,
                                        const std::optional<std::vector<std::uint64_t>> &primes,
                                        Execution exec = Execution::Parallel,
                                        unsigned bound = kDefaultOracleBound);

}  // namespace pprime

#endif  // PPRIME_SYMMETRIC_CHARS_HPP
