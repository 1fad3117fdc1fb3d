#ifndef PPRIME_LIE_BOUNDS_HPP
#define PPRIME_LIE_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pprime/bigint.hpp"
#include "pprime/parallel.hpp"

namespace pprime
{

// Phi_d(q), exactly. Throws ParameterError for d = 0 or q < 2.
BigInt cyclotomic_value(std::uint64_t d, std::uint64_t q);

// Largest p with p < k^2/4 + 1 rounded as the tables print it, i.e.
// floor(k^2/4 + 1) for non-cyclic Sylow subgroups, and the largest p with
// p <= k^4/16 + 1 for cyclic ones.
std::uint64_t lemma_easy_bound(std::uint64_t k, bool cyclic_sylow);
// The strict reading of the non-cyclic inequality: largest p with
// p < k^2/4 + 1. Same as lemma_easy_bound in the cyclic case.
std::uint64_t lemma_easy_strict_bound(std::uint64_t k, bool cyclic_sylow);

/// Number of invariant unipotent characters of p'-degree for an exceptional
/// series, with the printed bound on p.
struct InvariantCharRow
{
  std::string group_tag;
  std::string d_list;
  std::uint64_t count = 0;
  bool at_least = false;  // the count is a lower bound
  bool cyclic_sylow = false;
  std::uint64_t stated_p_bound = 0;
};

const std::vector<InvariantCharRow> &table2_rows();

struct Table2Check
{
  InvariantCharRow row;
  std::uint64_t computed = 0;
  std::uint64_t strict = 0;
  bool matches = false;
  bool strict_differs = false;  // the printed bound itself fails the strict reading
};

struct Table2Report
{
  std::vector<Table2Check> rows;
  std::size_t mismatches() const;
};

Table2Report verify_table2();

struct Table1Row
{
  std::string group_tag;
  std::uint64_t p = 0;
  std::uint64_t count = 0;
  bool holds = false;  // count^2/4 + 1 > p
};

std::vector<Table1Row> table1_data();

/// One evaluated grid point. lhs and rhs are rounded for display; holds is
/// decided exactly.
struct InequalityRow
{
  std::string family;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t f = 0;
  std::uint64_t d = 0;
  std::uint64_t a = 0;
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
  bool flagged = false;
  std::string note;
};

struct InequalityReport
{
  std::string name;
  std::vector<InequalityRow> rows;
  std::size_t violations() const;
};

struct DefiningGrid
{
  std::uint64_t rank_max = 8;
  std::uint64_t r_max = 97;
  std::uint64_t f_max = 6;
};

// q^l > 2 sqrt(p-1) |Out| with q = p^f and |Out| <= (6l+3)f, except at
// (f, l, p) = (1, 2, 5) and (1, 2, 7) where |Out| <= 6 and 8 are used.
InequalityReport defining_char_check(const DefiningGrid &grid = {},
                                     Execution exec = Execution::Parallel);

enum class ClassicalFamily
{
  BC,
  D,
  D2,  // twisted D
  A,
  A2   // unitary
};

std::string to_string(ClassicalFamily family);
// Accepts bc, d, 2d, a, 2a. Throws ParameterError otherwise.
ClassicalFamily parse_classical_family(const std::string &name);

struct ClassicalGrid
{
  std::uint64_t q_max = 512;
  std::uint64_t rank_max = 12;
  std::uint64_t f_max = 9;
};

// Number of irreducible characters of C_d wr S_a.
BigInt wreath_class_count(std::uint64_t d, std::uint64_t a);

// Minimal d for the family's torus convention: p | q^d - 1 or q^d + 1 for
// B/C and D types, p | q^d - 1 for A, p | q^d - (-1)^d for the unitary type.
std::uint64_t torus_index(ClassicalFamily family, std::uint64_t q, std::uint64_t p);

// The abelian-Sylow inequality
//   |Irr(W_d)| + T^a / (c^a a!) > 2 f g sqrt(p - 1)
// over all q = r^f <= q_max, a >= 2, n = a d + s <= rank_max and primes
// p >= 5, p != r, p > a. T is the torus factor q^d -/+ 1 that p divides,
// c = 2d (B/C, D types) or d (A types), g = gcd(2, q-1), gcd(n, q-1) or
// gcd(n, q+1). For the D types half the wreath count is used (flagged).
InequalityReport classical_inequality_check(ClassicalFamily family,
                                            const ClassicalGrid &grid = {},
                                            Execution exec = Execution::Parallel);

inline constexpr std::uint64_t kE8WeylOrder = 696'729'600;

// (q-1)^8 / |W(E8)| > 2 t sqrt(p-1) for prime powers q in [q_min, q_max] and
// primes 5 <= p | q - 1, with t = max(f, ceil(log_p q)) bounding log_p q.
InequalityReport e8_d1_check(std::uint64_t q_min = 1001, std::uint64_t q_max = 4096);

}  // namespace pprime

#endif  // PPRIME_LIE_BOUNDS_HPP
