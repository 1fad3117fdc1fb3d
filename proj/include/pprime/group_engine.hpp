#ifndef PPRIME_GROUP_ENGINE_HPP
#define PPRIME_GROUP_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pprime
{

using Element = std::uint32_t;

/// A permutation of {0, ..., n-1} in one-line image notation: x maps to p[x].
using Permutation = std::vector<std::uint32_t>;

struct EngineLimits
{
  std::size_t closure_bound = 100'000;  // elements enumerated by group_from_permutations
  std::size_t table_bound = 5'000;      // largest group stored as a full table
  std::size_t max_classes = 80;         // largest class count the degree engine accepts
};

/// A finite group given by its full multiplication table.
///
/// Elements are the indices 0..order-1. mul(a, b) is the product "a then b";
/// for permutation groups this is x -> b[a[x]].
class FiniteGroup
{
public:
  FiniteGroup() = default;

  // Validates the Latin-square property, identity and inverses, and
  // associativity (exhaustive up to order 512, sampled above). Throws
  // ParameterError on any failure. An empty generator list is replaced by a
  // greedily chosen generating set.
  static FiniteGroup from_table(std::vector<Element> table, std::size_t order,
                                std::vector<Element> generators = {});

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element identity() const { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element conjugate(Element x, Element g) const { return mul(mul(inverse(g), x), g); }
  Element commutator(Element x, Element y) const
  {
    return mul(mul(inverse(x), inverse(y)), mul(x, y));
  }
  const std::vector<Element> &generators() const { return generators_; }
  const std::vector<Element> &table() const { return table_; }

  std::uint64_t element_order(Element a) const;
  std::uint64_t exponent() const;
  bool is_abelian() const;

  // Subgroup generated by gens, as a sorted element list.
  std::vector<Element> closure(std::span<const Element> gens) const;
  // All elements commuting with x.
  std::vector<Element> centralizer(Element x) const;

  // Reindexes a subgroup (given as any list of its elements) as a group in
  // its own right. Throws ParameterError if the list is not closed.
  FiniteGroup subgroup(std::span<const Element> elements) const;

  // Builds without the associativity check; for tables produced from a
  // composition law that is associative by construction.
  static FiniteGroup from_trusted_table(std::vector<Element> table, std::size_t order,
                                        std::vector<Element> generators);

private:
  void finish(std::vector<Element> generators);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
};

struct GroupAxioms
{
  bool latin_square = false;
  bool identity = false;
  bool inverses = false;
  bool associative = false;
  bool associativity_exhaustive = false;

  bool ok() const { return latin_square && identity && inverses && associative; }
};

// Checks the group axioms on a table. Associativity is exhaustive for order
// <= 512 and checked on `samples` random triples otherwise.
GroupAxioms check_group_axioms(std::span<const Element> table, std::size_t order,
                               std::uint64_t seed = 1, std::size_t samples = 200'000);

struct PermutationGroup
{
  FiniteGroup group;
  std::vector<Permutation> elements;  // elements[i] is group element i; 0 is the identity
  std::size_t degree = 0;
};

// Enumerates the closure of the generators and tabulates it. Throws
// ParameterError for malformed permutations and SizeError when the closure
// exceeds limits.closure_bound or the table would exceed limits.table_bound.
PermutationGroup group_from_permutations(std::span<const Permutation> generators,
                                         const EngineLimits &limits = {});

// Order of the group generated, without building a table.
std::size_t permutation_group_order(std::span<const Permutation> generators,
                                    const EngineLimits &limits = {});

struct ConjugacyClasses
{
  std::vector<std::uint32_t> class_of;  // element -> class
  std::vector<Element> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> inverse_class;

  std::size_t count() const { return reps.size(); }
};

// Class 0 is always the identity class.
ConjugacyClasses conjugacy_classes(const FiniteGroup &g);

// Elements of the commutator subgroup.
std::vector<Element> derived_subgroup(const FiniteGroup &g);
std::size_t derived_subgroup_index(const FiniteGroup &g);

/// Irreducible character degrees, weakly increasing.
struct DegreeMultiset
{
  std::vector<std::uint64_t> degrees;

  std::size_t size() const { return degrees.size(); }
  std::uint64_t sum_of_squares() const;
  std::size_t linear_count() const;
  std::size_t count_coprime(std::uint64_t p) const;

  friend bool operator==(const DegreeMultiset &, const DegreeMultiset &) = default;
};

DegreeMultiset make_multiset(std::vector<std::uint64_t> degrees);
std::string to_string(const DegreeMultiset &d);

struct DixonOptions
{
  std::uint64_t seed = 0x5eed;
  unsigned max_attempts = 64;  // random combinations tried per unsplit subspace
  EngineLimits limits{};
};

// Smallest prime L with L = 1 (mod exponent) and L > order.
std::uint64_t splitting_prime(std::uint64_t order, std::uint64_t exponent);

// Class multiplication coefficients a[(i*c + j)*c + k] = #{(x, y) in C_i x C_j : xy = z_k}.
std::vector<std::uint32_t> class_coefficients(const FiniteGroup &g, const ConjugacyClasses &cc);

// Degrees via simultaneous diagonalization of the class matrices over F_L.
// Throws SizeError beyond the limits, EngineError if the random splitting
// fails to refine, ConsistencyError if an exact identity breaks.
DegreeMultiset irreducible_degrees(const FiniteGroup &g, const DixonOptions &options = {});
DegreeMultiset irreducible_degrees(const FiniteGroup &g, const ConjugacyClasses &cc,
                                   const DixonOptions &options = {});

std::size_t pprime_degree_count(const DegreeMultiset &d, std::uint64_t p);

// Standard permutation generators.
std::vector<Permutation> cyclic_generators(std::uint32_t n);
std::vector<Permutation> dihedral_generators(std::uint32_t order);  // order = 2n, n >= 3
std::vector<Permutation> symmetric_generators(std::uint32_t n);
std::vector<Permutation> alternating_generators(std::uint32_t n);

// Resolves "C<n>", "D<order>", "S<n>", "A<n>". Throws ParameterError otherwise.
std::vector<Permutation> builtin_generators(const std::string &name);

}  // namespace pprime

#endif  // PPRIME_GROUP_ENGINE_HPP
