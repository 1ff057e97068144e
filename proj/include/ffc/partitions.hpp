#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffc/rational.hpp"
#include "ffc/var_poly.hpp"

namespace ffc::partitions {

/// Hard ceiling of the ground-set size a SetPartition can represent.
inline constexpr int kMaxGroundSize = 16;
inline constexpr int kDefaultMaxSize = 12;

/// Configured cap n_max for every operation that enumerates P(n).
/// Process-wide; must lie in [1, kMaxGroundSize].
void set_max_size(int n);
int max_size();

/// Throws Error(size_limit) naming the cap unless 1 <= n <= max_size().
void check_size(int n);

/// A partition of {1..n}, stored as its restricted growth string: label(i)
/// is the index of the block containing i+1, blocks numbered by least
/// element. The RGS is the canonical form, so equality is structural.
class SetPartition {
 public:
  SetPartition() = default;

  /// Blocks of 1-based elements in any order; validated and canonicalised.
  static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);
  /// Restricted growth string (0-based labels); validated.
  static SetPartition from_labels(std::span<const int> labels);
  /// Text form "{1,3|2,4}".
  static SetPartition parse(std::string_view text);

  static SetPartition singletons(int n);  // 0_n
  static SetPartition one_block(int n);   // 1_n

  int size() const { return n_; }
  int block_count() const { return blocks_; }
  int label(int element) const { return label_[static_cast<std::size_t>(element)]; }

  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  friend class Enumerator;
  std::uint8_t n_ = 0;
  std::uint8_t blocks_ = 0;
  std::array<std::uint8_t, kMaxGroundSize> label_{};
};

/// r_i = number of blocks of size i, stored as counts[i-1].
struct PartitionType {
  int n = 0;
  std::vector<int> counts;

  int block_count() const;
  /// Block sizes in non-increasing order.
  std::vector<int> sizes() const;
  std::string to_string() const;

  static PartitionType from_sizes(int n, std::span<const int> sizes);

  friend bool operator==(const PartitionType&, const PartitionType&) = default;
  friend auto operator<=>(const PartitionType&, const PartitionType&) = default;
};

enum class Lattice { all, noncrossing };

std::vector<SetPartition> enumerate_partitions(int n);
std::vector<SetPartition> enumerate_noncrossing(int n);

/// Streams P(n) in the same order as enumerate_partitions without storing it.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);

bool is_noncrossing(const SetPartition& p);

/// True iff every block of `finer` lies inside a block of `coarser`
/// (finer <= coarser in reverse refinement).
bool refines(const SetPartition& finer, const SetPartition& coarser);

SetPartition join(const SetPartition& a, const SetPartition& b);

std::int64_t mobius_from_zero(const SetPartition& p);
std::int64_t mobius_to_one(const SetPartition& p);
std::int64_t mobius_from_zero(const PartitionType& t);

PartitionType partition_type(const SetPartition& p);

/// Closed forms n!/(p_r (n-m+1)!) and n!/(p_r prod (i!)^{r_i}).
Integer count_by_type(const PartitionType& t, Lattice lattice);

/// prod over blocks V of f[|V| - 1]; throws Error(index) if f is too short.
Rational multiplicative_extension(std::span<const Rational> f, const SetPartition& p);
Rational multiplicative_extension(std::span<const Rational> f, const PartitionType& t);

std::uint64_t block_size_product(const SetPartition& p);

/// sum over P(n) of mu(0, pi) t^{|pi|}; equals (t)_n.
VarPoly partition_lattice_charpoly(int n);

/// One row of the memoized per-n table: a partition type together with its
/// multiplicities in P(n) and NC(n), counted by enumeration.
struct TypeClass {
  PartitionType type;
  std::uint64_t count_all = 0;
  std::uint64_t count_noncrossing = 0;
  std::int64_t mobius = 0;  // mu(0, pi), shared by every pi of this type
};

/// Types of P(n) in a fixed order. Built once per n by enumerating P(n);
/// safe for concurrent readers.
const std::vector<TypeClass>& type_classes(int n);

/// For each type index s of P(n), the multiset {type(pi) : pi >= sigma_s}
/// for a representative sigma_s, as (type index, multiplicity) pairs.
/// The interval above sigma depends only on sigma's type.
const std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>& coarsenings(int n);

/// Index of t inside type_classes(t.n).
std::size_t type_index(const PartitionType& t);

}  // namespace ffc::partitions
