#pragma once

#include <iosfwd>
#include <vector>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// Joint assignment of M resources to N assets. Entry (n, m) is the
/// probability that resource m protects asset n. Each column is a
/// distribution over assets; row n averages to the defense marginal D_n
/// (so a row may SUM to more than 1 when M > 1).
class AllocationMatrix {
 public:
  AllocationMatrix(std::size_t asset_count, std::size_t resource_count);

  std::size_t asset_count() const { return asset_count_; }
  std::size_t resource_count() const { return resource_count_; }

  Rational& at(std::size_t asset, std::size_t resource);
  const Rational& at(std::size_t asset, std::size_t resource) const;

 private:
  std::size_t asset_count_;
  std::size_t resource_count_;
  std::vector<Rational> entries_;  // row-major
};

/// The identical-columns realization: every resource follows the defense
/// marginal. Satisfies all matrix invariants by construction.
AllocationMatrix uniform_allocation(const DefenseVector& defense, std::size_t resources);

struct AllocationViolation {
  enum class Kind { EntryRange, ColumnSum, RowMean };
  Kind kind;
  std::size_t row;     // asset index, unused for ColumnSum
  std::size_t column;  // resource index, unused for RowMean
  Rational value;
  Rational expected;
};

struct AllocationVerdict {
  bool valid = false;
  std::vector<AllocationViolation> violations;
};

/// Checks entries in [0,1], unit column sums, and row means equal to the
/// defense marginals. Reports every violation, not just the first.
AllocationVerdict validate_allocation(const AllocationMatrix& matrix,
                                      const DefenseVector& defense);

/// Comma-delimited export with exact "p/q" entries, one row per asset.
void write_allocation(const AllocationMatrix& matrix, std::ostream& out);

}  // namespace stackgame
