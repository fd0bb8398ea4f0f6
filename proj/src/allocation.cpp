#include "stackgame/allocation.hpp"

#include <ostream>

namespace stackgame {

AllocationMatrix::AllocationMatrix(std::size_t asset_count, std::size_t resource_count)
    : asset_count_(asset_count),
      resource_count_(resource_count),
      entries_(asset_count * resource_count) {
  if (asset_count == 0 || resource_count == 0) {
    throw ValidationError("allocation matrix needs at least one asset and one resource");
  }
}

Rational& AllocationMatrix::at(std::size_t asset, std::size_t resource) {
  if (asset >= asset_count_ || resource >= resource_count_) {
    throw std::out_of_range("allocation matrix index out of range");
  }
  return entries_[asset * resource_count_ + resource];
}

const Rational& AllocationMatrix::at(std::size_t asset, std::size_t resource) const {
  return const_cast<AllocationMatrix&>(*this).at(asset, resource);
}

AllocationMatrix uniform_allocation(const DefenseVector& defense, std::size_t resources) {
  AllocationMatrix matrix(defense.size(), resources);
  for (std::size_t n = 0; n < defense.size(); ++n) {
    for (std::size_t m = 0; m < resources; ++m) {
      matrix.at(n, m) = defense[n];
    }
  }
  return matrix;
}

AllocationVerdict validate_allocation(const AllocationMatrix& matrix,
                                      const DefenseVector& defense) {
  if (matrix.asset_count() != defense.size()) {
    throw ValidationError("allocation matrix has " + std::to_string(matrix.asset_count()) +
                          " rows but the defense vector has " + std::to_string(defense.size()) +
                          " entries");
  }
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  AllocationVerdict verdict;

  for (std::size_t n = 0; n < matrix.asset_count(); ++n) {
    for (std::size_t m = 0; m < matrix.resource_count(); ++m) {
      const Rational& e = matrix.at(n, m);
      if (e < 0 || e > 1) {
        verdict.violations.push_back(
            {AllocationViolation::Kind::EntryRange, n, m, e, Rational(0)});
      }
    }
  }
  for (std::size_t m = 0; m < matrix.resource_count(); ++m) {
    Rational column_sum;
    for (std::size_t n = 0; n < matrix.asset_count(); ++n) {
      column_sum += matrix.at(n, m);
    }
    if (column_sum != 1) {
      verdict.violations.push_back(
          {AllocationViolation::Kind::ColumnSum, npos, m, column_sum, Rational(1)});
    }
  }
  const Rational resources(static_cast<long long>(matrix.resource_count()));
  for (std::size_t n = 0; n < matrix.asset_count(); ++n) {
    Rational row_sum;
    for (std::size_t m = 0; m < matrix.resource_count(); ++m) {
      row_sum += matrix.at(n, m);
    }
    Rational row_mean = row_sum / resources;
    if (row_mean != defense[n]) {
      verdict.violations.push_back(
          {AllocationViolation::Kind::RowMean, n, npos, row_mean, defense[n]});
    }
  }

  verdict.valid = verdict.violations.empty();
  return verdict;
}

void write_allocation(const AllocationMatrix& matrix, std::ostream& out) {
  out << "asset";
  for (std::size_t m = 0; m < matrix.resource_count(); ++m) {
    out << ",s" << (m + 1);
  }
  out << ",row_mean\n";
  const Rational resources(static_cast<long long>(matrix.resource_count()));
  for (std::size_t n = 0; n < matrix.asset_count(); ++n) {
    out << (n + 1);
    Rational row_sum;
    for (std::size_t m = 0; m < matrix.resource_count(); ++m) {
      out << ',' << matrix.at(n, m).str();
      row_sum += matrix.at(n, m);
    }
    out << ',' << (row_sum / resources).str() << '\n';
  }
}

}  // namespace stackgame
