#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "operad/rational.hpp"

namespace operad {

using DenseVector = std::vector<Rational>;

struct SparseEntry {
  std::size_t col;
  Rational value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by column, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(const DenseVector& v);
DenseVector to_dense(const SparseVector& v, std::size_t ambient);

/// Rows of equal length (the ambient dimension). Dense by contract, sparse inside.
class RowMatrix {
 public:
  explicit RowMatrix(std::size_t ambient) : ambient_(ambient) {}
  RowMatrix(std::size_t ambient, const std::vector<DenseVector>& rows);

  void add_row(const DenseVector& row);
  /// Entries must be sorted, nonzero and below ambient().
  void add_sparse_row(SparseVector row);

  std::size_t ambient() const { return ambient_; }
  std::size_t rows() const { return rows_.size(); }
  DenseVector row(std::size_t i) const { return to_dense(rows_.at(i), ambient_); }
  const std::vector<SparseVector>& sparse_rows() const { return rows_; }

 private:
  std::size_t ambient_;
  std::vector<SparseVector> rows_;
};

/// Incrementally maintained reduced row echelon form of a row span.
///
/// Every stored row has a pivot entry equal to 1 and no entries in any other
/// pivot column, so reducing a vector is a single pass over its entries.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row enlarged the span.
  bool insert(const SparseVector& row);

  /// Reduces the whole batch against the current basis in parallel, then
  /// inserts the survivors in batch order. Returns the number of new pivots.
  std::size_t insert_batch(std::span<const SparseVector> batch);

  /// Remainder of `v` after elimination against the basis; empty iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  const std::vector<SparseVector>& rows() const { return rows_; }

 private:
  void check_columns(const SparseVector& v) const;

  std::size_t ambient_;
  std::vector<SparseVector> rows_;
  std::vector<int> pivot_row_;               // column -> row index, or -1
  std::vector<std::vector<int>> occurrences_;  // non-pivot column -> rows that may contain it
};

/// Dimension of the row span, via EchelonBasis with batched parallel reduction.
std::size_t rank(const RowMatrix& m);

/// Serial dense Gaussian elimination. Column-by-column pivot search with row
/// swaps; kept as the independent reference for rank().
std::size_t rank_reference(const RowMatrix& m);

/// True iff v lies in the row span of m. Throws ShapeError on length mismatch.
bool in_span(const DenseVector& v, const RowMatrix& m);

}  // namespace operad
