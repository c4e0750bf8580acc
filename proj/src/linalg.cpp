#include "operad/linalg.hpp"

#include <algorithm>
#include <string>

#include "operad/error.hpp"

namespace operad {

SparseVector to_sparse(const DenseVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  return out;
}

DenseVector to_dense(const SparseVector& v, std::size_t ambient) {
  DenseVector out(ambient);
  for (const auto& e : v) out.at(e.col) = e.value;
  return out;
}

RowMatrix::RowMatrix(std::size_t ambient, const std::vector<DenseVector>& rows) : ambient_(ambient) {
  for (const auto& r : rows) add_row(r);
}

void RowMatrix::add_row(const DenseVector& row) {
  if (row.size() != ambient_)
    throw ShapeError("row of length " + std::to_string(row.size()) + " in matrix of ambient dimension " +
                     std::to_string(ambient_));
  rows_.push_back(to_sparse(row));
}

void RowMatrix::add_sparse_row(SparseVector row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].col >= ambient_ || row[k].value.is_zero() || (k > 0 && row[k - 1].col >= row[k].col))
      throw ShapeError("malformed sparse row for ambient dimension " + std::to_string(ambient_));
  }
  rows_.push_back(std::move(row));
}

namespace {

// Sorts contributions by column and sums duplicates, dropping zeros.
SparseVector combine(std::vector<SparseEntry>& parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseVector out;
  for (auto& p : parts) {
    if (!out.empty() && out.back().col == p.col) {
      out.back().value += p.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else if (!p.value.is_zero()) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

const Rational* find_entry(const SparseVector& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return (it != v.end() && it->col == col) ? &it->value : nullptr;
}

}  // namespace

EchelonBasis::EchelonBasis(std::size_t ambient)
    : ambient_(ambient), pivot_row_(ambient, -1), occurrences_(ambient) {}

void EchelonBasis::check_columns(const SparseVector& v) const {
  if (!v.empty() && v.back().col >= ambient_)
    throw ShapeError("vector entry at column " + std::to_string(v.back().col) + " exceeds ambient dimension " +
                     std::to_string(ambient_));
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
  check_columns(v);
  std::vector<SparseEntry> parts;
  parts.reserve(v.size() * 4);
  for (const auto& e : v) {
    int r = pivot_row_[e.col];
    if (r < 0) {
      parts.push_back(e);
      continue;
    }
    // row r = e_col + (non-pivot tail); subtracting e.value * row r kills e.col.
    for (const auto& t : rows_[r])
      if (t.col != e.col) parts.push_back({t.col, -(e.value * t.value)});
  }
  return combine(parts);
}

bool EchelonBasis::insert(const SparseVector& row) {
  SparseVector r = reduce(row);
  if (r.empty()) return false;
  const std::size_t pivot = r.front().col;
  const Rational scale = Rational(1) / r.front().value;
  for (auto& e : r) e.value *= scale;

  const int new_index = static_cast<int>(rows_.size());
  // Eliminate the new pivot column from every row that carries it.
  std::vector<int> touched;
  std::swap(touched, occurrences_[pivot]);
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (int idx : touched) {
    SparseVector& target = rows_[idx];
    const Rational* coeff = find_entry(target, pivot);
    if (!coeff) continue;
    const Rational factor = *coeff;
    std::vector<SparseEntry> parts(target.begin(), target.end());
    for (const auto& e : r) parts.push_back({e.col, -(factor * e.value)});
    SparseVector updated = combine(parts);
    for (const auto& e : updated)
      if (!find_entry(target, e.col)) occurrences_[e.col].push_back(idx);
    target = std::move(updated);
  }
  for (const auto& e : r)
    if (e.col != pivot) occurrences_[e.col].push_back(new_index);
  pivot_row_[pivot] = new_index;
  rows_.push_back(std::move(r));
  return true;
}

std::size_t EchelonBasis::insert_batch(std::span<const SparseVector> batch) {
  std::vector<SparseVector> reduced(batch.size());
  const long count = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < count; ++i) reduced[i] = reduce(batch[i]);
  std::size_t added = 0;
  for (const auto& r : reduced)
    if (!r.empty() && insert(r)) ++added;
  return added;
}

std::size_t rank(const RowMatrix& m) {
  constexpr std::size_t kBatch = 4096;
  EchelonBasis basis(m.ambient());
  const auto& rows = m.sparse_rows();
  for (std::size_t start = 0; start < rows.size(); start += kBatch) {
    const std::size_t len = std::min(kBatch, rows.size() - start);
    basis.insert_batch(std::span(rows).subspan(start, len));
    if (basis.rank() == m.ambient()) break;
  }
  return basis.rank();
}

std::size_t rank_reference(const RowMatrix& m) {
  std::vector<DenseVector> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(m.row(i));
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.ambient() && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][col].is_zero()) continue;
      const Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < m.ambient(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

bool in_span(const DenseVector& v, const RowMatrix& m) {
  if (v.size() != m.ambient())
    throw ShapeError("dimension mismatch: vector has length " + std::to_string(v.size()) +
                     ", matrix ambient dimension is " + std::to_string(m.ambient()));
  EchelonBasis basis(m.ambient());
  for (const auto& r : m.sparse_rows()) basis.insert(r);
  return basis.contains(to_sparse(v));
}

}  // namespace operad
