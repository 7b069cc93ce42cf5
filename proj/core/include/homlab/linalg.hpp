#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "homlab/field.hpp"

namespace homlab {

/// Dense row-major matrix over GF(p).
class DenseMatrix {
 public:
  DenseMatrix(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  DenseMatrix(PrimeField f, std::size_t rows, std::size_t cols,
              std::initializer_list<std::uint32_t> entries);

  static DenseMatrix identity(PrimeField f, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }
  std::span<FieldElement> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

  DenseMatrix transpose() const;

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

/// Reduced row echelon form (unique); zero rows are dropped, so the result
/// has rank(m) rows (a 0 x cols matrix for the zero map).
DenseMatrix rref(const DenseMatrix& m);
std::size_t rank(const DenseMatrix& m);

/// A linear subspace of GF(p)^ambient, stored as its unique RREF basis so
/// that equal spaces have equal representations.
class Subspace {
 public:
  /// Spans the rows of `vectors` (canonicalized on construction).
  Subspace(std::size_t ambient_dim, const DenseMatrix& vectors);
  static Subspace zero(PrimeField f, std::size_t ambient_dim);
  static Subspace full(PrimeField f, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const DenseMatrix& basis() const { return basis_; }
  const PrimeField& field() const { return basis_.field(); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  /// Wraps a matrix that is already in reduced row echelon form without
  /// re-canonicalizing it. Internal fast path; the caller vouches for RREF.
  static Subspace from_canonical(std::size_t ambient_dim, DenseMatrix basis) {
    return Subspace(basis, ambient_dim);
  }

 private:
  Subspace(DenseMatrix basis, std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(std::move(basis)) {}

  std::size_t ambient_;
  DenseMatrix basis_;  // RREF, no zero rows
};

/// Right kernel {v : m v^T = 0}; dim = cols - rank.
Subspace kernel_basis(const DenseMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const FieldElement> v);
bool contains(const Subspace& a, const Subspace& b);
/// dim(a) - dim(b); throws unless b is a subspace of a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Incremental Gaussian elimination: rows are kept forward-reduced with
/// strictly increasing pivots and unit leading entries. Insertion uses a
/// 64-bit scratch row with delayed reduction (sums stay below 2^64 for any
/// realistic row count), which keeps the inner loop to one mul + add.
class RowReducer {
 public:
  RowReducer(PrimeField f, std::size_t cols);

  /// Reduce `v` against the current rows; if a nonzero remainder is left it
  /// joins the basis. Returns true exactly when the rank grew.
  bool insert(std::span<const FieldElement> v);
  /// Same, for a row already held in the 64-bit scratch format.
  bool insert_scratch(std::vector<std::uint64_t>& scratch);

  /// Preload a row known to have a pivot not yet present and to be reduced
  /// against the existing rows (used for echelon-preserving index remaps).
  void preload(std::vector<FieldElement> row, std::size_t pivot);

  bool reduces_to_zero(std::span<const FieldElement> v) const;

  std::size_t rank() const { return order_.size(); }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  /// Rows sorted by pivot column (forward-reduced, not back-substituted).
  std::vector<std::span<const FieldElement>> rows() const;
  /// Pivot columns in increasing order, parallel to rows().
  std::vector<std::size_t> pivot_columns() const;
  /// Canonical subspace spanned by the rows.
  Subspace to_subspace() const;

 private:
  std::size_t pivot_of_unchecked(std::uint32_t idx) const { return pivots_[idx]; }

  PrimeField field_;
  std::size_t cols_;
  std::vector<std::vector<FieldElement>> store_;  // one reduced row each
  std::vector<std::uint32_t> pivots_;             // pivot column of each stored row
  std::vector<std::int32_t> slot_;                // pivot column -> index into store_, -1 if none
  std::vector<std::uint32_t> order_;              // store_ indices sorted by pivot
};

}  // namespace homlab
