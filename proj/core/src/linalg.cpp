#include "homlab/linalg.hpp"

#include <algorithm>
#include <cstring>

namespace homlab {

namespace {

// dst[j] += coef * src[j]; delayed reduction, caller guarantees headroom
inline void axpy(std::uint64_t* __restrict dst, const std::uint32_t* __restrict src,
                 std::uint64_t coef, std::size_t from, std::size_t n) {
  for (std::size_t j = from; j < n; ++j) dst[j] += coef * src[j];
}

}  // namespace

DenseMatrix::DenseMatrix(PrimeField f, std::size_t rows, std::size_t cols,
                         std::initializer_list<std::uint32_t> entries)
    : DenseMatrix(f, rows, cols) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("DenseMatrix: entry count does not match shape");
  std::size_t i = 0;
  for (auto v : entries) a_[i++] = f.reduce(v);
}

DenseMatrix DenseMatrix::identity(PrimeField f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

// ---------------------------------------------------------------------------
// RowReducer

RowReducer::RowReducer(PrimeField f, std::size_t cols)
    : field_(f), cols_(cols), slot_(cols, -1) {}

bool RowReducer::insert_scratch(std::vector<std::uint64_t>& s) {
  const std::uint64_t p = field_.p();
  for (std::size_t c = 0; c < cols_; ++c) {
    std::uint64_t val = s[c] % p;
    if (!val) continue;
    std::int32_t slot = slot_[c];
    if (slot >= 0) {
      axpy(s.data(), store_[slot].data(), p - val, c, cols_);
      continue;
    }
    // new pivot at column c: normalize remainder and store
    std::vector<FieldElement> row(cols_, 0);
    const std::uint64_t inv = field_.inv(static_cast<FieldElement>(val));
    for (std::size_t j = c; j < cols_; ++j) {
      std::uint64_t rj = s[j] % p;
      row[j] = static_cast<FieldElement>(rj * inv % p);
    }
    row[c] = 1;
    slot_[c] = static_cast<std::int32_t>(store_.size());
    auto pos = std::lower_bound(order_.begin(), order_.end(), c,
                                [&](std::uint32_t idx, std::size_t col) {
                                  return pivot_of_unchecked(idx) < col;
                                });
    order_.insert(pos, static_cast<std::uint32_t>(store_.size()));
    pivots_.push_back(static_cast<std::uint32_t>(c));
    store_.push_back(std::move(row));
    return true;
  }
  return false;
}

bool RowReducer::insert(std::span<const FieldElement> v) {
  if (v.size() != cols_) throw std::invalid_argument("RowReducer: row length mismatch");
  std::vector<std::uint64_t> s(v.begin(), v.end());
  return insert_scratch(s);
}

void RowReducer::preload(std::vector<FieldElement> row, std::size_t pivot) {
  slot_[pivot] = static_cast<std::int32_t>(store_.size());
  order_.push_back(static_cast<std::uint32_t>(store_.size()));
  pivots_.push_back(static_cast<std::uint32_t>(pivot));
  store_.push_back(std::move(row));
}

bool RowReducer::reduces_to_zero(std::span<const FieldElement> v) const {
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> s(v.begin(), v.end());
  for (std::size_t c = 0; c < cols_; ++c) {
    std::uint64_t val = s[c] % p;
    if (!val) continue;
    std::int32_t slot = slot_[c];
    if (slot < 0) return false;
    axpy(s.data(), store_[slot].data(), p - val, c, cols_);
  }
  return true;
}

std::vector<std::span<const FieldElement>> RowReducer::rows() const {
  std::vector<std::span<const FieldElement>> out;
  out.reserve(order_.size());
  for (auto idx : order_) out.emplace_back(store_[idx].data(), cols_);
  return out;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(order_.size());
  for (auto idx : order_) out.push_back(pivots_[idx]);
  return out;
}

Subspace RowReducer::to_subspace() const {
  const std::uint64_t p = field_.p();
  const std::size_t r = order_.size();
  // back-substitute from the last pivot upward
  std::vector<std::vector<FieldElement>> fin(r);
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = pivot_of_unchecked(order_[i]);
  for (std::size_t ii = r; ii-- > 0;) {
    std::vector<std::uint64_t> s(store_[order_[ii]].begin(), store_[order_[ii]].end());
    for (std::size_t j = ii + 1; j < r; ++j) {
      std::uint64_t c = s[piv[j]] % p;
      if (c) axpy(s.data(), fin[j].data(), p - c, piv[j], cols_);
    }
    fin[ii].resize(cols_);
    for (std::size_t k = 0; k < cols_; ++k) fin[ii][k] = static_cast<FieldElement>(s[k] % p);
  }
  DenseMatrix b(field_, r, cols_);
  for (std::size_t i = 0; i < r; ++i)
    std::copy(fin[i].begin(), fin[i].end(), b.row(i).begin());
  return Subspace::from_canonical(cols_, std::move(b));
}

// ---------------------------------------------------------------------------
// rref / rank / kernel

DenseMatrix rref(const DenseMatrix& m) {
  RowReducer red(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  return red.to_subspace().basis();
}

std::size_t rank(const DenseMatrix& m) {
  RowReducer red(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.insert(m.row(r));
  return red.rank();
}

Subspace kernel_basis(const DenseMatrix& m) {
  const PrimeField& f = m.field();
  DenseMatrix r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivots(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < n && r.at(i, c) == 0) ++c;
    pivots[i] = c;
    is_pivot[c] = true;
  }
  DenseMatrix k(f, n - r.rows(), n);
  std::size_t out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    k.at(out, c) = 1;
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (pivots[i] < c) k.at(out, pivots[i]) = f.neg(r.at(i, c));
    ++out;
  }
  return Subspace(n, k);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, const DenseMatrix& vectors)
    : ambient_(ambient_dim), basis_(rref(vectors)) {
  if (vectors.cols() != ambient_dim)
    throw std::invalid_argument("Subspace: vector length does not match ambient dimension");
}

Subspace Subspace::zero(PrimeField f, std::size_t ambient_dim) {
  return from_canonical(ambient_dim, DenseMatrix(f, 0, ambient_dim));
}

Subspace Subspace::full(PrimeField f, std::size_t ambient_dim) {
  return from_canonical(ambient_dim, DenseMatrix::identity(f, ambient_dim));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  RowReducer red(a.field(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) red.insert(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) red.insert(b.basis().row(i));
  return red.to_subspace();
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_intersect: ambient dimension mismatch");
  Subspace ca = kernel_basis(a.basis());
  Subspace cb = kernel_basis(b.basis());
  DenseMatrix checks(a.field(), ca.dim() + cb.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < ca.dim(); ++i)
    std::copy(ca.basis().row(i).begin(), ca.basis().row(i).end(), checks.row(i).begin());
  for (std::size_t i = 0; i < cb.dim(); ++i)
    std::copy(cb.basis().row(i).begin(), cb.basis().row(i).end(),
              checks.row(ca.dim() + i).begin());
  return kernel_basis(checks);
}

bool contains(const Subspace& a, std::span<const FieldElement> v) {
  if (v.size() != a.ambient_dim())
    throw std::invalid_argument("contains: vector length mismatch");
  RowReducer red(a.field(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) red.insert(a.basis().row(i));
  return red.reduces_to_zero(v);
}

bool contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("contains: ambient dimension mismatch");
  RowReducer red(a.field(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) red.insert(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!red.reduces_to_zero(b.basis().row(i))) return false;
  return true;
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (!contains(a, b)) throw std::invalid_argument("quotient_dim: b is not contained in a");
  return a.dim() - b.dim();
}

}  // namespace homlab
