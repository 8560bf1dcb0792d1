// Compressed sparse row backing for the same matrix operations. No explicit
// zeros are stored, and accumulation orders mirror the dense routines so
// results agree with the dense route entry for entry.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "sieveforge/matrix.hpp"
#include "sieveforge/scalars.hpp"

namespace sieveforge {

template <typename S>
struct Triplet {
  int row = 0;
  int col = 0;
  S value{};
};

template <typename S>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(int n) : n_(n), row_ptr_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
  }

  static SparseMatrix from_triplets(int n, std::vector<Triplet<S>> ts) {
    for (const auto& t : ts)
      if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
        throw std::invalid_argument("triplet index out of range");
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    SparseMatrix m(n);
    for (std::size_t i = 0; i < ts.size();) {
      std::size_t j = i;
      S sum = ts[i].value;
      for (++j; j < ts.size() && ts[j].row == ts[i].row && ts[j].col == ts[i].col; ++j)
        sum = sum + ts[j].value;
      if (!is_zero(sum)) {
        m.col_.push_back(ts[i].col);
        m.val_.push_back(std::move(sum));
        ++m.row_ptr_[ts[i].row + 1];
      }
      i = j;
    }
    for (int r = 0; r < n; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
    return m;
  }

  static SparseMatrix from_dense(const Matrix<S>& d) {
    SparseMatrix m(d.n());
    for (int i = 0; i < d.n(); ++i) {
      for (int j = 0; j < d.n(); ++j)
        if (!is_zero(d(i, j))) {
          m.col_.push_back(j);
          m.val_.push_back(d(i, j));
        }
      m.row_ptr_[i + 1] = static_cast<int>(m.col_.size());
    }
    return m;
  }

  Matrix<S> to_dense() const {
    Matrix<S> d(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) d(i, col_[k]) = val_[k];
    return d;
  }

  int n() const { return n_; }
  int nnz() const { return static_cast<int>(col_.size()); }

  template <typename F>
  void for_row(int i, F&& fn) const {  // fn(col, value), ascending col
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) fn(col_[k], val_[k]);
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.n_ == b.n_ && a.row_ptr_ == b.row_ptr_ && a.col_ == b.col_ &&
           a.val_ == b.val_;
  }

 private:
  int n_ = 0;
  std::vector<int> row_ptr_;
  std::vector<int> col_;
  std::vector<S> val_;
};

namespace detail {

// Dense scratch row used to build one output row at a time.
template <typename S>
class ScratchRow {
 public:
  explicit ScratchRow(int n) : vals_(n), used_(n, 0) {}

  void accumulate(int j, const S& x) {
    if (!used_[j]) {
      used_[j] = 1;
      touched_.push_back(j);
      vals_[j] = x;
    } else {
      vals_[j] += x;
    }
  }

  template <typename Out>
  void harvest(Out&& out) {  // emits ascending columns, skips exact zeros
    std::sort(touched_.begin(), touched_.end());
    for (int j : touched_) {
      if (!is_zero(vals_[j])) out(j, vals_[j]);
      used_[j] = 0;
      vals_[j] = S{};
    }
    touched_.clear();
  }

 private:
  std::vector<S> vals_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

}  // namespace detail

template <typename S>
SparseMatrix<S> add(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
  std::vector<Triplet<S>> out;
  for (int i = 0; i < a.n(); ++i) {
    a.for_row(i, [&](int j, const S& v) { out.push_back({i, j, v}); });
    b.for_row(i, [&](int j, const S& v) { out.push_back({i, j, v}); });
  }
  return SparseMatrix<S>::from_triplets(a.n(), std::move(out));
}

template <typename S>
SparseMatrix<S> mul(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
  std::vector<Triplet<S>> out;
  detail::ScratchRow<S> row(a.n());
  for (int i = 0; i < a.n(); ++i) {
    a.for_row(i, [&](int k, const S& aik) {
      b.for_row(k, [&](int j, const S& bkj) { row.accumulate(j, aik * bkj); });
    });
    row.harvest([&](int j, const S& v) { out.push_back({i, j, v}); });
  }
  return SparseMatrix<S>::from_triplets(a.n(), std::move(out));
}

template <typename S>
SparseMatrix<S> hadamard(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
  Matrix<S> bd = b.to_dense();
  std::vector<Triplet<S>> out;
  for (int i = 0; i < a.n(); ++i)
    a.for_row(i, [&](int j, const S& v) { out.push_back({i, j, v * bd(i, j)}); });
  return SparseMatrix<S>::from_triplets(a.n(), std::move(out));
}

// Same accumulation order as the dense circ: pointwise a + b first, then
// product terms by ascending inner index.
template <typename S>
SparseMatrix<S> circ(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix size mismatch");
  std::vector<Triplet<S>> out;
  detail::ScratchRow<S> row(a.n());
  for (int i = 0; i < a.n(); ++i) {
    a.for_row(i, [&](int j, const S& v) { row.accumulate(j, v); });
    b.for_row(i, [&](int j, const S& v) { row.accumulate(j, v); });
    a.for_row(i, [&](int k, const S& aik) {
      b.for_row(k, [&](int j, const S& bkj) { row.accumulate(j, aik * bkj); });
    });
    row.harvest([&](int j, const S& v) { out.push_back({i, j, v}); });
  }
  return SparseMatrix<S>::from_triplets(a.n(), std::move(out));
}

template <typename S>
SparseMatrix<S> transpose(const SparseMatrix<S>& a) {
  std::vector<Triplet<S>> out;
  for (int i = 0; i < a.n(); ++i)
    a.for_row(i, [&](int j, const S& v) { out.push_back({j, i, v}); });
  return SparseMatrix<S>::from_triplets(a.n(), std::move(out));
}

template <typename S>
SparseMatrix<S> change_of_order(const SparseMatrix<S>& m, const Permutation& p) {
  if (p.size() != m.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Triplet<S>> out;
  for (int i = 0; i < m.n(); ++i)
    m.for_row(i, [&](int j, const S& v) { out.push_back({p(i), p(j), v}); });
  return SparseMatrix<S>::from_triplets(m.n(), std::move(out));
}

}  // namespace sieveforge
