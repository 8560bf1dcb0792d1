// Dense square matrices over a scalar kind, with the path-composition
// operation circ(A, B) = A + B + A*B. Under circ the n x n matrices form a
// monoid whose identity is the zero matrix.
//
// Floating point results are reproducible: every accumulated entry is built
// in one fixed order (pointwise sums first, then product terms by ascending
// inner index).
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "sieveforge/permutation.hpp"
#include "sieveforge/scalars.hpp"

namespace sieveforge {

template <typename S>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
  }

  static Matrix zero(int n) { return Matrix(n); }

  static Matrix from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    Matrix m(static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.n_)
        throw std::invalid_argument("ragged matrix literal");
      int j = 0;
      for (const auto& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  int n() const { return n_; }

  S& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const S& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  bool zero() const {
    for (const S& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int n_ = 0;
  std::vector<S> e_;
};

namespace detail {
inline void require_same_size(int a, int b) {
  if (a != b) throw std::invalid_argument("matrix size mismatch");
}
}  // namespace detail

template <typename S>
Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_size(a.n(), b.n());
  Matrix<S> c(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <typename S>
Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_size(a.n(), b.n());
  const int n = a.n();
  Matrix<S> c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const S& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < n; ++j) {
        const S& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        c(i, j) += aik * bkj;
      }
    }
  return c;
}

template <typename S>
Matrix<S> hadamard(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_size(a.n(), b.n());
  Matrix<S> c(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

template <typename S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) t(j, i) = a(i, j);
  return t;
}

// circ(A, B) = A + B + A*B, fused so each entry is a(i,j) + b(i,j) followed
// by product terms in ascending k.
template <typename S>
Matrix<S> circ(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_size(a.n(), b.n());
  const int n = a.n();
  Matrix<S> c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = a(i, j) + b(i, j);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const S& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < n; ++j) {
        const S& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        c(i, j) += aik * bkj;
      }
    }
  return c;
}

template <typename S>
Matrix<S> circ_fold(const std::vector<Matrix<S>>& ms) {
  if (ms.empty()) throw std::invalid_argument("empty circ fold");
  Matrix<S> out = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) out = circ(out, ms[i]);
  return out;
}

// Expanded form of a k-fold circ: the sum, over every nonempty strictly
// increasing index subsequence, of the product of the selected matrices in
// order. Equal to circ_fold; kept as an independent route for cross-checks.
template <typename S>
Matrix<S> circ_expansion(const std::vector<Matrix<S>>& ms) {
  if (ms.empty()) throw std::invalid_argument("empty circ expansion");
  if (ms.size() > 24) throw std::invalid_argument("circ expansion too wide");
  const int n = ms.front().n();
  for (const auto& m : ms) detail::require_same_size(n, m.n());
  Matrix<S> out(n);
  const unsigned k = static_cast<unsigned>(ms.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Matrix<S> prod;
    bool first = true;
    for (unsigned i = 0; i < k; ++i) {
      if (!(mask & (1u << i))) continue;
      if (first) {
        prod = ms[i];
        first = false;
      } else {
        prod = mul(prod, ms[i]);
      }
    }
    out = add(out, prod);
  }
  return out;
}

// Relabeling action: entry (i, j) moves to (p(i), p(j)).
template <typename S>
Matrix<S> change_of_order(const Matrix<S>& m, const Permutation& p) {
  if (p.size() != m.n()) throw std::invalid_argument("permutation size mismatch");
  Matrix<S> out(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out(p(i), p(j)) = m(i, j);
  return out;
}

}  // namespace sieveforge
