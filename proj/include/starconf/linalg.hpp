#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "starconf/field.hpp"

namespace starconf {

/// Row-major dense matrix over an exact field.
template <ExactField F>
class DenseMatrix {
 public:
  using Element = typename F::Element;

  DenseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(F field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<Element> column(std::size_t j) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    DenseMatrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  /// Rows and columns picked by index lists.
  DenseMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    DenseMatrix b(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) b(i, j) = (*this)(row_idx[i], col_idx[j]);
    return b;
  }

  std::vector<Element> apply(std::span<const Element> x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: vector length does not match column count");
    std::vector<Element> y;
    y.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y.push_back(field_.dot(row(i), x));
    return y;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    DenseMatrix c(a.field_, a.rows_, b.cols_);
    const DenseMatrix bt = b.transpose();
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = a.field_.dot(a.row(i), bt.row(j));
    return c;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

namespace detail {

/// In-place reduced row echelon form. Pivots are taken as the first nonzero
/// entry in column order, so the result is fully deterministic.
/// Returns the pivot columns; only the first `ncols_to_pivot` columns may pivot.
template <ExactField F>
std::vector<std::size_t> rref_in_place(DenseMatrix<F>& m, std::size_t ncols_to_pivot) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols_to_pivot && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const auto inv = f.inv(m(r, c));
    for (auto& x : m.row(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      f.axpy(m.row(i), f.neg(m(i, c)), m.row(r));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Integer matrix with each rational row scaled by the lcm of its denominators.
/// Returns the product of the scale factors alongside.
std::pair<std::vector<std::vector<mpz_class>>, mpz_class> integer_rows(const DenseMatrix<RationalField>& m);

/// Fraction-free (Bareiss) elimination. Returns the rank; when the input is
/// square and nonsingular, `det_out` receives the determinant.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, mpz_class* det_out);

}  // namespace detail

/// Exact rank. Over Q this runs fraction-free elimination on an integer copy.
template <ExactField F>
std::size_t rank(const DenseMatrix<F>& m) {
  if constexpr (std::is_same_v<F, RationalField>) {
    auto [rows, scale] = detail::integer_rows(m);
    return detail::bareiss(rows, nullptr);
  } else {
    DenseMatrix<F> work = m;
    return detail::rref_in_place(work, work.cols()).size();
  }
}

template <ExactField F>
typename F::Element det(const DenseMatrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const F& f = m.field();
  if (m.rows() == 0) return f.one();
  if constexpr (std::is_same_v<F, RationalField>) {
    auto [rows, scale] = detail::integer_rows(m);
    mpz_class d = 0;
    if (detail::bareiss(rows, &d) < m.rows()) return f.zero();
    mpq_class out(d, scale);
    out.canonicalize();
    return out;
  } else {
    DenseMatrix<F> a = m;
    auto d = f.one();
    for (std::size_t c = 0; c < a.rows(); ++c) {
      std::size_t p = c;
      while (p < a.rows() && f.is_zero(a(p, c))) ++p;
      if (p == a.rows()) return f.zero();
      if (p != c) {
        a.swap_rows(p, c);
        d = f.neg(d);
      }
      d = f.mul(d, a(c, c));
      const auto inv = f.inv(a(c, c));
      for (std::size_t i = c + 1; i < a.rows(); ++i) {
        if (f.is_zero(a(i, c))) continue;
        f.axpy(a.row(i), f.neg(f.mul(a(i, c), inv)), a.row(c));
      }
    }
    return d;
  }
}

/// Some exact solution of m x = rhs with every free variable set to zero,
/// or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<std::vector<typename F::Element>> solve(const DenseMatrix<F>& m,
                                                      std::span<const typename F::Element> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length does not match row count");
  const F& f = m.field();
  DenseMatrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto pivots = detail::rref_in_place(aug, m.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
    if (!f.is_zero(aug(i, m.cols()))) return std::nullopt;
  }
  std::vector<typename F::Element> x(m.cols(), f.zero());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

/// Basis of {x : m x = 0}, one vector per free column (that entry set to 1).
template <ExactField F>
std::vector<std::vector<typename F::Element>> nullspace(const DenseMatrix<F>& m) {
  const F& f = m.field();
  DenseMatrix<F> work = m;
  const auto pivots = detail::rref_in_place(work, work.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(work(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// The r x r matrix with zero diagonal and ones elsewhere.
template <ExactField F>
DenseMatrix<F> a_matrix(const F& field, int r) {
  if (r < 2) throw std::invalid_argument("a_matrix: r must be >= 2");
  const auto n = static_cast<std::size_t>(r);
  DenseMatrix<F> a(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = i == j ? field.zero() : field.one();
  return a;
}

/// Incrementally maintained reduced echelon basis of a column space in F^dim.
///
/// Basis vectors b_k carry a 1 at their pivot row and 0 at every other pivot
/// row, so a new vector v decomposes with coefficients c_k = v[pivot_k] and only
/// the residual on non-pivot rows has to be formed: (dim - rank) * rank work per
/// vector instead of dim * rank.
template <ExactField F>
class RankAccumulator {
 public:
  using Element = typename F::Element;

  RankAccumulator(F field, std::size_t dim)
      : field_(std::move(field)), dim_(dim), coeffs_(dim), is_pivot_(dim, false) {
    free_rows_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) free_rows_.push_back(i);
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return pivot_rows_.size(); }
  bool full() const { return rank() == dim_; }

  /// Adds v to the spanning set; returns true iff it raised the rank.
  bool insert(std::span<const Element> v) {
    if (v.size() != dim_) throw std::invalid_argument("RankAccumulator: vector length mismatch");
    if (full()) return false;
    const std::size_t k = rank();
    std::vector<Element> c(k, field_.zero());
    for (std::size_t j = 0; j < k; ++j) c[j] = v[pivot_rows_[j]];

    // residual on free rows: w_i = v_i - sum_j c_j b_j[i]
    std::vector<Element> w(free_rows_.size(), field_.zero());
    std::size_t lead = free_rows_.size();
    for (std::size_t t = 0; t < free_rows_.size(); ++t) {
      const std::size_t i = free_rows_[t];
      w[t] = field_.sub(v[i], field_.dot(std::span<const Element>(coeffs_[i]), std::span<const Element>(c)));
      if (lead == free_rows_.size() && !field_.is_zero(w[t])) lead = t;
    }
    if (lead == free_rows_.size()) return false;

    const std::size_t new_pivot = free_rows_[lead];
    const Element inv = field_.inv(w[lead]);
    const std::vector<Element> pivot_coeffs = coeffs_[new_pivot];
    for (std::size_t t = 0; t < free_rows_.size(); ++t) {
      if (t == lead) continue;
      const std::size_t i = free_rows_[t];
      const Element b_new = field_.mul(w[t], inv);
      // old b_j -= b_j[new_pivot] * b_new
      field_.axpy(std::span<Element>(coeffs_[i]), field_.neg(b_new), std::span<const Element>(pivot_coeffs));
      coeffs_[i].push_back(b_new);
    }
    coeffs_[new_pivot].clear();
    coeffs_[new_pivot].shrink_to_fit();
    is_pivot_[new_pivot] = true;
    free_rows_.erase(free_rows_.begin() + static_cast<std::ptrdiff_t>(lead));
    pivot_rows_.push_back(new_pivot);
    return true;
  }

 private:
  F field_;
  std::size_t dim_;
  // coeffs_[i][j] = b_j[i] for free rows i
  std::vector<std::vector<Element>> coeffs_;
  std::vector<bool> is_pivot_;
  std::vector<std::size_t> free_rows_;
  std::vector<std::size_t> pivot_rows_;
};

/// rank via RankAccumulator over the columns; stops once the rank reaches `ceiling`.
template <ExactField F>
std::size_t column_rank(const DenseMatrix<F>& m, std::size_t ceiling) {
  RankAccumulator<F> acc(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols() && acc.rank() < ceiling && !acc.full(); ++j) acc.insert(m.column(j));
  return acc.rank();
}

}  // namespace starconf
