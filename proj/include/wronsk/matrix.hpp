#ifndef WRONSK_MATRIX_HPP
#define WRONSK_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/ratfunc.hpp"

namespace wronsk {

/// Dense row-major matrix over Q(z).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<RatFunc> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match rows*cols");
  }
  RatMatrix(std::initializer_list<std::initializer_list<RatFunc>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }
  static RatMatrix from_rows(const std::vector<std::vector<RatFunc>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    std::vector<RatFunc> e;
    for (const auto& r : rows) {
      if (r.size() != c) throw DimensionError("ragged matrix rows");
      e.insert(e.end(), r.begin(), r.end());
    }
    return RatMatrix(rows.size(), c, std::move(e));
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1L);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<RatFunc>& entries() const noexcept { return entries_; }

  RatFunc& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RatFunc& e) { return e.is_zero(); });
  }
  bool is_constant() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const RatFunc& e) { return e.is_constant(); });
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Entrywise d/dz.
  RatMatrix derivative() const { return map([](const RatFunc& e) { return e.derivative(); }); }

  /// Entrywise substitution z -> inner(z).
  RatMatrix compose(const RatFunc& inner) const {
    return map([&](const RatFunc& e) { return e.compose(inner); });
  }

  template <typename F>
  RatMatrix map(F&& f) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = f(entries_[k]);
    return r;
  }

  RatFunc trace() const {
    require_square("trace");
    RatFunc t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const RatFunc& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }
  friend RatMatrix operator*(const RatFunc& s, const RatMatrix& m) {
    return m.map([&](const RatFunc& e) { return s * e; });
  }
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) { return a.zip(b, [](auto& x, auto& y) { return x + y; }); }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a.zip(b, [](auto& x, auto& y) { return x - y; }); }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Rows of canonical entries, columns padded to a common width.
  std::string to_string(char var = 'z') const {
    std::vector<std::string> cells(entries_.size());
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        cells[i * cols_ + j] = (*this)(i, j).to_string(var);
        width[j] = std::max(width[j], cells[i * cols_ + j].size());
      }
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[ ";
      for (std::size_t j = 0; j < cols_; ++j) {
        const std::string& c = cells[i * cols_ + j];
        out += c + std::string(width[j] - c.size(), ' ');
        out += j + 1 < cols_ ? "  " : " ";
      }
      out += "]\n";
    }
    return out;
  }

  void require_square(const char* what) const {
    if (!is_square()) throw DimensionError(std::string(what) + " requires a square matrix");
  }

 private:
  template <typename F>
  RatMatrix zip(const RatMatrix& b, F&& f) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = f(entries_[k], b.entries_[k]);
    return r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << "\n" << m.to_string(); }

namespace detail {

using PolyRows = std::vector<std::vector<Poly>>;

inline Poly lcm(const Poly& a, const Poly& b) { return (a * b).exact_div(gcd(a, b)).monic(); }

/// Multiplies each row of [m | extra] by the lcm of its denominators, giving a
/// polynomial matrix. Returns the scale factor of each row.
inline std::vector<Poly> clear_rows(const RatMatrix& m, const RatMatrix* extra, PolyRows& out) {
  const std::size_t ec = extra ? extra->cols() : 0;
  out.assign(m.rows(), std::vector<Poly>(m.cols() + ec));
  std::vector<Poly> scale(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Poly l(1L);
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
    for (std::size_t j = 0; j < ec; ++j) l = lcm(l, (*extra)(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).num() * l.exact_div(m(i, j).den());
    for (std::size_t j = 0; j < ec; ++j) out[i][m.cols() + j] = (*extra)(i, j).num() * l.exact_div((*extra)(i, j).den());
    scale[i] = std::move(l);
  }
  return scale;
}

/// Fraction-free (Bareiss) row echelon reduction in place. Returns the pivot
/// columns; `swaps` counts row interchanges.
inline std::vector<std::size_t> bareiss_echelon(PolyRows& a, std::size_t ncols, int& swaps) {
  std::vector<std::size_t> pivots;
  const std::size_t nrows = a.size();
  Poly prev(1L);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c].is_zero()) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < a[i].size(); ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]).exact_div(prev);
      a[i][c] = Poly();
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Determinant by fraction-free elimination on the row-cleared polynomial matrix.
inline RatFunc det(const RatMatrix& m) {
  m.require_square("det");
  const std::size_t n = m.rows();
  if (n == 0) return RatFunc(1L);
  detail::PolyRows a;
  std::vector<Poly> scale = detail::clear_rows(m, nullptr, a);
  int swaps = 0;
  auto pivots = detail::bareiss_echelon(a, n, swaps);
  if (pivots.size() < n) return RatFunc();
  Poly d = a[n - 1][n - 1];
  if (swaps % 2 != 0) d = -d;
  Poly denom(1L);
  for (const auto& s : scale) denom *= s;
  return RatFunc(std::move(d), std::move(denom));
}

/// Rank over the field Q(z).
inline std::size_t rank(const RatMatrix& m) {
  detail::PolyRows a;
  detail::clear_rows(m, nullptr, a);
  int swaps = 0;
  return detail::bareiss_echelon(a, m.cols(), swaps).size();
}

/// Solves m * X = rhs exactly by fraction-free Gauss-Jordan elimination.
inline RatMatrix solve(const RatMatrix& m, const RatMatrix& rhs) {
  m.require_square("solve");
  if (rhs.rows() != m.rows()) throw DimensionError("right-hand side row count mismatch");
  const std::size_t n = m.rows();
  const std::size_t total = n + rhs.cols();
  detail::PolyRows a;
  detail::clear_rows(m, &rhs, a);
  Poly prev(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular over Q(z)");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < total; ++j) {
        if (j == k) continue;
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
      }
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  // Every diagonal entry now equals the final pivot.
  RatMatrix x(n, rhs.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) = RatFunc(a[i][n + j], prev);
  return x;
}

inline RatMatrix inverse(const RatMatrix& m) {
  m.require_square("inverse");
  return solve(m, RatMatrix::identity(m.rows()));
}

}  // namespace wronsk

#endif  // WRONSK_MATRIX_HPP
