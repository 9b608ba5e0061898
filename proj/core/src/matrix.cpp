#include "nga/matrix.hpp"

#include <limits>

#include "nga/errors.hpp"

namespace nga {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix initializer");
    for (long long v : row) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& v = at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
    }
  return out;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0) out[r] += at(r, c) * v[c];
  return out;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    const Rational inv = 1 / a.at(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return a;
}

std::size_t rank(const RatMatrix& m) { return detail::rank_dispatch(m); }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    // canonical span representative: first nonzero entry scaled to 1
    for (const Rational& entry : v) {
      if (entry != 0) {
        if (entry != 1) {
          const Rational inv = 1 / entry;
          for (Rational& x : v) x *= inv;
        }
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

void normalize_span(std::vector<Rational>& v) {
  for (const Rational& x : v) {
    if (x == 0) continue;
    if (x != 1) {
      const Rational inv = 1 / x;
      for (Rational& y : v) y *= inv;
    }
    return;
  }
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw InputError("solve: rhs dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  const RatMatrix red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, a.cols());
  return x;
}

namespace detail {

std::optional<std::size_t> bareiss_rank_int64(std::vector<std::int64_t> a, std::size_t rows,
                                              std::size_t cols) {
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max();
  const auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  std::int64_t prev_pivot = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(sel, c), at(pivot_row, c));
    const std::int64_t pivot = at(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      const std::int64_t factor = at(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        const __int128 num =
            static_cast<__int128>(pivot) * at(r, c) - static_cast<__int128>(factor) * at(pivot_row, c);
        const __int128 val = num / prev_pivot;  // Bareiss: division is exact
        if (val > kLimit || val < -kLimit) return std::nullopt;
        at(r, c) = static_cast<std::int64_t>(val);
      }
    }
    prev_pivot = pivot;
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank_dispatch(const RatMatrix& m) {
  constexpr long long kSmall = 1'000'000;
  std::vector<std::int64_t> ints;
  ints.reserve(m.rows() * m.cols());
  bool small = true;
  for (std::size_t r = 0; small && r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& v = m.at(r, c);
      if (denominator(v) != 1 || numerator(v) > kSmall || numerator(v) < -kSmall) {
        small = false;
        break;
      }
      ints.push_back(static_cast<std::int64_t>(numerator(v)));
    }
  if (small)
    if (auto r = bareiss_rank_int64(std::move(ints), m.rows(), m.cols())) return *r;
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

}  // namespace detail

}  // namespace nga
