#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "nga/rational.hpp"

namespace nga {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  RatMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;  // M v
  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

/// Row rank (= column rank) by exact elimination. Pivot choice is the first
/// nonzero entry in column order, so the result is deterministic.
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form. Optionally reports the pivot column indices.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

/// Basis of the right null space {v : Mv = 0}, one vector per free column in
/// ascending free-column order, each scaled so its first nonzero entry is 1.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Scales v so that its first nonzero entry is 1 (the canonical span
/// representative); zero vectors pass through unchanged.
void normalize_span(std::vector<Rational>& v);

/// One solution of Ax = b, or nullopt when inconsistent. Free variables are 0.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

namespace detail {

/// Fraction-free (Bareiss) rank over int64 with overflow detection.
/// Returns nullopt when an intermediate value would overflow; callers then
/// fall back to the rational path. Exact for every input it accepts.
std::optional<std::size_t> bareiss_rank_int64(std::vector<std::int64_t> data, std::size_t rows,
                                              std::size_t cols);

/// Rank of a RatMatrix via the int64 fast path when all entries are small
/// integers, otherwise via rational elimination.
std::size_t rank_dispatch(const RatMatrix& m);

}  // namespace detail

}  // namespace nga
