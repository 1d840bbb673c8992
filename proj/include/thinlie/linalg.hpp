#pragma once

#include <cstddef>
#include <vector>

#include "thinlie/ffield.hpp"

namespace thinlie {

/// Coordinate row vector over a field.
using Vec = std::vector<Fel>;

Vec zero_vec(const FieldPtr& f, std::size_t n);
bool vec_is_zero(const Vec& v);
void vec_add_scaled(Vec& dst, const Fel& c, const Vec& src);
Vec vec_scaled(const Vec& v, const Fel& c);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);

/// Dense matrix, row-major. Vectors are rows; application is v * M.
/// Carries its field so zero-dimensional shapes stay usable.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(const FieldPtr& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f->zero()) {}

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fel& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Fel& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);

  Mat mul(const Mat& o) const;
  Mat sub(const Mat& o) const;
  Mat scaled(const Fel& c) const;
  Mat add(const Mat& o) const;

 private:
  FieldPtr f_;
  std::size_t rows_, cols_;
  std::vector<Fel> a_;
};

/// v (1 x rows) * M -> (1 x cols).
Vec mat_apply(const Vec& v, const Mat& m);

/// In-place reduced row echelon form with lowest-column pivots; returns the
/// pivot column indices in increasing order. Zero rows are dropped.
std::vector<std::size_t> rref(std::vector<Vec>& rows, const FieldPtr& f);

/// Basis of { v : v * M = 0 }, rows of length M.rows(), from the RREF of the
/// transposed system; canonical and deterministic.
std::vector<Vec> left_kernel(const Mat& m, const FieldPtr& f);

std::size_t rank_of(std::vector<Vec> rows, const FieldPtr& f);

/// Inverse of a square invertible matrix; throws std::domain_error if singular.
Mat inverse(const Mat& m, const FieldPtr& f);

}  // namespace thinlie
