#include "thinlie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace thinlie {

Vec zero_vec(const FieldPtr& f, std::size_t n) { return Vec(n, f->zero()); }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Fel& c) { return c.is_zero(); });
}

void vec_add_scaled(Vec& dst, const Fel& c, const Vec& src) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i].addmul(c, src[i]);
}

Vec vec_scaled(const Vec& v, const Fel& c) {
  Vec r(v.size(), c);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec Mat::row(std::size_t r) const {
  return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void Mat::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat r(f_ ? f_ : o.f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fel& c = at(i, k);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j).addmul(c, o.at(k, j));
    }
  return r;
}

Mat Mat::sub(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::add(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::scaled(const Fel& c) const {
  Mat r = *this;
  for (auto& e : r.a_) e = e * c;
  return r;
}

Vec mat_apply(const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
  const FieldPtr& f = m.field() ? m.field() : (v.empty() ? nullptr : v[0].field());
  if (!f) return {};
  Vec r = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) vec_add_scaled(r, v[i], m.row(i));
  return r;
}

std::vector<std::size_t> rref(std::vector<Vec>& rows, const FieldPtr& f) {
  (void)f;
  rows.erase(std::remove_if(rows.begin(), rows.end(), vec_is_zero), rows.end());
  if (rows.empty()) return {};
  const std::size_t cols = rows[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Fel inv = rows[r][c].inv();
    for (auto& e : rows[r]) e = e * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Fel m = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j].submul(m, rows[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> left_kernel(const Mat& m, const FieldPtr& f) {
  const std::size_t n = m.rows();
  // Solve v*M = 0: RREF the transpose's columns... equivalently run RREF on
  // the system matrix M^T and read free variables.
  std::vector<Vec> rows;
  rows.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec row = zero_vec(f, n);
    for (std::size_t r = 0; r < n; ++r) row[r] = m.at(r, c);
    rows.push_back(std::move(row));
  }
  auto pivots = rref(rows, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(f, n);
    v[c] = f->one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_of(std::vector<Vec> rows, const FieldPtr& f) {
  return rref(rows, f).size();
}

Mat inverse(const Mat& m, const FieldPtr& f) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec> aug;
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = zero_vec(f, 2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = m.at(i, j);
    row[n + i] = f->one();
    aug.push_back(std::move(row));
  }
  auto pivots = rref(aug, f);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::domain_error("matrix is singular");
  Mat r(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug[i][n + j];
  return r;
}

}  // namespace thinlie
