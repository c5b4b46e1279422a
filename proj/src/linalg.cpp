#include "ccert/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace ccert {

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rat& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

bool is_zero(const Vec& a) {
  for (const Rat& v : a)
    if (v != 0) return false;
  return true;
}

Rat norm_sq(const Vec& a) { return dot(a, a); }

Vec mat_apply(const Mat& a, const Vec& x) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

namespace {

// Forward elimination to row echelon form; returns pivot columns. Operates
// on the augmented matrix when `aug` is nonnull (one extra column).
std::vector<int> echelon(Mat& a, Vec* aug) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    if (aug) std::swap((*aug)[p], (*aug)[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (aug) (*aug)[i] -= f * (*aug)[r];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(echelon(a, nullptr).size()); }

Rat determinant(Mat a) {
  if (a.empty()) return 1;
  std::size_t n = a.size();
  if (a[0].size() != n) throw std::invalid_argument("determinant of non-square matrix");
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& a) {
  std::size_t n = a.size();
  Mat work = a;
  Mat inv(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && work[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(work[p], work[c]);
    std::swap(inv[p], inv[c]);
    Rat d = work[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      work[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || work[i][c] == 0) continue;
      Rat f = work[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        work[i][j] -= f * work[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  if (a.empty()) return Vec{};
  std::size_t cols = a[0].size();
  std::vector<int> pivots = echelon(a, &b);
  // Inconsistent when a zero row has nonzero right-hand side.
  for (std::size_t i = pivots.size(); i < a.size(); ++i)
    if (b[i] != 0) return std::nullopt;
  Vec x = zero_vec(cols);
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int c = pivots[r];
    Rat s = b[r];
    for (std::size_t j = c + 1; j < cols; ++j) s -= a[r][j] * x[j];
    x[c] = s / a[r][c];
  }
  return x;
}

Mat nullspace(Mat a) {
  if (a.empty()) return Mat{};
  std::size_t cols = a[0].size();
  std::vector<int> pivots = echelon(a, nullptr);
  // Back-substitute to reduced form.
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int c = pivots[r];
    Rat d = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] /= d;
    for (int i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ccert
