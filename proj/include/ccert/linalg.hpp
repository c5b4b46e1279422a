#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ccert/rational.hpp"

namespace ccert {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
Vec zero_vec(std::size_t n);
bool is_zero(const Vec& a);
Rat norm_sq(const Vec& a);

// Matrix-vector product A x (rows of A dotted with x).
Vec mat_apply(const Mat& a, const Vec& x);

int rank(Mat a);
Rat determinant(Mat a);
std::optional<Mat> inverse(const Mat& a);

// Any exact solution of A x = b, or nullopt when inconsistent. A need not be
// square; with several solutions the free variables are set to zero, which
// makes the result deterministic.
std::optional<Vec> solve_linear(Mat a, Vec b);

// Deterministic basis (as rows) of {x : A x = 0}, via reduced row echelon
// form with first-nonzero pivoting.
Mat nullspace(Mat a);

}  // namespace ccert
