#pragma once
// Small dense matrices of rational functions.
#include "loopalg/ratfun.hpp"

namespace loopalg {

using Mat = std::vector<std::vector<RatFun>>;

Mat mat_identity(int n, int nvars);
Mat mat_zero(int rows, int cols, int nvars);
Mat mat_mul(const Mat& a, const Mat& b);
bool mat_equal(const Mat& a, const Mat& b);
// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
Mat matrix_inverse(const Mat& m);

}  // namespace loopalg
