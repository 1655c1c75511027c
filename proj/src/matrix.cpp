#include "loopalg/matrix.hpp"

namespace loopalg {

Mat mat_identity(int n, int nvars) {
  Mat m(n, std::vector<RatFun>(n, RatFun(nvars)));
  for (int i = 0; i < n; ++i) m[i][i] = RatFun(nvars, Rational(1));
  return m;
}

Mat mat_zero(int rows, int cols, int nvars) {
  return Mat(rows, std::vector<RatFun>(cols, RatFun(nvars)));
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  Mat m = mat_zero(r, c, a[0][0].nvars());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      for (int s = 0; s < k; ++s) m[i][j] = m[i][j] + a[i][s] * b[s][j];
  return m;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!ratfun_equal(a[i][j], b[i][j])) return false;
  }
  return true;
}

Mat matrix_inverse(const Mat& m) {
  int n = (int)m.size();
  int nv = m[0][0].nvars();
  Mat a = m;
  Mat inv = mat_identity(n, nv);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RatFun p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / p;
      inv[col][j] = inv[col][j] / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RatFun f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[col][j];
        inv[r][j] = inv[r][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace loopalg
