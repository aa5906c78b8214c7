#pragma once

#include <array>

namespace colouring {

/// 2x2 matrix over the 3-element field, row-major, acting on column vectors.
struct Matrix2F3 {
  int e[2][2] = {{0, 0}, {0, 0}};

  static constexpr Matrix2F3 identity() { return {{{1, 0}, {0, 1}}}; }

  friend Matrix2F3 operator*(const Matrix2F3& a, const Matrix2F3& b) {
    Matrix2F3 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.e[i][j] = (a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j]) % 3;
    return r;
  }
  friend Matrix2F3 operator+(const Matrix2F3& a, const Matrix2F3& b) {
    Matrix2F3 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e[i][j] = (a.e[i][j] + b.e[i][j]) % 3;
    return r;
  }
  friend Matrix2F3 operator-(const Matrix2F3& a, const Matrix2F3& b) {
    Matrix2F3 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e[i][j] = (a.e[i][j] - b.e[i][j] + 3) % 3;
    return r;
  }

  int det() const { return ((e[0][0] * e[1][1] - e[0][1] * e[1][0]) % 3 + 3) % 3; }
  bool invertible() const { return det() != 0; }

  std::array<int, 2> apply(int x, int y) const {
    return {(e[0][0] * x + e[0][1] * y) % 3, (e[1][0] * x + e[1][1] * y) % 3};
  }
};

inline constexpr Matrix2F3 kM1{{{0, 1}, {1, 1}}};
inline constexpr Matrix2F3 kM2{{{0, 2}, {1, 2}}};

/// C(lambda) = [[1, lambda], [0, 1]], the matrix of conjugation fixing the
/// central basis vector.
inline Matrix2F3 shear(int lambda) {
  lambda = ((lambda % 3) + 3) % 3;
  return {{{1, lambda}, {0, 1}}};
}

/// M1 for lambda in {0,2}, M2 for lambda = 1; the returned M satisfies
/// det(M+I), det(M-C(lambda)), det(M+I-C(lambda)) all nonzero mod 3.
Matrix2F3 pair_choice(int lambda);

}  // namespace colouring
