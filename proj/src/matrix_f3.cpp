#include "colouring/matrix_f3.hpp"

#include <stdexcept>

namespace colouring {

Matrix2F3 pair_choice(int lambda) {
  lambda = ((lambda % 3) + 3) % 3;
  const Matrix2F3 m = (lambda == 1) ? kM2 : kM1;
  const Matrix2F3 i = Matrix2F3::identity();
  const Matrix2F3 c = shear(lambda);
  if (!(m + i).invertible() || !(m - c).invertible() || !((m + i) - c).invertible())
    throw std::logic_error("pair_choice: postcondition violated");
  return m;
}

}  // namespace colouring
