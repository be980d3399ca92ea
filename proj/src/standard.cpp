#include "rbfam/standard.hpp"

namespace rbfam::standard {

HomAlgebra line_R() {
  HomAlgebra a = HomAlgebra::zero("R", {"e1"}, FiniteSemigroup::two_element(), Scalar::lambda());
  a.mu.at(0, 0, 0) = 1;
  a.theta = Matrix::identity(1);
  return a;
}

HomAlgebra line_B() {
  HomAlgebra a = HomAlgebra::zero("B", {"e2"}, FiniteSemigroup::two_element(), Scalar::lambda());
  a.mu.at(0, 0, 0) = 1;
  a.theta = Matrix::identity(1);
  for (auto& p : a.P) p(0, 0) = -Scalar::lambda();
  return a;
}

HomAlgebra plane_E() {
  Scalar lam = Scalar::lambda();
  HomAlgebra a = HomAlgebra::zero("E", {"e1", "e2"}, FiniteSemigroup::two_element(), lam);
  a.mu.set_on_basis(0, 0, {1, 0});
  a.mu.set_on_basis(1, 0, {3, 0});
  a.mu.set_on_basis(0, 1, {-3, 2});
  a.mu.set_on_basis(1, 1, {-9, 6});
  for (auto& p : a.P) p.set_column(1, {3 * lam, -lam});
  a.theta(0, 0) = 1;
  a.theta.set_column(1, {-3, 2});
  return a;
}

}  // namespace rbfam::standard
