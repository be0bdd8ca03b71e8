// Builds a three-dimensional bracket with [e1,e2,e3] = e1, equips it with the
// zero weight -1 operator, and prints the quotient dimensions of all three
// complexes over the regular module.
#include <iostream>

#include "rb3lie/rb3lie.hpp"

using namespace rb3lie;

int main() {
  ThreeLieAlgebra g = ThreeLieAlgebra::abelian(3);
  g.table[triple_rank(0, 1, 2, 3)] = unit_vec(3, 0);
  VerifyResult fi = verify_fundamental_identity(g);
  if (!fi.ok) {
    std::cerr << "bracket rejected\n";
    return 1;
  }
  g.verified = true;

  RotaBaxterStructure R;
  R.algebra = g;
  R.T = Matrix::zero(3, 3);
  R.weight = Rational(-1);
  if (!verify_rota_baxter(R).ok) {
    std::cerr << "operator rejected\n";
    return 1;
  }
  R.verified = true;

  RBRepresentation P = regular_representation(R);
  for (ComplexKind kind : {ComplexKind::ThreeLie, ComplexKind::Operator, ComplexKind::Combined}) {
    std::cout << complex_kind_name(kind) << ":";
    for (int n = 0; n <= 3; ++n) std::cout << " H^" << n << "=" << betti(P, kind, n).betti;
    std::cout << "\n";
  }
  return 0;
}
