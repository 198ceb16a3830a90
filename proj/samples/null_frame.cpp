// Builds the three-vector null frame of G(1,2), prints the transition matrix
// and splits a bivector element into spectral idempotents.

#include <iostream>

#include "lpgg/lpgg.hpp"

using namespace lpgg;

int main() {
  auto frame = build_null_frame<Radical>(3, 1);
  std::cout << "T =\n";
  write_matrix_csv(std::cout, frame.T());

  for (int i = 0; i < frame.size(); ++i) std::cout << 'a' << i + 1 << " = " << to_text(frame[i]) << '\n';
  std::cout << "a1 a2 = " << to_text((frame[0] * frame[1])) << '\n';

  Matrix<Radical> g(3, 3);
  g(0, 1) = 1;
  g(1, 2) = 2;
  BivectorOperator<Radical> op(frame, g);
  auto sd = spectral_decompose(op);
  std::cout << "G = " << to_text(op.element()) << '\n'
            << "roots " << sd.r_minus.to_string() << ", " << sd.r_plus.to_string() << '\n'
            << "p1 = " << to_text(sd.p1) << '\n'
            << "p2 = " << to_text(sd.p2) << '\n';

  auto point = make_simplex_point(frame, {Radical(make_rational(1, 2)), Radical(make_rational(1, 4)),
                                          Radical(make_rational(1, 4))});
  std::cout << "|x|^2 at (1/2, 1/4, 1/4) = " << light_cone_square(frame, point).to_string() << '\n';
}
